#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;
use vfilt_cli::{run_to_strings, Format, Options};

pub struct Case {
    pub name: String,
    pub path: PathBuf,
    pub source: String,
}

impl Case {
    pub fn golden_path(&self) -> PathBuf {
        self.path.with_extension("golden")
    }
}

pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus")
}

/// Sessions under `corpus/<group>`, sorted by file name.
pub fn cases(group: &str) -> Vec<Case> {
    let mut out: Vec<Case> = fs::read_dir(corpus_dir().join(group))
        .expect("corpus directory")
        .map(|e| e.expect("dir entry").path())
        .filter(|p| p.extension().is_some_and(|e| e == "vf"))
        .map(|path| Case {
            name: path.file_stem().unwrap().to_string_lossy().into_owned(),
            source: fs::read_to_string(&path).expect("readable session"),
            path,
        })
        .collect();
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

pub struct Transcript {
    pub text_out: String,
    pub text_err: String,
    pub json_out: String,
    pub exit: i32,
}

impl Transcript {
    /// The golden-file form: exit status, then both output modes.
    pub fn document(&self) -> String {
        format!(
            "exit: {}\n--- text stdout\n{}--- text stderr\n{}--- json\n{}",
            self.exit, self.text_out, self.text_err, self.json_out
        )
    }
}

pub fn transcript(source: &str) -> Transcript {
    let text = Options { format: Format::Text, deg_cap: 6 };
    let json = Options { format: Format::Json, deg_cap: 6 };
    let (text_out, text_err, s1) = run_to_strings(source, &text);
    let (json_out, _, s2) = run_to_strings(source, &json);
    assert_eq!(s1, s2, "exit status depends on the output format");
    Transcript { text_out, text_err, json_out, exit: s1.code() }
}

/// Compares against the golden file; `VFILT_UPDATE_GOLDEN=1` rewrites it.
pub fn check_golden(case: &Case, t: &Transcript) -> Result<(), String> {
    let doc = t.document();
    let path = case.golden_path();
    if std::env::var_os("VFILT_UPDATE_GOLDEN").is_some() {
        fs::write(&path, &doc).expect("write golden");
        return Ok(());
    }
    let expected = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected == doc {
        Ok(())
    } else {
        Err(format!("{} differs from its golden file:\n{doc}", case.name))
    }
}

pub fn schema_validator() -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/output.schema.json");
    let schema: Value = serde_json::from_str(&fs::read_to_string(path).expect("schema file")).expect("schema is JSON");
    jsonschema::validator_for(&schema).expect("schema compiles")
}

/// Every line must be a JSON object accepted by the schema.
pub fn validate_lines(v: &jsonschema::Validator, out: &str) -> Result<usize, String> {
    let mut n = 0;
    for line in out.lines() {
        let value: Value = serde_json::from_str(line).map_err(|e| format!("not JSON ({e}): {line}"))?;
        if let Some(err) = v.iter_errors(&value).next() {
            return Err(format!("schema violation at {}: {err}\n{line}", err.instance_path));
        }
        n += 1;
    }
    Ok(n)
}
