//! Command execution and the text / JSON Lines emitters.

use std::io::{self, Write};

use serde_json::{json, Map, Value};
use vfilt_core::filtration::filtration_member;
use vfilt_core::random::{InstanceGenerator, Shape};
use vfilt_core::{
    associated_primes, check_filtration_property, irreducible_decomposition, minimal_primes, normally_torsion_free,
    v_number, verify_expansion, verify_theorem, AlgebraError, FiltrationKind, MonomialIdeal, PrimeSupport,
};

use crate::render;
use crate::session::{ColonBy, Command, Op, Session};
use crate::syntax::ParseError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub format: Format,
    /// Default degree cap for `check-property` without `cap=`.
    pub deg_cap: u32,
}

impl Default for Options {
    fn default() -> Self {
        Options { format: Format::Text, deg_cap: 6 }
    }
}

/// Exit statuses, ordered by severity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Success = 0,
    Inequality = 1,
    Usage = 2,
    Internal = 3,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// Algebra errors caused by the input map to usage errors; a failed
/// certification means the library itself is wrong.
pub fn status_of(e: &AlgebraError) -> Status {
    match e {
        AlgebraError::CertificationFailed(_) => Status::Internal,
        _ => Status::Usage,
    }
}

fn error_code(s: Status) -> &'static str {
    match s {
        Status::Internal => "internal",
        _ => "usage",
    }
}

fn prime_list(ps: &[PrimeSupport]) -> String {
    let parts: Vec<String> = ps.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "fails"
    }
}

fn equality(ok: bool) -> &'static str {
    if ok {
        "equal"
    } else {
        "NOT equal"
    }
}

/// The outcome of one command before emission.
struct Output {
    body: Value,
    is_report: bool,
    text: String,
    ok: bool,
}

impl Output {
    fn result(body: Value, text: String) -> Self {
        Output { body, is_report: false, text, ok: true }
    }

    fn report(body: Value, text: String, ok: bool) -> Self {
        Output { body, is_report: true, text, ok }
    }
}

fn execute(session: &Session, op: &Op, opts: &Options) -> Result<Output, AlgebraError> {
    let get = |name: &str| session.ideal(name).expect("resolved at parse time");
    Ok(match op {
        Op::MinGens { ideal } => {
            let l = get(ideal);
            Output::result(render::ideal(l), format!("G({ideal}) = {l}"))
        }
        Op::Colon { ideal, by } => {
            let l = get(ideal);
            let (c, label) = match by {
                ColonBy::Monomial(f) => (l.colon_monomial(f)?, f.to_string()),
                ColonBy::Ideal(other) => (l.colon_ideal(get(other))?, other.clone()),
            };
            Output::result(render::ideal(&c), format!("{ideal} : {label} = {c}"))
        }
        Op::Ass { ideal } => {
            let ps = associated_primes(get(ideal))?;
            Output::result(render::primes(&ps), format!("Ass({ideal}) = {}", prime_list(&ps)))
        }
        Op::Min { ideal } => {
            let ps = minimal_primes(get(ideal))?;
            Output::result(render::primes(&ps), format!("Min({ideal}) = {}", prime_list(&ps)))
        }
        Op::IrrDec { ideal } => {
            let qs = irreducible_decomposition(get(ideal))?;
            let parts: Vec<String> = qs.iter().map(ToString::to_string).collect();
            Output::result(
                Value::Array(qs.iter().map(render::component).collect()),
                format!("{ideal} = {}", parts.join(" ∩ ")),
            )
        }
        Op::Vnum { ideal } => {
            let r = v_number(get(ideal))?;
            let text = format!("v({ideal}) = {}, prime = {}, witness = {}", r.degree, r.prime, r.witness);
            Output::result(render::vreport(&r), text)
        }
        Op::Power { ideal, k } => {
            let p = get(ideal).power(*k)?;
            Output::result(render::ideal(&p), format!("{ideal}^{k} = {p}"))
        }
        Op::Symb { ideal, kind, k } => {
            let m = filtration_member(*kind, get(ideal), *k)?;
            Output::result(render::ideal(&m), format!("{ideal}^({k}) [{kind}] = {m}"))
        }
        Op::IntClos { ideal, k } => {
            let m = filtration_member(FiltrationKind::IntegralClosure, get(ideal), *k)?;
            let arg = if *k == 1 { ideal.clone() } else { format!("{ideal}^{k}") };
            Output::result(render::ideal(&m), format!("intclos({arg}) = {m}"))
        }
        Op::VerifyExpansion { kind, k, i, j } => {
            let r = verify_expansion(*kind, get(i), get(j), *k)?;
            let mut text = format!("expansion {kind} k={k} {i} {j}: {}", verdict(r.holds));
            text += &format!("\n  direct   = {}\n  expanded = {}", r.direct, r.expanded);
            if !r.holds {
                let w: Vec<String> = r.mismatch_witnesses.iter().map(ToString::to_string).collect();
                text += &format!("\n  mismatches: {}", w.join(", "));
            }
            Output::report(render::expansion(&r), text, r.holds)
        }
        Op::VerifyTheorem { kind, k, i, j } => {
            let r = verify_theorem(*kind, get(i), get(j), *k)?;
            let mut text = format!("theorem {kind} k={k} {i} {j}: {}", verdict(r.holds()));
            text += &format!("\n  expansion: {}", verdict(r.hypothesis_met()));
            for row in &r.rows {
                let rhs = match &row.rhs {
                    Some(v) => {
                        let ds: Vec<String> = v.achieving.iter().map(ToString::to_string).collect();
                        format!("{} at d = {}", v.degree, ds.join(", "))
                    }
                    None => "none".to_string(),
                };
                text += &format!(
                    "\n  prime {} + {}: lhs {} (witness {}), rhs {rhs}: {}, colon identity {}",
                    row.p,
                    row.q,
                    row.lhs.degree,
                    row.lhs.witness,
                    equality(row.equal),
                    if row.colon_identity { "ok" } else { "FAILS" },
                );
            }
            let g = &r.global;
            let rhs = g.formula.map_or("none".to_string(), |v| v.to_string());
            text += &format!("\n  global: lhs {}, rhs {rhs}: {}", g.direct.degree, equality(g.equal));
            for (p, v) in &r.non_mixed_primes {
                text += &format!("\n  non-mixed prime {p}: v = {v}");
            }
            for p in &r.missing_mixed_primes {
                text += &format!("\n  predicted prime {p} is not associated");
            }
            Output::report(render::theorem(&r), text, r.holds())
        }
        Op::CheckProperty { kind, k, cap, ideal } => {
            let cap = cap.unwrap_or(opts.deg_cap);
            let r = check_filtration_property(*kind, get(ideal), *k, cap)?;
            let mut text = format!(
                "property {kind} k={k} {ideal} (degree <= {cap}): {}, {} witnesses",
                verdict(r.passed()),
                r.witnesses.len()
            );
            for (f, p) in &r.violations {
                text += &format!("\n  violation: {ideal}_{k} : {f} = {p} but {f} is not in {ideal}_{}", k - 1);
            }
            Output::report(render::property(&r), text, r.passed())
        }
        Op::Ntf { k, ideal } => {
            let r = normally_torsion_free(get(ideal), *k)?;
            let text = match &r.failure {
                None => format!("ntf({ideal}) up to k={k}: holds"),
                Some((j, p)) => format!("ntf({ideal}) up to k={k}: fails, {p} is associated to {ideal}^{j}"),
            };
            // a torsion-free failure is a property of the input, not a
            // verification inequality
            Output::report(render::ntf(&r), text, true)
        }
    })
}

fn inputs(session: &Session, op: &Op) -> Value {
    let mut ideals = Map::new();
    let mut rings = Map::new();
    for name in op.ideals() {
        let l = session.ideal(name).expect("resolved at parse time");
        ideals.insert(name.to_string(), render::ideal(l));
        rings.insert(l.ring().name().to_string(), render::ring(l.ring()));
    }
    let mut out = Map::new();
    out.insert("ideals".into(), Value::Object(ideals));
    out.insert("rings".into(), Value::Object(rings));
    match op {
        Op::Colon { by: ColonBy::Monomial(f), .. } => {
            out.insert("monomial".into(), render::mono(f));
        }
        Op::CheckProperty { cap, .. } => {
            out.insert("cap".into(), json!(cap));
        }
        _ => {}
    }
    Value::Object(out)
}

pub fn parse_error_json(e: &ParseError) -> Value {
    json!({
        "command": Value::Null,
        "error": { "code": "parse", "message": e.message, "line": e.pos.line, "column": e.pos.column },
    })
}

/// Runs every command in order, writing results to `out` and, in text mode,
/// errors to `err`. Returns the most severe status seen.
pub fn run(session: &Session, opts: &Options, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<Status> {
    let mut status = Status::Success;
    for Command { op, pos } in &session.commands {
        match execute(session, op, opts) {
            Ok(o) => {
                if !o.ok {
                    status = status.max(Status::Inequality);
                }
                match opts.format {
                    Format::Text => writeln!(out, "{}", o.text)?,
                    Format::Json => {
                        let key = if o.is_report { "report" } else { "result" };
                        let mut rec = json!({
                            "command": op.name(),
                            "inputs": inputs(session, op),
                            "kind": op.kind().map(|k| k.as_str()),
                            "k": op.k(),
                        });
                        rec[key] = o.body;
                        writeln!(out, "{rec}")?;
                    }
                }
            }
            Err(e) => {
                let s = status_of(&e);
                status = status.max(s);
                match opts.format {
                    Format::Text => writeln!(err, "error: {pos}: {}: {e}", op.name())?,
                    Format::Json => {
                        let rec = json!({
                            "command": op.name(),
                            "error": { "code": error_code(s), "message": e.to_string(), "line": pos.line, "column": pos.column },
                        });
                        writeln!(out, "{rec}")?;
                    }
                }
            }
        }
    }
    Ok(status)
}

/// Tallies for one filtration kind in a fuzz sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FuzzTally {
    pub instances: usize,
    pub holds: usize,
    /// Integral-closure instances where the expansion itself fails; these are
    /// outside the formula's hypothesis and are not failures.
    pub hypothesis_unmet: usize,
    /// `(I, J, k)` instances where a comparison disagreed.
    pub failures: Vec<(MonomialIdeal, MonomialIdeal, u32)>,
}

/// Runs `verify-theorem` for every kind on `n` seeded random instances.
pub fn fuzz(seed: u64, n: usize) -> Result<Vec<(FiltrationKind, FuzzTally)>, AlgebraError> {
    let shape = Shape { max_vars: 3, max_gens: 4, max_exp: 2 };
    let mut gen = InstanceGenerator::new(seed);
    let mut tallies: Vec<(FiltrationKind, FuzzTally)> = FiltrationKind::ALL.iter().map(|&k| (k, FuzzTally::default())).collect();
    for _ in 0..n {
        let i = gen.ring_and_ideal("A", "x", shape);
        let j = gen.ring_and_ideal("B", "y", shape);
        let k = rand::Rng::gen_range(gen.rng(), 1..=3);
        for (kind, t) in tallies.iter_mut() {
            let r = verify_theorem(*kind, &i, &j, k)?;
            t.instances += 1;
            if r.holds() {
                t.holds += 1;
            } else if *kind == FiltrationKind::IntegralClosure && !r.hypothesis_met() {
                t.hypothesis_unmet += 1;
            } else {
                t.failures.push((i.clone(), j.clone(), k));
            }
        }
    }
    Ok(tallies)
}

pub fn emit_fuzz(
    seed: u64,
    n: usize,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<Status> {
    let tallies = match fuzz(seed, n) {
        Ok(t) => t,
        Err(e) => {
            let s = status_of(&e);
            match format {
                Format::Text => writeln!(err, "error: fuzz: {e}")?,
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({ "command": "fuzz", "error": { "code": error_code(s), "message": e.to_string() } })
                )?,
            }
            return Ok(s);
        }
    };
    let ok = tallies.iter().all(|(_, t)| t.failures.is_empty());
    match format {
        Format::Text => {
            writeln!(out, "fuzz seed={seed} n={n}: {}", verdict(ok))?;
            for (kind, t) in &tallies {
                write!(out, "  {kind}: {}/{} hold", t.holds, t.instances)?;
                if t.hypothesis_unmet > 0 {
                    write!(out, ", {} outside the expansion hypothesis", t.hypothesis_unmet)?;
                }
                writeln!(out)?;
                for (i, j, k) in &t.failures {
                    writeln!(out, "    failure: I = {i}, J = {j}, k = {k}")?;
                }
            }
        }
        Format::Json => {
            let kinds: Vec<Value> = tallies
                .iter()
                .map(|(kind, t)| {
                    json!({
                        "kind": kind.as_str(),
                        "instances": t.instances,
                        "holds": t.holds,
                        "hypothesis_unmet": t.hypothesis_unmet,
                        "failures": t.failures.iter().map(|(i, j, k)| json!({
                            "i": render::ideal(i), "j": render::ideal(j), "k": k,
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let rec = json!({
                "command": "fuzz",
                "inputs": { "seed": seed, "n": n },
                "kind": Value::Null,
                "k": Value::Null,
                "report": { "holds": ok, "kinds": kinds },
            });
            writeln!(out, "{rec}")?;
        }
    }
    Ok(if ok { Status::Success } else { Status::Inequality })
}
