//! Session language, command runner and emitters behind the `vfilt` binary.
//!
//! A session declares rings and ideals and then lists commands:
//!
//! ```text
//! ring A = [x, y];
//! ideal I in A = (x^2, x*y);
//! vnum I;
//! ```
//!
//! [`run_source`] parses and executes a session in one step.

pub mod exec;
pub mod render;
pub mod session;
pub mod syntax;

use std::io::{self, Write};

pub use exec::{Format, Options, Status};
pub use session::{parse_session, Session};
pub use syntax::{ParseError, Pos};

/// Parses `text` and runs it; parse errors are reported like command errors
/// and give [`Status::Usage`].
pub fn run_source(text: &str, opts: &Options, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<Status> {
    match parse_session(text) {
        Ok(s) => exec::run(&s, opts, out, err),
        Err(e) => {
            match opts.format {
                Format::Text => writeln!(err, "error: {e}")?,
                Format::Json => writeln!(out, "{}", exec::parse_error_json(&e))?,
            }
            Ok(Status::Usage)
        }
    }
}

/// [`run_source`] into strings, for tests and embedding.
pub fn run_to_strings(text: &str, opts: &Options) -> (String, String, Status) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let status = run_source(text, opts, &mut out, &mut err).expect("writing to memory cannot fail");
    (String::from_utf8(out).expect("utf-8"), String::from_utf8(err).expect("utf-8"), status)
}
