//! Command-line front end: input parsers, the fixture table, and the
//! subcommands behind the `jones` binary.

mod args;
mod fixtures;
mod parse;
mod suites;

use std::fmt::Write;
use std::path::PathBuf;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::braid::BraidWord;
use crate::diagram::{kauffman_bracket_with_limit, seifert_circles, DiagramError, PDCode};
use crate::jones::{jones_via_bracket_with_limit, jones_via_trace, JonesError, JonesResult, Strategy};
use crate::laurent::{LaurentError, LaurentPoly};
use crate::tl::{jones_wenzl, tl_basis, TlError};

pub use args::{Cli, CliCommand, InputArgs};
pub use fixtures::{Fixture, FixtureTable};
pub use parse::{parse_braid, parse_pd, serialize_braid, serialize_pd, ParseError};
pub use suites::SuiteReport;

use suites::run_suite;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Skein,
    Markov,
    Cross,
    Mult,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Skein => "skein",
            Suite::Markov => "markov",
            Suite::Cross => "cross",
            Suite::Mult => "mult",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputSource {
    Braid(String),
    PdFile(PathBuf),
    Fixture(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Action {
    Bracket,
    Jones,
    Seifert,
    TlDim(usize),
    Jw(usize),
    Verify(Suite),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Command {
    pub action: Action,
    /// Every source given on the command line. Exactly one is accepted for
    /// diagram commands, at most one for `verify`, none otherwise.
    pub inputs: Vec<InputSource>,
    /// `--strands`, only meaningful with a braid source.
    pub strands: Option<usize>,
    pub format: Format,
    pub crossing_limit: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    VerificationFailed,
    InputError,
    Internal,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Success => 0,
            Status::VerificationFailed => 1,
            Status::InputError => 2,
            Status::Internal => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub status: Status,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
pub(crate) struct Failure {
    status: Status,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self { status: Status::InputError, message: message.into() }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<DiagramError> for Failure {
    fn from(e: DiagramError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<TlError> for Failure {
    fn from(e: TlError) -> Self {
        match e {
            TlError::Laurent(l) => l.into(),
            other => Failure::input(other.to_string()),
        }
    }
}

impl From<LaurentError> for Failure {
    fn from(e: LaurentError) -> Self {
        Failure { status: Status::Internal, message: e.to_string() }
    }
}

impl From<JonesError> for Failure {
    fn from(e: JonesError) -> Self {
        match e {
            JonesError::Diagram(d) => d.into(),
            JonesError::Laurent(l) => l.into(),
            other => Failure { status: Status::Internal, message: other.to_string() },
        }
    }
}

/// A diagram read from one input source.
#[derive(Debug, Clone)]
pub(crate) enum Loaded {
    Braid(BraidWord),
    Pd(PDCode),
}

impl Loaded {
    fn pd(&self) -> PDCode {
        match self {
            Loaded::Braid(b) => b.closure_pd(),
            Loaded::Pd(pd) => pd.clone(),
        }
    }
}

fn load(source: &InputSource, strands: Option<usize>) -> Result<(Loaded, String), Failure> {
    if strands.is_some() && !matches!(source, InputSource::Braid(_)) {
        return Err(Failure::input("--strands only applies to --braid"));
    }
    match source {
        InputSource::Braid(text) => {
            let b = parse_braid(text, strands)?;
            Ok((Loaded::Braid(b), text.trim().to_string()))
        }
        InputSource::PdFile(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
            Ok((Loaded::Pd(parse_pd(&text)?), path.display().to_string()))
        }
        InputSource::Fixture(name) => {
            let table = FixtureTable::default();
            let f = table.get(name).ok_or_else(|| {
                Failure::input(format!(
                    "unknown fixture {name:?}; known: {}",
                    table.names().join(", ")
                ))
            })?;
            Ok((Loaded::Braid(f.braid()), name.clone()))
        }
    }
}

fn json_terms(p: &LaurentPoly) -> Value {
    // descending exponent, integers where they fit
    Value::Array(
        p.terms()
            .rev()
            .map(|(e, c)| {
                let c = match c.to_i64() {
                    Some(v) => Value::from(v),
                    None => Value::from(c.to_string()),
                };
                json!([e, c])
            })
            .collect(),
    )
}

fn catalan(n: usize) -> BigUint {
    num_integer::binomial(BigUint::from(2 * n), BigUint::from(n)) / BigUint::from(n + 1)
}

fn polynomial_output(
    label: &str,
    strategy: Strategy,
    poly: &LaurentPoly,
    writhe: i64,
    format: Format,
    text: String,
) -> String {
    match format {
        Format::Text => text,
        Format::Json => {
            let v = json!({
                "input": label,
                "strategy": strategy.to_string(),
                "polynomial": json_terms(poly),
                "writhe": writhe,
            });
            format!("{v}\n")
        }
    }
}

fn jones_of(loaded: &Loaded, limit: usize) -> Result<JonesResult, Failure> {
    Ok(match loaded {
        Loaded::Braid(b) => jones_via_trace(b)?,
        Loaded::Pd(pd) => jones_via_bracket_with_limit(pd, limit)?,
    })
}

fn execute(cmd: &Command) -> Result<(Status, String), Failure> {
    let takes_input = !matches!(cmd.action, Action::TlDim(_) | Action::Jw(_));
    let needs_input = takes_input && !matches!(cmd.action, Action::Verify(_));
    if cmd.inputs.len() > 1 {
        return Err(Failure::input("give exactly one of --braid, --pd, --fixture"));
    }
    if !takes_input && (!cmd.inputs.is_empty() || cmd.strands.is_some()) {
        return Err(Failure::input("this command takes no diagram input"));
    }
    if needs_input && cmd.inputs.is_empty() {
        return Err(Failure::input("one of --braid, --pd, --fixture is required"));
    }
    if cmd.inputs.is_empty() && cmd.strands.is_some() {
        return Err(Failure::input("--strands only applies to --braid"));
    }
    let loaded = match cmd.inputs.first() {
        Some(source) => Some(load(source, cmd.strands)?),
        None => None,
    };
    let limit = cmd.crossing_limit;
    let mut out = String::new();
    match (&cmd.action, loaded) {
        (Action::Bracket, Some((input, label))) => {
            let pd = input.pd();
            let bracket = kauffman_bracket_with_limit(&pd, limit)?;
            let text = format!("{bracket}\n");
            out = polynomial_output(&label, Strategy::Bracket, &bracket, pd.writhe(), cmd.format, text);
        }
        (Action::Jones, Some((input, label))) => {
            let v = jones_of(&input, limit)?;
            let text = format!("{}\nA-form: {}\n", v.display_t()?, v.poly_a);
            out = polynomial_output(&label, v.strategy, &v.poly_a, v.writhe, cmd.format, text);
        }
        (Action::Seifert, Some((input, label))) => {
            let pd = input.pd();
            let (circles, writhe) = (seifert_circles(&pd), pd.writhe());
            match cmd.format {
                Format::Text => writeln!(out, "{circles} seifert circles, writhe {writhe}").unwrap(),
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({"input": label, "seifert_circles": circles, "writhe": writhe})
                )
                .unwrap(),
            }
        }
        (Action::TlDim(n), _) => {
            let dim = tl_basis(*n)?.len();
            let cat = catalan(*n);
            match cmd.format {
                Format::Text => writeln!(out, "{dim} (catalan {cat})").unwrap(),
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({"n": n, "dimension": dim, "catalan": cat.to_string()})
                )
                .unwrap(),
            }
            if BigUint::from(dim) != cat {
                return Ok((Status::VerificationFailed, out));
            }
        }
        (Action::Jw(n), _) => {
            let f = jones_wenzl(*n as i64)?;
            let tr = f.trace();
            match cmd.format {
                Format::Text => writeln!(out, "f({n}): {} terms, trace {tr}", f.len()).unwrap(),
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({"n": n, "terms": f.len(), "trace": tr.to_string()})
                )
                .unwrap(),
            }
        }
        (Action::Verify(suite), loaded) => {
            let report = run_suite(*suite, loaded.as_ref().map(|(l, _)| l), limit)?;
            match cmd.format {
                Format::Text => {
                    writeln!(out, "{}: {} passed, {} failed", suite.name(), report.passed, report.failed)
                        .unwrap();
                    for f in &report.failures {
                        writeln!(out, "  FAIL {f}").unwrap();
                    }
                }
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({
                        "suite": suite.name(),
                        "passed": report.passed,
                        "failed": report.failed,
                        "failures": report.failures,
                    })
                )
                .unwrap(),
            }
            if report.failed > 0 {
                return Ok((Status::VerificationFailed, out));
            }
        }
        (_, None) => unreachable!("input presence checked above"),
    }
    Ok((Status::Success, out))
}

/// Runs one command. Never panics on bad input; the status carries the
/// exit code.
pub fn run(cmd: &Command) -> Output {
    match execute(cmd) {
        Ok((status, stdout)) => Output { status, stdout, stderr: String::new() },
        Err(f) => Output {
            status: f.status,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::DEFAULT_CROSSING_LIMIT;

    fn cmd(action: Action, inputs: Vec<InputSource>) -> Command {
        Command {
            action,
            inputs,
            strands: None,
            format: Format::Text,
            crossing_limit: DEFAULT_CROSSING_LIMIT,
        }
    }

    fn braid(text: &str) -> InputSource {
        InputSource::Braid(text.into())
    }

    fn fixture(name: &str) -> InputSource {
        InputSource::Fixture(name.into())
    }

    #[test]
    fn documented_examples() {
        let out = run(&cmd(Action::Jones, vec![braid("1 1 1")]));
        assert_eq!(out.status, Status::Success);
        assert_eq!(out.stdout.lines().next(), Some("t + t^3 - t^4"));
        assert_eq!(run(&cmd(Action::TlDim(3), vec![])).stdout, "5 (catalan 5)\n");
        let out = run(&cmd(Action::Jones, vec![fixture("hopf-neg")]));
        assert_eq!(out.stdout.lines().next(), Some("-t^-5/2 - t^-1/2"));
    }

    #[test]
    fn other_commands() {
        let out = run(&cmd(Action::Bracket, vec![braid("-1 -1 -1")]));
        assert_eq!(out.stdout, "A^7 - A^3 - A^-5\n");
        let out = run(&cmd(Action::Seifert, vec![fixture("figure-eight")]));
        assert_eq!(out.stdout, "3 seifert circles, writhe 0\n");
        let out = run(&cmd(Action::Jw(2), vec![]));
        assert_eq!(out.status, Status::Success);
        assert!(out.stdout.starts_with("f(2): 2 terms, trace "), "{}", out.stdout);
        for suite in [Suite::Skein, Suite::Markov, Suite::Cross, Suite::Mult] {
            let out = run(&cmd(Action::Verify(suite), vec![]));
            assert_eq!(out.status, Status::Success, "{}", out.stdout);
            assert!(out.stdout.contains(" 0 failed"));
            let out = run(&cmd(Action::Verify(suite), vec![braid("1 -2 1 -2")]));
            assert_eq!(out.status, Status::Success, "{}", out.stdout);
        }
    }

    #[test]
    fn json_shape() {
        let mut c = cmd(Action::Jones, vec![braid("1 1 1")]);
        c.format = Format::Json;
        let out = run(&c);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["input"], "1 1 1");
        assert_eq!(v["strategy"], "trace");
        assert_eq!(v["writhe"], 3);
        assert_eq!(v["polynomial"], json!([[-4, 1], [-12, 1], [-16, -1]]));
    }

    #[test]
    fn input_errors_exit_two() {
        let cases = [
            cmd(Action::Jones, vec![]),
            cmd(Action::Jones, vec![braid("1"), fixture("unknot")]),
            cmd(Action::Jones, vec![braid("1 0")]),
            cmd(Action::Jones, vec![fixture("nope")]),
            cmd(Action::Jones, vec![InputSource::PdFile("/nonexistent/x.pd".into())]),
            cmd(Action::TlDim(2), vec![braid("1")]),
            cmd(Action::TlDim(20), vec![]),
            cmd(Action::Verify(Suite::Markov), vec![InputSource::PdFile("/nonexistent".into())]),
        ];
        for c in &cases {
            let out = run(c);
            assert_eq!(out.status, Status::InputError, "{c:?}");
            assert!(out.stderr.starts_with("error: "));
        }
        let mut c = cmd(Action::Bracket, vec![braid("1 1 1 1")]);
        c.crossing_limit = 3;
        assert_eq!(run(&c).status, Status::InputError);
        c.crossing_limit = 4;
        assert_eq!(run(&c).status, Status::Success);
        let mut c = cmd(Action::Jones, vec![braid("3")]);
        c.strands = Some(2);
        assert_eq!(run(&c).status, Status::InputError);
        c.strands = Some(4);
        assert_eq!(run(&c).status, Status::Success);
    }

    #[test]
    fn catalan_numbers() {
        let values: Vec<u64> = (0..=10).map(|n| catalan(n).to_u64().unwrap()).collect();
        assert_eq!(values, [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]);
    }
}
