use super::{Failure, FixtureTable, Loaded, Suite};
use crate::braid::BraidWord;
use crate::diagram::{PDCode, Sign};
use crate::jones::{
    jones_via_bracket_with_limit, jones_via_trace, verify_multiplicativity, verify_skein_with_limit,
    Strategy,
};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            self.failures.push(what());
        }
    }
}

fn braid_input(suite: Suite, input: Option<&Loaded>) -> Result<Option<BraidWord>, Failure> {
    match input {
        None => Ok(None),
        Some(Loaded::Braid(b)) => Ok(Some(b.clone())),
        Some(Loaded::Pd(_)) => Err(Failure::input(format!(
            "verify {} needs a braid word or fixture, not a PD file",
            suite.name()
        ))),
    }
}

fn fixture_braids() -> Vec<BraidWord> {
    FixtureTable::default().iter().map(|f| f.braid()).collect()
}

/// Runs one verification suite, over `input` alone when it is given and over
/// a built-in collection of small braids otherwise.
pub(crate) fn run_suite(
    suite: Suite,
    input: Option<&Loaded>,
    limit: usize,
) -> Result<SuiteReport, Failure> {
    let mut report = SuiteReport::default();
    match suite {
        Suite::Skein => {
            let diagrams: Vec<(String, PDCode)> = match input {
                Some(l) => vec![("input".to_string(), l.pd())],
                None => BraidWord::all_words(3, 4)
                    .expect("three strands")
                    .into_iter()
                    .map(|b| (format!("closure of [{b}]"), b.closure_pd()))
                    .collect(),
            };
            for (name, pd) in &diagrams {
                for k in 0..pd.crossing_count() {
                    let ok = verify_skein_with_limit(pd, k, limit)?;
                    report.record(ok, || format!("skein relation at crossing {k} of {name}"));
                }
            }
        }
        Suite::Markov => {
            let braids = match braid_input(suite, input)? {
                Some(b) => vec![b],
                None => {
                    let mut v = fixture_braids();
                    v.extend(BraidWord::all_words(3, 3).expect("three strands"));
                    v
                }
            };
            for b in &braids {
                let v = jones_via_trace(b)?;
                for g in BraidWord::all_words(b.strands(), 2).expect("nonempty") {
                    let moved = b.markov_m1(&g).expect("same strand count");
                    report.record(jones_via_trace(&moved)? == v, || format!("conjugating [{b}] by [{g}]"));
                }
                for s in [Sign::Positive, Sign::Negative] {
                    let moved = b.markov_m2(s);
                    report.record(jones_via_trace(&moved)? == v, || format!("stabilising [{b}] ({s:?})"));
                }
            }
        }
        Suite::Cross => {
            let braids = match braid_input(suite, input)? {
                Some(b) => vec![b],
                None => {
                    for f in FixtureTable::default().iter() {
                        for s in [Strategy::Trace, Strategy::Bracket] {
                            report.record(f.check(s)?, || format!("fixture {} via {s}", f.name));
                        }
                    }
                    let mut v = BraidWord::all_words(3, 4).expect("three strands");
                    v.extend(BraidWord::all_words(4, 3).expect("four strands"));
                    v
                }
            };
            for b in &braids {
                let ok = jones_via_trace(b)? == jones_via_bracket_with_limit(&b.closure_pd(), limit)?;
                report.record(ok, || format!("trace and bracket differ on [{b}]"));
            }
        }
        Suite::Mult => {
            let fixtures = fixture_braids();
            let left = match braid_input(suite, input)? {
                Some(b) => vec![b],
                None => fixtures.clone(),
            };
            for a in &left {
                for b in &fixtures {
                    report.record(verify_multiplicativity(a, b)?, || {
                        format!("products of [{a}] ({} strands) and [{b}]", a.strands())
                    });
                }
            }
        }
    }
    Ok(report)
}
