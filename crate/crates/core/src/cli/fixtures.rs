use crate::braid::BraidWord;
use crate::jones::{jones_via_bracket, jones_via_trace, JonesError, Strategy};
use crate::laurent::LaurentPoly;

/// A named braid closure with its Jones polynomial in `A`-form.
#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub strands: usize,
    pub letters: &'static [i32],
    /// `(exponent of A, coefficient)` pairs.
    pub expected: &'static [(i64, i64)],
}

const ENTRIES: &[Fixture] = &[
    Fixture { name: "unknot", strands: 1, letters: &[], expected: &[(0, 1)] },
    Fixture { name: "unlink2", strands: 2, letters: &[], expected: &[(2, -1), (-2, -1)] },
    Fixture { name: "hopf-neg", strands: 2, letters: &[-1, -1], expected: &[(10, -1), (2, -1)] },
    Fixture {
        name: "trefoil-right",
        strands: 2,
        letters: &[1, 1, 1],
        expected: &[(-4, 1), (-12, 1), (-16, -1)],
    },
    Fixture {
        name: "trefoil-left",
        strands: 2,
        letters: &[-1, -1, -1],
        expected: &[(4, 1), (12, 1), (16, -1)],
    },
    Fixture {
        name: "figure-eight",
        strands: 3,
        letters: &[1, -2, 1, -2],
        expected: &[(8, 1), (4, -1), (0, 1), (-4, -1), (-8, 1)],
    },
];

impl Fixture {
    pub fn braid(&self) -> BraidWord {
        BraidWord::new(self.strands, self.letters.to_vec()).expect("fixture words are valid")
    }

    pub fn expected(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.expected.iter().copied())
    }

    /// Recomputes `V` with `strategy` and compares it with the stored value.
    pub fn check(&self, strategy: Strategy) -> Result<bool, JonesError> {
        let b = self.braid();
        let v = match strategy {
            Strategy::Trace => jones_via_trace(&b)?,
            Strategy::Bracket => jones_via_bracket(&b.closure_pd())?,
        };
        Ok(v.poly_a == self.expected())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct FixtureTable {
    entries: &'static [Fixture],
}

impl Default for FixtureTable {
    fn default() -> Self {
        Self { entries: ENTRIES }
    }
}

impl FixtureTable {
    pub fn get(&self, name: &str) -> Option<&'static Fixture> {
        self.entries.iter().find(|f| f.name == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = &'static Fixture> {
        self.entries.iter()
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|f| f.name).collect()
    }

    /// Names of entries whose stored value disagrees with either strategy.
    pub fn self_test(&self) -> Result<Vec<(&'static str, Strategy)>, JonesError> {
        let mut bad = Vec::new();
        for f in self.entries {
            for s in [Strategy::Trace, Strategy::Bracket] {
                if !f.check(s)? {
                    bad.push((f.name, s));
                }
            }
        }
        Ok(bad)
    }
}
