#![allow(dead_code)]

use jones_core::braid::BraidWord;
use jones_core::laurent::LaurentPoly;
use jones_core::tl::{tl_basis, TLElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type E = TLElement<LaurentPoly>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

pub fn d() -> LaurentPoly {
    LaurentPoly::loop_value()
}

pub fn word(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).unwrap()
}

/// A random element of `TL_n` with at most `terms` basis diagrams and small
/// Laurent coefficients.
pub fn random_element<R: Rng>(rng: &mut R, n: usize, terms: usize) -> E {
    let basis = tl_basis(n).unwrap();
    let mut x = E::zero(n);
    for _ in 0..rng.gen_range(1..=terms) {
        let diagram = basis[rng.gen_range(0..basis.len())].clone();
        let c = LaurentPoly::from_terms(
            (0..rng.gen_range(1..=2)).map(|_| (rng.gen_range(-3..=3), rng.gen_range(-3..=3))),
        );
        x = &x + &E::monomial(diagram, c);
    }
    x
}
