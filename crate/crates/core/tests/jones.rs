mod common;

use common::{d, poly, word, E};
use jones_core::braid::BraidWord;
use jones_core::diagram::{kauffman_bracket, Sign};
use jones_core::jones::{
    bracket_of_braid, jones_mirror, jones_via_bracket, jones_via_trace, phi, trace_of_braid,
    verify_multiplicativity, verify_skein,
};
use proptest::prelude::*;

#[test]
fn phi_respects_braid_relations() {
    for n in 2..=6 {
        for i in 1..n as i32 {
            assert_eq!(phi(&word(n, &[i, -i])), E::identity(n));
            assert_eq!(phi(&word(n, &[-i, i])), E::identity(n));
            if i + 1 < n as i32 {
                assert_eq!(phi(&word(n, &[i, i + 1, i])), phi(&word(n, &[i + 1, i, i + 1])));
            }
            for j in (i + 2)..n as i32 {
                assert_eq!(phi(&word(n, &[i, -j])), phi(&word(n, &[-j, i])));
            }
        }
    }
}

#[test]
fn unlinks_and_single_crossings() {
    for n in 1..=6 {
        let v = jones_via_trace(&BraidWord::identity(n).unwrap()).unwrap();
        assert_eq!(v.poly_a, d().pow(n as u32 - 1));
    }
    assert_eq!(trace_of_braid(&word(2, &[1])), poly(&[(3, -1)]) * d());
    assert_eq!(trace_of_braid(&word(2, &[-1])), poly(&[(-3, -1)]) * d());
}

#[test]
fn bracket_routes_agree_on_small_words() {
    for b in BraidWord::all_words(3, 4).unwrap() {
        assert_eq!(bracket_of_braid(&b).unwrap(), kauffman_bracket(&b.closure_pd()).unwrap(), "{b}");
    }
}

#[test]
fn figure_eight_is_amphichiral() {
    let b = word(3, &[1, -2, 1, -2]);
    let v = jones_via_trace(&b).unwrap();
    assert_eq!(jones_mirror(&v), v);
    assert_eq!(v.display_t().unwrap(), "t^-2 - t^-1 + 1 - t + t^2");
    let trefoil = jones_via_trace(&word(2, &[1, 1, 1])).unwrap();
    assert_ne!(jones_mirror(&trefoil), trefoil);
}

#[test]
fn connected_sum_variants_agree() {
    let a = word(2, &[1, 1, 1]);
    let b = word(3, &[1, -2, 1, -2]);
    let heart = jones_via_trace(&a.connected_sum_tensor(&b)).unwrap();
    let club = jones_via_trace(&a.connected_sum(&b)).unwrap();
    assert_eq!(heart, club);
    assert_eq!(heart.writhe, a.writhe() + b.writhe() + 1);
}

fn arb_word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| {
        let letter = (1..n as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
        prop::collection::vec(letter, 0..=max_len).prop_map(move |v| BraidWord::new(n, v).unwrap())
    })
}

fn negated(b: &BraidWord) -> BraidWord {
    BraidWord::new(b.strands(), b.letters().iter().map(|g| -g).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn phi_is_multiplicative(a in arb_word(5, 5), k in 0usize..6) {
        let letters = a.letters();
        let (x, y) = letters.split_at(k.min(letters.len()));
        let (x, y) = (
            BraidWord::new(a.strands(), x.to_vec()).unwrap(),
            BraidWord::new(a.strands(), y.to_vec()).unwrap(),
        );
        prop_assert_eq!(phi(&a), &phi(&x) * &phi(&y));
    }

    #[test]
    fn trace_and_bracket_agree(b in arb_word(4, 8)) {
        prop_assert_eq!(jones_via_trace(&b).unwrap(), jones_via_bracket(&b.closure_pd()).unwrap());
    }

    #[test]
    fn markov_moves_preserve_v(b in arb_word(4, 6), g in arb_word(4, 4)) {
        prop_assume!(b.strands() == g.strands());
        let v = jones_via_trace(&b).unwrap();
        prop_assert_eq!(jones_via_trace(&b.markov_m1(&g).unwrap()).unwrap(), v.clone());
        prop_assert_eq!(jones_via_trace(&b.markov_m2(Sign::Positive)).unwrap(), v.clone());
        prop_assert_eq!(jones_via_trace(&b.markov_m2(Sign::Negative)).unwrap(), v);
    }

    #[test]
    fn mirror_matches_negated_word(b in arb_word(4, 7)) {
        let v = jones_via_trace(&b).unwrap();
        let m = jones_via_trace(&negated(&b)).unwrap();
        prop_assert_eq!(jones_mirror(&v), m.clone());
        prop_assert_eq!(jones_via_bracket(&b.closure_pd().mirror()).unwrap(), m);
    }

    #[test]
    fn skein_holds_everywhere(b in arb_word(4, 6)) {
        let pd = b.closure_pd();
        for k in 0..pd.crossing_count() {
            prop_assert!(verify_skein(&pd, k).unwrap());
        }
    }

    #[test]
    fn products_are_multiplicative(a in arb_word(3, 5), b in arb_word(3, 5)) {
        prop_assert!(verify_multiplicativity(&a, &b).unwrap());
    }

    #[test]
    fn reversal_preserves_v(b in arb_word(4, 7)) {
        let pd = b.closure_pd();
        prop_assert_eq!(jones_via_bracket(&pd.reverse()).unwrap(), jones_via_bracket(&pd).unwrap());
    }
}
