//! Acceptance criteria, one PASS/FAIL line each. Run with
//! `cargo test --test acceptance` (add `--release` for realistic timings).

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{d, poly, random_element, rng, word, E};
use jones_core::braid::BraidWord;
use jones_core::diagram::{kauffman_bracket, Sign};
use jones_core::jones::{
    bracket_of_braid, jones_mirror, jones_via_bracket, jones_via_trace, trace_of_braid,
    verify_multiplicativity, verify_skein,
};
use jones_core::laurent::{quantum_int_at_a, quantum_ratio, RationalFn};
use jones_core::tl::{jones_wenzl_sequence, tl_basis, TLElement};
use num_bigint::BigUint;
use rand::Rng;
use rayon::prelude::*;

type Check = Result<String, String>;
type Criterion = (&'static str, Option<u64>, fn() -> Check);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn random_word<R: Rng>(r: &mut R, n_range: std::ops::RangeInclusive<usize>, max_len: usize) -> BraidWord {
    let n = r.gen_range(n_range);
    let len = r.gen_range(0..=max_len);
    BraidWord::random(r, n, len).unwrap()
}

fn published_values() -> Check {
    let right = word(2, &[1, 1, 1]);
    let left = word(2, &[-1, -1, -1]);
    let expect_right = poly(&[(-4, 1), (-12, 1), (-16, -1)]);
    let expect_left = poly(&[(4, 1), (12, 1), (16, -1)]);
    for (b, want) in [(&right, &expect_right), (&left, &expect_left)] {
        let t = jones_via_trace(b).map_err(|e| e.to_string())?.poly_a;
        let s = jones_via_bracket(&b.closure_pd()).map_err(|e| e.to_string())?.poly_a;
        ensure(&t == want && &s == want, || format!("V([{b}]): trace {t}, bracket {s}, want {want}"))?;
    }
    let bracket_left = poly(&[(7, 1), (3, -1), (-5, -1)]);
    let via_sum = kauffman_bracket(&left.closure_pd()).unwrap();
    let via_trace = bracket_of_braid(&left).unwrap();
    ensure(via_sum == bracket_left && via_trace == bracket_left, || {
        format!("<left trefoil>: state sum {via_sum}, trace {via_trace}")
    })?;
    let eight = jones_via_trace(&word(3, &[1, -2, 1, -2])).unwrap();
    let eight_t = eight.display_t().unwrap();
    ensure(eight_t == "t^-2 - t^-1 + 1 - t + t^2", || format!("V(4_1) = {eight_t}"))?;
    let hopf = jones_via_trace(&word(2, &[-1, -1])).unwrap().display_t().unwrap();
    ensure(hopf == "-t^-5/2 - t^-1/2", || format!("V(hopf) = {hopf}"))?;
    let unlink = jones_via_trace(&BraidWord::identity(2).unwrap()).unwrap().display_t().unwrap();
    ensure(unlink == "-t^-1/2 - t^1/2", || format!("V(unlink) = {unlink}"))?;
    let plus = trace_of_braid(&word(2, &[1]));
    let minus = trace_of_braid(&word(2, &[-1]));
    ensure(plus == poly(&[(3, -1)]) * d() && minus == poly(&[(-3, -1)]) * d(), || {
        format!("tr phi(s1) = {plus}, tr phi(s1^-1) = {minus}")
    })?;
    Ok("7 values exact".into())
}

fn cross_method() -> Check {
    let mut words = BraidWord::all_words(3, 6).unwrap();
    words.extend(BraidWord::all_words(4, 5).unwrap());
    let bad: Vec<String> = words
        .par_iter()
        .filter(|b| jones_via_trace(b).unwrap() != jones_via_bracket(&b.closure_pd()).unwrap())
        .map(|b| format!("[{b}] on {} strands", b.strands()))
        .collect();
    ensure(bad.is_empty(), || format!("{} disagreements, first {}", bad.len(), bad[0]))?;
    Ok(format!("{} words agree", words.len()))
}

fn markov() -> Check {
    let mut r = rng(1);
    for _ in 0..200 {
        let b = random_word(&mut r, 2..=4, 8);
        let len = r.gen_range(1..=4);
        let g = BraidWord::random(&mut r, b.strands(), len).unwrap();
        let moved = b.markov_m1(&g).unwrap();
        ensure(jones_via_trace(&moved).unwrap() == jones_via_trace(&b).unwrap(), || {
            format!("M1 [{b}] by [{g}]")
        })?;
    }
    for _ in 0..200 {
        let b = random_word(&mut r, 1..=4, 8);
        let s = if r.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
        let moved = b.markov_m2(s);
        ensure(jones_via_trace(&moved).unwrap() == jones_via_trace(&b).unwrap(), || {
            format!("M2 [{b}] {s:?}")
        })?;
        ensure(moved.writhe() == b.writhe() + s.value(), || format!("writhe of M2 [{b}]"))?;
    }
    Ok("200 M1 + 200 M2".into())
}

fn tl_suite() -> Check {
    let e = |n: usize, i: usize| E::generator(n, i).unwrap();
    for n in 2..=8 {
        for i in 1..n {
            ensure(&e(n, i) * &e(n, i) == e(n, i).scale(&d()), || format!("E_{i}^2, n={n}"))?;
            for j in 1..n {
                let ok = match i.abs_diff(j) {
                    1 => &(&e(n, i) * &e(n, j)) * &e(n, i) == e(n, i),
                    0 => true,
                    _ => &e(n, i) * &e(n, j) == &e(n, j) * &e(n, i),
                };
                ensure(ok, || format!("E_{i} E_{j}, n={n}"))?;
            }
        }
    }
    let catalan = |n: usize| {
        num_integer::binomial(BigUint::from(2 * n), BigUint::from(n)) / BigUint::from(n + 1)
    };
    for n in 0..=10 {
        let dim = tl_basis(n).unwrap().len();
        ensure(BigUint::from(dim) == catalan(n), || format!("|basis({n})| = {dim}"))?;
    }
    let seven = |x: &E, y: &E, z: &E| -> Result<(), String> {
        let n = x.strands();
        let en = e(n + 1, n);
        let fail = |k: u8| move || format!("relation ({k}) on TL_{n}");
        ensure(x.include_right().cond_expectation().unwrap() == x.scale(&d()), fail(1))?;
        ensure(z.trace() == z.cond_expectation().unwrap().trace(), fail(2))?;
        let sandwich = &(&en * &x.include_right()) * &en;
        let folded = &x.cond_expectation().unwrap().include_right().include_right() * &en;
        ensure(sandwich == folded, fail(3))?;
        ensure((x * y).trace() == (y * x).trace(), fail(4))?;
        ensure((&x.include_right() * &en).trace() == x.trace(), fail(5))?;
        let lhs = (&z.cond_expectation().unwrap() * y).trace();
        ensure(lhs == (z * &y.include_right()).trace(), fail(6))?;
        ensure(E::identity(n).trace() == d().pow(n as u32), fail(7))?;
        Ok(())
    };
    let mut checked = 0;
    for n in 1..=4 {
        let basis: Vec<E> = tl_basis(n).unwrap().into_iter().map(E::from_diagram).collect();
        let upper: Vec<E> = tl_basis(n + 1).unwrap().into_iter().map(E::from_diagram).collect();
        for (k, x) in basis.iter().enumerate() {
            for y in &basis {
                seven(x, y, &upper[k % upper.len()])?;
                checked += 1;
            }
        }
        for z in &upper {
            seven(&basis[0], &basis[basis.len() - 1], z)?;
            checked += 1;
        }
    }
    let mut r = rng(4);
    for n in 1..=6 {
        for _ in 0..12 {
            let (x, y) = (random_element(&mut r, n, 4), random_element(&mut r, n, 4));
            let z = random_element(&mut r, n + 1, 4);
            seven(&x, &y, &z)?;
            let w = random_element(&mut r, n, 4);
            ensure(&(&x * &y) * &w == &x * &(&y * &w), || format!("associativity on TL_{n}"))?;
            checked += 1;
        }
    }
    Ok(format!("generators n<=8, catalan n<=10, {checked} relation samples"))
}

fn jw_suite() -> Check {
    type R = TLElement<RationalFn>;
    let seq = jones_wenzl_sequence(7).unwrap();
    for n in 0..=6 {
        let f = &seq[n];
        ensure(f * f == *f, || format!("f({n})^2 != f({n})"))?;
        ensure(f.star() == *f, || format!("f({n})* != f({n})"))?;
        for j in 1..n {
            let ej = R::generator(n, j).unwrap();
            ensure((&ej * f).is_zero() && (f * &ej).is_zero(), || format!("E_{j} f({n}) != 0"))?;
        }
        let tr = f.trace();
        ensure(tr.as_laurent() == Some(&quantum_int_at_a(n as i64 + 1)), || {
            format!("tr f({n}) = {tr}")
        })?;
        let ratio = quantum_ratio(n as i64 + 2, n as i64 + 1).unwrap();
        let closed = seq[n + 1].cond_expectation().unwrap();
        ensure(closed == f.scale(&ratio), || format!("E(f({})) != [{}]/[{}] f({n})", n + 1, n + 2, n + 1))?;
    }
    Ok("n = 0..6 exact".into())
}

fn skein() -> Check {
    let words = BraidWord::all_words(3, 5).unwrap();
    let counts: Vec<usize> = words
        .par_iter()
        .map(|b| {
            let pd = b.closure_pd();
            (0..pd.crossing_count())
                .filter(|&k| !verify_skein(&pd, k).unwrap())
                .count()
        })
        .collect();
    let bad = counts.iter().sum::<usize>();
    ensure(bad == 0, || format!("{bad} crossings violate the skein relation"))?;
    let crossings: usize = words.iter().map(BraidWord::len).sum();
    Ok(format!("{crossings} crossings in {} closures", words.len()))
}

fn multiplicativity() -> Check {
    let mut r = rng(7);
    for _ in 0..50 {
        let a = random_word(&mut r, 1..=3, 5);
        let b = random_word(&mut r, 1..=3, 5);
        ensure(verify_multiplicativity(&a, &b).unwrap(), || format!("[{a}] and [{b}]"))?;
    }
    Ok("50 pairs".into())
}

fn mirror() -> Check {
    let mut r = rng(8);
    for _ in 0..100 {
        let b = random_word(&mut r, 1..=4, 8);
        let flipped = BraidWord::new(b.strands(), b.letters().iter().map(|g| -g).collect()).unwrap();
        let v = jones_via_trace(&b).unwrap();
        let m = jones_mirror(&v);
        ensure(m == jones_via_trace(&flipped).unwrap(), || format!("mirror of [{b}]"))?;
        ensure(m.writhe == -v.writhe && jones_mirror(&m) == v, || format!("involution on [{b}]"))?;
    }
    let eight = jones_via_trace(&word(3, &[1, -2, 1, -2])).unwrap();
    ensure(jones_mirror(&eight) == eight, || "figure-eight is not amphichiral".into())?;
    let expected = poly(&[(8, 1), (4, -1), (0, 1), (-4, -1), (-8, 1)]);
    ensure(eight.poly_a == expected, || format!("V(4_1) = {}", eight.poly_a))?;
    Ok("100 words, 4_1 fixed".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("published-value regressions", Some(5), published_values),
        ("exhaustive cross-method equivalence", Some(60), cross_method),
        ("Markov invariance", Some(10), markov),
        ("Temperley-Lieb algebra suite", Some(30), tl_suite),
        ("Jones-Wenzl suite", Some(30), jw_suite),
        ("skein relation at every crossing", Some(60), skein),
        ("multiplicativity", Some(20), multiplicativity),
        ("mirror and figure-eight amphichirality", None, mirror),
    ];
    let mut failures = 0;
    for (k, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let slow = limit.is_some_and(|l| elapsed > Duration::from_secs(l));
        let budget = limit.map_or("no limit".to_string(), |l| format!("limit {l}s"));
        let (verdict, detail) = match (&result, slow) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}, too slow")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if verdict == "FAIL" {
            failures += 1;
        }
        println!(
            "{verdict} {}. {name}: {detail} [{:.2}s, {budget}]",
            k + 1,
            elapsed.as_secs_f64()
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
