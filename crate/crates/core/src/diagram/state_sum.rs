use rayon::prelude::*;

use super::union_find::UnionFind;
use super::{DiagramError, PDCode, Sign};
use crate::laurent::LaurentPoly;

/// Exponential state sums above this many crossings need an explicit override.
pub const DEFAULT_CROSSING_LIMIT: usize = 24;

// Below this many states the sum runs on the calling thread.
const PARALLEL_STATES: u64 = 1 << 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Smoothing {
    A,
    B,
}

/// One smoothing choice per crossing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SmoothingState(Vec<Smoothing>);

impl SmoothingState {
    pub fn new(choices: Vec<Smoothing>) -> Self {
        Self(choices)
    }

    /// Binary counter over crossing indices: bit `k` set means crossing `k`
    /// takes the B smoothing.
    pub fn from_index(index: u64, crossings: usize) -> Self {
        Self(
            (0..crossings)
                .map(|k| if index >> k & 1 == 1 { Smoothing::B } else { Smoothing::A })
                .collect(),
        )
    }

    pub fn choices(&self) -> &[Smoothing] {
        &self.0
    }

    /// `#A - #B`, the exponent of `A` this state contributes.
    pub fn weight(&self) -> i64 {
        self.0
            .iter()
            .map(|s| if *s == Smoothing::A { 1 } else { -1 })
            .sum()
    }
}

// X(a, b, c, d): the A-smoothing joins a-b and c-d, the B-smoothing a-d and b-c.
fn join(uf: &mut UnionFind, c: &[u32; 4], s: Smoothing) {
    match s {
        Smoothing::A => {
            uf.union(c[0], c[1]);
            uf.union(c[2], c[3]);
        }
        Smoothing::B => {
            uf.union(c[0], c[3]);
            uf.union(c[1], c[2]);
        }
    }
}

/// Number of closed curves after smoothing every crossing as `state` says.
pub fn resolve_state(pd: &PDCode, state: &SmoothingState) -> Result<usize, DiagramError> {
    if state.0.len() != pd.crossing_count() {
        return Err(DiagramError::StateLength {
            expected: pd.crossing_count(),
            got: state.0.len(),
        });
    }
    let (compact, edges) = pd.compact_crossings();
    let mut uf = UnionFind::new(edges);
    for (c, s) in compact.iter().zip(&state.0) {
        join(&mut uf, c, *s);
    }
    Ok(uf.sets() + pd.free_circles())
}

/// Number of Seifert circles: every crossing smoothed along the orientation.
pub fn seifert_circles(pd: &PDCode) -> usize {
    // the oriented smoothing is A at a positive crossing and B at a negative one
    let choices = pd
        .signs()
        .map(|s| if s == Sign::Positive { Smoothing::A } else { Smoothing::B })
        .collect();
    resolve_state(pd, &SmoothingState(choices)).expect("one choice per crossing")
}

/// Kauffman bracket with the default crossing limit.
pub fn kauffman_bracket(pd: &PDCode) -> Result<LaurentPoly, DiagramError> {
    kauffman_bracket_with_limit(pd, DEFAULT_CROSSING_LIMIT)
}

/// `<D> = sum over states s of A^(#A - #B) d^(loops(s) - 1)`, `d = -A^2 - A^-2`.
pub fn kauffman_bracket_with_limit(pd: &PDCode, limit: usize) -> Result<LaurentPoly, DiagramError> {
    state_sum(pd, None, limit)
}

/// The bracket of `pd` with crossing `k` already smoothed as `smoothing`:
/// the sum over states of the remaining crossings only, so that
/// `<D> = A <D|k=A> + A^-1 <D|k=B>`.
pub fn kauffman_bracket_fixed(
    pd: &PDCode,
    k: usize,
    smoothing: Smoothing,
) -> Result<LaurentPoly, DiagramError> {
    if k >= pd.crossing_count() {
        return Err(DiagramError::CrossingIndex {
            index: k,
            crossings: pd.crossing_count(),
        });
    }
    state_sum(pd, Some((k, smoothing)), DEFAULT_CROSSING_LIMIT)
}

fn state_sum(
    pd: &PDCode,
    fixed: Option<(usize, Smoothing)>,
    limit: usize,
) -> Result<LaurentPoly, DiagramError> {
    let n = pd.crossing_count();
    if n > limit {
        return Err(DiagramError::TooManyCrossings { crossings: n, limit });
    }
    if n >= 64 {
        return Err(DiagramError::TooManyCrossings { crossings: n, limit: 63 });
    }
    let (compact, edges) = pd.compact_crossings();
    let (fixed_crossing, fixed_choice) = match fixed {
        Some((k, s)) => (Some(k), s),
        None => (None, Smoothing::A),
    };
    let free: Vec<usize> = (0..n).filter(|&k| Some(k) != fixed_crossing).collect();
    let varying = free.len();
    let states: u64 = 1 << varying;

    // histogram[b * (edges + 1) + loops]: states with `b` B-smoothings among
    // the varying crossings and `loops` curves through crossings
    let width = edges + 1;
    let count_state = |hist: &mut Vec<u64>, uf: &mut UnionFind, s: u64| {
        uf.reset();
        if let Some(k) = fixed_crossing {
            join(uf, &compact[k], fixed_choice);
        }
        for (bit, &k) in free.iter().enumerate() {
            let choice = if s >> bit & 1 == 1 { Smoothing::B } else { Smoothing::A };
            join(uf, &compact[k], choice);
        }
        let b = s.count_ones() as usize;
        hist[b * width + uf.sets()] += 1;
    };
    let fresh = || (vec![0u64; (varying + 1) * width], UnionFind::new(edges));
    let hist = if states < PARALLEL_STATES {
        let (mut hist, mut uf) = fresh();
        for s in 0..states {
            count_state(&mut hist, &mut uf, s);
        }
        hist
    } else {
        (0..states)
            .into_par_iter()
            .fold(fresh, |(mut hist, mut uf), s| {
                count_state(&mut hist, &mut uf, s);
                (hist, uf)
            })
            .map(|(hist, _)| hist)
            .reduce(
                || vec![0u64; (varying + 1) * width],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    };

    let d = LaurentPoly::loop_value();
    let max_loops = edges + pd.free_circles();
    let mut d_pow = Vec::with_capacity(max_loops + 1);
    d_pow.push(LaurentPoly::one());
    for i in 1..=max_loops {
        let next = &d_pow[i - 1] * &d;
        d_pow.push(next);
    }
    let mut total = LaurentPoly::zero();
    for b in 0..=varying {
        let alpha = varying as i64 - 2 * b as i64;
        for loops in 0..width {
            let count = hist[b * width + loops];
            if count == 0 {
                continue;
            }
            let curves = loops + pd.free_circles();
            debug_assert!(curves >= 1);
            total = total + d_pow[curves - 1].shift(alpha).scale(&count.into());
        }
    }
    Ok(total)
}
