use std::fmt;

use super::TlError;

/// Default upper bound on the strand count accepted by [`tl_basis`].
pub const DEFAULT_BASIS_LIMIT: usize = 12;

/// A Temperley-Lieb diagram on `n` strands: a non-crossing perfect matching
/// of `2n` boundary points. Points `0..n` are the top boundary left to right,
/// points `n..2n` the bottom boundary left to right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TLDiagram {
    n: usize,
    partner: Vec<usize>,
}

impl TLDiagram {
    pub fn new(n: usize, partner: Vec<usize>) -> Result<Self, TlError> {
        if partner.len() != 2 * n {
            return Err(TlError::InvalidMatching(format!(
                "expected {} points, got {}",
                2 * n,
                partner.len()
            )));
        }
        for (p, &q) in partner.iter().enumerate() {
            if q >= 2 * n || q == p || partner[q] != p {
                return Err(TlError::InvalidMatching(format!(
                    "point {p} is not part of a chord"
                )));
            }
        }
        let d = Self { n, partner };
        if !d.is_planar() {
            return Err(TlError::InvalidMatching("chords cross".into()));
        }
        Ok(d)
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, TlError> {
        let mut partner = vec![usize::MAX; 2 * n];
        for &(p, q) in pairs {
            if p >= 2 * n || q >= 2 * n || partner[p] != usize::MAX || partner[q] != usize::MAX {
                return Err(TlError::InvalidMatching(format!("bad pair ({p}, {q})")));
            }
            partner[p] = q;
            partner[q] = p;
        }
        Self::new(n, partner)
    }

    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|p| if p < n { p + n } else { p - n }).collect();
        Self { n, partner }
    }

    /// The generator `E_i` (`1 <= i < n`): a cap joining top points `i-1, i`,
    /// a cup joining the bottom points below them, and through-strands elsewhere.
    pub fn generator(n: usize, i: usize) -> Result<Self, TlError> {
        if i == 0 || i >= n {
            return Err(TlError::GeneratorIndex { n, i });
        }
        let mut d = Self::identity(n);
        let (l, r) = (i - 1, i);
        d.partner[l] = r;
        d.partner[r] = l;
        d.partner[n + l] = n + r;
        d.partner[n + r] = n + l;
        Ok(d)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p]
    }

    /// Chords as `(p, q)` with `p < q`, sorted by `p`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.partner
            .iter()
            .enumerate()
            .filter(|(p, q)| p < *q)
            .map(|(p, &q)| (p, q))
    }

    fn circular_position(&self, p: usize) -> usize {
        if p < self.n {
            p
        } else {
            3 * self.n - 1 - p
        }
    }

    // Balanced parentheses around the circle: top left to right, then bottom
    // right to left.
    fn is_planar(&self) -> bool {
        let m = 2 * self.n;
        let mut at = vec![0; m];
        for p in 0..m {
            at[self.circular_position(p)] = p;
        }
        let mut stack = Vec::with_capacity(self.n);
        for &p in &at {
            let q = self.partner[p];
            if stack.last() == Some(&q) {
                stack.pop();
            } else {
                stack.push(p);
            }
        }
        stack.is_empty()
    }

    /// Stacks `self` above `other` and returns the resulting diagram together
    /// with the number of closed loops formed in the middle.
    pub fn compose(&self, other: &Self) -> Result<(Self, usize), TlError> {
        let n = self.n;
        if other.n != n {
            return Err(TlError::StrandMismatch { left: n, right: other.n });
        }
        let mut out = vec![usize::MAX; 2 * n];
        let mut middle_seen = vec![false; n];
        for start in 0..2 * n {
            if out[start] != usize::MAX {
                continue;
            }
            let mut in_top = start < n;
            let mut p = start;
            let end = loop {
                if in_top {
                    let q = self.partner[p];
                    if q < n {
                        break q;
                    }
                    middle_seen[q - n] = true;
                    in_top = false;
                    p = q - n;
                } else {
                    let q = other.partner[p];
                    if q >= n {
                        break q;
                    }
                    middle_seen[q] = true;
                    in_top = true;
                    p = q + n;
                }
            };
            out[start] = end;
            out[end] = start;
        }
        let mut loops = 0;
        for start in 0..n {
            if middle_seen[start] {
                continue;
            }
            loops += 1;
            let mut j = start;
            loop {
                middle_seen[j] = true;
                let k = self.partner[n + j] - n;
                middle_seen[k] = true;
                j = other.partner[k];
                if j == start {
                    break;
                }
            }
        }
        Ok((Self { n, partner: out }, loops))
    }

    /// Number of loops after joining top point `k` to bottom point `k` for
    /// every `k` around the right-hand side.
    pub fn closure_loops(&self) -> usize {
        let n = self.n;
        let mut seen = vec![false; 2 * n];
        let mut loops = 0;
        for start in 0..2 * n {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut p = start;
            loop {
                seen[p] = true;
                let q = self.partner[p];
                seen[q] = true;
                p = if q < n { q + n } else { q - n };
                if p == start {
                    break;
                }
            }
        }
        loops
    }

    /// Closes only the rightmost strand, returning a diagram on `n - 1`
    /// strands and the number of loops (0 or 1) that closing produced.
    pub fn close_last(&self) -> Result<(Self, usize), TlError> {
        let big = self.n;
        if big == 0 {
            return Err(TlError::NoStrands);
        }
        let n = big - 1;
        let (top, bottom) = (big - 1, 2 * big - 1);
        let reindex = |p: usize| if p < big { p } else { p - 1 };
        let mut partner = vec![usize::MAX; 2 * n];
        let mut loops = 0;
        if self.partner[top] == bottom {
            loops = 1;
        } else {
            let (p, q) = (reindex(self.partner[top]), reindex(self.partner[bottom]));
            partner[p] = q;
            partner[q] = p;
        }
        for p in (0..2 * big).filter(|&p| p != top && p != bottom) {
            let q = self.partner[p];
            if q != top && q != bottom {
                partner[reindex(p)] = reindex(q);
            }
        }
        Ok((Self { n, partner }, loops))
    }

    /// Adds a through-strand on the right.
    pub fn include_right(&self) -> Self {
        self.tensor(&Self::identity(1))
    }

    /// Adds a through-strand on the left.
    pub fn include_left(&self) -> Self {
        Self::identity(1).tensor(self)
    }

    /// Places `self` to the left of `other`.
    pub fn tensor(&self, other: &Self) -> Self {
        let (n, m) = (self.n, other.n);
        let total = n + m;
        let left = |p: usize| if p < n { p } else { total + (p - n) };
        let right = |p: usize| if p < m { n + p } else { total + n + (p - m) };
        let mut partner = vec![0; 2 * total];
        for p in 0..2 * n {
            partner[left(p)] = left(self.partner[p]);
        }
        for p in 0..2 * m {
            partner[right(p)] = right(other.partner[p]);
        }
        Self { n: total, partner }
    }

    /// Mirror image in a horizontal line (top and bottom exchanged).
    pub fn reflect(&self) -> Self {
        let n = self.n;
        let flip = |p: usize| if p < n { p + n } else { p - n };
        let mut partner = vec![0; 2 * n];
        for p in 0..2 * n {
            partner[flip(p)] = flip(self.partner[p]);
        }
        Self { n, partner }
    }
}

impl fmt::Display for TLDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        for (p, q) in self.pairs() {
            let sep = if (p < n) != (q < n) {
                "|"
            } else if q >= 10 {
                ","
            } else {
                ""
            };
            write!(f, "({p}{sep}{q})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TLDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TL{}[{self}]", self.n)
    }
}

/// All diagrams on `n` strands, with `n` capped at [`DEFAULT_BASIS_LIMIT`].
pub fn tl_basis(n: usize) -> Result<Vec<TLDiagram>, TlError> {
    tl_basis_with_limit(n, DEFAULT_BASIS_LIMIT)
}

pub fn tl_basis_with_limit(n: usize, limit: usize) -> Result<Vec<TLDiagram>, TlError> {
    if n > limit {
        return Err(TlError::BasisLimit { n, limit });
    }
    // Enumerate non-crossing matchings of circular positions, then map each
    // position back to its boundary point.
    let m = 2 * n;
    let point = |c: usize| if c < n { c } else { 3 * n - 1 - c };
    let mut out = Vec::new();
    let mut circ = vec![usize::MAX; m];
    fill(&mut circ, 0, &mut |circ: &[usize]| {
        let mut partner = vec![0; m];
        for (c, &e) in circ.iter().enumerate() {
            partner[point(c)] = point(e);
        }
        out.push(TLDiagram { n, partner });
    });
    out.sort();
    Ok(out)
}

// Matches the first free position with each admissible later position so that
// the enclosed stretch has even length.
fn fill(circ: &mut [usize], from: usize, emit: &mut dyn FnMut(&[usize])) {
    let Some(first) = (from..circ.len()).find(|&k| circ[k] == usize::MAX) else {
        emit(circ);
        return;
    };
    // the nearest taken position closes the chord enclosing `first`
    let bound = (first + 1..circ.len())
        .find(|&k| circ[k] != usize::MAX)
        .unwrap_or(circ.len());
    let mut k = first + 1;
    while k < bound {
        circ[first] = k;
        circ[k] = first;
        fill(circ, first + 1, emit);
        circ[first] = usize::MAX;
        circ[k] = usize::MAX;
        k += 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize) -> TLDiagram {
        TLDiagram::generator(n, i).unwrap()
    }

    #[test]
    fn generators() {
        assert_eq!(e(2, 1), TLDiagram::from_pairs(2, &[(0, 1), (2, 3)]).unwrap());
        assert_eq!(e(3, 2), TLDiagram::from_pairs(3, &[(0, 3), (1, 2), (4, 5)]).unwrap());
        assert_eq!(TLDiagram::generator(1, 1), Err(TlError::GeneratorIndex { n: 1, i: 1 }));
        assert!(TLDiagram::generator(3, 0).is_err());
        assert_eq!(e(3, 1).to_string(), "(01)(2|5)(34)");
    }

    #[test]
    fn rejects_bad_matchings() {
        // top 0 with bottom 4 and top 1 with bottom 3 cross
        assert!(TLDiagram::from_pairs(2, &[(0, 3), (1, 2)]).is_err());
        assert!(TLDiagram::new(2, vec![1, 0, 3, 3]).is_err());
        assert!(TLDiagram::new(2, vec![1, 0]).is_err());
        assert!(TLDiagram::from_pairs(3, &[(0, 4), (1, 3), (2, 5)]).is_err());
    }

    #[test]
    fn loop_rules() {
        for n in 2..=6 {
            for i in 1..n {
                assert_eq!(e(n, i).compose(&e(n, i)).unwrap(), (e(n, i), 1));
                if i + 1 < n {
                    let (x, l1) = e(n, i).compose(&e(n, i + 1)).unwrap();
                    assert_eq!(x.compose(&e(n, i)).unwrap(), (e(n, i), l1));
                    assert_eq!(l1, 0);
                    let (y, _) = e(n, i + 1).compose(&e(n, i)).unwrap();
                    assert_eq!(y.compose(&e(n, i + 1)).unwrap(), (e(n, i + 1), 0));
                }
            }
        }
        let id = TLDiagram::identity(3);
        for x in tl_basis(3).unwrap() {
            assert_eq!(id.compose(&x).unwrap(), (x.clone(), 0));
            assert_eq!(x.compose(&id).unwrap(), (x.clone(), 0));
        }
        assert!(id.compose(&TLDiagram::identity(2)).is_err());
    }

    #[test]
    fn composing_by_hand() {
        // E1 E2 . E2 E1 = E1 E2^2 E1 = d E1 E1 ... one loop from E2^2 and one from E1^2
        let (e12, _) = e(3, 1).compose(&e(3, 2)).unwrap();
        let (e21, _) = e(3, 2).compose(&e(3, 1)).unwrap();
        let (x, loops) = e12.compose(&e21).unwrap();
        assert_eq!(x, e(3, 1));
        assert_eq!(loops, 1);
    }

    #[test]
    fn closures() {
        assert_eq!(TLDiagram::identity(4).closure_loops(), 4);
        assert_eq!(e(4, 2).closure_loops(), 3);
        assert_eq!(TLDiagram::identity(0).closure_loops(), 0);
        let (x, loops) = e(3, 2).close_last().unwrap();
        assert_eq!((x, loops), (TLDiagram::identity(2), 0));
        let (x, loops) = TLDiagram::identity(3).close_last().unwrap();
        assert_eq!((x, loops), (TLDiagram::identity(2), 1));
        assert_eq!(TLDiagram::identity(0).close_last(), Err(TlError::NoStrands));
    }

    #[test]
    fn inclusions_and_tensor() {
        assert_eq!(TLDiagram::identity(2).include_right(), TLDiagram::identity(3));
        assert_eq!(e(2, 1).include_right(), e(3, 1));
        assert_eq!(e(2, 1).include_left(), e(3, 2));
        assert_eq!(e(2, 1).tensor(&TLDiagram::identity(1)), e(3, 1));
        assert_eq!(e(2, 1).tensor(&e(2, 1)).to_string(), "(01)(23)(45)(67)");
        assert_eq!(e(3, 1).reflect(), e(3, 1));
        let (e12, _) = e(3, 1).compose(&e(3, 2)).unwrap();
        let (e21, _) = e(3, 2).compose(&e(3, 1)).unwrap();
        assert_eq!(e12.reflect(), e21);
    }

    fn catalan(n: u64) -> u64 {
        // binomial(2n, n) / (n + 1)
        let mut c: u64 = 1;
        for k in 0..n {
            c = c * (2 * n - k) / (k + 1);
        }
        c / (n + 1)
    }

    #[test]
    fn basis_sizes_are_catalan() {
        let expected = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(n as u64), c);
            let basis = tl_basis(n).unwrap();
            assert_eq!(basis.len() as u64, c, "n = {n}");
            let mut dedup = basis.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), basis.len());
            for d in &basis {
                assert!(TLDiagram::new(n, d.partner.clone()).is_ok());
            }
        }
        assert_eq!(tl_basis(0).unwrap(), vec![TLDiagram::identity(0)]);
        assert_eq!(tl_basis(13), Err(TlError::BasisLimit { n: 13, limit: 12 }));
    }
}
