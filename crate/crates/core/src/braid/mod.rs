//! Braid words in the Artin presentation, their permutations, Markov moves,
//! and closures as oriented PD codes.

mod closure;

use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::diagram::Sign;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("a braid needs at least one strand")]
    ZeroStrands,
    #[error("letter 0 at position {position} is not a generator")]
    ZeroLetter { position: usize },
    #[error("letter {letter} at position {position} is out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, position: usize, strands: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("pure braid generator needs 1 <= i < j <= {n}, got i = {i}, j = {j}")]
    PureBraidIndex { n: usize, i: usize, j: usize },
}

/// A word in the generators `sigma_1 .. sigma_{n-1}` of the braid group on
/// `n` strands. Letter `g > 0` is `sigma_g`, `g < 0` is `sigma_{|g|}^-1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::ZeroStrands);
        }
        for (position, &g) in letters.iter().enumerate() {
            if g == 0 {
                return Err(BraidError::ZeroLetter { position });
            }
            if g.unsigned_abs() as usize >= strands {
                return Err(BraidError::LetterOutOfRange { letter: g, position, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    /// The empty word on `strands` strands.
    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Self) -> Result<Self, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|g| -g).collect(),
        }
    }

    /// Adds an untouched strand on the right.
    pub fn include_right(&self) -> Self {
        Self {
            strands: self.strands + 1,
            letters: self.letters.clone(),
        }
    }

    /// Adds an untouched strand on the left, shifting every generator index.
    pub fn include_left(&self) -> Self {
        Self {
            strands: self.strands + 1,
            letters: self.letters.iter().map(|&g| g + g.signum()).collect(),
        }
    }

    /// Sum of the exponents of the letters.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|g| g.signum() as i64).sum()
    }

    pub fn permutation(&self) -> BraidPermutation {
        // at[pos] = strand currently at position pos
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &g in &self.letters {
            let i = g.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        let mut image = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            image[strand] = pos;
        }
        BraidPermutation { image }
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        self.permutation().cycles()
    }

    /// Markov conjugation: `g * self * g^-1`.
    pub fn markov_m1(&self, g: &Self) -> Result<Self, BraidError> {
        g.concat(self)?.concat(&g.inverse())
    }

    /// Markov stabilisation: a new strand on the right, then `sigma_n^(+-1)`.
    pub fn markov_m2(&self, sign: Sign) -> Self {
        let mut out = self.include_right();
        let n = self.strands as i32;
        out.letters.push(if sign == Sign::Positive { n } else { -n });
        out
    }

    /// Generator `A_{ij}` of the pure braid group:
    /// `(s_{j-1} .. s_{i+1}) s_i^2 (s_{i+1}^-1 .. s_{j-1}^-1)`.
    pub fn pure_braid_generator(n: usize, i: usize, j: usize) -> Result<Self, BraidError> {
        if i < 1 || i >= j || j > n {
            return Err(BraidError::PureBraidIndex { n, i, j });
        }
        let (i, j) = (i as i32, j as i32);
        let mut letters: Vec<i32> = ((i + 1)..j).rev().collect();
        letters.extend([i, i]);
        letters.extend(((i + 1)..j).map(|g| -g));
        Self::new(n, letters)
    }

    /// Side by side: `other` placed to the right of `self`.
    pub fn tensor(&self, other: &Self) -> Self {
        self.joined(other, self.strands, self.strands + other.strands)
    }

    /// Connected sum sharing the last strand of `self` with the first of `other`.
    pub fn connected_sum(&self, other: &Self) -> Self {
        self.joined(other, self.strands - 1, self.strands + other.strands - 1)
    }

    /// `sigma_n * (self (x) other)`: a braid whose closure is again the
    /// connected sum of the two closures.
    pub fn connected_sum_tensor(&self, other: &Self) -> Self {
        let mut out = self.tensor(other);
        out.letters.insert(0, self.strands as i32);
        out
    }

    /// Every word on `strands` strands of length at most `max_len`, shortest
    /// first, letters ordered `1, -1, 2, -2, ...`.
    pub fn all_words(strands: usize, max_len: usize) -> Result<Vec<Self>, BraidError> {
        if strands == 0 {
            return Err(BraidError::ZeroStrands);
        }
        let alphabet = Self::alphabet(strands);
        let mut out = vec![Self { strands, letters: Vec::new() }];
        let mut layer = 0;
        for _ in 0..max_len {
            if alphabet.is_empty() {
                break;
            }
            let start = out.len();
            for k in layer..start {
                for &g in &alphabet {
                    let mut letters = out[k].letters.clone();
                    letters.push(g);
                    out.push(Self { strands, letters });
                }
            }
            layer = start;
        }
        Ok(out)
    }

    /// A uniformly random word of exactly `len` letters.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::ZeroStrands);
        }
        let alphabet = Self::alphabet(strands);
        let letters = if alphabet.is_empty() {
            Vec::new()
        } else {
            (0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect()
        };
        Ok(Self { strands, letters })
    }

    fn alphabet(strands: usize) -> Vec<i32> {
        (1..strands as i32).flat_map(|g| [g, -g]).collect()
    }

    fn joined(&self, other: &Self, shift: usize, strands: usize) -> Self {
        let shift = shift as i32;
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().map(|&g| g + g.signum() * shift));
        Self { strands, letters }
    }
}

impl fmt::Display for BraidWord {
    /// Whitespace-separated letters, the CLI input format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Where each strand ends: `image[i]` is the bottom position of the strand
/// starting at top position `i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidPermutation {
    image: Vec<usize>,
}

impl BraidPermutation {
    pub fn identity(n: usize) -> Self {
        Self { image: (0..n).collect() }
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// `self` followed by `other`, matching braid word concatenation.
    pub fn then(&self, other: &Self) -> Self {
        Self {
            image: self.image.iter().map(|&p| other.image[p]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.image.len()];
        for (i, &p) in self.image.iter().enumerate() {
            image[p] = i;
        }
        Self { image }
    }

    pub fn cycles(&self) -> usize {
        let mut seen = vec![false; self.image.len()];
        let mut count = 0;
        for start in 0..self.image.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.image[p];
            }
        }
        count
    }
}
