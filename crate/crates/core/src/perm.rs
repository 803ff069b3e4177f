//! Permutations of `[n]` in one-line notation and the left weak order.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// A bijection of `{1, ..., n}` written in one-line notation.
///
/// Positions and values are both 1-indexed at the API surface.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation(images));
            }
            seen[v] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The reverse of the identity, the top of the weak order.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn into_images(self) -> Vec<usize> {
        self.0
    }

    /// Image of position `i` (1-indexed).
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Position (1-indexed) holding the value `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.0.iter().position(|&x| x == v).expect("value in range") + 1
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// All pairs `(i, j)`, `i < j`, with `self(i) > self(j)`.
    pub fn inversions(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.0[i] > self.0[j] {
                    out.insert((i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn inversion_count(&self) -> usize {
        let n = self.len();
        (0..n)
            .map(|i| (i + 1..n).filter(|&j| self.0[i] > self.0[j]).count())
            .sum()
    }

    /// `s_p * self`: swap the values `p` and `p + 1`.
    pub fn left_mul_simple(&self, p: usize) -> Self {
        let mut v = self.0.clone();
        for x in v.iter_mut() {
            if *x == p {
                *x = p + 1;
            } else if *x == p + 1 {
                *x = p;
            }
        }
        Permutation(v)
    }

    /// Iterate over all of `S_n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some((1..=n).collect()),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts whitespace- or comma-separated images. A single token of two or
    /// more digits is read digit by digit, so `"4123"` is `4 1 2 3`.
    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        let images: Vec<usize> = if tokens.len() == 1
            && tokens[0].len() > 1
            && tokens[0].bytes().all(|b| b.is_ascii_digit())
        {
            tokens[0].bytes().map(|b| (b - b'0') as usize).collect()
        } else {
            tokens
                .iter()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::NotAPermutation(Vec::new()))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(images)
    }
}

pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if next_lex(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation(cur))
    }
}

/// Advance `v` to its lexicographic successor; false when `v` was the last.
pub(crate) fn next_lex(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The permutation recording the relative order of the letters of `word`.
///
/// Equal letters are ranked by position, earlier first.
pub fn standardize(word: &[usize]) -> Result<Permutation> {
    if word.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| (word[i], i));
    let mut images = alloc::vec![0; word.len()];
    for (rank, &i) in order.iter().enumerate() {
        images[i] = rank + 1;
    }
    Ok(Permutation(images))
}

/// `a <=_L b` in the left weak order, i.e. `Inv(a) ⊆ Inv(b)`.
pub fn weak_bruhat_leq(a: &Permutation, b: &Permutation) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let n = a.len();
    for i in 0..n {
        for j in i + 1..n {
            if a.0[i] > a.0[j] && b.0[i] < b.0[j] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A maximal chain `identity = g_1 < g_2 < ... < g_m = target` of left covers.
///
/// Each step applies `s_p` on the left for the smallest `p` such that `p`
/// precedes `p + 1` in the current permutation and the result stays below
/// `target`.
pub fn maximal_chain_to(target: &Permutation) -> Vec<Permutation> {
    let n = target.len();
    let mut cur = Permutation::identity(n);
    let mut chain = alloc::vec![cur.clone()];
    while cur != *target {
        let step = (1..n).find_map(|p| {
            if cur.position_of(p) > cur.position_of(p + 1) {
                return None;
            }
            let next = cur.left_mul_simple(p);
            match weak_bruhat_leq(&next, target) {
                Ok(true) => Some(next),
                _ => None,
            }
        });
        // Some cover below target always exists while cur < target.
        cur = step.expect("weak order interval has a cover");
        chain.push(cur.clone());
    }
    chain
}
