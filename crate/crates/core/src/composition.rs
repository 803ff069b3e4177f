//! Compositions: ordered lists of positive parts.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        Ok(Composition(parts))
    }

    /// `(k, k, ..., k)` with `n` parts.
    pub fn rectangle(k: usize, n: usize) -> Self {
        assert!(k > 0);
        Composition(alloc::vec![k; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_part(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Each part incremented, then padded with ones to length `size()`.
    pub fn hat(&self) -> Composition {
        let n = self.size();
        let mut parts: Vec<usize> = self.0.iter().map(|p| p + 1).collect();
        parts.resize(n, 1);
        Composition(parts)
    }

    /// Parts sorted weakly decreasing.
    pub fn to_partition(&self) -> Composition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Composition(parts)
    }

    /// Column lengths of the diagram (the conjugate when this is a partition).
    pub fn column_lengths(&self) -> Vec<usize> {
        (1..=self.max_part())
            .map(|j| self.0.iter().filter(|&&p| p >= j).count())
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::ZeroPart))
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// All compositions of `n`, each once.
///
/// A composition of `n` corresponds to the set of its proper partial sums, a
/// subset of `[n-1]`, encoded as the bitmask with bit `i - 1` set when `i` is a
/// partial sum. Compositions come out in increasing order of that mask, so the
/// first is `(n)` and the last is `(1, 1, ..., 1)`.
pub fn compositions_of(n: usize) -> impl Iterator<Item = Composition> {
    assert!(n >= 1, "compositions_of needs n >= 1");
    assert!(n <= 63, "compositions_of supports n <= 63");
    (0u64..1u64 << (n - 1)).map(move |mask| {
        let mut parts = Vec::new();
        let mut last = 0;
        for i in 1..n {
            if mask >> (i - 1) & 1 == 1 {
                parts.push(i - last);
                last = i;
            }
        }
        parts.push(n - last);
        Composition(parts)
    })
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Vec<Composition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rem == 0 {
            out.push(Composition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}
