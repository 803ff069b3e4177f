//! Allowable pairs of permutations, the graph G(σ₁,…,σ_k), and realization of
//! allowable sequences as standard tableaux of rectangular shape.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::perm::{maximal_chain_to, weak_bruhat_leq};
use crate::tableau::validate_pct;
use crate::{Error, Permutation, Result, Tableau};

fn same_len(a: &Permutation, b: &Permutation) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(())
}

/// Every inversion of `a` is an inversion of `b`.
pub fn is_2112_avoiding(a: &Permutation, b: &Permutation) -> Result<bool> {
    same_len(a, b)?;
    let n = a.len();
    for i in 1..=n {
        for j in i + 1..=n {
            if a.at(i) > a.at(j) && b.at(i) < b.at(j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// No positions i<j<k carrying 123 in `a` and 312 in `b`.
pub fn is_123312_avoiding(a: &Permutation, b: &Permutation) -> Result<bool> {
    same_len(a, b)?;
    let n = a.len();
    for j in 1..=n {
        for i in 1..j {
            if a.at(i) > a.at(j) {
                continue;
            }
            for k in j + 1..=n {
                // 312 in b: b(j) < b(k) < b(i).
                if a.at(j) < a.at(k) && b.at(j) < b.at(k) && b.at(k) < b.at(i) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn is_allowable_pair(a: &Permutation, b: &Permutation) -> Result<bool> {
    Ok(is_2112_avoiding(a, b)? && is_123312_avoiding(a, b)?)
}

/// Index of the first non-allowable consecutive pair, if any.
fn first_bad_pair(seq: &[Permutation]) -> Result<Option<usize>> {
    for (j, w) in seq.windows(2).enumerate() {
        if !is_allowable_pair(&w[0], &w[1])? {
            return Ok(Some(j + 1));
        }
    }
    Ok(None)
}

pub fn is_allowable_sequence(seq: &[Permutation]) -> Result<bool> {
    Ok(first_bad_pair(seq)?.is_none())
}

/// All allowable pairs in S_n, lexicographic.
pub fn allowable_pairs(n: usize) -> Vec<(Permutation, Permutation)> {
    let all: Vec<Permutation> = Permutation::all(n).collect();
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            if weak_bruhat_leq(a, b).unwrap_or(false) && is_123312_avoiding(a, b).unwrap_or(false) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum EdgeKind {
    Horizontal,
    Vertical,
    Diagonal,
}

/// A cell `(row, column)`, 1-indexed.
pub type Node = (usize, usize);

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermGraph {
    n: usize,
    k: usize,
    edges: Vec<(Node, Node, EdgeKind)>,
}

impl PermGraph {
    /// A graph on the `n × k` grid with arbitrary edges.
    pub fn from_edges(n: usize, k: usize, edges: Vec<(Node, Node, EdgeKind)>) -> Result<Self> {
        for &((r1, c1), (r2, c2), _) in &edges {
            for (r, c) in [(r1, c1), (r2, c2)] {
                if r == 0 || r > n || c == 0 || c > k {
                    return Err(Error::IndexOutOfRange {
                        index: if r == 0 || r > n { r } else { c },
                        max: if r == 0 || r > n { n } else { k },
                    });
                }
            }
        }
        Ok(PermGraph { n, k, edges })
    }

    pub fn rows(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[(Node, Node, EdgeKind)] {
        &self.edges
    }

    pub fn count(&self, kind: EdgeKind) -> usize {
        self.edges.iter().filter(|e| e.2 == kind).count()
    }

    fn index(&self, (r, c): Node) -> usize {
        (c - 1) * self.n + (r - 1)
    }

    fn successors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n * self.k];
        for &(from, to, _) in &self.edges {
            adj[self.index(from)].push(self.index(to));
        }
        adj
    }
}

/// The graph of an allowable sequence with at least two columns.
pub fn build_graph(seq: &[Permutation]) -> Result<PermGraph> {
    if seq.is_empty() {
        return Err(Error::EmptyInput);
    }
    if seq.len() < 2 {
        return Err(Error::WrongShape("at least two columns"));
    }
    for p in &seq[1..] {
        same_len(&seq[0], p)?;
    }
    if let Some(position) = first_bad_pair(seq)? {
        return Err(Error::NotAllowable { position });
    }
    build_graph_permissive(seq)
}

/// Same edge rules without the allowability or column-count checks.
pub fn build_graph_permissive(seq: &[Permutation]) -> Result<PermGraph> {
    let k = seq.len();
    let n = seq.first().map_or(0, Permutation::len);
    for p in seq {
        same_len(&seq[0], p)?;
    }
    let mut edges = Vec::new();
    for j in 1..=k {
        let s = &seq[j - 1];
        for i in 1..=n {
            if j < k {
                edges.push(((i, j), (i, j + 1), EdgeKind::Horizontal));
            }
        }
        for p in 1..=n {
            for i in 1..=n {
                if i != p && s.at(i) < s.at(p) {
                    edges.push(((p, j), (i, j), EdgeKind::Vertical));
                }
            }
        }
        if j >= 2 {
            for p in 1..=n {
                for i in 1..p {
                    if s.at(i) < s.at(p) {
                        edges.push(((p, j), (i, j - 1), EdgeKind::Diagonal));
                    }
                }
            }
        }
    }
    Ok(PermGraph { n, k, edges })
}

pub fn is_acyclic(g: &PermGraph) -> bool {
    let adj = g.successors();
    let mut indeg = vec![0usize; adj.len()];
    for out in &adj {
        for &v in out {
            indeg[v] += 1;
        }
    }
    let mut ready: VecDeque<usize> = (0..adj.len()).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(u) = ready.pop_front() {
        seen += 1;
        for &v in &adj[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                ready.push_back(v);
            }
        }
    }
    seen == adj.len()
}

/// Label nodes 1, 2, … so every edge points from a larger label to a
/// smaller one. At each step the smallest (column, row) among nodes whose
/// successors are all labeled gets the next label. Row `i` of the result is
/// `(i,1), …, (i,k)`.
pub fn topological_spct(g: &PermGraph) -> Result<Tableau> {
    let adj = g.successors();
    let total = adj.len();
    let mut pending: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut preds = vec![Vec::new(); total];
    for (u, out) in adj.iter().enumerate() {
        for &v in out {
            preds[v].push(u);
        }
    }
    // Node indices already order by (column, row).
    let mut ready: alloc::collections::BTreeSet<usize> =
        (0..total).filter(|&v| pending[v] == 0).collect();
    let mut label = vec![0usize; total];
    for next in 1..=total {
        let v = ready.pop_first().ok_or(Error::Cyclic)?;
        label[v] = next;
        for &u in &preds[v] {
            pending[u] -= 1;
            if pending[u] == 0 {
                ready.insert(u);
            }
        }
    }
    let rows = (1..=g.n)
        .map(|i| (1..=g.k).map(|j| label[g.index((i, j))]).collect())
        .collect();
    Tableau::new(rows)
}

/// Realize an allowable pair `(a, b)` as a standard composition tableau of
/// rectangular shape whose last two standardized columns are `a` and `b`.
/// The earlier columns follow the canonical maximal chain up to `a`.
pub fn realize_sct(a: &Permutation, b: &Permutation) -> Result<Tableau> {
    same_len(a, b)?;
    if a.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !is_allowable_pair(a, b)? {
        return Err(Error::NotAllowable { position: 1 });
    }
    let mut seq = maximal_chain_to(a);
    seq.push(b.clone());
    let t = topological_spct(&build_graph(&seq)?)?;
    let sigma = validate_pct(&t)?;
    let k = seq.len();
    if !sigma.is_identity() || t.st_i(k - 1)? != *a || t.st_i(k)? != *b {
        return Err(Error::Internal(
            "realized tableau does not reproduce the pair",
        ));
    }
    Ok(t)
}

/// Reference check for `is_123312_avoiding` by standardizing every triple.
#[cfg(test)]
fn pattern_oracle(a: &Permutation, b: &Permutation) -> bool {
    use crate::perm::standardize;
    let n = a.len();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let sa = standardize(&[a.at(i), a.at(j), a.at(k)]).unwrap();
                let sb = standardize(&[b.at(i), b.at(j), b.at(k)]).unwrap();
                if sa.images() == [1, 2, 3] && sb.images() == [3, 1, 2] {
                    return false;
                }
            }
        }
    }
    true
}
