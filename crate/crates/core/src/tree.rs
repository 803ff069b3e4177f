//! Labeled plane binary trees and the two algorithms relating them to
//! labeled Dyck paths.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dyck::{labeled_dyck_word, runs, LabeledDyckPath, Letter};
use crate::{Error, Permutation, Result};

/// A binary tree on labels `1..=n`, stored as child arrays indexed by label.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LabeledBinaryTree {
    root: usize,
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
}

impl LabeledBinaryTree {
    /// `left[k - 1]` and `right[k - 1]` are the children of node `k`.
    pub fn new(root: usize, left: Vec<Option<usize>>, right: Vec<Option<usize>>) -> Result<Self> {
        let n = left.len();
        let bad = |m: alloc::string::String| Err(Error::InvalidTree(m));
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        if right.len() != n {
            return Err(Error::SizeMismatch {
                left: n,
                right: right.len(),
            });
        }
        if root == 0 || root > n {
            return bad(format!("root {root} outside 1..={n}"));
        }
        let mut parent = vec![0usize; n + 1];
        for (k, child) in left.iter().chain(right.iter()).enumerate() {
            let Some(c) = *child else { continue };
            let p = k % n + 1;
            if c == 0 || c > n {
                return bad(format!("child {c} of node {p} outside 1..={n}"));
            }
            if c == root {
                return bad(format!("root {root} appears as a child of {p}"));
            }
            if parent[c] != 0 {
                return bad(format!("node {c} has two parents"));
            }
            parent[c] = p;
        }
        let t = LabeledBinaryTree { root, left, right };
        if t.preorder().len() != n {
            return bad(format!("not every node is reachable from root {root}"));
        }
        Ok(t)
    }

    pub fn leaf(label: usize) -> Result<Self> {
        if label != 1 {
            return Err(Error::InvalidTree(format!(
                "single node must be labeled 1, got {label}"
            )));
        }
        LabeledBinaryTree::new(1, vec![None], vec![None])
    }

    pub fn size(&self) -> usize {
        self.left.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn left(&self, k: usize) -> Option<usize> {
        self.left.get(k.wrapping_sub(1)).copied().flatten()
    }

    pub fn right(&self, k: usize) -> Option<usize> {
        self.right.get(k.wrapping_sub(1)).copied().flatten()
    }

    /// Labels in preorder (node, left subtree, right subtree).
    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size());
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            if out.len() > self.size() {
                break;
            }
            out.push(v);
            if let Some(r) = self.right(v) {
                stack.push(r);
            }
            if let Some(l) = self.left(v) {
                stack.push(l);
            }
        }
        out
    }

    /// Nodes of the left path starting at `v`, top to bottom.
    pub fn left_path(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(l) = self.left(cur) {
            path.push(l);
            cur = l;
        }
        path
    }
}

impl fmt::Display for LabeledBinaryTree {
    /// Bracket notation: `label(left,right)`, with `.` for an absent child.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &LabeledBinaryTree, v: Option<usize>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match v {
                None => f.write_str("."),
                Some(v) => {
                    write!(f, "{v}")?;
                    if t.left(v).is_some() || t.right(v).is_some() {
                        f.write_str("(")?;
                        go(t, t.left(v), f)?;
                        f.write_str(",")?;
                        go(t, t.right(v), f)?;
                        f.write_str(")")?;
                    }
                    Ok(())
                }
            }
        }
        go(self, Some(self.root), f)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeftPath {
    /// Labels from the top of the path down.
    pub nodes: Vec<usize>,
    /// Node whose right child is the top of this path; `None` for the root path.
    pub parent: Option<usize>,
}

/// Maximal left path decomposition, paths ordered by their tops in preorder
/// (root path first).
pub fn mlpd(t: &LabeledBinaryTree) -> Vec<LeftPath> {
    let mut right_parent = vec![None; t.size() + 1];
    for p in 1..=t.size() {
        if let Some(r) = t.right(p) {
            right_parent[r] = Some(p);
        }
    }
    t.preorder()
        .into_iter()
        .filter(|&v| v == t.root || right_parent[v].is_some())
        .map(|v| LeftPath {
            nodes: t.left_path(v),
            parent: right_parent[v],
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct EdgeStats {
    pub lasc: usize,
    pub ldes: usize,
    pub rasc: usize,
    pub rdes: usize,
}

impl EdgeStats {
    pub fn as_tuple(&self) -> (usize, usize, usize, usize) {
        (self.lasc, self.ldes, self.rasc, self.rdes)
    }
}

pub fn edge_stats(t: &LabeledBinaryTree) -> EdgeStats {
    let mut s = EdgeStats::default();
    for p in 1..=t.size() {
        if let Some(q) = t.left(p) {
            if p < q {
                s.lasc += 1;
            } else {
                s.ldes += 1;
            }
        }
        if let Some(q) = t.right(p) {
            if p < q {
                s.rasc += 1;
            } else {
                s.rdes += 1;
            }
        }
    }
    s
}

/// Runs, read right to left, become left paths; each later run hangs as the
/// right subtree of the label on the up-step that follows it.
pub fn ldyck_to_ltree(d: &LabeledDyckPath) -> Result<LabeledBinaryTree> {
    let n = d.semi_length();
    let word = labeled_dyck_word(d)?;
    let mut left = vec![None; n];
    let mut right = vec![None; n];
    let rs = runs(d);
    let mut root = 0;
    for (i, run) in rs.iter().enumerate() {
        let top = *run.labels.last().ok_or(Error::Internal("empty run"))?;
        for w in run.labels.windows(2) {
            left[w[1] - 1] = Some(w[0]);
        }
        if i == 0 {
            root = top;
            continue;
        }
        let j = match word.get(run.last + 1) {
            Some(Letter::Up(j)) => *j,
            _ => return Err(Error::Internal("run not followed by an up-step")),
        };
        if right[j - 1].is_some() {
            return Err(Error::Internal("right child assigned twice"));
        }
        right[j - 1] = Some(top);
    }
    LabeledBinaryTree::new(root, left, right)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Op {
    Push(usize),
    Pop(usize),
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::Push(k) => write!(f, "push {k}"),
            Op::Pop(k) => write!(f, "pop {k}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceStep {
    pub op: Op,
    /// Contents of the queue after the operation, ascending.
    pub queue: Vec<usize>,
}

/// The push/pop procedure, returning the labeled word and its trace.
pub fn ltree_to_ldyck_traced(t: &LabeledBinaryTree) -> Result<(Vec<Letter>, Vec<TraceStep>)> {
    let n = t.size();
    let mut queue = BTreeSet::new();
    let mut word = Vec::with_capacity(2 * n);
    let mut trace = Vec::with_capacity(2 * n);
    let mut current = Some(t.root());
    while trace.len() < 2 * n {
        if let Some(top) = current.take() {
            for v in t.left_path(top) {
                if !queue.insert(v) {
                    return Err(Error::Internal("node pushed twice"));
                }
                word.push(Letter::Down(v));
                trace.push(TraceStep {
                    op: Op::Push(v),
                    queue: queue.iter().copied().collect(),
                });
            }
        } else {
            let m = queue
                .pop_first()
                .ok_or(Error::Internal("pop on an empty queue"))?;
            word.push(Letter::Up(m));
            trace.push(TraceStep {
                op: Op::Pop(m),
                queue: queue.iter().copied().collect(),
            });
            current = t.right(m);
        }
    }
    if trace.len() != 2 * n || !queue.is_empty() {
        return Err(Error::Internal("push/pop count mismatch"));
    }
    // Letters were prepended in the procedure.
    word.reverse();
    Ok((word, trace))
}

pub fn ltree_to_ldyck(t: &LabeledBinaryTree) -> Result<LabeledDyckPath> {
    let (word, _) = ltree_to_ldyck_traced(t)?;
    LabeledDyckPath::from_word(&word)
}

/// Left and right child arrays over preorder indices.
type Shape = (Vec<Option<usize>>, Vec<Option<usize>>);

/// Unlabeled shapes on `n` nodes.
fn shapes(n: usize) -> Vec<Shape> {
    if n == 0 {
        return vec![(Vec::new(), Vec::new())];
    }
    let mut out = Vec::new();
    for l in 0..n {
        let r = n - 1 - l;
        for (ll, lr) in shapes(l) {
            for (rl, rr) in shapes(r) {
                let mut left = vec![if l > 0 { Some(1) } else { None }];
                let mut right = vec![if r > 0 { Some(l + 1) } else { None }];
                left.extend(ll.iter().map(|c| c.map(|x| x + 1)));
                right.extend(lr.iter().map(|c| c.map(|x| x + 1)));
                left.extend(rl.iter().map(|c| c.map(|x| x + l + 1)));
                right.extend(rr.iter().map(|c| c.map(|x| x + l + 1)));
                out.push((left, right));
            }
        }
    }
    out
}

/// Every labeled binary tree on `n` nodes: each shape, then every labeling
/// of its preorder by a permutation in lexicographic order.
pub fn for_each_ltree<F: FnMut(&LabeledBinaryTree)>(n: usize, mut f: F) {
    for (sl, sr) in shapes(n) {
        for sigma in Permutation::all(n) {
            let lab = |i: usize| sigma.images()[i];
            let mut left = vec![None; n];
            let mut right = vec![None; n];
            for i in 0..n {
                left[lab(i) - 1] = sl[i].map(lab);
                right[lab(i) - 1] = sr[i].map(lab);
            }
            let t = LabeledBinaryTree::new(lab(0), left, right).expect("generated tree is valid");
            f(&t);
        }
    }
}

pub fn enumerate_ltrees(n: usize) -> Vec<LabeledBinaryTree> {
    let mut out = Vec::new();
    for_each_ltree(n, |t| out.push(t.clone()));
    out
}
