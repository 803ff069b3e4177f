//! The 0-Hecke operators on standard PCTs of a fixed shape.
//!
//! `pi(t, i)` fixes `t` when `i` is not a descent, sends it to zero when `i`
//! is an attacking descent, and swaps `i` and `i + 1` otherwise.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::tableau::{descent_set, enumerate_spct, validate_pct};
use crate::{Composition, Error, Permutation, Result, Tableau};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DescentKind {
    NotDescent,
    /// Same column, or adjacent columns with `i + 1` strictly southeast of `i`.
    AttackingDescent,
    NonattackingDescent,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HeckeResult {
    Fixed,
    Zero,
    Moved(Tableau),
}

fn require_standard_pct(t: &Tableau) -> Result<()> {
    validate_pct(t)?;
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    Ok(())
}

fn check_index(t: &Tableau, i: usize) -> Result<()> {
    let max = t.size().saturating_sub(1);
    if i == 0 || i > max {
        return Err(Error::IndexOutOfRange { index: i, max });
    }
    Ok(())
}

/// Classification from the cells of `i` and `i + 1`.
fn kind_at(pos_i: (usize, usize), pos_next: (usize, usize)) -> DescentKind {
    let ((ri, ci), (rj, cj)) = (pos_i, pos_next);
    if cj < ci {
        DescentKind::NotDescent
    } else if cj == ci || (cj == ci + 1 && rj > ri) {
        DescentKind::AttackingDescent
    } else {
        DescentKind::NonattackingDescent
    }
}

pub fn classify(t: &Tableau, i: usize) -> Result<DescentKind> {
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    check_index(t, i)?;
    let pos = t.positions();
    Ok(kind_at(pos[i], pos[i + 1]))
}

/// Apply the operator `pi_i` to a standard PCT.
pub fn pi(t: &Tableau, i: usize) -> Result<HeckeResult> {
    require_standard_pct(t)?;
    check_index(t, i)?;
    let pos = t.positions();
    Ok(match kind_at(pos[i], pos[i + 1]) {
        DescentKind::NotDescent => HeckeResult::Fixed,
        DescentKind::AttackingDescent => HeckeResult::Zero,
        DescentKind::NonattackingDescent => {
            let moved = t.swap_entries(i);
            if validate_pct(&moved).is_err() {
                return Err(Error::Internal("nonattacking swap left the PCT set"));
            }
            HeckeResult::Moved(moved)
        }
    })
}

/// `pi_i` on an element of the tableaux-plus-zero set, `None` standing for zero.
pub fn act(t: Option<&Tableau>, i: usize) -> Result<Option<Tableau>> {
    let Some(t) = t else { return Ok(None) };
    Ok(match pi(t, i)? {
        HeckeResult::Fixed => Some(t.clone()),
        HeckeResult::Zero => None,
        HeckeResult::Moved(m) => Some(m),
    })
}

/// Every non-descent `i < n` has `i + 1` in the cell immediately left of `i`.
pub fn is_source(t: &Tableau) -> Result<bool> {
    let des = descent_set(t)?;
    let pos = t.positions();
    Ok((1..t.size())
        .filter(|i| !des.contains(i))
        .all(|i| pos[i + 1].0 == pos[i].0 && pos[i + 1].1 + 1 == pos[i].1))
}

/// Every descent is attacking.
pub fn is_sink(t: &Tableau) -> Result<bool> {
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    let pos = t.positions();
    Ok((1..t.size()).all(|i| kind_at(pos[i], pos[i + 1]) != DescentKind::NonattackingDescent))
}

/// Which operator relation failed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relation {
    /// `pi_i` produced a filling outside the standard PCTs of the shape.
    Closure { i: usize },
    /// `pi_i pi_i = pi_i`.
    Idempotent { i: usize },
    /// `pi_i pi_j = pi_j pi_i` for `|i - j| >= 2`.
    Commute { i: usize, j: usize },
    /// `pi_i pi_{i+1} pi_i = pi_{i+1} pi_i pi_{i+1}`.
    Braid { i: usize },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationFailure {
    pub relation: Relation,
    pub tableau: Tableau,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeReport {
    pub shape: Composition,
    pub tableaux: usize,
    /// Number of pointwise relation instances compared.
    pub checks: usize,
    pub failure: Option<RelationFailure>,
}

impl HeckeReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Transition table of all `pi_i` on `SPCT(shape)`: `table[t][i - 1]` is the
/// image index, `None` for zero.
pub struct ActionTable {
    pub tableaux: Vec<Tableau>,
    pub table: Vec<Vec<Option<usize>>>,
}

impl ActionTable {
    /// Builds the table; `Err` carries the first operator image that is not a
    /// standard PCT of the shape.
    pub fn new(shape: &Composition) -> core::result::Result<Self, RelationFailure> {
        let tableaux = enumerate_spct(shape);
        let index: BTreeMap<&Tableau, usize> =
            tableaux.iter().enumerate().map(|(k, t)| (t, k)).collect();
        let n = shape.size();
        let mut table = Vec::with_capacity(tableaux.len());
        for (k, t) in tableaux.iter().enumerate() {
            let pos = t.positions();
            let mut row = Vec::with_capacity(n.saturating_sub(1));
            for i in 1..n {
                row.push(match kind_at(pos[i], pos[i + 1]) {
                    DescentKind::NotDescent => Some(k),
                    DescentKind::AttackingDescent => None,
                    DescentKind::NonattackingDescent => {
                        let moved = t.swap_entries(i);
                        match index.get(&moved) {
                            Some(&m) => Some(m),
                            None => {
                                return Err(RelationFailure {
                                    relation: Relation::Closure { i },
                                    tableau: t.clone(),
                                })
                            }
                        }
                    }
                });
            }
            table.push(row);
        }
        Ok(ActionTable { tableaux, table })
    }

    /// Apply `pi_i` to a state, `None` being zero.
    pub fn apply(&self, state: Option<usize>, i: usize) -> Option<usize> {
        state.and_then(|k| self.table[k][i - 1])
    }

    /// Apply `pi_{w[0]} pi_{w[1]} ... ` (rightmost first) to tableau `k`.
    pub fn apply_word(&self, k: usize, word: &[usize]) -> Option<usize> {
        word.iter()
            .rev()
            .try_fold(k, |s, &i| self.apply(Some(s), i))
    }
}

/// Check the 0-Hecke relations pointwise on every standard PCT of `shape`.
pub fn verify_hecke_relations(shape: &Composition) -> HeckeReport {
    let n = shape.size();
    let mut report = HeckeReport {
        shape: shape.clone(),
        tableaux: 0,
        checks: 0,
        failure: None,
    };
    let action = match ActionTable::new(shape) {
        Ok(a) => a,
        Err(f) => {
            report.failure = Some(f);
            return report;
        }
    };
    report.tableaux = action.tableaux.len();
    for k in 0..action.tableaux.len() {
        let fail = |relation| {
            Some(RelationFailure {
                relation,
                tableau: action.tableaux[k].clone(),
            })
        };
        for i in 1..n {
            report.checks += 1;
            if action.apply_word(k, &[i, i]) != action.apply_word(k, &[i]) {
                report.failure = fail(Relation::Idempotent { i });
                return report;
            }
            for j in i + 2..n {
                report.checks += 1;
                if action.apply_word(k, &[i, j]) != action.apply_word(k, &[j, i]) {
                    report.failure = fail(Relation::Commute { i, j });
                    return report;
                }
            }
            if i + 1 < n {
                report.checks += 1;
                if action.apply_word(k, &[i, i + 1, i]) != action.apply_word(k, &[i + 1, i, i + 1])
                {
                    report.failure = fail(Relation::Braid { i });
                    return report;
                }
            }
        }
    }
    report
}

/// One class of the relation "same standardized column words".
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquivalenceClass {
    pub signature: Vec<Permutation>,
    pub members: Vec<Tableau>,
}

impl EquivalenceClass {
    pub fn sources(&self) -> Vec<&Tableau> {
        self.members
            .iter()
            .filter(|t| is_source(t).unwrap_or(false))
            .collect()
    }

    pub fn sinks(&self) -> Vec<&Tableau> {
        self.members
            .iter()
            .filter(|t| is_sink(t).unwrap_or(false))
            .collect()
    }
}

/// Partition `SPCT(shape)` by standardized column word, classes sorted by
/// signature and members in enumeration order.
pub fn equivalence_classes(shape: &Composition) -> Vec<EquivalenceClass> {
    classes_of(enumerate_spct(shape))
}

pub(crate) fn classes_of(tableaux: Vec<Tableau>) -> Vec<EquivalenceClass> {
    let mut map: BTreeMap<Vec<Permutation>, Vec<Tableau>> = BTreeMap::new();
    for t in tableaux {
        map.entry(t.st()).or_default().push(t);
    }
    map.into_iter()
        .map(|(signature, members)| EquivalenceClass { signature, members })
        .collect()
}

/// Tableaux of a set joined by their `Moved` transitions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitGraph {
    pub nodes: Vec<Tableau>,
    /// `(from, to, i)`: `pi_i` moves `nodes[from]` to `nodes[to]`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl OrbitGraph {
    pub fn of(tableaux: &[Tableau]) -> Self {
        let index: BTreeMap<&Tableau, usize> =
            tableaux.iter().enumerate().map(|(k, t)| (t, k)).collect();
        let mut edges = Vec::new();
        for (k, t) in tableaux.iter().enumerate() {
            let pos = t.positions();
            for i in 1..t.size() {
                if kind_at(pos[i], pos[i + 1]) == DescentKind::NonattackingDescent {
                    if let Some(&m) = index.get(&t.swap_entries(i)) {
                        edges.push((k, m, i));
                    }
                }
            }
        }
        OrbitGraph {
            nodes: tableaux.to_vec(),
            edges,
        }
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        let n = self.nodes.len();
        if n == 0 {
            return true;
        }
        let mut adj = alloc::vec![Vec::new(); n];
        for &(a, b, _) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = alloc::vec![false; n];
        let mut stack = alloc::vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}
