//! The four commands: enumerate, verify, stats and map.

use std::collections::{BTreeMap, BTreeSet};

use anyhow::{anyhow, bail, Result};
use pct_core::allowable::{
    allowable_pairs, build_graph, is_2112_avoiding, is_acyclic, realize_sct,
};
use pct_core::composition::{compositions_of, partitions_of};
use pct_core::dyck::{
    enumerate_ldyck, labeled_dyck_word, ldyck_to_spct, spct_to_ldyck, word_to_string,
};
use pct_core::hecke::{
    equivalence_classes, is_sink, pi, verify_hecke_relations, HeckeResult, OrbitGraph,
};
use pct_core::perm::{maximal_chain_to, weak_bruhat_leq};
use pct_core::tableau::{
    descent_quadruple, enumerate_spct, enumerate_spct_sigma, enumerate_srt, first_column_descents,
    for_each_spct, hook_length_count, pct_to_rt, rt_to_pct, validate_pct, ColumnDescent,
};
use pct_core::tree::{
    edge_stats, for_each_ltree, ldyck_to_ltree, ltree_to_ldyck, ltree_to_ldyck_traced,
};
use pct_core::{Composition, Permutation, Tableau};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::dot::{orbit_dot, perm_graph_dot, tree_dot};
use crate::format::{parse_json, parse_pair, LdyckJson, TableauJson, TreeJson};
use crate::guard::{factorial, labeled_catalan, refusal, spct_bound};
use crate::report::{Report, Table};
use crate::sample;

fn tableau_json(t: &Tableau) -> String {
    serde_json::to_string(&TableauJson::from_tableau(t)).expect("serializable")
}

fn perms(seq: &[Permutation]) -> Value {
    Value::from(seq.iter().map(|p| p.to_string()).collect::<Vec<_>>())
}

fn guard(estimate: u128, cap: u64, what: &str) -> Result<()> {
    match refusal(estimate, cap, what) {
        Some(msg) => Err(anyhow!(msg)),
        None => Ok(()),
    }
}

fn parking(n: usize) -> u64 {
    (n as u64 + 1).pow(n.saturating_sub(1) as u32)
}

/// Shapes named by `--shape`, or every composition of size `1..=max_n`.
pub fn shape_list(shape: Option<&Composition>, max_n: Option<usize>) -> Result<Vec<Composition>> {
    match (shape, max_n) {
        (Some(s), None) => Ok(vec![s.clone()]),
        (None, Some(n)) => Ok((1..=n).flat_map(compositions_of).collect()),
        _ => bail!("give exactly one of --shape or --max-n"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Spct,
    Srt,
    Ldyck,
    Ltree,
}

/// Count the objects of one kind, optionally collecting them as JSON lines.
pub fn enumerate(
    kind: Kind,
    shape: Option<&Composition>,
    n: Option<usize>,
    sigma: Option<&Permutation>,
    cap: u64,
    mut listing: Option<&mut Vec<String>>,
) -> Result<Report> {
    let mut emit = |v: String| {
        if let Some(l) = listing.as_mut() {
            l.push(v);
        }
    };
    let mut report = Report::new(format!("enumerate {kind:?}").to_lowercase());
    let count = match kind {
        Kind::Spct | Kind::Srt => {
            let shape = shape.ok_or_else(|| anyhow!("--shape is required"))?;
            report = report.param("shape", shape.to_string());
            if kind == Kind::Srt {
                guard(hook_length_count(shape), cap, "this enumeration")?;
                let all = enumerate_srt(shape)?;
                for t in &all {
                    emit(serde_json::to_string(&TableauJson::from_reverse(t))?);
                }
                all.len()
            } else if let Some(sigma) = sigma {
                report = report.param("sigma", sigma.to_string());
                guard(
                    hook_length_count(&shape.to_partition()),
                    cap,
                    "this enumeration",
                )?;
                let all = enumerate_spct_sigma(shape, sigma)?;
                for t in &all {
                    emit(tableau_json(t));
                }
                all.len()
            } else {
                guard(spct_bound(shape), cap, "this enumeration")?;
                let mut c = 0;
                for_each_spct(shape, |t| {
                    emit(tableau_json(t));
                    c += 1;
                });
                c
            }
        }
        Kind::Ldyck | Kind::Ltree => {
            let n = n.ok_or_else(|| anyhow!("--n is required"))?;
            if n == 0 {
                bail!("--n must be at least 1");
            }
            report = report.param("n", n);
            guard(labeled_catalan(n), cap, "this enumeration")?;
            if kind == Kind::Ldyck {
                let all = enumerate_ldyck(n);
                for d in &all {
                    emit(serde_json::to_string(&LdyckJson::from_path(d))?);
                }
                all.len()
            } else {
                let mut c = 0;
                for_each_ltree(n, |t| {
                    emit(serde_json::to_string(&TreeJson::from_tree(t)).expect("serializable"));
                    c += 1;
                });
                c
            }
        }
    };
    report.result("count", count);
    Ok(report)
}

/// Operator relations on every standard PCT of each shape.
pub fn verify_hecke(shapes: &[Composition], cap: u64) -> Result<Report> {
    let est: u128 = shapes.iter().map(spct_bound).sum();
    guard(est, cap, "this suite")?;
    let mut report = Report::new("verify hecke");
    let mut table = Table::new(&["shape", "tableaux", "checks", "pass"]);
    let mut checks = 0;
    for shape in shapes {
        let r = verify_hecke_relations(shape);
        checks += r.checks;
        table.push(vec![
            json!(shape.to_string()),
            json!(r.tableaux),
            json!(r.checks),
            json!(r.passed()),
        ]);
        if let Some(f) = &r.failure {
            report.fail(format!(
                "{:?} fails at {}",
                f.relation,
                tableau_json(&f.tableau)
            ));
        }
    }
    report.result("shapes", shapes.len());
    report.result("checks", checks);
    report.table = Some(table);
    Ok(report)
}

/// Exact counts for two-column shapes, allowable pairs and labeled trees.
pub fn verify_counts(max_n: usize, cap: u64) -> Result<Report> {
    let est: u128 = (1..=max_n)
        .map(|n| 3 * labeled_catalan(n) + factorial(n) * factorial(n))
        .sum();
    guard(est, cap, "this suite")?;
    let mut report = Report::new("verify counts").param("max-n", max_n);
    let mut table = Table::new(&[
        "n",
        "spct",
        "n!Cat_n",
        "classes",
        "sinks",
        "pairs",
        "(n+1)^(n-1)",
        "ltrees",
    ]);
    let mut cols: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for n in 1..=max_n {
        let shape = Composition::rectangle(2, n);
        let all = enumerate_spct(&shape);
        let classes = equivalence_classes(&shape).len();
        let sinks = all.iter().filter(|t| is_sink(t).unwrap_or(false)).count();
        let pairs = allowable_pairs(n).len();
        let mut ltrees = 0usize;
        for_each_ltree(n, |_| ltrees += 1);
        let lc = labeled_catalan(n) as usize;
        let pk = parking(n) as usize;
        for (name, got, want) in [
            ("spct", all.len(), lc),
            ("classes", classes, pk),
            ("sinks", sinks, pk),
            ("pairs", pairs, pk),
            ("ltrees", ltrees, lc),
        ] {
            cols.entry(name).or_default().push(got);
            if got != want {
                report.fail(format!("n={n}: {name} = {got}, expected {want}"));
            }
        }
        table.push(vec![
            json!(n),
            json!(all.len()),
            json!(lc),
            json!(classes),
            json!(sinks),
            json!(pairs),
            json!(pk),
            json!(ltrees),
        ]);
    }
    for (k, v) in cols {
        report.result(k, v);
    }
    report.table = Some(table);
    Ok(report)
}

struct Tally<'a> {
    report: &'a mut Report,
    table: Table,
}

impl Tally<'_> {
    fn row(&mut self, name: &str, size: usize, checked: usize, failures: usize) {
        self.table.push(vec![
            json!(name),
            json!(size),
            json!(checked),
            json!(failures == 0),
        ]);
    }
}

/// Round trips of every bijection, exhaustive up to `n` and sampled above.
pub fn verify_bijections(n: usize, samples: usize, seed: u64, cap: u64) -> Result<Report> {
    let mut est = 0u128;
    for m in 1..=n {
        est += compositions_of(m).map(|a| spct_bound(&a)).sum::<u128>();
        est += partitions_of(m)
            .iter()
            .map(|l| factorial(l.len()) * hook_length_count(l))
            .sum::<u128>();
        est += 4 * labeled_catalan(m);
    }
    guard(est, cap, "this suite")?;
    let mut report = Report::new("verify bijections")
        .param("n", n)
        .param("samples", samples)
        .param("seed", seed);
    let mut tally = Tally {
        report: &mut report,
        table: Table::new(&["bijection", "size", "checked", "pass"]),
    };
    for m in 1..=n {
        // PCT -> RT -> PCT over all shapes of size m.
        let (mut checked, mut bad) = (0, 0);
        for alpha in compositions_of(m) {
            for t in enumerate_spct(&alpha) {
                checked += 1;
                let back = pct_to_rt(&t).and_then(|rt| rt_to_pct(&rt, &t.st_i(1)?));
                if back.as_ref() != Ok(&t) {
                    bad += 1;
                    tally
                        .report
                        .fail(format!("pct-to-rt/rt-to-pct on {}", tableau_json(&t)));
                }
            }
        }
        tally.row("pct-rt", m, checked, bad);
        let (mut checked, mut bad) = (0, 0);
        for lambda in partitions_of(m) {
            for rt in enumerate_srt(&lambda)? {
                for sigma in Permutation::all(lambda.len()) {
                    checked += 1;
                    let back = rt_to_pct(&rt, &sigma).and_then(|t| pct_to_rt(&t));
                    if back.as_ref() != Ok(&rt) {
                        bad += 1;
                        tally.report.fail(format!(
                            "rt-to-pct/pct-to-rt on {} with sigma {sigma}",
                            serde_json::to_string(&TableauJson::from_reverse(&rt))?
                        ));
                    }
                }
            }
        }
        tally.row("rt-pct", m, checked, bad);
        let (mut checked, mut bad) = (0, 0);
        for t in enumerate_spct(&Composition::rectangle(2, m)) {
            checked += 1;
            if spct_to_ldyck(&t).and_then(|d| ldyck_to_spct(&d)).as_ref() != Ok(&t) {
                bad += 1;
                tally.report.fail(format!(
                    "spct-to-ldyck/ldyck-to-spct on {}",
                    tableau_json(&t)
                ));
            }
        }
        tally.row("spct-ldyck", m, checked, bad);
        let (mut checked, mut bad) = (0, 0);
        for d in enumerate_ldyck(m) {
            checked += 1;
            let ok = ldyck_to_spct(&d).and_then(|t| spct_to_ldyck(&t)).as_ref() == Ok(&d)
                && ldyck_to_ltree(&d).and_then(|t| ltree_to_ldyck(&t)).as_ref() == Ok(&d);
            if !ok {
                bad += 1;
                tally
                    .report
                    .fail(format!("labeled Dyck path round trip on {d}"));
            }
        }
        tally.row("ldyck", m, checked, bad);
        let (mut checked, mut bad) = (0, 0);
        let mut failure = None;
        for_each_ltree(m, |t| {
            checked += 1;
            if ltree_to_ldyck(t).and_then(|d| ldyck_to_ltree(&d)).as_ref() != Ok(t) {
                bad += 1;
                failure.get_or_insert_with(|| format!("ltree-to-ldyck/ldyck-to-ltree on {t}"));
            }
        });
        if let Some(f) = failure {
            tally.report.fail(f);
        }
        tally.row("ltree", m, checked, bad);
    }
    if samples > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for m in [n + 1, n + 2] {
            let mut bad = 0;
            for _ in 0..samples {
                let t = sample::random_spct(m, &mut rng);
                if pct_to_rt(&t)
                    .and_then(|rt| rt_to_pct(&rt, &t.st_i(1)?))
                    .as_ref()
                    != Ok(&t)
                {
                    bad += 1;
                    tally
                        .report
                        .fail(format!("sampled pct-rt on {}", tableau_json(&t)));
                }
                let d = sample::random_ldyck(m, &mut rng);
                let ok = ldyck_to_spct(&d).and_then(|t| spct_to_ldyck(&t)).as_ref() == Ok(&d)
                    && ldyck_to_ltree(&d).and_then(|t| ltree_to_ldyck(&t)).as_ref() == Ok(&d);
                if !ok {
                    bad += 1;
                    tally
                        .report
                        .fail(format!("sampled labeled Dyck path round trip on {d}"));
                }
            }
            tally.row("sampled", m, 2 * samples, bad);
        }
    }
    let table = tally.table;
    report.table = Some(table);
    Ok(report)
}

/// Per-class report entry.
fn class_entry(shape: &Composition, signature: &[Permutation], members: &[Tableau]) -> Value {
    let find = |f: fn(&Tableau) -> pct_core::Result<bool>| {
        members
            .iter()
            .filter(|t| f(t).unwrap_or(false))
            .map(|t| serde_json::to_value(TableauJson::from_tableau(t)).expect("serializable"))
            .collect::<Vec<_>>()
    };
    json!({
        "shape": shape.parts(),
        "signature": perms(signature),
        "size": members.len(),
        "sources": find(pct_core::hecke::is_source),
        "sinks": find(is_sink),
        "connected": OrbitGraph::of(members).is_connected(),
    })
}

/// Column-word classes: one source and one sink each, closure under the
/// operators, and the two-column sink criterion. Orbit connectivity is
/// reported, not required.
pub fn verify_classes(
    shapes: &[Composition],
    cap: u64,
    class_report: Option<&mut Vec<Value>>,
) -> Result<Report> {
    let est: u128 = shapes.iter().map(spct_bound).sum();
    guard(est, cap, "this suite")?;
    let mut report = Report::new("verify classes");
    let mut table = Table::new(&[
        "shape",
        "tableaux",
        "classes",
        "one_source_one_sink",
        "connected",
    ]);
    let mut entries = Vec::new();
    for shape in shapes {
        let classes = equivalence_classes(shape);
        let (mut total, mut unique, mut connected) = (0, 0, 0);
        let two_column = shape.parts().iter().all(|&p| p == 2);
        for class in &classes {
            total += class.members.len();
            let (so, si) = (class.sources().len(), class.sinks().len());
            if so == 1 && si == 1 {
                unique += 1;
            } else {
                report.fail(format!(
                    "class {} of shape ({shape}) has {so} sources and {si} sinks",
                    perms(&class.signature)
                ));
            }
            if OrbitGraph::of(&class.members).is_connected() {
                connected += 1;
            }
            for t in &class.members {
                for i in 1..t.size() {
                    match pi(t, i) {
                        Ok(HeckeResult::Moved(u)) if u.st() != class.signature => {
                            report.fail(format!("pi_{i} leaves the class of {}", tableau_json(t)))
                        }
                        Err(e) => report.fail(format!("pi_{i} on {}: {e}", tableau_json(t))),
                        _ => {}
                    }
                }
                if two_column {
                    let ne = first_column_descents(t)?
                        .iter()
                        .filter(|(_, k)| *k == ColumnDescent::NorthEast)
                        .count();
                    if is_sink(t)? != (ne == 0) {
                        report.fail(format!(
                            "sink test disagrees with des_NE on {}",
                            tableau_json(t)
                        ));
                    }
                }
            }
            if class_report.is_some() {
                entries.push(class_entry(shape, &class.signature, &class.members));
            }
        }
        table.push(vec![
            json!(shape.to_string()),
            json!(total),
            json!(classes.len()),
            json!(unique == classes.len()),
            json!(connected),
        ]);
    }
    if let Some(out) = class_report {
        *out = entries;
    }
    report.result("shapes", shapes.len());
    report.table = Some(table);
    Ok(report)
}

/// Orbit graph of all standard PCTs of one shape.
pub fn orbit_graph_dot(shape: &Composition, cap: u64) -> Result<String> {
    guard(spct_bound(shape), cap, "this graph")?;
    Ok(orbit_dot(&OrbitGraph::of(&enumerate_spct(shape))))
}

/// Allowable pairs: count, weak-order agreement, equality with column pairs
/// of two-column tableaux, acyclicity and realization.
pub fn verify_pairs(max_n: usize, cap: u64) -> Result<Report> {
    let est: u128 = (1..=max_n)
        .map(|n| factorial(n) * factorial(n) + labeled_catalan(n))
        .sum();
    guard(est, cap, "this suite")?;
    let mut report = Report::new("verify pairs").param("max-n", max_n);
    let mut table = Table::new(&[
        "n",
        "pairs",
        "(n+1)^(n-1)",
        "compatible",
        "acyclic",
        "realized",
    ]);
    for n in 1..=max_n {
        let pairs = allowable_pairs(n);
        for a in Permutation::all(n) {
            for b in Permutation::all(n) {
                if is_2112_avoiding(&a, &b)? != weak_bruhat_leq(&a, &b)? {
                    report.fail(format!(
                        "(21,12) test disagrees with weak order on ({a}, {b})"
                    ));
                }
            }
        }
        let from_tableaux: BTreeSet<(Permutation, Permutation)> =
            enumerate_spct(&Composition::rectangle(2, n))
                .iter()
                .map(|t| Ok((t.st_i(1)?, t.st_i(2)?)))
                .collect::<pct_core::Result<_>>()?;
        let compatible = from_tableaux == pairs.iter().cloned().collect();
        if !compatible {
            report.fail(format!(
                "n={n}: column pairs of two-column tableaux differ from allowable pairs"
            ));
        }
        let (mut acyclic, mut realized) = (0, 0);
        for (a, b) in &pairs {
            if is_acyclic(&build_graph(&[a.clone(), b.clone()])?) {
                acyclic += 1;
            } else {
                report.fail(format!("graph of ({a}, {b}) has a cycle"));
            }
            match realize_sct(a, b) {
                Ok(_) => realized += 1,
                Err(e) => report.fail(format!("realizing ({a}, {b}): {e}")),
            }
        }
        if pairs.len() as u64 != parking(n) {
            report.fail(format!(
                "n={n}: {} allowable pairs, expected {}",
                pairs.len(),
                parking(n)
            ));
        }
        table.push(vec![
            json!(n),
            json!(pairs.len()),
            json!(parking(n)),
            json!(compatible),
            json!(acyclic),
            json!(realized),
        ]);
    }
    report.table = Some(table);
    Ok(report)
}

/// Joint distributions of the column descent quadruple and the tree edge
/// statistics, plus the per-object transport check.
pub fn stats_quadruple(n: usize, cap: u64) -> Result<Report> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    guard(2 * labeled_catalan(n), cap, "this table")?;
    let mut report = Report::new("stats quadruple").param("n", n);
    type Quad = (usize, usize, usize, usize);
    let mut left: BTreeMap<Quad, usize> = BTreeMap::new();
    let mut right: BTreeMap<Quad, usize> = BTreeMap::new();
    let mut objects = 0;
    for t in enumerate_spct(&Composition::rectangle(2, n)) {
        objects += 1;
        let q = descent_quadruple(&t)?;
        *left.entry(q).or_default() += 1;
        let image = edge_stats(&ldyck_to_ltree(&spct_to_ldyck(&t)?)?).as_tuple();
        if image != q {
            report.fail(format!(
                "quadruple {q:?} maps to {image:?} for {}",
                tableau_json(&t)
            ));
        }
    }
    for_each_ltree(n, |t| {
        *right.entry(edge_stats(t).as_tuple()).or_default() += 1
    });
    let keys: BTreeSet<Quad> = left.keys().chain(right.keys()).copied().collect();
    let mut table = Table::new(&["tuple", "spct", "ltree"]);
    for k in keys {
        table.push(vec![
            json!(format!("{},{},{},{}", k.0, k.1, k.2, k.3)),
            json!(left.get(&k).copied().unwrap_or(0)),
            json!(right.get(&k).copied().unwrap_or(0)),
        ]);
    }
    let equal = left == right;
    if !equal {
        report.fail("distributions differ");
    }
    report.result("objects", objects);
    report.result("tables_equal", equal);
    report.table = Some(table);
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Transform {
    PctToRt,
    RtToPct,
    SpctToLdyck,
    LdyckToSpct,
    LdyckToLtree,
    LtreeToLdyck,
    RealizePair,
}

/// Output of `map`: the report, the bare output object, and a DOT rendering
/// where one exists.
pub struct Mapped {
    pub report: Report,
    pub object: Value,
    pub dot: Option<String>,
}

pub fn map(transform: Transform, input: &str, sigma: Option<&Permutation>) -> Result<Mapped> {
    let name = format!("{transform:?}");
    let mut report = Report::new("map").param("transform", kebab(&name));
    let mut dot = None;
    let object = match transform {
        Transform::PctToRt => {
            let t = parse_json::<TableauJson>(input, "tableau")?.into_tableau()?;
            serde_json::to_value(TableauJson::from_reverse(&pct_to_rt(&t)?))?
        }
        Transform::RtToPct => {
            let sigma = sigma.ok_or_else(|| anyhow!("rt-to-pct needs --sigma"))?;
            report = report.param("sigma", sigma.to_string());
            let rt = parse_json::<TableauJson>(input, "reverse tableau")?.into_reverse()?;
            let t = rt_to_pct(&rt, sigma)?;
            validate_pct(&t)?;
            serde_json::to_value(TableauJson::from_tableau(&t))?
        }
        Transform::SpctToLdyck => {
            let t = parse_json::<TableauJson>(input, "tableau")?.into_tableau()?;
            let d = spct_to_ldyck(&t)?;
            report.result("word", word_to_string(&labeled_dyck_word(&d)?));
            serde_json::to_value(LdyckJson::from_path(&d))?
        }
        Transform::LdyckToSpct => {
            let d = parse_json::<LdyckJson>(input, "labeled Dyck path")?.into_path()?;
            serde_json::to_value(TableauJson::from_tableau(&ldyck_to_spct(&d)?))?
        }
        Transform::LdyckToLtree => {
            let d = parse_json::<LdyckJson>(input, "labeled Dyck path")?.into_path()?;
            let t = ldyck_to_ltree(&d)?;
            report.result("root", t.root());
            report.result(
                "stats",
                Value::from(<[usize; 4]>::from(edge_stats(&t).as_tuple())),
            );
            dot = Some(tree_dot(&t));
            serde_json::to_value(TreeJson::from_tree(&t))?
        }
        Transform::LtreeToLdyck => {
            let t = parse_json::<TreeJson>(input, "labeled tree")?.into_tree()?;
            let (word, trace) = ltree_to_ldyck_traced(&t)?;
            report.result("word", word_to_string(&word));
            report.result(
                "trace",
                trace.iter().map(|s| s.op.to_string()).collect::<Vec<_>>(),
            );
            dot = Some(tree_dot(&t));
            let d = pct_core::dyck::LabeledDyckPath::from_word(&word)?;
            serde_json::to_value(LdyckJson::from_path(&d))?
        }
        Transform::RealizePair => {
            let (a, b) = parse_pair(input)?;
            report = report.param("a", a.to_string()).param("b", b.to_string());
            let t = realize_sct(&a, &b)?;
            let mut seq = maximal_chain_to(&a);
            seq.push(b.clone());
            report.result("sequence", perms(&seq));
            dot = Some(perm_graph_dot(&build_graph(&seq)?));
            serde_json::to_value(TableauJson::from_tableau(&t))?
        }
    };
    report.result("output", object.clone());
    Ok(Mapped {
        report,
        object,
        dot,
    })
}

fn kebab(camel: &str) -> String {
    let mut s = String::new();
    for (k, c) in camel.chars().enumerate() {
        if c.is_ascii_uppercase() {
            if k > 0 {
                s.push('-');
            }
            s.push(c.to_ascii_lowercase());
        } else {
            s.push(c);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: u64 = crate::guard::DEFAULT_MAX_OBJECTS;

    #[test]
    fn kebab_names() {
        assert_eq!(kebab("PctToRt"), "pct-to-rt");
        assert_eq!(kebab("RealizePair"), "realize-pair");
    }

    #[test]
    fn enumerate_counts() {
        let shape: Composition = "2,2,2".parse().unwrap();
        let r = enumerate(Kind::Spct, Some(&shape), None, None, CAP, None).unwrap();
        assert_eq!(r.results["count"], 30);
        let r = enumerate(
            Kind::Srt,
            Some(&"2,2".parse().unwrap()),
            None,
            None,
            CAP,
            None,
        )
        .unwrap();
        assert_eq!(r.results["count"], 2);
        let r = enumerate(Kind::Ltree, None, Some(1), None, CAP, None).unwrap();
        assert_eq!(r.results["count"], 1);
        let mut lines = Vec::new();
        enumerate(Kind::Ldyck, None, Some(2), None, CAP, Some(&mut lines)).unwrap();
        assert_eq!(lines.len(), 4);
    }

    #[test]
    fn guard_refuses() {
        let e = enumerate(Kind::Ltree, None, Some(9), None, 1000, None).unwrap_err();
        assert!(e.to_string().contains("refusing"));
    }

    #[test]
    fn counts_suite() {
        let r = verify_counts(4, CAP).unwrap();
        assert!(r.passed);
        assert_eq!(r.results["sinks"], json!([1, 3, 16, 125]));
    }

    #[test]
    fn small_suites_pass() {
        assert!(
            verify_hecke(&["1,3,2,4".parse().unwrap()], CAP)
                .unwrap()
                .passed
        );
        assert!(verify_bijections(3, 3, 0, CAP).unwrap().passed);
        let mut entries = Vec::new();
        let r =
            verify_classes(&shape_list(None, Some(4)).unwrap(), CAP, Some(&mut entries)).unwrap();
        assert!(r.passed);
        assert_eq!(
            entries
                .iter()
                .filter(|e| e["shape"] == json!([2, 2]))
                .count(),
            3
        );
        assert!(verify_pairs(3, CAP).unwrap().passed);
    }

    #[test]
    fn stats_tables() {
        let r = stats_quadruple(1, CAP).unwrap();
        assert!(r.passed);
        let t = r.table.unwrap();
        assert_eq!(t.rows, vec![vec![json!("0,0,0,0"), json!(1), json!(1)]]);
        let r = stats_quadruple(2, CAP).unwrap();
        assert_eq!(r.results["objects"], 4);
        assert!(r.passed);
    }

    #[test]
    fn map_realize() {
        let m = map(Transform::RealizePair, "1 2 3\n2 3 1\n", None).unwrap();
        let t = serde_json::from_value::<TableauJson>(m.object)
            .unwrap()
            .into_tableau()
            .unwrap();
        assert!(validate_pct(&t).unwrap().is_identity());
        assert!(m.dot.unwrap().contains("digraph G"));
    }
}
