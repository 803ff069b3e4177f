//! Dyck paths, labeled Dyck paths, labeled Dyck words, and the bijection
//! between two-column standard PCTs and labeled Dyck paths.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::tableau::validate_pct;
use crate::{Error, Permutation, Result, ReverseTableau, Tableau};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Step {
    Up,
    Down,
}

/// Steps of a labeled Dyck path. Up-step labels are derived, never stored.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LStep {
    Up,
    Down(usize),
}

/// A letter of a fully labeled word: `U<k>` or `D<k>`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    Up(usize),
    Down(usize),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Up(k) => write!(f, "U{k}"),
            Letter::Down(k) => write!(f, "D{k}"),
        }
    }
}

/// Space-separated rendering of a labeled word.
pub fn word_to_string(word: &[Letter]) -> String {
    let mut s = String::new();
    for (k, l) in word.iter().enumerate() {
        if k > 0 {
            s.push(' ');
        }
        s.push_str(&format!("{l}"));
    }
    s
}

/// Parse `"U7 U3 D7 D3"`-style words (whitespace optional between letters).
pub fn parse_word(s: &str) -> Result<Vec<Letter>> {
    let bad = |msg: &str| Error::InvalidDyckPath(String::from(msg));
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    while k < bytes.len() {
        let ch = bytes[k];
        if ch.is_ascii_whitespace() || ch == b',' {
            k += 1;
            continue;
        }
        let up = match ch {
            b'U' | b'u' => true,
            b'D' | b'd' => false,
            _ => return Err(bad("expected U or D")),
        };
        k += 1;
        let start = k;
        while k < bytes.len() && bytes[k].is_ascii_digit() {
            k += 1;
        }
        let label: usize = s[start..k].parse().map_err(|_| bad("missing label"))?;
        out.push(if up {
            Letter::Up(label)
        } else {
            Letter::Down(label)
        });
    }
    Ok(out)
}

fn check_heights<I: Iterator<Item = bool>>(ups: I) -> Result<usize> {
    let mut h: i64 = 0;
    let mut len = 0;
    for up in ups {
        h += if up { 1 } else { -1 };
        len += 1;
        if h < 0 {
            return Err(Error::InvalidDyckPath(format!(
                "path dips below zero at step {len}"
            )));
        }
    }
    if h != 0 {
        return Err(Error::InvalidDyckPath(format!("path ends at height {h}")));
    }
    Ok(len / 2)
}

/// Split points between prime factors: indices where the height returns to 0.
fn factor_ends<I: Iterator<Item = bool>>(ups: I) -> Vec<usize> {
    let mut h = 0i64;
    let mut ends = Vec::new();
    for (k, up) in ups.enumerate() {
        h += if up { 1 } else { -1 };
        if h == 0 {
            ends.push(k + 1);
        }
    }
    ends
}

fn split_at_ends<T: Clone>(steps: &[T], ends: &[usize]) -> Vec<Vec<T>> {
    let mut start = 0;
    ends.iter()
        .map(|&e| {
            let f = steps[start..e].to_vec();
            start = e;
            f
        })
        .collect()
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DyckPath(Vec<Step>);

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        check_heights(steps.iter().map(|s| *s == Step::Up))?;
        Ok(DyckPath(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn semi_length(&self) -> usize {
        self.0.len() / 2
    }

    /// The unique factorization into prime paths.
    pub fn prime_factors(&self) -> Vec<DyckPath> {
        let ends = factor_ends(self.0.iter().map(|s| *s == Step::Up));
        split_at_ends(&self.0, &ends)
            .into_iter()
            .map(DyckPath)
            .collect()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(if *s == Step::Up { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                _ => Err(Error::InvalidDyckPath(format!(
                    "unexpected character {c:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

/// A Dyck path with distinct labels `1..=n` on its down-steps.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LabeledDyckPath(Vec<LStep>);

impl LabeledDyckPath {
    pub fn new(steps: Vec<LStep>) -> Result<Self> {
        let n = check_heights(steps.iter().map(|s| *s == LStep::Up))?;
        let labels: Vec<usize> = steps
            .iter()
            .filter_map(|s| match s {
                LStep::Down(k) => Some(*k),
                LStep::Up => None,
            })
            .collect();
        if Permutation::new(labels).is_err() {
            return Err(Error::InvalidDyckPath(format!(
                "down-step labels are not a permutation of 1..={n}"
            )));
        }
        Ok(LabeledDyckPath(steps))
    }

    /// A labeled path from an unlabeled one and its down labels left to right.
    pub fn from_parts(path: &DyckPath, labels: &[usize]) -> Result<Self> {
        if labels.len() != path.semi_length() {
            return Err(Error::SizeMismatch {
                left: labels.len(),
                right: path.semi_length(),
            });
        }
        let mut it = labels.iter();
        let steps = path
            .steps()
            .iter()
            .map(|s| match s {
                Step::Up => LStep::Up,
                Step::Down => LStep::Down(*it.next().expect("length checked")),
            })
            .collect();
        LabeledDyckPath::new(steps)
    }

    /// The labeled path underlying a fully labeled word; up labels are dropped.
    pub fn from_word(word: &[Letter]) -> Result<Self> {
        LabeledDyckPath::new(
            word.iter()
                .map(|l| match l {
                    Letter::Up(_) => LStep::Up,
                    Letter::Down(k) => LStep::Down(*k),
                })
                .collect(),
        )
    }

    pub fn steps(&self) -> &[LStep] {
        &self.0
    }

    pub fn semi_length(&self) -> usize {
        self.0.len() / 2
    }

    pub fn unlabeled(&self) -> DyckPath {
        DyckPath(
            self.0
                .iter()
                .map(|s| {
                    if *s == LStep::Up {
                        Step::Up
                    } else {
                        Step::Down
                    }
                })
                .collect(),
        )
    }

    /// Down labels left to right.
    pub fn down_labels(&self) -> Vec<usize> {
        self.0
            .iter()
            .filter_map(|s| match s {
                LStep::Down(k) => Some(*k),
                LStep::Up => None,
            })
            .collect()
    }

    /// Prime factors, each keeping its labels (not relabeled).
    pub fn prime_factors(&self) -> Vec<Vec<LStep>> {
        let ends = factor_ends(self.0.iter().map(|s| *s == LStep::Up));
        split_at_ends(&self.0, &ends)
    }
}

impl fmt::Display for LabeledDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            match s {
                LStep::Up => f.write_str("U")?,
                LStep::Down(l) => write!(f, "D{l}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LabeledDyckPath {
    type Err = Error;

    /// Tokens `U` and `D<k>`; labels on `U` tokens are accepted and ignored.
    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                let (head, rest) = t.split_at(1);
                match head {
                    "U" | "u" => Ok(LStep::Up),
                    "D" | "d" => rest
                        .parse()
                        .map(LStep::Down)
                        .map_err(|_| Error::InvalidDyckPath(format!("bad token {t:?}"))),
                    _ => Err(Error::InvalidDyckPath(format!("bad token {t:?}"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        LabeledDyckPath::new(steps)
    }
}

/// A maximal block of consecutive down-steps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Run {
    /// Labels in path order, left to right.
    pub labels: Vec<usize>,
    /// Index (0-based) of the block's rightmost down-step in the path.
    pub last: usize,
}

/// Runs of `d`, listed from the rightmost run to the leftmost.
pub fn runs(d: &LabeledDyckPath) -> Vec<Run> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    for (k, s) in d.0.iter().enumerate() {
        match s {
            LStep::Down(l) => cur.push(*l),
            LStep::Up => {
                if !cur.is_empty() {
                    out.push(Run {
                        labels: core::mem::take(&mut cur),
                        last: k - 1,
                    });
                }
            }
        }
    }
    if !cur.is_empty() {
        out.push(Run {
            labels: cur,
            last: d.0.len() - 1,
        });
    }
    out.reverse();
    out
}

/// Assign up-step labels right to left: each up-step takes the least label
/// among down-steps after it that no later up-step has taken.
pub fn labeled_dyck_word(d: &LabeledDyckPath) -> Result<Vec<Letter>> {
    let mut available = BTreeSet::new();
    let mut word = Vec::with_capacity(d.0.len());
    for s in d.0.iter().rev() {
        match s {
            LStep::Down(l) => {
                available.insert(*l);
                word.push(Letter::Down(*l));
            }
            LStep::Up => {
                let l = available
                    .pop_first()
                    .ok_or(Error::Internal("no label available for up-step"))?;
                word.push(Letter::Up(l));
            }
        }
    }
    word.reverse();
    Ok(word)
}

/// Up-step labels only, left to right.
pub fn up_labels(d: &LabeledDyckPath) -> Result<Vec<usize>> {
    Ok(labeled_dyck_word(d)?
        .into_iter()
        .filter_map(|l| match l {
            Letter::Up(k) => Some(k),
            Letter::Down(_) => None,
        })
        .collect())
}

fn two_column_n(shape_parts: &[usize]) -> Result<usize> {
    if shape_parts.is_empty() || shape_parts.iter().any(|&p| p != 2) {
        return Err(Error::WrongShape("(2^n)"));
    }
    Ok(shape_parts.len())
}

/// Step `i` is up when `i` sits in the second column, otherwise a down-step
/// labeled by the row of `i`.
pub fn spct_to_ldyck(t: &Tableau) -> Result<LabeledDyckPath> {
    two_column_n(t.shape().parts())?;
    validate_pct(t)?;
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    let pos = t.positions();
    let steps = (1..=t.size())
        .map(|i| {
            let (r, c) = pos[i];
            if c == 2 {
                LStep::Up
            } else {
                LStep::Down(r)
            }
        })
        .collect();
    LabeledDyckPath::new(steps)
}

/// Row `i` holds the positions of `D_i` (first column) and `U_i` (second
/// column) in the labeled Dyck word.
pub fn ldyck_to_spct(d: &LabeledDyckPath) -> Result<Tableau> {
    let n = d.semi_length();
    let word = labeled_dyck_word(d)?;
    let mut rows = alloc::vec![alloc::vec![0usize, 0]; n];
    for (k, l) in word.iter().enumerate() {
        match *l {
            Letter::Down(i) => rows[i - 1][0] = k + 1,
            Letter::Up(i) => rows[i - 1][1] = k + 1,
        }
    }
    Tableau::new(rows)
}

/// Step `i` is up when `i` lies in the second column.
pub fn srt_to_dyck(t: &ReverseTableau) -> Result<DyckPath> {
    two_column_n(t.shape().parts())?;
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    let second: BTreeSet<usize> = t.column(2).into_iter().collect();
    DyckPath::new(
        (1..=t.size())
            .map(|i| {
                if second.contains(&i) {
                    Step::Up
                } else {
                    Step::Down
                }
            })
            .collect(),
    )
}

/// All Dyck paths of semi-length `n`, lexicographic with `U < D`.
pub fn enumerate_dyck(n: usize) -> Vec<DyckPath> {
    fn rec(n: usize, ups: usize, downs: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if ups == n && downs == n {
            out.push(DyckPath(cur.clone()));
            return;
        }
        if ups < n {
            cur.push(Step::Up);
            rec(n, ups + 1, downs, cur, out);
            cur.pop();
        }
        if downs < ups {
            cur.push(Step::Down);
            rec(n, ups, downs + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, 0, &mut Vec::new(), &mut out);
    out
}

/// All labeled Dyck paths of semi-length `n`: each unlabeled path with every
/// labeling in lexicographic order.
pub fn enumerate_ldyck(n: usize) -> Vec<LabeledDyckPath> {
    let mut out = Vec::new();
    for path in enumerate_dyck(n) {
        for sigma in Permutation::all(n) {
            out.push(LabeledDyckPath::from_parts(&path, sigma.images()).expect("valid labeling"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{enumerate_spct, enumerate_srt};
    use crate::Composition;
    use alloc::string::ToString;
    use alloc::vec;

    pub(crate) fn ten_path() -> LabeledDyckPath {
        parse_word(TEN_WORD)
            .and_then(|w| LabeledDyckPath::from_word(&w))
            .unwrap()
    }

    pub(crate) const TEN_WORD: &str =
        "U7 U3 D7 D3 U10 U9 U8 U4 D4 U1 D1 D10 U6 D6 D8 U5 U2 D9 D2 D5";

    #[test]
    fn nine_path_factors() {
        let d: DyckPath = "UD UD UUUDUDDUDD UUDD".parse().unwrap();
        assert_eq!(d.semi_length(), 9);
        let f: Vec<_> = d.prime_factors().iter().map(|x| x.to_string()).collect();
        assert_eq!(f, vec!["UD", "UD", "UUUDUDDUDD", "UUDD"]);
    }

    #[test]
    fn small_factors() {
        let ud: DyckPath = "UD".parse().unwrap();
        assert_eq!(ud.prime_factors().len(), 1);
        let two: DyckPath = "UUDDUD".parse().unwrap();
        assert_eq!(two.prime_factors().len(), 2);
        assert!("UDD".parse::<DyckPath>().is_err());
        assert!("DU".parse::<DyckPath>().is_err());
    }

    #[test]
    fn ten_path_word() {
        let d = ten_path();
        assert_eq!(d.semi_length(), 10);
        let w = labeled_dyck_word(&d).unwrap();
        assert_eq!(word_to_string(&w), TEN_WORD);
    }

    #[test]
    fn small_words() {
        let ud: LabeledDyckPath = "U D1".parse().unwrap();
        assert_eq!(word_to_string(&labeled_dyck_word(&ud).unwrap()), "U1 D1");
        let uudd: LabeledDyckPath = "U U D2 D1".parse().unwrap();
        assert_eq!(
            word_to_string(&labeled_dyck_word(&uudd).unwrap()),
            "U2 U1 D2 D1"
        );
    }

    #[test]
    fn bad_labels_rejected() {
        assert!("U D2".parse::<LabeledDyckPath>().is_err());
        assert!("U U D1 D1".parse::<LabeledDyckPath>().is_err());
        assert!("U D1 D2".parse::<LabeledDyckPath>().is_err());
    }

    #[test]
    fn ten_path_runs() {
        let r: Vec<Vec<usize>> = runs(&ten_path()).into_iter().map(|r| r.labels).collect();
        assert_eq!(
            r,
            vec![vec![9, 2, 5], vec![6, 8], vec![1, 10], vec![4], vec![7, 3]]
        );
        let one: LabeledDyckPath = "U D1".parse().unwrap();
        assert_eq!(runs(&one).len(), 1);
        let uudd: LabeledDyckPath = "U U D2 D1".parse().unwrap();
        assert_eq!(runs(&uudd)[0].labels, vec![2, 1]);
    }

    #[test]
    fn word_is_product_over_factors() {
        for n in 1..=4 {
            for d in enumerate_ldyck(n) {
                let whole = labeled_dyck_word(&d).unwrap();
                let mut glued = Vec::new();
                for f in d.prime_factors() {
                    // Label each factor on its own.
                    let mut available = BTreeSet::new();
                    let mut part = Vec::new();
                    for s in f.iter().rev() {
                        match s {
                            LStep::Down(l) => {
                                available.insert(*l);
                                part.push(Letter::Down(*l));
                            }
                            LStep::Up => part.push(Letter::Up(available.pop_first().unwrap())),
                        }
                    }
                    part.reverse();
                    glued.extend(part);
                }
                assert_eq!(whole, glued);
            }
        }
    }

    #[test]
    fn every_label_up_then_down() {
        for d in enumerate_ldyck(4) {
            let w = labeled_dyck_word(&d).unwrap();
            for i in 1..=4 {
                let u = w.iter().position(|l| *l == Letter::Up(i)).unwrap();
                let dn = w.iter().position(|l| *l == Letter::Down(i)).unwrap();
                assert!(u < dn);
                assert_eq!(w.iter().filter(|l| **l == Letter::Up(i)).count(), 1);
            }
        }
    }

    #[test]
    fn psi_small() {
        let t = Tableau::new(vec![vec![2, 1]]).unwrap();
        let d = spct_to_ldyck(&t).unwrap();
        assert_eq!(d.to_string(), "U D1");
        assert_eq!(ldyck_to_spct(&d).unwrap(), t);
        let bad = Tableau::new(vec![vec![1]]).unwrap();
        assert_eq!(spct_to_ldyck(&bad), Err(Error::WrongShape("(2^n)")));
    }

    #[test]
    fn ten_path_to_spct() {
        let t = ldyck_to_spct(&ten_path()).unwrap();
        assert!(validate_pct(&t).is_ok() && t.is_standard());
        // First column: positions of D1..D10 in the word.
        let col: Vec<usize> = t.column_word(1).unwrap();
        assert_eq!(col, vec![11, 19, 4, 9, 20, 14, 3, 15, 18, 12]);
        assert_eq!(spct_to_ldyck(&t).unwrap(), ten_path());
    }

    #[test]
    fn psi_round_trips() {
        for n in 1..=5 {
            let all = enumerate_spct(&Composition::rectangle(2, n));
            let mut images = BTreeSet::new();
            for t in &all {
                let d = spct_to_ldyck(t).unwrap();
                assert_eq!(&ldyck_to_spct(&d).unwrap(), t);
                images.insert(d);
            }
            assert_eq!(images.len(), all.len());
            assert_eq!(
                images.len() as u64,
                crate::factorial(n as u64) * crate::catalan(n as u64)
            );
        }
    }

    #[test]
    fn ldyck_counts() {
        for n in 1..=5 {
            let all = enumerate_ldyck(n);
            assert_eq!(
                all.len() as u64,
                crate::factorial(n as u64) * crate::catalan(n as u64)
            );
            assert_eq!(all.iter().collect::<BTreeSet<_>>().len(), all.len());
        }
    }

    #[test]
    fn srt_dyck_examples() {
        let one = ReverseTableau::new(vec![vec![2, 1]]).unwrap();
        assert_eq!(srt_to_dyck(&one).unwrap().to_string(), "UD");
        let mut got: Vec<_> = enumerate_srt(&Composition::rectangle(2, 2))
            .unwrap()
            .iter()
            .map(|t| srt_to_dyck(t).unwrap().to_string())
            .collect();
        got.sort();
        assert_eq!(got, vec!["UDUD", "UUDD"]);
        for n in 1..=6 {
            let srt = enumerate_srt(&Composition::rectangle(2, n)).unwrap();
            let paths: BTreeSet<_> = srt.iter().map(|t| srt_to_dyck(t).unwrap()).collect();
            assert_eq!(paths.len() as u64, crate::catalan(n as u64));
            assert_eq!(enumerate_dyck(n).len() as u64, crate::catalan(n as u64));
        }
    }
}
