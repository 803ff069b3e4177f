//! JSON encodings of tableaux, labeled Dyck paths and labeled trees.

use anyhow::{bail, Context, Result};
use pct_core::dyck::LabeledDyckPath;
use pct_core::tree::LabeledBinaryTree;
use pct_core::{Composition, Permutation, ReverseTableau, Tableau};
use serde::{Deserialize, Serialize};

fn is_false(b: &bool) -> bool {
    !*b
}

/// `{"shape": [...], "rows": [[...], ...]}`, plus `"reverse": true` for
/// reverse tableaux.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub shape: Vec<usize>,
    pub rows: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub reverse: bool,
}

impl TableauJson {
    pub fn from_tableau(t: &Tableau) -> Self {
        TableauJson {
            shape: t.shape().parts().to_vec(),
            rows: t.rows().to_vec(),
            reverse: false,
        }
    }

    pub fn from_reverse(t: &ReverseTableau) -> Self {
        TableauJson {
            shape: t.shape().parts().to_vec(),
            rows: t.rows().to_vec(),
            reverse: true,
        }
    }

    pub fn into_tableau(self) -> Result<Tableau> {
        if self.reverse {
            bail!("expected a tableau, found a reverse tableau");
        }
        Ok(Tableau::with_shape(
            Composition::new(self.shape)?,
            self.rows,
        )?)
    }

    pub fn into_reverse(self) -> Result<ReverseTableau> {
        if !self.reverse {
            bail!("expected a reverse tableau (\"reverse\": true)");
        }
        let shape = Composition::new(self.shape)?;
        let t = ReverseTableau::new(self.rows)?;
        if t.shape() != &shape {
            bail!(
                "rows have shape ({}) but shape field says ({})",
                t.shape(),
                shape
            );
        }
        Ok(t)
    }
}

/// `{"n": 3, "steps": ["U", "U", "D2", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LdyckJson {
    pub n: usize,
    pub steps: Vec<String>,
}

impl LdyckJson {
    pub fn from_path(d: &LabeledDyckPath) -> Self {
        LdyckJson {
            n: d.semi_length(),
            steps: d.to_string().split(' ').map(String::from).collect(),
        }
    }

    pub fn into_path(self) -> Result<LabeledDyckPath> {
        let d: LabeledDyckPath = self.steps.join(" ").parse()?;
        if d.semi_length() != self.n {
            bail!(
                "steps have semi-length {} but n is {}",
                d.semi_length(),
                self.n
            );
        }
        Ok(d)
    }
}

/// Nested `{"label": k, "left": {...}, "right": {...}}`, absent children omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub label: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Box<TreeJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Box<TreeJson>>,
}

impl TreeJson {
    pub fn from_tree(t: &LabeledBinaryTree) -> Self {
        fn go(t: &LabeledBinaryTree, v: usize) -> TreeJson {
            TreeJson {
                label: v,
                left: t.left(v).map(|c| Box::new(go(t, c))),
                right: t.right(v).map(|c| Box::new(go(t, c))),
            }
        }
        go(t, t.root())
    }

    pub fn into_tree(self) -> Result<LabeledBinaryTree> {
        let mut nodes = Vec::new();
        let mut stack = vec![&self];
        while let Some(node) = stack.pop() {
            nodes.push((
                node.label,
                node.left.as_ref().map(|c| c.label),
                node.right.as_ref().map(|c| c.label),
            ));
            stack.extend(node.right.as_deref());
            stack.extend(node.left.as_deref());
        }
        let n = nodes.len();
        let mut left = vec![None; n];
        let mut right = vec![None; n];
        let mut seen = vec![false; n + 1];
        for (label, l, r) in nodes {
            if label == 0 || label > n {
                bail!("label {label} outside 1..={n}");
            }
            if std::mem::replace(&mut seen[label], true) {
                bail!("label {label} appears twice");
            }
            left[label - 1] = l;
            right[label - 1] = r;
        }
        Ok(LabeledBinaryTree::new(self.label, left, right)?)
    }
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).with_context(|| format!("input is not a valid {what}"))
}

/// Two non-empty lines, each a permutation in one-line notation.
pub fn parse_pair(text: &str) -> Result<(Permutation, Permutation)> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();
    if lines.len() != 2 {
        bail!("expected two permutation lines, found {}", lines.len());
    }
    let a = lines[0]
        .parse()
        .with_context(|| format!("line 1: {:?}", lines[0]))?;
    let b = lines[1]
        .parse()
        .with_context(|| format!("line 2: {:?}", lines[1]))?;
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tableau_round_trip() {
        let t = Tableau::new(vec![vec![1], vec![7, 5, 2]]).unwrap();
        let j = serde_json::to_string(&TableauJson::from_tableau(&t)).unwrap();
        assert_eq!(j, r#"{"shape":[1,3],"rows":[[1],[7,5,2]]}"#);
        let back: TableauJson = serde_json::from_str(&j).unwrap();
        assert_eq!(back.into_tableau().unwrap(), t);
    }

    #[test]
    fn reverse_marker() {
        let rt = ReverseTableau::new(vec![vec![4, 2], vec![3, 1]]).unwrap();
        let j = serde_json::to_string(&TableauJson::from_reverse(&rt)).unwrap();
        assert_eq!(j, r#"{"shape":[2,2],"rows":[[4,2],[3,1]],"reverse":true}"#);
        let back: TableauJson = serde_json::from_str(&j).unwrap();
        assert!(back.clone().into_tableau().is_err());
        assert_eq!(back.into_reverse().unwrap(), rt);
        let wrong: TableauJson =
            serde_json::from_str(r#"{"shape":[1,3],"rows":[[4,2],[3,1]],"reverse":true}"#).unwrap();
        assert!(wrong.into_reverse().is_err());
    }

    #[test]
    fn ldyck_round_trip() {
        let d: LabeledDyckPath = "U U D2 D1".parse().unwrap();
        let j = serde_json::to_string(&LdyckJson::from_path(&d)).unwrap();
        assert_eq!(j, r#"{"n":2,"steps":["U","U","D2","D1"]}"#);
        let back: LdyckJson = serde_json::from_str(&j).unwrap();
        assert_eq!(back.into_path().unwrap(), d);
        let bad = LdyckJson {
            n: 3,
            steps: vec!["U".into(), "D1".into()],
        };
        assert!(bad.into_path().is_err());
    }

    #[test]
    fn tree_round_trip() {
        let t = LabeledBinaryTree::new(2, vec![None, Some(1), None], vec![None, Some(3), None])
            .unwrap();
        let j = serde_json::to_string(&TreeJson::from_tree(&t)).unwrap();
        assert_eq!(j, r#"{"label":2,"left":{"label":1},"right":{"label":3}}"#);
        let back: TreeJson = serde_json::from_str(&j).unwrap();
        assert_eq!(back.into_tree().unwrap(), t);
        let dup: TreeJson = serde_json::from_str(r#"{"label":1,"left":{"label":1}}"#).unwrap();
        assert!(dup.into_tree().is_err());
    }

    #[test]
    fn pairs() {
        let (a, b) = parse_pair("1 2 3\n2 3 1\n").unwrap();
        assert_eq!(a.images(), &[1, 2, 3]);
        assert_eq!(b.images(), &[2, 3, 1]);
        assert!(parse_pair("1 2 3\n").is_err());
        assert!(parse_pair("1 2 3\n1 1 2").is_err());
    }
}
