use pct_core::allowable::{is_allowable_pair, realize_sct};
use pct_core::dyck::{
    labeled_dyck_word, ldyck_to_spct, spct_to_ldyck, DyckPath, LabeledDyckPath, Letter, Step,
};
use pct_core::hecke::{pi, HeckeResult};
use pct_core::perm::{maximal_chain_to, standardize, weak_bruhat_leq};
use pct_core::tableau::{descent_quadruple, pct_to_rt, rt_to_pct, validate_pct};
use pct_core::tree::{edge_stats, ldyck_to_ltree, ltree_to_ldyck};
use pct_core::{Composition, Permutation, ReverseTableau, Tableau};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

/// `n` up-steps and `n+1` down-steps in random order, rotated by the cycle
/// lemma and trimmed.
fn dyck(n: usize) -> impl Strategy<Value = DyckPath> {
    let mut w = vec![Step::Up; n];
    w.extend(std::iter::repeat_n(Step::Down, n + 1));
    Just(w).prop_shuffle().prop_map(|mut w| {
        let (mut h, mut min, mut at) = (0i64, 0i64, 0);
        for (k, s) in w.iter().enumerate() {
            h += if *s == Step::Up { 1 } else { -1 };
            if h < min {
                min = h;
                at = k + 1;
            }
        }
        let len = w.len();
        w.rotate_left(at % len);
        w.pop();
        DyckPath::new(w).unwrap()
    })
}

fn ldyck(max_n: usize) -> impl Strategy<Value = LabeledDyckPath> {
    (1..=max_n).prop_flat_map(|n| {
        (dyck(n), perm(n)).prop_map(|(d, p)| LabeledDyckPath::from_parts(&d, p.images()).unwrap())
    })
}

/// A standard reverse tableau of a random partition of `n`, built by placing
/// `n, …, 1` in addable cells chosen by `picks`.
fn srt(max_n: usize) -> impl Strategy<Value = ReverseTableau> {
    (1..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec(1usize..=n, 1..=n),
            proptest::collection::vec(any::<u16>(), n),
        )
            .prop_map(move |(cuts, picks)| {
                let mut parts = Vec::new();
                let mut left = n;
                for c in cuts {
                    if left == 0 {
                        break;
                    }
                    let p = c.min(left);
                    parts.push(p);
                    left -= p;
                }
                if left > 0 {
                    parts.push(left);
                }
                parts.sort_unstable_by(|a, b| b.cmp(a));
                let mut rows: Vec<Vec<usize>> = vec![Vec::new(); parts.len()];
                for (k, v) in (1..=n).rev().enumerate() {
                    let open: Vec<usize> = (0..parts.len())
                        .filter(|&r| {
                            rows[r].len() < parts[r]
                                && (r == 0 || rows[r - 1].len() > rows[r].len())
                        })
                        .collect();
                    rows[open[picks[k] as usize % open.len()]].push(v);
                }
                ReverseTableau::new(rows).unwrap()
            })
    })
}

fn spct(max_n: usize) -> impl Strategy<Value = Tableau> {
    srt(max_n).prop_flat_map(|rt| {
        let l = rt.shape().len();
        perm(l).prop_map(move |s| rt_to_pct(&rt, &s).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn standardize_matches_definition(w in proptest::collection::vec(1usize..5, 1..9)) {
        let s = standardize(&w).unwrap();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                prop_assert_eq!(s.images()[i] > s.images()[j], w[i] > w[j]);
            }
        }
        prop_assert_eq!(standardize(s.images()).unwrap(), s);
    }

    #[test]
    fn chains_are_covers(t in (1usize..8).prop_flat_map(perm)) {
        let chain = maximal_chain_to(&t);
        prop_assert_eq!(chain.len(), t.inversion_count() + 1);
        prop_assert!(chain[0].is_identity());
        prop_assert_eq!(chain.last().unwrap(), &t);
        for w in chain.windows(2) {
            prop_assert!(weak_bruhat_leq(&w[0], &w[1]).unwrap());
            prop_assert_eq!(w[1].inversion_count(), w[0].inversion_count() + 1);
            prop_assert!(is_allowable_pair(&w[0], &w[1]).unwrap());
        }
    }

    #[test]
    fn pct_rt_round_trip(t in spct(10)) {
        let sigma = validate_pct(&t).unwrap();
        prop_assert!(t.is_standard());
        let rt = pct_to_rt(&t).unwrap();
        prop_assert_eq!(rt.shape(), &t.shape().to_partition());
        prop_assert_eq!(rt_to_pct(&rt, &sigma).unwrap(), t);
    }

    #[test]
    fn labeled_word_shape(d in ldyck(9)) {
        let w = labeled_dyck_word(&d).unwrap();
        let n = d.semi_length();
        for i in 1..=n {
            let u = w.iter().position(|l| *l == Letter::Up(i));
            let dn = w.iter().position(|l| *l == Letter::Down(i));
            prop_assert!(u.is_some() && dn.is_some() && u < dn);
        }
    }

    #[test]
    fn dyck_round_trips(d in ldyck(9)) {
        let t = ldyck_to_spct(&d).unwrap();
        prop_assert!(validate_pct(&t).is_ok());
        prop_assert_eq!(t.shape(), &Composition::rectangle(2, d.semi_length()));
        prop_assert_eq!(&spct_to_ldyck(&t).unwrap(), &d);
        let tree = ldyck_to_ltree(&d).unwrap();
        prop_assert_eq!(&ltree_to_ldyck(&tree).unwrap(), &d);
        prop_assert_eq!(descent_quadruple(&t).unwrap(), edge_stats(&tree).as_tuple());
    }

    #[test]
    fn hecke_moves_stay_in_class(t in spct(8)) {
        let st = t.st();
        for i in 1..t.size() {
            match pi(&t, i).unwrap() {
                HeckeResult::Moved(u) => {
                    prop_assert!(validate_pct(&u).is_ok());
                    prop_assert_eq!(u.st(), st.clone());
                    prop_assert_eq!(pi(&u, i).unwrap(), HeckeResult::Fixed);
                }
                HeckeResult::Fixed | HeckeResult::Zero => {}
            }
        }
    }

    #[test]
    fn allowable_pairs_realize((a, b) in (2usize..7).prop_flat_map(|n| (perm(n), perm(n)))) {
        if is_allowable_pair(&a, &b).unwrap() {
            let t = realize_sct(&a, &b).unwrap();
            let k = t.shape().max_part();
            prop_assert!(validate_pct(&t).unwrap().is_identity());
            prop_assert_eq!(t.st_i(k - 1).unwrap(), a);
            prop_assert_eq!(t.st_i(k).unwrap(), b);
        } else {
            prop_assert!(realize_sct(&a, &b).is_err());
        }
    }
}
