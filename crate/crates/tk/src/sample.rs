//! Seeded random objects for checks above the exhaustive range.

use pct_core::dyck::{DyckPath, LabeledDyckPath, Step};
use pct_core::tableau::rt_to_pct;
use pct_core::tree::{ldyck_to_ltree, LabeledBinaryTree};
use pct_core::{Composition, Permutation, ReverseTableau, Tableau};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    v.shuffle(rng);
    Permutation::new(v).expect("shuffled identity")
}

/// Uniform Dyck path via the cycle lemma.
pub fn random_dyck<R: Rng>(n: usize, rng: &mut R) -> DyckPath {
    let mut w = vec![Step::Up; n];
    w.extend(std::iter::repeat_n(Step::Down, n + 1));
    w.shuffle(rng);
    let (mut h, mut min, mut at) = (0i64, 0i64, 0usize);
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
    DyckPath::new(w).expect("cycle lemma rotation")
}

pub fn random_ldyck<R: Rng>(n: usize, rng: &mut R) -> LabeledDyckPath {
    let path = random_dyck(n, rng);
    let labels = random_permutation(n, rng);
    LabeledDyckPath::from_parts(&path, labels.images()).expect("valid labeling")
}

pub fn random_ltree<R: Rng>(n: usize, rng: &mut R) -> LabeledBinaryTree {
    ldyck_to_ltree(&random_ldyck(n, rng)).expect("bijection image")
}

/// Standard reverse tableau of a partition shape, filling `n, n-1, …, 1`
/// into a random addable cell each time.
pub fn random_srt<R: Rng>(shape: &Composition, rng: &mut R) -> ReverseTableau {
    let parts = shape.parts();
    let mut rows: Vec<Vec<usize>> = parts.iter().map(|_| Vec::new()).collect();
    for v in (1..=shape.size()).rev() {
        let open: Vec<usize> = (0..parts.len())
            .filter(|&r| rows[r].len() < parts[r] && (r == 0 || rows[r - 1].len() > rows[r].len()))
            .collect();
        let r = *open
            .choose(rng)
            .expect("partition shape has an addable cell");
        rows[r].push(v);
    }
    ReverseTableau::new(rows).expect("corner filling is a reverse tableau")
}

/// A random composition of `n` (each gap set equally likely).
pub fn random_composition<R: Rng>(n: usize, rng: &mut R) -> Composition {
    let mut parts = Vec::new();
    let mut cur = 1;
    for _ in 1..n {
        if rng.gen_bool(0.5) {
            parts.push(cur);
            cur = 1;
        } else {
            cur += 1;
        }
    }
    parts.push(cur);
    Composition::new(parts).expect("positive parts")
}

/// A standard PCT whose sorted shape is the sorted shape of a random
/// composition of `n`, with a random type.
pub fn random_spct<R: Rng>(n: usize, rng: &mut R) -> Tableau {
    let lambda = random_composition(n, rng).to_partition();
    let rt = random_srt(&lambda, rng);
    let sigma = random_permutation(lambda.len(), rng);
    rt_to_pct(&rt, &sigma).expect("reverse tableaux map to PCTs")
}

#[cfg(test)]
mod tests {
    use super::*;
    use pct_core::tableau::validate_pct;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for n in 1..=8 {
            for _ in 0..20 {
                assert_eq!(random_dyck(n, &mut rng).semi_length(), n);
                assert_eq!(random_ltree(n, &mut rng).size(), n);
                let t = random_spct(n, &mut rng);
                assert!(validate_pct(&t).is_ok() && t.is_standard());
                assert_eq!(random_composition(n, &mut rng).size(), n);
            }
        }
    }

    #[test]
    fn dyck_covers_all_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let seen: std::collections::BTreeSet<_> =
            (0..400).map(|_| random_dyck(4, &mut rng)).collect();
        assert_eq!(seen.len(), 14);
    }
}
