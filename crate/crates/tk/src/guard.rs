//! Object-count estimates for the size guard.

use pct_core::tableau::hook_length_count;
use pct_core::Composition;

pub const DEFAULT_MAX_OBJECTS: u64 = 10_000_000;

pub fn factorial(n: usize) -> u128 {
    (2..=n as u128).fold(1u128, |a, k| a.saturating_mul(k))
}

pub fn catalan(n: usize) -> u128 {
    let mut c = 1u128;
    for k in 0..n as u128 {
        c = c.saturating_mul(2 * (2 * k + 1)) / (k + 2);
    }
    c
}

/// `n! Cat_n`: two-column tableaux, labeled Dyck paths, labeled trees.
pub fn labeled_catalan(n: usize) -> u128 {
    factorial(n).saturating_mul(catalan(n))
}

/// Upper bound on `|SPCT(shape)|`: every type contributes at most the number
/// of standard reverse tableaux of the sorted shape.
pub fn spct_bound(shape: &Composition) -> u128 {
    factorial(shape.len()).saturating_mul(hook_length_count(&shape.to_partition()))
}

/// Error text when `estimate` exceeds `cap`, otherwise `None`.
pub fn refusal(estimate: u128, cap: u64, what: &str) -> Option<String> {
    (estimate > cap as u128).then(|| {
        format!(
            "refusing: {what} needs about {estimate} objects, above the limit of {cap} \
             (raise with --max-objects or TK_MAX_OBJECTS)"
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let lc: Vec<u128> = (1..=5).map(labeled_catalan).collect();
        assert_eq!(lc, vec![1, 4, 30, 336, 5040]);
        assert_eq!(catalan(0), 1);
        assert_eq!(spct_bound(&Composition::rectangle(2, 3)), 30);
        assert!(
            spct_bound(&"1,3,2,4".parse().unwrap())
                >= pct_core::tableau::count_spct(&"1,3,2,4".parse().unwrap()) as u128
        );
    }

    #[test]
    fn refusals() {
        assert!(refusal(10, 10, "x").is_none());
        assert!(refusal(11, 10, "x").unwrap().contains("about 11"));
    }
}
