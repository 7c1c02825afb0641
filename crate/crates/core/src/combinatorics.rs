//! Closed-form counts used as reference values throughout the crate.

/// `n!`
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `(2n-1)!!`, the number of perfect matchings on `2n` points.
pub fn double_factorial_odd(n: usize) -> u64 {
    (1..=n as u64).map(|k| 2 * k - 1).product()
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1))
}

/// Size of the Brauer monoid of rank `n`.
pub fn monoid_order(n: usize) -> u64 {
    double_factorial_odd(n)
}

/// Number of non-invertible elements, `(2n-1)!! - n!`.
pub fn singular_part_order(n: usize) -> u64 {
    double_factorial_odd(n) - factorial(n)
}

/// Number of diagrams with exactly `k` left brackets:
/// `C(n,2k)² · (2k-1)!!² · (n-2k)!`.
pub fn corank_class_size(n: usize, k: usize) -> u64 {
    if 2 * k > n {
        return 0;
    }
    let brackets = binomial(n, 2 * k) * double_factorial_odd(k);
    brackets * brackets * factorial(n - 2 * k)
}

/// Number of corank-2 diagrams, `n(n-1)n!/4`.
pub fn connected_class_count(n: usize) -> u64 {
    (n as u64) * (n as u64).saturating_sub(1) * factorial(n) / 4
}

/// Maximal atom length of a singular element, `⌊3n/2⌋ - 2`.
pub fn max_atom_length(n: usize) -> u64 {
    (3 * n as u64 / 2).saturating_sub(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(
            (1..=7)
                .map(double_factorial_odd)
                .collect::<std::vec::Vec<_>>(),
            [1, 3, 15, 105, 945, 10395, 135135]
        );
        assert_eq!(singular_part_order(5), 825);
        assert_eq!(binomial(6, 2), 15);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(
            (2..=6)
                .map(connected_class_count)
                .collect::<std::vec::Vec<_>>(),
            [1, 9, 72, 600, 5400]
        );
        assert_eq!(
            (2..=7).map(max_atom_length).collect::<std::vec::Vec<_>>(),
            [1, 2, 4, 5, 7, 8]
        );
    }

    #[test]
    fn corank_classes_partition_the_monoid() {
        for n in 1..=10 {
            let total: u64 = (0..=n / 2).map(|k| corank_class_size(n, k)).sum();
            assert_eq!(total, double_factorial_odd(n), "n = {n}");
        }
        assert_eq!(corank_class_size(5, 1), 600);
        assert_eq!(corank_class_size(4, 1), connected_class_count(4));
    }
}
