use num_bigint::BigUint;
use num_traits::One;

/// `n!` as an exact big integer.
pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// Exact number of derangements of `n` items via the inclusion-exclusion
/// sum `n!(1 - 1 + 1/2 - 1/6 + ... + (-1)^n/n!)`, evaluated in Horner
/// form `D_k = k D_{k-1} + (-1)^k` so intermediates stay nonnegative.
pub fn count_derangements(n: usize) -> BigUint {
    let mut acc = BigUint::one(); // D_0
    for k in 1..=n {
        acc *= BigUint::from(k);
        if k % 2 == 0 {
            acc += BigUint::one();
        } else {
            acc -= BigUint::one().min(acc.clone());
        }
    }
    acc
}

/// `D_n / n!` as a float, via the truncated alternating series for `1/e`.
pub fn derangement_ratio(n: usize) -> f64 {
    let mut acc = 0.0f64;
    let mut term = 1.0f64;
    for k in 0..=n {
        if k > 0 {
            term /= k as f64;
        }
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        if term < f64::EPSILON && k > 2 {
            break;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Permutation;

    #[test]
    fn small_values() {
        assert_eq!(count_derangements(0), BigUint::from(1u32));
        assert_eq!(count_derangements(1), BigUint::from(0u32));
        assert_eq!(count_derangements(2), BigUint::from(1u32));
        assert_eq!(count_derangements(3), BigUint::from(2u32));
        assert_eq!(count_derangements(4), BigUint::from(9u32));
    }

    // Brute force over all 24 permutations of 4 elements.
    #[test]
    fn brute_force_n4() {
        let mut count = 0u32;
        let perms = all_permutations(4);
        for images in perms {
            if Permutation::new(images).unwrap().is_derangement() {
                count += 1;
            }
        }
        assert_eq!(count, 9);
        assert_eq!(count_derangements(4), BigUint::from(count));
    }

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut items: Vec<usize> = (1..=n).collect();
        heap_permute(&mut items, n, &mut out);
        out
    }

    fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap_permute(items, k - 1, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }

    // D_n = (n-1)(D_{n-1} + D_{n-2}) for 2 <= n <= 30.
    #[test]
    fn recurrence_cross_check() {
        for n in 2..=30usize {
            let lhs = count_derangements(n);
            let rhs = BigUint::from(n - 1)
                * (count_derangements(n - 1) + count_derangements(n - 2));
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    // Alternating series truncation: |D_n/n! - 1/e| <= 1/n!.
    #[test]
    fn ratio_near_inverse_e() {
        for n in 1..=20usize {
            let ratio = derangement_ratio(n);
            let fact: f64 = (1..=n).map(|k| k as f64).product();
            let bound = 1.0 / fact + 1e-12;
            assert!(
                (ratio - (-1.0f64).exp()).abs() <= bound,
                "n = {n}, ratio = {ratio}"
            );
        }
    }

    // Float ratio agrees with the exact big-integer ratio.
    #[test]
    fn ratio_matches_exact() {
        use num_traits::ToPrimitive;
        for n in [5usize, 10, 16] {
            let exact = count_derangements(n).to_f64().unwrap()
                / factorial(n).to_f64().unwrap();
            assert!((derangement_ratio(n) - exact).abs() < 1e-12);
        }
    }
}
