//! Möbius function, divisor enumeration, Witt numbers, and the basic
//! commutator counts derived from them.
//!
//! `l_d(n) = (1/n) * sum over m | n of mu(m) * d^(n/m)` counts the basic
//! commutators of weight `n` on `d` letters. The two-letter and multigraded
//! counts are obtained by enumerating the Hall set and tallying multidegrees,
//! so they stay independent of the closed formula they are checked against.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::hall::{Alphabet, HallSet};

/// Divisors of `n` in increasing order, by trial division.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors of 0 are not enumerable");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n % k == 0 {
            small.push(k);
            if k * k != n {
                large.push(n / k);
            }
        }
        k += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Möbius function: 1 on 1, 0 on non-squarefree numbers, (-1)^s on a product
/// of s distinct primes. Panics on 0.
pub fn mobius(m: u64) -> i64 {
    assert!(m >= 1, "mobius is undefined at 0");
    let mut m = m;
    let mut prime_count = 0u32;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            prime_count += 1;
        }
        p += 1;
    }
    if m > 1 {
        prime_count += 1;
    }
    if prime_count % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Witt number `l_d(n)` as a big integer. The defining sum is divisible by
/// `n`; this is asserted, never truncated.
pub fn witt_big(d: usize, n: usize) -> BigUint {
    assert!(n >= 1, "weight must be at least 1");
    let d_big = BigInt::from(d);
    let mut sum = BigInt::zero();
    for m in divisors(n as u64) {
        let mu = mobius(m);
        if mu == 0 {
            continue;
        }
        let term = d_big.pow((n as u64 / m) as u32);
        if mu > 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let (q, r) = sum.div_rem(&BigInt::from(n));
    assert!(r.is_zero(), "Witt sum {sum} not divisible by {n}");
    assert!(!q.is_negative(), "Witt number came out negative");
    q.to_biguint().unwrap()
}

/// Witt number `l_d(n)` as a machine integer; panics if it does not fit.
pub fn witt(d: usize, n: usize) -> usize {
    witt_big(d, n)
        .to_usize()
        .expect("Witt number exceeds machine range")
}

/// Number of basic commutators of weight `c` on `d1 + d2` letters that are
/// basic commutators on neither letter group alone:
/// `l_{d1+d2}(c) - l_{d1}(c) - l_{d2}(c)`.
pub fn mixed_count(d1: usize, d2: usize, c: usize) -> usize {
    assert!(c >= 1);
    let total = witt(d1 + d2, c);
    let pure = witt(d1, c) + witt(d2, c);
    assert!(total >= pure, "mixed count came out negative");
    total - pure
}

/// Number `W(a, b)` of basic commutators of weight `a + b` on two letters
/// `{x, y}` with exactly `a` occurrences of `x` and `b` of `y`, obtained by
/// enumerating the Hall set and counting by multidegree.
pub fn two_letter_count(a: usize, b: usize) -> usize {
    assert!(a >= 1 && b >= 1);
    let ab = Alphabet::grouped(&[1, 1]);
    let set = HallSet::new(ab, a + b);
    set.trees_of_weight(a + b)
        .filter(|t| t.multidegree() == [a, b])
        .count()
}

/// Bidegree-(a, b) dimension of the free Lie algebra on `k + h` letters,
/// counting occurrences of first-group versus second-group letters. Computed
/// by Hall enumeration so that it is an independent oracle, not a formula.
pub fn multigraded_witt(k: usize, h: usize, a: usize, b: usize) -> usize {
    assert!(a >= 1 && b >= 1);
    let ab = Alphabet::grouped(&[k, h]);
    let set = HallSet::new(ab.clone(), a + b);
    set.trees_of_weight(a + b)
        .filter(|t| t.group_degree(&ab, 0) == a && t.group_degree(&ab, 1) == b)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lyndon;

    #[test]
    fn mobius_small_values() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(12), 0); // divisible by 4
        assert_eq!(mobius(30), -1); // 2 * 3 * 5
        assert_eq!(mobius(2), -1);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(49), 0);
    }

    #[test]
    #[should_panic(expected = "undefined at 0")]
    fn mobius_rejects_zero() {
        mobius(0);
    }

    #[test]
    fn divisors_enumerate_in_order() {
        assert_eq!(divisors(1), [1]);
        assert_eq!(divisors(12), [1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), [1, 7, 49]);
    }

    #[test]
    fn witt_small_values() {
        assert_eq!(witt(2, 1), 2);
        assert_eq!(witt(2, 3), 2);
        assert_eq!(witt(3, 2), 3);
        assert_eq!(witt(3, 4), 18);
        assert_eq!(witt(2, 4), 3);
        assert_eq!(witt(5, 2), 10);
        assert_eq!(witt(0, 3), 0);
    }

    #[test]
    fn witt_degenerate_rows() {
        for n in 2..=9 {
            assert_eq!(witt(1, n), 0, "one letter admits no brackets");
        }
        for d in 0..=6 {
            assert_eq!(witt(d, 1), d);
        }
    }

    #[test]
    fn witt_matches_lyndon_counts() {
        for d in 0..=4 {
            for n in 1..=7 {
                assert_eq!(witt(d, n), lyndon::count(d, n), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn mixed_count_examples() {
        assert_eq!(mixed_count(1, 1, 2), 1);
        assert_eq!(mixed_count(2, 3, 2), 6);
        assert_eq!(mixed_count(2, 1, 4), 15);
        assert_eq!(mixed_count(2, 1, 3), 6);
    }

    #[test]
    fn two_letter_counts() {
        assert_eq!(two_letter_count(1, 1), 1);
        assert_eq!(two_letter_count(2, 1), 1);
        assert_eq!(two_letter_count(1, 2), 1);
        assert_eq!(two_letter_count(2, 2), 1);
        // Weight 5 splits: W(4,1)=1, W(3,2)=2, W(2,3)=2, W(1,4)=1; total l_2(5)=6.
        assert_eq!(two_letter_count(4, 1) + two_letter_count(3, 2)
            + two_letter_count(2, 3) + two_letter_count(1, 4), witt(2, 5));
    }

    #[test]
    fn two_letter_counts_sum_to_mixed() {
        for c in 2..=7 {
            let total: usize = (1..c).map(|a| two_letter_count(a, c - a)).sum();
            assert_eq!(total, mixed_count(1, 1, c), "c={c}");
        }
    }

    #[test]
    fn multigraded_examples() {
        assert_eq!(multigraded_witt(1, 1, 2, 2), two_letter_count(2, 2));
        assert_eq!(multigraded_witt(2, 1, 3, 1), 8);
        assert_eq!(multigraded_witt(2, 1, 2, 2), 5);
    }

    #[test]
    fn multigraded_sums_to_mixed_count() {
        for d1 in 1..=3 {
            for d2 in 1..=3 {
                for c in 2..=6 {
                    let total: usize = (1..c).map(|a| multigraded_witt(d1, d2, a, c - a)).sum();
                    assert_eq!(total, mixed_count(d1, d2, c), "d1={d1} d2={d2} c={c}");
                }
            }
        }
    }

    #[test]
    fn pattern_product_undercounts_at_imprimitive_bidegrees() {
        // The naive count W(a,b) * d1^a * d2^b matches the multigraded
        // dimension whenever gcd(a,b) = 1 but can fall short otherwise; both
        // sides are measured, not assumed. At (2,2) on groups (2,1):
        assert_eq!(multigraded_witt(2, 1, 2, 2), 5);
        assert_eq!(two_letter_count(2, 2) * 2usize.pow(2) * 1usize.pow(2), 4);
        // A primitive bidegree agrees.
        assert_eq!(
            multigraded_witt(2, 1, 3, 1),
            two_letter_count(3, 1) * 2usize.pow(3)
        );
    }

    #[test]
    fn two_letter_count_is_multigraded_at_one_one() {
        for a in 1..=4 {
            for b in 1..=4 {
                assert_eq!(two_letter_count(a, b), multigraded_witt(1, 1, a, b));
            }
        }
    }
}
