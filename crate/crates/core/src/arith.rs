//! Small exact-integer helpers shared across modules.

/// Deterministic trial-division primality test; inputs stay far below 2^32.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `base^exp` with overflow detection.
pub(crate) fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc = 1u64;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Floor of the square root of `n`.
pub(crate) fn isqrt(n: i128) -> i128 {
    if n < 0 {
        return -1;
    }
    if n < 2 {
        return n;
    }
    let mut x = n;
    let mut y = (x + 1) / 2;
    while y < x {
        x = y;
        y = (x + n / x) / 2;
    }
    x
}

/// Exact integer square root, or `None` when `n` is not a perfect square.
pub(crate) fn exact_sqrt(n: i128) -> Option<i128> {
    let r = isqrt(n);
    (r >= 0 && r * r == n).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(7919));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(!is_prime(9));
        assert!(!is_prime(7917));
    }

    #[test]
    fn prime_divisor_lists() {
        assert_eq!(prime_divisors(80), vec![2, 5]);
        assert_eq!(prime_divisors(728), vec![2, 7, 13]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(prime_divisors(2400), vec![2, 3, 5]);
    }

    #[test]
    fn exact_squares() {
        assert_eq!(exact_sqrt(729), Some(27));
        assert_eq!(exact_sqrt(0), Some(0));
        assert_eq!(exact_sqrt(2), None);
        assert_eq!(exact_sqrt(-4), None);
        assert_eq!(exact_sqrt(117649), Some(343));
    }

    #[test]
    fn pow_overflow() {
        assert_eq!(checked_pow(3, 4), Some(81));
        assert_eq!(checked_pow(2, 64), None);
    }
}
