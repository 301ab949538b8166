//! Small integer arithmetic used across the crate.

use num_complex::Complex64;
use num_integer::Integer;
use std::f64::consts::PI;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Returns `(p, e)` with `n = p^e` when `n` is a prime power.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

pub fn totient(n: u64) -> u64 {
    factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn pow(base: u64, exp: u32) -> u64 {
    base.pow(exp)
}

/// `e^{2πi k/n}`.
pub fn root_of_unity(k: u64, n: u64) -> Complex64 {
    let angle = 2.0 * PI * ((k % n) as f64) / n as f64;
    Complex64::from_polar(1.0, angle)
}

/// Ramanujan sum `c(r, n) = Σ_{0 ≤ j < n, gcd(j,n)=1} ω_n^{rj}`, evaluated by
/// direct summation and rounded to the integer it always is.
pub fn ramanujan_sum(r: i64, n: u64) -> i64 {
    assert!(n >= 1, "modulus must be positive");
    let r = r.rem_euclid(n as i64) as u64;
    let sum: Complex64 = (0..n)
        .filter(|&j| gcd(j, n) == 1)
        .map(|j| root_of_unity(r * j % n, n))
        .sum();
    debug_assert!(sum.im.abs() < 1e-9, "imaginary residue {}", sum.im);
    sum.re.round() as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent closed form: μ(n/g)·φ(n)/φ(n/g) with g = gcd(r, n).
    fn ramanujan_oracle(r: u64, n: u64) -> i64 {
        let g = gcd(r, n);
        let q = n / g;
        mobius(q) * (totient(n) / totient(q)) as i64
    }

    #[test]
    fn ramanujan_examples() {
        assert_eq!(ramanujan_sum(0, 12), 4);
        assert_eq!(ramanujan_sum(1, 4), 0);
        assert_eq!(ramanujan_sum(2, 4), -2);
        assert_eq!(ramanujan_sum(5, 1), 1);
    }

    #[test]
    fn ramanujan_matches_mobius_formula() {
        for n in 1..=60u64 {
            for r in 1..=60u64 {
                assert_eq!(ramanujan_sum(r as i64, n), ramanujan_oracle(r, n), "c({r},{n})");
            }
        }
    }

    #[test]
    fn factor_helpers() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(12), None);
        assert_eq!(totient(16), 8);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
        assert!(is_prime(13) && !is_prime(1) && !is_prime(49));
    }
}
