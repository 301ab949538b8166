//! Power residues in finite fields and generalized Paley parameters.

use serde::Serialize;

use super::ring::FiniteRing;
use crate::algebra::arith::prime_power;
use crate::algebra::GroupSubset;
use crate::error::{Error, Result};

/// `P_k = {x^k : x ∈ F_q^*}` inside the additive group of the field.
pub fn power_residues(field: &FiniteRing, k: u64) -> Result<GroupSubset> {
    if !field.is_field() {
        return Err(Error::NotField(field.label().to_string()));
    }
    let f = &field.factors()[0];
    let q = f.size() as u64;
    if k == 0 || !(q - 1).is_multiple_of(k) {
        return Err(Error::NotDivisor { divisor: k, value: q - 1 });
    }
    GroupSubset::new(field.additive_group(), (1..f.size()).map(|x| f.pow(x, k)))
}

fn split_prime_power(q: u64) -> Result<(u64, u32)> {
    prime_power(q).ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))
}

fn require_divides(k: u64, q: u64) -> Result<()> {
    if k == 0 || q < 2 || !(q - 1).is_multiple_of(k) {
        return Err(Error::NotDivisor { divisor: k, value: q.saturating_sub(1) });
    }
    Ok(())
}

/// `Γ(k, q)` is integral iff `k | (q−1)/(p−1)`.
pub fn gp_integrality(k: u64, q: u64) -> Result<bool> {
    let (p, _) = split_prime_power(q)?;
    require_divides(k, q)?;
    Ok(((q - 1) / (p - 1)).is_multiple_of(k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Semiprimitive {
    pub p: u64,
    pub m: u32,
    /// Least `j ≥ 1` with `k | p^j + 1`.
    pub t: u32,
}

/// Decides whether `(k, q)` is a semiprimitive pair.
///
/// Accepts `k = 2` with `q ≡ 1 (mod 4)` and `k ≥ 3` with `k | p^t + 1` for some
/// `t | m/2`, `t ≠ m/2`. In both cases `m` must be even, since the closed
/// form is written in `p^{m/2}`.
pub fn semiprimitive_check(k: u64, q: u64) -> Result<Option<Semiprimitive>> {
    let (p, m) = split_prime_power(q)?;
    require_divides(k, q)?;
    if m % 2 != 0 || k < 2 {
        return Ok(None);
    }
    let half = m / 2;
    let divides_p_pow_plus_1 = |j: u32| pow_mod(p, j, k) == k - 1;
    let holds = if k == 2 {
        q % 4 == 1
    } else {
        (1..half).any(|t| half % t == 0 && divides_p_pow_plus_1(t))
    };
    if !holds {
        return Ok(None);
    }
    let t = (1..=m).find(|&j| divides_p_pow_plus_1(j)).expect("a witness exists");
    Ok(Some(Semiprimitive { p, m, t }))
}

fn pow_mod(base: u64, exp: u32, modulus: u64) -> u64 {
    (0..exp).fold(1 % modulus, |acc, _| acc * (base % modulus) % modulus)
}

/// `k = (p^{bm}−1)/(b(p^m−1))` when `b | (p^{bm}−1)/(p^m−1)`, with `q = p^{bm}`.
pub fn hamming_gp_parameters(b: u32, p: u64, m: u32) -> Result<Option<(u64, u64)>> {
    if b == 0 || m == 0 || p < 2 {
        return Err(Error::InvalidParameter(format!("bad Hamming parameters ({b},{p},{m})")));
    }
    let big_q = p.checked_pow(m).ok_or_else(|| Error::InvalidParameter("overflow".into()))?;
    let q = big_q.checked_pow(b).ok_or_else(|| Error::InvalidParameter("overflow".into()))?;
    let ratio = (q - 1) / (big_q - 1);
    Ok((ratio % b as u64 == 0).then(|| (ratio / b as u64, q)))
}
