//! Closed-form spectra.

use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::spectrum::Spectrum;
use crate::algebra::arith::{gcd, prime_power, ramanujan_sum};
use crate::algebra::{CharacterTable, FiniteGroup, GroupSubset};
use crate::error::{Error, Result};
use crate::finring::gp::{semiprimitive_check, Semiprimitive};
use crate::graphs::CayleyKind;
use crate::products::ProductKind;

/// Choice of crossing set `T` in the family `{ {e}, S, S ∪ {e} }`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MirrorKind {
    Identity,
    Same,
    SameWithIdentity,
}

impl MirrorKind {
    pub const ALL: [MirrorKind; 3] = [MirrorKind::Identity, MirrorKind::Same, MirrorKind::SameWithIdentity];

    pub fn tag(&self) -> &'static str {
        match self {
            MirrorKind::Identity => "e",
            MirrorKind::Same => "s",
            MirrorKind::SameWithIdentity => "se",
        }
    }
}

impl std::str::FromStr for MirrorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MirrorKind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| Error::Parse(format!("unknown mirror kind `{s}` (expected e, s or se)")))
    }
}

/// Spectrum of `MX*(G;S,T)` from that of `X*(G,S)`:
/// `{λ ± 1}`, `{2λ} ∪ {0ⁿ}`, or `{2λ + 1} ∪ {−1ⁿ}`.
pub fn mdcg_spectrum_formula(base: &Spectrum, kind: MirrorKind, group_order: usize) -> Result<Spectrum> {
    if base.total() != group_order {
        return Err(Error::MultiplicityMismatch { expected: group_order, found: base.total() });
    }
    let e = base.entries();
    let one = Complex64::new(1.0, 0.0);
    let values: Vec<(Complex64, usize)> = match kind {
        MirrorKind::Identity => e
            .iter()
            .flat_map(|x| [(x.value + one, x.mult), (x.value - one, x.mult)])
            .collect(),
        MirrorKind::Same => e
            .iter()
            .map(|x| (x.value * 2.0, x.mult))
            .chain([(Complex64::new(0.0, 0.0), group_order)])
            .collect(),
        MirrorKind::SameWithIdentity => e
            .iter()
            .map(|x| (x.value * 2.0 + one, x.mult))
            .chain([(-one, group_order)])
            .collect(),
    };
    Ok(Spectrum::from_weighted(values))
}

/// Spectrum of `MX⁺(G;S,T)` over an abelian `G` from the characters of `G`.
///
/// In the sum graph the crossing arcs of `T ∋ e` join `(g,0)` to `(g⁻¹,1)`, so
/// the `{e}` and `S ∪ {e}` members are not the base graph with a perfect
/// matching added. With `a = χ(S)`, a real `χ` contributes `a ± 1`, `2a, 0` or
/// `2a + 1, −1`; a conjugate pair contributes `±|a+1|, ±|a−1|`, `±2|a|, 0, 0`
/// or `±|2a+1|, 1, −1`.
pub fn mdcg_sum_spectrum_abelian(group: &Arc<FiniteGroup>, s: &GroupSubset, kind: MirrorKind) -> Result<Spectrum> {
    s.ensure_over(group)?;
    // with e ∈ S the third member coincides with the second
    let kind = match kind {
        MirrorKind::SameWithIdentity if s.contains(group.identity()) => MirrorKind::Same,
        k => k,
    };
    let table = CharacterTable::new(group)?;
    let sums = table.sums(s);
    let re = |x: f64| (Complex64::new(x, 0.0), 1usize);
    let mut out = Vec::with_capacity(2 * sums.len());
    for (i, z) in sums.iter().enumerate() {
        let j = table.conjugate_index(i);
        if j == i {
            let a = z.re;
            match kind {
                MirrorKind::Identity => out.extend([re(a + 1.0), re(a - 1.0)]),
                MirrorKind::Same => out.extend([re(2.0 * a), re(0.0)]),
                MirrorKind::SameWithIdentity => out.extend([re(2.0 * a + 1.0), re(-1.0)]),
            }
        } else if i < j {
            let one = Complex64::new(1.0, 0.0);
            let (p, q) = match kind {
                MirrorKind::Identity => ((z + one).norm(), (z - one).norm()),
                MirrorKind::Same => (2.0 * z.norm(), 0.0),
                MirrorKind::SameWithIdentity => ((z * 2.0 + one).norm(), 1.0),
            };
            out.extend([re(p), re(-p), re(q), re(-q)]);
        }
    }
    Ok(Spectrum::from_weighted(out))
}

/// Spectrum of a two-factor product from the factor spectra.
pub fn product_spectrum_formula(a: &Spectrum, b: &Spectrum, kind: ProductKind) -> Spectrum {
    let combine = |l: Complex64, m: Complex64| match kind {
        ProductKind::Cartesian => l + m,
        ProductKind::Direct => l * m,
        ProductKind::Strong => l + m + l * m,
        ProductKind::StrongSum => l + l * m,
    };
    Spectrum::from_weighted(
        a.entries()
            .iter()
            .flat_map(|x| b.entries().iter().map(move |y| (combine(x.value, y.value), x.mult * y.mult))),
    )
}

/// Adding a loop at every vertex shifts the spectrum by one.
pub fn looped_spectrum(spec: &Spectrum) -> Spectrum {
    spec.shift(1.0)
}

fn check_local_parameters(r: usize, m: usize) -> Result<usize> {
    if m == 0 || r == 0 || !r.is_multiple_of(m) {
        return Err(Error::InvalidParameter(format!("maximal ideal size {m} must divide {r}")));
    }
    let residue = r / m;
    if prime_power(residue as u64).is_none() {
        return Err(Error::InvalidParameter(format!("residue field size {residue} is not a prime power")));
    }
    if prime_power(r as u64).map(|(p, _)| p) != prime_power(residue as u64).map(|(p, _)| p) {
        return Err(Error::InvalidParameter(format!("{r} and {residue} are not powers of the same prime")));
    }
    Ok(residue)
}

/// Spectrum of `X(R,R*)` / `X⁺(R,R*)` for a local ring of size `r` with maximal
/// ideal of size `m`. For even `r` the sum graph has the difference spectrum.
pub fn local_ring_unitary_spectrum(r: usize, m: usize, kind: CayleyKind) -> Result<Spectrum> {
    let residue = check_local_parameters(r, m)?;
    let (ri, mi) = (r as i64, m as i64);
    let zeros = r * (m - 1) / m;
    if kind == CayleyKind::Sum && r % 2 == 1 {
        let half = (r - m) / (2 * m);
        return Ok(Spectrum::from_integers(&[(ri - mi, 1), (mi, half), (0, zeros), (-mi, half)]));
    }
    Ok(Spectrum::from_integers(&[(ri - mi, 1), (0, zeros), (-mi, residue - 1)]))
}

/// Spectra of the three mirror graphs over a local ring of odd size `r`,
/// written out in closed form (not composed from the base spectrum).
pub fn mdcg_local_ring_spectrum(r: usize, m: usize, t: MirrorKind, kind: CayleyKind) -> Result<Spectrum> {
    let residue = check_local_parameters(r, m)?;
    if r.is_multiple_of(2) {
        return Err(Error::HypothesisViolation(format!("local ring size {r} is even")));
    }
    let (ri, mi) = (r as i64, m as i64);
    let a = r * (m - 1) / m; // zero eigenvalues of the base graph
    let b = residue - 1; // multiplicity of −m (difference kind)
    let c = (r - m) / (2 * m); // multiplicity of ±m (sum kind)
    let pairs: Vec<(i64, usize)> = match (kind, t) {
        (CayleyKind::Difference, MirrorKind::Identity) => vec![
            (ri - mi + 1, 1),
            (ri - mi - 1, 1),
            (1, a),
            (-1, a),
            (-mi + 1, b),
            (-mi - 1, b),
        ],
        (CayleyKind::Difference, MirrorKind::Same) => {
            vec![(2 * (ri - mi), 1), (0, 2 * r - residue), (-2 * mi, b)]
        }
        (CayleyKind::Difference, MirrorKind::SameWithIdentity) => {
            vec![(2 * (ri - mi) + 1, 1), (1, a), (-2 * mi + 1, b), (-1, r)]
        }
        (CayleyKind::Sum, MirrorKind::Identity) => vec![
            (ri - mi + 1, 1),
            (ri - mi - 1, 1),
            (mi + 1, c),
            (mi - 1, c),
            (1, a),
            (-1, a),
            (-mi + 1, c),
            (-mi - 1, c),
        ],
        (CayleyKind::Sum, MirrorKind::Same) => {
            vec![(2 * (ri - mi), 1), (2 * mi, c), (0, a + r), (-2 * mi, c)]
        }
        // The crossing inversion pairs the ±m eigenvectors of the base graph.
        (CayleyKind::Sum, MirrorKind::SameWithIdentity) => {
            vec![(2 * (ri - mi) + 1, 1), (2 * mi - 1, c), (1, a + c), (-1, a + c + 1), (-2 * mi + 1, c)]
        }
    };
    Ok(Spectrum::from_integers(&pairs))
}

/// The three-valued spectrum of a semiprimitive generalized Paley graph.
pub fn semiprimitive_gp_spectrum(k: u64, q: u64, kind: CayleyKind) -> Result<Spectrum> {
    let Some(Semiprimitive { p, m, t }) = semiprimitive_check(k, q)? else {
        return Err(Error::HypothesisViolation(format!("({k},{q}) is not a semiprimitive pair")));
    };
    let (k, n) = (k as i64, ((q - 1) / k) as usize);
    let sign: i64 = if (m / (2 * t) + 1) % 2 == 0 { 1 } else { -1 };
    let root = (p as i64).pow(m / 2);
    let num1 = sign * (k - 1) * root - 1;
    let num2 = sign * root + 1;
    if num1 % k != 0 || num2 % k != 0 {
        return Err(Error::OracleMismatch(format!("semiprimitive eigenvalues for ({k},{q}) are not integers")));
    }
    let (l1, l2) = (num1 / k, -num2 / k);
    let rest = (k as usize - 1) * n;
    if kind == CayleyKind::Sum && q % 2 == 1 {
        if n % 2 != 0 || !rest.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!("odd multiplicities for ({k},{q}) sum graph")));
        }
        return Ok(Spectrum::from_integers(&[
            (n as i64, 1),
            (l1, n / 2),
            (-l1, n / 2),
            (l2, rest / 2),
            (-l2, rest / 2),
        ]));
    }
    Ok(Spectrum::from_integers(&[(n as i64, 1), (l1, n), (l2, rest)]))
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `{[ℓq − b]^{C(b,ℓ)(q−1)^{b−ℓ}} : 0 ≤ ℓ ≤ b}`.
pub fn hamming_spectrum(b: u32, q: u64) -> Result<Spectrum> {
    if b == 0 || q < 2 {
        return Err(Error::InvalidParameter(format!("Hamming graph needs b ≥ 1, q ≥ 2 (got {b}, {q})")));
    }
    let pairs: Vec<(i64, usize)> = (0..=b as u64)
        .map(|l| ((l * q) as i64 - b as i64, (binomial(b as u64, l) * (q - 1).pow(b - l as u32)) as usize))
        .collect();
    Ok(Spectrum::from_integers(&pairs))
}

/// Eigenvalues `λ_r = Σ_{d ∈ D} c(r, n/d)` of the gcd graph `X(Z_n, ∪ S_n(d))`.
pub fn gcd_graph_spectrum(n: usize, divisors: &[usize]) -> Result<Spectrum> {
    for &d in divisors {
        if d == 0 || d >= n || !n.is_multiple_of(d) {
            return Err(Error::NotDivisor { divisor: d as u64, value: n as u64 });
        }
    }
    let mut ds = divisors.to_vec();
    ds.sort_unstable();
    ds.dedup();
    let values: Vec<i64> = crate::par::map_range(n, |r| {
        ds.iter().map(|&d| ramanujan_sum(r as i64, (n / d) as u64)).sum()
    });
    Ok(Spectrum::from_integers(&values.into_iter().map(|v| (v, 1)).collect::<Vec<_>>()))
}

/// `{[2n]^1, [2n−4]^1, [0]^{3n−1}, [−4]^{n−1}}` for the dicyclic connection set
/// `{a^k : k ≠ 0, n} ∪ {ab, a^{n+1}b}`.
pub fn dicyclic_example_spectrum(n: usize) -> Spectrum {
    let ni = n as i64;
    Spectrum::from_integers(&[(2 * ni, 1), (2 * ni - 4, 1), (0, 3 * n - 1), (-4, n - 1)])
}

/// `gcd(a, b)` re-exported for the theorem suite's gcd-class instances.
pub fn gcd_usize(a: usize, b: usize) -> usize {
    gcd(a as u64, b as u64) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &[(i64, usize)]) -> Spectrum {
        Spectrum::from_integers(p)
    }

    #[test]
    fn mirror_formula_on_c4() {
        let base = ints(&[(2, 1), (0, 2), (-2, 1)]);
        let f = |k| mdcg_spectrum_formula(&base, k, 4).unwrap();
        assert_eq!(f(MirrorKind::Identity), ints(&[(3, 1), (1, 3), (-1, 3), (-3, 1)]));
        assert_eq!(f(MirrorKind::Same), ints(&[(4, 1), (0, 6), (-4, 1)]));
        assert_eq!(f(MirrorKind::SameWithIdentity), ints(&[(5, 1), (1, 2), (-1, 4), (-3, 1)]));
        assert!(matches!(
            mdcg_spectrum_formula(&base, MirrorKind::Same, 5),
            Err(Error::MultiplicityMismatch { .. })
        ));
    }

    #[test]
    fn product_formula_examples() {
        let base = ints(&[(2, 1), (0, 2), (-2, 1)]);
        let p2 = ints(&[(1, 1), (-1, 1)]);
        let lp2 = ints(&[(2, 1), (0, 1)]);
        assert_eq!(
            product_spectrum_formula(&base, &p2, ProductKind::Cartesian),
            ints(&[(3, 1), (1, 3), (-1, 3), (-3, 1)])
        );
        let direct = product_spectrum_formula(&base, &lp2, ProductKind::Direct);
        assert_eq!(direct, mdcg_spectrum_formula(&base, MirrorKind::Same, 4).unwrap());
        assert_eq!(product_spectrum_formula(&base, &p2, ProductKind::StrongSum), direct);
        assert_eq!(looped_spectrum(&p2), lp2);
    }

    #[test]
    fn local_ring_examples() {
        let d = CayleyKind::Difference;
        assert_eq!(local_ring_unitary_spectrum(4, 2, d).unwrap(), ints(&[(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(local_ring_unitary_spectrum(4, 2, CayleyKind::Sum).unwrap(), ints(&[(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(local_ring_unitary_spectrum(3, 1, d).unwrap(), ints(&[(2, 1), (-1, 2)]));
        assert_eq!(
            local_ring_unitary_spectrum(3, 1, CayleyKind::Sum).unwrap(),
            ints(&[(2, 1), (1, 1), (-1, 1)])
        );
        assert!(local_ring_unitary_spectrum(12, 2, d).is_err());
        assert!(local_ring_unitary_spectrum(4, 3, d).is_err());
    }

    #[test]
    fn mirror_local_ring_examples() {
        let d = CayleyKind::Difference;
        assert_eq!(
            mdcg_local_ring_spectrum(3, 1, MirrorKind::Same, d).unwrap(),
            ints(&[(4, 1), (0, 3), (-2, 2)])
        );
        // Zero-free companion rows: (9,3) gives {13, 1^6, −5^2, −1^9}.
        assert_eq!(
            mdcg_local_ring_spectrum(9, 3, MirrorKind::SameWithIdentity, d).unwrap(),
            ints(&[(13, 1), (1, 6), (-5, 2), (-1, 9)])
        );
        assert_eq!(
            mdcg_local_ring_spectrum(3, 1, MirrorKind::SameWithIdentity, CayleyKind::Sum).unwrap(),
            ints(&[(5, 1), (1, 2), (-1, 3)])
        );
        assert!(matches!(
            mdcg_local_ring_spectrum(4, 2, MirrorKind::Same, d),
            Err(Error::HypothesisViolation(_))
        ));
    }

    #[test]
    fn closed_forms_agree_with_composition() {
        for (r, m) in [(3, 1), (5, 1), (9, 3), (9, 1), (25, 5), (27, 9), (27, 3), (49, 7), (81, 27), (81, 9)] {
            for kind in CayleyKind::ALL {
                let base = local_ring_unitary_spectrum(r, m, kind).unwrap();
                for t in MirrorKind::ALL {
                    if kind == CayleyKind::Sum && t == MirrorKind::SameWithIdentity {
                        continue;
                    }
                    let composed = mdcg_spectrum_formula(&base, t, r).unwrap();
                    assert_eq!(mdcg_local_ring_spectrum(r, m, t, kind).unwrap(), composed, "{r} {m} {t:?} {kind:?}");
                }
            }
        }
    }

    #[test]
    fn sum_closed_form_matches_characters() {
        use crate::finring::{parse_ring_kinds, FiniteRing};
        for (spec, m) in [("gf:3", 1), ("gf:5", 1), ("zpk:3^2", 3), ("gf:3^2", 1), ("zpk:5^2", 5), ("gf:7", 1)] {
            let ring = FiniteRing::from_kinds(&parse_ring_kinds(spec).unwrap()).unwrap();
            let (g, units) = (ring.additive_group(), ring.units());
            let r = ring.order();
            for t in MirrorKind::ALL {
                let chars = mdcg_sum_spectrum_abelian(g, &units, t).unwrap();
                let closed = mdcg_local_ring_spectrum(r, m, t, CayleyKind::Sum).unwrap();
                assert!(crate::spectra::isospectral(&chars, &closed, 1e-9), "{spec} {t:?}: {chars} vs {closed}");
            }
        }
    }

    #[test]
    fn sum_characters_on_z3_identity() {
        // Crossings (g,0) → (−g,1): one looped P2 at 0 and a 4-cycle on ±1.
        let g = FiniteGroup::cyclic(3).unwrap();
        let s = GroupSubset::new(&g, [0]).unwrap();
        let spec = mdcg_sum_spectrum_abelian(&g, &s, MirrorKind::Identity).unwrap();
        assert_eq!(spec, ints(&[(2, 2), (0, 3), (-2, 1)]));
    }

    #[test]
    fn printed_identity_rows_fail_the_trace_test() {
        // Rows with [1]^{2r − r/m} in place of [−1]^r have trace ≠ 0 (difference
        // kind is loopless) and so cannot be spectra of these graphs.
        let (r, m) = (9i64, 3i64);
        let printed = ints(&[(2 * (r - m) + 1, 1), (1, (2 * r - r / m) as usize), (-2 * m + 1, ((r - m) / m) as usize)]);
        let trace: f64 = printed.entries().iter().map(|e| e.value.re * e.mult as f64).sum();
        assert_eq!(printed.total(), 18);
        assert!((trace - 18.0).abs() < 1e-9);
    }

    #[test]
    fn semiprimitive_examples() {
        let d = CayleyKind::Difference;
        assert_eq!(semiprimitive_gp_spectrum(3, 16, d).unwrap(), ints(&[(5, 1), (1, 10), (-3, 5)]));
        assert_eq!(semiprimitive_gp_spectrum(3, 16, CayleyKind::Sum).unwrap(), semiprimitive_gp_spectrum(3, 16, d).unwrap());
        assert_eq!(semiprimitive_gp_spectrum(2, 9, d).unwrap(), ints(&[(4, 1), (1, 4), (-2, 4)]));
        assert!(matches!(semiprimitive_gp_spectrum(3, 7, d), Err(Error::HypothesisViolation(_))));
    }

    #[test]
    fn hamming_examples() {
        assert_eq!(hamming_spectrum(2, 3).unwrap(), ints(&[(4, 1), (1, 4), (-2, 4)]));
        assert_eq!(hamming_spectrum(1, 5).unwrap(), ints(&[(4, 1), (-1, 4)]));
        assert_eq!(hamming_spectrum(3, 2).unwrap(), ints(&[(3, 1), (1, 3), (-1, 3), (-3, 1)]));
    }

    #[test]
    fn gcd_graph_examples() {
        assert_eq!(gcd_graph_spectrum(4, &[1]).unwrap(), ints(&[(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(gcd_graph_spectrum(6, &[1, 2, 3]).unwrap().principal().unwrap().re, 5.0);
        assert!(gcd_graph_spectrum(6, &[4]).is_err());
    }
}
