//! Claim checks over finite commutative rings: unitary Cayley graphs, their
//! mirror families, and generalized Paley graphs.

use std::sync::Arc;

use super::report::{Check, VerificationReport};
use crate::algebra::{arith::is_prime, FiniteGroup, GroupSubset};
use crate::error::{Error, Result};
use crate::finring::{
    gp_integrality, hamming_gp_parameters, power_residues, semiprimitive_check, FiniteRing, LocalKind,
};
use crate::graphs::{cayley, mirror_dicayley, CayleyKind, Graph};
use crate::products::ProductKind;
use crate::spectra::{
    cayley_spectrum, hamming_spectrum, local_ring_unitary_spectrum, mdcg_local_ring_spectrum, mdcg_spectrum_formula,
    mirror_spectrum, product_spectrum_formula, semiprimitive_gp_spectrum, MirrorKind, Parity, Spectrum,
    SpectrumClass,
};

/// Largest vertex count accepted by [`iterated_pairs`].
pub const ITERATED_VERTEX_CAP: usize = 4096;

/// `MX(R;R*,T)` and `MX⁺(R;R*,T)` with their spectra.
#[derive(Debug, Clone)]
pub struct CertifiedPair {
    pub mirror: MirrorKind,
    pub graph: Graph,
    pub sum_graph: Graph,
    pub spectrum: Spectrum,
    pub sum_spectrum: Spectrum,
    pub isospectral: bool,
    pub class: SpectrumClass,
}

#[derive(Debug, Clone)]
pub struct EvenOddPair {
    pub ring: String,
    /// `Spec X(R,R*)`.
    pub base: Spectrum,
    pub zero_pair: CertifiedPair,
    pub even_pair: CertifiedPair,
    pub odd_pair: CertifiedPair,
    pub certification: VerificationReport,
}

/// Some factor has `r = 2m` and some factor has odd size.
pub fn even_odd_hypothesis(ring: &FiniteRing) -> Result<()> {
    let even = ring.factors().iter().any(|f| f.size() == 2 * f.maximal_ideal_size());
    let odd = ring.factors().iter().any(|f| f.size() % 2 == 1);
    if even && odd {
        return Ok(());
    }
    let mut missing = Vec::new();
    if !even {
        missing.push("local factor with r = 2m");
    }
    if !odd {
        missing.push("local factor of odd size");
    }
    Err(Error::HypothesisViolation(format!("{ring} has no {}", missing.join(" and no "))))
}

fn mirror_set(ring: &FiniteRing, mk: MirrorKind) -> GroupSubset {
    let units = ring.units();
    match mk {
        MirrorKind::Identity => ring.zero_set(),
        MirrorKind::Same => units,
        MirrorKind::SameWithIdentity => units.with_identity(),
    }
}

/// `Spec X*(R,R*)` composed from the local factors: the unitary graph of a
/// product is the tensor product of the factors' unitary graphs.
pub fn kronecker_unitary_spectrum(ring: &FiniteRing, kind: CayleyKind) -> Result<Spectrum> {
    let mut acc = Spectrum::from_integers(&[(1, 1)]);
    for f in ring.factors() {
        let local = local_ring_unitary_spectrum(f.size(), f.maximal_ideal_size(), kind)?;
        acc = product_spectrum_formula(&acc, &local, ProductKind::Direct);
    }
    Ok(acc)
}

/// Builds and certifies the `{0}`, `R*` and `R*∪{0}` pairs over `R`.
///
/// The `R*` pair must be even, symmetric and bipartite; the `R*∪{0}` pair odd,
/// non-symmetric and non-bipartite; all three pairs isospectral and integral.
/// Non-isomorphism is witnessed by loop placement: every odd-size factor has
/// a looped sum graph and a loopless difference graph.
pub fn build_even_odd_pair(ring: &FiniteRing) -> Result<EvenOddPair> {
    even_odd_hypothesis(ring)?;
    let group = ring.additive_group();
    let units = ring.units();
    let mut c = Check::new("thm:main", format!("R={ring}"));
    let base = cayley_spectrum(group, &units, CayleyKind::Difference)?;
    let base_sum = cayley_spectrum(group, &units, CayleyKind::Sum)?;
    c.spectra("G_R vs G_R+", &base, &base_sum, true);
    for (kind, spec) in [(CayleyKind::Difference, &base), (CayleyKind::Sum, &base_sum)] {
        let composed = kronecker_unitary_spectrum(ring, kind)?;
        c.spectra(&format!("{}: tensor of local factors", kind.tag()), &composed, spec, true);
    }

    let mut pairs = Vec::with_capacity(3);
    for mk in MirrorKind::ALL {
        let t = mirror_set(ring, mk);
        let graph = mirror_dicayley(group, &units, &t, CayleyKind::Difference)?;
        let sum_graph = mirror_dicayley(group, &units, &t, CayleyKind::Sum)?;
        let spectrum = mirror_spectrum(group, &units, &t, CayleyKind::Difference)?;
        let sum_spectrum = mirror_spectrum(group, &units, &t, CayleyKind::Sum)?;
        let tag = mk.tag();
        let isospectral = c.spectra(&format!("T={tag}: MX vs MX+"), &spectrum, &sum_spectrum, true);
        let class = spectrum.classify();
        for (name, spec, g) in [("MX", &spectrum, &graph), ("MX+", &sum_spectrum, &sum_graph)] {
            let cl = spec.classify();
            c.expect(cl.integral, || format!("T={tag}: {name} spectrum not integral"));
            c.note(format!("T={tag}: {name} {:?}, symmetric {}", cl.parity, cl.symmetric));
            match mk {
                MirrorKind::Identity => {}
                MirrorKind::Same => {
                    c.expect(cl.parity == Parity::Even, || format!("T={tag}: {name} parity {:?}", cl.parity));
                    c.expect(cl.symmetric, || format!("T={tag}: {name} spectrum not symmetric"));
                    c.expect(cl.bipartite_criterion, || format!("T={tag}: {name} -λ1 missing"));
                    c.expect(g.is_bipartite()?, || format!("T={tag}: {name} not bipartite"));
                }
                MirrorKind::SameWithIdentity => {
                    c.expect(cl.parity == Parity::Odd, || format!("T={tag}: {name} parity {:?}", cl.parity));
                    c.expect(!cl.symmetric, || format!("T={tag}: {name} spectrum symmetric"));
                    c.expect(!cl.bipartite_criterion, || format!("T={tag}: {name} -λ1 present"));
                    c.expect(!g.is_bipartite()?, || format!("T={tag}: {name} bipartite"));
                }
            }
        }
        pairs.push(CertifiedPair { mirror: mk, graph, sum_graph, spectrum, sum_spectrum, isospectral, class });
    }

    for f in ring.factors().iter().filter(|f| f.size() % 2 == 1) {
        let local = FiniteRing::from_kinds(&[f.kind()])?;
        let lu = local.units();
        let diff_loops = cayley(local.additive_group(), &lu, CayleyKind::Difference)?.has_loops();
        let sum_loops = cayley(local.additive_group(), &lu, CayleyKind::Sum)?.has_loops();
        c.expect(sum_loops && !diff_loops, || {
            format!("{}: sum graph looped {sum_loops}, difference graph looped {diff_loops}", f.label())
        });
    }

    let certification = c.finish();
    let mut it = pairs.into_iter();
    let (zero_pair, even_pair, odd_pair) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
    Ok(EvenOddPair { ring: ring.to_string(), base, zero_pair, even_pair, odd_pair, certification })
}

fn z2_power_product(group: &Arc<FiniteGroup>, k: u32) -> Result<Arc<FiniteGroup>> {
    let z2 = FiniteGroup::cyclic(2)?;
    let mut factors: Vec<&FiniteGroup> = vec![group.as_ref()];
    factors.extend((0..k).map(|_| z2.as_ref()));
    FiniteGroup::product(&factors)
}

/// For `n = 1..=n_max`, the pair `X(G × Z₂ⁿ, S × Z₂ⁿ)`, `X⁺(G × Z₂ⁿ, S × Z₂ⁿ)`
/// over `G = R × Z₂`, `S = R* × Z₂` (the even pair of `R` as Cayley graphs)
/// is isospectral with integral even spectrum.
///
/// A second report per `n` covers the ring variant `MX(R × F₂ⁿ; U, U)` with
/// `U = R* × {1}ⁿ` the units of `R × F₂ⁿ`.
pub fn iterated_pairs(ring: &FiniteRing, n_max: u32) -> Result<Vec<VerificationReport>> {
    even_odd_hypothesis(ring)?;
    let vertices = |n: u32| ring.order().saturating_mul(1usize << (n + 1));
    if vertices(n_max) > ITERATED_VERTEX_CAP {
        return Err(Error::SizeBound { what: "iterated pair", size: vertices(n_max), cap: ITERATED_VERTEX_CAP });
    }
    let units = ring.units();
    let mut out = Vec::new();
    for n in 1..=n_max {
        let instance = format!("R={ring} n={n} ({} vertices)", vertices(n));
        out.push(Check::new("cor:iterated", instance.clone()).run(|c| {
            let g = z2_power_product(ring.additive_group(), n + 1)?;
            let block = 1usize << (n + 1);
            let s = GroupSubset::new(&g, units.members().iter().flat_map(|&u| (0..block).map(move |j| u * block + j)))?;
            let x = cayley_spectrum(&g, &s, CayleyKind::Difference)?;
            let xp = cayley_spectrum(&g, &s, CayleyKind::Sum)?;
            c.spectra("X vs X+", &x, &xp, true);
            let class = x.classify();
            c.expect(class.parity == Parity::Even, || format!("parity {:?}", class.parity));
            c.note(format!("spectrum {}", x.to_table()));
            Ok(())
        }));
        out.push(Check::new("cor:iterated-units", instance).run(|c| {
            let g = z2_power_product(ring.additive_group(), n)?;
            let block = 1usize << n;
            let s = GroupSubset::new(&g, units.members().iter().map(|&u| u * block + block - 1))?;
            let x = mirror_spectrum(&g, &s, &s, CayleyKind::Difference)?;
            let xp = mirror_spectrum(&g, &s, &s, CayleyKind::Sum)?;
            c.spectra("MX vs MX+", &x, &xp, true);
            let class = x.classify();
            c.expect(class.parity == Parity::Even, || format!("parity {:?}", class.parity));
            Ok(())
        }));
    }
    Ok(out)
}

/// Local rings of size at most `max_size` from every implemented family,
/// without repeating `Z_p = F_p` or `GR(p^s,1) = Z_{p^s}`.
pub fn local_ring_catalog(max_size: usize) -> Vec<LocalKind> {
    let mut out = Vec::new();
    let fits = |p: u64, e: u32| p.checked_pow(e).is_some_and(|v| v as usize <= max_size);
    for p in (2..=max_size as u64).filter(|&p| is_prime(p)) {
        for m in (1..).take_while(|&m| fits(p, m)) {
            out.push(LocalKind::Field { p, m });
        }
        for k in (2..).take_while(|&k| fits(p, k)) {
            out.push(LocalKind::IntegersMod { p, k });
        }
        for s in 2..8 {
            for t in (2..).take_while(|&t| fits(p, s * t)) {
                out.push(LocalKind::GaloisRing { p, s, t });
            }
        }
        for m in 1..8 {
            for t in (2..).take_while(|&t| fits(p, m * t)) {
                out.push(LocalKind::Truncated { p, m, t });
            }
        }
    }
    out
}

/// Dense and character spectra of `X*(R,R*)` and of its mirror family match
/// the closed forms in `r = |R|`, `m = |𝔪|`.
pub fn check_local_ring(kind: LocalKind) -> VerificationReport {
    Check::new("cor:spec-GRR*", kind.label()).run(|c| {
        let ring = FiniteRing::from_kinds(&[kind])?;
        let f = &ring.factors()[0];
        let (r, m) = (f.size(), f.maximal_ideal_size());
        c.note(format!("r={r} m={m}"));
        let group = ring.additive_group();
        let units = ring.units();
        for ck in CayleyKind::ALL {
            let tag = ck.tag();
            let local = local_ring_unitary_spectrum(r, m, ck)?;
            c.spectra(&format!("{tag}: X(R,R*)"), &local, &cayley_spectrum(group, &units, ck)?, true);
            for mk in MirrorKind::ALL {
                let expected = if r % 2 == 1 {
                    mdcg_local_ring_spectrum(r, m, mk, ck)?
                } else {
                    mdcg_spectrum_formula(&local, mk, r)?
                };
                let direct = mirror_spectrum(group, &units, &mirror_set(&ring, mk), ck)?;
                c.spectra(&format!("{tag}: T={}", mk.tag()), &expected, &direct, true);
            }
        }
        Ok(())
    })
}

fn field(q: u64) -> Result<FiniteRing> {
    let (p, m) = crate::algebra::arith::prime_power(q)
        .ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
    FiniteRing::from_kinds(&[LocalKind::Field { p, m }])
}

/// `Γ(k, q)` is integral exactly when `k | (q−1)/(p−1)`, for every `k | q−1`.
pub fn check_gp_integrality(q: u64) -> VerificationReport {
    Check::new("thm:gp-integral", format!("F{q}")).run(|c| {
        let f = field(q)?;
        for k in (1..q).filter(|k| (q - 1).is_multiple_of(*k)) {
            let s = power_residues(&f, k)?;
            let integral = cayley_spectrum(f.additive_group(), &s, CayleyKind::Difference)?.classify().integral;
            let predicted = gp_integrality(k, q)?;
            c.expect(integral == predicted, || format!("k={k}: integral {integral}, criterion {predicted}"));
        }
        Ok(())
    })
}

/// A semiprimitive `Γ(k,q)` (and `Γ⁺(k,q)`) has the three-valued spectrum.
pub fn check_semiprimitive(k: u64, q: u64) -> VerificationReport {
    Check::new("thm:semiprimitive", format!("GP({k},{q})")).run(|c| {
        if semiprimitive_check(k, q)?.is_none() {
            c.skip("not a semiprimitive pair");
            return Ok(());
        }
        let f = field(q)?;
        let s = power_residues(&f, k)?;
        for ck in CayleyKind::ALL {
            let formula = semiprimitive_gp_spectrum(k, q, ck)?;
            let direct = cayley_spectrum(f.additive_group(), &s, ck)?;
            c.spectra(ck.tag(), &formula, &direct, true);
        }
        Ok(())
    })
}

/// `Γ(k, p^{bm})` with `k = (p^{bm}−1)/(b(p^m−1))` is the Hamming graph `H(b, p^m)`.
pub fn check_hamming(b: u32, p: u64, m: u32) -> VerificationReport {
    Check::new("thm:hamming-gp", format!("b={b} p={p} m={m}")).run(|c| {
        let Some((k, q)) = hamming_gp_parameters(b, p, m)? else {
            c.skip("b does not divide (p^bm - 1)/(p^m - 1)");
            return Ok(());
        };
        c.note(format!("GP({k},{q})"));
        let f = field(q)?;
        let s = power_residues(&f, k)?;
        let direct = cayley_spectrum(f.additive_group(), &s, CayleyKind::Difference)?;
        c.spectra("H(b,p^m)", &hamming_spectrum(b, p.pow(m))?, &direct, true);
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> FiniteRing {
        s.parse().unwrap()
    }

    #[test]
    fn z4_z3_pairs() {
        let pair = build_even_odd_pair(&ring("zpk:2^2*gf:3")).unwrap();
        assert_eq!(pair.even_pair.spectrum.to_table(), "{[8]^1, [4]^2, [0]^18, [-4]^2, [-8]^1}");
        assert_eq!(pair.odd_pair.spectrum.to_table(), "{[9]^1, [5]^2, [1]^6, [-1]^12, [-3]^2, [-7]^1}");
        assert_eq!(pair.zero_pair.spectrum.to_table(), "{[5]^1, [3]^3, [1]^8, [-1]^8, [-3]^3, [-5]^1}");
        assert!(pair.zero_pair.isospectral && pair.even_pair.isospectral);
        // The sum graph's crossing arcs (g,0) → (−g,1) pair the ±2 eigenvectors
        // of the Z3 factor differently, so the odd pair splits.
        assert!(!pair.odd_pair.isospectral);
        assert_eq!(pair.odd_pair.sum_spectrum.to_table(), "{[9]^1, [5]^1, [3]^1, [1]^8, [-1]^10, [-3]^1, [-5]^1, [-7]^1}");
        assert!(pair.odd_pair.sum_spectrum.classify().parity == Parity::Odd);
        assert!(pair.certification.failed());
        assert_eq!(
            pair.certification.witness.as_ref().map(|w| matches!(w, crate::theorems::Witness::Spectrum { context, .. } if context == "T=se: MX vs MX+")),
            Some(true)
        );
    }

    #[test]
    fn hypothesis_needs_both_factors() {
        assert!(matches!(build_even_odd_pair(&ring("gf:3")), Err(Error::HypothesisViolation(_))));
        assert!(matches!(build_even_odd_pair(&ring("zpk:2^2")), Err(Error::HypothesisViolation(_))));
        // r = 16, m = 4: an even factor, but not of the form r = 2m
        assert!(matches!(build_even_odd_pair(&ring("gr:2^2:2*gf:3")), Err(Error::HypothesisViolation(_))));
    }

    #[test]
    fn even_factor_without_r_eq_2m_breaks_isospectrality() {
        let r = ring("gr:2^2:2*gf:3");
        let g = r.additive_group();
        let u = r.units();
        let x = cayley_spectrum(g, &u, CayleyKind::Difference).unwrap();
        let xp = cayley_spectrum(g, &u, CayleyKind::Sum).unwrap();
        assert!(!crate::spectra::isospectral(&x, &xp, 1e-8));
    }

    #[test]
    fn iterated_cap() {
        let r = ring("zpk:2^2*gf:3");
        assert!(matches!(iterated_pairs(&r, 10), Err(Error::SizeBound { .. })));
        let reps = iterated_pairs(&r, 1).unwrap();
        assert!(reps.iter().all(VerificationReport::passed), "{reps:?}");
    }

    #[test]
    fn catalog_has_the_named_rings() {
        let cat = local_ring_catalog(81);
        for k in ["gr:2^2:2", "zpk:3^2", "gf:3^3", "quot:3^1:2"] {
            assert!(cat.contains(&k.parse().unwrap()), "{k}");
        }
        let mut seen = std::collections::HashSet::new();
        assert!(cat.iter().all(|k| seen.insert(*k)));
    }

    #[test]
    fn small_local_rings() {
        for k in ["zpk:2^2", "gf:3", "gf:2^2", "quot:2^1:2", "zpk:3^2"] {
            let rep = check_local_ring(k.parse().unwrap());
            assert!(rep.passed(), "{rep:?}");
        }
    }

    #[test]
    fn gp_checks() {
        assert!(check_semiprimitive(3, 16).passed());
        assert!(check_hamming(2, 3, 1).passed());
        assert!(check_gp_integrality(16).passed());
    }
}
