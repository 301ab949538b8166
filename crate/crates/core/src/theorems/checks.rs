//! Claim checks over a group and connection set.

use std::sync::Arc;

use super::report::{describe, describe_set, Check, VerificationReport, Witness};
use crate::algebra::{boolean_algebra_member, gcd_decomposition, is_eulerian, FiniteGroup, GroupSubset};
use crate::error::Result;
use crate::graphs::{cayley, mirror_dicayley, mirror_index, CayleyKind, Graph};
use crate::products::{named_product, path2, ProductKind};
use crate::spectra::{
    cayley_spectrum, doubled_connection_set, mdcg_spectrum_formula, mdcg_sum_spectrum_abelian, mirror_spectrum, moment_check, moment_residual,
    moments, product_spectrum_formula, spectrum_dense_symmetric, Parity, Spectrum, CROSS_CHECK_TOL,
};

/// The three di-connection sets `{e}`, `S`, `S ∪ {e}`.
pub fn mirror_sets(group: &Arc<FiniteGroup>, s: &GroupSubset) -> [(crate::spectra::MirrorKind, GroupSubset); 3] {
    use crate::spectra::MirrorKind::*;
    [(Identity, GroupSubset::identity_only(group)), (Same, s.clone()), (SameWithIdentity, s.with_identity())]
}

/// Whether some route computes the spectrum of every graph in the family:
/// characters for abelian groups, the dense solver when the adjacency is symmetric.
pub fn spectrum_route(group: &FiniteGroup, s: &GroupSubset, kind: CayleyKind) -> bool {
    if group.is_abelian() {
        return true;
    }
    let p = s.predicates();
    match kind {
        CayleyKind::Difference => p.symmetric,
        CayleyKind::Sum => p.normal,
    }
}

/// `Spec X*(G,S)` followed by the three mirror spectra, each computed on its own graph.
fn family_spectra(group: &Arc<FiniteGroup>, s: &GroupSubset, kind: CayleyKind) -> Result<(Spectrum, [Spectrum; 3])> {
    let base = cayley_spectrum(group, s, kind)?;
    let [a, b, c] = mirror_sets(group, s);
    Ok((
        base,
        [mirror_spectrum(group, s, &a.1, kind)?, mirror_spectrum(group, s, &b.1, kind)?, mirror_spectrum(group, s, &c.1, kind)?],
    ))
}

/// `T = S ∪ {e}` is only considered for `e ∉ S`; otherwise it repeats `T = S`.
fn repeats_same(group: &FiniteGroup, s: &GroupSubset, mk: crate::spectra::MirrorKind) -> bool {
    mk == crate::spectra::MirrorKind::SameWithIdentity && s.contains(group.identity())
}

fn no_route(c: &mut Check, kind: CayleyKind) {
    let need = match kind {
        CayleyKind::Difference => "symmetric",
        CayleyKind::Sum => "normal",
    };
    c.note(format!("{}: non-abelian group and S not {need}, no spectrum route", kind.tag()));
}

/// Instances restricted to one kind carry it as a suffix.
fn tagged(instance: String, kinds: &[CayleyKind]) -> String {
    match kinds {
        [k] => format!("{instance} [{}]", k.tag()),
        _ => instance,
    }
}

fn is_oriented(g: &Graph) -> bool {
    (0..g.n()).all(|u| (u..g.n()).all(|v| !(g.has_arc(u, v) && g.has_arc(v, u))))
}

/// The NEPS identities relating mirror graphs to products with `P₂` and `P̊₂`.
pub fn check_product_decompositions(group: &Arc<FiniteGroup>, s: &GroupSubset) -> VerificationReport {
    product_decompositions_kinds(group, s, &CayleyKind::ALL)
}

/// [`check_product_decompositions`] for one kind.
pub fn check_product_decompositions_for(group: &Arc<FiniteGroup>, s: &GroupSubset, kind: CayleyKind) -> VerificationReport {
    product_decompositions_kinds(group, s, &[kind])
}

fn product_decompositions_kinds(group: &Arc<FiniteGroup>, s: &GroupSubset, kinds: &[CayleyKind]) -> VerificationReport {
    Check::new("thm:prods", tagged(describe(group, s), kinds)).run(|c| {
        let n = group.order();
        let e = GroupSubset::identity_only(group);
        let empty = GroupSubset::empty(group);
        let se = s.with_identity();
        let (p2, p2o) = (path2(false), path2(true));
        // a P₂-major product has (i, g) at i·n + g
        let to_mirror: Vec<usize> = (0..2 * n).map(|v| mirror_index(v % n, v / n)).collect();
        for &kind in kinds {
            let x = cayley(group, s, kind)?;
            let mx = |a: &GroupSubset, b: &GroupSubset| mirror_dicayley(group, a, b, kind);
            let prod = |a: &Graph, b: &Graph, k| named_product(a, b, k);
            let tag = kind.tag();
            let cases: [(&str, Graph, Graph); 8] = [
                ("MX(S,e) = X□P2", mx(s, &e)?, prod(&x, &p2, ProductKind::Cartesian)?),
                ("MX(S,S) = X×P̊2", mx(s, s)?, prod(&x, &p2o, ProductKind::Direct)?),
                ("MX(S,S∪e) = X⊠P2", mx(s, &se)?, prod(&x, &p2, ProductKind::Strong)?),
                ("MX(S,S) = X⊕P2", mx(s, s)?, prod(&x, &p2, ProductKind::StrongSum)?),
                ("MX(∅,S∪e) = P2⊕X", mx(&empty, &se)?, prod(&p2, &x, ProductKind::StrongSum)?.permuted(&to_mirror)?),
                ("X×P2 = MX(∅,S)", prod(&x, &p2, ProductKind::Direct)?, mx(&empty, s)?),
                ("X□P̊2 = (X□P2)°", prod(&x, &p2o, ProductKind::Cartesian)?, prod(&x, &p2, ProductKind::Cartesian)?.with_loops()),
                ("X⊠P̊2 = MX(S,S∪e)°", prod(&x, &p2o, ProductKind::Strong)?, mx(s, &se)?.with_loops()),
            ];
            for (name, a, b) in &cases {
                c.same_graph(&format!("{tag}: {name}"), a, b);
                if !a.same_adjacency(b) {
                    c.note(format!("{tag}: {name} fails"));
                }
            }
        }
        Ok(())
    })
}

/// `MX*(G;S,T)` is the Cayley graph of `G × Z₂` with `(S×{0}) ∪ (T×{1})`, and
/// is `(|S|+|T|)`-regular.
pub fn check_cayley_structure(group: &Arc<FiniteGroup>, s: &GroupSubset, t: &GroupSubset) -> VerificationReport {
    let instance = format!("{} T={}", describe(group, s), describe_set(group, t));
    Check::new("prop:cayley-structure", instance).run(|c| {
        let (doubled, set) = doubled_connection_set(group, s, t)?;
        let d = s.len() + t.len();
        for kind in CayleyKind::ALL {
            let mx = mirror_dicayley(group, s, t, kind)?;
            c.same_graph(&format!("{}: MX(S,T) = X(Gx Z2, S0 ∪ T1)", kind.tag()), &mx, &cayley(&doubled, &set, kind)?);
            let regular = (0..mx.n()).all(|v| mx.out_degree(v) == d && mx.in_degree(v) == d);
            c.expect(regular, || format!("{}: mirror graph is not {d}-regular", kind.tag()));
        }
        Ok(())
    })
}

/// `MX*(G;S,T∪T′) = MX*(G;S,T) ∪ MX*(G;S,T′)`.
pub fn check_unions(group: &Arc<FiniteGroup>, s: &GroupSubset, t: &GroupSubset, t2: &GroupSubset) -> VerificationReport {
    let instance = format!("{} T={} T'={}", describe(group, s), describe_set(group, t), describe_set(group, t2));
    Check::new("eq:unions", instance).run(|c| {
        let joined = t.union(t2)?;
        for kind in CayleyKind::ALL {
            let whole = mirror_dicayley(group, s, &joined, kind)?;
            let parts = mirror_dicayley(group, s, t, kind)?.union(&mirror_dicayley(group, s, t2, kind)?)?;
            c.same_graph(&format!("{}: MX(S,T∪T') = MX(S,T) ∪ MX(S,T')", kind.tag()), &whole, &parts);
        }
        Ok(())
    })
}

/// Directedness and loops of `X*(G,S)` and of the mirror family against the
/// subset predicates.
pub fn check_directedness(group: &Arc<FiniteGroup>, s: &GroupSubset) -> VerificationReport {
    Check::new("prop:directedness", describe(group, s)).run(|c| {
        let p = s.predicates();
        let x = cayley(group, s, CayleyKind::Difference)?;
        c.expect(x.is_undirected() == p.symmetric, || "X undirected ≠ S symmetric".into());
        c.expect(is_oriented(&x) == p.antisymmetric, || "X free of antiparallel arcs ≠ S antisymmetric".into());
        let xp = cayley(group, s, CayleyKind::Sum)?;
        c.expect(xp.is_undirected() == p.normal, || "X+ undirected ≠ S normal".into());
        for g in 0..group.order() {
            let sq = group.combine_unchecked(g, g);
            c.expect(xp.has_arc(g, g) == s.contains(sq), || format!("X+ loop at {g} ≠ g² ∈ S"));
        }
        for (mk, t) in mirror_sets(group, s) {
            let m = mirror_dicayley(group, s, &t, CayleyKind::Difference)?;
            let mp = mirror_dicayley(group, s, &t, CayleyKind::Sum)?;
            let tag = mk.tag();
            c.expect(m.is_undirected() == p.symmetric, || format!("T={tag}: MX undirected ≠ S symmetric"));
            c.expect(mp.is_undirected() == p.normal, || format!("T={tag}: MX+ undirected ≠ S normal"));
            let all_looped = m.loop_vertices().len() == m.n();
            c.expect(all_looped == p.contains_identity, || format!("T={tag}: MX looped everywhere ≠ e ∈ S"));
            for g in 0..group.order() {
                let want = s.contains(group.combine_unchecked(g, g));
                let got = [0, 1].map(|i| mp.has_arc(mirror_index(g, i), mirror_index(g, i)));
                c.expect(got == [want, want], || format!("T={tag}: MX+ loops at ({g},*) ≠ g² ∈ S"));
            }
        }
        Ok(())
    })
}

/// The mirror spectra obtained from the base spectrum agree with the mirror
/// graphs' own spectra.
pub fn check_spectrum_formulas(group: &Arc<FiniteGroup>, s: &GroupSubset) -> VerificationReport {
    spectrum_formulas_kinds(group, s, &CayleyKind::ALL)
}

/// [`check_spectrum_formulas`] for one kind.
pub fn check_spectrum_formulas_for(group: &Arc<FiniteGroup>, s: &GroupSubset, kind: CayleyKind) -> VerificationReport {
    spectrum_formulas_kinds(group, s, &[kind])
}

fn spectrum_formulas_kinds(group: &Arc<FiniteGroup>, s: &GroupSubset, kinds: &[CayleyKind]) -> VerificationReport {
    Check::new("prop:spec-bicayleys", tagged(describe(group, s), kinds)).run(|c| {
        let mut any = false;
        for &kind in kinds {
            if !spectrum_route(group, s, kind) {
                no_route(c, kind);
                continue;
            }
            any = true;
            let (base, direct) = family_spectra(group, s, kind)?;
            for ((mk, _), d) in mirror_sets(group, s).iter().zip(&direct) {
                if repeats_same(group, s, *mk) {
                    c.note("e ∈ S: T=se not considered");
                    continue;
                }
                let f = mdcg_spectrum_formula(&base, *mk, group.order())?;
                c.spectra(&format!("{}: T={}", kind.tag(), mk.tag()), &f, d, true);
            }
        }
        if !any {
            c.skip("no spectrum route");
        }
        Ok(())
    })
}

/// Sum-kind mirror spectra over an abelian group against the character
/// formula that accounts for the crossing inversion `(g,0) → (g⁻¹,1)`.
pub fn check_sum_mirror_characters(group: &Arc<FiniteGroup>, s: &GroupSubset) -> VerificationReport {
    Check::new("prop:spec-mirror-sum", describe(group, s)).run(|c| {
        if !group.is_abelian() {
            c.skip("non-abelian group");
            return Ok(());
        }
        let (base, direct) = family_spectra(group, s, CayleyKind::Sum)?;
        for ((mk, _), d) in mirror_sets(group, s).iter().zip(&direct) {
            let f = mdcg_sum_spectrum_abelian(group, s, *mk)?;
            c.spectra(&format!("T={}", mk.tag()), &f, d, true);
            if repeats_same(group, s, *mk) {
                continue;
            }
            let composed = mdcg_spectrum_formula(&base, *mk, group.order())?;
            let agrees = crate::spectra::isospectral(&composed, d, CROSS_CHECK_TOL);
            c.note(format!("T={}: base-spectrum composition {}", mk.tag(), if agrees { "agrees" } else { "differs" }));
        }
        Ok(())
    })
}

fn check_graph_spectrum(c: &mut Check, context: &str, graph: &Graph, formula: &Spectrum) -> Result<()> {
    if graph.is_undirected() {
        let dense = spectrum_dense_symmetric(graph)?;
        c.spectra(context, formula, &dense, true);
    } else {
        let m = moments(graph, 12);
        if !moment_check(formula, &m) {
            c.fail(Witness::Spectrum {
                context: format!("{context}: moment check"),
                expected_isospectral: true,
                residual: Some(moment_residual(formula, &m)),
                unmatched: None,
            });
        }
    }
    Ok(())
}

/// Spectra of `X*(G,S) ∘ P₂` for the four named products against `λ+μ`, `λμ`,
/// `λ+μ+λμ`, `λ+λμ`.
pub fn check_product_spectra(group: &Arc<FiniteGroup>, s: &GroupSubset) -> VerificationReport {
    product_spectra_kinds(group, s, &CayleyKind::ALL)
}

/// [`check_product_spectra`] for one kind.
pub fn check_product_spectra_for(group: &Arc<FiniteGroup>, s: &GroupSubset, kind: CayleyKind) -> VerificationReport {
    product_spectra_kinds(group, s, &[kind])
}

fn product_spectra_kinds(group: &Arc<FiniteGroup>, s: &GroupSubset, kinds: &[CayleyKind]) -> VerificationReport {
    Check::new("thm:prods-spectra", tagged(describe(group, s), kinds)).run(|c| {
        let p2 = path2(false);
        let p2_spec = Spectrum::from_integers(&[(1, 1), (-1, 1)]);
        let mut any = false;
        for &kind in kinds {
            if !spectrum_route(group, s, kind) {
                no_route(c, kind);
                continue;
            }
            any = true;
            let x = cayley(group, s, kind)?;
            let base = cayley_spectrum(group, s, kind)?;
            if x.has_loops() {
                // (A+I)⊗(B+I) − I has entry 2 where a loop meets an edge of P2
                c.note(format!("{}: X has loops, so the strong product is not the 0/1 matrix behind λ+μ+λμ", kind.tag()));
            }
            for pk in ProductKind::ALL {
                let graph = named_product(&x, &p2, pk)?;
                let formula = product_spectrum_formula(&base, &p2_spec, pk);
                check_graph_spectrum(c, &format!("{}: {}", kind.tag(), pk.name()), &graph, &formula)?;
            }
        }
        if !any {
            c.skip("no spectrum route");
        }
        Ok(())
    })
}

/// For `|S| ≥ 2` and `e ∉ S` the three mirror graphs are pairwise non-isospectral.
pub fn check_crossed_nonisospectrality(group: &Arc<FiniteGroup>, s: &GroupSubset) -> VerificationReport {
    crossed_nonisospectrality_kinds(group, s, &CayleyKind::ALL)
}

/// [`check_crossed_nonisospectrality`] for one kind.
pub fn check_crossed_nonisospectrality_for(group: &Arc<FiniteGroup>, s: &GroupSubset, kind: CayleyKind) -> VerificationReport {
    crossed_nonisospectrality_kinds(group, s, &[kind])
}

fn crossed_nonisospectrality_kinds(group: &Arc<FiniteGroup>, s: &GroupSubset, kinds: &[CayleyKind]) -> VerificationReport {
    Check::new("prop:isospec-T-T'", tagged(describe(group, s), kinds)).run(|c| {
        if s.len() < 2 {
            c.skip("|S| < 2");
            return Ok(());
        }
        if s.contains(group.identity()) {
            c.skip("e ∈ S");
            return Ok(());
        }
        let mut any = false;
        for &kind in kinds {
            if !spectrum_route(group, s, kind) {
                no_route(c, kind);
                continue;
            }
            any = true;
            let (_, m) = family_spectra(group, s, kind)?;
            let sets = mirror_sets(group, s);
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                let ctx = format!("{}: T={} vs T={}", kind.tag(), sets[i].0.tag(), sets[j].0.tag());
                c.spectra(&ctx, &m[i], &m[j], false);
            }
        }
        if !any {
            c.skip("no spectrum route");
        }
        Ok(())
    })
}

/// `MX(G;S,T)` and `MX⁺(G;S,T)` are isospectral exactly when `X(G,S)` and
/// `X⁺(G,S)` are.
pub fn check_isosp_transfer(group: &Arc<FiniteGroup>, s: &GroupSubset) -> VerificationReport {
    Check::new("thm:isosp-X-X+", describe(group, s)).run(|c| {
        if !CayleyKind::ALL.iter().all(|&k| spectrum_route(group, s, k)) {
            c.skip("needs spectra of both kinds");
            return Ok(());
        }
        let (b, m) = family_spectra(group, s, CayleyKind::Difference)?;
        let (bp, mp) = family_spectra(group, s, CayleyKind::Sum)?;
        let base_iso = crate::spectra::isospectral(&b, &bp, CROSS_CHECK_TOL);
        c.note(format!("base pair isospectral: {base_iso}"));
        for ((mk, _), (x, y)) in mirror_sets(group, s).iter().zip(m.iter().zip(&mp)) {
            if repeats_same(group, s, *mk) {
                continue;
            }
            c.spectra(&format!("T={}: MX vs MX+", mk.tag()), x, y, base_iso);
        }
        Ok(())
    })
}

/// Same-family mirror graphs over `(G₁,S₁)` and `(G₂,S₂)` are isospectral
/// exactly when the base graphs are; isospectral instances share `|G|` and `|S|`.
pub fn check_gen_isosp(
    g1: &Arc<FiniteGroup>,
    s1: &GroupSubset,
    g2: &Arc<FiniteGroup>,
    s2: &GroupSubset,
) -> VerificationReport {
    gen_isosp_kinds(g1, s1, g2, s2, &CayleyKind::ALL)
}

/// [`check_gen_isosp`] for one kind.
pub fn check_gen_isosp_for(
    g1: &Arc<FiniteGroup>,
    s1: &GroupSubset,
    g2: &Arc<FiniteGroup>,
    s2: &GroupSubset,
    kind: CayleyKind,
) -> VerificationReport {
    gen_isosp_kinds(g1, s1, g2, s2, &[kind])
}

fn gen_isosp_kinds(
    g1: &Arc<FiniteGroup>,
    s1: &GroupSubset,
    g2: &Arc<FiniteGroup>,
    s2: &GroupSubset,
    kinds: &[CayleyKind],
) -> VerificationReport {
    let instance = tagged(format!("{} vs {}", describe(g1, s1), describe(g2, s2)), kinds);
    Check::new("thm:gen-isosp", instance).run(|c| {
        let mut any = false;
        for &kind in kinds {
            if !spectrum_route(g1, s1, kind) || !spectrum_route(g2, s2, kind) {
                no_route(c, kind);
                continue;
            }
            any = true;
            let tag = kind.tag();
            let (b1, m1) = family_spectra(g1, s1, kind)?;
            let (b2, m2) = family_spectra(g2, s2, kind)?;
            let base_iso = crate::spectra::isospectral(&b1, &b2, CROSS_CHECK_TOL);
            c.note(format!("{tag}: base isospectral: {base_iso}"));
            if base_iso {
                c.expect(g1.order() == g2.order() && s1.len() == s2.len(), || {
                    format!("{tag}: isospectral bases with |G| {} vs {} and |S| {} vs {}", g1.order(), g2.order(), s1.len(), s2.len())
                });
            }
            for ((mk, _), (x, y)) in mirror_sets(g1, s1).iter().zip(m1.iter().zip(&m2)) {
                if repeats_same(g1, s1, *mk) || repeats_same(g2, s2, *mk) {
                    continue;
                }
                c.spectra(&format!("{tag}: T={}", mk.tag()), x, y, base_iso);
            }
            let twins = |g: &Arc<FiniteGroup>, s: &GroupSubset| -> Result<usize> {
                Ok(cayley(g, s, kind)?.twin_classes().iter().filter(|t| t.len() > 1).count())
            };
            c.note(format!("{tag}: twin classes {} vs {}", twins(g1, s1)?, twins(g2, s2)?));
        }
        if !any {
            c.skip("no spectrum route");
        }
        Ok(())
    })
}

/// Twin vertices exist in the first Cayley (sum) graph and not in the second,
/// so the two are not isomorphic.
pub fn check_twin_witness(
    g1: &Arc<FiniteGroup>,
    s1: &GroupSubset,
    g2: &Arc<FiniteGroup>,
    s2: &GroupSubset,
) -> VerificationReport {
    let instance = format!("{} vs {}", describe(g1, s1), describe(g2, s2));
    Check::new("ex:twins", instance).run(|c| {
        for kind in CayleyKind::ALL {
            let t1 = cayley(g1, s1, kind)?.twin_classes().into_iter().filter(|t| t.len() > 1).count();
            let t2 = cayley(g2, s2, kind)?.twin_classes().into_iter().filter(|t| t.len() > 1).count();
            c.note(format!("{}: twin classes {t1} vs {t2}", kind.tag()));
            c.expect(t1 > 0 && t2 == 0, || format!("{}: twin classes {t1} vs {t2}", kind.tag()));
        }
        Ok(())
    })
}

/// Integrality transfers to the mirror family, the `{e}` family flips parity,
/// the `S` family is even and the `S∪{e}` family odd; symmetry transfers to the
/// `{e}` and `S` families and fails for `S∪{e}` when `e ∉ S`.
pub fn check_parity_and_symmetry(group: &Arc<FiniteGroup>, s: &GroupSubset) -> VerificationReport {
    parity_and_symmetry_kinds(group, s, &CayleyKind::ALL)
}

/// [`check_parity_and_symmetry`] for one kind.
pub fn check_parity_and_symmetry_for(group: &Arc<FiniteGroup>, s: &GroupSubset, kind: CayleyKind) -> VerificationReport {
    parity_and_symmetry_kinds(group, s, &[kind])
}

fn parity_and_symmetry_kinds(group: &Arc<FiniteGroup>, s: &GroupSubset, kinds: &[CayleyKind]) -> VerificationReport {
    Check::new("cor:parity-symmetry", tagged(describe(group, s), kinds)).run(|c| {
        let mut any = false;
        let e_in_s = s.contains(group.identity());
        for &kind in kinds {
            if !spectrum_route(group, s, kind) {
                no_route(c, kind);
                continue;
            }
            any = true;
            let tag = kind.tag();
            let (base, m) = family_spectra(group, s, kind)?;
            let b = base.classify();
            let [ce, cs, cse] = [0, 1, 2].map(|i| m[i].classify());
            c.note(format!(
                "{tag}: base {:?}/{}, T=e {:?}/{}, T=s {:?}/{}, T=se {:?}/{}",
                b.parity, b.symmetric, ce.parity, ce.symmetric, cs.parity, cs.symmetric, cse.parity, cse.symmetric
            ));
            for (t, cl) in [("e", &ce), ("s", &cs), ("se", &cse)].into_iter().take(if e_in_s { 2 } else { 3 }) {
                c.expect(cl.integral == b.integral, || format!("{tag}: T={t} integral {} but base {}", cl.integral, b.integral));
            }
            if b.integral {
                let flipped = match b.parity {
                    Parity::Even => Parity::Odd,
                    Parity::Odd => Parity::Even,
                    other => other,
                };
                c.expect(ce.parity == flipped, || format!("{tag}: T=e parity {:?}, base {:?}", ce.parity, b.parity));
                c.expect(cs.parity == Parity::Even, || format!("{tag}: T=s parity {:?}", cs.parity));
                c.expect(e_in_s || cse.parity == Parity::Odd, || format!("{tag}: T=se parity {:?}", cse.parity));
            }
            c.expect(ce.symmetric == b.symmetric, || format!("{tag}: T=e symmetric {} vs base {}", ce.symmetric, b.symmetric));
            c.expect(cs.symmetric == b.symmetric, || format!("{tag}: T=s symmetric {} vs base {}", cs.symmetric, b.symmetric));
            if b.symmetric && !e_in_s {
                c.expect(!cse.symmetric, || format!("{tag}: T=se symmetric although e ∉ S"));
            }
        }
        if !any {
            c.skip("no spectrum route");
        }
        Ok(())
    })
}

/// Which integrality criterion applies to `(G, S)`, if any.
pub fn integrality_criterion(group: &FiniteGroup, s: &GroupSubset) -> Result<Option<(&'static str, bool)>> {
    if group.is_cyclic_residues() {
        return Ok(Some(("gcd-class union", gcd_decomposition(s)?.is_union())));
    }
    if group.is_abelian() {
        return Ok(Some(("Boolean algebra of subgroups", boolean_algebra_member(s)?)));
    }
    if s.predicates().normal {
        return Ok(Some(("Eulerian", is_eulerian(s))));
    }
    Ok(None)
}

/// The mirror graphs (and the base graph) are integral exactly when the
/// structural criterion for `S` holds.
pub fn check_integrality_criterion(group: &Arc<FiniteGroup>, s: &GroupSubset) -> VerificationReport {
    integrality_criterion_kinds(group, s, &CayleyKind::ALL)
}

/// [`check_integrality_criterion`] for one kind.
pub fn check_integrality_criterion_for(group: &Arc<FiniteGroup>, s: &GroupSubset, kind: CayleyKind) -> VerificationReport {
    integrality_criterion_kinds(group, s, &[kind])
}

fn integrality_criterion_kinds(group: &Arc<FiniteGroup>, s: &GroupSubset, kinds: &[CayleyKind]) -> VerificationReport {
    Check::new("prop:integral-mdcgs", tagged(describe(group, s), kinds)).run(|c| {
        if s.contains(group.identity()) {
            c.skip("e ∈ S");
            return Ok(());
        }
        let Some((name, holds)) = integrality_criterion(group, s)? else {
            c.skip("no criterion: non-abelian group and S not normal");
            return Ok(());
        };
        c.note(format!("{name}: {holds}"));
        let mut any = false;
        for &kind in kinds {
            if !spectrum_route(group, s, kind) {
                no_route(c, kind);
                continue;
            }
            any = true;
            let tag = kind.tag();
            let (base, m) = family_spectra(group, s, kind)?;
            let integral = base.classify().integral;
            c.expect(integral == holds, || format!("{tag}: X integral {integral}, {name} {holds}"));
            for ((mk, _), spec) in mirror_sets(group, s).iter().zip(&m) {
                let mi = spec.classify().integral;
                c.expect(mi == holds, || format!("{tag}: T={} integral {mi}, {name} {holds}", mk.tag()));
            }
        }
        if !any {
            c.skip("no spectrum route");
        }
        Ok(())
    })
}

/// From an integral `X(G,S)`, the Cayley graphs of `G × Z₂` with `S × Z₂` and
/// `(S×{0}) ∪ ((S∪{e})×{1})` are even and odd respectively.
pub fn check_cayley_even_odd(group: &Arc<FiniteGroup>, s: &GroupSubset) -> VerificationReport {
    Check::new("thm:cayley-even-odd", describe(group, s)).run(|c| {
        if !spectrum_route(group, s, CayleyKind::Difference) {
            no_route(c, CayleyKind::Difference);
            c.skip("no spectrum route");
            return Ok(());
        }
        if !cayley_spectrum(group, s, CayleyKind::Difference)?.classify().integral {
            c.skip("X(G,S) is not integral");
            return Ok(());
        }
        for (t, want) in [(s.clone(), Parity::Even), (s.with_identity(), Parity::Odd)] {
            let (doubled, set) = doubled_connection_set(group, s, &t)?;
            let got = cayley_spectrum(&doubled, &set, CayleyKind::Difference)?.classify().parity;
            c.note(format!("{} with {} elements: {got:?}", doubled.label(), set.len()));
            c.expect(got == want, || format!("{}: parity {got:?}, wanted {want:?}", doubled.label()));
        }
        Ok(())
    })
}
