//! Spectra of Cayley-type graphs: character sums for abelian groups, dense
//! Jacobi for symmetric adjacency, and cross-checks between the two.

use std::sync::Arc;

use num_complex::Complex64;

use super::jacobi::symmetric_eigenvalues;
use super::moments::{moment_check, moment_residual, moments};
use super::spectrum::{check_degree_bound, compare, Spectrum};
use crate::algebra::{CharacterTable, FiniteGroup, GroupSubset};
use crate::error::{Error, Result};
use crate::graphs::{cayley, mirror_dicayley, CayleyKind, Graph};

/// Tolerance for agreement between independent spectrum routes.
pub const CROSS_CHECK_TOL: f64 = 1e-8;
/// Above this many vertices a character spectrum is checked by moments only.
pub const DENSE_CHECK_LIMIT: usize = 1024;
/// Number of moments compared.
pub const MOMENT_ORDER: usize = 12;

/// Spectrum of `X(G,S)` or `X⁺(G,S)` from the characters of an abelian `G`.
///
/// Difference kind: `{χ(S)}`. Sum kind: a real character contributes `χ(S)`;
/// each conjugate pair `{χ, χ̄}` contributes `+|χ(S)|` and `−|χ(S)|`.
pub fn spectrum_exact_abelian(group: &Arc<FiniteGroup>, s: &GroupSubset, kind: CayleyKind) -> Result<Spectrum> {
    s.ensure_over(group)?;
    let table = CharacterTable::new(group)?;
    let sums = table.sums(s);
    let values: Vec<(Complex64, usize)> = match kind {
        CayleyKind::Difference => sums.into_iter().map(|z| (z, 1)).collect(),
        CayleyKind::Sum => {
            let mut out = Vec::with_capacity(sums.len());
            for (i, z) in sums.iter().enumerate() {
                let j = table.conjugate_index(i);
                if j == i {
                    out.push((Complex64::new(z.re, 0.0), 1));
                } else if i < j {
                    out.push((Complex64::new(z.norm(), 0.0), 1));
                    out.push((Complex64::new(-z.norm(), 0.0), 1));
                }
            }
            out
        }
    };
    Ok(Spectrum::from_weighted(values))
}

/// Dense spectrum of a graph with symmetric adjacency, checked against
/// `tr(A)` and `tr(A²)`.
pub fn spectrum_dense_symmetric(graph: &Graph) -> Result<Spectrum> {
    if !graph.is_undirected() {
        return Err(Error::NonSymmetric);
    }
    let n = graph.n();
    let ev = symmetric_eigenvalues(&graph.to_f64(), n)?;
    let trace = graph.loop_vertices().len() as f64;
    let arcs = graph.arc_count() as f64;
    let s1: f64 = ev.iter().sum();
    let s2: f64 = ev.iter().map(|x| x * x).sum();
    if (s1 - trace).abs() > 1e-6 || (s2 - arcs).abs() > 1e-6 {
        return Err(Error::OracleMismatch(format!(
            "eigenvalue sums ({s1}, {s2}) disagree with tr A = {trace}, tr A² = {arcs}"
        )));
    }
    Ok(Spectrum::from_real(ev))
}

/// Spectrum of `graph`, confirmed by an independent route.
///
/// Symmetric adjacency: the dense solve is authoritative and a supplied
/// candidate must agree with it (moments replace the dense solve above
/// `DENSE_CHECK_LIMIT` vertices). Otherwise a candidate is required and
/// must pass the moment check against the graph.
pub fn verified_spectrum(graph: &Graph, candidate: Option<Spectrum>) -> Result<Spectrum> {
    let spec = match candidate {
        Some(c) if !graph.is_undirected() || graph.n() > DENSE_CHECK_LIMIT => {
            let m = moments(graph, MOMENT_ORDER);
            if !moment_check(&c, &m) {
                return Err(Error::OracleMismatch(format!(
                    "character spectrum fails the moment check (scaled residual {:e})",
                    moment_residual(&c, &m)
                )));
            }
            c
        }
        Some(c) => {
            let dense = spectrum_dense_symmetric(graph)?;
            let cmp = compare(&c, &dense, CROSS_CHECK_TOL);
            if !cmp.isospectral {
                return Err(Error::OracleMismatch(format!(
                    "character and dense spectra differ (residual {:e}, unmatched {:?})",
                    cmp.max_residual, cmp.unmatched
                )));
            }
            c
        }
        None if graph.is_undirected() => spectrum_dense_symmetric(graph)?,
        None => return Err(Error::NonSymmetric),
    };
    if spec.total() != graph.n() {
        return Err(Error::MultiplicityMismatch { expected: graph.n(), found: spec.total() });
    }
    check_degree_bound(&spec, graph.max_degree())?;
    Ok(spec)
}

/// Spectrum of `X(G,S)` / `X⁺(G,S)`: characters for abelian groups, dense
/// otherwise; always confirmed by a second route.
pub fn cayley_spectrum(group: &Arc<FiniteGroup>, s: &GroupSubset, kind: CayleyKind) -> Result<Spectrum> {
    let graph = cayley(group, s, kind)?;
    let candidate = if group.is_abelian() { Some(spectrum_exact_abelian(group, s, kind)?) } else { None };
    verified_spectrum(&graph, candidate)
}

/// `G × Z₂` together with `(S×{0}) ∪ (T×{1})`.
pub fn doubled_connection_set(
    group: &Arc<FiniteGroup>,
    s: &GroupSubset,
    t: &GroupSubset,
) -> Result<(Arc<FiniteGroup>, GroupSubset)> {
    s.ensure_over(group)?;
    t.ensure_over(group)?;
    let z2 = FiniteGroup::cyclic(2)?;
    let doubled = FiniteGroup::product(&[group.as_ref(), z2.as_ref()])?;
    let members = s.members().iter().map(|&g| 2 * g).chain(t.members().iter().map(|&g| 2 * g + 1));
    let set = GroupSubset::new(&doubled, members)?;
    Ok((doubled, set))
}

/// Spectrum of `MX(G;S,T)` / `MX⁺(G;S,T)` computed on the graph itself.
///
/// For abelian `G` the candidate comes from the characters of `G × Z₂`; it is
/// then tested against the mirror graph's own adjacency (dense or moments).
pub fn mirror_spectrum(
    group: &Arc<FiniteGroup>,
    s: &GroupSubset,
    t: &GroupSubset,
    kind: CayleyKind,
) -> Result<Spectrum> {
    let graph = mirror_dicayley(group, s, t, kind)?;
    let candidate = if group.is_abelian() {
        let (doubled, set) = doubled_connection_set(group, s, t)?;
        Some(spectrum_exact_abelian(&doubled, &set, kind)?)
    } else {
        None
    };
    verified_spectrum(&graph, candidate)
}
