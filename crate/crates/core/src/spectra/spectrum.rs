//! Eigenvalue multisets, classification and comparison.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default radius within which eigenvalues are merged.
pub const MERGE_TOL: f64 = 1e-8;
/// Default tolerance for snapping eigenvalues to integers.
pub const SNAP_TOL: f64 = 1e-6;

/// One distinct eigenvalue with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenvalue {
    pub value: Complex64,
    pub mult: usize,
}

/// A multiset of complex eigenvalues in canonical order: real part
/// descending, then imaginary part descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    entries: Vec<Eigenvalue>,
}

fn clean(x: f64) -> f64 {
    if x.abs() < 1e-13 {
        0.0
    } else {
        x
    }
}

/// Total order used for the canonical sort. Coordinates are compared on a
/// 1e-7 grid first so that rounding noise does not reorder entries.
fn canonical_cmp(a: &Complex64, b: &Complex64) -> Ordering {
    let key = |x: f64| (x * 1e7).round() as i64;
    key(b.re)
        .cmp(&key(a.re))
        .then(key(b.im).cmp(&key(a.im)))
        .then(b.re.total_cmp(&a.re))
        .then(b.im.total_cmp(&a.im))
}

impl Spectrum {
    /// Merges values closer than `tol` (single-linkage against the running
    /// cluster mean, in canonical order).
    pub fn from_weighted_tol(values: impl IntoIterator<Item = (Complex64, usize)>, tol: f64) -> Self {
        let mut items: Vec<(Complex64, usize)> = values.into_iter().filter(|&(_, m)| m > 0).collect();
        items.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
        // (sum of values weighted, total multiplicity)
        let mut clusters: Vec<(Complex64, usize)> = Vec::new();
        for (v, m) in items {
            let hit = clusters
                .iter_mut()
                .find(|(sum, count)| (*sum / *count as f64 - v).norm() <= tol);
            match hit {
                Some((sum, count)) => {
                    *sum += v * m as f64;
                    *count += m;
                }
                None => clusters.push((v * m as f64, m)),
            }
        }
        let mut entries: Vec<Eigenvalue> = clusters
            .into_iter()
            .map(|(sum, count)| {
                let mean = sum / count as f64;
                Eigenvalue { value: Complex64::new(clean(mean.re), clean(mean.im)), mult: count }
            })
            .collect();
        entries.sort_by(|a, b| canonical_cmp(&a.value, &b.value));
        Spectrum { entries }
    }

    pub fn from_weighted(values: impl IntoIterator<Item = (Complex64, usize)>) -> Self {
        Self::from_weighted_tol(values, MERGE_TOL)
    }

    pub fn from_values(values: impl IntoIterator<Item = Complex64>) -> Self {
        Self::from_weighted(values.into_iter().map(|v| (v, 1)))
    }

    pub fn from_real(values: impl IntoIterator<Item = f64>) -> Self {
        Self::from_values(values.into_iter().map(|x| Complex64::new(x, 0.0)))
    }

    /// From `(value, multiplicity)` pairs of real numbers.
    pub fn from_real_multiset(pairs: &[(f64, usize)]) -> Self {
        Self::from_weighted(pairs.iter().map(|&(x, m)| (Complex64::new(x, 0.0), m)))
    }

    /// From integer `(value, multiplicity)` pairs.
    pub fn from_integers(pairs: &[(i64, usize)]) -> Self {
        Self::from_weighted(pairs.iter().map(|&(x, m)| (Complex64::new(x as f64, 0.0), m)))
    }

    pub fn entries(&self) -> &[Eigenvalue] {
        &self.entries
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> usize {
        self.entries.iter().map(|e| e.mult).sum()
    }

    pub fn multiplicity_of(&self, value: Complex64, tol: f64) -> usize {
        self.entries.iter().filter(|e| (e.value - value).norm() <= tol).map(|e| e.mult).sum()
    }

    /// All eigenvalues with repetition, in canonical order.
    pub fn expanded(&self) -> Vec<Complex64> {
        self.entries.iter().flat_map(|e| std::iter::repeat_n(e.value, e.mult)).collect()
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Spectrum {
        Spectrum::from_weighted(self.entries.iter().map(|e| (f(e.value), e.mult)))
    }

    /// Adds `c` to every eigenvalue.
    pub fn shift(&self, c: f64) -> Spectrum {
        self.map(|z| z + c)
    }

    pub fn union(&self, other: &Spectrum) -> Spectrum {
        Spectrum::from_weighted(self.entries.iter().chain(&other.entries).map(|e| (e.value, e.mult)))
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.entries.iter().all(|e| e.value.im.abs() <= tol)
    }

    pub fn max_modulus(&self) -> f64 {
        self.entries.iter().map(|e| e.value.norm()).fold(0.0, f64::max)
    }

    /// The eigenvalue of largest real part.
    pub fn principal(&self) -> Option<Complex64> {
        self.entries.first().map(|e| e.value)
    }

    pub fn classify(&self) -> SpectrumClass {
        classify(self, SNAP_TOL)
    }

    /// `{[2]^1, [0]^2, [-2]^1}`.
    pub fn to_table(&self) -> String {
        let parts: Vec<String> =
            self.entries.iter().map(|e| format!("[{}]^{}", format_value(e.value), e.mult)).collect();
        format!("{{{}}}", parts.join(", "))
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("re,im,multiplicity\n");
        for e in &self.entries {
            s.push_str(&format!("{},{},{}\n", format_real(e.value.re), format_real(e.value.im), e.mult));
        }
        s
    }

    pub fn to_json_value(&self) -> SpectrumJson {
        let class = self.classify();
        SpectrumJson {
            entries: self
                .entries
                .iter()
                .map(|e| EntryJson { re: round_for_output(e.value.re), im: round_for_output(e.value.im), mult: e.mult })
                .collect(),
            class: ClassJson {
                integral: class.integral,
                parity: class.parity,
                symmetric: class.symmetric,
                almost_symmetric: class.almost_symmetric,
            },
        }
    }

    pub fn from_json_value(v: &SpectrumJson) -> Spectrum {
        Spectrum::from_weighted(v.entries.iter().map(|e| (Complex64::new(e.re, e.im), e.mult)))
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_table())
    }
}

fn round_for_output(x: f64) -> f64 {
    let r = (x * 1e9).round() / 1e9;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn format_real(x: f64) -> String {
    let r = x.round();
    if (x - r).abs() <= SNAP_TOL {
        return format!("{}", r as i64);
    }
    let s = format!("{:.6}", x);
    let s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

/// Human-readable value: integers bare, otherwise six decimals, complex as `a+bi`.
pub fn format_value(z: Complex64) -> String {
    if z.im.abs() <= SNAP_TOL {
        return format_real(z.re);
    }
    let im = match format_real(z.im.abs()).as_str() {
        "1" => String::new(),
        other => other.to_string(),
    };
    let sign = if z.im < 0.0 { '-' } else { '+' };
    if z.re.abs() <= SNAP_TOL {
        if z.im < 0.0 {
            format!("-{im}i")
        } else {
            format!("{im}i")
        }
    } else {
        format!("{}{sign}{im}i", format_real(z.re))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
    Mixed,
    NonIntegral,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumClass {
    pub integral: bool,
    pub parity: Parity,
    /// `m(λ) = m(−λ)` for every eigenvalue.
    pub symmetric: bool,
    /// `m(λ) = m(−λ)` for every eigenvalue `λ ≠ λ₁`.
    pub almost_symmetric: bool,
    pub principal_eigenvalue: f64,
    /// `−λ₁` is an eigenvalue.
    pub bipartite_criterion: bool,
}

pub fn classify(spec: &Spectrum, snap_tol: f64) -> SpectrumClass {
    let snapped: Vec<Option<i64>> = spec
        .entries
        .iter()
        .map(|e| {
            let r = e.value.re.round();
            (e.value.im.abs() <= snap_tol && (e.value.re - r).abs() <= snap_tol).then_some(r as i64)
        })
        .collect();
    let integral = snapped.iter().all(Option::is_some);
    let parity = if !integral {
        Parity::NonIntegral
    } else if snapped.iter().all(|x| x.unwrap() % 2 == 0) {
        Parity::Even
    } else if snapped.iter().all(|x| x.unwrap() % 2 != 0) {
        Parity::Odd
    } else {
        Parity::Mixed
    };
    let principal = spec.principal().unwrap_or_default();
    let balanced = |e: &Eigenvalue| e.mult == spec.multiplicity_of(-e.value, snap_tol);
    let symmetric = spec.entries.iter().all(balanced);
    let almost_symmetric =
        spec.entries.iter().filter(|e| (e.value - principal).norm() > snap_tol).all(balanced);
    SpectrumClass {
        integral,
        parity,
        symmetric,
        almost_symmetric,
        principal_eigenvalue: principal.re,
        bipartite_criterion: !spec.entries.is_empty() && spec.multiplicity_of(-principal, snap_tol) > 0,
    }
}

/// Result of matching two spectra value by value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumComparison {
    pub isospectral: bool,
    /// Largest distance used by the pairing (infinite when sizes differ).
    pub max_residual: f64,
    /// A value of the first spectrum left without a close partner.
    pub unmatched: Option<(f64, f64)>,
}

/// Greedy nearest pairing of the expanded multisets.
pub fn compare(a: &Spectrum, b: &Spectrum, tol: f64) -> SpectrumComparison {
    if a.total() != b.total() {
        return SpectrumComparison {
            isospectral: false,
            max_residual: f64::INFINITY,
            unmatched: a.principal().map(|z| (z.re, z.im)),
        };
    }
    let mut remaining: Vec<(Complex64, usize)> = b.entries.iter().map(|e| (e.value, e.mult)).collect();
    let mut max_residual: f64 = 0.0;
    let mut unmatched = None;
    for e in &a.entries {
        let mut need = e.mult;
        while need > 0 {
            let (idx, dist) = remaining
                .iter()
                .enumerate()
                .filter(|(_, (_, m))| *m > 0)
                .map(|(i, (v, _))| (i, (v - e.value).norm()))
                .min_by(|x, y| x.1.total_cmp(&y.1))
                .expect("totals agree");
            let take = need.min(remaining[idx].1);
            remaining[idx].1 -= take;
            need -= take;
            if dist > max_residual {
                max_residual = dist;
            }
            if dist > tol && unmatched.is_none() {
                unmatched = Some((e.value.re, e.value.im));
            }
        }
    }
    SpectrumComparison { isospectral: max_residual <= tol, max_residual, unmatched }
}

pub fn isospectral(a: &Spectrum, b: &Spectrum, tol: f64) -> bool {
    compare(a, b, tol).isospectral
}

/// Fails when some eigenvalue has modulus above `d` (plus slack).
pub fn check_degree_bound(spec: &Spectrum, d: usize) -> Result<()> {
    let worst = spec.max_modulus();
    if worst > d as f64 + 1e-6 {
        return Err(Error::OracleMismatch(format!("eigenvalue of modulus {worst} exceeds degree {d}")));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryJson {
    pub re: f64,
    pub im: f64,
    pub mult: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassJson {
    pub integral: bool,
    pub parity: Parity,
    pub symmetric: bool,
    pub almost_symmetric: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub entries: Vec<EntryJson>,
    pub class: ClassJson,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &[(i64, usize)]) -> Spectrum {
        Spectrum::from_integers(p)
    }

    #[test]
    fn merge_and_order() {
        let s = Spectrum::from_real([0.0, 2.0, -2.0, 1e-12, 0.0]);
        assert_eq!(s.to_table(), "{[2]^1, [0]^3, [-2]^1}");
        let c = Spectrum::from_values([Complex64::new(0.0, -4.0), Complex64::new(0.0, 4.0), Complex64::new(8.0, 0.0)]);
        assert_eq!(c.to_table(), "{[8]^1, [4i]^1, [-4i]^1}");
        assert_eq!(format_value(Complex64::new(-2.0, 2.0)), "-2+2i");
        assert_eq!(format_value(Complex64::new(2.0 * 2f64.sqrt(), 0.0)), "2.828427");
    }

    #[test]
    fn classification_examples() {
        let c = ints(&[(4, 1), (0, 6), (-4, 1)]).classify();
        assert!(c.integral && c.parity == Parity::Even && c.symmetric && c.bipartite_criterion);
        let c = ints(&[(5, 1), (1, 2), (-1, 4), (-3, 1)]).classify();
        assert!(c.integral && c.parity == Parity::Odd && !c.symmetric);
        let r = 2.0 * 2f64.sqrt();
        let s = Spectrum::from_real_multiset(&[(8.0, 1), (4.0, 1), (r, 2), (0.0, 9), (-r, 2), (-4.0, 1)]);
        let c = s.classify();
        assert!(!c.integral && c.parity == Parity::NonIntegral && c.almost_symmetric && !c.symmetric);
        assert_eq!(ints(&[(2, 1), (1, 1), (0, 1)]).classify().parity, Parity::Mixed);
    }

    #[test]
    fn comparison() {
        let a = ints(&[(2, 1), (0, 2), (-2, 1)]);
        assert!(isospectral(&a, &a, 1e-8));
        let b = ints(&[(2, 1), (0, 1), (1, 1), (-2, 1)]);
        let cmp = compare(&a, &b, 1e-8);
        assert!(!cmp.isospectral && cmp.unmatched == Some((0.0, 0.0)));
        assert!(!isospectral(&a, &ints(&[(2, 1), (0, 2)]), 1e-8));
    }

    #[test]
    fn shift_round_trip() {
        let a = ints(&[(1, 1), (-1, 1)]);
        assert_eq!(a.shift(1.0), ints(&[(2, 1), (0, 1)]));
        assert_eq!(a.shift(1.0).shift(-1.0), a);
    }

    #[test]
    fn csv_and_json() {
        let a = ints(&[(2, 1), (0, 2), (-2, 1)]);
        assert_eq!(a.to_csv(), "re,im,multiplicity\n2,0,1\n0,0,2\n-2,0,1\n");
        let j = a.to_json_value();
        assert_eq!(Spectrum::from_json_value(&j), a);
        assert_eq!(j.class.parity, Parity::Even);
    }
}
