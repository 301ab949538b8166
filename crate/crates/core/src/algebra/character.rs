//! Characters of finite abelian groups.

use std::sync::Arc;

use num_complex::Complex64;

use super::arith::{lcm, root_of_unity};
use super::group::{Element, FiniteGroup, Radix};
use super::subset::GroupSubset;
use crate::error::{Error, Result};

/// `χ_a(g) = exp(2πi Σ a_j g_j / d_j)` over the invariant factors `d_j`.
#[derive(Debug, Clone)]
pub struct AbelianCharacter {
    group: Arc<FiniteGroup>,
    exponents: Vec<usize>,
}

impl AbelianCharacter {
    pub fn new(group: &Arc<FiniteGroup>, exponents: Vec<usize>) -> Result<Self> {
        let d = group
            .abelian_decomposition()
            .ok_or_else(|| Error::NonAbelian(group.label().to_string()))?;
        if exponents.len() != d.len() || exponents.iter().zip(d).any(|(a, dj)| a >= dj) {
            return Err(Error::InvalidParameter(format!(
                "exponent vector {exponents:?} does not fit invariant factors {d:?}"
            )));
        }
        Ok(AbelianCharacter { group: Arc::clone(group), exponents })
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn eval(&self, g: Element) -> Result<Complex64> {
        if g >= self.group.order() {
            return Err(Error::IndexOutOfRange { index: g, order: self.group.order() });
        }
        let table = CharacterTable::new(&self.group)?;
        Ok(table.value_at(&self.exponents, g))
    }

    /// The conjugate character `χ̄`.
    pub fn conjugate(&self) -> Self {
        let d = self.group.abelian_decomposition().expect("abelian by construction");
        let exponents = self.exponents.iter().zip(d).map(|(&a, &dj)| (dj - a) % dj).collect();
        AbelianCharacter { group: Arc::clone(&self.group), exponents }
    }

    pub fn is_real(&self) -> bool {
        self.conjugate().exponents == self.exponents
    }
}

/// All characters of an abelian group, exponent vectors in mixed-radix order.
pub fn characters(group: &Arc<FiniteGroup>) -> Result<Vec<AbelianCharacter>> {
    let d = group
        .abelian_decomposition()
        .ok_or_else(|| Error::NonAbelian(group.label().to_string()))?;
    let radix = Radix::new(d);
    Ok((0..group.order())
        .map(|i| AbelianCharacter { group: Arc::clone(group), exponents: radix.decode(i) })
        .collect())
}

/// `χ(S) = Σ_{s∈S} χ(s)`.
pub fn character_sum(chi: &AbelianCharacter, s: &GroupSubset) -> Result<Complex64> {
    s.ensure_over(&chi.group)?;
    let table = CharacterTable::new(&chi.group)?;
    Ok(table.sum(&chi.exponents, s.members()))
}

/// Precomputed phases for bulk character evaluation.
///
/// Every character value is a power of `ζ_L`, `L = lcm(d_j)`; the phase of
/// `χ_a(g)` is `Σ a_j g_j (L/d_j) mod L`.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    factors: Vec<usize>,
    scale: Vec<usize>,
    exponent: usize,
    roots: Vec<Complex64>,
    coords: Vec<usize>,
}

impl CharacterTable {
    pub fn new(group: &FiniteGroup) -> Result<Self> {
        let d = group
            .abelian_decomposition()
            .ok_or_else(|| Error::NonAbelian(group.label().to_string()))?;
        let exponent = d.iter().fold(1u64, |acc, &x| lcm(acc, x as u64)) as usize;
        let roots = (0..exponent).map(|k| root_of_unity(k as u64, exponent as u64)).collect();
        let coords = (0..group.order())
            .flat_map(|g| group.invariant_coords(g).unwrap().to_vec())
            .collect();
        Ok(CharacterTable {
            factors: d.to_vec(),
            scale: d.iter().map(|&dj| exponent / dj).collect(),
            exponent,
            roots,
            coords,
        })
    }

    pub fn len(&self) -> usize {
        self.factors.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Exponent vector of the `i`-th character.
    pub fn exponents(&self, i: usize) -> Vec<usize> {
        Radix::new(&self.factors).decode(i)
    }

    /// Index of the conjugate of the `i`-th character.
    pub fn conjugate_index(&self, i: usize) -> usize {
        let a = self.exponents(i);
        let neg: Vec<usize> = a.iter().zip(&self.factors).map(|(&x, &d)| (d - x) % d).collect();
        Radix::new(&self.factors).encode(&neg)
    }

    #[inline]
    fn phase(&self, a: &[usize], g: Element) -> usize {
        let k = self.factors.len();
        let c = &self.coords[g * k..(g + 1) * k];
        a.iter()
            .zip(c)
            .zip(&self.scale)
            .map(|((&aj, &gj), &sj)| aj * gj % self.exponent * sj)
            .sum::<usize>()
            % self.exponent
    }

    pub fn value_at(&self, a: &[usize], g: Element) -> Complex64 {
        self.roots[self.phase(a, g)]
    }

    /// `Σ_{g ∈ elems} χ_a(g)`, accumulated in integer phase counts first so the
    /// result does not depend on summation order.
    pub fn sum(&self, a: &[usize], elems: &[Element]) -> Complex64 {
        let mut counts = vec![0u32; self.exponent];
        for &g in elems {
            counts[self.phase(a, g)] += 1;
        }
        counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, &c)| self.roots[k] * c as f64)
            .sum()
    }

    /// `χ_i(S)` for every character index `i`.
    pub fn sums(&self, s: &GroupSubset) -> Vec<Complex64> {
        crate::par::map_range(self.len(), |i| self.sum(&self.exponents(i), s.members()))
    }
}
