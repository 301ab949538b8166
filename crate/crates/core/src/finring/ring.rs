//! Finite commutative rings as products of local rings.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::local::{LocalKind, LocalRing};
use crate::algebra::group::Radix;
use crate::algebra::{FiniteGroup, GroupSubset, ORDER_LIMIT};
use crate::error::{Error, Result};

/// `R = R_1 × … × R_s`, elements in mixed-radix order over the factor sizes
/// (first factor most significant).
#[derive(Debug, Clone)]
pub struct FiniteRing {
    factors: Vec<Arc<LocalRing>>,
    radix: Radix,
    order: usize,
    additive: Arc<FiniteGroup>,
}

impl FiniteRing {
    pub fn artin_product(factors: Vec<LocalRing>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidParameter("ring needs at least one local factor".into()));
        }
        let sizes: Vec<usize> = factors.iter().map(LocalRing::size).collect();
        let order = sizes
            .iter()
            .try_fold(1usize, |acc, &r| acc.checked_mul(r))
            .filter(|&o| o <= ORDER_LIMIT)
            .ok_or(Error::OrderTooLarge {
                order: sizes.iter().fold(1usize, |a, &r| a.saturating_mul(r)),
                limit: ORDER_LIMIT,
            })?;
        let label = factors.iter().map(LocalRing::label).collect::<Vec<_>>().join("x");
        let cyclic: Vec<usize> = factors.iter().flat_map(|f| f.additive_factors()).collect();
        let additive = FiniteGroup::abelian(label, &cyclic)?;
        Ok(FiniteRing {
            factors: factors.into_iter().map(Arc::new).collect(),
            radix: Radix::new(&sizes),
            order,
            additive,
        })
    }

    pub fn from_kinds(kinds: &[LocalKind]) -> Result<Self> {
        Self::artin_product(kinds.iter().map(LocalKind::build).collect::<Result<_>>()?)
    }

    pub fn label(&self) -> &str {
        self.additive.label()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn factors(&self) -> &[Arc<LocalRing>] {
        &self.factors
    }

    pub fn kinds(&self) -> Vec<LocalKind> {
        self.factors.iter().map(|f| f.kind()).collect()
    }

    /// The additive group; element indices coincide with ring elements.
    pub fn additive_group(&self) -> &Arc<FiniteGroup> {
        &self.additive
    }

    pub fn is_field(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].is_field()
    }

    pub fn components(&self, e: usize) -> Vec<usize> {
        self.radix.decode(e)
    }

    pub fn from_components(&self, c: &[usize]) -> Result<usize> {
        if c.len() != self.factors.len() || c.iter().zip(&self.factors).any(|(&x, f)| x >= f.size()) {
            return Err(Error::InvalidParameter(format!("bad components {c:?} for {}", self.label())));
        }
        Ok(self.radix.encode(c))
    }

    fn zip_with(&self, a: usize, b: usize, op: impl Fn(&LocalRing, usize, usize) -> usize) -> usize {
        let (ca, cb) = (self.components(a), self.components(b));
        let out = self.factors.iter().enumerate().map(|(i, f)| op(f, ca[i], cb[i]));
        self.radix.encode_iter(out)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.zip_with(a, b, LocalRing::add)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.zip_with(a, b, LocalRing::mul)
    }

    pub fn neg(&self, a: usize) -> usize {
        self.zip_with(a, a, |f, x, _| f.neg(x))
    }

    pub fn one(&self) -> usize {
        self.radix.encode_iter(self.factors.iter().map(|f| 1 % f.size()))
    }

    pub fn is_unit(&self, e: usize) -> bool {
        self.components(e).iter().zip(&self.factors).all(|(&x, f)| f.is_unit(x))
    }

    /// `R*` as a subset of the additive group.
    pub fn units(&self) -> GroupSubset {
        GroupSubset::new(&self.additive, (0..self.order).filter(|&e| self.is_unit(e)))
            .expect("indices in range")
    }

    /// `{0}`.
    pub fn zero_set(&self) -> GroupSubset {
        GroupSubset::identity_only(&self.additive)
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.kinds().iter().map(|k| k.to_string()).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Parses `local*local*…`, e.g. `zpk:2^2*gf:3`.
pub fn parse_ring_kinds(s: &str) -> Result<Vec<LocalKind>> {
    s.split('*').map(LocalKind::from_str).collect()
}

impl FromStr for FiniteRing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_kinds(&parse_ring_kinds(s)?)
    }
}
