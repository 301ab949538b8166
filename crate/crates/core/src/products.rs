//! NEPS of graphs and the named two-factor products.

use serde::{Deserialize, Serialize};

use crate::algebra::group::Radix;
use crate::error::{Error, Result};
use crate::graphs::Graph;

/// Vertex-count cap for product results.
pub const PRODUCT_LIMIT: usize = 8192;

/// A NEPS basis: non-zero 0/1 tuples covering every coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NepsBasis {
    arity: usize,
    tuples: Vec<Vec<bool>>,
}

impl NepsBasis {
    pub fn new(arity: usize, tuples: Vec<Vec<bool>>) -> Result<Self> {
        if arity == 0 || tuples.is_empty() {
            return Err(Error::InvalidParameter("NEPS basis must be non-empty".into()));
        }
        if tuples.iter().any(|t| t.len() != arity || t.iter().all(|&b| !b)) {
            return Err(Error::InvalidParameter(format!(
                "NEPS tuples must be non-zero of length {arity}"
            )));
        }
        if let Some(i) = (0..arity).find(|&i| tuples.iter().all(|t| !t[i])) {
            return Err(Error::InvalidParameter(format!("coordinate {i} is never used by the basis")));
        }
        Ok(NepsBasis { arity, tuples })
    }

    /// Shorthand from rows of 0/1 integers.
    pub fn from_bits(rows: &[&[u8]]) -> Result<Self> {
        let arity = rows.first().map_or(0, |r| r.len());
        Self::new(arity, rows.iter().map(|r| r.iter().map(|&b| b != 0).collect()).collect())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn tuples(&self) -> &[Vec<bool>] {
        &self.tuples
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductKind {
    /// `Γ₁ □ Γ₂`, basis `{(1,0),(0,1)}`.
    Cartesian,
    /// `Γ₁ × Γ₂`, basis `{(1,1)}`.
    Direct,
    /// `Γ₁ ⊠ Γ₂`, basis `{(1,0),(0,1),(1,1)}`.
    Strong,
    /// `Γ₁ ⊕ Γ₂`, basis `{(1,0),(1,1)}`; not commutative.
    StrongSum,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] =
        [ProductKind::Cartesian, ProductKind::Direct, ProductKind::Strong, ProductKind::StrongSum];

    pub fn basis(&self) -> NepsBasis {
        let rows: &[&[u8]] = match self {
            ProductKind::Cartesian => &[&[1, 0], &[0, 1]],
            ProductKind::Direct => &[&[1, 1]],
            ProductKind::Strong => &[&[1, 0], &[0, 1], &[1, 1]],
            ProductKind::StrongSum => &[&[1, 0], &[1, 1]],
        };
        NepsBasis::from_bits(rows).expect("fixed bases are valid")
    }

    pub fn name(&self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Direct => "direct",
            ProductKind::Strong => "strong",
            ProductKind::StrongSum => "strong_sum",
        }
    }
}

impl std::str::FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProductKind::ALL
            .into_iter()
            .find(|k| k.name() == s || k.name().replace('_', "-") == s)
            .ok_or_else(|| Error::Parse(format!("unknown product `{s}`")))
    }
}

/// NEPS with vertices in factor-major mixed-radix order.
pub fn neps(factors: &[&Graph], basis: &NepsBasis) -> Result<Graph> {
    if factors.len() != basis.arity {
        return Err(Error::InvalidParameter(format!(
            "basis arity {} but {} factors",
            basis.arity,
            factors.len()
        )));
    }
    let sizes: Vec<usize> = factors.iter().map(|g| g.n()).collect();
    let n = sizes
        .iter()
        .try_fold(1usize, |a, &x| a.checked_mul(x))
        .filter(|&n| n <= PRODUCT_LIMIT)
        .ok_or(Error::SizeBound {
            what: "product graph",
            size: sizes.iter().fold(1usize, |a, &x| a.saturating_mul(x)),
            cap: PRODUCT_LIMIT,
        })?;
    let radix = Radix::new(&sizes);
    let coords: Vec<Vec<usize>> = (0..n).map(|v| radix.decode(v)).collect();
    let mut adj = vec![0u8; n * n];
    crate::par::for_each_row(&mut adj, n, |u, row| {
        let cu = &coords[u];
        for (v, slot) in row.iter_mut().enumerate() {
            let cv = &coords[v];
            let adjacent = basis.tuples.iter().any(|beta| {
                beta.iter().enumerate().all(|(i, &b)| {
                    if b {
                        factors[i].has_arc(cu[i], cv[i])
                    } else {
                        cu[i] == cv[i]
                    }
                })
            });
            *slot = adjacent as u8;
        }
    });
    let labels = coords
        .iter()
        .map(|c| {
            let parts: Vec<&str> = c.iter().zip(factors).map(|(&x, g)| g.labels()[x].as_str()).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    Graph::from_adjacency(n, adj, labels)
}

pub fn named_product(a: &Graph, b: &Graph, kind: ProductKind) -> Result<Graph> {
    neps(&[a, b], &kind.basis())
}

/// `P₂`, or `P̊₂` with a loop on both vertices.
pub fn path2(looped: bool) -> Graph {
    let p = Graph::path(2);
    if looped {
        p.with_loops()
    } else {
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::small_isomorphic;

    #[test]
    fn basis_validation() {
        assert!(NepsBasis::from_bits(&[&[0, 0]]).is_err());
        assert!(NepsBasis::from_bits(&[&[1, 0]]).is_err());
        assert!(NepsBasis::from_bits(&[]).is_err());
        assert!(neps(&[&path2(false)], &ProductKind::Direct.basis()).is_err());
    }

    #[test]
    fn c4_box_p2_is_the_cube() {
        let g = named_product(&Graph::cycle(4), &path2(false), ProductKind::Cartesian).unwrap();
        assert_eq!((g.n(), g.regular_degree()), (8, Some(3)));
        assert_eq!(g.is_bipartite(), Ok(true));
    }

    #[test]
    fn named_products_match_definitions() {
        let (a, b) = (Graph::path(3), Graph::cycle(3));
        let cart = named_product(&a, &b, ProductKind::Cartesian).unwrap();
        let direct = named_product(&a, &b, ProductKind::Direct).unwrap();
        let strong = named_product(&a, &b, ProductKind::Strong).unwrap();
        assert!(cart.union(&direct).unwrap().same_adjacency(&strong));
        let rows = |u: usize| (u / 3, u % 3);
        for u in 0..9 {
            for v in 0..9 {
                let ((u1, u2), (v1, v2)) = (rows(u), rows(v));
                let want = (a.has_arc(u1, v1) && u2 == v2) || (u1 == v1 && b.has_arc(u2, v2));
                assert_eq!(cart.has_arc(u, v), want);
            }
        }
    }

    #[test]
    fn strong_sum_is_not_commutative() {
        let (p, c) = (path2(false), Graph::cycle(4));
        let pc = named_product(&p, &c, ProductKind::StrongSum).unwrap();
        let cp = named_product(&c, &p, ProductKind::StrongSum).unwrap();
        assert_ne!(pc.arc_count(), cp.arc_count());
    }

    #[test]
    fn path2_variants() {
        assert!(!path2(false).has_loops());
        assert_eq!(path2(true).loop_vertices(), vec![0, 1]);
        assert!(small_isomorphic(&path2(false), &Graph::complete(2)).unwrap());
    }
}
