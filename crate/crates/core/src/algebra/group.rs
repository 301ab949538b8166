//! Finite groups stored as dense multiplication tables.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::arith::factorize;
use crate::error::{Error, Result};

/// Index of a group element, `0..order`.
pub type Element = usize;

pub const ORDER_LIMIT: usize = 10_000;

/// Associativity is checked on every triple up to this order, sampled above it.
const EXHAUSTIVE_CHECK_LIMIT: usize = 512;
const SAMPLED_TRIPLES: usize = 50_000;

/// Descriptor grammar: `cyclic:n`, `prod:(spec,spec,...)`, `dihedral:n`,
/// `dicyclic:n`, `sym:n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Product(Vec<GroupSpec>),
    Dihedral(usize),
    Dicyclic(usize),
    Symmetric(usize),
}

impl GroupSpec {
    pub fn build(&self) -> Result<Arc<FiniteGroup>> {
        match self {
            GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n),
            GroupSpec::Dihedral(n) => FiniteGroup::dihedral(*n),
            GroupSpec::Dicyclic(n) => FiniteGroup::dicyclic(*n),
            GroupSpec::Symmetric(n) => FiniteGroup::symmetric(*n),
            GroupSpec::Product(parts) => {
                let groups = parts.iter().map(GroupSpec::build).collect::<Result<Vec<_>>>()?;
                let refs: Vec<&FiniteGroup> = groups.iter().map(|g| g.as_ref()).collect();
                FiniteGroup::product(&refs)
            }
        }
    }

    /// Order implied by the descriptor, without building tables.
    pub fn order(&self) -> Option<usize> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n),
            GroupSpec::Dihedral(n) => n.checked_mul(2),
            GroupSpec::Dicyclic(n) => n.checked_mul(4),
            GroupSpec::Symmetric(n) => (1..=*n).try_fold(1usize, |acc, k| acc.checked_mul(k)),
            GroupSpec::Product(parts) => parts
                .iter()
                .try_fold(1usize, |acc, p| p.order().and_then(|o| acc.checked_mul(o))),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Dicyclic(n) => write!(f, "dicyclic:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "sym:{n}"),
            GroupSpec::Product(parts) => {
                write!(f, "prod:(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("group descriptor `{s}` lacks a `kind:` prefix")))?;
        let number = |r: &str| -> Result<usize> {
            r.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("expected a positive integer in `{s}`")))
        };
        match head.trim() {
            "cyclic" => Ok(GroupSpec::Cyclic(number(rest)?)),
            "dihedral" => Ok(GroupSpec::Dihedral(number(rest)?)),
            "dicyclic" => Ok(GroupSpec::Dicyclic(number(rest)?)),
            "sym" => Ok(GroupSpec::Symmetric(number(rest)?)),
            "prod" => {
                let inner = rest
                    .trim()
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("`prod:` expects `(spec,...)` in `{s}`")))?;
                let parts = split_top_level(inner)?
                    .into_iter()
                    .map(str::parse)
                    .collect::<Result<Vec<GroupSpec>>>()?;
                if parts.is_empty() {
                    return Err(Error::Parse("empty product".into()));
                }
                Ok(GroupSpec::Product(parts))
            }
            other => Err(Error::Parse(format!("unknown group kind `{other}`"))),
        }
    }
}

/// Splits on commas that are not nested inside parentheses.
pub(crate) fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse(format!("unbalanced parentheses in `{s}`")));
                }
            }
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in `{s}`")));
    }
    let last = s[start..].trim();
    if !last.is_empty() || !parts.is_empty() {
        parts.push(last);
    }
    Ok(parts)
}

/// A finite group given by its full multiplication table.
///
/// Abelian groups additionally carry a cyclic coordinate system (the element
/// index is the mixed-radix encoding of its coordinates, first factor most
/// significant) and the derived invariant-factor decomposition.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    label: String,
    order: usize,
    table: Vec<u16>,
    inverses: Vec<u16>,
    identity: Element,
    element_labels: Vec<String>,
    abelian: Option<AbelianStructure>,
}

#[derive(Debug, Clone)]
struct AbelianStructure {
    cyclic_factors: Vec<usize>,
    invariant_factors: Vec<usize>,
    /// Row-major `order × invariant_factors.len()` coordinates.
    invariant_coords: Vec<usize>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.label == other.label && self.table == other.table
    }
}

impl FiniteGroup {
    /// Builds and validates a group from an explicit table.
    ///
    /// `cyclic_factors` must be given exactly when the table is commutative.
    pub fn from_table(
        label: impl Into<String>,
        order: usize,
        table: Vec<u16>,
        element_labels: Vec<String>,
        cyclic_factors: Option<Vec<usize>>,
    ) -> Result<Self> {
        let label = label.into();
        if order == 0 {
            return Err(Error::InvalidParameter("group order must be positive".into()));
        }
        if order > ORDER_LIMIT {
            return Err(Error::OrderTooLarge { order, limit: ORDER_LIMIT });
        }
        if table.len() != order * order || element_labels.len() != order {
            return Err(Error::InvalidGroup(format!("{label}: table or label size mismatch")));
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(Error::InvalidGroup(format!("{label}: table entry out of range")));
        }
        let at = |a: usize, b: usize| table[a * order + b] as usize;

        let identity = (0..order)
            .find(|&e| (0..order).all(|g| at(e, g) == g && at(g, e) == g))
            .ok_or_else(|| Error::InvalidGroup(format!("{label}: no two-sided identity")))?;

        let mut inverses = vec![0u16; order];
        for g in 0..order {
            let inv = (0..order)
                .find(|&h| at(g, h) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("{label}: element {g} has no inverse")))?;
            if at(inv, g) != identity {
                return Err(Error::InvalidGroup(format!("{label}: inverse of {g} is one-sided")));
            }
            inverses[g] = inv as u16;
        }

        let assoc = |a: usize, b: usize, c: usize| at(at(a, b), c) == at(a, at(b, c));
        if order <= EXHAUSTIVE_CHECK_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(a, b);
                    for c in 0..order {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(Error::InvalidGroup(format!(
                                "{label}: ({a}·{b})·{c} ≠ {a}·({b}·{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
            for _ in 0..SAMPLED_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..order), rng.gen_range(0..order), rng.gen_range(0..order));
                if !assoc(a, b, c) {
                    return Err(Error::InvalidGroup(format!("{label}: ({a}·{b})·{c} ≠ {a}·({b}·{c})")));
                }
            }
        }

        let commutative = (0..order).all(|a| (a + 1..order).all(|b| at(a, b) == at(b, a)));
        let abelian = match (commutative, cyclic_factors) {
            (true, Some(factors)) => {
                if factors.iter().product::<usize>() != order || factors.contains(&0) {
                    return Err(Error::InvalidGroup(format!(
                        "{label}: cyclic factors {factors:?} do not multiply to {order}"
                    )));
                }
                Some(AbelianStructure::new(factors))
            }
            (false, None) => None,
            (true, None) => {
                return Err(Error::InvalidGroup(format!(
                    "{label}: commutative table needs a cyclic decomposition"
                )))
            }
            (false, Some(_)) => {
                return Err(Error::InvalidGroup(format!(
                    "{label}: cyclic decomposition given for a non-commutative table"
                )))
            }
        };

        let group = FiniteGroup { label, order, table, inverses, identity, element_labels, abelian };
        if let Some(ab) = &group.abelian {
            // Mixed-radix coordinates must add componentwise.
            let k = ab.cyclic_factors.len();
            let coords: Vec<Vec<usize>> = (0..order).map(|g| ab.cyclic_coords(g)).collect();
            let ok = (0..order).all(|a| {
                (0..order).all(|b| {
                    let c = &coords[group.combine_unchecked(a, b)];
                    (0..k).all(|i| c[i] == (coords[a][i] + coords[b][i]) % ab.cyclic_factors[i])
                })
            });
            if !ok {
                return Err(Error::InvalidGroup(format!(
                    "{}: table is not the mixed-radix sum over {:?}",
                    group.label, ab.cyclic_factors
                )));
            }
        }
        Ok(group)
    }

    /// Abelian group `Z_{n_1} × … × Z_{n_k}` in mixed-radix order.
    pub fn abelian(label: impl Into<String>, cyclic_factors: &[usize]) -> Result<Arc<Self>> {
        let label = label.into();
        if cyclic_factors.is_empty() || cyclic_factors.contains(&0) {
            return Err(Error::InvalidParameter(format!("bad cyclic factors {cyclic_factors:?}")));
        }
        let order = cyclic_factors
            .iter()
            .try_fold(1usize, |acc, &n| acc.checked_mul(n))
            .filter(|&o| o <= ORDER_LIMIT)
            .ok_or(Error::OrderTooLarge {
                order: cyclic_factors.iter().fold(1usize, |a, &n| a.saturating_mul(n)),
                limit: ORDER_LIMIT,
            })?;
        let radix = Radix::new(cyclic_factors);
        let coords: Vec<Vec<usize>> = (0..order).map(|g| radix.decode(g)).collect();
        let mut table = vec![0u16; order * order];
        crate::par::for_each_row(&mut table, order, |a, row| {
            for (b, slot) in row.iter_mut().enumerate() {
                let sum = coords[a]
                    .iter()
                    .zip(&coords[b])
                    .zip(cyclic_factors)
                    .map(|((x, y), n)| (x + y) % n);
                *slot = radix.encode_iter(sum) as u16;
            }
        });
        let labels = if cyclic_factors.len() == 1 {
            (0..order).map(|g| g.to_string()).collect()
        } else {
            coords
                .iter()
                .map(|c| format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
                .collect()
        };
        Self::from_table(label, order, table, labels, Some(cyclic_factors.to_vec())).map(Arc::new)
    }

    pub fn cyclic(n: usize) -> Result<Arc<Self>> {
        if n == 0 {
            return Err(Error::InvalidParameter("cyclic group needs n ≥ 1".into()));
        }
        Self::abelian(format!("Z{n}"), &[n])
    }

    /// Direct product in mixed-radix order, first factor most significant.
    pub fn product(factors: &[&FiniteGroup]) -> Result<Arc<Self>> {
        if factors.is_empty() {
            return Err(Error::InvalidParameter("empty direct product".into()));
        }
        let orders: Vec<usize> = factors.iter().map(|g| g.order).collect();
        let order = orders
            .iter()
            .try_fold(1usize, |acc, &n| acc.checked_mul(n))
            .filter(|&o| o <= ORDER_LIMIT)
            .ok_or(Error::OrderTooLarge {
                order: orders.iter().fold(1usize, |a, &n| a.saturating_mul(n)),
                limit: ORDER_LIMIT,
            })?;
        let radix = Radix::new(&orders);
        let coords: Vec<Vec<usize>> = (0..order).map(|g| radix.decode(g)).collect();
        let mut table = vec![0u16; order * order];
        crate::par::for_each_row(&mut table, order, |a, row| {
            for (b, slot) in row.iter_mut().enumerate() {
                let prod = factors
                    .iter()
                    .enumerate()
                    .map(|(i, g)| g.combine_unchecked(coords[a][i], coords[b][i]));
                *slot = radix.encode_iter(prod) as u16;
            }
        });
        let labels = coords
            .iter()
            .map(|c| {
                let parts: Vec<&str> = c
                    .iter()
                    .zip(factors)
                    .map(|(&x, g)| g.element_labels[x].as_str())
                    .collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let label = factors.iter().map(|g| g.label.as_str()).collect::<Vec<_>>().join("x");
        let cyclic = factors
            .iter()
            .map(|g| g.abelian.as_ref().map(|a| a.cyclic_factors.clone()))
            .collect::<Option<Vec<_>>>()
            .map(|v| v.concat());
        Self::from_table(label, order, table, labels, cyclic).map(Arc::new)
    }

    /// Dihedral group of order `2n`: `⟨a,b : aⁿ = b² = 1, b⁻¹ab = a⁻¹⟩`,
    /// element `a^k b^j` at index `2k + j`.
    pub fn dihedral(n: usize) -> Result<Arc<Self>> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("dihedral group needs n ≥ 2, got {n}")));
        }
        Self::rotation_reflection(format!("D{n}"), n, 0)
    }

    /// Dicyclic group of order `4n`: `⟨a,b : a^{2n} = 1, aⁿ = b², b⁻¹ab = a⁻¹⟩`,
    /// element `a^k b^j` at index `2k + j`.
    pub fn dicyclic(n: usize) -> Result<Arc<Self>> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("dicyclic group needs n ≥ 2, got {n}")));
        }
        Self::rotation_reflection(format!("Dic{n}"), 2 * n, n)
    }

    /// Shared builder: rotations mod `rot`, `b² = a^{b_squared}`.
    fn rotation_reflection(label: String, rot: usize, b_squared: usize) -> Result<Arc<Self>> {
        let order = 2 * rot;
        if order > ORDER_LIMIT {
            return Err(Error::OrderTooLarge { order, limit: ORDER_LIMIT });
        }
        let mut table = vec![0u16; order * order];
        for x in 0..order {
            let (k, j) = (x / 2, x % 2);
            for y in 0..order {
                let (l, i) = (y / 2, y % 2);
                let (rk, rj) = if j == 0 {
                    ((k + l) % rot, i)
                } else if i == 0 {
                    ((k + rot - l) % rot, 1)
                } else {
                    ((k + rot - l + b_squared) % rot, 0)
                };
                table[x * order + y] = (2 * rk + rj) as u16;
            }
        }
        let labels = (0..order)
            .map(|x| match (x / 2, x % 2) {
                (0, 0) => "e".to_string(),
                (0, 1) => "b".to_string(),
                (k, 0) => format!("a^{k}"),
                (k, _) => format!("a^{k}b"),
            })
            .collect();
        // Only D_2 is abelian here: Z2 × Z2 with coordinates (k, j).
        let cyclic = (rot == 2 && b_squared == 0).then(|| vec![2, 2]);
        Self::from_table(label, order, table, labels, cyclic).map(Arc::new)
    }

    /// Symmetric group on `n ≤ 6` points; permutations in lexicographic order
    /// of their one-line notation, `(σ·τ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Result<Arc<Self>> {
        if n == 0 || n > 6 {
            return Err(Error::InvalidParameter(format!("symmetric group supports 1 ≤ n ≤ 6, got {n}")));
        }
        let perms = permutations(n);
        let order = perms.len();
        let index: std::collections::HashMap<&[u8], usize> =
            perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let mut table = vec![0u16; order * order];
        let mut buf = vec![0u8; n];
        for (a, sigma) in perms.iter().enumerate() {
            for (b, tau) in perms.iter().enumerate() {
                for i in 0..n {
                    buf[i] = sigma[tau[i] as usize];
                }
                table[a * order + b] = index[buf.as_slice()] as u16;
            }
        }
        let labels = perms
            .iter()
            .map(|p| format!("[{}]", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        let cyclic = match n {
            1 => Some(vec![1]),
            2 => Some(vec![2]),
            _ => None,
        };
        Self::from_table(format!("S{n}"), order, table, labels, cyclic).map(Arc::new)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    pub fn element_label(&self, g: Element) -> &str {
        &self.element_labels[g]
    }

    pub fn element_labels(&self) -> &[String] {
        &self.element_labels
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian.is_some()
    }

    /// Invariant factors `d₁ | d₂ | …` (empty for the trivial group), present iff abelian.
    pub fn abelian_decomposition(&self) -> Option<&[usize]> {
        self.abelian.as_ref().map(|a| a.invariant_factors.as_slice())
    }

    /// Orders of the cyclic coordinate system behind the element indexing.
    pub fn cyclic_factors(&self) -> Option<&[usize]> {
        self.abelian.as_ref().map(|a| a.cyclic_factors.as_slice())
    }

    /// Coordinates of `g` along the invariant factors.
    pub fn invariant_coords(&self, g: Element) -> Option<&[usize]> {
        self.abelian.as_ref().map(|a| {
            let k = a.invariant_factors.len();
            &a.invariant_coords[g * k..(g + 1) * k]
        })
    }

    /// True when this is `Z_n` with elements as residues `0..n`.
    pub fn is_cyclic_residues(&self) -> bool {
        matches!(self.cyclic_factors(), Some([n]) if *n == self.order)
    }

    fn check(&self, g: Element) -> Result<()> {
        if g < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: g, order: self.order })
        }
    }

    pub fn combine(&self, g: Element, h: Element) -> Result<Element> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.combine_unchecked(g, h))
    }

    pub fn invert(&self, g: Element) -> Result<Element> {
        self.check(g)?;
        Ok(self.inverses[g] as usize)
    }

    #[inline]
    pub(crate) fn combine_unchecked(&self, g: Element, h: Element) -> Element {
        self.table[g * self.order + h] as usize
    }

    #[inline]
    pub(crate) fn invert_unchecked(&self, g: Element) -> Element {
        self.inverses[g] as usize
    }

    pub fn power(&self, g: Element, k: usize) -> Element {
        (0..k).fold(self.identity, |acc, _| self.combine_unchecked(acc, g))
    }

    pub fn element_order(&self, g: Element) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.combine_unchecked(x, g);
            k += 1;
        }
        k
    }

    /// The cyclic subgroup `⟨g⟩` as a sorted list.
    pub fn cyclic_subgroup(&self, g: Element) -> Vec<Element> {
        let mut out = Vec::new();
        let mut x = self.identity;
        loop {
            out.push(x);
            x = self.combine_unchecked(x, g);
            if x == self.identity {
                break;
            }
        }
        out.sort_unstable();
        out
    }

    /// Conjugacy classes, each sorted, listed by smallest representative.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Element>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for x in 0..self.order {
            if seen[x] {
                continue;
            }
            let mut class: Vec<Element> = (0..self.order)
                .map(|g| self.combine_unchecked(self.combine_unchecked(g, x), self.invert_unchecked(g)))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class);
        }
        classes
    }

    pub(crate) fn same_as(&self, other: &FiniteGroup) -> bool {
        std::ptr::eq(self, other) || self == other
    }
}

impl AbelianStructure {
    fn new(cyclic_factors: Vec<usize>) -> Self {
        let order: usize = cyclic_factors.iter().product();
        let radix = Radix::new(&cyclic_factors);

        // Split each cyclic factor into prime-power pieces, grouped per prime
        // and sorted by decreasing size.
        let mut by_prime: Vec<(u64, Vec<(usize, usize)>)> = Vec::new();
        for (i, &n) in cyclic_factors.iter().enumerate() {
            for (p, e) in factorize(n as u64) {
                let pe = (p as usize).pow(e);
                match by_prime.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, v)) => v.push((i, pe)),
                    None => by_prime.push((p, vec![(i, pe)])),
                }
            }
        }
        for (_, v) in by_prime.iter_mut() {
            v.sort_by(|a, b| b.1.cmp(&a.1).then(b.0.cmp(&a.0)));
        }
        let len = by_prime.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
        // Invariant factor j (ascending) takes the (len-1-j)-th largest piece of each prime.
        let slots: Vec<Vec<(usize, usize)>> = (0..len)
            .map(|j| {
                let rank = len - 1 - j;
                by_prime.iter().filter_map(|(_, v)| v.get(rank).copied()).collect()
            })
            .collect();
        let invariant_factors: Vec<usize> =
            slots.iter().map(|s| s.iter().map(|&(_, pe)| pe).product()).collect();

        let mut invariant_coords = Vec::with_capacity(order * len);
        for g in 0..order {
            let c = radix.decode(g);
            for slot in &slots {
                let (mut x, mut m) = (0i64, 1i64);
                for &(i, pe) in slot {
                    x = crt(x, m, (c[i] % pe) as i64, pe as i64);
                    m *= pe as i64;
                }
                invariant_coords.push(x as usize);
            }
        }
        AbelianStructure { cyclic_factors, invariant_factors, invariant_coords }
    }

    fn cyclic_coords(&self, g: Element) -> Vec<usize> {
        Radix::new(&self.cyclic_factors).decode(g)
    }
}

/// Solves `x ≡ a (mod m)`, `x ≡ b (mod n)` for coprime `m`, `n`.
fn crt(a: i64, m: i64, b: i64, n: i64) -> i64 {
    let eg = m.extended_gcd(&n);
    debug_assert_eq!(eg.gcd, 1);
    let mn = m * n;
    let t = ((b - a) % n * eg.x % n + n) % n;
    ((a + m * t) % mn + mn) % mn
}

/// Mixed-radix codec, first digit most significant.
#[derive(Debug, Clone)]
pub(crate) struct Radix {
    radices: Vec<usize>,
}

impl Radix {
    pub(crate) fn new(radices: &[usize]) -> Self {
        Radix { radices: radices.to_vec() }
    }

    pub(crate) fn decode(&self, mut x: usize) -> Vec<usize> {
        let mut out = vec![0; self.radices.len()];
        for (slot, &r) in out.iter_mut().zip(&self.radices).rev() {
            *slot = x % r;
            x /= r;
        }
        out
    }

    pub(crate) fn encode_iter(&self, digits: impl Iterator<Item = usize>) -> usize {
        digits.zip(&self.radices).fold(0, |acc, (d, &r)| acc * r + d)
    }

    pub(crate) fn encode(&self, digits: &[usize]) -> usize {
        self.encode_iter(digits.iter().copied())
    }
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut current: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![current.clone()];
    // Standard next-permutation in lexicographic order.
    loop {
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
        out.push(current.clone());
    }
    out
}
