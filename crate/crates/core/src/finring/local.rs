//! Finite local rings built as polynomial quotients over a coefficient ring.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::arith::is_prime;
use crate::error::{Error, Result};

/// Largest local ring accepted.
pub const LOCAL_SIZE_CAP: usize = 4096;

/// Multiplication tables are cached up to this size.
const TABLE_LIMIT: usize = 1024;
/// Exhaustive ideal and commutativity checks up to this size.
const EXHAUSTIVE_LIMIT: usize = 256;
const SAMPLES: usize = 4000;
const MAX_DIGITS: usize = 12;

/// The local ring families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocalKind {
    /// `Z_{p^k}`.
    IntegersMod { p: u64, k: u32 },
    /// `F_{p^m}`.
    Field { p: u64, m: u32 },
    /// `GR(p^s, t) = Z_{p^s}[x]/(f)`, `deg f = t`.
    GaloisRing { p: u64, s: u32, t: u32 },
    /// `F_{p^m}[x]/(x^t)`.
    Truncated { p: u64, m: u32, t: u32 },
}

impl LocalKind {
    pub fn prime(&self) -> u64 {
        match *self {
            LocalKind::IntegersMod { p, .. }
            | LocalKind::Field { p, .. }
            | LocalKind::GaloisRing { p, .. }
            | LocalKind::Truncated { p, .. } => p,
        }
    }

    /// `(r, |𝔪|)` as declared by the family.
    pub fn declared_sizes(&self) -> Option<(usize, usize)> {
        let pw = |e: u32| -> Option<usize> { (self.prime() as usize).checked_pow(e) };
        match *self {
            LocalKind::IntegersMod { k, .. } => Some((pw(k)?, pw(k - 1)?)),
            LocalKind::Field { m, .. } => Some((pw(m)?, 1)),
            LocalKind::GaloisRing { s, t, .. } => Some((pw(s.checked_mul(t)?)?, pw((s - 1) * t)?)),
            LocalKind::Truncated { m, t, .. } => Some((pw(m.checked_mul(t)?)?, pw(m * (t - 1))?)),
        }
    }

    fn validate(&self) -> Result<()> {
        let p = self.prime();
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let positive = match *self {
            LocalKind::IntegersMod { k, .. } => k >= 1,
            LocalKind::Field { m, .. } => m >= 1,
            LocalKind::GaloisRing { s, t, .. } => s >= 1 && t >= 1,
            LocalKind::Truncated { m, t, .. } => m >= 1 && t >= 1,
        };
        if !positive {
            return Err(Error::InvalidParameter(format!("{self}: exponents must be ≥ 1")));
        }
        match self.declared_sizes() {
            Some((r, _)) if r <= LOCAL_SIZE_CAP => Ok(()),
            other => Err(Error::SizeBound {
                what: "local ring",
                size: other.map_or(usize::MAX, |(r, _)| r),
                cap: LOCAL_SIZE_CAP,
            }),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            LocalKind::IntegersMod { p, k } => format!("Z{}", p.pow(k)),
            LocalKind::Field { p, m } => format!("F{}", p.pow(m)),
            LocalKind::GaloisRing { p, s, t } => format!("GR({},{t})", p.pow(s)),
            LocalKind::Truncated { p, m, t } => format!("F{}[x]/(x^{t})", p.pow(m)),
        }
    }

    pub fn build(&self) -> Result<LocalRing> {
        LocalRing::new(*self)
    }
}

impl fmt::Display for LocalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LocalKind::IntegersMod { p, k } => write!(f, "zpk:{p}^{k}"),
            LocalKind::Field { p, m } => write!(f, "gf:{p}^{m}"),
            LocalKind::GaloisRing { p, s, t } => write!(f, "gr:{p}^{s}:{t}"),
            LocalKind::Truncated { p, m, t } => write!(f, "quot:{p}^{m}:{t}"),
        }
    }
}

impl FromStr for LocalKind {
    type Err = Error;

    /// `zpk:p^k`, `gf:p^m` (or `gf:p`), `gr:p^s:t`, `quot:p^m:t`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed ring descriptor `{s}`"));
        let mut parts = s.trim().split(':');
        let head = parts.next().ok_or_else(bad)?;
        let prime_power = |x: &str| -> Result<(u64, u32)> {
            let (p, e) = x.split_once('^').unwrap_or((x, "1"));
            Ok((p.trim().parse().map_err(|_| bad())?, e.trim().parse().map_err(|_| bad())?))
        };
        let number = |x: Option<&str>| -> Result<u32> { x.ok_or_else(bad)?.trim().parse().map_err(|_| bad()) };
        let pp = prime_power(parts.next().ok_or_else(bad)?)?;
        let kind = match head.trim() {
            "zpk" => LocalKind::IntegersMod { p: pp.0, k: pp.1 },
            "gf" => LocalKind::Field { p: pp.0, m: pp.1 },
            "gr" => LocalKind::GaloisRing { p: pp.0, s: pp.1, t: number(parts.next())? },
            "quot" => LocalKind::Truncated { p: pp.0, m: pp.1, t: number(parts.next())? },
            _ => return Err(bad()),
        };
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(kind)
    }
}

#[derive(Debug, Clone)]
enum Coefficients {
    /// Integers modulo the digit base.
    Modular(usize),
    /// Elements of a finite field encoded as in its own `LocalRing`.
    Field(Box<LocalRing>),
}

impl Coefficients {
    #[inline]
    fn add(&self, a: usize, b: usize) -> usize {
        match self {
            Coefficients::Modular(n) => (a + b) % n,
            Coefficients::Field(f) => f.add(a, b),
        }
    }

    #[inline]
    fn neg(&self, a: usize) -> usize {
        match self {
            Coefficients::Modular(n) => (n - a) % n,
            Coefficients::Field(f) => f.neg(a),
        }
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            Coefficients::Modular(n) => a * b % n,
            Coefficients::Field(f) => f.mul(a, b),
        }
    }
}

/// A finite commutative local ring `C[x]/(g)` with `g` monic over the
/// coefficient ring `C`.
///
/// Element `e` encodes the coefficient vector `(c_0, …, c_{L-1})` as
/// `e = Σ c_i B^i`, `B = |C|`, so the additive group is `Z_B^L` and element
/// `0` is zero, element `1` is one.
#[derive(Debug, Clone)]
pub struct LocalRing {
    kind: LocalKind,
    size: usize,
    base: usize,
    len: usize,
    coeffs: Coefficients,
    /// Low coefficients `g_0 … g_{L-1}` of the monic modulus.
    modulus: Vec<usize>,
    mul_table: Option<Vec<u16>>,
    units: Vec<bool>,
    maximal_ideal_size: usize,
}

impl LocalRing {
    pub fn new(kind: LocalKind) -> Result<Self> {
        kind.validate()?;
        let p = kind.prime() as usize;
        let (coeffs, base, len, modulus) = match kind {
            LocalKind::IntegersMod { k, .. } => {
                let b = p.pow(k);
                (Coefficients::Modular(b), b, 1, vec![0])
            }
            LocalKind::Field { m, .. } => {
                (Coefficients::Modular(p), p, m as usize, smallest_irreducible(p as u64, m as usize))
            }
            LocalKind::GaloisRing { s, t, .. } => {
                let b = p.pow(s);
                (Coefficients::Modular(b), b, t as usize, smallest_irreducible(p as u64, t as usize))
            }
            LocalKind::Truncated { m, t, .. } => {
                let field = LocalRing::new(LocalKind::Field { p: p as u64, m })?;
                let b = field.size;
                (Coefficients::Field(Box::new(field)), b, t as usize, vec![0; t as usize])
            }
        };
        let (size, declared_m) = kind.declared_sizes().expect("validated");
        debug_assert_eq!(base.pow(len as u32), size);

        let mut ring = LocalRing {
            kind,
            size,
            base,
            len,
            coeffs,
            modulus,
            mul_table: None,
            units: Vec::new(),
            maximal_ideal_size: declared_m,
        };
        if size <= TABLE_LIMIT {
            let table = crate::par::map_range(size * size, |i| ring.mul_poly(i / size, i % size) as u16);
            ring.mul_table = Some(table);
        }
        ring.units = (0..size).map(|e| ring.structural_unit(e)).collect();
        ring.verify()?;
        Ok(ring)
    }

    pub fn kind(&self) -> LocalKind {
        self.kind
    }

    pub fn label(&self) -> String {
        self.kind.label()
    }

    pub fn prime(&self) -> u64 {
        self.kind.prime()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn maximal_ideal_size(&self) -> usize {
        self.maximal_ideal_size
    }

    pub fn is_field(&self) -> bool {
        self.maximal_ideal_size == 1
    }

    /// Orders of the additive cyclic factors, most significant digit first.
    pub fn additive_factors(&self) -> Vec<usize> {
        match &self.coeffs {
            Coefficients::Modular(b) => vec![*b; self.len],
            Coefficients::Field(f) => vec![f.prime() as usize; f.len * self.len],
        }
    }

    /// The monic modulus, lowest coefficient first, leading 1 included.
    pub fn modulus(&self) -> Vec<usize> {
        let mut m = self.modulus.clone();
        m.push(1);
        m
    }

    pub fn is_unit(&self, e: usize) -> bool {
        self.units[e]
    }

    pub fn units(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.size).filter(|&e| self.units[e])
    }

    pub fn unit_count(&self) -> usize {
        self.units.iter().filter(|&&u| u).count()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        if self.len == 1 {
            return self.coeffs.add(a, b);
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let mut out = [0usize; MAX_DIGITS];
        for i in 0..self.len {
            out[i] = self.coeffs.add(da[i], db[i]);
        }
        self.encode(&out[..self.len])
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        let da = self.digits(a);
        let mut out = [0usize; MAX_DIGITS];
        for i in 0..self.len {
            out[i] = self.coeffs.neg(da[i]);
        }
        self.encode(&out[..self.len])
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.mul_table {
            Some(t) => t[a * self.size + b] as usize,
            None => self.mul_poly(a, b),
        }
    }

    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        let (mut base, mut acc) = (a, 1 % self.size);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by exhaustive search.
    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.size).find(|&b| self.mul(a, b) == 1 % self.size)
    }

    fn digits(&self, mut e: usize) -> [usize; MAX_DIGITS] {
        let mut d = [0usize; MAX_DIGITS];
        for slot in d.iter_mut().take(self.len) {
            *slot = e % self.base;
            e /= self.base;
        }
        d
    }

    fn encode(&self, d: &[usize]) -> usize {
        d.iter().rev().fold(0, |acc, &c| acc * self.base + c)
    }

    fn mul_poly(&self, a: usize, b: usize) -> usize {
        let (da, db) = (self.digits(a), self.digits(b));
        let l = self.len;
        let c = &self.coeffs;
        let mut prod = [0usize; 2 * MAX_DIGITS];
        for i in 0..l {
            if da[i] == 0 {
                continue;
            }
            for j in 0..l {
                prod[i + j] = c.add(prod[i + j], c.mul(da[i], db[j]));
            }
        }
        // x^L = -(g_0 + … + g_{L-1} x^{L-1})
        for d in (l..2 * l - 1).rev() {
            let top = prod[d];
            if top == 0 {
                continue;
            }
            prod[d] = 0;
            for (i, &g) in self.modulus.iter().enumerate() {
                let k = d - l + i;
                prod[k] = c.add(prod[k], c.neg(c.mul(top, g)));
            }
        }
        self.encode(&prod[..l])
    }

    fn structural_unit(&self, e: usize) -> bool {
        let d = self.digits(e);
        let p = self.prime() as usize;
        match self.kind {
            LocalKind::Field { .. } => e != 0,
            LocalKind::IntegersMod { .. } | LocalKind::GaloisRing { .. } => {
                d[..self.len].iter().any(|&c| c % p != 0)
            }
            LocalKind::Truncated { .. } => d[0] != 0,
        }
    }

    /// Brute-force checks of the ring axioms and of the local structure.
    fn verify(&self) -> Result<()> {
        let n = self.size;
        let fail = |what: String| Err(Error::InvalidRing(format!("{}: {what}", self.label())));
        let mut rng = ChaCha8Rng::seed_from_u64(0x0a11_ce5e ^ n as u64);
        let mut triples: Vec<(usize, usize, usize)> =
            (0..SAMPLES).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))).collect();
        if n <= 16 {
            triples = (0..n * n * n).map(|i| (i / (n * n), i / n % n, i % n)).collect();
        }
        for &(a, b, c) in &triples {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return fail(format!("multiplication not associative at ({a},{b},{c})"));
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return fail(format!("distributivity fails at ({a},{b},{c})"));
            }
        }
        let pairs: Box<dyn Iterator<Item = (usize, usize)>> = if n <= EXHAUSTIVE_LIMIT {
            Box::new((0..n * n).map(move |i| (i / n, i % n)))
        } else {
            Box::new(triples.iter().map(|&(a, b, _)| (a, b)).collect::<Vec<_>>().into_iter())
        };
        for (a, b) in pairs {
            if self.mul(a, b) != self.mul(b, a) {
                return fail(format!("multiplication not commutative at ({a},{b})"));
            }
            // Non-units form an ideal.
            if !self.units[a] && !self.units[b] && self.units[self.add(a, b)] {
                return fail(format!("non-units {a}, {b} sum to a unit"));
            }
            if !self.units[a] && self.units[self.mul(a, b)] {
                return fail(format!("non-unit {a} times {b} is a unit"));
            }
        }
        let one = 1 % n;
        if let Some(x) = (0..n).find(|&x| self.mul(one, x) != x) {
            return fail(format!("1·{x} ≠ {x}"));
        }
        let non_units = n - self.unit_count();
        if non_units != self.maximal_ideal_size {
            return fail(format!(
                "{non_units} non-units but the maximal ideal should have {}",
                self.maximal_ideal_size
            ));
        }
        let probe: Vec<usize> = if n <= TABLE_LIMIT {
            (0..n).collect()
        } else {
            (0..64).map(|_| rng.gen_range(0..n)).collect()
        };
        for a in probe {
            if self.inverse(a).is_some() != self.units[a] {
                return fail(format!("invertibility of {a} disagrees with the unit test"));
            }
        }
        Ok(())
    }
}

/// Polynomials over `Z_p`, lowest coefficient first.
fn poly_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let lead_inv = mod_inverse(b[db], p);
    while a.len() > db {
        let top = *a.last().unwrap() * lead_inv % p;
        let shift = a.len() - 1 - db;
        for (i, &bi) in b.iter().enumerate() {
            a[shift + i] = (a[shift + i] + p * p - top * bi % p) % p;
        }
        a.pop();
    }
    a
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    (1..p).find(|&x| a * x % p == 1).expect("p prime and a nonzero")
}

/// Irreducibility over `Z_p` by trial division with every monic polynomial of
/// degree `1..=deg/2`.
pub fn is_irreducible_mod_p(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut g: Vec<u64> = (0..d).map(|i| code / p.pow(i as u32) % p).collect();
            g.push(1);
            if poly_rem(f.to_vec(), &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Low coefficients of the monic degree-`t` polynomial irreducible mod `p`
/// whose code `Σ c_i p^i` is smallest.
fn smallest_irreducible(p: u64, t: usize) -> Vec<usize> {
    let count = p.pow(t as u32);
    for code in 0..count {
        let mut f: Vec<u64> = (0..t).map(|i| code / p.pow(i as u32) % p).collect();
        f.push(1);
        if is_irreducible_mod_p(&f, p) {
            f.pop();
            return f.into_iter().map(|c| c as usize).collect();
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
