//! Named instance lists and seeded random suites, run concurrently.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::checks::*;
use super::report::{Check, VerificationReport};
use super::rings::*;
use crate::algebra::{gcd_union, FiniteGroup, GroupSubset};
use crate::error::{Error, Result};
use crate::finring::FiniteRing;
use crate::graphs::CayleyKind;
use crate::spectra::{cayley_spectrum, dicyclic_example_spectrum};

pub const DEFAULT_SEED: u64 = 20_250_617;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Examples,
    Random,
    All,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Examples => "examples",
            Suite::Random => "random",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "examples" => Ok(Suite::Examples),
            "random" => Ok(Suite::Random),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite `{s}` (expected examples, random or all)"))),
        }
    }
}

type Job = Box<dyn Fn() -> Vec<VerificationReport> + Send + Sync>;

fn job(f: impl Fn() -> Vec<VerificationReport> + Send + Sync + 'static) -> Job {
    Box::new(f)
}

/// Runs every job (in parallel when enabled) and sorts by claim, then instance.
fn run_jobs(jobs: Vec<Job>) -> Vec<VerificationReport> {
    let mut out: Vec<VerificationReport> = crate::par::map(&jobs, |j| j()).into_iter().flatten().collect();
    out.sort_by(|a, b| a.claim_id.cmp(&b.claim_id).then_with(|| a.instance.cmp(&b.instance)));
    out
}

pub fn run_suite(suite: Suite, seed: u64) -> Vec<VerificationReport> {
    let jobs = match suite {
        Suite::Examples => example_jobs(),
        Suite::Random => random_jobs(seed),
        Suite::All => example_jobs().into_iter().chain(random_jobs(seed)).collect(),
    };
    run_jobs(jobs)
}

/// `{a^k : k ≠ 0, n} ∪ {ab, a^{n+1}b}` in `Dic_n`.
pub fn dicyclic_example_set(group: &Arc<FiniteGroup>, n: usize) -> Result<GroupSubset> {
    let rotations = (1..2 * n).filter(|&k| k != n).map(|k| 2 * k);
    GroupSubset::new(group, rotations.chain([3, 2 * (n + 1) + 1]))
}

/// `X(Dic_n, S)` for the set above has spectrum `{2n, 2n−4, 0^{3n−1}, −4^{n−1}}`.
pub fn check_dicyclic_example(n: usize) -> VerificationReport {
    Check::new("ex:dicyclic", format!("Dic{n}")).run(|c| {
        let g = FiniteGroup::dicyclic(n)?;
        let s = dicyclic_example_set(&g, n)?;
        c.note(format!("S symmetric: {}", s.predicates().symmetric));
        let direct = cayley_spectrum(&g, &s, CayleyKind::Difference)?;
        c.spectra("closed form", &dicyclic_example_spectrum(n), &direct, true);
        Ok(())
    })
}

fn per_kind(f: impl Fn(CayleyKind) -> VerificationReport) -> Vec<VerificationReport> {
    CayleyKind::ALL.into_iter().map(f).collect()
}

fn set(g: &Arc<FiniteGroup>, m: &[usize]) -> GroupSubset {
    GroupSubset::new(g, m.iter().copied()).expect("valid example set")
}

/// Example groups and sets: `(Z4,{1,3})`, the two order-16 sets, the dicyclic
/// set, `(Z4×Z3, units)`, and small controls.
struct Examples {
    z4: (Arc<FiniteGroup>, GroupSubset),
    z16: (Arc<FiniteGroup>, GroupSubset),
    z4z4: (Arc<FiniteGroup>, GroupSubset),
    dic3: (Arc<FiniteGroup>, GroupSubset),
    z4z3: (Arc<FiniteGroup>, GroupSubset),
    z3: (Arc<FiniteGroup>, GroupSubset),
    z5: (Arc<FiniteGroup>, GroupSubset),
    z6: (Arc<FiniteGroup>, GroupSubset),
    z6_units: (Arc<FiniteGroup>, GroupSubset),
}

/// `S₂ ⊂ Z₄×Z₄`, element `(x, y)` at `4x + y`.
pub const Z4Z4_SET: [(usize, usize); 8] = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 1), (2, 2), (3, 1), (3, 3)];
/// `S₁ ⊂ Z₁₆`.
pub const Z16_SET: [usize; 8] = [1, 2, 4, 5, 9, 10, 12, 13];

impl Examples {
    fn build() -> Result<Self> {
        let z4 = FiniteGroup::cyclic(4)?;
        let z16 = FiniteGroup::cyclic(16)?;
        let z4z4 = FiniteGroup::abelian("Z4xZ4", &[4, 4])?;
        let dic3 = FiniteGroup::dicyclic(3)?;
        let ring: FiniteRing = "zpk:2^2*gf:3".parse()?;
        let z3 = FiniteGroup::cyclic(3)?;
        let z5 = FiniteGroup::cyclic(5)?;
        let z6 = FiniteGroup::cyclic(6)?;
        let s2: Vec<usize> = Z4Z4_SET.iter().map(|&(x, y)| 4 * x + y).collect();
        Ok(Examples {
            z4: (z4.clone(), set(&z4, &[1, 3])),
            z16: (z16.clone(), set(&z16, &Z16_SET)),
            z4z4: (z4z4.clone(), set(&z4z4, &s2)),
            dic3: (dic3.clone(), dicyclic_example_set(&dic3, 3)?),
            z4z3: (ring.additive_group().clone(), ring.units()),
            z3: (z3.clone(), set(&z3, &[1, 2])),
            z5: (z5.clone(), set(&z5, &[1, 4])),
            z6: (z6.clone(), set(&z6, &[1])),
            z6_units: (z6.clone(), set(&z6, &[1, 5])),
        })
    }
}

fn example_jobs() -> Vec<Job> {
    let ex = Arc::new(Examples::build().expect("example instances build"));
    let mut jobs: Vec<Job> = Vec::new();
    let pairs = |ex: &Examples| {
        [&ex.z4, &ex.z16, &ex.z4z4, &ex.dic3, &ex.z4z3, &ex.z3, &ex.z5, &ex.z6, &ex.z6_units]
            .map(|(g, s)| (g.clone(), s.clone()))
    };
    for (g, s) in pairs(&ex) {
        jobs.push(job(move || {
            let mut out = vec![check_directedness(&g, &s), check_isosp_transfer(&g, &s), check_sum_mirror_characters(&g, &s)];
            for kind in CayleyKind::ALL {
                out.extend([
                    check_product_decompositions_for(&g, &s, kind),
                    check_spectrum_formulas_for(&g, &s, kind),
                    check_product_spectra_for(&g, &s, kind),
                    check_crossed_nonisospectrality_for(&g, &s, kind),
                    check_parity_and_symmetry_for(&g, &s, kind),
                    check_integrality_criterion_for(&g, &s, kind),
                ]);
            }
            out
        }));
    }
    {
        let ex = ex.clone();
        jobs.push(job(move || {
            let (g, s) = &ex.z4;
            let (r, u) = &ex.z4z3;
            vec![
                check_cayley_structure(g, s, &GroupSubset::identity_only(g)),
                check_cayley_structure(r, u, &u.with_identity()),
                check_unions(r, u, &GroupSubset::identity_only(r), u),
            ]
        }));
    }
    {
        let ex = ex.clone();
        jobs.push(job(move || {
            let (a, b) = (&ex.z16, &ex.z4z4);
            let mut out = vec![check_twin_witness(&a.0, &a.1, &b.0, &b.1)];
            for kind in CayleyKind::ALL {
                out.extend([
                    check_gen_isosp_for(&a.0, &a.1, &b.0, &b.1, kind),
                    check_gen_isosp_for(&ex.z4.0, &ex.z4.1, &ex.z4.0, &ex.z4.1, kind),
                    check_gen_isosp_for(&ex.z4.0, &ex.z4.1, &ex.z6_units.0, &ex.z6_units.1, kind),
                ]);
            }
            out
        }));
    }
    {
        let ex = ex.clone();
        jobs.push(job(move || {
            let z2z4 = FiniteGroup::abelian("Z2xZ4", &[2, 4]).expect("Z2xZ4");
            let order4: Vec<usize> = (0..8).filter(|&g| z2z4.element_order(g) == 4).collect();
            vec![
                check_cayley_even_odd(&ex.z4.0, &ex.z4.1),
                check_cayley_even_odd(&z2z4, &set(&z2z4, &order4)),
                check_cayley_even_odd(&ex.dic3.0, &ex.dic3.1),
            ]
        }));
    }
    for n in 2..=6 {
        jobs.push(job(move || vec![check_dicyclic_example(n)]));
    }
    for ring in ["zpk:2^2*gf:3", "quot:2^1:2*gf:3", "zpk:2^2*gf:5", "zpk:2^2*gf:3*gf:3", "gf:2^2*zpk:2^2*gf:3"] {
        jobs.push(job(move || {
            let r: FiniteRing = ring.parse().expect("example ring parses");
            match build_even_odd_pair(&r) {
                Ok(pair) => vec![pair.certification],
                Err(e) => vec![Check::new("thm:main", format!("R={r}")).run(|_| Err(e))],
            }
        }));
    }
    jobs.push(job(|| {
        let r: FiniteRing = "zpk:2^2*gf:3".parse().expect("ring parses");
        iterated_pairs(&r, 3).unwrap_or_else(|e| vec![Check::new("cor:iterated", format!("R={r}")).run(|_| Err(e))])
    }));
    for kind in local_ring_catalog(81) {
        jobs.push(job(move || vec![check_local_ring(kind)]));
    }
    for q in (2..=64u64).filter(|&q| crate::algebra::arith::prime_power(q).is_some()) {
        jobs.push(job(move || vec![check_gp_integrality(q)]));
    }
    for q in (2..=125u64).filter(|&q| crate::algebra::arith::prime_power(q).is_some()) {
        for k in (2..q).filter(|k| (q - 1) % k == 0) {
            if crate::finring::semiprimitive_check(k, q).ok().flatten().is_some() {
                jobs.push(job(move || vec![check_semiprimitive(k, q)]));
            }
        }
    }
    for (b, p, m) in [(2, 3, 1), (2, 5, 1), (2, 7, 1), (2, 2, 2), (3, 2, 1), (2, 3, 2)] {
        jobs.push(job(move || vec![check_hamming(b, p, m)]));
    }
    jobs
}

// ---- random instances ----

fn rng_for(seed: u64, family: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((family << 32) | index);
    rng
}

/// Groups of order at most 20.
fn small_pool() -> Vec<Arc<FiniteGroup>> {
    let mut pool: Vec<Arc<FiniteGroup>> = (2..=20).map(|n| FiniteGroup::cyclic(n).expect("cyclic")).collect();
    for (label, f) in [
        ("Z2xZ2", &[2, 2][..]),
        ("Z2xZ4", &[2, 4]),
        ("Z2xZ6", &[2, 6]),
        ("Z3xZ3", &[3, 3]),
        ("Z2xZ2xZ2", &[2, 2, 2]),
        ("Z4xZ4", &[4, 4]),
        ("Z2xZ8", &[2, 8]),
        ("Z2xZ10", &[2, 10]),
    ] {
        pool.push(FiniteGroup::abelian(label, f).expect("abelian"));
    }
    pool.extend((3..=10).map(|n| FiniteGroup::dihedral(n).expect("dihedral")));
    pool.extend((2..=5).map(|n| FiniteGroup::dicyclic(n).expect("dicyclic")));
    pool.push(FiniteGroup::symmetric(3).expect("S3"));
    pool
}

fn random_subset(rng: &mut ChaCha8Rng, g: &Arc<FiniteGroup>, min_len: usize, allow_identity: bool) -> GroupSubset {
    let cap = g.order() - usize::from(!allow_identity);
    let min_len = min_len.min(cap);
    let density: f64 = rng.gen_range(0.15..0.6);
    loop {
        let members: Vec<usize> = (0..g.order())
            .filter(|&x| (allow_identity || x != g.identity()) && rng.gen_bool(density))
            .collect();
        if members.len() >= min_len {
            return GroupSubset::new(g, members).expect("members in range");
        }
    }
}

/// Inverse-closed unions of non-identity conjugacy classes.
fn random_normal_symmetric(rng: &mut ChaCha8Rng, g: &Arc<FiniteGroup>, min_len: usize) -> GroupSubset {
    let classes: Vec<Vec<usize>> =
        g.conjugacy_classes().into_iter().filter(|c| !c.contains(&g.identity())).collect();
    let total: usize = classes.iter().map(Vec::len).sum();
    let min_len = min_len.min(total);
    loop {
        let mut members = Vec::new();
        for c in &classes {
            if rng.gen_bool(0.5) {
                members.extend(c.iter().copied());
                members.extend(c.iter().map(|&x| g.invert_unchecked(x)));
            }
        }
        members.sort_unstable();
        members.dedup();
        if members.len() >= min_len {
            return GroupSubset::new(g, members).expect("members in range");
        }
    }
}

/// Closes `S` under `x ↦ x^j`, `gcd(j, ord x) = 1`, and under conjugation.
fn eulerian_closure(g: &Arc<FiniteGroup>, s: &GroupSubset) -> GroupSubset {
    let classes = g.conjugacy_classes();
    let mut members = Vec::new();
    for &x in s.members() {
        let ord = g.element_order(x);
        for j in (1..ord).filter(|&j| crate::spectra::formulas::gcd_usize(j, ord) == 1) {
            let y = g.power(x, j);
            members.extend(classes.iter().find(|c| c.contains(&y)).expect("class").iter().copied());
        }
    }
    members.sort_unstable();
    members.dedup();
    GroupSubset::new(g, members).expect("members in range")
}

/// A union of atoms `{y : ⟨y⟩ = ⟨x⟩}` (random), or a raw random subset.
fn random_structured_or_raw(rng: &mut ChaCha8Rng, g: &Arc<FiniteGroup>) -> GroupSubset {
    let raw = random_subset(rng, g, 1, false);
    if rng.gen_bool(0.5) {
        if g.is_cyclic_residues() {
            let n = g.order();
            let divisors: Vec<usize> = (1..n).filter(|d| n.is_multiple_of(*d)).collect();
            loop {
                let picked: Vec<usize> = divisors.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
                if !picked.is_empty() {
                    return gcd_union(g, &picked).expect("proper divisors");
                }
            }
        }
        return eulerian_closure(g, &raw);
    }
    raw
}

fn family_jobs(
    seed: u64,
    family: u64,
    count: usize,
    make: impl Fn(&mut ChaCha8Rng, usize) -> Vec<VerificationReport> + Send + Sync + 'static,
) -> Vec<Job> {
    let make = Arc::new(make);
    (0..count)
        .map(|i| {
            let make = make.clone();
            job(move || {
                let mut rng = rng_for(seed, family, i as u64);
                make(&mut rng, i)
                    .into_iter()
                    .map(|mut r| {
                        r.instance = format!("#{family}.{i:03} {}", r.instance);
                        r.with_seed(seed)
                    })
                    .collect()
            })
        })
        .collect()
}

fn random_jobs(seed: u64) -> Vec<Job> {
    let pool = Arc::new(small_pool());
    let abelian: Arc<Vec<Arc<FiniteGroup>>> = Arc::new(pool.iter().filter(|g| g.is_abelian()).cloned().collect());
    let mut jobs = Vec::new();

    // crossed non-isospectrality, 200 instances with |S| ≥ 2
    let p = pool.clone();
    jobs.extend(family_jobs(seed, 1, 200, move |rng, _| {
        let g = p.choose(rng).expect("pool").clone();
        let s = if g.is_abelian() { random_subset(rng, &g, 2, false) } else { random_normal_symmetric(rng, &g, 2) };
        per_kind(|k| check_crossed_nonisospectrality_for(&g, &s, k))
    }));

    // adjacency identities, 100 instances of (G, S, T, T')
    let p = pool.clone();
    jobs.extend(family_jobs(seed, 2, 100, move |rng, _| {
        let g = p.choose(rng).expect("pool").clone();
        let with_e = rng.gen_bool(0.2);
        let s = random_subset(rng, &g, 0, with_e);
        let t = random_subset(rng, &g, 0, true);
        let t2 = random_subset(rng, &g, 0, true);
        let mut out = vec![check_cayley_structure(&g, &s, &t), check_unions(&g, &s, &t, &t2), check_directedness(&g, &s)];
        out.extend(per_kind(|k| check_product_decompositions_for(&g, &s, k)));
        out
    }));

    // spectrum of the mirror family from the base spectrum, 100 abelian instances
    let a = abelian.clone();
    jobs.extend(family_jobs(seed, 3, 100, move |rng, _| {
        let g = a.choose(rng).expect("pool").clone();
        let with_e = rng.gen_bool(0.2);
        let s = random_subset(rng, &g, 1, with_e);
        let mut out = per_kind(|k| check_spectrum_formulas_for(&g, &s, k));
        out.push(check_sum_mirror_characters(&g, &s));
        out
    }));

    // isospectrality transfer and parity, 50 abelian instances
    let a = abelian.clone();
    jobs.extend(family_jobs(seed, 4, 50, move |rng, _| {
        let g = a.choose(rng).expect("pool").clone();
        let s = random_structured_or_raw(rng, &g);
        let mut out = per_kind(|k| check_parity_and_symmetry_for(&g, &s, k));
        out.push(check_isosp_transfer(&g, &s));
        out
    }));

    // integrality criteria: cyclic n ≤ 40
    jobs.extend(family_jobs(seed, 5, 60, move |rng, _| {
        let g = FiniteGroup::cyclic(rng.gen_range(2..=40)).expect("cyclic");
        let s = random_structured_or_raw(rng, &g);
        per_kind(|k| check_integrality_criterion_for(&g, &s, k))
    }));

    // integrality criteria: non-cyclic abelian |G| ≤ 48
    let abelian48: Arc<Vec<Arc<FiniteGroup>>> = Arc::new(
        [
            ("Z2xZ2", &[2, 2][..]),
            ("Z2xZ4", &[2, 4]),
            ("Z3xZ3", &[3, 3]),
            ("Z2xZ2xZ2", &[2, 2, 2]),
            ("Z2xZ6", &[2, 6]),
            ("Z4xZ4", &[4, 4]),
            ("Z2xZ8", &[2, 8]),
            ("Z3xZ6", &[3, 6]),
            ("Z2xZ2xZ4", &[2, 2, 4]),
            ("Z2xZ12", &[2, 12]),
            ("Z5xZ5", &[5, 5]),
            ("Z2xZ2xZ2xZ2", &[2, 2, 2, 2]),
            ("Z4xZ8", &[4, 8]),
            ("Z6xZ6", &[6, 6]),
            ("Z4xZ12", &[4, 12]),
            ("Z2xZ2xZ12", &[2, 2, 12]),
        ]
        .into_iter()
        .map(|(l, f)| FiniteGroup::abelian(l, f).expect("abelian"))
        .collect(),
    );
    jobs.extend(family_jobs(seed, 6, 60, move |rng, _| {
        let g = abelian48.choose(rng).expect("pool").clone();
        let s = random_structured_or_raw(rng, &g);
        per_kind(|k| check_integrality_criterion_for(&g, &s, k))
    }));

    // integrality criteria: normal symmetric sets in non-abelian groups, |G| ≤ 120
    let nonabelian: Arc<Vec<Arc<FiniteGroup>>> = Arc::new(
        [
            FiniteGroup::dihedral(3),
            FiniteGroup::dihedral(6),
            FiniteGroup::dihedral(12),
            FiniteGroup::dihedral(30),
            FiniteGroup::dicyclic(3),
            FiniteGroup::dicyclic(6),
            FiniteGroup::dicyclic(15),
            FiniteGroup::symmetric(4),
            FiniteGroup::symmetric(5),
        ]
        .into_iter()
        .map(|g| g.expect("non-abelian group"))
        .collect(),
    );
    jobs.extend(family_jobs(seed, 7, 20, move |rng, _| {
        let g = nonabelian.choose(rng).expect("pool").clone();
        let mut s = random_normal_symmetric(rng, &g, 1);
        if rng.gen_bool(0.5) {
            s = eulerian_closure(&g, &s);
        }
        per_kind(|k| check_integrality_criterion_for(&g, &s, k))
    }));

    // base-to-mirror isospectrality across groups of equal order
    let a = abelian.clone();
    jobs.extend(family_jobs(seed, 8, 30, move |rng, _| {
        let g1 = a.choose(rng).expect("pool").clone();
        let same: Vec<_> = a.iter().filter(|g| g.order() == g1.order()).cloned().collect();
        let g2 = same.choose(rng).expect("g1 itself").clone();
        let s1 = random_subset(rng, &g1, 1, false);
        let mut m: Vec<usize> = (0..g2.order()).filter(|&x| x != g2.identity()).collect();
        m.shuffle(rng);
        let s2 = GroupSubset::new(&g2, m.into_iter().take(s1.len())).expect("members in range");
        per_kind(|k| check_gen_isosp_for(&g1, &s1, &g2, &s2, k))
    }));

    jobs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dicyclic_set_matches_description() {
        let g = FiniteGroup::dicyclic(3).unwrap();
        let s = dicyclic_example_set(&g, 3).unwrap();
        let labels: Vec<&str> = s.members().iter().map(|&x| g.element_label(x)).collect();
        assert_eq!(labels, ["a^1", "a^1b", "a^2", "a^4", "a^4b", "a^5"]);
    }

    #[test]
    fn suite_names_parse() {
        for s in [Suite::Examples, Suite::Random, Suite::All] {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn random_streams_are_reproducible() {
        let g = FiniteGroup::cyclic(12).unwrap();
        let a = random_subset(&mut rng_for(1, 2, 3), &g, 2, false);
        let b = random_subset(&mut rng_for(1, 2, 3), &g, 2, false);
        assert_eq!(a.members(), b.members());
    }
}
