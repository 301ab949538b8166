//! Jacobi eigenvalue iteration for dense real symmetric matrices.
//!
//! Rotations are applied in round-robin order: each round annihilates n/2
//! disjoint off-diagonal pairs at once, so the row and column updates of a
//! round are independent and run through `par::for_each_row`.

use crate::error::{Error, Result};

pub const OFF_DIAGONAL_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Pairings for one round of the circle method on `m` (even) players.
fn round_pairs(m: usize, round: usize) -> Vec<(usize, usize)> {
    let k = m - 1;
    let mut pairs = vec![(round % k, m - 1)];
    for i in 1..m / 2 {
        pairs.push(((round + i) % k, (round + k - i) % k));
    }
    pairs
}

/// Eigenvalues of the symmetric row-major matrix `a` (unsorted).
pub fn symmetric_eigenvalues(a: &[f64], n: usize) -> Result<Vec<f64>> {
    if a.len() != n * n {
        return Err(Error::InvalidParameter(format!("matrix of length {} is not {n}×{n}", a.len())));
    }
    if (0..n).any(|i| (0..i).any(|j| a[i * n + j] != a[j * n + i])) {
        return Err(Error::NonSymmetric);
    }
    if n <= 1 {
        return Ok(a.to_vec());
    }
    let m = n + n % 2;
    let mut cur = a.to_vec();
    let mut next = vec![0.0; n * n];
    // partner[i] = (j, c, s, is_first) for the current round
    let mut partner: Vec<Option<(usize, f64, f64, bool)>> = vec![None; n];
    let mut residual = off_diagonal_norm(&cur, n);
    for _ in 0..MAX_SWEEPS {
        if residual < OFF_DIAGONAL_TOL {
            return Ok((0..n).map(|i| cur[i * n + i]).collect());
        }
        for round in 0..m - 1 {
            partner.iter_mut().for_each(|p| *p = None);
            let mut any = false;
            for (x, y) in round_pairs(m, round) {
                if x >= n || y >= n {
                    continue;
                }
                let (p, q) = (x.min(y), x.max(y));
                let apq = cur[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (cur[q * n + q] - cur[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                partner[p] = Some((q, c, s, true));
                partner[q] = Some((p, c, s, false));
                any = true;
            }
            if !any {
                continue;
            }
            // B = A J: columns p, q mix.
            {
                let src = &cur;
                let part = &partner;
                crate::par::for_each_row(&mut next, n, |i, row| {
                    let r = &src[i * n..(i + 1) * n];
                    row.copy_from_slice(r);
                    for (j, pj) in part.iter().enumerate() {
                        if let Some((k, c, s, first)) = *pj {
                            row[j] = if first { c * r[j] - s * r[k] } else { s * r[k] + c * r[j] };
                        }
                    }
                });
            }
            // A' = Jᵀ B: rows p, q mix.
            {
                let src = &next;
                let part = &partner;
                crate::par::for_each_row(&mut cur, n, |i, row| {
                    let ri = &src[i * n..(i + 1) * n];
                    match part[i] {
                        None => row.copy_from_slice(ri),
                        Some((k, c, s, first)) => {
                            let rk = &src[k * n..(k + 1) * n];
                            for j in 0..n {
                                row[j] = if first { c * ri[j] - s * rk[j] } else { s * rk[j] + c * ri[j] };
                            }
                        }
                    }
                });
            }
            // Restore exact symmetry and the annihilated pairs.
            for (i, pi) in partner.iter().enumerate() {
                if let Some((k, _, _, true)) = *pi {
                    cur[i * n + k] = 0.0;
                    cur[k * n + i] = 0.0;
                }
            }
            for i in 0..n {
                for j in 0..i {
                    let avg = 0.5 * (cur[i * n + j] + cur[j * n + i]);
                    cur[i * n + j] = avg;
                    cur[j * n + i] = avg;
                }
            }
        }
        residual = off_diagonal_norm(&cur, n);
    }
    if residual < OFF_DIAGONAL_TOL {
        return Ok((0..n).map(|i| cur[i * n + i]).collect());
    }
    Err(Error::NoConvergence { sweeps: MAX_SWEEPS, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sorted(mut v: Vec<f64>) -> Vec<f64> {
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }

    #[test]
    fn small_cases() {
        let c4 = [0., 1., 0., 1., 1., 0., 1., 0., 0., 1., 0., 1., 1., 0., 1., 0.];
        let ev = sorted(symmetric_eigenvalues(&c4, 4).unwrap());
        for (x, y) in ev.iter().zip([2.0, 0.0, 0.0, -2.0]) {
            assert!((x - y).abs() < 1e-10);
        }
        let k4: Vec<f64> = (0..16).map(|i| if i % 5 == 0 { 0.0 } else { 1.0 }).collect();
        let ev = sorted(symmetric_eigenvalues(&k4, 4).unwrap());
        assert!((ev[0] - 3.0).abs() < 1e-10 && ev[1..].iter().all(|x| (x + 1.0).abs() < 1e-10));
        assert_eq!(symmetric_eigenvalues(&[0., 1., 0., 0.], 2), Err(Error::NonSymmetric));
        assert_eq!(symmetric_eigenvalues(&[3.0], 1).unwrap(), vec![3.0]);
    }

    #[test]
    fn round_robin_covers_all_pairs() {
        for m in [2usize, 4, 6, 10] {
            let mut seen = std::collections::HashSet::new();
            for r in 0..m - 1 {
                let pairs = round_pairs(m, r);
                let mut used = std::collections::HashSet::new();
                for (a, b) in pairs {
                    assert!(used.insert(a) && used.insert(b));
                    seen.insert((a.min(b), a.max(b)));
                }
            }
            assert_eq!(seen.len(), m * (m - 1) / 2);
        }
    }

    proptest! {
        #[test]
        fn trace_and_frobenius_preserved(n in 2usize..12, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut a = vec![0.0; n * n];
            for i in 0..n {
                for j in 0..=i {
                    let x: f64 = rng.gen_range(-3.0..3.0);
                    a[i * n + j] = x;
                    a[j * n + i] = x;
                }
            }
            let ev = symmetric_eigenvalues(&a, n).unwrap();
            let trace: f64 = (0..n).map(|i| a[i * n + i]).sum();
            let frob: f64 = a.iter().map(|x| x * x).sum();
            prop_assert!((ev.iter().sum::<f64>() - trace).abs() < 1e-8);
            prop_assert!((ev.iter().map(|x| x * x).sum::<f64>() - frob).abs() < 1e-8);
        }
    }
}
