//! Closed-walk counts `tr(A^k)` as an oracle for non-symmetric spectra.

use num_complex::Complex64;
use serde::Serialize;

use super::spectrum::Spectrum;
use crate::graphs::Graph;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Moments {
    /// `traces[k-1] = tr(A^k)`.
    pub traces: Vec<u128>,
    pub vertices: usize,
    pub max_degree: usize,
}

/// `tr(A^k)` for `k = 1..=K` (clamped to the vertex count), exact in integers.
pub fn moments(graph: &Graph, k_max: usize) -> Moments {
    let n = graph.n();
    let k_max = k_max.min(n);
    // in_lists[v] = vertices u with u → v
    let in_lists: Vec<Vec<usize>> = (0..n).map(|v| (0..n).filter(|&u| graph.has_arc(u, v)).collect()).collect();
    let mut power: Vec<u128> = graph.adjacency().iter().map(|&x| x as u128).collect();
    let mut traces = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        traces.push((0..n).map(|i| power[i * n + i]).sum());
        if k == k_max {
            break;
        }
        let prev = power;
        power = vec![0u128; n * n];
        crate::par::for_each_row(&mut power, n, |i, row| {
            let r = &prev[i * n..(i + 1) * n];
            for (v, slot) in row.iter_mut().enumerate() {
                *slot = in_lists[v].iter().map(|&u| r[u]).sum();
            }
        });
    }
    Moments { traces, vertices: n, max_degree: graph.max_degree() }
}

/// Largest `|tr(A^k) − Σ m λ^k| / (n d^k)` over the available moments.
pub fn moment_residual(spec: &Spectrum, m: &Moments) -> f64 {
    let d = m.max_degree.max(1) as f64;
    m.traces
        .iter()
        .enumerate()
        .map(|(i, &t)| {
            let k = i as i32 + 1;
            let sum: Complex64 = spec.entries().iter().map(|e| e.value.powi(k) * e.mult as f64).sum();
            (Complex64::new(t as f64, 0.0) - sum).norm() / (m.vertices as f64 * d.powi(k))
        })
        .fold(0.0, f64::max)
}

/// Passes iff `|tr(A^k) − Σ m_i λ_i^k| ≤ 1e-6·n·d^k` for every `k`.
pub fn moment_check(spec: &Spectrum, m: &Moments) -> bool {
    spec.total() == m.vertices && moment_residual(spec, m) <= 1e-6
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_moments() {
        let m = moments(&Graph::cycle(4), 4);
        assert_eq!(m.traces, vec![0, 8, 0, 32]);
        let spec = Spectrum::from_integers(&[(2, 1), (0, 2), (-2, 1)]);
        assert!(moment_check(&spec, &m));
        let wrong = Spectrum::from_integers(&[(2, 1), (0, 1), (1, 1), (-2, 1)]);
        assert!(!moment_check(&wrong, &m));
    }

    #[test]
    fn loopless_first_moment_is_zero() {
        let m = moments(&Graph::complete(5), 1);
        assert_eq!(m.traces, vec![0]);
    }
}
