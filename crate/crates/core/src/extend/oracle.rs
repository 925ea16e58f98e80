//! Multistart Gauss–Newton search for S = Σ bₙBⁿAB with S³ = I.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::polynomial::{krylov_terms, PolynomialS};
use crate::linalg::CMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub starts: usize,
    pub tol: f64,
    pub cluster_radius: f64,
    pub seed: u64,
    pub max_iter: usize,
    /// Distance within which a cluster is identified with an exact candidate.
    pub match_tol: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { starts: 2000, tol: 1e-9, cluster_radius: 1e-6, seed: 0, max_iter: 200, match_tol: 1e-8 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cluster {
    pub centroid: Vec<(f64, f64)>,
    pub count: usize,
    pub max_residual: f64,
    pub trace: (f64, f64),
    /// Index into the supplied exact candidates, when one lies within `match_tol`.
    pub candidate: Option<usize>,
    pub candidate_distance: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub config: OracleConfig,
    pub converged: usize,
    pub clusters: Vec<Cluster>,
}

impl OracleReport {
    /// Every converged start landed on one of the exact candidates.
    pub fn all_matched(&self) -> bool {
        self.converged > 0 && self.clusters.iter().all(|c| c.candidate.is_some())
    }
}

type CMat = DMatrix<Complex64>;

fn to_nalgebra(m: &CMatrix) -> CMat {
    let d = m.dim();
    DMatrix::from_row_iterator(d, d, m.to_complex())
}

fn residual(x: &[CMat], b: &DVector<Complex64>) -> (CMat, CMat) {
    let d = x[0].nrows();
    let mut s = CMat::zeros(d, d);
    for (xi, bi) in x.iter().zip(b.iter()) {
        s += xi * *bi;
    }
    let r = &s * &s * &s - CMat::identity(d, d);
    (s, r)
}

fn newton(x: &[CMat], mut b: DVector<Complex64>, config: &OracleConfig) -> Option<(DVector<Complex64>, f64)> {
    let d = x[0].nrows();
    let n = x.len();
    for _ in 0..config.max_iter {
        let (s, r) = residual(x, &b);
        let norm = r.norm();
        if !norm.is_finite() || norm > 1e12 {
            return None;
        }
        if norm < config.tol * 1e-3 {
            return Some((b, norm));
        }
        let s2 = &s * &s;
        let mut jac = CMat::zeros(d * d, n);
        for (j, xj) in x.iter().enumerate() {
            let col = xj * &s2 + &s * xj * &s + &s2 * xj;
            for (idx, v) in col.iter().enumerate() {
                jac[(idx, j)] = *v;
            }
        }
        let rhs = DVector::from_iterator(d * d, r.iter().map(|v| -v));
        let step = jac.svd(true, true).solve(&rhs, 1e-13).ok()?;
        b += &step;
        if step.norm() < 1e-15 * (1.0 + b.norm()) {
            break;
        }
    }
    let (_, r) = residual(x, &b);
    let norm = r.norm();
    (norm < config.tol).then_some((b, norm))
}

fn distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt()
}

/// Runs the oracle and matches clusters against `candidates` (which may be empty).
pub fn numeric_cubic_oracle(a: &CMatrix, b: &CMatrix, config: &OracleConfig, candidates: &[PolynomialS]) -> OracleReport {
    let x: Vec<CMat> = krylov_terms(a, b).iter().map(to_nalgebra).collect();
    let n = x.len();
    let solutions: Vec<Option<(Vec<Complex64>, f64)>> = (0..config.starts)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            rng.set_stream(i as u64);
            let start = DVector::from_fn(n, |_, _| Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)));
            newton(&x, start, config).map(|(b, r)| (b.iter().copied().collect(), r))
        })
        .collect();

    let mut groups: Vec<(Vec<Complex64>, Vec<(Vec<Complex64>, f64)>)> = Vec::new();
    let mut converged = 0;
    for (b, r) in solutions.into_iter().flatten() {
        converged += 1;
        match groups.iter_mut().find(|(rep, _)| distance(rep, &b) < config.cluster_radius) {
            Some((_, members)) => members.push((b, r)),
            None => groups.push((b.clone(), vec![(b, r)])),
        }
    }

    let exact: Vec<Vec<Complex64>> =
        candidates.iter().map(|c| c.coeffs.iter().map(|v| v.to_complex()).collect()).collect();
    let mut clusters: Vec<Cluster> = groups
        .into_iter()
        .map(|(_, members)| {
            let count = members.len();
            let centroid: Vec<Complex64> =
                (0..n).map(|j| members.iter().map(|(b, _)| b[j]).sum::<Complex64>() / count as f64).collect();
            let max_residual = members.iter().map(|(_, r)| *r).fold(0.0, f64::max);
            let s = x.iter().zip(&centroid).fold(CMat::zeros(x[0].nrows(), x[0].nrows()), |acc, (m, c)| acc + m * *c);
            let trace = s.trace();
            let nearest = exact
                .iter()
                .enumerate()
                .map(|(i, e)| (i, distance(e, &centroid)))
                .min_by(|p, q| p.1.total_cmp(&q.1));
            let (candidate, candidate_distance) = match nearest {
                Some((i, dist)) => ((dist < config.match_tol).then_some(i), Some(dist)),
                None => (None, None),
            };
            Cluster {
                centroid: centroid.iter().map(|c| (c.re, c.im)).collect(),
                count,
                max_residual,
                trace: (trace.re, trace.im),
                candidate,
                candidate_distance,
            }
        })
        .collect();
    clusters.sort_by(|p, q| {
        p.centroid
            .iter()
            .zip(&q.centroid)
            .map(|(u, v)| u.0.total_cmp(&v.0).then(u.1.total_cmp(&v.1)))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    OracleReport { config: *config, converged, clusters }
}
