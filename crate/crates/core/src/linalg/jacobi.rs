//! Cyclic Jacobi eigenvalue iteration for symmetric matrices.

use super::LinalgError;
use crate::graph::Graph;

pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues of the adjacency matrix in ascending order.
pub fn numeric_spectrum(g: &Graph, tol: f64) -> Result<Vec<f64>, LinalgError> {
    let n = g.order();
    let m: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| f64::from(g.has_edge(i, j) as u8)).collect())
        .collect();
    symmetric_eigenvalues(m, tol)
}

/// Eigenvalues of a symmetric matrix in ascending order.
///
/// Sweeps until the off-diagonal Frobenius norm drops below
/// `min(tol, 1e-12)` relative to the matrix norm.
pub fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>, tol: f64) -> Result<Vec<f64>, LinalgError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(LinalgError::InvalidTolerance(tol));
    }
    let n = a.len();
    let target = tol.min(1e-12);
    let total: f64 = a.iter().flatten().map(|v| v * v).sum::<f64>().sqrt();
    let scale = if total > 0.0 { total } else { 1.0 };
    let off = |a: &[Vec<f64>]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i][j] * a[i][j];
                }
            }
        }
        s.sqrt()
    };
    let mut residual = off(&a);
    let mut sweeps = 0;
    while residual > target * scale {
        if sweeps == MAX_SWEEPS {
            return Err(LinalgError::NonConvergence { sweeps, residual });
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                rotate(&mut a, p, q);
            }
        }
        sweeps += 1;
        residual = off(&a);
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

fn rotate(a: &mut [Vec<f64>], p: usize, q: usize) {
    let n = a.len();
    let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let t = if theta == 0.0 { 1.0 } else { t };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    for k in 0..n {
        let (akp, akq) = (a[k][p], a[k][q]);
        a[k][p] = c * akp - s * akq;
        a[k][q] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[p][k], a[q][k]);
        a[p][k] = c * apk - s * aqk;
        a[q][k] = s * apk + c * aqk;
    }
    a[p][q] = 0.0;
    a[q][p] = 0.0;
}
