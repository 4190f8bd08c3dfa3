//! Graphs built from a base graph and attached cliques, and the limit of
//! their smallest eigenvalue as the cliques grow.

use serde::Serialize;

use super::PipelineError;
use crate::graph::{Graph, MAX_ORDER};
use crate::linalg::{numeric_spectrum, symmetric_eigenvalues};

/// Tolerance for monotonicity and the lower bound.
const LIMIT_TOL: f64 = 1e-9;

/// `Γ` plus `k` cliques `K_q`; every vertex of clique `j` is joined to the
/// vertices `i` of `Γ` with `c[i][j] = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueAttachment {
    pub gamma: Graph,
    /// `order(Γ)` rows of `k` entries, each 0 or 1.
    pub c: Vec<Vec<u8>>,
    pub q: usize,
}

impl CliqueAttachment {
    pub fn new(gamma: Graph, c: Vec<Vec<u8>>, q: usize) -> Result<Self, PipelineError> {
        if c.len() != gamma.order() {
            return Err(PipelineError::Precondition(format!(
                "attachment matrix has {} rows, base graph has {} vertices",
                c.len(),
                gamma.order()
            )));
        }
        let k = c.first().map_or(0, Vec::len);
        if c.iter().any(|r| r.len() != k || r.iter().any(|&v| v > 1)) {
            return Err(PipelineError::Precondition(
                "attachment matrix must be a rectangular 0/1 matrix".into(),
            ));
        }
        Ok(CliqueAttachment { gamma, c, q })
    }

    /// Number of attached cliques.
    pub fn cliques(&self) -> usize {
        self.c.first().map_or(0, Vec::len)
    }

    pub fn order(&self) -> usize {
        self.gamma.order() + self.cliques() * self.q
    }

    pub fn build(&self) -> Result<Graph, PipelineError> {
        let l = self.gamma.order();
        let mut g = self
            .gamma
            .disjoint_union(&Graph::new(self.cliques() * self.q)?)?;
        for j in 0..self.cliques() {
            let base = l + j * self.q;
            for a in 0..self.q {
                for b in a + 1..self.q {
                    g.add_edge(base + a, base + b)?;
                }
                for i in (0..l).filter(|&i| self.c[i][j] == 1) {
                    g.add_edge(i, base + a)?;
                }
            }
        }
        Ok(g)
    }

    /// `A(Γ) - C Cᵀ`.
    pub fn limit_matrix(&self) -> Vec<Vec<f64>> {
        let l = self.gamma.order();
        (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| {
                        let cc: u32 = (0..self.cliques())
                            .map(|t| u32::from(self.c[i][t] * self.c[j][t]))
                            .sum();
                        f64::from(u8::from(self.gamma.has_edge(i, j))) - f64::from(cc)
                    })
                    .collect()
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AttachmentReport {
    /// Smallest eigenvalue for `q = 1..=q_max`.
    pub lambda_min: Vec<f64>,
    /// Smallest eigenvalue of `A(Γ) - C Cᵀ`.
    pub limit: f64,
    pub nonincreasing: bool,
    pub bounded_below: bool,
    /// `lambda_min(q_max) - limit`.
    pub final_gap: f64,
}

impl AttachmentReport {
    pub fn passed(&self) -> bool {
        self.nonincreasing && self.bounded_below
    }
}

/// Smallest eigenvalue of the attachment graph for `q = 1..=q_max`,
/// checked to be nonincreasing in `q` and bounded below by the smallest
/// eigenvalue of `A(Γ) - C Cᵀ`, both within `1e-9`. The clique size in
/// `att` is ignored.
pub fn check_attachment_limit(
    att: &CliqueAttachment,
    q_max: usize,
) -> Result<AttachmentReport, PipelineError> {
    if q_max < 2 {
        return Err(PipelineError::Precondition(format!(
            "q_max = {q_max} must be at least 2"
        )));
    }
    let top = CliqueAttachment {
        q: q_max,
        ..att.clone()
    };
    if top.order() > MAX_ORDER {
        return Err(PipelineError::Precondition(format!(
            "attachment graph at q = {q_max} has {} vertices, above {MAX_ORDER}",
            top.order()
        )));
    }
    let limit = symmetric_eigenvalues(att.limit_matrix(), 1e-12)?
        .first()
        .copied()
        .unwrap_or(0.0);
    let mut lambda_min = Vec::with_capacity(q_max);
    for q in 1..=q_max {
        let g = CliqueAttachment { q, ..att.clone() }.build()?;
        let spectrum = numeric_spectrum(&g, 1e-12)?;
        lambda_min.push(spectrum.first().copied().unwrap_or(0.0));
    }
    let nonincreasing = lambda_min.windows(2).all(|w| w[1] <= w[0] + LIMIT_TOL);
    let bounded_below = lambda_min.iter().all(|&v| v >= limit - LIMIT_TOL);
    let final_gap = lambda_min.last().copied().unwrap_or(limit) - limit;
    Ok(AttachmentReport {
        lambda_min,
        limit,
        nonincreasing,
        bounded_below,
        final_gap,
    })
}
