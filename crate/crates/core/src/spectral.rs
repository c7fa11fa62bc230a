//! Eigenvalue-based robustness metrics.
//!
//! All spectra come from a dense symmetric eigensolver. Connectivity is
//! decided structurally before any zero test on eigenvalues.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumKind {
    Adjacency,
    Laplacian,
}

/// Eigenvalues in ascending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub kind: SpectrumKind,
}

impl Spectrum {
    pub fn spectral_radius(&self) -> f64 {
        self.values.iter().fold(0.0f64, |acc, v| acc.max(v.abs()))
    }

    /// Zero threshold: `1e-9 * max(1, spectral radius)`.
    pub fn tolerance(&self) -> f64 {
        1e-9 * self.spectral_radius().max(1.0)
    }
}

pub fn adjacency_matrix(g: &Graph) -> DMatrix<f64> {
    let n = g.n();
    let mut a = DMatrix::zeros(n, n);
    for &(u, v) in g.edges() {
        a[(u, v)] = 1.0;
        a[(v, u)] = 1.0;
    }
    a
}

/// `L = D - A`.
pub fn laplacian_matrix(g: &Graph) -> DMatrix<f64> {
    let mut l = -adjacency_matrix(g);
    for v in 0..g.n() {
        l[(v, v)] = g.degree(v) as f64;
    }
    l
}

fn sorted_eigen(matrix: DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let n = matrix.nrows();
    if n == 0 {
        return (Vec::new(), DMatrix::zeros(0, 0));
    }
    let eig = SymmetricEigen::new(matrix);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    (values, vectors)
}

pub fn laplacian_spectrum(g: &Graph) -> Spectrum {
    Spectrum {
        values: sorted_eigen(laplacian_matrix(g)).0,
        kind: SpectrumKind::Laplacian,
    }
}

/// Laplacian spectrum plus eigenvectors; column `i` pairs with `values[i]`.
pub fn laplacian_eigenpairs(g: &Graph) -> (Spectrum, DMatrix<f64>) {
    let (values, vectors) = sorted_eigen(laplacian_matrix(g));
    (
        Spectrum {
            values,
            kind: SpectrumKind::Laplacian,
        },
        vectors,
    )
}

pub fn adjacency_spectrum(g: &Graph) -> Spectrum {
    Spectrum {
        values: sorted_eigen(adjacency_matrix(g)).0,
        kind: SpectrumKind::Adjacency,
    }
}

fn connected_spectrum(g: &Graph) -> Result<Spectrum> {
    if g.n() < 2 {
        return Err(Error::TooSmall {
            required: 2,
            actual: g.n(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(laplacian_spectrum(g))
}

/// Second-smallest Laplacian eigenvalue. Disconnected graphs give exactly 0.
pub fn algebraic_connectivity(g: &Graph) -> Result<f64> {
    if g.n() < 2 {
        return Err(Error::TooSmall {
            required: 2,
            actual: g.n(),
        });
    }
    if !g.is_connected() {
        return Ok(0.0);
    }
    Ok(laplacian_spectrum(g).values[1])
}

/// Natural log of the number of spanning trees, from the Laplacian spectrum.
pub fn log_nst(g: &Graph) -> Result<f64> {
    if g.n() == 1 {
        return Ok(0.0);
    }
    let spec = connected_spectrum(g)?;
    let n = g.n() as f64;
    Ok(spec.values[1..].iter().map(|l| l.ln()).sum::<f64>() - n.ln())
}

/// `ln((1/n) Σ exp(μ_i))` over the adjacency spectrum, shifted by the largest
/// eigenvalue so the exponentials cannot overflow.
pub fn natural_connectivity(g: &Graph) -> Result<f64> {
    if g.n() == 0 {
        return Err(Error::TooSmall {
            required: 1,
            actual: 0,
        });
    }
    let spec = adjacency_spectrum(g);
    let top = *spec.values.last().unwrap();
    let sum: f64 = spec.values.iter().map(|mu| (mu - top).exp()).sum();
    Ok(top + sum.ln() - (g.n() as f64).ln())
}

/// `n Σ_{i≥2} 1/λ_i`: total effective resistance over all node pairs.
pub fn effective_graph_resistance(g: &Graph) -> Result<f64> {
    let spec = connected_spectrum(g)?;
    let n = g.n() as f64;
    Ok(n * spec.values[1..].iter().map(|l| 1.0 / l).sum::<f64>())
}

pub fn reciprocal_egr(g: &Graph) -> Result<f64> {
    Ok(1.0 / effective_graph_resistance(g)?)
}
