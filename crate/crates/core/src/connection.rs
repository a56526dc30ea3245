//! Levi-Civita connection of a homogeneous frame.
//!
//! With frame-constant metric components the derivative terms of the Koszul
//! formula vanish and it reduces to
//!
//! ```text
//! 2 g(∇_X Y, Z) = -g(X, [Y,Z]) - g(Y, [X,Z]) + g(Z, [X,Y])
//! ```
//!
//! which is solved for `Γ` with the exact inverse metric, so non-diagonal
//! metrics need no special handling.

use crate::error::{Error, Result};
use crate::frame::{metric_inverse, validate_frame, FrameSpec, BRACKET_VALENCE};
use crate::rational::{q, Rational};
use crate::tensor::{Slot, Tensor};

/// `gamma[k, i, j]` with `∇_{e_i} e_j = Σ_k gamma[k, i, j] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection {
    gamma: Tensor,
}

impl Connection {
    pub fn from_tensor(gamma: Tensor) -> Result<Self> {
        if gamma.valence() != BRACKET_VALENCE {
            return Err(Error::usage("connection coefficients must have valence (Up, Down, Down)"));
        }
        Ok(Connection { gamma })
    }

    pub fn gamma(&self) -> &Tensor {
        &self.gamma
    }

    pub fn dim(&self) -> usize {
        self.gamma.dim()
    }

    /// `∇_{e_i} e_j` as a component vector.
    pub fn nabla(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dim()).map(|k| self.gamma.get(&[k, i, j]).clone()).collect()
    }
}

/// Refuses frames that fail [`validate_frame`], returning the report.
pub fn koszul_connection(spec: &FrameSpec) -> Result<Connection> {
    let report = validate_frame(spec);
    if !report.all_pass() {
        return Err(Error::InvalidFrame(report));
    }
    let m = spec.dim();
    let c = spec.brackets();
    let g = spec.metric();
    let g_inv = metric_inverse(g)?;
    let half = q(1, 2);

    // lowered[i, j, k] = g(∇_{e_i} e_j, e_k)
    let lowered = Tensor::from_fn(m, &[Slot::Down; 3], |ix| {
        let (i, j, k) = (ix[0], ix[1], ix[2]);
        let s: Rational = (0..m)
            .map(|l| {
                -(c.get(&[l, j, k]) * g.get(&[i, l])) - c.get(&[l, i, k]) * g.get(&[j, l])
                    + c.get(&[l, i, j]) * g.get(&[l, k])
            })
            .sum();
        s * &half
    });
    let gamma = Tensor::from_fn(m, &BRACKET_VALENCE, |ix| {
        let (l, i, j) = (ix[0], ix[1], ix[2]);
        (0..m)
            .map(|k| g_inv.get(&[l, k]) * lowered.get(&[i, j, k]))
            .sum()
    });
    Ok(Connection { gamma })
}

/// `T[k, i, j] = Γ^k_ij - Γ^k_ji - c^k_ij`.
pub fn torsion_defect(spec: &FrameSpec, conn: &Connection) -> Tensor {
    let c = spec.brackets();
    let gamma = conn.gamma();
    Tensor::from_fn(spec.dim(), &BRACKET_VALENCE, |ix| {
        let (k, i, j) = (ix[0], ix[1], ix[2]);
        gamma.get(&[k, i, j]) - gamma.get(&[k, j, i]) - c.get(&[k, i, j])
    })
}

/// `M[k, i, j] = Σ_l (Γ^l_ki g_lj + Γ^l_kj g_il)`, i.e. `-(∇_{e_k} g)(e_i, e_j)`.
pub fn metricity_defect(spec: &FrameSpec, conn: &Connection) -> Tensor {
    let g = spec.metric();
    let gamma = conn.gamma();
    let m = spec.dim();
    Tensor::from_fn(m, &[Slot::Down; 3], |ix| {
        let (k, i, j) = (ix[0], ix[1], ix[2]);
        (0..m)
            .map(|l| gamma.get(&[l, k, i]) * g.get(&[l, j]) + gamma.get(&[l, k, j]) * g.get(&[i, l]))
            .sum()
    })
}
