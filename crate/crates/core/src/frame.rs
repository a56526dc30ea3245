//! Homogeneous frames: constant structure constants plus a constant metric.
//!
//! A [`FrameSpec`] describes a manifold through a global frame `e_1..e_m`
//! with `[e_i, e_j] = Σ_k c^k_ij e_k` and `g(e_i, e_j) = g_ij`, all constant.
//! Every tensor derived from such data has constant frame components, so
//! covariant derivatives reduce to algebra on the connection coefficients.

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::Rational;
use crate::report::{CheckReport, CheckResult, Expected, Witness};
use crate::tensor::{Slot, Tensor};

pub const BRACKET_VALENCE: [Slot; 3] = [Slot::Up, Slot::Down, Slot::Down];
pub const METRIC_VALENCE: [Slot; 2] = [Slot::Down, Slot::Down];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameSpec {
    dim: usize,
    /// `c[k, i, j]` with `[e_i, e_j] = Σ_k c[k, i, j] e_k`.
    brackets: Tensor,
    metric: Tensor,
}

impl FrameSpec {
    /// Shape checks only; antisymmetry, Jacobi and nondegeneracy are left to
    /// [`validate_frame`].
    pub fn new(brackets: Tensor, metric: Tensor) -> Result<Self> {
        let dim = metric.dim();
        if dim < 2 {
            return Err(Error::Dimension(format!("frame dimension must be at least 2, got {dim}")));
        }
        if metric.valence() != METRIC_VALENCE {
            return Err(Error::usage("metric must have valence (Down, Down)"));
        }
        if brackets.valence() != BRACKET_VALENCE || brackets.dim() != dim {
            return Err(Error::usage(format!(
                "structure constants must have valence (Up, Down, Down) and dimension {dim}"
            )));
        }
        Ok(FrameSpec {
            dim,
            brackets,
            metric,
        })
    }

    /// Builds a frame from a metric and a list of brackets `[e_i, e_j] = Σ coeffs[k] e_k`
    /// (0-based `i`, `j`); the antisymmetric partner is filled in.
    pub fn from_bracket_list(metric: Tensor, brackets: &[(usize, usize, Vec<Rational>)]) -> Result<Self> {
        let dim = metric.dim();
        let mut c = Tensor::zeros(dim, &BRACKET_VALENCE);
        for (i, j, coeffs) in brackets {
            if *i >= dim || *j >= dim || coeffs.len() != dim {
                return Err(Error::usage(format!("bracket ({i}, {j}) does not fit dimension {dim}")));
            }
            for (k, v) in coeffs.iter().enumerate() {
                c.set(&[k, *i, *j], v.clone());
                c.set(&[k, *j, *i], -v);
            }
        }
        FrameSpec::new(c, metric)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn brackets(&self) -> &Tensor {
        &self.brackets
    }

    pub fn metric(&self) -> &Tensor {
        &self.metric
    }

    /// `[e_i, e_j]` as a component vector.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dim).map(|k| self.brackets.get(&[k, i, j]).clone()).collect()
    }
}

/// Cyclic Jacobi sum `J[i, j, k, l]`: component `l` of
/// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
pub fn jacobi_tensor(spec: &FrameSpec) -> Tensor {
    let c = spec.brackets();
    let m = spec.dim();
    // [[e_a, e_b], e_d] = Σ_p c[p, a, b] c[l, p, d] e_l
    let double = |a: usize, b: usize, d: usize, l: usize| -> Rational {
        (0..m)
            .map(|p| c.get(&[p, a, b]) * c.get(&[l, p, d]))
            .sum()
    };
    Tensor::from_fn(m, &[Slot::Down, Slot::Down, Slot::Down, Slot::Up], |ix| {
        let (i, j, k, l) = (ix[0], ix[1], ix[2], ix[3]);
        double(i, j, k, l) + double(j, k, i, l) + double(k, i, j, l)
    })
}

pub fn validate_frame(spec: &FrameSpec) -> CheckReport {
    let m = spec.dim();
    let g = spec.metric();
    let c = spec.brackets();
    let mut report = CheckReport::new();

    let asym = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .find(|&(i, j)| g.get(&[i, j]) != g.get(&[j, i]));
    report.push(match asym {
        None => CheckResult::pass("metric-symmetric"),
        Some((i, j)) => CheckResult::fail(
            "metric-symmetric",
            Witness::at(&[i, j], g.get(&[j, i]).clone(), g.get(&[i, j]).clone()),
        ),
    });

    let det = linalg::determinant(&g.to_matrix().expect("metric is two-slot"));
    report.push(if det.is_zero() {
        CheckResult::fail(
            "metric-nondegenerate",
            Witness {
                indices: vec![],
                expected: Expected::NonZero,
                actual: det,
                note: Some("determinant".into()),
            },
        )
    } else {
        CheckResult::pass("metric-nondegenerate")
    });

    let bad_pair = c
        .indices()
        .find(|ix| c.get(ix) != &-c.get(&[ix[0], ix[2], ix[1]]));
    report.push(match bad_pair {
        None => CheckResult::pass("bracket-antisymmetric"),
        Some(ix) => CheckResult::fail(
            "bracket-antisymmetric",
            Witness::at(&ix, -c.get(&[ix[0], ix[2], ix[1]]), c.get(&ix).clone())
                .with_note("indices (k,i,j) of c^k_ij"),
        ),
    });

    let jac = CheckResult::zero("jacobi", &jacobi_tensor(spec));
    report.push(match jac.witness {
        Some(w) => CheckResult::fail(
            "jacobi",
            w.with_note("indices (i,j,k,l): e_l component of the cyclic sum over (i,j,k)"),
        ),
        None => jac,
    });
    report
}

/// Inverse metric with valence (Up, Up).
pub fn metric_inverse(g: &Tensor) -> Result<Tensor> {
    if g.valence() != METRIC_VALENCE && g.valence() != [Slot::Up, Slot::Up] {
        return Err(Error::InvalidMetric("metric must be a symmetric two-slot tensor".into()));
    }
    let m = g.to_matrix().expect("two slots");
    let n = m.len();
    for i in 0..n {
        for j in i + 1..n {
            if m[i][j] != m[j][i] {
                return Err(Error::InvalidMetric(format!("not symmetric at ({}, {})", i + 1, j + 1)));
            }
        }
    }
    let inv = linalg::inverse(&m).ok_or_else(|| Error::InvalidMetric("determinant is zero".into()))?;
    let kind = g.valence()[0].flipped();
    Tensor::matrix(&inv, [kind, kind])
}
