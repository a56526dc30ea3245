//! Riemann, Ricci and scalar curvature of a homogeneous frame, plus covariant
//! derivatives of frame-constant tensors.
//!
//! Sign convention: `R(X,Y)Z = ∇_X ∇_Y Z - ∇_Y ∇_X Z - ∇_[X,Y] Z`. With
//! constant `Γ` this gives
//!
//! ```text
//! R^l_ijk = Σ_p (Γ^p_jk Γ^l_ip - Γ^p_ik Γ^l_jp) - Σ_p c^p_ij Γ^l_pk
//! ```
//!
//! The Ricci tensor is the trace `S_jk = Σ_i R^i_ijk`, which needs no
//! orthonormal frame, and `r = g^jk S_jk`.

use crate::connection::{koszul_connection, Connection};
use crate::error::Result;
use crate::frame::{metric_inverse, FrameSpec};
use crate::rational::Rational;
use crate::report::{CheckReport, CheckResult};
use crate::tensor::{Slot, Tensor};

pub const RIEMANN_VALENCE: [Slot; 4] = [Slot::Up, Slot::Down, Slot::Down, Slot::Down];

/// Everything derived from one frame: `Γ`, `R`, lowered `R`, `S`, `Q`, `r`.
///
/// Fields are public so that tests can inject faults; [`GeometryCache::new`]
/// is the only constructor that guarantees consistency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometryCache {
    pub metric: Tensor,
    pub metric_inv: Tensor,
    pub conn: Connection,
    pub riemann: Tensor,
    /// `[i, j, k, l] = R(e_i, e_j, e_k, e_l) = g(R(e_i, e_j) e_k, e_l)`.
    pub riemann_low: Tensor,
    pub ricci: Tensor,
    pub ricci_op: Tensor,
    pub scalar: Rational,
}

impl GeometryCache {
    pub fn new(spec: &FrameSpec) -> Result<Self> {
        let conn = koszul_connection(spec)?;
        let metric = spec.metric().clone();
        let metric_inv = metric_inverse(&metric)?;
        let riemann = riemann(spec, &conn);
        let riemann_low = lower_riemann(&riemann, &metric)?;
        let ricci = ricci(&riemann)?;
        let scalar = scalar(&ricci, &metric_inv);
        let ricci_op = ricci_operator(&ricci, &metric_inv)?;
        Ok(GeometryCache {
            metric,
            metric_inv,
            conn,
            riemann,
            riemann_low,
            ricci,
            ricci_op,
            scalar,
        })
    }

    pub fn dim(&self) -> usize {
        self.metric.dim()
    }
}

pub fn riemann(spec: &FrameSpec, conn: &Connection) -> Tensor {
    let m = spec.dim();
    let gamma = conn.gamma();
    let c = spec.brackets();
    Tensor::from_fn(m, &RIEMANN_VALENCE, |ix| {
        let (l, i, j, k) = (ix[0], ix[1], ix[2], ix[3]);
        (0..m)
            .map(|p| {
                gamma.get(&[p, j, k]) * gamma.get(&[l, i, p]) - gamma.get(&[p, i, k]) * gamma.get(&[l, j, p])
                    - c.get(&[p, i, j]) * gamma.get(&[l, p, k])
            })
            .sum()
    })
}

/// `R^l_ijk ↦ R_ijkl = g_lp R^p_ijk`, slots reordered to `(i, j, k, l)`.
pub fn lower_riemann(riemann: &Tensor, g: &Tensor) -> Result<Tensor> {
    riemann.lower(0, g)?.permute(&[1, 2, 3, 0])
}

/// `S_jk = Σ_i R^i_ijk`.
pub fn ricci(riemann: &Tensor) -> Result<Tensor> {
    riemann.contract(0, 1)
}

pub fn scalar(ricci: &Tensor, g_inv: &Tensor) -> Rational {
    ricci
        .iter()
        .map(|(ix, s)| g_inv.get(&[ix[0], ix[1]]) * s)
        .sum()
}

/// `Q^i_j = g^ik S_kj`, so that `g(QX, Y) = S(X, Y)`.
pub fn ricci_operator(ricci: &Tensor, g_inv: &Tensor) -> Result<Tensor> {
    ricci.raise(0, g_inv)
}

/// `(∇t)[w, ..] = (∇_{e_w} t)[..]` for a tensor with frame-constant
/// components: only the connection action survives.
pub fn covariant_derivative(t: &Tensor, conn: &Connection) -> Tensor {
    let m = t.dim();
    let gamma = conn.gamma();
    let mut valence = vec![Slot::Down];
    valence.extend_from_slice(t.valence());
    let mut src = vec![0; t.rank()];
    Tensor::from_fn(m, &valence, |ix| {
        let w = ix[0];
        let idx = &ix[1..];
        let mut acc = Rational::zero();
        for (s, kind) in t.valence().iter().enumerate() {
            src.copy_from_slice(idx);
            for p in 0..m {
                src[s] = p;
                let coeff = match kind {
                    Slot::Up => gamma.get(&[idx[s], w, p]).clone(),
                    Slot::Down => -gamma.get(&[p, w, idx[s]]),
                };
                if !coeff.is_zero() {
                    acc += coeff * t.get(&src);
                }
            }
        }
        acc
    })
}

/// `G[i, j, k, l] = g_jk g_il - g_ik g_jl`, the lowered form of
/// `g(Y,Z)X - g(X,Z)Y`.
pub fn metric_wedge(g: &Tensor) -> Tensor {
    Tensor::from_fn(g.dim(), &[Slot::Down; 4], |ix| {
        let (i, j, k, l) = (ix[0], ix[1], ix[2], ix[3]);
        g.get(&[j, k]) * g.get(&[i, l]) - g.get(&[i, k]) * g.get(&[j, l])
    })
}

/// The unique `c` with `target = c · basis` exactly, if any.
fn proportionality(target: &Tensor, basis: &Tensor) -> Option<Rational> {
    let c = match basis.first_nonzero() {
        Some((idx, b)) => target.get(&idx) / b,
        None => return target.is_zero().then(Rational::zero),
    };
    (basis.scale(&c) == *target).then_some(c)
}

/// `Some(c)` when `R(X,Y,Z,W) = c (g(Y,Z) g(X,W) - g(X,Z) g(Y,W))` exactly.
pub fn constant_curvature_test(riemann_low: &Tensor, g: &Tensor) -> Option<Rational> {
    proportionality(riemann_low, &metric_wedge(g))
}

/// `Some(λ)` when `S = λ g` exactly.
pub fn einstein_test(ricci: &Tensor, g: &Tensor) -> Option<Rational> {
    proportionality(ricci, g)
}

pub fn curvature_symmetry_suite(geom: &GeometryCache, spec: &FrameSpec) -> CheckReport {
    debug_assert_eq!(geom.dim(), spec.dim());
    let r = &geom.riemann_low;
    let swap_ij = r.permute(&[1, 0, 2, 3]).expect("rank 4");
    let swap_kl = r.permute(&[0, 1, 3, 2]).expect("rank 4");
    let pairs = r.permute(&[2, 3, 0, 1]).expect("rank 4");
    let bianchi = Tensor::from_fn(r.dim(), &[Slot::Down; 4], |ix| {
        let (i, j, k, l) = (ix[0], ix[1], ix[2], ix[3]);
        r.get(&[i, j, k, l]) + r.get(&[j, k, i, l]) + r.get(&[k, i, j, l])
    });

    let mut report = CheckReport::new();
    report.push(CheckResult::compare("riemann-antisymmetric-xy", r, &swap_ij.scale(&-Rational::one())));
    report.push(CheckResult::compare("riemann-antisymmetric-zw", r, &swap_kl.scale(&-Rational::one())));
    report.push(CheckResult::compare("riemann-pair-symmetry", r, &pairs));
    report.push(CheckResult::zero("first-bianchi", &bianchi));
    let s_t = geom.ricci.permute(&[1, 0]).expect("rank 2");
    report.push(CheckResult::compare("ricci-symmetric", &geom.ricci, &s_t));
    report
}
