//! (ε)-almost paracontact metric structures `(φ, ξ, η, g, ε)` and the
//! (ε)-para Sasakian condition
//!
//! ```text
//! (∇_X φ) Y = -g(φX, φY) ξ - ε η(Y) φ²X
//! ```
//!
//! Every check is evaluated on all frame index tuples and compares exact
//! rationals; a failing check reports the first offending tuple (1-based).

use crate::curvature::{constant_curvature_test, covariant_derivative, GeometryCache};
use crate::error::{Error, Result};
use crate::frame::FrameSpec;
use crate::rational::{q, Rational};
use crate::report::{CheckReport, CheckResult, Expected, Witness};
use crate::tensor::{Slot, Tensor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParacontactSpec {
    /// `phi[a, b]` with `φ e_b = Σ_a phi[a, b] e_a`.
    phi: Tensor,
    xi: Tensor,
    eta: Tensor,
    eps: Rational,
}

impl ParacontactSpec {
    /// Checks shapes and `ε = ±1`; the axioms themselves are left to
    /// [`validate_paracontact`].
    pub fn new(phi: Tensor, xi: Tensor, eta: Tensor, eps: Rational) -> Result<Self> {
        let m = phi.dim();
        if phi.valence() != [Slot::Up, Slot::Down] {
            return Err(Error::usage("phi must have valence (Up, Down)"));
        }
        if xi.valence() != [Slot::Up] || xi.dim() != m {
            return Err(Error::usage(format!("xi must be an Up vector of dimension {m}")));
        }
        if eta.valence() != [Slot::Down] || eta.dim() != m {
            return Err(Error::usage(format!("eta must be a Down covector of dimension {m}")));
        }
        if eps.abs() != Rational::one() || !eps.is_integer() {
            return Err(Error::usage(format!("epsilon must be 1 or -1, got {eps}")));
        }
        Ok(ParacontactSpec { phi, xi, eta, eps })
    }

    pub fn phi(&self) -> &Tensor {
        &self.phi
    }

    pub fn xi(&self) -> &Tensor {
        &self.xi
    }

    pub fn eta(&self) -> &Tensor {
        &self.eta
    }

    pub fn eps(&self) -> &Rational {
        &self.eps
    }

    pub fn dim(&self) -> usize {
        self.phi.dim()
    }

    /// `(φ²)[a, b]`.
    pub fn phi_squared(&self) -> Tensor {
        compose(&self.phi, &self.phi)
    }
}

fn compose(a: &Tensor, b: &Tensor) -> Tensor {
    let m = a.dim();
    Tensor::from_fn(m, &[Slot::Up, Slot::Down], |ix| {
        (0..m).map(|p| a.get(&[ix[0], p]) * b.get(&[p, ix[1]])).sum()
    })
}

fn delta(a: usize, b: usize) -> Rational {
    if a == b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

fn shape_check(spec: &FrameSpec, pc: &ParacontactSpec) {
    assert_eq!(spec.dim(), pc.dim(), "paracontact structure and frame differ in dimension");
}

fn scalar_check(id: &str, actual: Rational, expected: Rational) -> CheckResult {
    if actual == expected {
        CheckResult::pass(id)
    } else {
        CheckResult::fail(id, Witness::at(&[], expected, actual))
    }
}

/// The almost paracontact axioms and metric compatibility.
pub fn validate_paracontact(spec: &FrameSpec, pc: &ParacontactSpec) -> CheckReport {
    shape_check(spec, pc);
    let m = spec.dim();
    let g = spec.metric();
    let (phi, xi, eta, eps) = (pc.phi(), pc.xi(), pc.eta(), pc.eps());
    let ud = [Slot::Up, Slot::Down];
    let dd = [Slot::Down, Slot::Down];
    let mut report = CheckReport::new();

    let expected_phi2 = Tensor::from_fn(m, &ud, |ix| delta(ix[0], ix[1]) - xi.get(&[ix[0]]) * eta.get(&[ix[1]]));
    report.push(CheckResult::compare("phi-squared", &pc.phi_squared(), &expected_phi2));

    let eta_xi: Rational = (0..m).map(|a| eta.get(&[a]) * xi.get(&[a])).sum();
    report.push(scalar_check("eta-xi", eta_xi, Rational::one()));

    let phi_xi = Tensor::from_fn(m, &[Slot::Up], |ix| {
        (0..m).map(|b| phi.get(&[ix[0], b]) * xi.get(&[b])).sum()
    });
    report.push(CheckResult::zero("phi-xi", &phi_xi));

    let eta_phi = Tensor::from_fn(m, &[Slot::Down], |ix| {
        (0..m).map(|a| eta.get(&[a]) * phi.get(&[a, ix[0]])).sum()
    });
    report.push(CheckResult::zero("eta-phi", &eta_phi));

    let g_phi_phi = Tensor::from_fn(m, &dd, |ix| {
        let mut s = Rational::zero();
        for a in 0..m {
            for b in 0..m {
                s += phi.get(&[a, ix[0]]) * phi.get(&[b, ix[1]]) * g.get(&[a, b]);
            }
        }
        s
    });
    let g_minus = Tensor::from_fn(m, &dd, |ix| {
        g.get(&[ix[0], ix[1]]) - eps * eta.get(&[ix[0]]) * eta.get(&[ix[1]])
    });
    report.push(CheckResult::compare("metric-phi-phi", &g_phi_phi, &g_minus));

    // g(X, φY) against g(φX, Y)
    let g_x_phiy = Tensor::from_fn(m, &dd, |ix| {
        (0..m).map(|a| g.get(&[ix[0], a]) * phi.get(&[a, ix[1]])).sum()
    });
    let g_phix_y = Tensor::from_fn(m, &dd, |ix| {
        (0..m).map(|a| phi.get(&[a, ix[0]]) * g.get(&[a, ix[1]])).sum()
    });
    report.push(CheckResult::compare("phi-symmetric", &g_x_phiy, &g_phix_y));

    let g_x_xi = Tensor::from_fn(m, &[Slot::Down], |ix| {
        (0..m).map(|a| g.get(&[ix[0], a]) * xi.get(&[a])).sum()
    });
    report.push(CheckResult::compare("g-xi", &g_x_xi, &eta.scale(eps)));

    let g_xi_xi: Rational = (0..m).map(|a| g_x_xi.get(&[a]) * xi.get(&[a])).sum();
    report.push(scalar_check("g-xi-xi", g_xi_xi, eps.clone()));
    report
}

/// `(∇ξ)[w, a]` against `ε φ[a, w]`.
fn nabla_xi_check(id: &str, pc: &ParacontactSpec, geom: &GeometryCache) -> CheckResult {
    let nabla_xi = covariant_derivative(pc.xi(), &geom.conn);
    let expected = Tensor::from_fn(pc.dim(), &[Slot::Down, Slot::Up], |ix| {
        pc.eps() * pc.phi().get(&[ix[1], ix[0]])
    });
    CheckResult::compare(id, &nabla_xi, &expected)
}

/// The (ε)-para Sasakian defining equation on all frame pairs, and `∇ξ = εφ`.
pub fn validate_eps_ps(spec: &FrameSpec, pc: &ParacontactSpec, geom: &GeometryCache) -> CheckReport {
    shape_check(spec, pc);
    let m = spec.dim();
    let g = &geom.metric;
    let (phi, xi, eta, eps) = (pc.phi(), pc.xi(), pc.eta(), pc.eps());
    let phi2 = pc.phi_squared();
    let nabla_phi = covariant_derivative(phi, &geom.conn);
    let idx3 = [Slot::Down, Slot::Down, Slot::Up];

    // [i, j, a] = ((∇_{e_i} φ) e_j)^a
    let lhs = Tensor::from_fn(m, &idx3, |ix| nabla_phi.get(&[ix[0], ix[2], ix[1]]).clone());
    let rhs = Tensor::from_fn(m, &idx3, |ix| {
        let (i, j, a) = (ix[0], ix[1], ix[2]);
        let mut g_phi_phi = Rational::zero();
        for p in 0..m {
            for r in 0..m {
                g_phi_phi += phi.get(&[p, i]) * phi.get(&[r, j]) * g.get(&[p, r]);
            }
        }
        -(g_phi_phi * xi.get(&[a])) - eps * eta.get(&[j]) * phi2.get(&[a, i])
    });
    let mut report = CheckReport::new();
    report.push(CheckResult::compare("eps-para-sasakian", &lhs, &rhs));
    report.push(nabla_xi_check("nabla-xi", pc, geom));
    report
}

/// The curvature identities every (ε)-para Sasakian manifold satisfies.
pub fn identity_suite(spec: &FrameSpec, pc: &ParacontactSpec, geom: &GeometryCache) -> CheckReport {
    shape_check(spec, pc);
    let m = spec.dim();
    let mm1 = Rational::from(m - 1);
    let (g, rm, rlow, s, qop) = (&geom.metric, &geom.riemann, &geom.riemann_low, &geom.ricci, &geom.ricci_op);
    let (phi, xi, eta, eps) = (pc.phi(), pc.xi(), pc.eta(), pc.eps());
    let x = |a: usize| xi.get(&[a]);
    let e = |a: usize| eta.get(&[a]);
    let sum = |f: &dyn Fn(usize) -> Rational| -> Rational { (0..m).map(f).sum() };
    let mut report = CheckReport::new();

    // R(X,Y)ξ = η(X)Y - η(Y)X        [i, j, l]
    let lhs = Tensor::from_fn(m, &[Slot::Down, Slot::Down, Slot::Up], |ix| {
        let (i, j, l) = (ix[0], ix[1], ix[2]);
        sum(&|k| rm.get(&[l, i, j, k]) * x(k))
    });
    let rhs = Tensor::from_fn(m, &[Slot::Down, Slot::Down, Slot::Up], |ix| {
        let (i, j, l) = (ix[0], ix[1], ix[2]);
        e(i) * delta(l, j) - e(j) * delta(l, i)
    });
    report.push(CheckResult::compare("curvature-xy-xi", &lhs, &rhs));

    // R(ξ,X)Y = η(Y)X - ε g(X,Y)ξ    [j, k, l]
    let lhs = Tensor::from_fn(m, &[Slot::Down, Slot::Down, Slot::Up], |ix| {
        let (j, k, l) = (ix[0], ix[1], ix[2]);
        sum(&|i| x(i) * rm.get(&[l, i, j, k]))
    });
    let rhs = Tensor::from_fn(m, &[Slot::Down, Slot::Down, Slot::Up], |ix| {
        let (j, k, l) = (ix[0], ix[1], ix[2]);
        e(k) * delta(l, j) - eps * g.get(&[j, k]) * x(l)
    });
    report.push(CheckResult::compare("curvature-xi-x-y", &lhs, &rhs));

    // R(ξ,X)ξ = X - η(X)ξ            [j, l]
    let lhs = Tensor::from_fn(m, &[Slot::Down, Slot::Up], |ix| {
        let (j, l) = (ix[0], ix[1]);
        let mut acc = Rational::zero();
        for i in 0..m {
            for k in 0..m {
                acc += x(i) * x(k) * rm.get(&[l, i, j, k]);
            }
        }
        acc
    });
    let rhs = Tensor::from_fn(m, &[Slot::Down, Slot::Up], |ix| delta(ix[1], ix[0]) - e(ix[0]) * x(ix[1]));
    report.push(CheckResult::compare("curvature-xi-x-xi", &lhs, &rhs));

    // R(X,Y,Z,ξ) = η(Y)g(X,Z) - η(X)g(Y,Z)
    let d3 = [Slot::Down; 3];
    let lhs = Tensor::from_fn(m, &d3, |ix| sum(&|l| rlow.get(&[ix[0], ix[1], ix[2], l]) * x(l)));
    let rhs_base = Tensor::from_fn(m, &d3, |ix| {
        let (i, j, k) = (ix[0], ix[1], ix[2]);
        e(j) * g.get(&[i, k]) - e(i) * g.get(&[j, k])
    });
    report.push(CheckResult::compare("curvature-lowered-xi", &lhs, &rhs_base));

    // η(R(X,Y)Z) = ε(η(Y)g(X,Z) - η(X)g(Y,Z))
    let lhs = Tensor::from_fn(m, &d3, |ix| sum(&|l| e(l) * rm.get(&[l, ix[0], ix[1], ix[2]])));
    report.push(CheckResult::compare("eta-curvature", &lhs, &rhs_base.scale(eps)));

    // S(X,ξ) = -(m-1)η(X)
    let lhs = Tensor::from_fn(m, &[Slot::Down], |ix| sum(&|q| s.get(&[ix[0], q]) * x(q)));
    report.push(CheckResult::compare("ricci-x-xi", &lhs, &eta.scale(&-&mm1)));

    // Qξ = -ε(m-1)ξ
    let lhs = Tensor::from_fn(m, &[Slot::Up], |ix| sum(&|q| qop.get(&[ix[0], q]) * x(q)));
    report.push(CheckResult::compare("ricci-operator-xi", &lhs, &xi.scale(&-(eps * &mm1))));

    // S(ξ,ξ) = -(m-1)
    let s_xi_xi = {
        let mut acc = Rational::zero();
        for a in 0..m {
            for b in 0..m {
                acc += x(a) * x(b) * s.get(&[a, b]);
            }
        }
        acc
    };
    report.push(scalar_check("ricci-xi-xi", s_xi_xi, -&mm1));

    // S(φX,φY) = S(X,Y) + (m-1)η(X)η(Y)
    let dd = [Slot::Down, Slot::Down];
    let lhs = Tensor::from_fn(m, &dd, |ix| {
        let mut acc = Rational::zero();
        for a in 0..m {
            for b in 0..m {
                acc += phi.get(&[a, ix[0]]) * phi.get(&[b, ix[1]]) * s.get(&[a, b]);
            }
        }
        acc
    });
    let rhs = Tensor::from_fn(m, &dd, |ix| s.get(&[ix[0], ix[1]]) + &mm1 * e(ix[0]) * e(ix[1]));
    report.push(CheckResult::compare("ricci-phi-phi", &lhs, &rhs));

    report.push(nabla_xi_check("nabla-xi", pc, geom));
    report
}

/// Consequences of the structure used by the symmetry machinery:
/// `(∇_X η)(Y) = g(Y, φX)`, `(∇_W S)(Y, ξ) = -(m-1) g(Y, φW) - ε S(Y, φW)`,
/// `(∇_W S)(ξ, ξ) = 0` and `φ⁴ = φ²`.
pub fn consequence_suite(spec: &FrameSpec, pc: &ParacontactSpec, geom: &GeometryCache) -> CheckReport {
    shape_check(spec, pc);
    let m = spec.dim();
    let mm1 = Rational::from(m - 1);
    let (g, s) = (&geom.metric, &geom.ricci);
    let (phi, xi, eta, eps) = (pc.phi(), pc.xi(), pc.eta(), pc.eps());
    let dd = [Slot::Down, Slot::Down];
    let mut report = CheckReport::new();

    let nabla_eta = covariant_derivative(eta, &geom.conn);
    let g_y_phix = Tensor::from_fn(m, &dd, |ix| {
        let (w, y) = (ix[0], ix[1]);
        (0..m).map(|a| g.get(&[y, a]) * phi.get(&[a, w])).sum()
    });
    report.push(CheckResult::compare("nabla-eta", &nabla_eta, &g_y_phix));

    let nabla_s = covariant_derivative(s, &geom.conn);
    let lhs = Tensor::from_fn(m, &dd, |ix| {
        (0..m).map(|q| nabla_s.get(&[ix[0], ix[1], q]) * xi.get(&[q])).sum()
    });
    let rhs = Tensor::from_fn(m, &dd, |ix| {
        let (w, y) = (ix[0], ix[1]);
        (0..m)
            .map(|a| (-(&mm1 * g.get(&[y, a])) - eps * s.get(&[y, a])) * phi.get(&[a, w]))
            .sum()
    });
    report.push(CheckResult::compare("nabla-ricci-xi", &lhs, &rhs));

    let lhs = Tensor::from_fn(m, &[Slot::Down], |ix| {
        let mut acc = Rational::zero();
        for a in 0..m {
            for b in 0..m {
                acc += nabla_s.get(&[ix[0], a, b]) * xi.get(&[a]) * xi.get(&[b]);
            }
        }
        acc
    });
    report.push(CheckResult::zero("nabla-ricci-xi-xi", &lhs));

    let phi2 = pc.phi_squared();
    report.push(CheckResult::compare("phi-fourth", &compose(&phi2, &phi2), &phi2));
    report
}

/// The 3-dimensional formulas: conformal-flat decomposition of `R`, the
/// closed forms of `Q`, `S` and `R`, and the constant-curvature criterion
/// `r = -6ε`.
pub fn dim3_formula_suite(spec: &FrameSpec, pc: &ParacontactSpec, geom: &GeometryCache) -> Result<CheckReport> {
    shape_check(spec, pc);
    if spec.dim() != 3 {
        return Err(Error::Dimension(format!(
            "3-dimensional formulas requested on a {}-dimensional frame",
            spec.dim()
        )));
    }
    let m = 3;
    let (g, rm, s, qop, r) = (&geom.metric, &geom.riemann, &geom.ricci, &geom.ricci_op, &geom.scalar);
    let (xi, eta, eps) = (pc.xi(), pc.eta(), pc.eps());
    let half_r = r * q(1, 2);
    let mut report = CheckReport::new();

    let decomposition = Tensor::from_fn(m, rm.valence(), |ix| {
        let (l, i, j, k) = (ix[0], ix[1], ix[2], ix[3]);
        g.get(&[j, k]) * qop.get(&[l, i]) - g.get(&[i, k]) * qop.get(&[l, j]) + s.get(&[j, k]) * delta(l, i)
            - s.get(&[i, k]) * delta(l, j)
            - &half_r * (g.get(&[j, k]) * delta(l, i) - g.get(&[i, k]) * delta(l, j))
    });
    report.push(CheckResult::compare("conformal-decomposition", rm, &decomposition));

    let a = &half_r + eps; // r/2 + ε
    let c = &half_r + eps * q(3, 1); // r/2 + 3ε
    let b = eps * &half_r + q(3, 1); // εr/2 + 3
    let two_eps = &half_r + eps * q(2, 1); // r/2 + 2ε

    let q_closed = Tensor::from_fn(m, qop.valence(), |ix| {
        let (l, i) = (ix[0], ix[1]);
        &a * delta(l, i) - &c * eta.get(&[i]) * xi.get(&[l])
    });
    report.push(CheckResult::compare("ricci-operator-3d", qop, &q_closed));

    let s_closed = Tensor::from_fn(m, s.valence(), |ix| {
        let (i, j) = (ix[0], ix[1]);
        &a * g.get(&[i, j]) - &b * eta.get(&[i]) * eta.get(&[j])
    });
    report.push(CheckResult::compare("ricci-3d", s, &s_closed));

    let r_closed = Tensor::from_fn(m, rm.valence(), |ix| {
        let (l, i, j, k) = (ix[0], ix[1], ix[2], ix[3]);
        let (ei, ej, ek) = (eta.get(&[i]), eta.get(&[j]), eta.get(&[k]));
        &two_eps * (g.get(&[j, k]) * delta(l, i) - g.get(&[i, k]) * delta(l, j))
            + &b * (ei * ek * delta(l, j) - ej * ek * delta(l, i))
            + &c * (g.get(&[i, k]) * ej - g.get(&[j, k]) * ei) * xi.get(&[l])
    });
    report.push(CheckResult::compare("riemann-3d", rm, &r_closed));

    let target = -(eps * q(6, 1));
    let constant = constant_curvature_test(&geom.riemann_low, g);
    let hits_target = *r == target;
    report.push(if constant.is_some() == hits_target {
        CheckResult::pass("constant-curvature-lemma")
    } else {
        CheckResult::fail(
            "constant-curvature-lemma",
            Witness {
                indices: vec![],
                expected: Expected::Exactly(target),
                actual: r.clone(),
                note: Some(format!(
                    "constant curvature: {}, r = -6 eps: {hits_target}",
                    constant.is_some()
                )),
            },
        )
    });
    Ok(report)
}

/// Applies `φ²` to the single `Up` slot of `t`.
pub fn phi_square_apply(t: &Tensor, pc: &ParacontactSpec) -> Result<Tensor> {
    let ups: Vec<usize> = t
        .valence()
        .iter()
        .enumerate()
        .filter(|(_, k)| **k == Slot::Up)
        .map(|(s, _)| s)
        .collect();
    match ups.as_slice() {
        [slot] => t.apply_endomorphism(*slot, &pc.phi_squared()),
        [] => Err(Error::usage("phi^2 needs a tensor with an Up slot")),
        _ => Err(Error::usage("phi^2 needs a tensor with exactly one Up slot")),
    }
}

/// 0-based indices of the frame vectors orthogonal to `ξ`, for frames in
/// which `ξ` is itself a frame vector and `η` vanishes on the others.
pub fn horizontal_indices(spec: &FrameSpec, pc: &ParacontactSpec) -> Result<Vec<usize>> {
    shape_check(spec, pc);
    let m = spec.dim();
    let support: Vec<usize> = (0..m).filter(|&a| !pc.xi().get(&[a]).is_zero()).collect();
    let s = match support.as_slice() {
        [s] if pc.xi().get(&[*s]).is_one() => *s,
        _ => {
            return Err(Error::AdaptedFrame(format!(
                "xi = {:?} is not a frame vector e_k",
                pc.xi().entries()
            )))
        }
    };
    if let Some(i) = (0..m).find(|&i| i != s && !pc.eta().get(&[i]).is_zero()) {
        return Err(Error::AdaptedFrame(format!(
            "eta(e_{}) = {} but must vanish off xi = e_{}",
            i + 1,
            pc.eta().get(&[i]),
            s + 1
        )));
    }
    Ok((0..m).filter(|&i| i != s).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn e3(eps: i64) -> (FrameSpec, ParacontactSpec, GeometryCache) {
        let spec = catalog::e3_frame(eps);
        let geom = GeometryCache::new(&spec).unwrap();
        (spec, catalog::e3_paracontact(eps), geom)
    }

    #[test]
    fn e3_axioms_pass() {
        for eps in [1, -1] {
            let (spec, pc, geom) = e3(eps);
            let r = validate_paracontact(&spec, &pc);
            assert!(r.all_pass(), "{r}");
            assert_eq!(r.len(), 8);
            let r = validate_eps_ps(&spec, &pc, &geom);
            assert!(r.all_pass(), "{r}");
            let r = identity_suite(&spec, &pc, &geom);
            assert!(r.all_pass(), "{r}");
            assert_eq!(r.len(), 10);
            let r = consequence_suite(&spec, &pc, &geom);
            assert!(r.all_pass(), "{r}");
            let r = dim3_formula_suite(&spec, &pc, &geom).unwrap();
            assert!(r.all_pass(), "{r}");
        }
    }

    #[test]
    fn wrong_eta_fails_g_xi_for_negative_eps() {
        let spec = catalog::e3_frame(-1);
        let base = catalog::e3_paracontact(-1);
        let eta = Tensor::vector(vec![q(0, 1), q(0, 1), q(-1, 1)], Slot::Down);
        let pc = ParacontactSpec::new(base.phi().clone(), base.xi().clone(), eta, q(-1, 1)).unwrap();
        let r = validate_paracontact(&spec, &pc);
        let w = r.get("g-xi").unwrap().witness.clone().unwrap();
        assert_eq!(w.indices, vec![3]);
        assert_eq!(w.actual, q(-1, 1));
        assert_eq!(w.expected, Expected::Exactly(q(1, 1)));
    }

    #[test]
    fn zero_phi_fails_phi_squared() {
        let spec = catalog::e3_frame(1);
        let base = catalog::e3_paracontact(1);
        let pc = ParacontactSpec::new(
            Tensor::zeros(3, &[Slot::Up, Slot::Down]),
            base.xi().clone(),
            base.eta().clone(),
            q(1, 1),
        )
        .unwrap();
        let r = validate_paracontact(&spec, &pc);
        let w = r.get("phi-squared").unwrap().witness.clone().unwrap();
        assert_eq!(w.indices, vec![1, 1]);
        assert_eq!(w.expected, Expected::Exactly(q(1, 1)));
        assert_eq!(w.actual, q(0, 1));
    }

    #[test]
    fn defining_equation_sample_pairs() {
        for eps in [1i64, -1] {
            let (_, pc, geom) = e3(eps);
            let nphi = covariant_derivative(pc.phi(), &geom.conn);
            // (∇_{e1} φ) e1 = -e3
            let col: Vec<_> = (0..3).map(|a| nphi.get(&[0, a, 0]).clone()).collect();
            assert_eq!(col, vec![q(0, 1), q(0, 1), q(-1, 1)]);
            // (∇_{e1} φ) e3 = -eps e1
            let col: Vec<_> = (0..3).map(|a| nphi.get(&[0, a, 2]).clone()).collect();
            assert_eq!(col, vec![q(-eps, 1), q(0, 1), q(0, 1)]);
        }
    }

    #[test]
    fn abelian_frame_is_not_para_sasakian() {
        let spec = catalog::abelian_frame(3);
        let geom = GeometryCache::new(&spec).unwrap();
        let pc = catalog::e3_paracontact(1);
        let r = validate_eps_ps(&spec, &pc, &geom);
        let w = r.get("nabla-xi").unwrap().witness.clone().unwrap();
        assert_eq!(w.indices[0], 1);
        assert_eq!(w.actual, q(0, 1));
    }

    #[test]
    fn phi_square_examples() {
        let pc = catalog::e3_paracontact(-1);
        assert!(phi_square_apply(pc.xi(), &pc).unwrap().is_zero());
        let e1 = Tensor::vector(vec![q(1, 1), q(0, 1), q(0, 1)], Slot::Up);
        assert_eq!(phi_square_apply(&e1, &pc).unwrap(), e1);
        assert!(phi_square_apply(pc.eta(), &pc).is_err());
    }

    #[test]
    fn horizontal_examples() {
        let spec = catalog::e3_frame(1);
        assert_eq!(horizontal_indices(&spec, &catalog::e3_paracontact(1)).unwrap(), vec![0, 1]);
        let base = catalog::e3_paracontact(1);
        let tilted = ParacontactSpec::new(
            base.phi().clone(),
            Tensor::vector(vec![q(1, 1), q(1, 1), q(0, 1)], Slot::Up),
            base.eta().clone(),
            q(1, 1),
        )
        .unwrap();
        assert!(matches!(horizontal_indices(&spec, &tilted), Err(Error::AdaptedFrame(_))));
    }

    #[test]
    fn dim3_suite_rejects_other_dimensions() {
        let spec = catalog::abelian_frame(4);
        let geom = GeometryCache::new(&spec).unwrap();
        let pc = ParacontactSpec::new(
            Tensor::zeros(4, &[Slot::Up, Slot::Down]),
            Tensor::vector(vec![q(0, 1), q(0, 1), q(0, 1), q(1, 1)], Slot::Up),
            Tensor::vector(vec![q(0, 1), q(0, 1), q(0, 1), q(1, 1)], Slot::Down),
            q(1, 1),
        )
        .unwrap();
        assert!(matches!(dim3_formula_suite(&spec, &pc, &geom), Err(Error::Dimension(_))));
        assert_eq!(horizontal_indices(&spec, &pc).unwrap(), vec![0, 1, 2]);
    }
}
