//! φ-𝒯-symmetry, η-parallel Ricci tensors and the coefficient conditions
//! that decide whether a globally φ-𝒯-symmetric manifold is Einstein or has
//! constant scalar curvature.
//!
//! In a homogeneous frame the scalar curvature is a single constant, so the
//! "constant `r`" side of the 3-dimensional characterisation always holds;
//! only the forward implication can be exercised here.

use std::fmt;

use serde::Serialize;

use crate::curvature::{covariant_derivative, einstein_test, GeometryCache};
use crate::error::{Error, Result};
use crate::frame::FrameSpec;
use crate::paracontact::{horizontal_indices, phi_square_apply, validate_eps_ps, validate_paracontact, ParacontactSpec};
use crate::rational::Rational;
use crate::report::{CheckReport, CheckResult, Witness};
use crate::tcurv::{nabla_t, t_tensor, Preset, TParams};
use crate::tensor::{Slot, Tensor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryMode {
    Local,
    Global,
}

impl fmt::Display for SymmetryMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryMode::Local => "local",
            SymmetryMode::Global => "global",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryVerdict {
    pub mode: SymmetryMode,
    pub params: TParams,
    /// Largest-magnitude defect entry (signed); zero iff the check passes.
    pub defect_max_entry: Rational,
    /// 1-based `(w, i, j, k, l)` of that entry.
    pub witness: Option<[usize; 5]>,
}

impl SymmetryVerdict {
    pub fn pass(&self) -> bool {
        self.defect_max_entry.is_zero()
    }
}

/// Refuses structures that are not (ε)-para Sasakian.
pub fn require_eps_ps(spec: &FrameSpec, pc: &ParacontactSpec, geom: &GeometryCache) -> Result<()> {
    let mut report = validate_paracontact(spec, pc);
    if report.all_pass() {
        report.extend(validate_eps_ps(spec, pc, geom));
    }
    if report.all_pass() {
        Ok(())
    } else {
        Err(Error::Precondition {
            what: "structure is not (eps)-para Sasakian".into(),
            report,
        })
    }
}

/// `φ²((∇_{e_w} 𝒯)(e_i, e_j) e_k)` as `[w, l, i, j, k]`, over all indices.
pub fn phi_t_defect(pc: &ParacontactSpec, geom: &GeometryCache, params: &TParams) -> Result<Tensor> {
    let t = t_tensor(params, geom)?;
    phi_square_apply(&nabla_t(&t, &geom.conn), pc)
}

/// The defect restricted to the index set of `mode`: entries with a
/// non-horizontal `w`, `i`, `j` or `k` are zeroed in local mode.
pub fn mode_defect(
    spec: &FrameSpec,
    pc: &ParacontactSpec,
    geom: &GeometryCache,
    params: &TParams,
    mode: SymmetryMode,
) -> Result<Tensor> {
    let full = phi_t_defect(pc, geom, params)?;
    match mode {
        SymmetryMode::Global => Ok(full),
        SymmetryMode::Local => {
            let horizontal = horizontal_indices(spec, pc)?;
            let mut mask = vec![false; spec.dim()];
            for h in horizontal {
                mask[h] = true;
            }
            Ok(Tensor::from_fn(full.dim(), full.valence(), |ix| {
                if [ix[0], ix[2], ix[3], ix[4]].iter().all(|&a| mask[a]) {
                    full.get(ix).clone()
                } else {
                    Rational::zero()
                }
            }))
        }
    }
}

pub fn phi_t_symmetry_check(
    spec: &FrameSpec,
    pc: &ParacontactSpec,
    geom: &GeometryCache,
    params: &TParams,
    mode: SymmetryMode,
) -> Result<SymmetryVerdict> {
    require_eps_ps(spec, pc, geom)?;
    let defect = mode_defect(spec, pc, geom, params, mode)?;
    let (defect_max_entry, witness) = match defect.max_abs_entry() {
        None => (Rational::zero(), None),
        Some((ix, v)) => (v.clone(), Some([ix[0] + 1, ix[2] + 1, ix[3] + 1, ix[4] + 1, ix[1] + 1])),
    };
    Ok(SymmetryVerdict {
        mode,
        params: params.clone(),
        defect_max_entry,
        witness,
    })
}

/// `(∇_{e_w} S)(φ e_i, φ e_j)` as `[w, i, j]`.
pub fn eta_parallel_defect(pc: &ParacontactSpec, geom: &GeometryCache) -> Tensor {
    let nabla_s = covariant_derivative(&geom.ricci, &geom.conn);
    let phi = pc.phi();
    let m = geom.dim();
    Tensor::from_fn(m, &[Slot::Down; 3], |ix| {
        let (w, i, j) = (ix[0], ix[1], ix[2]);
        let mut acc = Rational::zero();
        for a in 0..m {
            let pa = phi.get(&[a, i]);
            if pa.is_zero() {
                continue;
            }
            for b in 0..m {
                acc += pa * phi.get(&[b, j]) * nabla_s.get(&[w, a, b]);
            }
        }
        acc
    })
}

pub fn eta_parallel_ricci_check(spec: &FrameSpec, pc: &ParacontactSpec, geom: &GeometryCache) -> CheckReport {
    assert_eq!(spec.dim(), pc.dim(), "paracontact structure and frame differ in dimension");
    let mut report = CheckReport::new();
    report.push(CheckResult::zero("eta-parallel-ricci", &eta_parallel_defect(pc, geom)));
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TheoremVerdict {
    EinsteinClass,
    ConstantRClass,
    NoVerdict,
}

impl fmt::Display for TheoremVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremVerdict::EinsteinClass => "EINSTEIN_CLASS",
            TheoremVerdict::ConstantRClass => "CONSTANT_R_CLASS",
            TheoremVerdict::NoVerdict => "NO_VERDICT",
        })
    }
}

/// Coefficient combinations that decide the symmetry theorems:
///
/// * `c1 = a0 + (m-1)a1 + a2 + a6` (nonzero: global φ-𝒯-symmetry forces Einstein)
/// * `c2 = a4 + (m-1)a7` (with `c1 = 0`: forces constant `r`)
/// * `c3 = a0 + a1 + a4 + 2a7`, `c4 = a0 - a2 - a5 + 2a7`, `c5 = a3 + a6`
///   (any nonzero: in dimension 3, local φ-𝒯-symmetry ⟺ constant `r`)
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremConditions {
    pub c1: Rational,
    pub c2: Rational,
    pub c3: Rational,
    pub c4: Rational,
    pub c5: Rational,
    pub verdict: TheoremVerdict,
    pub thm41_applicable: bool,
}

pub fn theorem_conditions(params: &TParams, m: usize) -> TheoremConditions {
    let a = &params.coeffs;
    let mm1 = Rational::from(m.saturating_sub(1));
    let two = Rational::from(2i64);
    let c1 = &a[0] + &mm1 * &a[1] + &a[2] + &a[6];
    let c2 = &a[4] + &mm1 * &a[7];
    let c3 = &a[0] + &a[1] + &a[4] + &two * &a[7];
    let c4 = &a[0] - &a[2] - &a[5] + &two * &a[7];
    let c5 = &a[3] + &a[6];
    let verdict = if !c1.is_zero() {
        TheoremVerdict::EinsteinClass
    } else if !c2.is_zero() {
        TheoremVerdict::ConstantRClass
    } else {
        TheoremVerdict::NoVerdict
    };
    let thm41_applicable = !(c3.is_zero() && c4.is_zero() && c5.is_zero());
    TheoremConditions {
        c1,
        c2,
        c3,
        c4,
        c5,
        verdict,
        thm41_applicable,
    }
}

/// Composes the symmetry theorems on a 3-dimensional (ε)-para Sasakian frame:
///
/// * `local-symmetry-constant-r`: when one of `c3, c4, c5` is nonzero, the
///   local check must pass (the scalar curvature is constant here);
/// * `einstein-reduction`: on Einstein geometry the global defect of
///   `params` equals `a0` times the global defect of `R`;
/// * `eta-parallel-implies-local`: an η-parallel Ricci tensor forces local
///   φ-𝒯-symmetry.
pub fn cross_validate_theorems(
    spec: &FrameSpec,
    pc: &ParacontactSpec,
    geom: &GeometryCache,
    params: &TParams,
) -> Result<CheckReport> {
    if spec.dim() != 3 {
        return Err(Error::Dimension(format!(
            "theorem cross-validation is for 3-dimensional frames, got {}",
            spec.dim()
        )));
    }
    require_eps_ps(spec, pc, geom)?;
    let conditions = theorem_conditions(params, 3);
    let local = phi_t_symmetry_check(spec, pc, geom, params, SymmetryMode::Local)?;
    let local_result = |id: &str| match local.witness {
        None => CheckResult::pass(id),
        Some(w) => CheckResult::fail(
            id,
            Witness::at(&w.map(|x| x - 1), Rational::zero(), local.defect_max_entry.clone())
                .with_note("local phi-T defect at (w,i,j,k,l)"),
        ),
    };
    let mut report = CheckReport::new();

    report.push(if conditions.thm41_applicable {
        local_result("local-symmetry-constant-r")
    } else {
        CheckResult::pass("local-symmetry-constant-r")
    });

    report.push(if einstein_test(&geom.ricci, &geom.metric).is_some() {
        let defect = phi_t_defect(pc, geom, params)?;
        let riemann_defect = phi_t_defect(pc, geom, &Preset::Riemann.params(3)?)?;
        CheckResult::compare("einstein-reduction", &defect, &riemann_defect.scale(params.a(0)))
    } else {
        CheckResult::pass("einstein-reduction")
    });

    report.push(if eta_parallel_ricci_check(spec, pc, geom).all_pass() {
        local_result("eta-parallel-implies-local")
    } else {
        CheckResult::pass("eta-parallel-implies-local")
    });
    Ok(report)
}
