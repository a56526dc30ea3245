//! The eight-parameter 𝒯-curvature family
//!
//! ```text
//! 𝒯(X,Y)Z = a0 R(X,Y)Z + a1 S(Y,Z)X + a2 S(X,Z)Y + a3 S(X,Y)Z
//!         + a4 g(Y,Z)QX + a5 g(X,Z)QY + a6 g(X,Y)QZ
//!         + a7 r (g(Y,Z)X - g(X,Z)Y)
//! ```
//!
//! together with its twenty named specialisations, the closed form valid on
//! 3-dimensional (ε)-para Sasakian manifolds, and its covariant derivative.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use crate::connection::Connection;
use crate::curvature::{covariant_derivative, GeometryCache, RIEMANN_VALENCE};
use crate::error::{Error, Result};
use crate::rational::{q, Rational};
use crate::tensor::Tensor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    Riemann,
    Quasiconformal,
    Conformal,
    Conharmonic,
    Concircular,
    Pseudoprojective,
    Projective,
    MProjective,
    W0,
    W0Star,
    W1,
    W1Star,
    W2,
    W3,
    W4,
    W5,
    W6,
    W7,
    W8,
    W9,
}

impl Preset {
    /// All presets in their conventional listing order.
    pub const ALL: [Preset; 20] = [
        Preset::Riemann,
        Preset::Quasiconformal,
        Preset::Conformal,
        Preset::Conharmonic,
        Preset::Concircular,
        Preset::Pseudoprojective,
        Preset::Projective,
        Preset::MProjective,
        Preset::W0,
        Preset::W0Star,
        Preset::W1,
        Preset::W1Star,
        Preset::W2,
        Preset::W3,
        Preset::W4,
        Preset::W5,
        Preset::W6,
        Preset::W7,
        Preset::W8,
        Preset::W9,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Riemann => "riemann",
            Preset::Quasiconformal => "quasiconformal",
            Preset::Conformal => "conformal",
            Preset::Conharmonic => "conharmonic",
            Preset::Concircular => "concircular",
            Preset::Pseudoprojective => "pseudoprojective",
            Preset::Projective => "projective",
            Preset::MProjective => "m-projective",
            Preset::W0 => "w0",
            Preset::W0Star => "w0star",
            Preset::W1 => "w1",
            Preset::W1Star => "w1star",
            Preset::W2 => "w2",
            Preset::W3 => "w3",
            Preset::W4 => "w4",
            Preset::W5 => "w5",
            Preset::W6 => "w6",
            Preset::W7 => "w7",
            Preset::W8 => "w8",
            Preset::W9 => "w9",
        }
    }

    /// Conventional tensor symbol (`C*`, `L`, `W0*`, ...).
    pub fn symbol(self) -> &'static str {
        match self {
            Preset::Riemann => "R",
            Preset::Quasiconformal => "C*",
            Preset::Conformal => "C",
            Preset::Conharmonic => "L",
            Preset::Concircular => "V",
            Preset::Pseudoprojective => "P*",
            Preset::Projective => "P",
            Preset::MProjective => "M",
            Preset::W0 => "W0",
            Preset::W0Star => "W0*",
            Preset::W1 => "W1",
            Preset::W1Star => "W1*",
            Preset::W2 => "W2",
            Preset::W3 => "W3",
            Preset::W4 => "W4",
            Preset::W5 => "W5",
            Preset::W6 => "W6",
            Preset::W7 => "W7",
            Preset::W8 => "W8",
            Preset::W9 => "W9",
        }
    }

    /// Quasiconformal and pseudoprojective are families in `(a0, a1)`.
    pub fn has_free_params(self) -> bool {
        matches!(self, Preset::Quasiconformal | Preset::Pseudoprojective)
    }

    /// Default `(a0, a1)` for the two families: quasiconformal defaults to
    /// its M-projective member, pseudoprojective to its projective member.
    pub fn default_free_params(self, m: usize) -> Option<(Rational, Rational)> {
        let m = m as i64;
        match self {
            Preset::Quasiconformal => Some((Rational::one(), q(-1, 2 * (m - 1)))),
            Preset::Pseudoprojective => Some((Rational::one(), q(-1, m - 1))),
            _ => None,
        }
    }

    pub fn params(self, m: usize) -> Result<TParams> {
        self.params_with(m, None)
    }

    /// Coefficients at dimension `m`; `free` overrides `(a0, a1)` for the two
    /// family presets and is rejected for the others.
    pub fn params_with(self, m: usize, free: Option<(Rational, Rational)>) -> Result<TParams> {
        if m < 2 {
            return Err(Error::Dimension(format!("presets need dimension >= 2, got {m}")));
        }
        if free.is_some() && !self.has_free_params() {
            return Err(Error::usage(format!("preset `{}` takes no free parameters", self.name())));
        }
        let mi = m as i64;
        let degenerate = || Error::DegeneratePreset {
            name: self.name().to_string(),
            dim: m,
        };
        let k1 = q(1, mi - 1);
        let k2 = if m > 2 { Some(q(1, mi - 2)) } else { None };
        let mr = Rational::from(m);
        let mut a: [Rational; 8] = Default::default();
        a[0] = Rational::one();
        match self {
            Preset::Riemann => {}
            Preset::Quasiconformal => {
                let (a0, a1) = free.unwrap_or_else(|| self.default_free_params(m).expect("family"));
                a[0] = a0.clone();
                a[1] = a1.clone();
                a[2] = -&a1;
                a[4] = a1.clone();
                a[5] = -&a1;
                a[7] = -(a0 * &k1 + a1 * q(2, 1)) / &mr;
            }
            Preset::Conformal | Preset::Conharmonic => {
                let k2 = k2.ok_or_else(degenerate)?;
                a[1] = -&k2;
                a[2] = k2.clone();
                a[4] = -&k2;
                a[5] = k2.clone();
                if self == Preset::Conformal {
                    a[7] = &k1 * &k2;
                }
            }
            Preset::Concircular => a[7] = -(&k1 / &mr),
            Preset::Pseudoprojective => {
                let (a0, a1) = free.unwrap_or_else(|| self.default_free_params(m).expect("family"));
                a[0] = a0.clone();
                a[1] = a1.clone();
                a[2] = -&a1;
                a[7] = -(a0 * &k1 + a1) / &mr;
            }
            Preset::Projective => {
                a[1] = -&k1;
                a[2] = k1.clone();
            }
            Preset::MProjective => {
                let h = &k1 * q(1, 2);
                a[1] = -&h;
                a[2] = h.clone();
                a[4] = -&h;
                a[5] = h;
            }
            Preset::W0 => {
                a[1] = -&k1;
                a[5] = k1.clone();
            }
            Preset::W0Star => {
                a[1] = k1.clone();
                a[5] = -&k1;
            }
            Preset::W1 => {
                a[1] = k1.clone();
                a[2] = -&k1;
            }
            Preset::W1Star => {
                a[1] = -&k1;
                a[2] = k1.clone();
            }
            Preset::W2 => {
                a[4] = -&k1;
                a[5] = k1.clone();
            }
            Preset::W3 => {
                a[2] = -&k1;
                a[4] = k1.clone();
            }
            Preset::W4 => {
                a[5] = k1.clone();
                a[6] = -&k1;
            }
            Preset::W5 => {
                a[2] = -&k1;
                a[5] = k1.clone();
            }
            Preset::W6 => {
                a[1] = -&k1;
                a[6] = k1.clone();
            }
            Preset::W7 => {
                a[1] = -&k1;
                a[4] = k1.clone();
            }
            Preset::W8 => {
                a[1] = -&k1;
                a[3] = k1.clone();
            }
            Preset::W9 => {
                a[3] = k1.clone();
                a[4] = -&k1;
            }
        }
        Ok(TParams {
            coeffs: a,
            origin: Some(PresetOrigin { preset: self, dim: m }),
        })
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownPreset(s.to_string()))
    }
}

/// A preset name with optional family parameters: `name` or `name:a0,a1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresetSpec {
    pub preset: Preset,
    pub free: Option<(Rational, Rational)>,
}

impl PresetSpec {
    pub fn resolve(&self, m: usize) -> Result<TParams> {
        self.preset.params_with(m, self.free.clone())
    }
}

impl FromStr for PresetSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = match s.split_once(':') {
            Some((n, r)) => (n.trim(), Some(r)),
            None => (s.trim(), None),
        };
        let preset: Preset = name.parse()?;
        let free = match rest {
            None => None,
            Some(r) => {
                let parts: Vec<&str> = r.split(',').map(str::trim).collect();
                let [a0, a1] = parts.as_slice() else {
                    return Err(Error::usage(format!("`{s}`: expected NAME:a0,a1")));
                };
                let parse = |t: &str| {
                    t.parse::<Rational>()
                        .map_err(|e| Error::usage(format!("`{s}`: {e}")))
                };
                Some((parse(a0)?, parse(a1)?))
            }
        };
        if free.is_some() && !preset.has_free_params() {
            return Err(Error::usage(format!("preset `{name}` takes no free parameters")));
        }
        Ok(PresetSpec { preset, free })
    }
}

impl fmt::Display for PresetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.free {
            None => write!(f, "{}", self.preset),
            Some((a0, a1)) => write!(f, "{}:{a0},{a1}", self.preset),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresetOrigin {
    pub preset: Preset,
    pub dim: usize,
}

/// Coefficients `a0..a7`, optionally tagged with the preset and dimension
/// they were generated for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TParams {
    pub coeffs: [Rational; 8],
    pub origin: Option<PresetOrigin>,
}

impl TParams {
    pub fn explicit(coeffs: [Rational; 8]) -> Self {
        TParams { coeffs, origin: None }
    }

    /// `a_i = 1`, all others zero.
    pub fn unit(i: usize) -> Self {
        let mut coeffs: [Rational; 8] = Default::default();
        coeffs[i] = Rational::one();
        TParams::explicit(coeffs)
    }

    pub fn a(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn label(&self) -> String {
        match &self.origin {
            Some(o) => o.preset.name().to_string(),
            None => "custom".to_string(),
        }
    }

    /// Preset-derived coefficients are only valid at the dimension they were
    /// generated for.
    pub fn check_dim(&self, m: usize) -> Result<()> {
        match &self.origin {
            Some(o) if o.dim != m => Err(Error::Dimension(format!(
                "preset `{}` was generated for dimension {}, used at dimension {m}",
                o.preset, o.dim
            ))),
            _ => Ok(()),
        }
    }

    pub fn scale(&self, factor: &Rational) -> TParams {
        TParams::explicit(std::array::from_fn(|i| &self.coeffs[i] * factor))
    }
}

impl Add for &TParams {
    type Output = TParams;
    fn add(self, rhs: &TParams) -> TParams {
        TParams::explicit(std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]))
    }
}

pub fn preset(name: &str, m: usize) -> Result<TParams> {
    name.parse::<PresetSpec>()?.resolve(m)
}

fn delta(a: usize, b: usize) -> Rational {
    if a == b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// `𝒯[l, i, j, k]` with `𝒯(e_i, e_j) e_k = Σ_l 𝒯[l, i, j, k] e_l`.
pub fn t_tensor(params: &TParams, geom: &GeometryCache) -> Result<Tensor> {
    let m = geom.dim();
    params.check_dim(m)?;
    let a = &params.coeffs;
    let (rm, s, g, qop, r) = (&geom.riemann, &geom.ricci, &geom.metric, &geom.ricci_op, &geom.scalar);
    let a7r = &a[7] * r;
    Ok(Tensor::from_fn(m, &RIEMANN_VALENCE, |ix| {
        let (l, i, j, k) = (ix[0], ix[1], ix[2], ix[3]);
        let (dli, dlj, dlk) = (delta(l, i), delta(l, j), delta(l, k));
        &a[0] * rm.get(&[l, i, j, k])
            + &a[1] * s.get(&[j, k]) * &dli
            + &a[2] * s.get(&[i, k]) * &dlj
            + &a[3] * s.get(&[i, j]) * &dlk
            + &a[4] * g.get(&[j, k]) * qop.get(&[l, i])
            + &a[5] * g.get(&[i, k]) * qop.get(&[l, j])
            + &a[6] * g.get(&[i, j]) * qop.get(&[l, k])
            + &a7r * (g.get(&[j, k]) * &dli - g.get(&[i, k]) * &dlj)
    }))
}

/// Closed form of 𝒯 on a 3-dimensional (ε)-para Sasakian manifold, in terms
/// of `g`, `η`, `ξ` and the scalar curvature only.
pub fn t_tensor_3d_closed_form(
    params: &TParams,
    r: &Rational,
    eps: &Rational,
    g: &Tensor,
    eta: &Tensor,
    xi: &Tensor,
) -> Result<Tensor> {
    if g.dim() != 3 || eta.dim() != 3 || xi.dim() != 3 {
        return Err(Error::Dimension("the closed form holds in dimension 3 only".into()));
    }
    params.check_dim(3)?;
    let a = &params.coeffs;
    let half_r = r * q(1, 2);
    let ra = &half_r + eps; // r/2 + ε
    let rb = eps * &half_r + q(3, 1); // εr/2 + 3
    let rc = &half_r + eps * q(3, 1); // r/2 + 3ε
    let a7r = &a[7] * r;
    let eps_a0 = eps * &a[0];

    let c_gyz_x = &ra * (&a[0] + &a[1] + &a[4]) + &a7r + &eps_a0;
    let c_gxz_y = -(&ra * (&a[0] - &a[2] - &a[5]) + &a7r + &eps_a0);
    let c_gxy_z = &ra * (&a[3] + &a[6]);
    let c_exey_z = -(&rb * &a[3]);
    let c_eyez_x = -(&rb * (&a[0] + &a[1]));
    let c_exez_y = &rb * (&a[0] - &a[2]);
    let c_gxz_ey_xi = &rc * (&a[0] - &a[5]);
    let c_gxy_ez_xi = -(&rc * &a[6]);
    let c_gyz_ex_xi = -(&rc * (&a[0] + &a[4]));

    Ok(Tensor::from_fn(3, &RIEMANN_VALENCE, |ix| {
        let (l, i, j, k) = (ix[0], ix[1], ix[2], ix[3]);
        let (gij, gik, gjk) = (g.get(&[i, j]), g.get(&[i, k]), g.get(&[j, k]));
        let (ei, ej, ek) = (eta.get(&[i]), eta.get(&[j]), eta.get(&[k]));
        let xl = xi.get(&[l]);
        &c_gyz_x * gjk * delta(l, i)
            + &c_gxz_y * gik * delta(l, j)
            + &c_gxy_z * gij * delta(l, k)
            + &c_exey_z * ei * ej * delta(l, k)
            + &c_eyez_x * ej * ek * delta(l, i)
            + &c_exez_y * ei * ek * delta(l, j)
            + &c_gxz_ey_xi * gik * ej * xl
            + &c_gxy_ez_xi * gij * ek * xl
            + &c_gyz_ex_xi * gjk * ei * xl
    }))
}

/// `(∇𝒯)[w, l, i, j, k] = ((∇_{e_w} 𝒯)(e_i, e_j) e_k)^l`.
pub fn nabla_t(t: &Tensor, conn: &Connection) -> Tensor {
    covariant_derivative(t, conn)
}
