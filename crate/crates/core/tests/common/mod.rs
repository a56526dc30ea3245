//! Independent reference computations used to cross-check the engine.
//!
//! The connection is recovered by solving torsion-freeness and metricity as
//! one linear system in the `m³` unknowns (the Levi-Civita connection is its
//! unique solution), with no use of the Koszul formula. Curvature is
//! evaluated on vectors straight from `∇_X ∇_Y Z − ∇_Y ∇_X Z − ∇_{[X,Y]} Z`.

#![allow(dead_code)]

use paratensor::{FrameSpec, Rational};

pub type Vector = Vec<Rational>;

fn zero() -> Rational {
    Rational::zero()
}

/// Row reduction of `a x = b`; `None` unless the solution is unique.
pub fn solve_unique(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = a[r][c].recip().expect("nonzero pivot");
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        b[r] = &b[r] * &inv;
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in 0..cols {
                    let delta = &f * &a[r][k];
                    a[i][k] -= &delta;
                }
                let delta = &f * &b[r];
                b[i] -= &delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if pivots.len() != cols || b[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut x = vec![zero(); cols];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = b[row].clone();
    }
    Some(x)
}

/// Christoffel symbols `gamma[k][i][j]` (`∇_{e_i} e_j = Σ_k gamma[k][i][j] e_k`).
pub type Christoffel = Vec<Vec<Vec<Rational>>>;

pub fn oracle_connection(spec: &FrameSpec) -> Option<Christoffel> {
    let m = spec.dim();
    let c = spec.brackets();
    let g = spec.metric();
    let var = |k: usize, i: usize, j: usize| (k * m + i) * m + j;
    let n = m * m * m;
    let mut a = Vec::new();
    let mut b = Vec::new();
    // torsion: Γ^k_ij − Γ^k_ji = c^k_ij
    for k in 0..m {
        for i in 0..m {
            for j in 0..m {
                let mut row = vec![zero(); n];
                row[var(k, i, j)] += Rational::one();
                row[var(k, j, i)] -= Rational::one();
                a.push(row);
                b.push(c.get(&[k, i, j]).clone());
            }
        }
    }
    // metricity: Σ_l Γ^l_ki g_lj + Γ^l_kj g_il = 0
    for k in 0..m {
        for i in 0..m {
            for j in 0..m {
                let mut row = vec![zero(); n];
                for l in 0..m {
                    row[var(l, k, i)] += g.get(&[l, j]);
                    row[var(l, k, j)] += g.get(&[i, l]);
                }
                a.push(row);
                b.push(zero());
            }
        }
    }
    let x = solve_unique(a, b)?;
    Some(
        (0..m)
            .map(|k| (0..m).map(|i| (0..m).map(|j| x[var(k, i, j)].clone()).collect()).collect())
            .collect(),
    )
}

pub fn basis(m: usize, i: usize) -> Vector {
    (0..m).map(|k| if k == i { Rational::one() } else { zero() }).collect()
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `∇_X Y` for frame-constant `X`, `Y`.
pub fn nabla(gamma: &Christoffel, x: &[Rational], y: &[Rational]) -> Vector {
    let m = x.len();
    (0..m)
        .map(|k| {
            let mut s = zero();
            for i in 0..m {
                for j in 0..m {
                    s += &(&x[i] * &y[j]) * &gamma[k][i][j];
                }
            }
            s
        })
        .collect()
}

pub fn bracket(spec: &FrameSpec, x: &[Rational], y: &[Rational]) -> Vector {
    let m = x.len();
    let c = spec.brackets();
    (0..m)
        .map(|k| {
            let mut s = zero();
            for i in 0..m {
                for j in 0..m {
                    s += &(&x[i] * &y[j]) * c.get(&[k, i, j]);
                }
            }
            s
        })
        .collect()
}

/// `R(X,Y)Z` for frame-constant vectors.
pub fn curvature(spec: &FrameSpec, gamma: &Christoffel, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vector {
    let xy = nabla(gamma, x, &nabla(gamma, y, z));
    let yx = nabla(gamma, y, &nabla(gamma, x, z));
    let br = nabla(gamma, &bracket(spec, x, y), z);
    sub(&sub(&xy, &yx), &br)
}

/// `(∇_W R)(X,Y)Z` by the Leibniz rule on frame-constant vectors.
pub fn nabla_curvature(
    spec: &FrameSpec,
    gamma: &Christoffel,
    w: &[Rational],
    x: &[Rational],
    y: &[Rational],
    z: &[Rational],
) -> Vector {
    let r = |a: &[Rational], b: &[Rational], c: &[Rational]| curvature(spec, gamma, a, b, c);
    let mut out = nabla(gamma, w, &r(x, y, z));
    out = sub(&out, &r(&nabla(gamma, w, x), y, z));
    out = sub(&out, &r(x, &nabla(gamma, w, y), z));
    sub(&out, &r(x, y, &nabla(gamma, w, z)))
}

pub fn inner(spec: &FrameSpec, a: &[Rational], b: &[Rational]) -> Rational {
    let g = spec.metric();
    let mut s = zero();
    for i in 0..a.len() {
        for j in 0..b.len() {
            s += &(&a[i] * &b[j]) * g.get(&[i, j]);
        }
    }
    s
}
