//! Reference frames used by tests, examples and the bundled manifests.

use crate::frame::{FrameSpec, METRIC_VALENCE};
use crate::paracontact::ParacontactSpec;
use crate::rational::{q, Rational};
use crate::tensor::{Slot, Tensor};

/// Bundled manifest sources, by file name.
pub const BUNDLED_MANIFESTS: [(&str, &str); 5] = [
    ("e3_plus.manifest", include_str!("../../../manifests/e3_plus.manifest")),
    ("e3_minus.manifest", include_str!("../../../manifests/e3_minus.manifest")),
    ("abelian_flat.manifest", include_str!("../../../manifests/abelian_flat.manifest")),
    ("heisenberg.manifest", include_str!("../../../manifests/heisenberg.manifest")),
    ("broken_jacobi.manifest", include_str!("../../../manifests/broken_jacobi.manifest")),
];

pub fn bundled(name: &str) -> Option<&'static str> {
    BUNDLED_MANIFESTS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
}

pub fn diagonal_metric(values: &[Rational]) -> Tensor {
    Tensor::from_fn(values.len(), &METRIC_VALENCE, |ix| {
        if ix[0] == ix[1] {
            values[ix[0]].clone()
        } else {
            Rational::zero()
        }
    })
}

fn basis(m: usize, k: usize) -> Vec<Rational> {
    (0..m).map(|i| if i == k { q(1, 1) } else { q(0, 1) }).collect()
}

/// The 3-dimensional frame `[e1,e3] = e1`, `[e2,e3] = e2`, `[e1,e2] = 0`,
/// `g = diag(1, 1, eps)`.
pub fn e3_frame(eps: i64) -> FrameSpec {
    assert!(eps == 1 || eps == -1, "eps must be ±1");
    FrameSpec::from_bracket_list(
        diagonal_metric(&[q(1, 1), q(1, 1), q(eps, 1)]),
        &[(0, 2, basis(3, 0)), (1, 2, basis(3, 1))],
    )
    .expect("static frame")
}

/// `φ = diag(eps, eps, 0)`, `ξ = e3`, `η = (0, 0, 1)` on [`e3_frame`].
pub fn e3_paracontact(eps: i64) -> ParacontactSpec {
    let phi = Tensor::from_fn(3, &[Slot::Up, Slot::Down], |ix| {
        if ix[0] == ix[1] && ix[0] < 2 {
            q(eps, 1)
        } else {
            Rational::zero()
        }
    });
    ParacontactSpec::new(
        phi,
        Tensor::vector(basis(3, 2), Slot::Up),
        Tensor::vector(basis(3, 2), Slot::Down),
        q(eps, 1),
    )
    .expect("static structure")
}

/// All brackets zero, Euclidean metric.
pub fn abelian_frame(m: usize) -> FrameSpec {
    FrameSpec::from_bracket_list(diagonal_metric(&vec![q(1, 1); m]), &[]).expect("static frame")
}

/// `[e1, e2] = e3` with the Euclidean metric.
pub fn heisenberg_frame() -> FrameSpec {
    FrameSpec::from_bracket_list(diagonal_metric(&[q(1, 1), q(1, 1), q(1, 1)]), &[(0, 1, basis(3, 2))])
        .expect("static frame")
}

/// `[e1,e2] = e3`, `[e2,e3] = e1`, `[e1,e3] = e1`: antisymmetric but not Jacobi.
pub fn broken_jacobi_frame() -> FrameSpec {
    FrameSpec::from_bracket_list(
        diagonal_metric(&[q(1, 1), q(1, 1), q(1, 1)]),
        &[(0, 1, basis(3, 2)), (1, 2, basis(3, 0)), (0, 2, basis(3, 0))],
    )
    .expect("static frame")
}
