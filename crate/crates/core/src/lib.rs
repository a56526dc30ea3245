//! Exact-arithmetic tensor calculus on frames with constant structure
//! constants: Levi-Civita connection, curvature, the generalized 𝒯-curvature
//! family and (ε)-para Sasakian checks.

pub mod catalog;
pub mod connection;
pub mod curvature;
pub mod error;
pub mod frame;
pub mod linalg;
pub mod manifest;
pub mod paracontact;
pub mod rational;
pub mod reference;
pub mod report;
pub mod symmetry;
pub mod tcurv;
pub mod tensor;

pub use connection::{koszul_connection, Connection};
pub use curvature::GeometryCache;
pub use error::{Error, Result};
pub use frame::{validate_frame, FrameSpec};
pub use manifest::{parse_manifest, serialize_manifest, Manifest, TParamsSource};
pub use paracontact::ParacontactSpec;
pub use rational::{q, Rational};
pub use report::{CheckReport, CheckResult, Status, Witness};
pub use tcurv::{t_tensor, Preset, PresetSpec, TParams};
pub use tensor::{Slot, Tensor};
