//! Quaternions, rigid transforms, and small linear algebra helpers.

mod quat;
mod transform;
mod vec3;

pub use quat::{quat_diff_angle, UnitQuaternion, UNIT_NORM_TOL};
pub use transform::{transform_compose, Transform};
pub use vec3::{Mat3, Vec3};
