//! Unit quaternions and the geodesic distance between rotations.

use super::vec3::{Mat3, Vec3};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Maximum norm deviation tolerated by validating constructors.
pub const UNIT_NORM_TOL: f64 = 1e-6;

/// A unit quaternion (w, x, y, z), renormalized by every constructor.
///
/// `q` and `-q` encode the same rotation and compare equal under
/// [`UnitQuaternion::geodesic_angle`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitQuaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Default for UnitQuaternion {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl UnitQuaternion {
    pub const IDENTITY: UnitQuaternion = UnitQuaternion {
        w: 1.0,
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    /// Build from raw components, normalizing. Falls back to identity when
    /// the input norm is negligible.
    pub fn from_wxyz(w: f64, x: f64, y: f64, z: f64) -> Self {
        let n = (w * w + x * x + y * y + z * z).sqrt();
        if n < 1e-12 || !n.is_finite() {
            return Self::IDENTITY;
        }
        UnitQuaternion {
            w: w / n,
            x: x / n,
            y: y / n,
            z: z / n,
        }
    }

    /// Build from components that must already be unit norm within
    /// [`UNIT_NORM_TOL`]; renormalizes the residual rounding error.
    pub fn try_from_wxyz(w: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        let n = (w * w + x * x + y * y + z * z).sqrt();
        if !n.is_finite() || (n - 1.0).abs() > UNIT_NORM_TOL {
            return Err(Error::Validation(format!(
                "quaternion norm {n} deviates from 1 beyond {UNIT_NORM_TOL}"
            )));
        }
        Ok(Self::from_wxyz(w, x, y, z))
    }

    pub fn from_axis_angle(axis: Vec3, angle: f64) -> Self {
        let a = axis.normalized_or_zero();
        let (s, c) = (angle * 0.5).sin_cos();
        Self::from_wxyz(c, a.x() * s, a.y() * s, a.z() * s)
    }

    /// Rotation about +z.
    pub fn from_yaw(yaw: f64) -> Self {
        Self::from_axis_angle(Vec3::new(0.0, 0.0, 1.0), yaw)
    }

    pub fn conjugate(&self) -> Self {
        UnitQuaternion {
            w: self.w,
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }

    /// Inverse rotation; equals the conjugate for unit quaternions.
    pub fn inverse(&self) -> Self {
        self.conjugate()
    }

    /// Hamilton product `self * rhs` (apply `rhs` first, then `self`).
    pub fn mul(&self, rhs: &UnitQuaternion) -> Self {
        let (aw, ax, ay, az) = (self.w, self.x, self.y, self.z);
        let (bw, bx, by, bz) = (rhs.w, rhs.x, rhs.y, rhs.z);
        Self::from_wxyz(
            aw * bw - ax * bx - ay * by - az * bz,
            aw * bx + ax * bw + ay * bz - az * by,
            aw * by - ax * bz + ay * bw + az * bx,
            aw * bz + ax * by - ay * bx + az * bw,
        )
    }

    /// Rotate a vector.
    pub fn rotate(&self, v: &Vec3) -> Vec3 {
        // v' = v + 2 q_vec x (q_vec x v + w v)
        let qv = Vec3::new(self.x, self.y, self.z);
        let t = qv.cross(v) * 2.0;
        *v + t * self.w + qv.cross(&t)
    }

    /// Rotate a vector by the inverse rotation.
    pub fn rotate_inv(&self, v: &Vec3) -> Vec3 {
        self.conjugate().rotate(v)
    }

    pub fn to_rotmat(&self) -> Mat3 {
        let (w, x, y, z) = (self.w, self.x, self.y, self.z);
        Mat3([
            [
                1.0 - 2.0 * (y * y + z * z),
                2.0 * (x * y - w * z),
                2.0 * (x * z + w * y),
            ],
            [
                2.0 * (x * y + w * z),
                1.0 - 2.0 * (x * x + z * z),
                2.0 * (y * z - w * x),
            ],
            [
                2.0 * (x * z - w * y),
                2.0 * (y * z + w * x),
                1.0 - 2.0 * (x * x + y * y),
            ],
        ])
    }

    /// Rotation angle in [0, pi] carrying `self` onto `other`, insensitive
    /// to the quaternion double cover.
    pub fn geodesic_angle(&self, other: &UnitQuaternion) -> f64 {
        let rel = self.conjugate().mul(other);
        let vec_norm = (rel.x * rel.x + rel.y * rel.y + rel.z * rel.z).sqrt();
        2.0 * vec_norm.atan2(rel.w.abs())
    }

    /// Axis-angle logarithm of the rotation taking `self` to `other`,
    /// expressed in the world frame: `other = exp(result) * self`.
    pub fn rotation_to(&self, other: &UnitQuaternion) -> Vec3 {
        let mut rel = other.mul(&self.conjugate());
        if rel.w < 0.0 {
            rel = UnitQuaternion {
                w: -rel.w,
                x: -rel.x,
                y: -rel.y,
                z: -rel.z,
            };
        }
        let vec = Vec3::new(rel.x, rel.y, rel.z);
        let vec_norm = vec.norm();
        if vec_norm < 1e-12 {
            return Vec3::ZERO;
        }
        let angle = 2.0 * vec_norm.atan2(rel.w);
        vec * (angle / vec_norm)
    }

    /// Integrate a world-frame angular velocity over dt.
    pub fn integrate(&self, omega_world: Vec3, dt: f64) -> Self {
        let rot = omega_world * dt;
        let angle = rot.norm();
        if angle < 1e-14 {
            return *self;
        }
        UnitQuaternion::from_axis_angle(rot / angle, angle).mul(self)
    }

    /// Spherical linear interpolation; `t` in [0, 1].
    pub fn slerp(&self, other: &UnitQuaternion, t: f64) -> Self {
        let mut cos_half = self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z;
        let mut b = *other;
        if cos_half < 0.0 {
            cos_half = -cos_half;
            b = UnitQuaternion {
                w: -b.w,
                x: -b.x,
                y: -b.y,
                z: -b.z,
            };
        }
        if cos_half > 1.0 - 1e-10 {
            return Self::from_wxyz(
                self.w + (b.w - self.w) * t,
                self.x + (b.x - self.x) * t,
                self.y + (b.y - self.y) * t,
                self.z + (b.z - self.z) * t,
            );
        }
        let half = cos_half.clamp(-1.0, 1.0).acos();
        let sin_half = half.sin();
        let wa = ((1.0 - t) * half).sin() / sin_half;
        let wb = (t * half).sin() / sin_half;
        Self::from_wxyz(
            self.w * wa + b.w * wb,
            self.x * wa + b.x * wb,
            self.y * wa + b.y * wb,
            self.z * wa + b.z * wb,
        )
    }

    /// Yaw (rotation of the body x axis about world z) of this orientation.
    pub fn yaw(&self) -> f64 {
        let fwd = self.rotate(&Vec3::new(1.0, 0.0, 0.0));
        fwd.y().atan2(fwd.x())
    }

    pub fn norm(&self) -> f64 {
        (self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

/// Geodesic angle between two rotations; the distance under which `q` and
/// `-q` are identified.
///
/// Errors when either input deviates from unit norm beyond 1e-6.
pub fn quat_diff_angle(a: &UnitQuaternion, b: &UnitQuaternion) -> Result<f64> {
    for (name, q) in [("a", a), ("b", b)] {
        let n = q.norm();
        if !n.is_finite() || (n - 1.0).abs() > UNIT_NORM_TOL {
            return Err(Error::Validation(format!(
                "quat_diff_angle: input {name} has norm {n}, expected unit"
            )));
        }
    }
    Ok(a.geodesic_angle(b))
}
