//! Rigid transforms (rotation + translation).

use super::quat::UnitQuaternion;
use super::vec3::Vec3;
use serde::{Deserialize, Serialize};

/// A rigid transform applying rotation first, then translation.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Transform {
    pub rotation: UnitQuaternion,
    pub translation: Vec3,
}

impl Transform {
    pub const IDENTITY: Transform = Transform {
        rotation: UnitQuaternion::IDENTITY,
        translation: Vec3::ZERO,
    };

    pub fn new(rotation: UnitQuaternion, translation: Vec3) -> Self {
        Transform {
            rotation,
            translation,
        }
    }

    pub fn from_translation(t: Vec3) -> Self {
        Transform {
            rotation: UnitQuaternion::IDENTITY,
            translation: t,
        }
    }

    pub fn apply(&self, p: &Vec3) -> Vec3 {
        self.rotation.rotate(p) + self.translation
    }

    pub fn inverse(&self) -> Transform {
        let inv_rot = self.rotation.inverse();
        Transform {
            rotation: inv_rot,
            translation: -inv_rot.rotate(&self.translation),
        }
    }

    /// Homogeneous 4x4 matrix, row-major.
    pub fn to_homogeneous(&self) -> [[f64; 4]; 4] {
        let r = self.rotation.to_rotmat().0;
        [
            [r[0][0], r[0][1], r[0][2], self.translation.x()],
            [r[1][0], r[1][1], r[1][2], self.translation.y()],
            [r[2][0], r[2][1], r[2][2], self.translation.z()],
            [0.0, 0.0, 0.0, 1.0],
        ]
    }
}

/// Composition equivalent to multiplying homogeneous matrices: the result
/// applies `b` first, then `a`.
pub fn transform_compose(a: &Transform, b: &Transform) -> Transform {
    Transform {
        rotation: a.rotation.mul(&b.rotation),
        translation: a.rotation.rotate(&b.translation) + a.translation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn mat4_mul(a: &[[f64; 4]; 4], b: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
        let mut out = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        out
    }

    #[test]
    fn identity_composes_trivially() {
        let t = Transform::new(
            UnitQuaternion::from_yaw(0.7),
            Vec3::new(1.0, -2.0, 0.25),
        );
        assert_eq!(transform_compose(&Transform::IDENTITY, &t), t);
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..100 {
            let t = Transform::new(
                UnitQuaternion::from_wxyz(rng.gen(), rng.gen(), rng.gen(), rng.gen()),
                Vec3::new(rng.gen(), rng.gen(), rng.gen()),
            );
            let id = transform_compose(&t, &t.inverse());
            assert!(id.translation.norm() < 1e-9);
            assert!(id.rotation.geodesic_angle(&UnitQuaternion::IDENTITY) < 1e-9);
        }
    }

    #[test]
    fn pure_translations_add() {
        let a = Transform::from_translation(Vec3::new(1.0, 0.0, 0.0));
        let b = Transform::from_translation(Vec3::new(0.0, 2.0, 0.0));
        let c = transform_compose(&a, &b);
        assert_eq!(c.translation, Vec3::new(1.0, 2.0, 0.0));
        assert_eq!(c.rotation, UnitQuaternion::IDENTITY);
    }

    #[test]
    fn compose_matches_homogeneous_matrix_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..100 {
            let a = Transform::new(
                UnitQuaternion::from_wxyz(rng.gen(), rng.gen(), rng.gen(), rng.gen()),
                Vec3::new(rng.gen(), rng.gen(), rng.gen()),
            );
            let b = Transform::new(
                UnitQuaternion::from_wxyz(rng.gen(), rng.gen(), rng.gen(), rng.gen()),
                Vec3::new(rng.gen(), rng.gen(), rng.gen()),
            );
            let composed = transform_compose(&a, &b).to_homogeneous();
            let product = mat4_mul(&a.to_homogeneous(), &b.to_homogeneous());
            for i in 0..4 {
                for j in 0..4 {
                    assert!((composed[i][j] - product[i][j]).abs() < 1e-9);
                }
            }
        }
    }
}
