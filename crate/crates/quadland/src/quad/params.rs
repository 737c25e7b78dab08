use nalgebra::{Matrix4, Vector4};
use thiserror::Error;

use super::state::Control;

/// Physical and cost parameters of the quadrotor model.
///
/// The defaults are the benchmark configuration: a 2 kg airframe with
/// `J = diag(1.2416, 1.2416, 2.4832)` kg·m² and unit control weights.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadParams {
    /// Mass (kg).
    pub mass: f64,
    /// Gravity magnitude (m/s²).
    pub gravity: f64,
    /// Diagonal inertia (Jx, Jy, Jz) (kg·m²).
    pub inertia: [f64; 3],
    /// Control-deviation weight matrix Q_u (4×4, symmetric positive definite).
    pub q_u: Matrix4<f64>,
    /// Rotor arm length l (m). Only enters the rotor mixing matrix.
    pub arm_length: f64,
    /// Rotor moment coefficient c. Only enters the rotor mixing matrix.
    pub moment_coeff: f64,
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ParamError {
    #[error("mass must be positive, got {0}")]
    NonPositiveMass(f64),
    #[error("gravity must be positive, got {0}")]
    NonPositiveGravity(f64),
    #[error("inertia components must be positive, got {0:?}")]
    NonPositiveInertia([f64; 3]),
    #[error("Q_u must be symmetric positive definite")]
    IndefiniteWeight,
    #[error("rotor geometry is singular: need l != 0 and c != 0 (l = {l}, c = {c})")]
    SingularGeometry { l: f64, c: f64 },
}

impl Default for QuadParams {
    fn default() -> Self {
        Self {
            mass: 2.0,
            gravity: 9.81,
            inertia: [1.2416, 1.2416, 2.4832],
            q_u: Matrix4::identity(),
            arm_length: 0.2,
            moment_coeff: 0.1,
        }
    }
}

impl QuadParams {
    /// Checks the invariants that every other operation assumes.
    pub fn validate(&self) -> Result<(), ParamError> {
        if !(self.mass > 0.0) {
            return Err(ParamError::NonPositiveMass(self.mass));
        }
        if !(self.gravity > 0.0) {
            return Err(ParamError::NonPositiveGravity(self.gravity));
        }
        if self.inertia.iter().any(|j| !(*j > 0.0)) {
            return Err(ParamError::NonPositiveInertia(self.inertia));
        }
        if (self.q_u - self.q_u.transpose()).amax() > 1e-12 {
            return Err(ParamError::IndefiniteWeight);
        }
        if (self.q_u + self.q_u.transpose()).cholesky().is_none() {
            return Err(ParamError::IndefiniteWeight);
        }
        if self.arm_length == 0.0 || self.moment_coeff == 0.0 {
            return Err(ParamError::SingularGeometry {
                l: self.arm_length,
                c: self.moment_coeff,
            });
        }
        Ok(())
    }

    /// Reference control balancing gravity: `u_d = (m g, 0, 0, 0)`.
    pub fn reference_control(&self) -> Control {
        Control {
            thrust: self.mass * self.gravity,
            torque: nalgebra::Vector3::zeros(),
        }
    }

    /// Rotor mixing matrix E mapping individual rotor thrusts to `(T, τ)`.
    pub fn mixing_matrix(&self) -> Matrix4<f64> {
        let l = self.arm_length;
        let c = self.moment_coeff;
        Matrix4::new(
            1.0, 1.0, 1.0, 1.0, //
            0.0, l, 0.0, -l, //
            -l, 0.0, l, 0.0, //
            c, -c, c, -c,
        )
    }

    pub(crate) fn u_d_vector(&self) -> Vector4<f64> {
        Vector4::new(self.mass * self.gravity, 0.0, 0.0, 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        QuadParams::default().validate().unwrap();
    }

    #[test]
    fn reference_control_balances_gravity() {
        let p = QuadParams::default();
        let u_d = p.reference_control();
        assert_eq!(u_d.thrust, 19.62);
        assert_eq!(u_d.torque.norm(), 0.0);
    }

    #[test]
    fn rejects_bad_parameters() {
        let mut p = QuadParams::default();
        p.mass = 0.0;
        assert_eq!(p.validate(), Err(ParamError::NonPositiveMass(0.0)));

        let mut p = QuadParams::default();
        p.arm_length = 0.0;
        assert!(matches!(
            p.validate(),
            Err(ParamError::SingularGeometry { .. })
        ));

        let mut p = QuadParams::default();
        p.q_u = Matrix4::from_diagonal(&Vector4::new(1.0, -1.0, 1.0, 1.0));
        assert_eq!(p.validate(), Err(ParamError::IndefiniteWeight));
    }
}
