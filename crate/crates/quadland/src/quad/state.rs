use nalgebra::{Vector3, Vector4};

/// Number of components in the quadrotor state vector.
pub const STATE_DIM: usize = 12;

/// Twelve-dimensional rigid-body state.
///
/// Position and attitude live in the Earth frame, linear velocity and
/// angular rate in the body frame. Component order in flat form is
/// `(x, y, z, vx, vy, vz, phi, theta, psi, wp, wq, wr)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct State {
    /// Position of the center of mass in the Earth frame (m).
    pub position: Vector3<f64>,
    /// Linear velocity in the body frame (m/s).
    pub velocity: Vector3<f64>,
    /// Euler angles (roll φ, pitch θ, yaw ψ) (rad).
    pub attitude: Vector3<f64>,
    /// Body angular rates (p, q, r) (rad/s).
    pub rates: Vector3<f64>,
}

/// Costate (adjoint) paired with [`State`], same component layout.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Costate {
    pub lam_p: Vector3<f64>,
    pub lam_v: Vector3<f64>,
    pub lam_eta: Vector3<f64>,
    pub lam_w: Vector3<f64>,
}

/// Total thrust and body torques, `u = (T, τx, τy, τz)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Control {
    /// Total thrust along the body z-axis (N).
    pub thrust: f64,
    /// Body torques (N·m).
    pub torque: Vector3<f64>,
}

/// Individual rotor normal forces (N), related to the control by `u = E F`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotorThrusts(pub Vector4<f64>);

impl State {
    pub fn from_slice(v: &[f64]) -> Self {
        assert_eq!(v.len(), STATE_DIM);
        Self {
            position: Vector3::new(v[0], v[1], v[2]),
            velocity: Vector3::new(v[3], v[4], v[5]),
            attitude: Vector3::new(v[6], v[7], v[8]),
            rates: Vector3::new(v[9], v[10], v[11]),
        }
    }

    pub fn to_array(&self) -> [f64; STATE_DIM] {
        let mut out = [0.0; STATE_DIM];
        self.write_to(&mut out);
        out
    }

    pub fn write_to(&self, out: &mut [f64]) {
        out[0..3].copy_from_slice(self.position.as_slice());
        out[3..6].copy_from_slice(self.velocity.as_slice());
        out[6..9].copy_from_slice(self.attitude.as_slice());
        out[9..12].copy_from_slice(self.rates.as_slice());
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }

    /// Straight-line interpolation in raw coordinates: `(1-s)·a + s·b`.
    pub fn lerp(a: &State, b: &State, s: f64) -> State {
        State {
            position: a.position.lerp(&b.position, s),
            velocity: a.velocity.lerp(&b.velocity, s),
            attitude: a.attitude.lerp(&b.attitude, s),
            rates: a.rates.lerp(&b.rates, s),
        }
    }
}

impl Costate {
    pub fn from_slice(v: &[f64]) -> Self {
        assert_eq!(v.len(), STATE_DIM);
        Self {
            lam_p: Vector3::new(v[0], v[1], v[2]),
            lam_v: Vector3::new(v[3], v[4], v[5]),
            lam_eta: Vector3::new(v[6], v[7], v[8]),
            lam_w: Vector3::new(v[9], v[10], v[11]),
        }
    }

    pub fn write_to(&self, out: &mut [f64]) {
        out[0..3].copy_from_slice(self.lam_p.as_slice());
        out[3..6].copy_from_slice(self.lam_v.as_slice());
        out[6..9].copy_from_slice(self.lam_eta.as_slice());
        out[9..12].copy_from_slice(self.lam_w.as_slice());
    }

    pub fn to_array(&self) -> [f64; STATE_DIM] {
        let mut out = [0.0; STATE_DIM];
        self.write_to(&mut out);
        out
    }
}

impl Control {
    pub fn to_vector(&self) -> Vector4<f64> {
        Vector4::new(self.thrust, self.torque.x, self.torque.y, self.torque.z)
    }

    pub fn from_vector(u: Vector4<f64>) -> Self {
        Self {
            thrust: u.x,
            torque: Vector3::new(u.y, u.z, u.w),
        }
    }
}
