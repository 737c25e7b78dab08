//! Rigid-body quadrotor dynamics and the first-order optimality quantities
//! built on them: Hamiltonian, closed-form minimizing control, and the
//! analytic costate right-hand sides.
//!
//! All functions are pure. Angles are radians, units are SI throughout.

use nalgebra::{Matrix3, Vector3, Vector4};
use thiserror::Error;

use super::params::QuadParams;
use super::state::{Control, Costate, RotorThrusts, State};

/// Attitude-kinematics guard: K(η) involves tan θ and sec θ.
pub const COS_THETA_FLOOR: f64 = 1e-8;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ModelError {
    #[error("attitude singular: |cos(theta)| = {cos_theta:.3e} below floor {COS_THETA_FLOOR:e}")]
    SingularAttitude { cos_theta: f64 },
    #[error("rotor mixing matrix is singular (l = {l}, c = {c})")]
    SingularGeometry { l: f64, c: f64 },
}

/// Direction cosine matrix R(η) mapping Earth-frame vectors to the body frame.
pub fn rotation_matrix(eta: &Vector3<f64>) -> Matrix3<f64> {
    let (sphi, cphi) = eta.x.sin_cos();
    let (sth, cth) = eta.y.sin_cos();
    let (spsi, cpsi) = eta.z.sin_cos();
    Matrix3::new(
        cth * cpsi,
        cth * spsi,
        -sth,
        sth * cpsi * sphi - spsi * cphi,
        sth * spsi * sphi + cpsi * cphi,
        cth * sphi,
        sth * cpsi * cphi + spsi * sphi,
        sth * spsi * cphi - cpsi * sphi,
        cth * cphi,
    )
}

/// Attitude kinematic matrix K(η) with η̇ = K(η)·w.
///
/// Fails when |cos θ| drops below [`COS_THETA_FLOOR`].
pub fn kinematic_matrix(eta: &Vector3<f64>) -> Result<Matrix3<f64>, ModelError> {
    let (sphi, cphi) = eta.x.sin_cos();
    let (sth, cth) = eta.y.sin_cos();
    if cth.abs() < COS_THETA_FLOOR {
        return Err(ModelError::SingularAttitude { cos_theta: cth });
    }
    let tth = sth / cth;
    let sec = 1.0 / cth;
    Ok(Matrix3::new(
        1.0,
        sphi * tth,
        cphi * tth,
        0.0,
        cphi,
        -sphi,
        0.0,
        sphi * sec,
        cphi * sec,
    ))
}

/// Skew matrix S(w) with S(w)·v = −w × v.
pub fn skew(w: &Vector3<f64>) -> Matrix3<f64> {
    let (p, q, r) = (w.x, w.y, w.z);
    Matrix3::new(0.0, r, -q, -r, 0.0, p, q, -p, 0.0)
}

/// Entrywise partial derivatives of R(η) w.r.t. (φ, θ, ψ).
fn rotation_partials(eta: &Vector3<f64>) -> [Matrix3<f64>; 3] {
    let (sphi, cphi) = eta.x.sin_cos();
    let (sth, cth) = eta.y.sin_cos();
    let (spsi, cpsi) = eta.z.sin_cos();
    let d_phi = Matrix3::new(
        0.0,
        0.0,
        0.0,
        sth * cpsi * cphi + spsi * sphi,
        sth * spsi * cphi - cpsi * sphi,
        cth * cphi,
        -sth * cpsi * sphi + spsi * cphi,
        -sth * spsi * sphi - cpsi * cphi,
        -cth * sphi,
    );
    let d_theta = Matrix3::new(
        -sth * cpsi,
        -sth * spsi,
        -cth,
        cth * cpsi * sphi,
        cth * spsi * sphi,
        -sth * sphi,
        cth * cpsi * cphi,
        cth * spsi * cphi,
        -sth * cphi,
    );
    let d_psi = Matrix3::new(
        -cth * spsi,
        cth * cpsi,
        0.0,
        -sth * spsi * sphi - cpsi * cphi,
        sth * cpsi * sphi - spsi * cphi,
        0.0,
        -sth * spsi * cphi + cpsi * sphi,
        sth * cpsi * cphi + spsi * sphi,
        0.0,
    );
    [d_phi, d_theta, d_psi]
}

/// Entrywise partial derivatives of K(η) w.r.t. (φ, θ); ∂K/∂ψ = 0.
fn kinematic_partials(eta: &Vector3<f64>) -> Result<[Matrix3<f64>; 2], ModelError> {
    let (sphi, cphi) = eta.x.sin_cos();
    let (sth, cth) = eta.y.sin_cos();
    if cth.abs() < COS_THETA_FLOOR {
        return Err(ModelError::SingularAttitude { cos_theta: cth });
    }
    let tth = sth / cth;
    let sec = 1.0 / cth;
    let sec2 = sec * sec;
    let d_phi = Matrix3::new(
        0.0,
        cphi * tth,
        -sphi * tth,
        0.0,
        -sphi,
        -cphi,
        0.0,
        cphi * sec,
        -sphi * sec,
    );
    let d_theta = Matrix3::new(
        0.0,
        sphi * sec2,
        cphi * sec2,
        0.0,
        0.0,
        0.0,
        0.0,
        sphi * sth * sec2,
        cphi * sth * sec2,
    );
    Ok([d_phi, d_theta])
}

/// State derivative (ṗ, v̇_b, η̇, ẇ_b) of the full rigid-body model.
pub fn dynamics_rhs(x: &State, u: &Control, params: &QuadParams) -> Result<State, ModelError> {
    let rot = rotation_matrix(&x.attitude);
    let kin = kinematic_matrix(&x.attitude)?;
    let s = skew(&x.rates);
    let g_vec = Vector3::new(0.0, 0.0, params.gravity);
    let [jx, jy, jz] = params.inertia;

    let p_dot = rot.transpose() * x.velocity;
    let v_dot = s * x.velocity - rot * g_vec + Vector3::new(0.0, 0.0, u.thrust / params.mass);
    let eta_dot = kin * x.rates;
    let jw = Vector3::new(jx * x.rates.x, jy * x.rates.y, jz * x.rates.z);
    let sjw = s * jw;
    let w_dot = Vector3::new(
        (sjw.x + u.torque.x) / jx,
        (sjw.y + u.torque.y) / jy,
        (sjw.z + u.torque.z) / jz,
    );

    Ok(State {
        position: p_dot,
        velocity: v_dot,
        attitude: eta_dot,
        rates: w_dot,
    })
}

/// Unconstrained minimizer of the Hamiltonian over the control:
/// `u* = u_d − (Qᵀ+Q)⁻¹ (Aᵀλ_v/m + Bᵀ J⁻¹ λ_w)`.
pub fn optimal_control(lam_v: &Vector3<f64>, lam_w: &Vector3<f64>, params: &QuadParams) -> Control {
    let [jx, jy, jz] = params.inertia;
    let rhs = Vector4::new(
        lam_v.z / params.mass,
        lam_w.x / jx,
        lam_w.y / jy,
        lam_w.z / jz,
    );
    let q2 = params.q_u + params.q_u.transpose();
    let correction = q2
        .cholesky()
        .map(|ch| ch.solve(&rhs))
        .unwrap_or_else(|| q2.lu().solve(&rhs).expect("Q_u + Q_uᵀ is singular"));
    Control::from_vector(params.u_d_vector() - correction)
}

/// Running cost `L(u) = 1 + (u−u_d)ᵀ Q_u (u−u_d)`.
pub fn running_cost(u: &Control, params: &QuadParams) -> f64 {
    let du = u.to_vector() - params.u_d_vector();
    1.0 + (du.transpose() * params.q_u * du)[(0, 0)]
}

/// Hamiltonian `H = L(u) + λ·f(x, u)`.
pub fn hamiltonian(
    x: &State,
    lam: &Costate,
    u: &Control,
    params: &QuadParams,
) -> Result<f64, ModelError> {
    let f = dynamics_rhs(x, u, params)?;
    Ok(running_cost(u, params)
        + lam.lam_p.dot(&f.position)
        + lam.lam_v.dot(&f.velocity)
        + lam.lam_eta.dot(&f.attitude)
        + lam.lam_w.dot(&f.rates))
}

/// Gradient of the Hamiltonian w.r.t. the control, `∂H/∂u`.
///
/// Zero at [`optimal_control`]; exposed for the optimality diagnostics.
pub fn hamiltonian_control_gradient(
    lam_v: &Vector3<f64>,
    lam_w: &Vector3<f64>,
    u: &Control,
    params: &QuadParams,
) -> Vector4<f64> {
    let [jx, jy, jz] = params.inertia;
    let du = u.to_vector() - params.u_d_vector();
    (params.q_u + params.q_u.transpose()) * du
        + Vector4::new(
            lam_v.z / params.mass,
            lam_w.x / jx,
            lam_w.y / jy,
            lam_w.z / jz,
        )
}

/// Costate derivative `λ̇ = −∂H/∂x` in closed form.
///
/// The η and w blocks are assembled from the entrywise partials of R and K;
/// the finite-difference oracle in the test suite certifies every component.
pub fn costate_rhs(
    x: &State,
    lam: &Costate,
    _u: &Control,
    params: &QuadParams,
) -> Result<Costate, ModelError> {
    let rot = rotation_matrix(&x.attitude);
    let kin = kinematic_matrix(&x.attitude)?;
    let s = skew(&x.rates);
    let g_vec = Vector3::new(0.0, 0.0, params.gravity);
    let [jx, jy, jz] = params.inertia;

    // λ̇_p = 0, λ̇_v = −R λ_p − Sᵀ λ_v
    let lam_p_dot = Vector3::zeros();
    let lam_v_dot = -(rot * lam.lam_p) - s.transpose() * lam.lam_v;

    // λ̇_η = −∂(λ_p·Rᵀv)/∂η + ∂(λ_v·R g)/∂η − ∂(λ_η·K w)/∂η
    let dr = rotation_partials(&x.attitude);
    let dk = kinematic_partials(&x.attitude)?;
    let mut lam_eta_dot = Vector3::zeros();
    for i in 0..3 {
        let mut v = -lam.lam_p.dot(&(dr[i].transpose() * x.velocity));
        v += lam.lam_v.dot(&(dr[i] * g_vec));
        if i < 2 {
            v -= lam.lam_eta.dot(&(dk[i] * x.rates));
        }
        lam_eta_dot[i] = v;
    }

    // λ̇_w = −λ_v×v − Kᵀλ_η + (Jw)×μ + J(μ×w) with μ = J⁻¹λ_w
    let mu = Vector3::new(lam.lam_w.x / jx, lam.lam_w.y / jy, lam.lam_w.z / jz);
    let jw = Vector3::new(jx * x.rates.x, jy * x.rates.y, jz * x.rates.z);
    let mu_cross_w = mu.cross(&x.rates);
    let lam_w_dot = -lam.lam_v.cross(&x.velocity) - kin.transpose() * lam.lam_eta
        + jw.cross(&mu)
        + Vector3::new(jx * mu_cross_w.x, jy * mu_cross_w.y, jz * mu_cross_w.z);

    Ok(Costate {
        lam_p: lam_p_dot,
        lam_v: lam_v_dot,
        lam_eta: lam_eta_dot,
        lam_w: lam_w_dot,
    })
}

/// Recovers individual rotor forces from the control: `F = E⁻¹ u`.
pub fn rotor_thrusts(u: &Control, params: &QuadParams) -> Result<RotorThrusts, ModelError> {
    if params.arm_length == 0.0 || params.moment_coeff == 0.0 {
        return Err(ModelError::SingularGeometry {
            l: params.arm_length,
            c: params.moment_coeff,
        });
    }
    let e = params.mixing_matrix();
    let f = e
        .lu()
        .solve(&u.to_vector())
        .ok_or(ModelError::SingularGeometry {
            l: params.arm_length,
            c: params.moment_coeff,
        })?;
    Ok(RotorThrusts(f))
}
