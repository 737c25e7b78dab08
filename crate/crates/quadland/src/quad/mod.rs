//! Quadrotor model: state types, parameters, dynamics, and the
//! Pontryagin quantities (Hamiltonian, optimal control, costate equations).

pub mod model;
pub mod params;
pub mod state;

pub use model::{
    costate_rhs, dynamics_rhs, hamiltonian, hamiltonian_control_gradient, kinematic_matrix,
    optimal_control, rotation_matrix, rotor_thrusts, running_cost, skew, ModelError,
    COS_THETA_FLOOR,
};
pub use params::{ParamError, QuadParams};
pub use state::{Control, Costate, RotorThrusts, State, STATE_DIM};
