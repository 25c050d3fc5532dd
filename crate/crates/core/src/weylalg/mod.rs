//! The Weyl algebra `ℚ[x_1, …, x_n, D_1, …, D_n]` in normal order, weighted
//! V-orders and b-functions at the origin for systems with homogeneous symbols.

mod identities;
mod membership;
mod op;

pub use identities::{euler_power_identity, falling_euler, multinomial_slice_sum};
pub use membership::{
    bfunction_at_zero, bfunction_certificate, ideal_coefficients, membership_threshold, BCertificate,
};
pub use op::{v_order, WeightVector, WeylOp};
