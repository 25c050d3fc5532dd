//! Matrix realizations of the classical simple Lie algebras and the polynomial
//! objects attached to them: the characteristic polynomial of `ad(X)` and the
//! discriminant, the invariant vector fields `τ(A)`, the product of positive
//! roots on the Cartan subalgebra and the Chevalley restriction.

mod invariants;
mod realize;

pub use invariants::{
    ad_charpoly, apply_field, cartan_weyl_group, chevalley_restrict, discriminant, hc_euler_shift,
    pi_square_check, tau_field, InvariantPolynomial, PiSquare,
};
pub use realize::{realize, BasisElement, LieAlgebraRealization};
