//! Exact computations with one-sided topological Markov shifts `(X_A, σ_A)`,
//! their topological full groups and Cuntz-Krieger algebras.

mod bounds;
pub mod ck;
pub mod full_group;
pub mod json;
pub mod orbit_equiv;
pub mod random;
pub mod shift;
pub mod suite;

pub use bounds::Bounds;
