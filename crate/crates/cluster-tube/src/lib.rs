//! Exact model of the cluster tube of rank `n` and of the associated
//! coefficient-free cluster algebra of type `C_{n-1}`.
//!
//! The library has two halves that the [`verify`] module plays against each
//! other:
//!
//! * the categorical side ([`tube`], [`character`]): indecomposable objects
//!   `(a, b)` of the cluster tube, Hom/Ext dimensions, maximal rigid objects,
//!   exchange triangles, indices and cluster characters;
//! * the combinatorial side ([`cluster`]): skew-symmetrizable matrix and seed
//!   mutation, and exhaustive exchange-graph enumeration for finite type.
//!
//! All values are exact: [`laurent`] provides sparse multivariate Laurent
//! polynomials over `BigInt`, and every identity is checked as a polynomial
//! identity, never numerically.
//!
//! # Example
//!
//! ```
//! use cluster_tube::character::{x_closed_form, x_of_rigid_sum};
//! use cluster_tube::tube::{exchange_triangles, MaximalRigid, TubeObject};
//!
//! // mutate the reference object of the rank-3 tube at its apex summand
//! let t = MaximalRigid::initial(3);
//! let apex = TubeObject::new(3, 1, 2);
//! let tri = exchange_triangles(&t, &apex).unwrap();
//! assert_eq!(tri.partner, TubeObject::new(3, 3, 2));
//! assert_eq!(tri.ext_dim, 2);
//!
//! // the multiplication identity X_M * X_M* = X_E + X_E'
//! let lhs = x_closed_form(&apex)
//!     .unwrap()
//!     .mul(&x_closed_form(&tri.partner).unwrap());
//! let rhs = x_of_rigid_sum(&tri.e)
//!     .unwrap()
//!     .add(&x_of_rigid_sum(&tri.e_prime).unwrap());
//! assert_eq!(lhs, rhs);
//! assert_eq!(lhs.canonical_text(), "x2^2 + 1");
//! ```

pub mod character;
pub mod cluster;
pub mod laurent;
pub mod tube;
pub mod verify;

pub use character::{x_closed_form, x_from_definition, x_of_rigid_sum, IndexVector};
pub use cluster::{ExchangeGraph, ExchangeMatrix, Seed};
pub use laurent::{LaurentError, LaurentPoly, Monomial};
pub use tube::{MaximalRigid, RigidSum, TubeObject};

#[cfg(test)]
mod tests {
    use super::*;

    // all values are immutable and freely shareable across threads
    #[test]
    fn test_values_are_send_and_sync() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<LaurentPoly>();
        assert_send_sync::<TubeObject>();
        assert_send_sync::<RigidSum>();
        assert_send_sync::<MaximalRigid>();
        assert_send_sync::<ExchangeMatrix>();
        assert_send_sync::<Seed>();
        assert_send_sync::<ExchangeGraph>();
        assert_send_sync::<IndexVector>();
    }
}
