//! Scalar abstraction for the linear-algebra layer.
//!
//! Everything in [`crate::linalg`] is generic over a field-like scalar so the
//! elimination routines can be exercised with floats in isolation, while the
//! domain modules pin the scalar to [`crate::Q`] (exact rationals) — the only
//! choice under which ranks and kernels are trustworthy.

use std::fmt;

/// Field-like scalar: ring operations, exact equality, signed negation.
///
/// This is a trait alias: any type with the listed bounds implements it
/// automatically. `BigRational` and the primitive floats qualify; the domain
/// modules only ever instantiate it at `BigRational`.
pub trait Scalar: Clone + PartialEq + fmt::Debug + num_traits::Num + num_traits::Signed {}

impl<T> Scalar for T where T: Clone + PartialEq + fmt::Debug + num_traits::Num + num_traits::Signed {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn takes_scalar<S: Scalar>(x: S) -> S {
        x.clone() + x
    }

    #[test]
    fn rationals_and_floats_are_scalars() {
        assert_eq!(takes_scalar(Q::from_integer(2.into())), Q::from_integer(4.into()));
        assert_eq!(takes_scalar(1.5f64), 3.0f64);
    }
}
