//! Coefficient traits for the exact-arithmetic kernel.
//!
//! The polynomial, rational-function, and matrix layers are generic over the
//! scalar they carry.  `Scalar` is the minimum a coefficient field must
//! provide; it is satisfied by `f32`/`f64` and by arbitrary-precision
//! rationals alike.  Everything representation-theoretic in this crate runs
//! over the rational instantiation (see the aliases at the crate root), where
//! division is exact and equality is decidable.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::Num;

/// Field-like coefficients: ring ops with division, negation, comparison.
///
/// `Num` brings `Zero`, `One`, and the four arithmetic operators.  Division
/// must be exact for the elimination routines to return exact answers; with
/// floating scalars they degrade to ordinary numerics.
pub trait Scalar: Num + Neg<Output = Self> + Clone + PartialEq + Debug + Display {}

impl<T> Scalar for T where T: Num + Neg<Output = T> + Clone + PartialEq + Debug + Display {}

/// Elements a matrix or module coefficient can range over: polynomials,
/// rational functions, or bare scalars.  Addition and multiplication follow
/// from `Zero`/`One` supertraits.
pub trait RingElem:
    Clone
    + PartialEq
    + Debug
    + num_traits::Zero
    + num_traits::One
    + Neg<Output = Self>
    + std::ops::Sub<Output = Self>
{
}

impl<T> RingElem for T where
    T: Clone
        + PartialEq
        + Debug
        + num_traits::Zero
        + num_traits::One
        + Neg<Output = T>
        + std::ops::Sub<Output = T>
{
}
