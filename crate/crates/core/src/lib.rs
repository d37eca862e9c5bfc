//! Exact models of Kostant-Whittaker reduction for sl2.
//!
//! Everything here is computed over exact coefficient rings (arbitrary
//! precision rationals and polynomial rings over them); there is no floating
//! point anywhere in the kernel.  The crate is organized as:
//!
//! - [`poly`], [`ratfunc`], [`matrix`]: the arithmetic kernel, generic over
//!   the coefficient type through [`scalar::Scalar`];
//! - [`sl2`]: the graded enveloping algebra of sl2 and its standard modules;
//! - [`kostant`]: the reduction functor on finite dimensional modules, its
//!   Casimir matrices, splittings, and annihilators;
//! - [`graphmod`]: graph models of the reduced bimodules and their
//!   convolution;
//! - [`coh`]: the equivariant-lattice side of the comparison;
//! - [`toda`]: differential-operator realization of the reduction of the
//!   regular bimodule;
//! - [`rootdata`], [`hilbert`]: root system and graded-dimension utilities.

pub mod coh;
pub mod error;
pub mod graphmod;
pub mod hilbert;
pub mod kostant;
pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod render;
pub mod rootdata;
pub mod scalar;
pub mod selftest;
pub mod sl2;
pub mod toda;

pub use error::Error;

/// Arbitrary-precision rational, the base field everywhere.
pub type Rat = num_rational::BigRational;

/// Polynomials in the deformation and torus variables over [`Rat`].
pub type Poly = poly::MultiPoly<Rat>;

/// Fractions of [`Poly`], the coefficients of reduced-module bases.
pub type RatFn = ratfunc::RatFunc<Rat>;

/// Shorthand for an integer as a [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

static XH_VARS: std::sync::OnceLock<poly::VarSet> = std::sync::OnceLock::new();

/// The shared variable list `[x, hbar]` used by every deformation-side
/// polynomial.  Returns clones of one interned list so equality checks hit
/// the pointer fast path.
pub fn xh_vars() -> poly::VarSet {
    XH_VARS
        .get_or_init(|| poly::VarSet::new(vec!["x", "hbar"]))
        .clone()
}

pub fn poly_x() -> Poly {
    Poly::var(&xh_vars(), "x", rat_int(1))
}

pub fn poly_hbar() -> Poly {
    Poly::var(&xh_vars(), "hbar", rat_int(1))
}

pub fn poly_int(n: i64) -> Poly {
    Poly::constant(&xh_vars(), rat_int(n))
}

pub fn poly_rat(r: Rat) -> Poly {
    Poly::constant(&xh_vars(), r)
}

/// The linear factor `x + k*hbar`.
pub fn x_plus_k_hbar(k: i64) -> Poly {
    poly_x() + poly_hbar().scale(&rat_int(k))
}
