//! Rational functions as reduced fractions of `MultiPoly`.
//!
//! Equality is decided by cross-multiplication, so it never depends on the
//! reduction.  Reduction itself is a full gcd: monomial content first, then
//! an outright exact division when the denominator divides the numerator,
//! then the polynomial gcd, and finally a monic denominator so the
//! representative is canonical for display and serialization.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::poly::MultiPoly;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct RatFunc<T> {
    num: MultiPoly<T>,
    den: MultiPoly<T>,
}

impl<T: Scalar> RatFunc<T> {
    pub fn new(num: MultiPoly<T>, den: MultiPoly<T>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut r = RatFunc { num, den };
        r.reduce();
        r
    }

    pub fn from_poly(p: MultiPoly<T>) -> Self {
        RatFunc { num: p, den: MultiPoly::one() }
    }

    pub fn num(&self) -> &MultiPoly<T> {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly<T> {
        &self.den
    }

    pub fn inverse(&self) -> Self {
        assert!(!self.num.is_zero(), "inverse of zero");
        Self::new(self.den.clone(), self.num.clone())
    }

    /// `Some(p)` when the fraction is (reducible to) a polynomial.
    pub fn as_poly(&self) -> Option<MultiPoly<T>> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        self.num.exact_div(&self.den)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = MultiPoly::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        // Monomial content common to numerator and denominator.
        if !self.den.is_constant() || !self.num.is_constant() {
            let cn = self.num.monomial_content();
            let cd = self.den.monomial_content();
            if cn.len() == cd.len() {
                let common: Vec<u32> = cn.iter().zip(&cd).map(|(a, b)| *a.min(b)).collect();
                if common.iter().any(|&x| x > 0) {
                    self.num = self.num.shift_down(&common);
                    self.den = self.den.shift_down(&common);
                }
            }
        }
        // Outright divisibility, then the general gcd.
        if let Some(q) = self.num.exact_div(&self.den) {
            self.num = q;
            self.den = MultiPoly::one();
        } else {
            let g = MultiPoly::gcd(&self.num, &self.den);
            if !g.is_constant() {
                self.num = self.num.exact_div(&g).expect("gcd divides numerator");
                self.den = self.den.exact_div(&g).expect("gcd divides denominator");
            }
        }
        // Monic denominator makes the representative canonical.
        let lead = self.den.leading().map(|(_, c)| c.clone()).unwrap();
        if !lead.is_one() {
            let inv = T::one() / lead;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }
}

impl<T: Scalar> PartialEq for RatFunc<T> {
    fn eq(&self, other: &Self) -> bool {
        self.num.clone() * other.den.clone() == other.num.clone() * self.den.clone()
    }
}

impl<T: Scalar> Zero for RatFunc<T> {
    fn zero() -> Self {
        RatFunc { num: MultiPoly::zero(), den: MultiPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<T: Scalar> One for RatFunc<T> {
    fn one() -> Self {
        RatFunc { num: MultiPoly::one(), den: MultiPoly::one() }
    }
}

impl<T: Scalar> Add for RatFunc<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        RatFunc::new(
            self.num.clone() * rhs.den.clone() + rhs.num.clone() * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl<T: Scalar> Sub for RatFunc<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Neg for RatFunc<T> {
    type Output = Self;
    fn neg(self) -> Self {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl<T: Scalar> Mul for RatFunc<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        RatFunc::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl<T: Scalar> Div for RatFunc<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.num.is_zero(), "division by zero rational function");
        RatFunc::new(self.num * rhs.den, self.den * rhs.num)
    }
}

impl<T: Scalar> From<MultiPoly<T>> for RatFunc<T> {
    fn from(p: MultiPoly<T>) -> Self {
        RatFunc::from_poly(p)
    }
}

impl<T: Scalar> fmt::Display for RatFunc<T> {
    /// `1`, `1/x`, `(x + hbar)/(x^2 - x*hbar)`: parenthesize multi-term parts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &MultiPoly<T>| {
            let s = p.to_string();
            if p.num_terms() > 1 || s.contains('*') || s.contains('-') {
                format!("({s})")
            } else {
                s
            }
        };
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

/// Parse helpers live with the CLI; core only renders.
#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarSet;
    use crate::Rat;

    fn xh() -> VarSet {
        VarSet::new(vec!["x", "hbar"])
    }

    fn rat(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    fn lin(k: i64) -> MultiPoly<Rat> {
        let v = xh();
        MultiPoly::var(&v, "x", rat(1)) + MultiPoly::var(&v, "hbar", rat(k))
    }

    #[test]
    fn difference_of_squares_cancels() {
        let num = lin(1) * lin(-1); // x^2 - hbar^2
        let f = RatFunc::new(num, lin(-1));
        assert_eq!(f, RatFunc::from_poly(lin(1)));
        assert!(f.as_poly().is_some());
    }

    #[test]
    fn cross_multiplication_equality() {
        // (x^2 - hbar^2)/(x - hbar) == (x + hbar)/1 even without reduction.
        let a = RatFunc { num: lin(1) * lin(-1), den: lin(-1) };
        let b = RatFunc::from_poly(lin(1));
        assert_eq!(a, b);
    }

    #[test]
    fn monomial_content_reduction() {
        let v = xh();
        let x = MultiPoly::var(&v, "x", rat(1));
        let f = RatFunc::new(x.clone() * x.clone(), x.clone() * lin(2));
        // x^2 / (x*(x+2hbar)) -> x/(x+2hbar)
        assert_eq!(f.num(), &x);
        assert_eq!(f.den(), &lin(2));
    }

    #[test]
    fn univariate_gcd_reduction() {
        let v = VarSet::new(vec!["x"]);
        let x = MultiPoly::var(&v, "x", rat(1));
        let one: MultiPoly<Rat> = MultiPoly::one();
        let xp1 = x.clone() + one.clone();
        let xm1 = x.clone() - one.clone();
        // (x+1)(x-1) / (x+1)(x+1) -> (x-1)/(x+1)
        let f = RatFunc::new(xp1.clone() * xm1.clone(), xp1.clone() * xp1.clone());
        assert_eq!(f.num(), &xm1);
        assert_eq!(f.den(), &xp1);
    }

    #[test]
    fn field_axioms_spotcheck() {
        let f = RatFunc::new(MultiPoly::one(), lin(0)); // 1/x
        let g = RatFunc::from_poly(lin(3));
        let sum = f.clone() + g.clone();
        assert_eq!(sum.clone() - g.clone(), f);
        assert_eq!(f.clone() * f.inverse(), RatFunc::one());
        let h = (f.clone() / g.clone()) * g;
        assert_eq!(h, f);
    }

    #[test]
    fn display() {
        let f = RatFunc::new(MultiPoly::one(), lin(0));
        assert_eq!(f.to_string(), "1/x");
        assert_eq!(RatFunc::<Rat>::one().to_string(), "1");
        let g = RatFunc::new(MultiPoly::one(), lin(0) * lin(-1));
        assert_eq!(g.to_string(), "1/(x^2 - x*hbar)");
    }
}
