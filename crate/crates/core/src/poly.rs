//! Sparse multivariate polynomials over a generic scalar.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so iteration order
//! (lexicographic, ascending) is the canonical term order used everywhere:
//! equality, serialization, leading-term selection.  The variable list is
//! fixed per polynomial; arithmetic between different variable lists is a
//! programming error, except that constants broadcast into any variable list.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Ordered variable names shared by a family of polynomials.
///
/// Cheap to clone; compared by contents.
#[derive(Clone, Debug)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Self {
        VarSet(Arc::new(names.into_iter().map(Into::into).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for VarSet {}

/// Sparse polynomial: exponent vector -> nonzero coefficient.
#[derive(Clone, Debug)]
pub struct MultiPoly<T> {
    vars: VarSet,
    terms: BTreeMap<Vec<u32>, T>,
}

/// Equality broadcasts constants across variable lists, matching the
/// arithmetic; polynomials over genuinely different lists are unequal.
impl<T: Scalar> PartialEq for MultiPoly<T> {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        if self.is_constant() && other.is_constant() {
            return self.constant_value() == other.constant_value();
        }
        false
    }
}

impl<T: Scalar> MultiPoly<T> {
    pub fn zero_over(vars: &VarSet) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &VarSet, c: T) -> Self {
        let mut p = Self::zero_over(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    /// The polynomial `c * name` (degree one in a single variable).
    pub fn var(vars: &VarSet, name: &str, c: T) -> Self {
        let idx = vars
            .index_of(name)
            .unwrap_or_else(|| panic!("unknown variable {name}"));
        let mut p = Self::zero_over(vars);
        if !c.is_zero() {
            let mut exp = vec![0u32; vars.len()];
            exp[idx] = 1;
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn from_terms(vars: &VarSet, terms: impl IntoIterator<Item = (Vec<u32>, T)>) -> Self {
        let mut p = Self::zero_over(vars);
        for (exp, c) in terms {
            p.add_term(exp, c);
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &T)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: T) {
        assert_eq!(exp.len(), self.vars.len(), "exponent arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Constant polynomials travel between variable lists; anything else must
    /// match exactly.
    fn coerce_to(&self, vars: &VarSet) -> MultiPoly<T> {
        if self.vars == *vars {
            return self.clone();
        }
        assert!(
            self.is_constant(),
            "variable-list mismatch: {:?} vs {:?}",
            self.vars.names(),
            vars.names()
        );
        MultiPoly::constant(vars, self.constant_value())
    }

    fn unified(a: &Self, b: &Self) -> (MultiPoly<T>, MultiPoly<T>) {
        if a.vars == b.vars {
            (a.clone(), b.clone())
        } else if a.is_constant() {
            (a.coerce_to(&b.vars), b.clone())
        } else {
            (a.clone(), b.coerce_to(&a.vars))
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// Value of a constant polynomial (zero if empty).
    pub fn constant_value(&self) -> T {
        debug_assert!(self.is_constant());
        self.terms.values().next().cloned().unwrap_or_else(T::zero)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero_over(&self.vars);
        }
        let mut out = Self::zero_over(&self.vars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn mul_monomial(&self, exp: &[u32], c: &T) -> Self {
        let mut out = Self::zero_over(&self.vars);
        if c.is_zero() {
            return out;
        }
        for (e, a) in &self.terms {
            let ne: Vec<u32> = e.iter().zip(exp).map(|(x, y)| x + y).collect();
            out.add_term(ne, a.clone() * c.clone());
        }
        out
    }

    /// Leading term under the lexicographic order (largest exponent vector).
    pub fn leading(&self) -> Option<(&Vec<u32>, &T)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        let idx = match self.vars.index_of(name) {
            Some(i) => i,
            None => return 0,
        };
        self.terms.keys().map(|e| e[idx]).max().unwrap_or(0)
    }

    /// Substitute a scalar for one variable; the variable stays in the list.
    pub fn subst_scalar(&self, name: &str, value: &T) -> Self {
        let idx = self
            .vars
            .index_of(name)
            .unwrap_or_else(|| panic!("unknown variable {name}"));
        let mut out = Self::zero_over(&self.vars);
        for (e, c) in &self.terms {
            let mut factor = T::one();
            for _ in 0..e[idx] {
                factor = factor * value.clone();
            }
            let mut ne = e.clone();
            ne[idx] = 0;
            out.add_term(ne, c.clone() * factor);
        }
        out
    }

    /// Exact division: `Some(q)` with `self = q * d`, or `None` when the
    /// division does not come out even.  Lex leading-term algorithm; the
    /// remainder at failure is discarded.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (mut r, d) = Self::unified(self, d);
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut q = Self::zero_over(&r.vars);
        let (dexp, dcoef) = {
            let (e, c) = d.leading().unwrap();
            (e.clone(), c.clone())
        };
        while let Some((rexp, rcoef)) = r.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if rexp.iter().zip(&dexp).any(|(a, b)| a < b) {
                return None;
            }
            let qexp: Vec<u32> = rexp.iter().zip(&dexp).map(|(a, b)| a - b).collect();
            let qcoef = rcoef / dcoef.clone();
            q.add_term(qexp.clone(), qcoef.clone());
            r = r - d.mul_monomial(&qexp, &qcoef);
        }
        Some(q)
    }

    /// Componentwise minimum exponent over all terms (monomial content).
    pub fn monomial_content(&self) -> Vec<u32> {
        let mut content = vec![u32::MAX; self.vars.len()];
        for e in self.terms.keys() {
            for (c, &x) in content.iter_mut().zip(e) {
                *c = (*c).min(x);
            }
        }
        if self.terms.is_empty() {
            content.fill(0);
        }
        content
    }

    pub fn shift_down(&self, by: &[u32]) -> Self {
        let mut out = Self::zero_over(&self.vars);
        for (e, c) in &self.terms {
            let ne: Vec<u32> = e
                .iter()
                .zip(by)
                .map(|(x, y)| x.checked_sub(*y).expect("shift below zero"))
                .collect();
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Indices of variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .collect()
    }

    /// Coefficients as a univariate polynomial in variable `idx`; only valid
    /// when no other variable occurs.
    pub fn univariate_coeffs(&self, idx: usize) -> Vec<T> {
        let deg = self.terms.keys().map(|e| e[idx]).max().unwrap_or(0) as usize;
        let mut out = vec![T::zero(); deg + 1];
        for (e, c) in &self.terms {
            debug_assert!(e
                .iter()
                .enumerate()
                .all(|(i, &x)| i == idx || x == 0));
            out[e[idx] as usize] = c.clone();
        }
        out
    }

    pub fn from_univariate(vars: &VarSet, idx: usize, coeffs: &[T]) -> Self {
        let mut p = Self::zero_over(vars);
        for (k, c) in coeffs.iter().enumerate() {
            let mut e = vec![0u32; vars.len()];
            e[idx] = k as u32;
            p.add_term(e, c.clone());
        }
        p
    }

    /// Weighted degree under a grading, `None` for the zero polynomial.
    /// The polynomial must be homogeneous for the result to be meaningful;
    /// this returns the maximum over terms.
    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().zip(weights).map(|(&x, &w)| x * w).sum())
            .max()
    }

    fn degree_at(&self, idx: usize) -> u32 {
        self.terms.keys().map(|e| e[idx]).max().unwrap_or(0)
    }

    /// Coefficients of `self` viewed as univariate in variable `idx`; entry
    /// `k` is the coefficient of the k-th power, a polynomial in the
    /// remaining variables over the same variable list.
    pub fn coeffs_in(&self, idx: usize) -> Vec<Self> {
        let deg = self.degree_at(idx) as usize;
        let mut out = vec![Self::zero_over(&self.vars); deg + 1];
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[idx] = 0;
            out[e[idx] as usize].add_term(ne, c.clone());
        }
        out
    }

    /// Scale so the lexicographically leading coefficient is one.
    fn monic(mut self) -> Self {
        if let Some((_, c)) = self.leading() {
            let c = c.clone();
            if !c.is_one() {
                self = self.scale(&(T::one() / c));
            }
        }
        self
    }

    /// Content with respect to variable `idx`: the gcd of the coefficient
    /// polynomials in the remaining variables.
    fn content_in(&self, idx: usize) -> Self {
        let mut g = Self::zero_over(&self.vars);
        for c in self.coeffs_in(idx) {
            if !c.is_zero() {
                g = Self::gcd(&g, &c);
            }
        }
        g
    }

    /// Remainder of `p` by `q` in variable `idx` after scaling each step by
    /// the leading coefficient of `q`, so every division stays polynomial.
    fn pseudo_rem(p: &Self, q: &Self, idx: usize) -> Self {
        let dq = q.degree_at(idx);
        let lcq = q.coeffs_in(idx)[dq as usize].clone();
        let mut r = p.clone();
        while !r.is_zero() && r.degree_at(idx) >= dq {
            let dr = r.degree_at(idx);
            let lcr = r.coeffs_in(idx)[dr as usize].clone();
            let mut shift = vec![0u32; r.vars.len()];
            shift[idx] = dr - dq;
            r = r * lcq.clone() - q.mul_monomial(&shift, &T::one()) * lcr;
        }
        r
    }

    /// Greatest common divisor, scaled so the leading coefficient is one.
    /// Primitive pseudo-remainder sequence, recursing on the set of
    /// variables that actually occur; meaningful for exact scalars.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.clone().monic();
        }
        if b.is_zero() {
            return a.clone().monic();
        }
        let (a, b) = Self::unified(a, b);
        if a.is_constant() || b.is_constant() {
            return Self::constant(&a.vars, T::one());
        }
        let mut support = a.support_vars();
        for v in b.support_vars() {
            if !support.contains(&v) {
                support.push(v);
            }
        }
        support.sort_unstable();
        let idx = support[0];
        if support.len() == 1 {
            let g = univariate_gcd(&a.univariate_coeffs(idx), &b.univariate_coeffs(idx));
            return Self::from_univariate(&a.vars, idx, &g);
        }
        let ca = a.content_in(idx);
        let cb = b.content_in(idx);
        let cg = Self::gcd(&ca, &cb);
        let mut p = a.exact_div(&ca).expect("content divides");
        let mut q = b.exact_div(&cb).expect("content divides");
        if p.degree_at(idx) < q.degree_at(idx) {
            std::mem::swap(&mut p, &mut q);
        }
        while !q.is_zero() {
            let r = Self::pseudo_rem(&p, &q, idx);
            p = q;
            q = if r.is_zero() {
                r
            } else {
                let c = r.content_in(idx);
                r.exact_div(&c).expect("content divides")
            };
        }
        (cg * p).monic()
    }

    /// Least common multiple, scaled so the leading coefficient is one.
    pub fn lcm(a: &Self, b: &Self) -> Self {
        if a.is_zero() || b.is_zero() {
            return Self::zero_over(&a.vars);
        }
        let g = Self::gcd(a, b);
        let cofactor = b.exact_div(&g).expect("gcd divides");
        (a.clone() * cofactor).monic()
    }
}

/// Monic gcd of univariate coefficient slices (low-to-high order).
fn univariate_gcd<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    fn trim<T: Scalar>(mut v: Vec<T>) -> Vec<T> {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }
    fn rem<T: Scalar>(mut a: Vec<T>, b: &[T]) -> Vec<T> {
        let bl = b.last().unwrap().clone();
        while a.len() >= b.len() && !a.is_empty() {
            let k = a.len() - b.len();
            let q = a.last().unwrap().clone() / bl.clone();
            for (i, bc) in b.iter().enumerate() {
                let t = a[k + i].clone() - q.clone() * bc.clone();
                a[k + i] = t;
            }
            a = trim(a);
            if a.len() < b.len() {
                break;
            }
        }
        a
    }
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(a, &b);
        a = b;
        b = trim(r);
    }
    if a.is_empty() {
        return vec![T::one()];
    }
    let lead = a.last().unwrap().clone();
    a.into_iter().map(|c| c / lead.clone()).collect()
}

impl<T: Scalar> Zero for MultiPoly<T> {
    fn zero() -> Self {
        MultiPoly { vars: VarSet::new(Vec::<String>::new()), terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Scalar> One for MultiPoly<T> {
    fn one() -> Self {
        let vars = VarSet::new(Vec::<String>::new());
        MultiPoly::constant(&vars, T::one())
    }
    fn is_one(&self) -> bool {
        self.is_constant() && self.constant_value().is_one()
    }
}

impl<T: Scalar> Add for MultiPoly<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (mut a, b) = Self::unified(&self, &rhs);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }
}

impl<T: Scalar> Sub for MultiPoly<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Neg for MultiPoly<T> {
    type Output = Self;
    fn neg(self) -> Self {
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in self.terms {
            out.terms.insert(e, -c);
        }
        out
    }
}

impl<T: Scalar> Mul for MultiPoly<T> {
    type Output = Self;
    // Exponents add when terms multiply.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> Self {
        let (a, b) = Self::unified(&self, &rhs);
        let mut out = Self::zero_over(&a.vars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<T: Scalar> fmt::Display for MultiPoly<T> {
    /// Human form, leading term first: `x^2 - 2*x*hbar + hbar^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                if k == 1 {
                    factors.push(self.vars.names()[i].clone());
                } else if k > 1 {
                    factors.push(format!("{}^{}", self.vars.names()[i], k));
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Even-degree grading on a variable list; the deformation variable always
/// sits in degree 2.
#[derive(Clone, Debug, PartialEq)]
pub struct Grading {
    vars: VarSet,
    degrees: Vec<u32>,
}

impl Grading {
    /// Degrees must be even and positive; `hbar`, when present, must have
    /// degree 2.
    pub fn new(vars: &VarSet, degrees: Vec<u32>) -> Result<Self, crate::Error> {
        if degrees.len() != vars.len() {
            return Err(crate::Error::Domain("grading arity mismatch".into()));
        }
        for (name, &d) in vars.names().iter().zip(&degrees) {
            if d == 0 || d % 2 != 0 {
                return Err(crate::Error::Domain(format!(
                    "grading degree of {name} must be even and positive, got {d}"
                )));
            }
            if name == "hbar" && d != 2 {
                return Err(crate::Error::Domain("hbar must sit in degree 2".into()));
            }
        }
        Ok(Grading { vars: vars.clone(), degrees })
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn degree_of<T: Scalar>(&self, p: &MultiPoly<T>) -> Option<u32> {
        assert_eq!(p.vars(), &self.vars, "grading over different variables");
        p.weighted_degree(&self.degrees)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    fn xh() -> VarSet {
        VarSet::new(vec!["x", "hbar"])
    }

    fn rat(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    fn x_plus_k_hbar(k: i64) -> MultiPoly<Rat> {
        let v = xh();
        MultiPoly::var(&v, "x", rat(1)) + MultiPoly::var(&v, "hbar", rat(k))
    }

    #[test]
    fn arithmetic_and_canonical_order() {
        let v = xh();
        let p = x_plus_k_hbar(1);
        let q = x_plus_k_hbar(-1);
        let prod = p.clone() * q.clone();
        // x^2 - hbar^2
        let expected = MultiPoly::from_terms(
            &v,
            vec![(vec![2, 0], rat(1)), (vec![0, 2], rat(-1))],
        );
        assert_eq!(prod, expected);
        assert_eq!((p.clone() - p).num_terms(), 0);
        assert_eq!(prod.to_string(), "x^2 - hbar^2");
    }

    #[test]
    fn constants_broadcast() {
        let v = xh();
        let p = MultiPoly::var(&v, "x", rat(1));
        let c: MultiPoly<Rat> = MultiPoly::one();
        let s = p.clone() + c;
        assert_eq!(s.num_terms(), 2);
        assert_eq!(s.vars(), &v);
    }

    #[test]
    #[should_panic(expected = "variable-list mismatch")]
    fn mismatched_vars_panic() {
        let a = MultiPoly::var(&VarSet::new(vec!["x"]), "x", rat(1));
        let b = MultiPoly::var(&VarSet::new(vec!["y"]), "y", rat(1));
        let _ = a + b;
    }

    #[test]
    fn exact_division_roundtrip() {
        let p = x_plus_k_hbar(1);
        let q = x_plus_k_hbar(-1);
        let prod = p.clone() * q.clone();
        assert_eq!(prod.exact_div(&q), Some(p.clone()));
        // (x^2 - hbar^2) is not divisible by (x + 2 hbar)
        assert_eq!(prod.exact_div(&x_plus_k_hbar(2)), None);
    }

    #[test]
    fn substitution() {
        let p = x_plus_k_hbar(3); // x + 3 hbar
        let at0 = p.subst_scalar("hbar", &rat(0));
        assert_eq!(at0.to_string(), "x");
        let at1 = p.subst_scalar("x", &rat(-3)).subst_scalar("hbar", &rat(1));
        assert!(at1.is_zero());
    }

    #[test]
    fn grading_validation_and_degree() {
        let v = xh();
        let g = Grading::new(&v, vec![2, 2]).unwrap();
        let p = x_plus_k_hbar(1) * x_plus_k_hbar(2);
        assert_eq!(g.degree_of(&p), Some(4));
        assert!(Grading::new(&v, vec![3, 2]).is_err());
        assert!(Grading::new(&v, vec![2, 4]).is_err());
    }

    #[test]
    fn display_forms() {
        let v = xh();
        let p = MultiPoly::from_terms(
            &v,
            vec![
                (vec![2, 0], rat(1)),
                (vec![1, 1], Rat::new((-3).into(), 2.into())),
                (vec![0, 0], rat(5)),
            ],
        );
        assert_eq!(p.to_string(), "x^2 - 3/2*x*hbar + 5");
    }
}
