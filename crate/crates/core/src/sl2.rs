//! The graded enveloping algebra of sl2 and its standard modules.
//!
//! The algebra is the free module on normal-ordered monomials `f^a h^b e^c`
//! over `Q[hbar]`, with relations `ef - fe = hbar*h`, `he - eh = 2*hbar*e`,
//! `hf - fh = -2*hbar*f`.  Setting `hbar = 1` recovers the ordinary
//! enveloping algebra; setting `hbar = 0` gives the symmetric algebra.
//!
//! Modules provided here:
//! - [`VermaVec`]: the universal Verma module over `Q[hbar, x]` with basis
//!   `m_{-1}, m_{-3}, ...` indexed by odd negative weights relative to `x`;
//! - [`Irrep`]: the `(n+1)`-dimensional irreducible with integer weight
//!   labels `-n, -n+2, ..., n`, behind the [`Sl2Rep`] trait so tensor
//!   products of irreducibles get the same machinery;
//! - [`TensorVec`]: vectors in (Verma) tensor (finite module), the ambient
//!   space of the reduction functor.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::{poly_hbar, poly_int, poly_rat, rat_int, x_plus_k_hbar, Poly, Rat, RatFn};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    E,
    H,
    F,
}

/// `binom(n, k)` as a rational.
pub(crate) fn binomial(n: u32, k: u32) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc = acc * rat_int((n - i) as i64) / rat_int((i + 1) as i64);
    }
    acc
}

/// Element of the graded enveloping algebra in the normal-ordered basis:
/// the key `(a, b, c)` stands for `f^a h^b e^c`.
///
/// Coefficients are carried as polynomials in the shared `[x, hbar]`
/// variable list; algebra elements proper only ever use `hbar`, but sharing
/// the list lets module coefficients mix in `x` without coercions.
#[derive(Clone, Debug, PartialEq)]
pub struct PBWElem {
    terms: BTreeMap<(u32, u32, u32), Poly>,
}

impl PBWElem {
    pub fn zero() -> Self {
        PBWElem { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial((0, 0, 0), poly_int(1))
    }

    pub fn gen(g: Gen) -> Self {
        let key = match g {
            Gen::F => (1, 0, 0),
            Gen::H => (0, 1, 0),
            Gen::E => (0, 0, 1),
        };
        Self::monomial(key, poly_int(1))
    }

    pub fn monomial(key: (u32, u32, u32), coeff: Poly) -> Self {
        let mut p = Self::zero();
        p.add_term(key, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32, u32), Poly)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    /// The quadratic Casimir `2fe + hbar*h + h^2/2`.
    pub fn casimir() -> Self {
        Self::from_terms([
            ((1, 0, 1), poly_int(2)),
            ((0, 1, 0), poly_hbar()),
            ((0, 2, 0), poly_rat(Rat::new(1.into(), 2.into()))),
        ])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, u32), &Poly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &(u32, u32, u32)) -> Poly {
        self.terms.get(key).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn add_term(&mut self, key: (u32, u32, u32), coeff: Poly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Poly) -> Self {
        let mut out = Self::zero();
        for (k, a) in &self.terms {
            out.add_term(*k, a.clone() * c.clone());
        }
        out
    }

    /// Right-multiply one normal monomial by a generator, re-expanding into
    /// normal order.  The rewriting rules, with `w = hbar`:
    ///
    /// - `(f^a h^b e^c) e = f^a h^b e^{c+1}`
    /// - `(f^a h^b e^c) h = f^a h^{b+1} e^c - 2cw f^a h^b e^c`
    /// - `(f^a h^b e^c) f = f^{a+1} (h-2w)^b e^c + cw f^a h^{b+1} e^{c-1}
    ///                      - c(c-1) w^2 f^a h^b e^{c-1}`
    fn term_mul_gen(key: (u32, u32, u32), coeff: &Poly, g: Gen, out: &mut PBWElem) {
        let (a, b, c) = key;
        match g {
            Gen::E => out.add_term((a, b, c + 1), coeff.clone()),
            Gen::H => {
                out.add_term((a, b + 1, c), coeff.clone());
                if c > 0 {
                    let factor = poly_hbar().scale(&rat_int(-2 * c as i64));
                    out.add_term((a, b, c), coeff.clone() * factor);
                }
            }
            Gen::F => {
                // (h - 2w)^b expanded binomially.
                for k in 0..=b {
                    let mut scalar = binomial(b, k);
                    // (-2)^{b-k}
                    for _ in 0..(b - k) {
                        scalar *= rat_int(-2);
                    }
                    let mut factor = poly_rat(scalar);
                    for _ in 0..(b - k) {
                        factor = factor * poly_hbar();
                    }
                    out.add_term((a + 1, k, c), coeff.clone() * factor);
                }
                if c > 0 {
                    let cw = poly_hbar().scale(&rat_int(c as i64));
                    out.add_term((a, b + 1, c - 1), coeff.clone() * cw);
                    if c > 1 {
                        let c2 = poly_hbar()
                            * poly_hbar().scale(&rat_int(-(c as i64) * (c as i64 - 1)));
                        out.add_term((a, b, c - 1), coeff.clone() * c2);
                    }
                }
            }
        }
    }

    pub fn mul_gen(&self, g: Gen) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            Self::term_mul_gen(*k, c, g, &mut out);
        }
        out
    }

    /// Product in the algebra.  Each right-hand monomial `f^a h^b e^c` is
    /// applied to `self` generator by generator, leftmost factor first.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a, b, c), coeff) in &rhs.terms {
            let mut acc = self.clone();
            for _ in 0..a {
                acc = acc.mul_gen(Gen::F);
            }
            for _ in 0..b {
                acc = acc.mul_gen(Gen::H);
            }
            // Trailing powers of e shift the last index directly.
            let mut shifted = Self::zero();
            for (&(x, y, z), p) in &acc.terms {
                shifted.add_term((x, y, z + c), p.clone() * coeff.clone());
            }
            out = out.add(&shifted);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add_term(*k, -c.clone());
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }
}

/// Eigenvalue of `h` on the Verma basis vector `m_j`.
pub fn verma_h_coeff(j: i64) -> Poly {
    x_plus_k_hbar(j)
}

/// Coefficient of `m_{j+2}` in `e * m_j`:
/// `e m_j = ((-j-1)/2) hbar (x + ((j+1)/2) hbar) m_{j+2}`.
///
/// Vanishes at `j = -1`, making `m_{-1}` the highest weight vector; the
/// inner shift `(j+1)/2` is forced by `ef - fe = hbar*h` on the weight
/// ladder.
pub fn verma_e_coeff(j: i64) -> Poly {
    debug_assert!(j % 2 != 0 && j <= -1);
    let outer = poly_hbar().scale(&rat_int((-j - 1) / 2));
    outer * x_plus_k_hbar((j + 1) / 2)
}

/// Vector in the universal Verma module over `Q[hbar, x]`, with basis
/// `m_j` for odd `j <= -1`: `h m_j = (x + j hbar) m_j`, `f m_j = m_{j-2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct VermaVec {
    terms: BTreeMap<i64, Poly>,
}

impl VermaVec {
    pub fn zero() -> Self {
        VermaVec { terms: BTreeMap::new() }
    }

    pub fn basis(j: i64) -> Self {
        assert!(j % 2 != 0 && j <= -1, "Verma basis index must be odd and negative");
        let mut v = Self::zero();
        v.add_term(j, poly_int(1));
        v
    }

    pub fn generator() -> Self {
        Self::basis(-1)
    }

    pub fn add_term(&mut self, j: i64, c: Poly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(j) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Poly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, j: i64) -> Poly {
        self.terms.get(&j).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (j, c) in &other.terms {
            out.add_term(*j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (j, c) in &other.terms {
            out.add_term(*j, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Poly) -> Self {
        let mut out = Self::zero();
        for (j, a) in &self.terms {
            out.add_term(*j, a.clone() * c.clone());
        }
        out
    }

    pub fn act_gen(&self, g: Gen) -> Self {
        let mut out = Self::zero();
        for (&j, c) in &self.terms {
            match g {
                Gen::H => out.add_term(j, c.clone() * verma_h_coeff(j)),
                Gen::F => out.add_term(j - 2, c.clone()),
                Gen::E => out.add_term(j + 2, c.clone() * verma_e_coeff(j)),
            }
        }
        out
    }

    /// Action of an algebra element: each monomial `f^a h^b e^c` acts with
    /// `e` first (rightmost factor), then `h`, then `f`.
    pub fn act_pbw(&self, u: &PBWElem) -> Self {
        let mut out = Self::zero();
        for (&(a, b, c), coeff) in u.terms() {
            let mut acc = self.clone();
            for _ in 0..c {
                acc = acc.act_gen(Gen::E);
            }
            for _ in 0..b {
                acc = acc.act_gen(Gen::H);
            }
            for _ in 0..a {
                acc = acc.act_gen(Gen::F);
            }
            out = out.add(&acc.scale(coeff));
        }
        out
    }
}

/// A finite-dimensional module given by its weight basis and generator
/// actions.  `act` lists the image of a basis vector as (label, coefficient)
/// pairs; labels that fall off the weight ladder are simply absent.
pub trait Sl2Rep {
    type Label: Ord + Clone + Debug;

    fn labels(&self) -> Vec<Self::Label>;

    /// Integer weight: `h` acts on the basis vector by `weight * hbar`.
    fn weight(&self, l: &Self::Label) -> i64;

    fn act(&self, g: Gen, l: &Self::Label) -> Vec<(Self::Label, Poly)>;

    fn dim(&self) -> usize {
        self.labels().len()
    }
}

/// The `(n+1)`-dimensional irreducible with weight labels
/// `-n, -n+2, ..., n`:
/// `h v_i = i hbar v_i`,
/// `e v_i = ((n+i+2)/2) hbar v_{i+2}`,
/// `f v_i = ((n-i+2)/2) hbar v_{i-2}`.
///
/// Images outside the label range are dropped; the rewrite coefficients
/// re-entering the range vanish identically, so truncation is exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Irrep {
    n: i64,
}

impl Irrep {
    pub fn new(n: i64) -> Result<Self, crate::Error> {
        if n < 0 {
            return Err(crate::Error::Domain(format!(
                "highest weight must be nonnegative, got {n}"
            )));
        }
        Ok(Irrep { n })
    }

    pub fn n(&self) -> i64 {
        self.n
    }
}

impl Sl2Rep for Irrep {
    type Label = i64;

    fn labels(&self) -> Vec<i64> {
        (-self.n..=self.n).step_by(2).collect()
    }

    fn weight(&self, l: &i64) -> i64 {
        *l
    }

    fn act(&self, g: Gen, l: &i64) -> Vec<(i64, Poly)> {
        let i = *l;
        debug_assert!(i.abs() <= self.n && (i - self.n) % 2 == 0);
        match g {
            Gen::H => {
                if i == 0 {
                    vec![]
                } else {
                    vec![(i, poly_hbar().scale(&rat_int(i)))]
                }
            }
            Gen::E => {
                if i + 2 > self.n {
                    vec![]
                } else {
                    vec![(i + 2, poly_hbar().scale(&rat_int((self.n + i + 2) / 2)))]
                }
            }
            Gen::F => {
                if i - 2 < -self.n {
                    vec![]
                } else {
                    vec![(i - 2, poly_hbar().scale(&rat_int((self.n - i + 2) / 2)))]
                }
            }
        }
    }
}

/// Tensor product of two modules; generators act by the symmetric coproduct
/// `g -> g (x) 1 + 1 (x) g`.
#[derive(Clone, Debug)]
pub struct TensorRep<A: Sl2Rep, B: Sl2Rep> {
    pub left: A,
    pub right: B,
}

impl<A: Sl2Rep, B: Sl2Rep> TensorRep<A, B> {
    pub fn new(left: A, right: B) -> Self {
        TensorRep { left, right }
    }
}

impl<A: Sl2Rep, B: Sl2Rep> Sl2Rep for TensorRep<A, B> {
    type Label = (A::Label, B::Label);

    fn labels(&self) -> Vec<Self::Label> {
        let mut out = Vec::new();
        for a in self.left.labels() {
            for b in self.right.labels() {
                out.push((a.clone(), b.clone()));
            }
        }
        out
    }

    fn weight(&self, l: &Self::Label) -> i64 {
        self.left.weight(&l.0) + self.right.weight(&l.1)
    }

    fn act(&self, g: Gen, l: &Self::Label) -> Vec<(Self::Label, Poly)> {
        let mut out = Vec::new();
        for (la, c) in self.left.act(g, &l.0) {
            out.push(((la, l.1.clone()), c));
        }
        for (lb, c) in self.right.act(g, &l.1) {
            out.push(((l.0.clone(), lb), c));
        }
        out
    }
}

/// Vector in a finite-dimensional module with polynomial coefficients.
pub struct RepVec<R: Sl2Rep> {
    terms: BTreeMap<R::Label, Poly>,
}

// Manual impls: the container stores only labels and coefficients, so it is
// clonable and comparable regardless of whether the module type itself is.
impl<R: Sl2Rep> Clone for RepVec<R> {
    fn clone(&self) -> Self {
        RepVec { terms: self.terms.clone() }
    }
}

impl<R: Sl2Rep> Debug for RepVec<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RepVec").field("terms", &self.terms).finish()
    }
}

impl<R: Sl2Rep> PartialEq for RepVec<R> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<R: Sl2Rep> RepVec<R> {
    pub fn zero() -> Self {
        RepVec { terms: BTreeMap::new() }
    }

    pub fn basis(l: R::Label) -> Self {
        let mut v = Self::zero();
        v.add_term(l, poly_int(1));
        v
    }

    pub fn add_term(&mut self, l: R::Label, c: Poly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(l) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&R::Label, &Poly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, l: &R::Label) -> Poly {
        self.terms.get(l).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Poly) -> Self {
        let mut out = Self::zero();
        for (l, a) in &self.terms {
            out.add_term(l.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn act_gen(&self, rep: &R, g: Gen) -> Self {
        let mut out = Self::zero();
        for (l, c) in &self.terms {
            for (l2, p) in rep.act(g, l) {
                out.add_term(l2, c.clone() * p);
            }
        }
        out
    }

    pub fn act_pbw(&self, rep: &R, u: &PBWElem) -> Self {
        let mut out = Self::zero();
        for (&(a, b, c), coeff) in u.terms() {
            let mut acc = self.clone();
            for _ in 0..c {
                acc = acc.act_gen(rep, Gen::E);
            }
            for _ in 0..b {
                acc = acc.act_gen(rep, Gen::H);
            }
            for _ in 0..a {
                acc = acc.act_gen(rep, Gen::F);
            }
            out = out.add(&acc.scale(coeff));
        }
        out
    }
}

/// Coefficient rings usable inside [`TensorVec`]: polynomial while acting,
/// rational once splittings introduce denominators.
pub trait TensorCoef:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + std::ops::Neg<Output = Self>
    + std::ops::Sub<Output = Self>
{
    fn embed(p: Poly) -> Self;
}

impl TensorCoef for Poly {
    fn embed(p: Poly) -> Self {
        p
    }
}

impl TensorCoef for RatFn {
    fn embed(p: Poly) -> Self {
        RatFn::from_poly(p)
    }
}

/// Vector in (universal Verma) tensor (finite module), indexed by the pair
/// (Verma index `j`, module label).  The `h`-eigenvalue of `(j, l)` is
/// `x + (j + weight(l)) hbar`.
pub struct TensorVec<R: Sl2Rep, C: TensorCoef> {
    terms: BTreeMap<(i64, R::Label), C>,
}

impl<R: Sl2Rep, C: TensorCoef> Clone for TensorVec<R, C> {
    fn clone(&self) -> Self {
        TensorVec { terms: self.terms.clone() }
    }
}

impl<R: Sl2Rep, C: TensorCoef> Debug for TensorVec<R, C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TensorVec").field("terms", &self.terms).finish()
    }
}

impl<R: Sl2Rep, C: TensorCoef> PartialEq for TensorVec<R, C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<R: Sl2Rep, C: TensorCoef> TensorVec<R, C> {
    pub fn zero() -> Self {
        TensorVec { terms: BTreeMap::new() }
    }

    pub fn basis(j: i64, l: R::Label) -> Self {
        assert!(j % 2 != 0 && j <= -1, "Verma index must be odd and negative");
        let mut v = Self::zero();
        v.add_term((j, l), C::one());
        v
    }

    /// `m_{-1} (x) v_l`, the generating line of the tensor module.
    pub fn top(l: R::Label) -> Self {
        Self::basis(-1, l)
    }

    pub fn add_term(&mut self, key: (i64, R::Label), c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, R::Label), &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &(i64, R::Label)) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (k, a) in &self.terms {
            out.add_term(k.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn scale_poly(&self, p: &Poly) -> Self {
        self.scale(&C::embed(p.clone()))
    }

    /// Generator action through the coproduct: the Verma factor and the
    /// module factor each receive the generator once.
    pub fn act_gen(&self, rep: &R, g: Gen) -> Self {
        let mut out = Self::zero();
        for ((j, l), c) in &self.terms {
            match g {
                Gen::H => {
                    out.add_term((*j, l.clone()), c.clone() * C::embed(verma_h_coeff(*j)));
                }
                Gen::E => {
                    let ec = verma_e_coeff(*j);
                    if !ec.is_zero() {
                        out.add_term((*j + 2, l.clone()), c.clone() * C::embed(ec));
                    }
                }
                Gen::F => {
                    out.add_term((*j - 2, l.clone()), c.clone());
                }
            }
            for (l2, p) in rep.act(g, l) {
                out.add_term((*j, l2), c.clone() * C::embed(p));
            }
        }
        out
    }

    pub fn act_pbw(&self, rep: &R, u: &PBWElem) -> Self {
        let mut out = Self::zero();
        for (&(a, b, c), coeff) in u.terms() {
            let mut acc = self.clone();
            for _ in 0..c {
                acc = acc.act_gen(rep, Gen::E);
            }
            for _ in 0..b {
                acc = acc.act_gen(rep, Gen::H);
            }
            for _ in 0..a {
                acc = acc.act_gen(rep, Gen::F);
            }
            out = out.add(&acc.scale_poly(coeff));
        }
        out
    }

    /// Smallest Verma index present, `None` for the zero vector.
    pub fn min_verma_index(&self) -> Option<i64> {
        self.terms.keys().map(|(j, _)| *j).min()
    }
}

/// Basis of the `h`-eigenspace of eigenvalue `x + total*hbar` in the tensor
/// module: all pairs `(j, l)` with `j + weight(l) = total`, odd `j <= -1`.
pub fn tensor_weight_basis<R: Sl2Rep>(rep: &R, total: i64) -> Vec<(i64, R::Label)> {
    let mut out = Vec::new();
    for l in rep.labels() {
        let j = total - rep.weight(&l);
        if j <= -1 && j % 2 != 0 {
            out.push((j, l));
        }
    }
    out.sort();
    out
}
