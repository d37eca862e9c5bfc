//! The quantum Toda realization at rank 1: invariant differential operators
//! on the big cell and their reduction to the Toda operator.
//!
//! Operators live on functions of `(t, u, v)` with `t` invertible.  The
//! derivations carry the deformation parameter: `[d_w, w] = hbar` for each
//! coordinate `w`, so all commutators below are divisible by `hbar` and the
//! classical limit is the commutative symbol calculus.

use std::cmp::min;
use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::poly::{MultiPoly, VarSet};
use crate::sl2::{binomial, PBWElem};
use crate::{rat_int, Error, Rat};

static H_VARS: OnceLock<VarSet> = OnceLock::new();

/// Shared one-variable list `[hbar]` for operator coefficients.
pub fn coeff_vars() -> VarSet {
    H_VARS
        .get_or_init(|| VarSet::new(vec!["hbar".to_string()]))
        .clone()
}

fn cp_rat(c: Rat) -> MultiPoly<Rat> {
    MultiPoly::constant(&coeff_vars(), c)
}

fn cp_int(n: i64) -> MultiPoly<Rat> {
    cp_rat(rat_int(n))
}

fn cp_hbar() -> MultiPoly<Rat> {
    MultiPoly::var(&coeff_vars(), "hbar", Rat::one())
}

/// Falling factorial `s (s-1) ... (s-k+1)`; `s` may be negative.
fn falling(s: i64, k: u32) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k as i64 {
        acc *= rat_int(s - i);
    }
    acc
}

/// Normal-ordered monomial key: powers of `(t, u, v, d_t, d_u, d_v)`.
/// The `t` power may be negative.
pub type OpKey = (i64, u32, u32, u32, u32, u32);

/// Differential operator in normal order: coordinates to the left of
/// derivations, with coefficients in `Q[hbar]`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiffOp {
    terms: BTreeMap<OpKey, MultiPoly<Rat>>,
}

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::term(cp_int(1), (0, 0, 0, 0, 0, 0))
    }

    pub fn term(coeff: MultiPoly<Rat>, key: OpKey) -> Self {
        let mut op = Self::zero();
        op.add_term(key, coeff);
        op
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OpKey, &MultiPoly<Rat>)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, key: OpKey, coeff: MultiPoly<Rat>) {
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
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        DiffOp {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &MultiPoly<Rat>) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, v.clone() * c.clone());
        }
        out
    }

    /// Composition.  Each derivation commutes past its own coordinate by
    /// `d^p w^s = sum_k binom(p, k) (s)_k hbar^k w^{s-k} d^{p-k}`; distinct
    /// coordinates commute freely.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(t1, u1, v1, dt1, du1, dv1), c1) in &self.terms {
            for (&(t2, u2, v2, dt2, du2, dv2), c2) in &other.terms {
                for ku in 0..=min(du1, u2) {
                    let fu = binomial(du1, ku) * falling(u2 as i64, ku);
                    for kv in 0..=min(dv1, v2) {
                        let fv = binomial(dv1, kv) * falling(v2 as i64, kv);
                        for kt in 0..=dt1 {
                            let ft = binomial(dt1, kt) * falling(t2, kt);
                            let factor = fu.clone() * fv.clone() * ft;
                            if factor.is_zero() {
                                continue;
                            }
                            let mut coeff = c1.clone() * c2.clone() * cp_rat(factor);
                            for _ in 0..ku + kv + kt {
                                coeff = coeff * cp_hbar();
                            }
                            out.add_term(
                                (
                                    t1 + t2 - kt as i64,
                                    u1 + u2 - ku,
                                    v1 + v2 - kv,
                                    dt1 + dt2 - kt,
                                    du1 + du2 - ku,
                                    dv1 + dv2 - kv,
                                ),
                                coeff,
                            );
                        }
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// The commutative symbol: every coefficient at `hbar = 0`.
    pub fn classical_limit(&self) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add_term(*k, c.subst_scalar("hbar", &Rat::zero()));
        }
        out
    }
}

impl std::fmt::Display for DiffOp {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(fm, "0");
        }
        let mut first = true;
        for (&(t, u, v, dt, du, dv), c) in &self.terms {
            if !first {
                write!(fm, " + ")?;
            }
            first = false;
            write!(fm, "({c})")?;
            for (name, e) in [("t", t), ("u", u as i64), ("v", v as i64)] {
                if e != 0 {
                    write!(fm, " {name}^{e}")?;
                }
            }
            for (name, e) in [("dt", dt), ("du", du), ("dv", dv)] {
                if e != 0 {
                    write!(fm, " {name}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// `e` acting on the left: `t v d_t - t^{-2} d_u - v^2 d_v`.
pub fn left_e() -> DiffOp {
    let mut op = DiffOp::zero();
    op.add_term((1, 0, 1, 1, 0, 0), cp_int(1));
    op.add_term((-2, 0, 0, 0, 1, 0), cp_int(-1));
    op.add_term((0, 0, 2, 0, 0, 1), cp_int(-1));
    op
}

/// `f` acting on the left: `d_v`.
pub fn left_f() -> DiffOp {
    DiffOp::term(cp_int(1), (0, 0, 0, 0, 0, 1))
}

/// `h` acting on the left: `-t d_t + 2 v d_v`.
pub fn left_h() -> DiffOp {
    let mut op = DiffOp::zero();
    op.add_term((1, 0, 0, 1, 0, 0), cp_int(-1));
    op.add_term((0, 0, 1, 0, 0, 1), cp_int(2));
    op
}

/// `e` acting on the right: `u t d_t - u^2 d_u - t^{-2} d_v`.
pub fn right_e() -> DiffOp {
    let mut op = DiffOp::zero();
    op.add_term((1, 1, 0, 1, 0, 0), cp_int(1));
    op.add_term((0, 2, 0, 0, 1, 0), cp_int(-1));
    op.add_term((-2, 0, 0, 0, 0, 1), cp_int(-1));
    op
}

/// `f` acting on the right: `d_u`.
pub fn right_f() -> DiffOp {
    DiffOp::term(cp_int(1), (0, 0, 0, 0, 1, 0))
}

/// `h` acting on the right: `t d_t - 2 u d_u`.
pub fn right_h() -> DiffOp {
    let mut op = DiffOp::zero();
    op.add_term((1, 0, 0, 1, 0, 0), cp_int(1));
    op.add_term((0, 1, 0, 0, 1, 0), cp_int(-2));
    op
}

/// Convert a coefficient in `Q[x, hbar]` that does not involve `x` into the
/// one-variable coefficient ring.
fn drop_x(p: &crate::Poly) -> Result<MultiPoly<Rat>, Error> {
    if p.degree_in("x") > 0 {
        return Err(Error::Domain(
            "coefficient depends on x and has no differential-operator realization".into(),
        ));
    }
    if p.is_constant() {
        return Ok(cp_rat(p.constant_value()));
    }
    Ok(MultiPoly::from_terms(
        &coeff_vars(),
        p.terms().map(|(e, c)| (vec![e[1]], c.clone())),
    ))
}

/// Algebra map into left-invariant operators: `f^a h^b e^c` goes to
/// `L_f^a L_h^b L_e^c`.  Coefficients must lie in `Q[hbar]`.
pub fn left_realize(elem: &PBWElem) -> Result<DiffOp, Error> {
    let mut out = DiffOp::zero();
    for (&(a, b, c), coeff) in elem.terms() {
        let op = left_f().pow(a).mul(&left_h().pow(b)).mul(&left_e().pow(c));
        out = out.add(&op.scale(&drop_x(coeff)?));
    }
    Ok(out)
}

/// Antihomomorphism into right-invariant operators: `f^a h^b e^c` goes to
/// `R_e^c R_h^b R_f^a`.
pub fn right_realize(elem: &PBWElem) -> Result<DiffOp, Error> {
    let mut out = DiffOp::zero();
    for (&(a, b, c), coeff) in elem.terms() {
        let op = right_e().pow(c).mul(&right_h().pow(b)).mul(&right_f().pow(a));
        out = out.add(&op.scale(&drop_x(coeff)?));
    }
    Ok(out)
}

/// Restrict to the character subspace: `d_u -> -1`, `d_v -> 1` in normal
/// order.  The operator descends exactly when the residue has no `u` or `v`
/// left; otherwise this is a domain error.
pub fn kk_reduce(op: &DiffOp) -> Result<DiffOp, Error> {
    let mut out = DiffOp::zero();
    for (&(t, u, v, dt, du, _dv), c) in &op.terms {
        let sign = if du % 2 == 0 { 1 } else { -1 };
        out.add_term((t, u, v, dt, 0, 0), c.clone().scale(&rat_int(sign)));
    }
    if out.terms.keys().any(|&(_, u, v, _, _, _)| u > 0 || v > 0) {
        return Err(Error::Domain(
            "operator does not preserve the character subspace".into(),
        ));
    }
    Ok(out)
}

/// The reduced Casimir: `1/2 t^2 d_t^2 + 3/2 hbar t d_t + 2 t^{-2}`.
pub fn reduced_casimir() -> DiffOp {
    let mut op = DiffOp::zero();
    op.add_term((2, 0, 0, 2, 0, 0), cp_rat(Rat::new(1.into(), 2.into())));
    op.add_term((1, 0, 0, 1, 0, 0), cp_hbar().scale(&Rat::new(3.into(), 2.into())));
    op.add_term((-2, 0, 0, 0, 0, 0), cp_int(2));
    op
}
