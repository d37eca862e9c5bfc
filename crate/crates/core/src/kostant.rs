//! The reduction functor on finite-dimensional modules.
//!
//! For a finite module `V`, the reduced space is the quotient of
//! (universal Verma) tensor `V` by the image of `f - 1`.  The quotient has
//! basis the images `tbar_l` of `m_{-1} (x) v_l`, and the rewrite
//!
//! `m_j (x) w  ==  m_{j+2} (x) w - m_{j+2} (x) (f w)`   for `j <= -3`
//!
//! pushes any vector onto that basis in finitely many steps.  Everything in
//! this module is exact linear algebra over `Q[x, hbar]` and its fraction
//! field: the Casimir matrix of the reduced module, the splitting basis of
//! `e`-highest vectors, the expansion of the cyclic vector in that basis,
//! and the quasiclassical Jordan type.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::matrix::{kernel, nilpotent_jordan_type, rank, solve, Matrix, SolveOutcome};
use crate::sl2::{
    tensor_weight_basis, Gen, Irrep, PBWElem, Sl2Rep, TensorCoef, TensorRep, TensorVec,
};
use crate::{poly_hbar, poly_int, rat_int, x_plus_k_hbar, Error, Poly, Rat, RatFn};

/// Image of a tensor vector in the coinvariant quotient, as coefficients on
/// the reduced basis `tbar_l`.
///
/// Deterministic strategy: always rewrite the term with the smallest
/// (most negative) Verma index first.  The result is order-independent;
/// see [`coinvariant_reduce_picked`] for the variant that exercises other
/// orders.
pub fn coinvariant_reduce<R: Sl2Rep, C: TensorCoef>(
    rep: &R,
    v: &TensorVec<R, C>,
) -> BTreeMap<R::Label, C> {
    let mut work = v.clone();
    loop {
        // BTree order puts the smallest j first, so one peek suffices.
        let first = work.terms().next().map(|(k, c)| (k.clone(), c.clone()));
        let Some(((j, l), c)) = first else { break };
        if j == -1 {
            break;
        }
        rewrite_term(rep, &mut work, (j, l), c);
    }
    work.terms().map(|((_, l), c)| (l.clone(), c.clone())).collect()
}

/// One application of the defining rewrite to a single term.
fn rewrite_term<R: Sl2Rep, C: TensorCoef>(
    rep: &R,
    work: &mut TensorVec<R, C>,
    key: (i64, R::Label),
    coeff: C,
) {
    let (j, l) = key;
    debug_assert!(j <= -3);
    work.add_term((j, l.clone()), -coeff.clone());
    work.add_term((j + 2, l.clone()), coeff.clone());
    for (l2, p) in rep.act(Gen::F, &l) {
        work.add_term((j + 2, l2), -(coeff.clone() * C::embed(p)));
    }
}

/// Same quotient map, but the caller chooses which reducible term to rewrite
/// at every step: `pick(k)` selects among `k` candidates (taken modulo `k`).
/// Used to check that the result does not depend on the rewriting order.
pub fn coinvariant_reduce_picked<R: Sl2Rep, C: TensorCoef>(
    rep: &R,
    v: &TensorVec<R, C>,
    mut pick: impl FnMut(usize) -> usize,
) -> BTreeMap<R::Label, C> {
    let mut work = v.clone();
    loop {
        let candidates: Vec<(i64, R::Label)> = work
            .terms()
            .filter(|((j, _), _)| *j <= -3)
            .map(|(k, _)| k.clone())
            .collect();
        if candidates.is_empty() {
            break;
        }
        let key = candidates[pick(candidates.len()) % candidates.len()].clone();
        let coeff = work.coeff(&key);
        rewrite_term(rep, &mut work, key, coeff);
    }
    work.terms().map(|((_, l), c)| (l.clone(), c.clone())).collect()
}

/// Scalar by which the Casimir acts on the `h`-eigenline of eigenvalue
/// `x + i hbar` after reduction: `((x + i hbar)^2 - hbar^2) / 2`.
pub fn casimir_eigenvalue(i: i64) -> Poly {
    let y = x_plus_k_hbar(i);
    (y.clone() * y - poly_hbar() * poly_hbar()).scale(&Rat::new(1.into(), 2.into()))
}

/// Matrix of the Casimir action on the reduced module of `rep`, over the
/// label basis sorted ascending.  Returns (sorted labels, matrix) with
/// column `k` holding the reduced image of `Casimir * tbar_{labels[k]}`.
pub fn casimir_matrix<R: Sl2Rep>(rep: &R) -> (Vec<R::Label>, Matrix<Poly>) {
    let mut labels = rep.labels();
    labels.sort();
    let index: BTreeMap<R::Label, usize> =
        labels.iter().cloned().enumerate().map(|(k, l)| (l, k)).collect();
    let dim = labels.len();
    let cas = PBWElem::casimir();
    let mut mat = Matrix::zero(dim, dim);
    for (col, l) in labels.iter().enumerate() {
        let t: TensorVec<R, Poly> = TensorVec::top(l.clone());
        let image = t.act_pbw(rep, &cas);
        for (l2, c) in coinvariant_reduce(rep, &image) {
            mat[(index[&l2], col)] = c;
        }
    }
    (labels, mat)
}

/// Evaluates `prod_i (2 M - ((x + i hbar)^2 - hbar^2) Id)` over the given
/// weight list and reports whether it is the zero matrix.
pub fn annihilator_product_vanishes(mat: &Matrix<Poly>, weights: &[i64]) -> bool {
    let dim = mat.nrows();
    let mut acc = Matrix::<Poly>::identity(dim);
    for &i in weights {
        let shift = casimir_eigenvalue(i).scale(&rat_int(2));
        let factor = mat.scale(&poly_int(2)) - Matrix::identity(dim).scale(&shift);
        acc = acc * factor;
    }
    (0..dim).all(|r| acc.row(r).iter().all(Zero::is_zero))
}

/// The reduced module of the `(n+1)`-dimensional irreducible.
#[derive(Clone, Debug)]
pub struct PhiModule {
    n: i64,
    labels: Vec<i64>,
    casimir: Matrix<Poly>,
}

impl PhiModule {
    pub fn new(n: i64) -> Result<Self, Error> {
        let rep = Irrep::new(n)?;
        let (labels, casimir) = casimir_matrix(&rep);
        Ok(PhiModule { n, labels, casimir })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn casimir(&self) -> &Matrix<Poly> {
        &self.casimir
    }

    /// `prod_{i = -n, -n+2, ..., n} (2 C - ((x + i hbar)^2 - hbar^2) Id) = 0`.
    pub fn annihilator_vanishes(&self) -> bool {
        annihilator_product_vanishes(&self.casimir, &self.labels)
    }
}

/// Closed form of the Casimir matrix on the reduced irreducible: diagonal
/// `((x + i hbar)^2 - hbar^2)/2`, first subdiagonal `(n + i + 2) hbar` from
/// column `i` (labels ascending).  Kept as an independent target for the
/// computed matrix.
pub fn expected_casimir_matrix(n: i64) -> Matrix<Poly> {
    let labels: Vec<i64> = (-n..=n).step_by(2).collect();
    let dim = labels.len();
    let mut mat = Matrix::zero(dim, dim);
    for (col, &i) in labels.iter().enumerate() {
        mat[(col, col)] = casimir_eigenvalue(i);
        if col + 1 < dim {
            mat[(col + 1, col)] = poly_hbar().scale(&rat_int(n + i + 2));
        }
    }
    mat
}

/// Splitting basis of the reduced irreducible: for each weight label `i`,
/// the unique `e`-highest vector `s_i` in the `x + (i-1) hbar` eigenspace,
/// normalized so that `s_i - t_i` lies in the span of the higher splitting
/// vectors and their `f`-translates (equivalently: the reduced expansion of
/// `s_i` has unit coefficient on `tbar_i`).
#[derive(Clone, Debug)]
pub struct Splitting {
    n: i64,
    labels: Vec<i64>,
    vectors: Vec<TensorVec<Irrep, RatFn>>,
    /// Column `k`: expansion of the reduced `s_{labels[k]}` over `tbar`.
    reduced: Matrix<RatFn>,
}

impl Splitting {
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn vectors(&self) -> &[TensorVec<Irrep, RatFn>] {
        &self.vectors
    }

    pub fn reduced_matrix(&self) -> &Matrix<RatFn> {
        &self.reduced
    }
}

pub fn highest_weight_split(n: i64) -> Result<Splitting, Error> {
    let rep = Irrep::new(n)?;
    let labels: Vec<i64> = (-n..=n).step_by(2).collect();
    let index: BTreeMap<i64, usize> =
        labels.iter().cloned().enumerate().map(|(k, l)| (l, k)).collect();
    let dim = labels.len();
    let mut vectors = Vec::with_capacity(dim);
    let mut reduced = Matrix::<RatFn>::zero(dim, dim);
    for (col, &i) in labels.iter().enumerate() {
        let src = tensor_weight_basis(&rep, i - 1);
        let dst = tensor_weight_basis(&rep, i + 1);
        let dst_index: BTreeMap<(i64, i64), usize> =
            dst.iter().cloned().enumerate().map(|(k, key)| (key, k)).collect();
        let mut emat = Matrix::<RatFn>::zero(dst.len(), src.len());
        for (c, key) in src.iter().enumerate() {
            let v: TensorVec<Irrep, Poly> = TensorVec::basis(key.0, key.1);
            for (k2, p) in v.act_gen(&rep, Gen::E).terms() {
                let r = dst_index[k2];
                emat[(r, c)] = RatFn::from_poly(p.clone());
            }
        }
        let ker = kernel(&emat);
        if ker.len() != 1 {
            return Err(Error::Domain(format!(
                "e-kernel in weight {} of the tensor with V_{n} has dimension {}, expected 1",
                i - 1,
                ker.len()
            )));
        }
        let mut s: TensorVec<Irrep, RatFn> = TensorVec::zero();
        for (k, key) in src.iter().enumerate() {
            s.add_term(*key, ker[0][k].clone());
        }
        let red = coinvariant_reduce(&rep, &s);
        let lead = red.get(&i).cloned().unwrap_or_else(RatFn::zero);
        if lead.is_zero() {
            return Err(Error::Domain(format!(
                "splitting vector at weight label {i} has no component on its own line"
            )));
        }
        let inv = lead.inverse();
        let s = s.scale(&inv);
        for (l2, c) in red {
            reduced[(index[&l2], col)] = c * inv.clone();
        }
        vectors.push(s);
    }
    Ok(Splitting { n, labels, vectors, reduced })
}

/// Coefficient of `s_i` in the expansion of `tbar_{-n}` over the splitting
/// basis, in closed form: `prod_{k=(i-n)/2}^{i-1} (x + k hbar)^{-1}`.
pub fn idiot_coefficient(n: i64, i: i64) -> RatFn {
    let mut den = poly_int(1);
    for k in (i - n) / 2..=(i - 1) {
        den = den * x_plus_k_hbar(k);
    }
    RatFn::new(poly_int(1), den)
}

/// Expansion of the cyclic line `tbar_{-n}` in the splitting basis:
/// `tbar_{-n} = sum_i c_i sbar_i`, returned as label -> coefficient.
pub fn idiot_expansion(n: i64) -> Result<BTreeMap<i64, RatFn>, Error> {
    let split = highest_weight_split(n)?;
    let dim = split.labels.len();
    let mut rhs = vec![RatFn::zero(); dim];
    rhs[0] = RatFn::one();
    match solve(split.reduced_matrix(), &rhs)? {
        SolveOutcome::Solution { particular, kernel_dim } => {
            if kernel_dim != 0 {
                return Err(Error::Domain(
                    "splitting matrix is singular; expansion not unique".into(),
                ));
            }
            Ok(split
                .labels
                .iter()
                .zip(particular)
                .map(|(&l, c)| (l, c))
                .collect())
        }
        SolveOutcome::Inconsistent => Err(Error::Domain(
            "cyclic vector does not lie in the span of the splitting basis".into(),
        )),
    }
}

/// Jordan type of the quasiclassical limit of the shifted Casimir: subtract
/// the scalar `(x^2 - hbar^2)/2`, divide by `hbar` exactly, then set
/// `hbar = 0` and `x = 0` and read off the nilpotent Jordan blocks.
pub fn quasiclassical_jordan(n: i64) -> Result<Vec<usize>, Error> {
    let phi = PhiModule::new(n)?;
    let dim = phi.labels().len();
    let scalar = casimir_eigenvalue(0);
    let hbar = poly_hbar();
    let mut limit = Matrix::<RatFn>::zero(dim, dim);
    for r in 0..dim {
        for c in 0..dim {
            let mut entry = phi.casimir()[(r, c)].clone();
            if r == c {
                entry = entry - scalar.clone();
            }
            let quotient = entry.exact_div(&hbar).ok_or_else(|| {
                Error::Domain("shifted Casimir entry is not divisible by hbar".into())
            })?;
            let value = quotient
                .subst_scalar("hbar", &rat_int(0))
                .subst_scalar("x", &rat_int(0));
            limit[(r, c)] = RatFn::from_poly(value);
        }
    }
    nilpotent_jordan_type(&limit)
}

/// Reduction of a tensor product of two irreducibles, with the structure
/// checks that pin down its decomposition.
#[derive(Clone, Debug)]
pub struct ClebschReport {
    pub m: i64,
    pub n: i64,
    pub labels: Vec<(i64, i64)>,
    pub casimir: Matrix<Poly>,
    /// Total weight -> dimension of the corresponding Casimir eigenspace.
    pub eigenspace_dims: BTreeMap<i64, usize>,
    /// Total weight -> number of basis labels with that weight sum.
    pub expected_dims: BTreeMap<i64, usize>,
    pub annihilator_vanishes: bool,
}

impl ClebschReport {
    pub fn multiplicities_match(&self) -> bool {
        self.eigenspace_dims == self.expected_dims
    }

    pub fn pass(&self) -> bool {
        self.annihilator_vanishes && self.multiplicities_match()
    }
}

/// Reduce `V_m (x) V_n` and verify it against the weight ladder
/// decomposition `V_{|m-n|} + V_{|m-n|+2} + ... + V_{m+n}`:
/// the product of the summands' Casimir annihilators kills the matrix, and
/// each eigenvalue's eigenspace dimension matches the count of basis labels
/// with that total weight.
pub fn clebsch_convolution(m: i64, n: i64) -> Result<ClebschReport, Error> {
    let rep = TensorRep::new(Irrep::new(m)?, Irrep::new(n)?);
    let (labels, casimir) = casimir_matrix(&rep);

    let mut expected_dims: BTreeMap<i64, usize> = BTreeMap::new();
    for &(i1, i2) in &labels {
        *expected_dims.entry(i1 + i2).or_insert(0) += 1;
    }

    // Annihilator factors of each summand V_k, all multiplied together.
    let mut product_weights = Vec::new();
    let mut k = (m - n).abs();
    while k <= m + n {
        let mut i = -k;
        while i <= k {
            product_weights.push(i);
            i += 2;
        }
        k += 2;
    }
    let annihilator_vanishes = annihilator_product_vanishes(&casimir, &product_weights);

    let dim = labels.len();
    let rat_mat = casimir.map(|p| RatFn::from_poly(p.clone()));
    let mut eigenspace_dims = BTreeMap::new();
    for &total in expected_dims.keys() {
        let shift = RatFn::from_poly(casimir_eigenvalue(total));
        let mut shifted = rat_mat.clone();
        for d in 0..dim {
            shifted[(d, d)] = shifted[(d, d)].clone() - shift.clone();
        }
        eigenspace_dims.insert(total, kernel(&shifted).len());
    }

    Ok(ClebschReport {
        m,
        n,
        labels,
        casimir,
        eigenspace_dims,
        expected_dims,
        annihilator_vanishes,
    })
}

/// Rank over the fraction field of the reduced Casimir matrix shifted by
/// the eigenvalue of a single line; used for the exactness spot checks.
pub fn shifted_rank(mat: &Matrix<Poly>, total: i64) -> usize {
    let dim = mat.nrows();
    let mut shifted = mat.map(|p| RatFn::from_poly(p.clone()));
    let eig = RatFn::from_poly(casimir_eigenvalue(total));
    for d in 0..dim {
        shifted[(d, d)] = shifted[(d, d)].clone() - eig.clone();
    }
    rank(&shifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly_x;
    use num_traits::One;

    #[test]
    fn reduce_one_step() {
        // m_{-3} (x) v_0 in the tensor with V_2 reduces to
        // tbar_0 - 2 hbar tbar_{-2}.
        let rep = Irrep::new(2).unwrap();
        let v: TensorVec<Irrep, Poly> = TensorVec::basis(-3, 0);
        let red = coinvariant_reduce(&rep, &v);
        assert_eq!(red.get(&0), Some(&poly_int(1)));
        assert_eq!(red.get(&-2), Some(&poly_hbar().scale(&rat_int(-2))));
        assert_eq!(red.len(), 2);
    }

    #[test]
    fn reduce_is_order_independent_on_a_sample() {
        let rep = Irrep::new(3).unwrap();
        let mut v: TensorVec<Irrep, Poly> = TensorVec::basis(-7, 3);
        v.add_term((-5, 1), poly_x());
        v.add_term((-3, -1), poly_hbar());
        let base = coinvariant_reduce(&rep, &v);
        // Always rewrite the largest candidate index instead of the smallest.
        let alt = coinvariant_reduce_picked(&rep, &v, |k| k - 1);
        assert_eq!(base, alt);
        // And an interleaved choice.
        let mut toggle = false;
        let alt2 = coinvariant_reduce_picked(&rep, &v, |k| {
            toggle = !toggle;
            if toggle {
                0
            } else {
                k / 2
            }
        });
        assert_eq!(base, alt2);
    }

    #[test]
    fn reduction_commutes_with_the_rewrite_relation() {
        // (f - 1) applied to anything reduces to zero.
        let rep = Irrep::new(2).unwrap();
        for l in rep.labels() {
            for j in [-1i64, -3, -5] {
                let v: TensorVec<Irrep, Poly> = TensorVec::basis(j, l);
                let fv = v.act_gen(&rep, Gen::F);
                let diff = fv.sub(&v);
                assert!(coinvariant_reduce(&rep, &diff).is_empty());
            }
        }
    }

    #[test]
    fn casimir_matrix_matches_closed_form() {
        for n in 0..=4i64 {
            let phi = PhiModule::new(n).unwrap();
            assert_eq!(phi.casimir(), &expected_casimir_matrix(n), "n = {n}");
        }
    }

    #[test]
    fn annihilator_vanishes_small() {
        for n in 0..=3i64 {
            assert!(PhiModule::new(n).unwrap().annihilator_vanishes(), "n = {n}");
        }
    }

    #[test]
    fn annihilator_needs_every_factor() {
        // Dropping one weight from the product must leave a nonzero matrix:
        // the diagonal entries are pairwise distinct.
        let phi = PhiModule::new(2).unwrap();
        let partial: Vec<i64> = vec![-2, 0];
        assert!(!annihilator_product_vanishes(phi.casimir(), &partial));
    }

    #[test]
    fn split_n1_explicit() {
        // s_1 = t_1 and s_{-1} = t_{-1} - (1/x) f . s_1 expands over tbar as
        // tbar_{-1} - (1/x) tbar_1.
        let split = highest_weight_split(1).unwrap();
        assert_eq!(split.labels(), &[-1, 1]);
        let s1 = &split.vectors()[1];
        let t1: TensorVec<Irrep, RatFn> = TensorVec::top(1);
        assert_eq!(s1, &t1);
        let sm = split.reduced_matrix();
        let inv_x = RatFn::new(poly_int(1), poly_x());
        assert_eq!(sm[(0, 0)], RatFn::one());
        assert_eq!(sm[(1, 0)], -inv_x);
        assert_eq!(sm[(0, 1)], RatFn::zero());
        assert_eq!(sm[(1, 1)], RatFn::one());
    }

    #[test]
    fn split_vectors_are_killed_by_e() {
        for n in 0..=3i64 {
            let rep = Irrep::new(n).unwrap();
            let split = highest_weight_split(n).unwrap();
            for s in split.vectors() {
                assert!(s.act_gen(&rep, Gen::E).is_zero(), "n = {n}");
            }
        }
    }

    #[test]
    fn split_reduced_matrix_is_unitriangular() {
        for n in 0..=4i64 {
            let split = highest_weight_split(n).unwrap();
            let m = split.reduced_matrix();
            for r in 0..m.nrows() {
                for c in 0..m.ncols() {
                    if r == c {
                        assert!(m[(r, c)].is_one(), "n = {n} diagonal");
                    } else if r < c {
                        assert!(m[(r, c)].is_zero(), "n = {n} below-label entries");
                    }
                }
            }
        }
    }

    /// Independent construction of the splitting by the downward recursion
    /// `s_i = t_i + sum_k b_k f^k s_{i+2k}` with
    /// `b_1 = -((n+i+2)/2) / (x + (i+1) hbar)` and
    /// `b_k = ((n+i+2)/2) b'_{k-1} / (k (x + (i+k) hbar))`, `b'` the previous
    /// level's coefficients.
    fn split_by_recursion(n: i64) -> Vec<TensorVec<Irrep, RatFn>> {
        let rep = Irrep::new(n).unwrap();
        let labels: Vec<i64> = (-n..=n).step_by(2).collect();
        let mut vecs: BTreeMap<i64, TensorVec<Irrep, RatFn>> = BTreeMap::new();
        let mut coeffs: BTreeMap<i64, Vec<RatFn>> = BTreeMap::new();
        for &i in labels.iter().rev() {
            let kmax = ((n - i) / 2) as usize;
            let mut b: Vec<RatFn> = Vec::new();
            let half = rat_int((n + i + 2) / 2);
            for k in 1..=kmax {
                let den = x_plus_k_hbar(i + k as i64).scale(&rat_int(k as i64));
                let num = if k == 1 {
                    RatFn::from_poly(poly_int(-(n + i + 2) / 2))
                } else {
                    let prev = &coeffs[&(i + 2)][k - 2];
                    prev.clone() * RatFn::from_poly(poly_int(1).scale(&half))
                };
                b.push(num / RatFn::from_poly(den));
            }
            let mut s: TensorVec<Irrep, RatFn> = TensorVec::top(i);
            for (k, bk) in b.iter().enumerate() {
                let mut fk = vecs[&(i + 2 * (k as i64 + 1))].clone();
                for _ in 0..=k {
                    fk = fk.act_gen(&rep, Gen::F);
                }
                s = s.add(&fk.scale(bk));
            }
            coeffs.insert(i, b);
            vecs.insert(i, s);
        }
        labels.iter().map(|i| vecs[i].clone()).collect()
    }

    #[test]
    fn split_matches_recursion_oracle() {
        for n in [1i64, 2, 3] {
            let split = highest_weight_split(n).unwrap();
            let oracle = split_by_recursion(n);
            for (s, o) in split.vectors().iter().zip(&oracle) {
                assert_eq!(s, o, "n = {n}");
            }
        }
    }

    #[test]
    fn idiot_expansion_small_cases() {
        // n = 1: c_{-1} = 1, c_1 = 1/x.
        let c = idiot_expansion(1).unwrap();
        assert_eq!(c[&-1], RatFn::one());
        assert_eq!(c[&1], RatFn::new(poly_int(1), poly_x()));
        // n = 2: c_0 has the single factor x - hbar; c_2 has x(x + hbar).
        let c = idiot_expansion(2).unwrap();
        assert_eq!(c[&-2], RatFn::one());
        assert_eq!(c[&0], RatFn::new(poly_int(1), poly_x() - poly_hbar()));
        assert_eq!(c[&2], RatFn::new(poly_int(1), poly_x() * (poly_x() + poly_hbar())));
        // Both agree with the closed form.
        for n in [1i64, 2] {
            let c = idiot_expansion(n).unwrap();
            for (&i, got) in &c {
                assert_eq!(got, &idiot_coefficient(n, i), "n = {n}, i = {i}");
            }
        }
    }

    #[test]
    fn quasiclassical_jordan_is_one_block() {
        for n in 0..=3i64 {
            assert_eq!(quasiclassical_jordan(n).unwrap(), vec![n as usize + 1], "n = {n}");
        }
    }

    #[test]
    fn negative_weight_is_a_domain_error() {
        assert!(matches!(PhiModule::new(-1), Err(Error::Domain(_))));
        assert!(matches!(idiot_expansion(-2), Err(Error::Domain(_))));
    }

    #[test]
    fn clebsch_1_1() {
        let report = clebsch_convolution(1, 1).unwrap();
        assert!(report.annihilator_vanishes);
        assert_eq!(
            report.expected_dims,
            BTreeMap::from([(-2, 1), (0, 2), (2, 1)])
        );
        assert!(report.multiplicities_match());
        assert!(report.pass());
    }

    #[test]
    fn clebsch_with_trivial_factor_is_the_plain_reduction() {
        let report = clebsch_convolution(2, 0).unwrap();
        let phi = PhiModule::new(2).unwrap();
        assert_eq!(&report.casimir, phi.casimir());
        let report = clebsch_convolution(0, 2).unwrap();
        assert_eq!(&report.casimir, phi.casimir());
    }

    #[test]
    fn rank_additivity_proxy() {
        // Shifting by the top eigenvalue drops the rank by exactly one copy
        // of each summand containing that weight: for V_1 (x) V_1 the
        // weight 2 sits only in the V_2 summand.
        let report = clebsch_convolution(1, 1).unwrap();
        let dim = report.labels.len();
        assert_eq!(shifted_rank(&report.casimir, 2), dim - 1);
        // Weight 0 sits in both summands V_0 and V_2.
        assert_eq!(shifted_rank(&report.casimir, 0), dim - 2);
    }
}
