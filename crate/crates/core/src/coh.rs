//! The topological side at rank 1: the cohomology module of the degree-`n`
//! orbit closure in the affine Grassmannian for PGL(2), its sl2-action, the
//! filtration generators, the lattice comparison against the algebra side,
//! and the normal-cone Hilbert series.
//!
//! The cohomology data is used in closed form; nothing sheaf-theoretic is
//! recomputed.  The comparison embeds both sides into the localized space
//! `(+)_j Q(x, hbar) . 1_j` and decides equality of the two `Q[x, hbar]`
//! lattices by exact linear algebra.

use num_traits::{One, Zero};

use crate::hilbert::{free_graded_hilbert, HilbertSeries};
use crate::kostant::highest_weight_split;
use crate::matrix::{nilpotent_jordan_type, solve, Matrix, SolveOutcome};
use crate::rootdata::RootSystem;
use crate::{poly_hbar, poly_int, poly_x, rat_int, x_plus_k_hbar, Error, Poly, Rat, RatFn};

/// The sl2-action on the cohomology of the degree-`n` orbit closure, plus
/// the filtration generator polynomials.  Matrices act on coordinate
/// columns over the weight basis `v_{-n}, ..., v_n` (ascending):
/// `h v_i = i v_i`, `e v_i = ((n+i+2)/2) v_{i+2}`,
/// `f v_i = ((n-i+2)/2) v_{i-2}`, images off the ladder dropped.
#[derive(Clone, Debug, PartialEq)]
pub struct CohModule {
    n: i64,
    labels: Vec<i64>,
    e: Matrix<Poly>,
    h: Matrix<Poly>,
    f: Matrix<Poly>,
    generators: Vec<Poly>,
}

impl CohModule {
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn e(&self) -> &Matrix<Poly> {
        &self.e
    }

    pub fn h(&self) -> &Matrix<Poly> {
        &self.h
    }

    pub fn f(&self) -> &Matrix<Poly> {
        &self.f
    }

    /// Filtration generators `g_i`, parallel to `labels`.
    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    /// `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f` as exact matrix identities.
    pub fn bracket_identities_hold(&self) -> bool {
        let ef = self.e.clone() * self.f.clone() - self.f.clone() * self.e.clone();
        let he = self.h.clone() * self.e.clone() - self.e.clone() * self.h.clone();
        let hf = self.h.clone() * self.f.clone() - self.f.clone() * self.h.clone();
        ef == self.h
            && he == self.e.scale(&poly_int(2))
            && hf == self.f.scale(&poly_int(-2))
    }

    /// Jordan block sizes of the (nilpotent) `e`-matrix, largest first.
    pub fn e_jordan_type(&self) -> Result<Vec<usize>, Error> {
        nilpotent_jordan_type(&self.e.map(|p| RatFn::from_poly(p.clone())))
    }
}

pub fn sl2_action(n: i64) -> Result<CohModule, Error> {
    if n < 0 {
        return Err(Error::Domain(format!(
            "highest weight must be nonnegative, got {n}"
        )));
    }
    let labels: Vec<i64> = (-n..=n).step_by(2).collect();
    let dim = labels.len();
    let index = |i: i64| -> Option<usize> {
        if i.abs() <= n && (i - n) % 2 == 0 {
            Some(((i + n) / 2) as usize)
        } else {
            None
        }
    };
    let mut e = Matrix::zero(dim, dim);
    let mut h = Matrix::zero(dim, dim);
    let mut f = Matrix::zero(dim, dim);
    for (col, &i) in labels.iter().enumerate() {
        if let Some(r) = index(i + 2) {
            e[(r, col)] = poly_int((n + i + 2) / 2);
        }
        h[(col, col)] = poly_int(i);
        if let Some(r) = index(i - 2) {
            f[(r, col)] = poly_int((n - i + 2) / 2);
        }
    }
    let generators = labels.iter().map(|&i| filtration_generator(n, i)).collect();
    Ok(CohModule { n, labels, e, h, f, generators })
}

/// `g_i = prod_{k=(i-n)/2}^{i-1} (x + k hbar)`, a product of `(n+i)/2`
/// linear factors; `g_{-n} = 1`.
pub fn filtration_generator(n: i64, i: i64) -> Poly {
    let mut g = poly_int(1);
    for k in (i - n) / 2..=(i - 1) {
        g = g * x_plus_k_hbar(k);
    }
    g
}

pub fn filtration_generators(n: i64) -> Result<Vec<(i64, Poly)>, Error> {
    if n < 0 {
        return Err(Error::Domain(format!(
            "highest weight must be nonnegative, got {n}"
        )));
    }
    Ok((-n..=n)
        .step_by(2)
        .map(|i| (i, filtration_generator(n, i)))
        .collect())
}

/// Result of comparing the two `Q[x, hbar]` lattices inside the localized
/// space.  Columns of the witness matrices expand one side's generators in
/// the other side's; the inclusion holds when every entry is polynomial.
#[derive(Clone, Debug)]
pub struct LatticeComparison {
    pub n: i64,
    /// Algebra-side generators written in the cohomology-side generators.
    pub alg_in_top: Matrix<RatFn>,
    /// Cohomology-side generators written in the algebra-side generators.
    pub top_in_alg: Matrix<RatFn>,
    pub alg_inside_top: bool,
    pub top_inside_alg: bool,
}

impl LatticeComparison {
    pub fn equal(&self) -> bool {
        self.alg_inside_top && self.top_inside_alg
    }
}

fn all_polynomial(m: &Matrix<RatFn>) -> bool {
    (0..m.nrows()).all(|r| m.row(r).iter().all(|e| e.as_poly().is_some()))
}

/// Compare the two lattice presentations of the reduced module inside
/// `(+)_j Q(x, hbar) . 1_j`, where `1_j` is the line of the reduced
/// splitting vector `sbar_j`:
///
/// - algebra side: the span of the reduced lines `tbar_i` expanded over the
///   splitting basis (columns of the inverse splitting matrix);
/// - cohomology side: the cyclic span of the generator under multiplication
///   by the shifted Casimir class `y`, whose value on the line `1_j` is
///   `j x + (j^2/2) hbar`; the generator matches the expansion of
///   `tbar_{-n}`, which is forced by requiring the identity on associated
///   graded pieces.
pub fn lattice_compare(n: i64) -> Result<LatticeComparison, Error> {
    let split = highest_weight_split(n)?;
    let labels = split.labels().to_vec();
    let dim = labels.len();
    let sbar = split.reduced_matrix();

    // Algebra lattice: columns of the inverse of the splitting matrix.
    let mut alg = Matrix::<RatFn>::zero(dim, dim);
    for col in 0..dim {
        let mut rhs = vec![RatFn::zero(); dim];
        rhs[col] = RatFn::one();
        match solve(sbar, &rhs)? {
            SolveOutcome::Solution { particular, kernel_dim } => {
                if kernel_dim != 0 {
                    return Err(Error::Domain("splitting matrix is singular".into()));
                }
                for (r, v) in particular.into_iter().enumerate() {
                    alg[(r, col)] = v;
                }
            }
            SolveOutcome::Inconsistent => {
                return Err(Error::Domain("splitting matrix is singular".into()));
            }
        }
    }

    // Cohomology lattice: generator v0 = expansion of tbar_{-n} (which is
    // exactly column 0 of `alg`), multiplied by powers of the class y.
    let y: Vec<RatFn> = labels
        .iter()
        .map(|&j| {
            RatFn::from_poly(
                poly_x().scale(&rat_int(j)) + poly_hbar().scale(&Rat::new((j * j).into(), 2.into())),
            )
        })
        .collect();
    let mut top = Matrix::<RatFn>::zero(dim, dim);
    let mut column: Vec<RatFn> = (0..dim).map(|r| alg[(r, 0)].clone()).collect();
    for m in 0..dim {
        for r in 0..dim {
            top[(r, m)] = column[r].clone();
        }
        if m + 1 < dim {
            for (r, entry) in column.iter_mut().enumerate() {
                *entry = entry.clone() * y[r].clone();
            }
        }
    }

    // top_in_alg = sbar * top: the algebra generators are the preimages of
    // the unit vectors under sbar, so coordinates in them are sbar-images.
    let top_in_alg = sbar.clone() * top.clone();

    // alg_in_top needs a solve per column.
    let mut alg_in_top = Matrix::<RatFn>::zero(dim, dim);
    for col in 0..dim {
        let rhs: Vec<RatFn> = (0..dim).map(|r| alg[(r, col)].clone()).collect();
        match solve(&top, &rhs)? {
            SolveOutcome::Solution { particular, kernel_dim } => {
                if kernel_dim != 0 {
                    return Err(Error::Domain(
                        "cohomology lattice generators are linearly dependent".into(),
                    ));
                }
                for (r, v) in particular.into_iter().enumerate() {
                    alg_in_top[(r, col)] = v;
                }
            }
            SolveOutcome::Inconsistent => {
                return Err(Error::Domain(
                    "cohomology lattice does not span the localized space".into(),
                ));
            }
        }
    }

    let alg_inside_top = all_polynomial(&alg_in_top);
    let top_inside_alg = all_polynomial(&top_in_alg);
    Ok(LatticeComparison { n, alg_in_top, top_in_alg, alg_inside_top, top_inside_alg })
}

/// Hilbert series of the normal cone to the diagonal, by the closed product
/// formula: free generators in degrees `{2 d_i} + {2 d_i - 2} + {2}` with
/// `d_i` the invariant degrees of the Weyl group.
pub fn normal_cone_hilbert(
    system: &RootSystem,
    max_degree: usize,
) -> Result<HilbertSeries, Error> {
    let degrees = system.invariant_degrees()?;
    let mut gens: Vec<usize> = Vec::with_capacity(2 * degrees.len() + 1);
    for &d in &degrees {
        gens.push(2 * d);
        gens.push(2 * d - 2);
    }
    gens.push(2);
    Ok(free_graded_hilbert(&gens, max_degree))
}
