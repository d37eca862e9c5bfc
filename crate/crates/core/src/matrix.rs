//! Dense matrices over a ring element type, plus exact linear solving.
//!
//! Elimination is fraction-free (Bareiss): rows are cleared to polynomial
//! entries, every division along the way is exact, and back-substitution
//! reintroduces fractions only at the end.  The pivot rule is deterministic:
//! scan the current column top to bottom and take the first nonzero entry.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::poly::MultiPoly;
use crate::ratfunc::RatFunc;
use crate::scalar::{RingElem, Scalar};
use crate::Error;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: RingElem> Matrix<E> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![E::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = E::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<F: RingElem>(&self, f: impl Fn(&E) -> F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &E) -> Self {
        self.map(|e| e.clone() * c.clone())
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(E::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }
}

impl<E> std::ops::Index<(usize, usize)> for Matrix<E> {
    type Output = E;
    fn index(&self, (i, j): (usize, usize)) -> &E {
        &self.data[i * self.cols + j]
    }
}

impl<E> std::ops::IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        &mut self.data[i * self.cols + j]
    }
}

impl<E: RingElem> Add for Matrix<E> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .into_iter()
                .zip(rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<E: RingElem> Sub for Matrix<E> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .into_iter()
                .zip(rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<E: RingElem> Mul for Matrix<E> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let t = out[(i, j)].clone() + a.clone() * b.clone();
                    out[(i, j)] = t;
                }
            }
        }
        out
    }
}

/// Result of solving `M s = rhs` exactly.
#[derive(Clone, Debug, PartialEq)]
pub enum SolveOutcome<T: Scalar> {
    /// A particular solution; unique when `kernel_dim == 0`.
    Solution { particular: Vec<RatFunc<T>>, kernel_dim: usize },
    /// No solution exists (distinct from a zero kernel).
    Inconsistent,
}

/// Row echelon data over the fraction field, computed fraction-free.
struct Echelon<T> {
    mat: Matrix<MultiPoly<T>>,
    /// pivots[k] = (row, col) of the k-th pivot.
    pivots: Vec<(usize, usize)>,
}

fn clear_rows<T: Scalar>(m: &Matrix<RatFunc<T>>, rhs: Option<&[RatFunc<T>]>) -> (Matrix<MultiPoly<T>>, Option<Vec<MultiPoly<T>>>) {
    let cols = m.ncols();
    let mut out = Matrix::zero(m.nrows(), cols);
    let mut out_rhs = rhs.map(|_| vec![MultiPoly::zero(); m.nrows()]);
    for i in 0..m.nrows() {
        let mut lcm = MultiPoly::one();
        for j in 0..cols {
            lcm = MultiPoly::lcm(&lcm, m[(i, j)].den());
        }
        if let Some(r) = rhs {
            lcm = MultiPoly::lcm(&lcm, r[i].den());
        }
        for j in 0..cols {
            let e = &m[(i, j)];
            let scaled = e.num().clone() * lcm.exact_div(e.den()).expect("denominator divides row lcm");
            out[(i, j)] = scaled;
        }
        if let (Some(r), Some(or)) = (rhs, out_rhs.as_mut()) {
            or[i] = r[i].num().clone() * lcm.exact_div(r[i].den()).expect("denominator divides row lcm");
        }
    }
    (out, out_rhs)
}

/// Bareiss forward elimination in place; returns pivot list.  `rhs`, when
/// present, is carried along as an extra column.
fn bareiss<T: Scalar>(mat: &mut Matrix<MultiPoly<T>>, mut rhs: Option<&mut Vec<MultiPoly<T>>>) -> Vec<(usize, usize)> {
    let (rows, cols) = (mat.nrows(), mat.ncols());
    let mut pivots = Vec::new();
    let mut prev = MultiPoly::<T>::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // First nonzero entry in this column at or below row r.
        let Some(p) = (r..rows).find(|&i| !mat[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = mat[(p, j)].clone();
                mat[(p, j)] = mat[(r, j)].clone();
                mat[(r, j)] = tmp;
            }
            if let Some(v) = rhs.as_deref_mut() {
                v.swap(p, r);
            }
        }
        let pivot = mat[(r, c)].clone();
        for i in (r + 1)..rows {
            let head = mat[(i, c)].clone();
            for j in 0..cols {
                let t = if j <= c {
                    if j == c { MultiPoly::zero() } else { mat[(i, j)].clone() }
                } else {
                    let raw = pivot.clone() * mat[(i, j)].clone() - head.clone() * mat[(r, j)].clone();
                    raw.exact_div(&prev).expect("Bareiss division is exact")
                };
                mat[(i, j)] = t;
            }
            if let Some(v) = rhs.as_deref_mut() {
                let raw = pivot.clone() * v[i].clone() - head.clone() * v[r].clone();
                v[i] = raw.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        pivots.push((r, c));
        prev = pivot;
        r += 1;
    }
    pivots
}

fn echelon<T: Scalar>(m: &Matrix<RatFunc<T>>) -> Echelon<T> {
    let (mut mat, _) = clear_rows(m, None);
    let pivots = bareiss(&mut mat, None);
    Echelon { mat, pivots }
}

pub fn rank<T: Scalar>(m: &Matrix<RatFunc<T>>) -> usize {
    echelon(m).pivots.len()
}

/// Solve `M s = rhs` over the fraction field.  Free variables, if any, are
/// set to zero in the particular solution.
pub fn solve<T: Scalar>(
    m: &Matrix<RatFunc<T>>,
    rhs: &[RatFunc<T>],
) -> Result<SolveOutcome<T>, Error> {
    assert_eq!(rhs.len(), m.nrows(), "rhs length mismatch");
    let (mut mat, cleared) = clear_rows(m, Some(rhs));
    let mut b = cleared.unwrap();
    let pivots = bareiss(&mut mat, Some(&mut b));
    let rows = mat.nrows();
    let cols = mat.ncols();
    // Rows below the last pivot are zero; a nonzero rhs there means no solution.
    for i in pivots.len()..rows {
        if !b[i].is_zero() {
            return Ok(SolveOutcome::Inconsistent);
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut x = vec![RatFunc::<T>::zero(); cols];
    for &(r, c) in pivots.iter().rev() {
        let mut acc = RatFunc::from_poly(b[r].clone());
        for j in (c + 1)..cols {
            if !mat[(r, j)].is_zero() && !x[j].is_zero() {
                acc = acc - RatFunc::from_poly(mat[(r, j)].clone()) * x[j].clone();
            }
        }
        x[c] = acc / RatFunc::from_poly(mat[(r, c)].clone());
    }
    let kernel_dim = cols - pivot_cols.len();
    debug_assert!({
        let check = m.mul_vec(&x);
        check.iter().zip(rhs).all(|(a, b)| a == b)
    });
    Ok(SolveOutcome::Solution { particular: x, kernel_dim })
}

/// Basis of the right kernel of `M`, each vector normalized so its first
/// nonzero entry is 1.  Empty when the kernel is zero.
pub fn kernel<T: Scalar>(m: &Matrix<RatFunc<T>>) -> Vec<Vec<RatFunc<T>>> {
    let ech = echelon(m);
    let cols = m.ncols();
    let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut v = vec![RatFunc::<T>::zero(); cols];
        v[fc] = RatFunc::one();
        for &(r, c) in ech.pivots.iter().rev() {
            let mut acc = RatFunc::<T>::zero();
            for j in (c + 1)..cols {
                if !ech.mat[(r, j)].is_zero() && !v[j].is_zero() {
                    acc = acc - RatFunc::from_poly(ech.mat[(r, j)].clone()) * v[j].clone();
                }
            }
            v[c] = acc / RatFunc::from_poly(ech.mat[(r, c)].clone());
        }
        // Normalize: first nonzero entry becomes 1.
        if let Some(first) = v.iter().find(|e| !e.is_zero()).cloned() {
            let inv = first.inverse();
            for e in v.iter_mut() {
                *e = e.clone() * inv.clone();
            }
        }
        debug_assert!(m.mul_vec(&v).iter().all(Zero::is_zero));
        basis.push(v);
    }
    basis
}

/// Jordan block sizes of a nilpotent matrix over an exact field, largest
/// first, from the rank sequence of its powers.
pub fn nilpotent_jordan_type<T: Scalar>(m: &Matrix<RatFunc<T>>) -> Result<Vec<usize>, Error> {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "jordan type needs a square matrix");
    let mut ranks = vec![n];
    let mut power = m.clone();
    for _ in 0..n {
        let r = rank(&power);
        ranks.push(r);
        if r == 0 {
            break;
        }
        power = power.clone() * m.clone();
    }
    if *ranks.last().unwrap() != 0 {
        return Err(Error::Domain("matrix is not nilpotent".into()));
    }
    // blocks of size >= k: ranks[k-1] - ranks[k]
    let mut at_least: Vec<usize> = Vec::new();
    for k in 1..ranks.len() {
        at_least.push(ranks[k - 1] - ranks[k]);
    }
    let mut sizes = Vec::new();
    for k in 0..at_least.len() {
        let next = at_least.get(k + 1).copied().unwrap_or(0);
        for _ in 0..at_least[k].saturating_sub(next) {
            sizes.push(k + 1);
        }
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(sizes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarSet;
    use crate::{Poly, Rat, RatFn};

    fn xh() -> VarSet {
        VarSet::new(vec!["x", "hbar"])
    }

    fn rat(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    fn x() -> Poly {
        Poly::var(&xh(), "x", rat(1))
    }

    fn hb() -> Poly {
        Poly::var(&xh(), "hbar", rat(1))
    }

    fn rf(p: Poly) -> RatFn {
        RatFn::from_poly(p)
    }

    #[test]
    fn triangular_solve() {
        // [[x, hbar], [0, x]] s = (1, 0)  =>  s = (1/x, 0)
        let m = Matrix::from_rows(vec![
            vec![rf(x()), rf(hb())],
            vec![RatFn::zero(), rf(x())],
        ]);
        let rhs = vec![RatFn::one(), RatFn::zero()];
        match solve(&m, &rhs).unwrap() {
            SolveOutcome::Solution { particular, kernel_dim } => {
                assert_eq!(kernel_dim, 0);
                assert_eq!(particular[0], RatFn::new(Poly::one(), x()));
                assert!(particular[1].is_zero());
            }
            SolveOutcome::Inconsistent => panic!("should be solvable"),
        }
    }

    #[test]
    fn kernel_of_row() {
        // [[1, 1]] has kernel spanned by (1, -1).
        let m = Matrix::from_rows(vec![vec![RatFn::one(), RatFn::one()]]);
        let k = kernel(&m);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][0], RatFn::one());
        assert_eq!(k[0][1], -RatFn::one());
    }

    #[test]
    fn inconsistent_vs_empty_kernel() {
        // x * s0 = 1 and x * s0 = 0 simultaneously: inconsistent.
        let m = Matrix::from_rows(vec![vec![rf(x())], vec![rf(x())]]);
        let out = solve(&m, &[RatFn::one(), RatFn::zero()]).unwrap();
        assert_eq!(out, SolveOutcome::Inconsistent);
        // Same matrix has zero kernel: distinct report.
        assert!(kernel(&m).is_empty());
    }

    #[test]
    fn solution_verified_by_substitution() {
        // Random-ish dense system with rational-function entries.
        let m = Matrix::from_rows(vec![
            vec![rf(x() + hb()), rf(hb()), RatFn::new(Poly::one(), x())],
            vec![rf(hb()), rf(x()), RatFn::zero()],
            vec![rf(x() * x()), rf(Poly::one()), rf(x() - hb())],
        ]);
        let rhs = vec![RatFn::one(), rf(hb()), rf(x())];
        match solve(&m, &rhs).unwrap() {
            SolveOutcome::Solution { particular, .. } => {
                let back = m.mul_vec(&particular);
                assert_eq!(back, rhs);
            }
            SolveOutcome::Inconsistent => panic!("generic system should solve"),
        }
    }

    #[test]
    fn jordan_of_single_nilpotent_block() {
        let mut m = Matrix::<RatFn>::zero(3, 3);
        m[(0, 1)] = RatFn::one();
        m[(1, 2)] = RatFn::one();
        assert_eq!(nilpotent_jordan_type(&m).unwrap(), vec![3]);
        let id = Matrix::<RatFn>::identity(2);
        assert!(nilpotent_jordan_type(&id).is_err());
    }

    #[test]
    fn rank_drops_on_dependent_rows() {
        let m = Matrix::from_rows(vec![
            vec![rf(x()), rf(hb())],
            vec![rf(x() * x()), rf(x() * hb())],
        ]);
        assert_eq!(rank(&m), 1);
    }
}
