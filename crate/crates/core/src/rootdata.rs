//! Root systems of small rank and their Weyl-group combinatorics.
//!
//! Weights are integer coordinate vectors in the fundamental-weight basis.
//! The Cartan matrix convention: simple root `alpha_j` has coordinate vector
//! equal to column `j` of the Cartan matrix, and the simple reflection acts
//! by `s_j(w) = w - w_j * column_j`.  Everything downstream (orbits, Molien
//! series, Freudenthal multiplicities) is computed from the matrix alone, so
//! a custom Cartan matrix gets the same treatment as the built-in types.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::{One, Signed, Zero};

use crate::{rat_int, Error, Rat};

pub type Weight = Vec<i64>;

#[derive(Clone, Debug)]
pub struct RootSystem {
    tag: String,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// Symmetrizing factors: d[i] * C[i][j] = d[j] * C[j][i].
    sym: Vec<Rat>,
    /// Gram matrix of the fundamental weights, (omega_i, omega_j).
    gram: Vec<Vec<Rat>>,
    /// Every Weyl element as its action matrix on weight coordinates.
    elements: Vec<Vec<Vec<i64>>>,
    positive_roots: Vec<Weight>,
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

fn mat_apply(m: &[Vec<i64>], w: &[i64]) -> Weight {
    m.iter()
        .map(|row| row.iter().zip(w).map(|(a, b)| a * b).sum())
        .collect()
}

fn det_i64(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => {
            // Cofactor expansion along the first row; ranks here are tiny.
            let mut d = 0;
            for j in 0..n {
                if m[0][j] == 0 {
                    continue;
                }
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                d += sign * m[0][j] * det_i64(&minor);
            }
            d
        }
    }
}

/// Invert a square rational matrix by Gauss-Jordan elimination.
fn invert_rat(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("singular Cartan matrix");
        a.swap(c, p);
        inv.swap(c, p);
        let pivot = a[c][c].clone();
        for j in 0..n {
            a[c][j] = &a[c][j] / &pivot;
            inv[c][j] = &inv[c][j] / &pivot;
        }
        for r in 0..n {
            if r == c || a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].clone();
            for j in 0..n {
                a[r][j] = &a[r][j] - &(&f * &a[c][j]);
                inv[r][j] = &inv[r][j] - &(&f * &inv[c][j]);
            }
        }
    }
    inv
}

impl RootSystem {
    pub fn from_cartan(tag: &str, cartan: Vec<Vec<i64>>) -> Result<Self, Error> {
        let rank = cartan.len();
        if cartan.iter().any(|row| row.len() != rank) {
            return Err(Error::InvalidInput("Cartan matrix must be square".into()));
        }
        for i in 0..rank {
            if cartan[i][i] != 2 {
                return Err(Error::InvalidInput("Cartan diagonal must be 2".into()));
            }
            for j in 0..rank {
                if i != j {
                    if cartan[i][j] > 0 {
                        return Err(Error::InvalidInput(
                            "Cartan off-diagonal entries must be <= 0".into(),
                        ));
                    }
                    if (cartan[i][j] == 0) != (cartan[j][i] == 0) {
                        return Err(Error::InvalidInput(
                            "Cartan zero pattern must be symmetric".into(),
                        ));
                    }
                }
            }
        }

        // Symmetrizers by propagation along the Dynkin graph.
        let mut sym: Vec<Option<Rat>> = vec![None; rank];
        for start in 0..rank {
            if sym[start].is_some() {
                continue;
            }
            sym[start] = Some(Rat::one());
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                let di = sym[i].clone().unwrap();
                for j in 0..rank {
                    if i != j && cartan[i][j] != 0 && sym[j].is_none() {
                        // d_j = d_i * C[i][j] / C[j][i]
                        sym[j] = Some(&di * rat_int(cartan[i][j]) / rat_int(cartan[j][i]));
                        queue.push_back(j);
                    }
                }
            }
        }
        let sym: Vec<Rat> = sym.into_iter().map(Option::unwrap).collect();
        for i in 0..rank {
            for j in 0..rank {
                if &sym[i] * rat_int(cartan[i][j]) != &sym[j] * rat_int(cartan[j][i]) {
                    return Err(Error::InvalidInput("Cartan matrix is not symmetrizable".into()));
                }
            }
        }

        // (omega_i, omega_j) = d_i * (C^{-1})_{ij}
        let cartan_rat: Vec<Vec<Rat>> = cartan
            .iter()
            .map(|row| row.iter().map(|&v| rat_int(v)).collect())
            .collect();
        let cinv = invert_rat(&cartan_rat);
        let gram: Vec<Vec<Rat>> = (0..rank)
            .map(|i| (0..rank).map(|j| &sym[i] * &cinv[i][j]).collect())
            .collect();

        // Enumerate the Weyl group by closing the simple reflections under
        // multiplication.
        let refl: Vec<Vec<Vec<i64>>> = (0..rank)
            .map(|j| {
                (0..rank)
                    .map(|i| {
                        (0..rank)
                            .map(|k| {
                                let mut v = i64::from(i == k);
                                if k == j {
                                    v -= cartan[i][j];
                                }
                                v
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let identity: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|k| i64::from(i == k)).collect())
            .collect();
        let mut seen = BTreeSet::from([identity.clone()]);
        let mut elements = vec![identity];
        let mut frontier = 0;
        while frontier < elements.len() {
            let current = elements[frontier].clone();
            frontier += 1;
            for s in &refl {
                let next = mat_mul(s, &current);
                if seen.insert(next.clone()) {
                    elements.push(next);
                }
            }
            if elements.len() > 100_000 {
                return Err(Error::InvalidInput("Weyl group too large or infinite".into()));
            }
        }

        let mut system = RootSystem {
            tag: tag.to_string(),
            rank,
            cartan,
            sym,
            gram,
            elements,
            positive_roots: Vec::new(),
        };

        // All roots are the orbits of the simple roots; a root is positive
        // exactly when its simple-root coordinates are all nonnegative.
        let mut roots = BTreeSet::new();
        for j in 0..rank {
            let alpha: Weight = (0..rank).map(|i| system.cartan[i][j]).collect();
            for w in system.weyl_orbit(&alpha) {
                roots.insert(w);
            }
        }
        let positive: Vec<Weight> = roots
            .into_iter()
            .filter(|r| {
                system
                    .in_simple_root_basis(r)
                    .iter()
                    .all(|c| !c.is_negative())
            })
            .collect();
        system.positive_roots = positive;
        Ok(system)
    }

    /// Built-in type by tag: "A1", "A2", "B2", "G2".
    pub fn builtin(tag: &str) -> Result<Self, Error> {
        let cartan = match tag {
            "A1" => vec![vec![2]],
            "A2" => vec![vec![2, -1], vec![-1, 2]],
            "B2" => vec![vec![2, -1], vec![-2, 2]],
            "G2" => vec![vec![2, -3], vec![-1, 2]],
            _ => {
                return Err(Error::InvalidInput(format!(
                    "unknown root system tag {tag:?} (expected A1, A2, B2 or G2)"
                )))
            }
        };
        Self::from_cartan(tag, cartan)
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn weyl_order(&self) -> usize {
        self.elements.len()
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Symmetrizing factors `d_i` with `d_i C_ij = d_j C_ji`, normalized so
    /// the first factor of each Dynkin component is 1.
    pub fn symmetrizers(&self) -> &[Rat] {
        &self.sym
    }

    pub fn rho(&self) -> Weight {
        vec![1; self.rank]
    }

    pub fn simple_root(&self, j: usize) -> Weight {
        (0..self.rank).map(|i| self.cartan[i][j]).collect()
    }

    /// Coordinates of a weight in the simple-root basis (rational in general).
    pub fn in_simple_root_basis(&self, w: &[i64]) -> Vec<Rat> {
        // Solve C * c = w.
        let cinv_scaled: Vec<Vec<Rat>> = invert_rat(
            &self
                .cartan
                .iter()
                .map(|row| row.iter().map(|&v| rat_int(v)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        );
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| &cinv_scaled[i][j] * rat_int(w[j]))
                    .fold(Rat::zero(), |a, b| a + b)
            })
            .collect()
    }

    pub fn simple_reflection(&self, j: usize, w: &[i64]) -> Weight {
        let mut out = w.to_vec();
        let c = w[j];
        for i in 0..self.rank {
            out[i] -= c * self.cartan[i][j];
        }
        out
    }

    pub fn weyl_orbit(&self, w: &[i64]) -> BTreeSet<Weight> {
        let mut orbit = BTreeSet::from([w.to_vec()]);
        let mut queue = VecDeque::from([w.to_vec()]);
        while let Some(cur) = queue.pop_front() {
            for j in 0..self.rank {
                let next = self.simple_reflection(j, &cur);
                if orbit.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        orbit
    }

    pub fn is_dominant(&self, w: &[i64]) -> bool {
        w.iter().all(|&c| c >= 0)
    }

    /// The dominant representative of the W-orbit of `w`.
    pub fn dominant_representative(&self, w: &[i64]) -> Weight {
        let mut cur = w.to_vec();
        loop {
            match (0..self.rank).find(|&j| cur[j] < 0) {
                None => return cur,
                Some(j) => cur = self.simple_reflection(j, &cur),
            }
        }
    }

    /// Symmetric W-invariant form in fundamental-weight coordinates.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if b[j] != 0 {
                    acc += rat_int(a[i]) * rat_int(b[j]) * &self.gram[i][j];
                }
            }
        }
        acc
    }

    /// Degrees of the fundamental W-invariant polynomials, extracted from the
    /// Molien series (1/|W|) sum_w 1/det(1 - q w) = prod_i 1/(1 - q^{d_i}).
    pub fn invariant_degrees(&self) -> Result<Vec<usize>, Error> {
        let trunc = 40usize;
        // Sum the expansions of 1/det(1 - q M_w) over the group.
        let mut total = vec![Rat::zero(); trunc + 1];
        for m in &self.elements {
            // det(1 - q M) as a polynomial in q of degree <= rank.
            let charpoly = self.det_one_minus_q(m);
            let inv = invert_series(&charpoly, trunc);
            for (k, c) in inv.into_iter().enumerate() {
                total[k] = &total[k] + &c;
            }
        }
        let order = rat_int(self.elements.len() as i64);
        for c in total.iter_mut() {
            *c = &*c / &order;
        }
        // Peel off factors 1/(1-q^d), smallest degree first.
        let mut degrees = Vec::new();
        let mut series = total;
        for _ in 0..self.rank {
            let d = (1..=trunc)
                .find(|&k| !series[k].is_zero())
                .ok_or_else(|| Error::Domain("Molien series truncated too early".into()))?;
            degrees.push(d);
            // Multiply by (1 - q^d) in place.
            for k in (d..=trunc).rev() {
                let lower = series[k - d].clone();
                series[k] = &series[k] - &lower;
            }
        }
        if series[0] != Rat::one() || series[1..].iter().any(|c| !c.is_zero()) {
            return Err(Error::Domain(
                "Molien series is not a product of rank many geometric factors".into(),
            ));
        }
        degrees.sort_unstable();
        Ok(degrees)
    }

    /// det(1 - q M) as coefficient list in q.
    fn det_one_minus_q(&self, m: &[Vec<i64>]) -> Vec<Rat> {
        // Entries are linear in q; expand the determinant by permutations.
        // Rank is at most a handful, so brute force over permutations is fine.
        let n = self.rank;
        let mut result = vec![Rat::zero(); n + 1];
        let mut perm: Vec<usize> = (0..n).collect();
        permute_det(&mut perm, 0, 1, m, &mut result);
        result
    }

    /// Weights of the irreducible with highest weight `lambda`, with
    /// multiplicities, by the Freudenthal recursion.
    pub fn weight_system(&self, lambda: &[i64]) -> Result<BTreeMap<Weight, u64>, Error> {
        if !self.is_dominant(lambda) {
            return Err(Error::Domain(format!(
                "highest weight {lambda:?} is not dominant"
            )));
        }
        // Dominant weights mu <= lambda, collected by walking down simple
        // roots from lambda and saturating.
        let mut dominant: BTreeSet<Weight> = BTreeSet::new();
        let mut queue = VecDeque::from([lambda.to_vec()]);
        let mut visited = BTreeSet::from([lambda.to_vec()]);
        while let Some(cur) = queue.pop_front() {
            if self.is_dominant(&cur) {
                dominant.insert(cur.clone());
            }
            for j in 0..self.rank {
                let next: Weight = (0..self.rank)
                    .map(|i| cur[i] - self.cartan[i][j])
                    .collect();
                // Stay inside the hull: |next| <= |lambda| in the W-invariant norm.
                if self.inner(&next, &next) <= self.inner(lambda, lambda)
                    && visited.insert(next.clone())
                {
                    queue.push_back(next);
                }
            }
        }

        // Order dominant weights by decreasing height of lambda - mu.
        let mut dominant: Vec<Weight> = dominant.into_iter().collect();
        let height = |mu: &Weight| -> Rat {
            self.in_simple_root_basis(
                &(0..self.rank).map(|i| lambda[i] - mu[i]).collect::<Vec<_>>(),
            )
            .into_iter()
            .fold(Rat::zero(), |a, b| a + b)
        };
        dominant.sort_by(|a, b| {
            height(a)
                .partial_cmp(&height(b))
                .unwrap()
                .then_with(|| a.cmp(b))
        });

        let rho = self.rho();
        let add = |a: &[i64], b: &[i64]| -> Weight { a.iter().zip(b).map(|(x, y)| x + y).collect() };
        let lam_rho = add(lambda, &rho);
        let norm_lam = self.inner(&lam_rho, &lam_rho);

        let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
        for mu in &dominant {
            if mu == lambda {
                mult.insert(mu.clone(), 1);
                continue;
            }
            // Freudenthal: ((λ+ρ,λ+ρ) - (μ+ρ,μ+ρ)) m_μ
            //            = 2 Σ_{α>0} Σ_{k≥1} m_{μ+kα} (μ+kα, α)
            let mu_rho = add(mu, &rho);
            let denom = &norm_lam - &self.inner(&mu_rho, &mu_rho);
            let mut acc = Rat::zero();
            for alpha in &self.positive_roots {
                let mut k = 1i64;
                loop {
                    let shifted: Weight = (0..self.rank)
                        .map(|i| mu[i] + k * alpha[i])
                        .collect();
                    let dom = self.dominant_representative(&shifted);
                    let m = match mult.get(&dom) {
                        Some(&m) => m,
                        None => {
                            if self.inner(&shifted, &shifted) > self.inner(lambda, lambda) {
                                break;
                            }
                            0
                        }
                    };
                    if m > 0 {
                        acc += rat_int(m as i64 * 2) * self.inner(&shifted, alpha);
                    }
                    k += 1;
                }
            }
            if denom.is_zero() {
                return Err(Error::Domain("Freudenthal denominator vanished".into()));
            }
            let value = &acc / &denom;
            if !value.is_integer() || value.is_negative() {
                return Err(Error::Domain("Freudenthal produced a non-multiplicity".into()));
            }
            let value_u = value.to_integer().try_into().map_err(|_| {
                Error::Domain("weight multiplicity overflow".into())
            })?;
            if value_u > 0 {
                mult.insert(mu.clone(), value_u);
            }
        }

        // Spread dominant multiplicities over the orbits.
        let mut all = BTreeMap::new();
        for (mu, m) in &mult {
            for w in self.weyl_orbit(mu) {
                all.insert(w, *m);
            }
        }
        Ok(all)
    }

    pub fn weight_multiplicity(&self, lambda: &[i64], mu: &[i64]) -> Result<u64, Error> {
        let system = self.weight_system(lambda)?;
        Ok(system.get(&self.dominant_representative(mu)).copied().unwrap_or(0))
    }

    /// Dimension of the irreducible with highest weight `lambda` by the Weyl
    /// product formula.
    pub fn weyl_dim(&self, lambda: &[i64]) -> Result<u64, Error> {
        if !self.is_dominant(lambda) {
            return Err(Error::Domain(format!(
                "highest weight {lambda:?} is not dominant"
            )));
        }
        let rho = self.rho();
        let lam_rho: Weight = lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
        let mut num = Rat::one();
        let mut den = Rat::one();
        for alpha in &self.positive_roots {
            num *= self.inner(&lam_rho, alpha);
            den *= self.inner(&rho, alpha);
        }
        let dim = num / den;
        debug_assert!(dim.is_integer());
        Ok(dim.to_integer().try_into().expect("dimension fits in u64"))
    }

    pub fn elements(&self) -> &[Vec<Vec<i64>>] {
        &self.elements
    }

    pub fn apply_element(&self, w: usize, weight: &[i64]) -> Weight {
        mat_apply(&self.elements[w], weight)
    }

    pub fn element_det(&self, w: usize) -> i64 {
        det_i64(&self.elements[w])
    }
}

/// Accumulate the permutation expansion of det(1 - q M) into `result`.
fn permute_det(
    perm: &mut Vec<usize>,
    pos: usize,
    sign: i64,
    m: &[Vec<i64>],
    result: &mut Vec<Rat>,
) {
    let n = perm.len();
    if pos == n {
        // Product over i of ((i == perm[i]) as q^0 term) - q * M[i][perm[i]].
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[0] = rat_int(sign);
        let mut degree = 0;
        for i in 0..n {
            let constant = i64::from(i == perm[i]);
            let linear = -m[i][perm[i]];
            // Multiply coeffs by (constant + linear q).
            for k in (0..=degree + 1).rev() {
                let mut v = Rat::zero();
                if k <= degree {
                    v = &coeffs[k] * rat_int(constant);
                }
                if k > 0 && k - 1 <= degree {
                    v += &coeffs[k - 1] * rat_int(linear);
                }
                coeffs[k] = v;
            }
            degree += 1;
        }
        for k in 0..=n {
            result[k] = &result[k] + &coeffs[k];
        }
        return;
    }
    for i in pos..n {
        perm.swap(pos, i);
        let s = if i == pos { sign } else { -sign };
        permute_det(perm, pos + 1, s, m, result);
        perm.swap(pos, i);
    }
}

/// Multiplicative inverse of a power series given by polynomial coefficients
/// with nonzero constant term, truncated at `trunc`.
fn invert_series(poly: &[Rat], trunc: usize) -> Vec<Rat> {
    let mut inv = vec![Rat::zero(); trunc + 1];
    let c0 = poly[0].clone();
    assert!(!c0.is_zero(), "series has no inverse");
    inv[0] = Rat::one() / &c0;
    for k in 1..=trunc {
        let mut acc = Rat::zero();
        for j in 1..=k.min(poly.len() - 1) {
            acc += &poly[j] * &inv[k - j];
        }
        inv[k] = -acc / &c0;
    }
    inv
}
