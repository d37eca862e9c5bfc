//! Graph modules over the doubled torus: the combinatorial model of the
//! reduced bimodules for any supported root system.
//!
//! A graph model is a finite multiset of weights, each standing for the
//! structure sheaf of the graph of translation by that weight.  Convolution
//! adds weights; a Levi subset coarsens the model by central character; the
//! localized elements of [`p_alpha`] realize the invariant sections used in
//! the comparison argument at rank 1.

use std::collections::BTreeMap;

use num_traits::One;

use crate::poly::{MultiPoly, VarSet};
use crate::ratfunc::RatFunc;
use crate::rootdata::{RootSystem, Weight};
use crate::{Error, Rat};

/// Finite multiset of weights: `weight -> multiplicity >= 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphModel {
    tag: String,
    weights: BTreeMap<Weight, u64>,
}

impl GraphModel {
    pub fn new(tag: &str, weights: BTreeMap<Weight, u64>) -> Result<Self, Error> {
        if weights.values().any(|&m| m == 0) {
            return Err(Error::InvalidInput("graph model multiplicities must be positive".into()));
        }
        let rank = weights.keys().next().map(Vec::len);
        if let Some(r) = rank {
            if weights.keys().any(|w| w.len() != r) {
                return Err(Error::InvalidInput("graph model weights must share a rank".into()));
            }
        }
        Ok(GraphModel { tag: tag.to_string(), weights })
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn weights(&self) -> &BTreeMap<Weight, u64> {
        &self.weights
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.weights.values().sum()
    }
}

/// The graph model of the irreducible with the given highest weight:
/// support and multiplicities are its weight system.
pub fn graph_model(system: &RootSystem, highest: &[i64]) -> Result<GraphModel, Error> {
    let weights = system.weight_system(highest)?;
    GraphModel::new(system.tag(), weights)
}

/// Convolution: multiplicity of `w` is the additive convolution
/// `sum_{u + v = w} m_A(u) m_B(v)`.
pub fn graph_convolve(a: &GraphModel, b: &GraphModel) -> Result<GraphModel, Error> {
    if a.tag != b.tag {
        return Err(Error::InvalidInput(format!(
            "cannot convolve models over {} and {}",
            a.tag, b.tag
        )));
    }
    let mut out: BTreeMap<Weight, u64> = BTreeMap::new();
    for (u, &mu) in &a.weights {
        for (v, &mv) in &b.weights {
            let w: Weight = u.iter().zip(v).map(|(x, y)| x + y).collect();
            *out.entry(w).or_insert(0) += mu * mv;
        }
    }
    GraphModel::new(&a.tag, out)
}

/// Integer column echelon basis of the lattice spanned by `cols`: pivot rows
/// strictly increasing, pivots positive.  Small sizes only.
fn lattice_echelon(mut cols: Vec<Vec<i64>>, rows: usize) -> Vec<Vec<i64>> {
    let mut result = Vec::new();
    let mut cur = 0;
    for row in 0..rows {
        loop {
            let nz: Vec<usize> = (cur..cols.len()).filter(|&c| cols[c][row] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let &cmin = nz
                .iter()
                .min_by_key(|&&c| cols[c][row].abs())
                .expect("nonempty");
            for &c in &nz {
                if c == cmin {
                    continue;
                }
                let q = cols[c][row] / cols[cmin][row];
                if q != 0 {
                    for r in 0..rows {
                        cols[c][r] -= q * cols[cmin][r];
                    }
                }
            }
        }
        if let Some(c) = (cur..cols.len()).find(|&c| cols[c][row] != 0) {
            cols.swap(cur, c);
            if cols[cur][row] < 0 {
                for e in cols[cur].iter_mut() {
                    *e = -*e;
                }
            }
            result.push(cols[cur].clone());
            cur += 1;
        }
    }
    result
}

/// Canonical representative of `w` modulo the lattice with echelon basis
/// `ech`: every pivot coordinate is reduced into `[0, pivot)`.
fn reduce_mod_lattice(w: &[i64], ech: &[Vec<i64>]) -> Weight {
    let mut v = w.to_vec();
    for col in ech {
        let row = col.iter().position(|&x| x != 0).expect("echelon column is nonzero");
        let q = v[row].div_euclid(col[row]);
        if q != 0 {
            for (e, c) in v.iter_mut().zip(col) {
                *e -= q * c;
            }
        }
    }
    v
}

fn check_levi_indices(rank: usize, levi: &[usize]) -> Result<Vec<usize>, Error> {
    let mut sorted = levi.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != levi.len() {
        return Err(Error::InvalidInput("repeated Levi indices".into()));
    }
    if sorted.iter().any(|&i| i >= rank) {
        return Err(Error::InvalidInput(format!(
            "Levi index out of range for rank {rank}"
        )));
    }
    Ok(sorted)
}

/// The root system of the Levi given by a subset of simple roots: the
/// corresponding Cartan submatrix.
pub fn levi_system(system: &RootSystem, levi: &[usize]) -> Result<RootSystem, Error> {
    let levi = check_levi_indices(system.rank(), levi)?;
    let cartan: Vec<Vec<i64>> = levi
        .iter()
        .map(|&i| levi.iter().map(|&j| system.cartan()[i][j]).collect())
        .collect();
    let names: Vec<String> = levi.iter().map(|i| format!("{i}")).collect();
    RootSystem::from_cartan(&format!("{}-levi-{}", system.tag(), names.join(",")), cartan)
}

/// Group the model's weights by central character of the Levi (the class
/// modulo the Levi's root lattice) and restrict each group to Levi weight
/// coordinates.  Keys are canonical coset representatives in the ambient
/// coordinates.
pub fn levi_coarsen(
    system: &RootSystem,
    model: &GraphModel,
    levi: &[usize],
) -> Result<BTreeMap<Weight, GraphModel>, Error> {
    if system.tag() != model.tag() {
        return Err(Error::InvalidInput(format!(
            "model over {} does not live on {}",
            model.tag(),
            system.tag()
        )));
    }
    let levi = check_levi_indices(system.rank(), levi)?;
    let sub = levi_system(system, &levi)?;
    let rank = system.rank();
    let root_cols: Vec<Vec<i64>> = levi
        .iter()
        .map(|&j| (0..rank).map(|i| system.cartan()[i][j]).collect())
        .collect();
    let ech = lattice_echelon(root_cols, rank);
    let mut grouped: BTreeMap<Weight, BTreeMap<Weight, u64>> = BTreeMap::new();
    for (w, &m) in model.weights() {
        let coset = reduce_mod_lattice(w, &ech);
        let restricted: Weight = levi.iter().map(|&i| w[i]).collect();
        *grouped.entry(coset).or_default().entry(restricted).or_insert(0) += m;
    }
    grouped
        .into_iter()
        .map(|(coset, weights)| Ok((coset, GraphModel::new(sub.tag(), weights)?)))
        .collect()
}

/// Coarsening to `l` and then to `lp` (inside the Levi) partitions the
/// weights the same way as coarsening to `lp` directly, with identical
/// restricted models.  `lp` must be a subset of `l`.
pub fn transitivity_check(
    system: &RootSystem,
    model: &GraphModel,
    l: &[usize],
    lp: &[usize],
) -> Result<bool, Error> {
    let l = check_levi_indices(system.rank(), l)?;
    let lp = check_levi_indices(system.rank(), lp)?;
    if !lp.iter().all(|i| l.contains(i)) {
        return Err(Error::InvalidInput("second Levi is not contained in the first".into()));
    }
    let direct = levi_coarsen(system, model, &lp)?;
    let outer = levi_coarsen(system, model, &l)?;
    let sub = levi_system(system, &l)?;
    // Positions of lp inside l.
    let rel: Vec<usize> = lp
        .iter()
        .map(|i| l.iter().position(|j| j == i).expect("subset checked"))
        .collect();
    // Collect the composite blocks: multiset of restricted models, keyed by
    // nothing (the coset labels differ between the two routes, only the
    // partition is comparable).
    let mut composite_blocks: Vec<BTreeMap<Weight, u64>> = Vec::new();
    for inner_model in outer.values() {
        for block in levi_coarsen(&sub, inner_model, &rel)?.values() {
            composite_blocks.push(block.weights().clone());
        }
    }
    let mut direct_blocks: Vec<BTreeMap<Weight, u64>> =
        direct.values().map(|m| m.weights().clone()).collect();
    composite_blocks.sort();
    direct_blocks.sort();
    Ok(composite_blocks == direct_blocks)
}

/// Greedy decomposition of a rank-1 graph model into weight strings;
/// returns the highest weights, descending.  Fails when the multiset is not
/// a union of strings `{-n, -n+2, ..., n}`.
pub fn decompose_rank1(model: &GraphModel) -> Result<Vec<i64>, Error> {
    let mut remaining: BTreeMap<i64, u64> = BTreeMap::new();
    for (w, &m) in model.weights() {
        if w.len() != 1 {
            return Err(Error::InvalidInput("decompose_rank1 needs a rank-1 model".into()));
        }
        *remaining.entry(w[0]).or_insert(0) += m;
    }
    let mut out = Vec::new();
    while let Some((&top, _)) = remaining.iter().next_back() {
        if top < 0 {
            return Err(Error::Domain("weights do not form strings".into()));
        }
        let mut i = -top;
        while i <= top {
            match remaining.get_mut(&i) {
                Some(m) if *m > 0 => {
                    *m -= 1;
                    if *m == 0 {
                        remaining.remove(&i);
                    }
                }
                _ => return Err(Error::Domain("weights do not form strings".into())),
            }
            i += 2;
        }
        out.push(top);
    }
    Ok(out)
}

/// Element of the localized direct sum: weight -> rational-function
/// coefficient in the torus variables `t1, ..., tr` and `hbar`.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalizedElement {
    vars: VarSet,
    terms: BTreeMap<Weight, RatFunc<Rat>>,
}

impl LocalizedElement {
    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Weight, RatFunc<Rat>> {
        &self.terms
    }

    pub fn coeff(&self, w: &[i64]) -> Option<&RatFunc<Rat>> {
        self.terms.get(w)
    }
}

/// Torus variable list for a root system: `t1, ..., tr, hbar`.
pub fn torus_vars(rank: usize) -> VarSet {
    let mut names: Vec<String> = (1..=rank).map(|i| format!("t{i}")).collect();
    names.push("hbar".to_string());
    VarSet::new(names)
}

/// The invariant section attached to a lowest-weight vector of the
/// `alpha`-string: with `d = lambda(h_alpha) <= 0`,
///
/// `p_alpha = sum_{k=0}^{-d} chain_k * prod_{j=k+d}^{2k-1+d} (h_alpha + j hbar)^{-1} * 1_{lambda + k alpha}`
///
/// where `h_alpha` is the torus coordinate of the simple coroot (the
/// variable `t_{alpha+1}`) and `chain_k` scales the k-th raising image.
pub fn p_alpha(
    system: &RootSystem,
    lambda: &[i64],
    chain: &[Rat],
    alpha: usize,
) -> Result<LocalizedElement, Error> {
    if alpha >= system.rank() {
        return Err(Error::InvalidInput(format!(
            "simple root index {alpha} out of range"
        )));
    }
    if lambda.len() != system.rank() {
        return Err(Error::InvalidInput("weight rank mismatch".into()));
    }
    let d = lambda[alpha];
    if d > 0 {
        return Err(Error::Domain(format!(
            "lowest-weight pairing must be nonpositive, got {d}"
        )));
    }
    let kmax = (-d) as usize;
    if chain.len() != kmax + 1 {
        return Err(Error::InvalidInput(format!(
            "chain must supply {} coefficients, got {}",
            kmax + 1,
            chain.len()
        )));
    }
    let vars = torus_vars(system.rank());
    let t_alpha = MultiPoly::var(&vars, &format!("t{}", alpha + 1), Rat::one());
    let hbar = MultiPoly::var(&vars, "hbar", Rat::one());
    let alpha_vec = system.simple_root(alpha);
    let mut terms = BTreeMap::new();
    for (k, ck) in chain.iter().enumerate() {
        let weight: Weight = lambda
            .iter()
            .zip(&alpha_vec)
            .map(|(l, a)| l + k as i64 * a)
            .collect();
        let mut den = MultiPoly::constant(&vars, Rat::one());
        let lo = k as i64 + d;
        let hi = 2 * k as i64 - 1 + d;
        for j in lo..=hi {
            den = den * (t_alpha.clone() + hbar.clone().scale(&Rat::from_integer(j.into())));
        }
        let coeff = RatFunc::new(MultiPoly::constant(&vars, ck.clone()), den);
        if !num_traits::Zero::is_zero(&coeff) {
            terms.insert(weight, coeff);
        }
    }
    Ok(LocalizedElement { vars, terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kostant::idiot_coefficient;
    use crate::{rat_int, Poly};

    fn a1_model(n: i64) -> GraphModel {
        let a1 = RootSystem::builtin("A1").unwrap();
        graph_model(&a1, &[n]).unwrap()
    }

    #[test]
    fn model_of_irreducibles() {
        let m = a1_model(3);
        let expect: BTreeMap<Weight, u64> =
            [-3i64, -1, 1, 3].iter().map(|&i| (vec![i], 1)).collect();
        assert_eq!(m.weights(), &expect);

        let a2 = RootSystem::builtin("A2").unwrap();
        let adj = graph_model(&a2, &[1, 1]).unwrap();
        assert_eq!(adj.total_multiplicity(), 8);
        assert_eq!(adj.weights()[&vec![0, 0]], 2);
        assert_eq!(adj.weights().len(), 7);

        let trivial = graph_model(&a2, &[0, 0]).unwrap();
        assert_eq!(trivial.weights(), &BTreeMap::from([(vec![0, 0], 1)]));
    }

    #[test]
    fn convolution_facts() {
        let v1 = a1_model(1);
        let prod = graph_convolve(&v1, &v1).unwrap();
        let expect: BTreeMap<Weight, u64> =
            [(vec![-2i64], 1), (vec![0], 2), (vec![2], 1)].into_iter().collect();
        assert_eq!(prod.weights(), &expect);

        // Unit, commutativity, associativity, total multiplicativity.
        let unit = a1_model(0);
        assert_eq!(graph_convolve(&v1, &unit).unwrap(), v1);
        let v2 = a1_model(2);
        assert_eq!(
            graph_convolve(&v1, &v2).unwrap(),
            graph_convolve(&v2, &v1).unwrap()
        );
        let left = graph_convolve(&graph_convolve(&v1, &v2).unwrap(), &v1).unwrap();
        let right = graph_convolve(&v1, &graph_convolve(&v2, &v1).unwrap()).unwrap();
        assert_eq!(left, right);
        assert_eq!(
            graph_convolve(&v2, &v2).unwrap().total_multiplicity(),
            v2.total_multiplicity() * v2.total_multiplicity()
        );
    }

    #[test]
    fn convolution_rejects_mixed_types() {
        let a2 = RootSystem::builtin("A2").unwrap();
        let other = graph_model(&a2, &[1, 0]).unwrap();
        assert!(matches!(
            graph_convolve(&a1_model(1), &other),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn levi_torus_and_full() {
        let a2 = RootSystem::builtin("A2").unwrap();
        let adj = graph_model(&a2, &[1, 1]).unwrap();
        // Torus Levi: one singleton coset per distinct weight.
        let torus = levi_coarsen(&a2, &adj, &[]).unwrap();
        assert_eq!(torus.len(), adj.weights().len());
        for model in torus.values() {
            assert_eq!(model.weights().keys().next().unwrap().len(), 0);
        }
        let total: u64 = torus.values().map(GraphModel::total_multiplicity).sum();
        assert_eq!(total, 8);
        // Full Levi: a single coset carrying everything.
        let full = levi_coarsen(&a2, &adj, &[0, 1]).unwrap();
        assert_eq!(full.len(), 1);
        assert_eq!(full.values().next().unwrap().total_multiplicity(), 8);
    }

    #[test]
    fn levi_a2_adjoint_branching() {
        let a2 = RootSystem::builtin("A2").unwrap();
        let adj = graph_model(&a2, &[1, 1]).unwrap();
        let cosets = levi_coarsen(&a2, &adj, &[0]).unwrap();
        let mut sizes: Vec<u64> =
            cosets.values().map(GraphModel::total_multiplicity).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 4]);
        // The size-4 block decomposes as strings 2 + 0, the others as 1.
        let mut strings: Vec<Vec<i64>> = cosets
            .values()
            .map(|m| decompose_rank1(m).unwrap())
            .collect();
        strings.sort();
        assert_eq!(strings, vec![vec![1], vec![1], vec![2, 0]]);
        // Dimensions 3 + 1 + 2 + 2 = 8.
        let dim_total: i64 = strings.iter().flatten().map(|&n| n + 1).sum();
        assert_eq!(dim_total, 8);
    }

    #[test]
    fn transitivity_on_a2_and_b2() {
        let a2 = RootSystem::builtin("A2").unwrap();
        let adj = graph_model(&a2, &[1, 1]).unwrap();
        assert!(transitivity_check(&a2, &adj, &[0, 1], &[0]).unwrap());
        assert!(transitivity_check(&a2, &adj, &[0, 1], &[]).unwrap());
        assert!(transitivity_check(&a2, &adj, &[0], &[0]).unwrap());
        assert!(transitivity_check(&a2, &adj, &[0], &[]).unwrap());

        let b2 = RootSystem::builtin("B2").unwrap();
        for hw in [vec![1i64, 0], vec![0, 1], vec![1, 1]] {
            let m = graph_model(&b2, &hw).unwrap();
            for l in [vec![0usize], vec![1], vec![0, 1]] {
                assert!(transitivity_check(&b2, &m, &l, &[]).unwrap(), "{hw:?} {l:?}");
                assert!(transitivity_check(&b2, &m, &l, &l).unwrap(), "{hw:?} {l:?}");
            }
            assert!(transitivity_check(&b2, &m, &[0, 1], &[1]).unwrap(), "{hw:?}");
        }
    }

    #[test]
    fn transitivity_requires_containment() {
        let a2 = RootSystem::builtin("A2").unwrap();
        let adj = graph_model(&a2, &[1, 1]).unwrap();
        assert!(matches!(
            transitivity_check(&a2, &adj, &[0], &[1]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn p_alpha_degenerate_and_errors() {
        let a2 = RootSystem::builtin("A2").unwrap();
        // lambda(h_alpha) = 0: single term with trivial coefficient.
        let p = p_alpha(&a2, &[0, 2], &[rat_int(1)], 0).unwrap();
        assert_eq!(p.terms().len(), 1);
        assert!(p.coeff(&[0, 2]).unwrap().is_one());
        // Positive pairing is a domain error.
        assert!(matches!(
            p_alpha(&a2, &[1, 0], &[rat_int(1)], 0),
            Err(Error::Domain(_))
        ));
        // Wrong chain length is invalid input.
        assert!(matches!(
            p_alpha(&a2, &[-1, 0], &[rat_int(1)], 0),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn p_alpha_rank_one_string() {
        let a1 = RootSystem::builtin("A1").unwrap();
        let vars = torus_vars(1);
        let t = MultiPoly::var(&vars, "t1", rat_int(1));
        // Lowest vector of the two-dimensional module: terms at -omega and
        // omega, the second with denominator t1.
        let p = p_alpha(&a1, &[-1], &[rat_int(1), rat_int(1)], 0).unwrap();
        assert_eq!(p.terms().len(), 2);
        assert!(p.coeff(&[-1]).unwrap().is_one());
        assert_eq!(
            p.coeff(&[1]).unwrap(),
            &RatFunc::new(MultiPoly::constant(&vars, rat_int(1)), t.clone())
        );
        // Three-dimensional module: denominator degrees 0, 1, 2.
        let p = p_alpha(&a1, &[-2], &vec![rat_int(1); 3], 0).unwrap();
        let degs: Vec<u32> = p.terms().values().map(|c| c.den().total_degree()).collect();
        assert_eq!(degs, vec![0, 1, 2]);
    }

    /// Rebuild a torus-variable polynomial over the `[x, hbar]` list by
    /// renaming `t1 -> x`; both lists have two entries in the same order.
    fn rename_to_xh(p: &MultiPoly<Rat>) -> Poly {
        if p.is_constant() {
            return Poly::constant(&crate::xh_vars(), p.constant_value());
        }
        Poly::from_terms(
            &crate::xh_vars(),
            p.terms().map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    #[test]
    fn p_alpha_matches_the_splitting_expansion_at_rank_one() {
        // The k-th coefficient of p_alpha for the lowest vector of the
        // (n+1)-dimensional module equals the coefficient of s_{-n+2k} in
        // the expansion of the cyclic vector, after t1 -> x.
        let a1 = RootSystem::builtin("A1").unwrap();
        for n in 0..=4i64 {
            let chain = vec![rat_int(1); n as usize + 1];
            let p = p_alpha(&a1, &[-n], &chain, 0).unwrap();
            for k in 0..=n {
                let coeff = p.coeff(&[-n + 2 * k]).unwrap();
                let expect = idiot_coefficient(n, -n + 2 * k);
                assert_eq!(rename_to_xh(coeff.num()), expect.num().clone(), "n={n} k={k}");
                assert_eq!(rename_to_xh(coeff.den()), expect.den().clone(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn casimir_eigenvalues_match_the_graph_support() {
        use crate::kostant::{casimir_eigenvalue, PhiModule};
        for n in 0..=3i64 {
            let phi = PhiModule::new(n).unwrap();
            let mut diag: Vec<Poly> = (0..phi.labels().len())
                .map(|k| phi.casimir()[(k, k)].clone())
                .collect();
            let model = a1_model(n);
            let mut expect: Vec<Poly> = model
                .weights()
                .iter()
                .flat_map(|(w, &m)| std::iter::repeat_n(casimir_eigenvalue(w[0]), m as usize))
                .collect();
            let key = |p: &Poly| format!("{p}");
            diag.sort_by_key(key);
            expect.sort_by_key(key);
            assert!(!diag.is_empty());
            assert_eq!(diag, expect, "n = {n}");
        }
    }

    #[test]
    fn model_weights_are_weyl_stable() {
        let b2 = RootSystem::builtin("B2").unwrap();
        let m = graph_model(&b2, &[1, 1]).unwrap();
        for (w, mult) in m.weights() {
            for e in 0..b2.weyl_order() {
                let moved = b2.apply_element(e, w);
                assert_eq!(m.weights().get(&moved), Some(mult));
            }
        }
        assert!(GraphModel::new("B2", BTreeMap::from([(vec![0, 0], 0)])).is_err());
    }
}
