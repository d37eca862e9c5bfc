//! Canonical JSON and CSV rendering for the CLI-facing artifacts.
//!
//! Every map serializes with sorted keys and every symbolic entry as its
//! canonical display string, so equal values produce identical bytes; the
//! frozen regression vectors under `testdata/` are compared against these
//! renderers byte for byte.

use std::fmt::Display;

use serde_json::{json, Value};

use crate::coh::{filtration_generators, lattice_compare, sl2_action, normal_cone_hilbert};
use crate::graphmod::GraphModel;
use crate::hilbert::HilbertSeries;
use crate::kostant::{
    casimir_eigenvalue, idiot_expansion, quasiclassical_jordan, highest_weight_split, PhiModule,
};
use crate::matrix::Matrix;
use crate::rootdata::{RootSystem, Weight};
use crate::scalar::RingElem;
use crate::toda::DiffOp;
use crate::{poly_int, rat_int, Error, Poly};

/// Pretty-printed with a trailing newline: the byte form used for files,
/// stdout, and cache entries alike.
pub fn canonical(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

fn matrix_strings<E: RingElem + Display>(m: &Matrix<E>) -> Value {
    let rows: Vec<Value> = (0..m.nrows())
        .map(|r| Value::from(m.row(r).iter().map(E::to_string).collect::<Vec<_>>()))
        .collect();
    Value::from(rows)
}

fn string_map<K: Display, V: Display>(entries: impl Iterator<Item = (K, V)>) -> Value {
    let mut map = serde_json::Map::new();
    for (k, v) in entries {
        map.insert(k.to_string(), Value::from(v.to_string()));
    }
    Value::Object(map)
}

/// Coefficients, ascending in `z`, of `prod_i (2z - ((x + i hbar)^2 - hbar^2))`
/// over `i = -n, -n+2, ..., n`: the annihilator of the Casimir action.
fn annihilator_coefficients(n: i64) -> Vec<Poly> {
    let mut ann = vec![poly_int(1)];
    for i in (-n..=n).step_by(2) {
        let a = casimir_eigenvalue(i).scale(&rat_int(2));
        let mut next = Vec::with_capacity(ann.len() + 1);
        for k in 0..=ann.len() {
            let mut term = poly_int(0);
            if k >= 1 {
                term = term + ann[k - 1].scale(&rat_int(2));
            }
            if k < ann.len() {
                term = term - ann[k].clone() * a.clone();
            }
            next.push(term);
        }
        ann = next;
    }
    ann
}

pub fn phi_report(n: i64) -> Result<Value, Error> {
    let phi = PhiModule::new(n)?;
    let idiot = idiot_expansion(n)?;
    let jordan = quasiclassical_jordan(n)?;
    Ok(json!({
        "n": n,
        "labels": phi.labels(),
        "casimir_matrix": matrix_strings(phi.casimir()),
        "annihilator": annihilator_coefficients(n).iter().map(Poly::to_string).collect::<Vec<_>>(),
        "idiot_coefficients": string_map(idiot.iter()),
        "jordan_type": jordan,
    }))
}

pub fn phi_csv(n: i64) -> Result<String, Error> {
    let idiot = idiot_expansion(n)?;
    Ok(idiot.iter().map(|(i, c)| format!("{i},{c}\n")).collect())
}

pub fn split_report(n: i64) -> Result<Value, Error> {
    let split = highest_weight_split(n)?;
    let idiot = idiot_expansion(n)?;
    Ok(json!({
        "n": n,
        "labels": split.labels(),
        "reduced_matrix": matrix_strings(split.reduced_matrix()),
        "idiot_coefficients": string_map(idiot.iter()),
    }))
}

pub fn split_csv(n: i64) -> Result<String, Error> {
    let split = highest_weight_split(n)?;
    let m = split.reduced_matrix();
    let mut out = String::new();
    for r in 0..m.nrows() {
        for (c, e) in m.row(r).iter().enumerate() {
            out.push_str(&format!("{r},{c},{e}\n"));
        }
    }
    Ok(out)
}

pub fn coh_report(n: i64) -> Result<Value, Error> {
    let module = sl2_action(n)?;
    let gens = filtration_generators(n)?;
    Ok(json!({
        "n": n,
        "labels": module.labels(),
        "e": matrix_strings(module.e()),
        "h": matrix_strings(module.h()),
        "f": matrix_strings(module.f()),
        "generators": string_map(gens.iter().map(|(i, g)| (i, g))),
        "jordan_type": module.e_jordan_type()?,
    }))
}

pub fn coh_csv(n: i64) -> Result<String, Error> {
    let gens = filtration_generators(n)?;
    Ok(gens.iter().map(|(i, g)| format!("{i},{g}\n")).collect())
}

pub fn compare_report(n: i64) -> Result<Value, Error> {
    let cmp = lattice_compare(n)?;
    Ok(json!({
        "n": n,
        "alg_in_top": matrix_strings(&cmp.alg_in_top),
        "top_in_alg": matrix_strings(&cmp.top_in_alg),
        "alg_inside_top": cmp.alg_inside_top,
        "top_inside_alg": cmp.top_inside_alg,
        "equal": cmp.equal(),
    }))
}

pub fn compare_csv(n: i64) -> Result<String, Error> {
    let cmp = lattice_compare(n)?;
    Ok(format!(
        "alg_inside_top,{}\ntop_inside_alg,{}\nequal,{}\n",
        cmp.alg_inside_top,
        cmp.top_inside_alg,
        cmp.equal()
    ))
}

fn normal_cone_degrees(system: &RootSystem) -> Result<Vec<usize>, Error> {
    let degrees = system.invariant_degrees()?;
    let mut gens: Vec<usize> = Vec::new();
    for &d in &degrees {
        gens.push(2 * d);
        gens.push(2 * d - 2);
    }
    gens.push(2);
    gens.sort_unstable();
    Ok(gens)
}

pub fn hilbert_report(system: &RootSystem, max: usize) -> Result<Value, Error> {
    let series = normal_cone_hilbert(system, max)?;
    Ok(json!({
        "type": system.tag(),
        "max": max,
        "generator_degrees": normal_cone_degrees(system)?,
        "coefficients": series.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    }))
}

/// One `degree,coefficient` row per nonzero coefficient.
pub fn hilbert_csv(system: &RootSystem, max: usize) -> Result<String, Error> {
    let series = normal_cone_hilbert(system, max)?;
    Ok(series_csv(&series))
}

pub fn series_csv(series: &HilbertSeries) -> String {
    use num_traits::Zero;
    let mut out = String::new();
    for (d, c) in series.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out.push_str(&format!("{d},{c}\n"));
        }
    }
    out
}

fn coords_value(w: &Weight) -> Value {
    Value::from(w.clone())
}

pub fn graph_report(model: &GraphModel) -> Value {
    let weights: Vec<Value> = model
        .weights()
        .iter()
        .map(|(w, m)| json!({ "coords": coords_value(w), "mult": m }))
        .collect();
    json!({ "type": model.tag(), "weights": weights })
}

fn join_coords(w: &Weight) -> String {
    w.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

pub fn graph_csv(model: &GraphModel) -> String {
    model
        .weights()
        .iter()
        .map(|(w, m)| format!("{},{m}\n", join_coords(w)))
        .collect()
}

pub fn levi_report(
    parent: &RootSystem,
    levi: &[usize],
    cosets: &std::collections::BTreeMap<Weight, GraphModel>,
) -> Value {
    let entries: Vec<Value> = cosets
        .iter()
        .map(|(coset, model)| json!({ "coset": coords_value(coset), "model": graph_report(model) }))
        .collect();
    json!({ "type": parent.tag(), "levi": levi, "cosets": entries })
}

pub fn levi_csv(cosets: &std::collections::BTreeMap<Weight, GraphModel>) -> String {
    let mut out = String::new();
    for (coset, model) in cosets {
        for (w, m) in model.weights() {
            out.push_str(&format!("{},{},{m}\n", join_coords(coset), join_coords(w)));
        }
    }
    out
}

/// JSON for an operator in `t` and `d_t` alone, as produced by the Toda
/// reduction: `{"terms": [{"coef": ..., "dt": m, "t": k}, ...]}`.
pub fn toda_report(op: &DiffOp) -> Result<Value, Error> {
    let mut terms = Vec::new();
    for (&(t, u, v, dt, du, dv), c) in op.terms() {
        if u != 0 || v != 0 || du != 0 || dv != 0 {
            return Err(Error::InvalidInput(
                "operator is not reduced to the torus direction".into(),
            ));
        }
        terms.push(json!({ "t": t, "dt": dt, "coef": c.to_string() }));
    }
    Ok(json!({ "terms": terms }))
}

pub fn toda_csv(op: &DiffOp) -> Result<String, Error> {
    let mut out = String::new();
    for (&(t, u, v, dt, du, dv), c) in op.terms() {
        if u != 0 || v != 0 || du != 0 || dv != 0 {
            return Err(Error::InvalidInput(
                "operator is not reduced to the torus direction".into(),
            ));
        }
        out.push_str(&format!("{t},{dt},{c}\n"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toda::reduced_casimir;

    #[test]
    fn phi_one_shows_the_known_coefficients() {
        let report = phi_report(1).unwrap();
        assert_eq!(
            report["idiot_coefficients"],
            json!({ "-1": "1", "1": "1/x" })
        );
        assert_eq!(report["jordan_type"], json!([2]));
        assert_eq!(phi_csv(1).unwrap(), "-1,1\n1,1/x\n");
    }

    #[test]
    fn annihilator_is_the_expanded_product() {
        // n = 0: single factor 2z - (x^2 - hbar^2).
        let ann = annihilator_coefficients(0);
        assert_eq!(ann.len(), 2);
        assert_eq!(ann[1], poly_int(2));
        assert_eq!(ann[0], -casimir_eigenvalue(0).scale(&rat_int(2)));
        // Degree in z is n + 2 for n = 2.
        assert_eq!(annihilator_coefficients(2).len(), 4);
    }

    #[test]
    fn hilbert_csv_lists_nonzero_rows() {
        let a1 = RootSystem::builtin("A1").unwrap();
        assert_eq!(hilbert_csv(&a1, 8).unwrap(), "0,1\n2,2\n4,4\n6,6\n8,9\n");
        let report = hilbert_report(&a1, 8).unwrap();
        assert_eq!(report["generator_degrees"], json!([2, 2, 4]));
    }

    #[test]
    fn toda_terms_are_sorted_and_flat() {
        let report = toda_report(&reduced_casimir()).unwrap();
        assert_eq!(
            report,
            json!({ "terms": [
                { "t": -2, "dt": 0, "coef": "2" },
                { "t": 1, "dt": 1, "coef": "3/2*hbar" },
                { "t": 2, "dt": 2, "coef": "1/2" },
            ]})
        );
        assert!(toda_report(&crate::toda::left_e()).is_err());
    }

    #[test]
    fn rendering_is_reproducible() {
        let a = canonical(&compare_report(2).unwrap());
        let b = canonical(&compare_report(2).unwrap());
        assert_eq!(a, b);
        assert!(a.ends_with('\n'));
    }

    #[test]
    fn phi_two_reproduces_the_frozen_vector() {
        let frozen = include_str!("../testdata/phi_2.json");
        assert_eq!(canonical(&phi_report(2).unwrap()), frozen);
    }
}
