//! JSON wire formats.
//!
//! Polynomial: an array of term objects
//! `{"monomial": [k_0, ..., k_{n-1}], "coeff": {"1": "3/2", "e12": "-1"}}`
//! in graded-lexicographic order, with blade labels as keys (in basis order)
//! and rationals as `"num/den"` strings. Stem:
//! `{"G1": <poly in p+2 slots>, "G2": <poly>}` where the last slot is
//! `u = r^2`. Emission is canonical, so identical values serialize to
//! byte-identical JSON.

use serde_json::{json, Map, Value};

use crate::algebra::{AlgebraElement, Setting};
use crate::error::{Error, Result};
use crate::poly::{AmbientPoly, Monomial};
use crate::rational::{format_rat, parse_rat};
use crate::stem::{stem_nvars, StemPair};

pub fn element_to_json(a: &AlgebraElement) -> Value {
    let mut map = Map::new();
    for (i, c) in a.coeffs().iter().enumerate() {
        if !num_traits::Zero::is_zero(c) {
            map.insert(a.algebra().label(i).to_string(), Value::String(format_rat(c)));
        }
    }
    Value::Object(map)
}

pub fn element_from_json(setting: &Setting, v: &Value) -> Result<AlgebraElement> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::InvalidInput("coeff must be an object".into()))?;
    let algebra = setting.algebra();
    let mut out = algebra.zero();
    for (label, val) in obj {
        let idx = algebra
            .label_index(label)
            .ok_or_else(|| Error::InvalidInput(format!("unknown blade label {label:?}")))?;
        let s = val
            .as_str()
            .ok_or_else(|| Error::InvalidInput(format!("coefficient of {label} must be a string")))?;
        out = out.add(&algebra.basis_element(idx).scale(&parse_rat(s)?));
    }
    Ok(out)
}

pub fn poly_to_json(f: &AmbientPoly) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(m, c)| {
            json!({
                "monomial": m.exps().iter().map(|&e| e as u64).collect::<Vec<_>>(),
                "coeff": element_to_json(c),
            })
        })
        .collect();
    Value::Array(terms)
}

pub fn poly_from_json(setting: &Setting, nvars: usize, v: &Value) -> Result<AmbientPoly> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::InvalidInput("polynomial must be an array of terms".into()))?;
    let mut out = AmbientPoly::zero(setting, nvars);
    for term in arr {
        let mono = term
            .get("monomial")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidInput("term needs a \"monomial\" array".into()))?;
        if mono.len() != nvars {
            return Err(Error::InvalidInput(format!(
                "monomial has {} slots, expected {nvars}",
                mono.len()
            )));
        }
        let exps: Vec<u16> = mono
            .iter()
            .map(|x| {
                x.as_u64()
                    .filter(|&e| e <= u16::MAX as u64)
                    .map(|e| e as u16)
                    .ok_or_else(|| Error::InvalidInput("exponent must be a small nonnegative integer".into()))
            })
            .collect::<Result<_>>()?;
        let coeff = element_from_json(
            setting,
            term.get("coeff")
                .ok_or_else(|| Error::InvalidInput("term needs a \"coeff\" object".into()))?,
        )?;
        out = out.add(&AmbientPoly::from_terms(setting, nvars, [(Monomial::new(exps), coeff)])?);
    }
    Ok(out)
}

pub fn stem_to_json(s: &StemPair) -> Value {
    json!({
        "G1": poly_to_json(s.g1()),
        "G2": poly_to_json(s.g2()),
    })
}

pub fn stem_from_json(setting: &Setting, v: &Value) -> Result<StemPair> {
    let n = stem_nvars(setting);
    let g1 = poly_from_json(
        setting,
        n,
        v.get("G1")
            .ok_or_else(|| Error::InvalidInput("stem needs \"G1\"".into()))?,
    )?;
    let g2 = poly_from_json(
        setting,
        n,
        v.get("G2")
            .ok_or_else(|| Error::InvalidInput("stem needs \"G2\"".into()))?,
    )?;
    StemPair::new(setting, g1, g2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::rng::TrialRng;

    fn setting() -> Setting {
        Setting::new(Algebra::clifford(3).unwrap(), 3, 1).unwrap()
    }

    #[test]
    fn poly_round_trip() {
        let st = setting();
        for t in 0..10 {
            let f = TrialRng::new(3, t).ambient_poly(&st, 4);
            let v = poly_to_json(&f);
            let back = poly_from_json(&st, st.nvars(), &v).unwrap();
            assert_eq!(back, f);
            // canonical: serializing again is byte-identical
            assert_eq!(
                serde_json::to_string(&v).unwrap(),
                serde_json::to_string(&poly_to_json(&back)).unwrap()
            );
        }
    }

    #[test]
    fn stem_round_trip() {
        let st = setting();
        let s = TrialRng::new(5, 1).stem(&st, 3);
        let v = stem_to_json(&s);
        assert_eq!(stem_from_json(&st, &v).unwrap(), s);
    }

    #[test]
    fn malformed_inputs_rejected() {
        let st = setting();
        let bad_rat = serde_json::json!([{"monomial": [1, 0, 0, 0], "coeff": {"1": "1/0"}}]);
        assert!(poly_from_json(&st, 4, &bad_rat).is_err());
        let bad_label = serde_json::json!([{"monomial": [0, 0, 0, 0], "coeff": {"e9": "1"}}]);
        assert!(poly_from_json(&st, 4, &bad_label).is_err());
        let bad_len = serde_json::json!([{"monomial": [0, 0], "coeff": {"1": "1"}}]);
        assert!(poly_from_json(&st, 4, &bad_len).is_err());
    }
}
