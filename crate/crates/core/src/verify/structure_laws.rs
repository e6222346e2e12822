//! Polynomial-layer and stem-layer laws: association trees, Leibniz,
//! evaluation, reflection, round-trips, partial parts, and the
//! representation formula.

use num_traits::Zero;
use serde_json::{json, Value};

use crate::algebra::{AlgebraKind, Setting};
use crate::json::poly_to_json;
use crate::poly::{assoc_product, x_q_poly, AmbientPoly, AssocTree};
use crate::rational::{rat, Rat};
use crate::stem::{
    extract, partial_even_odd, representation_check_ambient, subst_u_with_rho,
};
use crate::verify::{run_law, tagged, SuiteParams, SuiteReport};

fn poly_payload(setting: &Setting, polys: &[(&str, &AmbientPoly)]) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("setting".into(), json!(setting.spec_string()));
    for (name, p) in polys {
        obj.insert((*name).into(), poly_to_json(p));
    }
    Value::Object(obj)
}

/// Independent evaluation oracle: recursive Horner scheme by the last
/// variable (the production path sums monomials directly).
fn horner_eval(f: &AmbientPoly, point: &[Rat]) -> crate::algebra::AlgebraElement {
    let setting = f.setting().clone();
    if f.is_zero() {
        return setting.algebra().zero();
    }
    let n = f.nvars();
    let max_deg = f.terms().map(|(m, _)| m.exps()[n - 1]).max().unwrap_or(0);
    if n == 1 {
        // univariate Horner
        let mut acc = setting.algebra().zero();
        for e in (0..=max_deg).rev() {
            acc = acc.scale(&point[0]);
            for (m, c) in f.terms() {
                if m.exps()[0] == e {
                    acc = acc.add(c);
                }
            }
        }
        return acc;
    }
    // group by the last variable's exponent, recurse on the rest
    let mut acc = setting.algebra().zero();
    for e in (0..=max_deg).rev() {
        acc = acc.scale(&point[n - 1]);
        let mut slice_poly = AmbientPoly::zero(&setting, n - 1);
        for (m, c) in f.terms() {
            if m.exps()[n - 1] == e {
                let exps = m.exps()[..n - 1].to_vec();
                slice_poly = slice_poly.add(
                    &AmbientPoly::from_terms(
                        &setting,
                        n - 1,
                        [(crate::poly::Monomial::new(exps), c.clone())],
                    )
                    .unwrap(),
                );
            }
        }
        acc = acc.add(&horner_eval(&slice_poly, &point[..n - 1]));
    }
    acc
}

pub fn poly_suite(settings: &[Setting], params: &SuiteParams) -> SuiteReport {
    let mut report = SuiteReport::new("poly", params, settings);
    for st in settings {
        let n = st.nvars();

        match st.algebra().kind() {
            AlgebraKind::Clifford { .. } => {
                report.push(run_law(
                    &tagged("assoc.tree_independent", st),
                    params.seed,
                    params.trials,
                    |rng, _| {
                        let factors: Vec<AmbientPoly> =
                            (0..3).map(|_| rng.poly(st, n, 2, 2)).collect();
                        let l = assoc_product(&factors, &AssocTree::left_comb(3)).unwrap();
                        let r = assoc_product(&factors, &AssocTree::right_comb(3)).unwrap();
                        (l != r).then(|| {
                            (
                                "associative algebra: trees disagree".into(),
                                poly_payload(st, &[("f", &factors[0]), ("g", &factors[1]), ("h", &factors[2])]),
                            )
                        })
                    },
                ));
            }
            AlgebraKind::Octonion => {
                report.push(run_law(
                    &tagged("assoc.symmetrized_tree_independent", st),
                    params.seed,
                    params.trials,
                    |rng, _| {
                        // random multi-index of weight <= 4 over the base slots
                        let mut k = vec![0i64; st.p() + 1];
                        let weight = 1 + rng.small_index(4);
                        for _ in 0..weight {
                            let i = rng.small_index(st.p() + 1);
                            k[i] += 1;
                        }
                        let l = crate::extensions::fueter_polynomial_with(
                            st,
                            &k,
                            AssocTree::left_comb,
                        )
                        .unwrap();
                        let r = crate::extensions::fueter_polynomial_with(
                            st,
                            &k,
                            AssocTree::right_comb,
                        )
                        .unwrap();
                        (l != r).then(|| {
                            (
                                format!("symmetrized sum depends on tree for k = {k:?}"),
                                poly_payload(st, &[("left", &l), ("right", &r)]),
                            )
                        })
                    },
                ));
            }
        }

        report.push(run_law(
            &tagged("derivative.leibniz", st),
            params.seed,
            params.trials,
            |rng, _| {
                let f = rng.poly(st, n, 3, 3);
                let g = rng.poly(st, n, 3, 3);
                let s = rng.small_index(n);
                let lhs = f.mul(&g).partial(s).unwrap();
                let rhs = f
                    .partial(s)
                    .unwrap()
                    .mul(&g)
                    .add(&f.mul(&g.partial(s).unwrap()));
                (lhs != rhs).then(|| {
                    (
                        format!("Leibniz fails at variable {s}"),
                        poly_payload(st, &[("f", &f), ("g", &g)]),
                    )
                })
            },
        ));

        report.push(run_law(
            &tagged("derivative.partials_commute", st),
            params.seed,
            params.trials,
            |rng, _| {
                let f = rng.poly(st, n, params.degree, 4);
                let s = rng.small_index(n);
                let t = rng.small_index(n);
                let a = f.partial(s).unwrap().partial(t).unwrap();
                let b = f.partial(t).unwrap().partial(s).unwrap();
                (a != b).then(|| {
                    (
                        format!("partials {s},{t} do not commute"),
                        poly_payload(st, &[("f", &f)]),
                    )
                })
            },
        ));

        report.push(run_law(
            &tagged("evaluate.matches_horner_oracle", st),
            params.seed,
            params.trials,
            |rng, _| {
                let f = rng.poly(st, n, 4, 4);
                let pt = rng.point(n);
                let direct = f.evaluate(&pt);
                let oracle = horner_eval(&f, &pt);
                (direct != oracle).then(|| {
                    (
                        "evaluation disagrees with Horner oracle".into(),
                        poly_payload(st, &[("f", &f)]),
                    )
                })
            },
        ));

        report.push(run_law(
            &tagged("evaluate.real_scalars_multiplicative", st),
            params.seed,
            params.trials,
            |rng, _| {
                // real-coefficient f: evaluation is multiplicative against any g
                let mut f = AmbientPoly::zero(st, n);
                for _ in 0..3 {
                    let mut exps = vec![0u16; n];
                    for _ in 0..rng.small_index(4) {
                        exps[rng.small_index(n)] += 1;
                    }
                    f = f.add(
                        &AmbientPoly::from_terms(
                            st,
                            n,
                            [(crate::poly::Monomial::new(exps), st.algebra().scalar(rng.rat()))],
                        )
                        .unwrap(),
                    );
                }
                let g = rng.poly(st, n, 3, 3);
                let pt = rng.point(n);
                let lhs = f.mul(&g).evaluate(&pt);
                let rhs = f.evaluate(&pt).mul(&g.evaluate(&pt));
                (lhs != rhs).then(|| {
                    (
                        "evaluation not multiplicative for real-coefficient factor".into(),
                        poly_payload(st, &[("f", &f), ("g", &g)]),
                    )
                })
            },
        ));

        report.push(run_law(
            &tagged("reflect.involution", st),
            params.seed,
            params.trials,
            |rng, _| {
                let f = rng.poly(st, n, params.degree, 4);
                (f.reflect().reflect() != f)
                    .then(|| ("reflect twice is not identity".into(), poly_payload(st, &[("f", &f)])))
            },
        ));
    }
    report.finish()
}

pub fn stem_suite(settings: &[Setting], params: &SuiteParams) -> SuiteReport {
    let mut report = SuiteReport::new("stem", params, settings);
    for st in settings {
        report.push(run_law(
            &tagged("roundtrip.extract_after_materialize", st),
            params.seed,
            params.trials,
            |rng, _| {
                let s = rng.stem(st, params.degree.min(5));
                let f = s.materialize();
                match extract(&f) {
                    Ok(back) if back == s => None,
                    Ok(_) => Some((
                        "extract returned a different stem".into(),
                        json!({"setting": st.spec_string(), "stem": crate::json::stem_to_json(&s)}),
                    )),
                    Err(e) => Some((
                        format!("extract failed: {e}"),
                        json!({"setting": st.spec_string(), "stem": crate::json::stem_to_json(&s)}),
                    )),
                }
            },
        ));

        report.push(run_law(
            &tagged("partial_parts.sum_and_symmetry", st),
            params.seed,
            params.trials,
            |rng, _| {
                let f = rng.ambient_poly(st, params.degree);
                let (pe, po) = partial_even_odd(&f);
                let ok = pe.add(&po) == f && pe.reflect() == pe && po.reflect() == po.neg();
                (!ok).then(|| ("PE/PO split broken".into(), poly_payload(st, &[("f", &f)])))
            },
        ));

        report.push(run_law(
            &tagged("partial_parts.spherical_read_off", st),
            params.seed,
            params.trials,
            |rng, _| {
                let s = rng.stem(st, params.degree.min(5));
                let f = s.materialize();
                let (pe, po) = partial_even_odd(&f);
                let value = subst_u_with_rho(&s.spherical_value());
                let deriv = subst_u_with_rho(&s.spherical_derivative());
                let ok = pe == value
                    && po == x_q_poly(st).mul(&deriv)
                    && f == value.add(&x_q_poly(st).mul(&deriv));
                (!ok).then(|| {
                    (
                        "spherical value/derivative read-off broken".into(),
                        json!({"setting": st.spec_string(), "stem": crate::json::stem_to_json(&s)}),
                    )
                })
            },
        ));

        report.push(run_law(
            &tagged("reflect.stem_compatible", st),
            params.seed,
            params.trials,
            |rng, _| {
                let s = rng.stem(st, params.degree.min(5));
                let ok = s.materialize().reflect() == s.reflected().materialize();
                (!ok).then(|| {
                    (
                        "reflect does not negate G2".into(),
                        json!({"setting": st.spec_string(), "stem": crate::json::stem_to_json(&s)}),
                    )
                })
            },
        ));

        report.push(run_law(
            &tagged("representation.formula", st),
            params.seed,
            params.trials,
            |rng, _| {
                let s = match rng.gps_stem(st, params.degree.min(5)) {
                    Ok(s) => s,
                    Err(e) => return Some((format!("stem generation failed: {e}"), Value::Null)),
                };
                let f = s.materialize();
                for _ in 0..20 {
                    let xp = rng.point(st.p() + 1);
                    let r = rng.rat();
                    let omega = rng.sphere(st);
                    let eta = rng.sphere(st);
                    if !representation_check_ambient(&f, &xp, &r, &omega, &eta) {
                        return Some((
                            "representation formula violated".into(),
                            json!({
                                "setting": st.spec_string(),
                                "stem": crate::json::stem_to_json(&s),
                                "xp": xp.iter().map(crate::rational::format_rat).collect::<Vec<_>>(),
                                "r": crate::rational::format_rat(&r),
                            }),
                        ));
                    }
                }
                None
            },
        ));

        if st.q() >= 2 {
            report.push(run_law(
                &tagged("representation.non_slice_counterexample", st),
                params.seed,
                1,
                |rng, _| {
                    // x_{p+1} is not a slice function; the formula must fail
                    // at some rational configuration
                    let f = AmbientPoly::var(st, st.nvars(), st.p() + 1).unwrap();
                    for _ in 0..50 {
                        let xp = rng.point(st.p() + 1);
                        let mut r = rng.rat();
                        if r.is_zero() {
                            r = rat(1, 2);
                        }
                        let omega = rng.sphere(st);
                        let eta = rng.sphere(st);
                        if !representation_check_ambient(&f, &xp, &r, &omega, &eta) {
                            return None;
                        }
                    }
                    Some((
                        "no violating configuration found for a non-slice polynomial".into(),
                        poly_payload(st, &[("f", &f)]),
                    ))
                },
            ));
        }
    }
    report.finish()
}
