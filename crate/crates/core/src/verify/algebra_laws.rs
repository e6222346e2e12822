//! Algebra-level laws: alternativity, Artin consequences, Moufang identities,
//! the anti-involution, the exchange rule, and trace/norm bilinearity.

use serde_json::{json, Value};

use crate::algebra::{Algebra, AlgebraElement, Setting};
use crate::json::element_to_json;
use crate::rational::{rat_int, Rat};
use crate::verify::{run_law, tagged, SuiteParams, SuiteReport};

fn triple_payload(
    setting: &Setting,
    a: &AlgebraElement,
    b: &AlgebraElement,
    c: &AlgebraElement,
) -> Value {
    json!({
        "setting": setting.spec_string(),
        "a": element_to_json(a),
        "b": element_to_json(b),
        "c": element_to_json(c),
    })
}

pub fn algebra_suite(settings: &[Setting], params: &SuiteParams) -> SuiteReport {
    algebra_suite_filtered(settings, params, None)
}

/// Algebra suite restricted to the named laws (the part of the law name
/// before the setting tag); `None` runs everything.
pub fn algebra_suite_filtered(
    settings: &[Setting],
    params: &SuiteParams,
    only: Option<&[&str]>,
) -> SuiteReport {
    let admits = |name: &str| only.is_none_or(|list| list.contains(&name));
    let mut report = SuiteReport::new("algebra", params, settings);
    for st in settings {
        let alg = st.algebra().clone();

        if admits("alternativity.alternating") {
            report.push(run_law(
                &tagged("alternativity.alternating", st),
                params.seed,
                params.trials,
                |rng, _| {
                    let a = rng.element(&alg);
                    let b = rng.element(&alg);
                    let c = rng.element(&alg);
                    // share the pairwise products across all six associators
                    let (aa, bb) = (a.mul(&a), b.mul(&b));
                    let (ab, ba) = (a.mul(&b), b.mul(&a));
                    let ac = a.mul(&c);
                    let (bc, cb) = (b.mul(&c), c.mul(&b));
                    let assoc = ab.mul(&c).sub(&a.mul(&bc));
                    let ok = aa.mul(&b) == a.mul(&ab)
                        && ab.mul(&b) == a.mul(&bb)
                        && assoc == b.mul(&ac).sub(&ba.mul(&c))
                        && assoc == a.mul(&cb).sub(&ac.mul(&b))
                        && assoc == c.mul(&ba).sub(&cb.mul(&a));
                    (!ok).then(|| {
                        (
                            "associator not alternating".into(),
                            triple_payload(st, &a, &b, &c),
                        )
                    })
                },
            ));
        }

        if admits("artin.inverse") {
            report.push(run_law(
                &tagged("artin.inverse", st),
                params.seed,
                params.trials,
                |rng, _| {
                    // invertible x in the quadratic cone (x in M, n(x) != 0)
                    let mut x = rng.element_in_m(st);
                    if x.norm().is_zero() {
                        x = x.add(&alg.one());
                    }
                    let y = rng.element(&alg);
                    let inv = match x.cone_inverse() {
                        Some(inv) => inv,
                        None => {
                            return Some((
                                "no cone inverse".into(),
                                triple_payload(st, &x, &y, &y),
                            ))
                        }
                    };
                    // x x^{-1} = 1 is covered by unit tests of cone_inverse
                    let ok = inv.associator(&x, &y).is_zero();
                    (!ok).then(|| {
                        (
                            "[x^-1, x, y] != 0".into(),
                            triple_payload(st, &x, &inv, &y),
                        )
                    })
                },
            ));
        }

        if admits("artin.subspace") {
            report.push(run_law(
                &tagged("artin.subspace", st),
                params.seed,
                params.trials,
                |rng, _| {
                    let x = rng.element_in_m(st);
                    let y = rng.element(&alg);
                    let ok =
                        x.associator(&x, &y).is_zero() && x.conj().associator(&x, &y).is_zero();
                    (!ok).then(|| {
                        (
                            "[x,x,y] or [x^c,x,y] != 0".into(),
                            triple_payload(st, &x, &y, &y),
                        )
                    })
                },
            ));
        }

        if admits("moufang.identities") {
            report.push(run_law(
                &tagged("moufang.identities", st),
                params.seed,
                params.trials,
                |rng, _| {
                    let a = rng.element(&alg);
                    let b = rng.element(&alg);
                    let c = rng.element(&alg);
                    let aba = a.mul(&b).mul(&a);
                    let left = a.mul(&b.mul(&a.mul(&c))) == aba.mul(&c);
                    let bcb = b.mul(&c).mul(&b);
                    let right = a.mul(&b).mul(&c).mul(&b) == a.mul(&bcb);
                    let middle = a.mul(&b).mul(&c.mul(&a)) == a.mul(&b.mul(&c)).mul(&a);
                    (!(left && right && middle)).then(|| {
                        (
                            "Moufang identity failed".into(),
                            triple_payload(st, &a, &b, &c),
                        )
                    })
                },
            ));
        }

        if admits("conjugation.anti_involution") {
            report.push(run_law(
                &tagged("conjugation.anti_involution", st),
                params.seed,
                params.trials,
                |rng, _| {
                    let a = rng.element(&alg);
                    let b = rng.element(&alg);
                    let ok = a.conj().conj() == a && a.mul(&b).conj() == b.conj().mul(&a.conj());
                    (!ok).then(|| ("(ab)^c != b^c a^c".into(), triple_payload(st, &a, &b, &b)))
                },
            ));
        }

        if admits("exchange.base_times_omega") {
            report.push(run_law(
                &tagged("exchange.base_times_omega", st),
                params.seed,
                params.trials,
                |rng, _| {
                    let a = rng.element_in_base(st);
                    let b = rng.element(&alg);
                    let omega = rng.sphere(st).induced(st);
                    let ok = a.mul(&omega.mul(&b)) == omega.mul(&a.conj().mul(&b));
                    (!ok).then(|| {
                        (
                            "a(wb) != w(a^c b)".into(),
                            triple_payload(st, &a, &omega, &b),
                        )
                    })
                },
            ));
        }

        if admits("trace_norm.euclidean") {
            report.push(run_law(
                &tagged("trace_norm.euclidean", st),
                params.seed,
                params.trials,
                |rng, _| {
                    let xc: Vec<Rat> = (0..=st.m()).map(|_| rng.rat()).collect();
                    let yc: Vec<Rat> = (0..=st.m()).map(|_| rng.rat()).collect();
                    let x = st.embed(&xc);
                    let y = st.embed(&yc);
                    let inner: Rat = xc.iter().zip(&yc).map(|(a, b)| a * b).sum();
                    let norm_sq: Rat = xc.iter().map(|a| a * a).sum();
                    let two_inner = alg.scalar(inner.clone() + inner);
                    let ok = x.mul(&y.conj()).trace() == two_inner
                        && y.conj().mul(&x).trace() == two_inner
                        && x.norm() == alg.scalar(norm_sq.clone())
                        && x.conj().norm() == alg.scalar(norm_sq);
                    (!ok).then(|| {
                        (
                            "t(xy^c) or n(x) mismatch".into(),
                            triple_payload(st, &x, &y, &y),
                        )
                    })
                },
            ));
        }

        if admits("cone.predicate_vs_table") {
            report.push(run_law(
                &tagged("cone.predicate_vs_table", st),
                params.seed,
                params.trials,
                |rng, _| {
                    let a = rng.element(&alg);
                    let cm = a.cone_membership();
                    // oracle: recompute t, n from the table definitions
                    let t = a.add(&a.conj());
                    let n = a.mul(&a.conj());
                    let in_qa = a.is_real()
                        || (t.is_real() && n.is_real() && {
                            let t0 = t.real_part();
                            rat_int(4) * n.real_part() > &t0 * &t0
                        });
                    let in_sa = t.is_zero() && n == alg.one();
                    let ok = cm.in_qa == in_qa && cm.in_sa == in_sa;
                    (!ok).then(|| {
                        (
                            "cone predicate mismatch".into(),
                            triple_payload(st, &a, &a, &a),
                        )
                    })
                },
            ));
        }
    }
    report.finish()
}

/// Hypercomplex-basis validation: `t(v_s) = 0`, `n(v_s) = 1`,
/// `t(v_s v_t^c) = 0` for every constructed setting (Clifford `m <= 5`,
/// octonion `m <= 7`), plus `omega^2 = -1` for induced sphere points.
pub fn hypercomplex_suite(params: &SuiteParams) -> SuiteReport {
    let mut settings = Vec::new();
    for m in 1..=5u32 {
        for p in 0..m as usize {
            settings.push(Setting::new(Algebra::clifford(m).unwrap(), m as usize, p).unwrap());
        }
    }
    for m in 1..=7usize {
        for p in 0..m {
            settings.push(Setting::new(Algebra::octonion(), m, p).unwrap());
        }
    }
    let mut report = SuiteReport::new("hypercomplex", params, &[]);
    for st in &settings {
        report.push(run_law(
            &tagged("basis.conditions", st),
            params.seed,
            1,
            |_, _| {
                st.validate_basis()
                    .err()
                    .map(|e| (e.to_string(), json!({ "setting": st.spec_string() })))
            },
        ));
        report.push(run_law(
            &tagged("basis.sphere_unit", st),
            params.seed,
            params.trials.min(10),
            |rng, _| {
                let w = rng.sphere(st).induced(st);
                let ok = w.mul(&w) == st.algebra().scalar(rat_int(-1));
                (!ok).then(|| {
                    (
                        "omega^2 != -1".into(),
                        json!({"setting": st.spec_string(), "omega": element_to_json(&w)}),
                    )
                })
            },
        ));
    }
    report.finish()
}
