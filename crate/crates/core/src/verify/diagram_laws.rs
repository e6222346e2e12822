//! Fueter-Sce laws: monogenicity of the mapped stems, route consistency of
//! the stem-side Laplacian powers, nilpotency at exponent `(q+1)/2`, and the
//! three commutative-diagram theorems.

use serde_json::{json, Value};

use crate::algebra::Setting;
use crate::fueter_sce::{
    fueter_sce_map, laplacian_power_stem, verify_diagram_h, verify_diagram_m, verify_diagram_mh,
    DiagramReport,
};
use crate::json::{poly_to_json, stem_to_json};
use crate::operators::{dirac, laplacian_power, vekua_check};
use crate::poly::AmbientPoly;
use crate::stem::extract;
use crate::verify::{run_law, tagged, SuiteParams, SuiteReport};

fn seed_payload(setting: &Setting, seed: &AmbientPoly) -> Value {
    json!({
        "setting": setting.spec_string(),
        "seed": poly_to_json(seed),
    })
}

fn diagram_failure(report: &DiagramReport) -> Option<String> {
    let failed: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| !c.ok)
        .map(|c| c.label.as_str())
        .collect();
    if failed.is_empty() {
        None
    } else {
        Some(format!("{}: {}", report.theorem, failed.join(", ")))
    }
}

pub fn diagrams_suite(settings: &[Setting], params: &SuiteParams) -> SuiteReport {
    let mut report = SuiteReport::new("diagrams", params, settings);
    for st in settings {
        report.push(run_law(
            &tagged("fueter_sce.image_monogenic", st),
            params.seed,
            params.trials,
            |rng, _| {
                let s = match rng.gps_stem(st, params.degree.min(5)) {
                    Ok(s) => s,
                    Err(e) => return Some((format!("stem generation failed: {e}"), Value::Null)),
                };
                let image = match fueter_sce_map(&s) {
                    Ok(i) => i,
                    Err(e) => {
                        return Some((
                            format!("fueter_sce_map failed: {e}"),
                            json!({"setting": st.spec_string(), "stem": stem_to_json(&s)}),
                        ))
                    }
                };
                let ok = vekua_check(&image) && dirac(&image.materialize()).is_zero();
                (!ok).then(|| {
                    (
                        "Fueter-Sce image not monogenic".into(),
                        json!({"setting": st.spec_string(), "stem": stem_to_json(&s)}),
                    )
                })
            },
        ));

        report.push(run_law(
            &tagged("fueter_sce.route_consistency", st),
            params.seed,
            params.trials,
            |rng, _| {
                // stem-side Laplacian powers match the ambient operator route
                let s = match rng.gps_stem(st, params.degree.min(5)) {
                    Ok(s) => s,
                    Err(e) => return Some((format!("stem generation failed: {e}"), Value::Null)),
                };
                let ambient = s.materialize();
                let max_k = (st.q() as u32).div_ceil(2);
                for k in 0..=max_k {
                    let via_stem = match laplacian_power_stem(&s, k) {
                        Ok(v) => v,
                        Err(e) => {
                            return Some((
                                format!("laplacian_power_stem failed: {e}"),
                                json!({"setting": st.spec_string(), "stem": stem_to_json(&s)}),
                            ))
                        }
                    };
                    let via_ambient = laplacian_power(&ambient, k);
                    if via_stem.materialize() != via_ambient {
                        return Some((
                            format!("stem and ambient Laplacian routes differ at k = {k}"),
                            json!({"setting": st.spec_string(), "stem": stem_to_json(&s)}),
                        ));
                    }
                    // the ambient result is slice-form, so extraction agrees too
                    if !via_ambient.is_zero() {
                        match extract(&via_ambient) {
                            Ok(back) if back == via_stem => {}
                            _ => {
                                return Some((
                                    format!("extraction of Delta^{k} disagrees"),
                                    json!({"setting": st.spec_string(), "stem": stem_to_json(&s)}),
                                ))
                            }
                        }
                    }
                }
                None
            },
        ));

        report.push(run_law(
            &tagged("fueter_sce.delta_power_annihilates", st),
            params.seed,
            params.trials,
            |rng, _| {
                let s = match rng.gps_stem(st, params.degree.min(5)) {
                    Ok(s) => s,
                    Err(e) => return Some((format!("stem generation failed: {e}"), Value::Null)),
                };
                let k = (st.q() as u32).div_ceil(2);
                let out = laplacian_power(&s.materialize(), k);
                (!out.is_zero()).then(|| {
                    (
                        format!("Delta^{k} does not annihilate a regular slice function"),
                        json!({"setting": st.spec_string(), "stem": stem_to_json(&s)}),
                    )
                })
            },
        ));

        report.push(run_law(
            &tagged("diagram.m", st),
            params.seed,
            params.trials,
            |rng, _| {
                let seed = rng.seed_poly(st, params.degree.min(5));
                match verify_diagram_m(&seed) {
                    Ok(r) => diagram_failure(&r).map(|d| (d, seed_payload(st, &seed))),
                    Err(e) => Some((format!("verifier error: {e}"), seed_payload(st, &seed))),
                }
            },
        ));

        report.push(run_law(
            &tagged("diagram.mh", st),
            params.seed,
            params.trials,
            |rng, _| {
                let seed = rng.seed_poly(st, params.degree.min(5));
                match verify_diagram_mh(&seed) {
                    Ok(r) => diagram_failure(&r).map(|d| (d, seed_payload(st, &seed))),
                    Err(e) => Some((format!("verifier error: {e}"), seed_payload(st, &seed))),
                }
            },
        ));

        if st.q() >= 3 {
            report.push(run_law(
                &tagged("diagram.h", st),
                params.seed,
                params.trials,
                |rng, _| {
                    let seed = rng.seed_poly(st, params.degree.min(5));
                    match verify_diagram_h(&seed) {
                        Ok(r) => diagram_failure(&r).map(|d| (d, seed_payload(st, &seed))),
                        Err(e) => Some((format!("verifier error: {e}"), seed_payload(st, &seed))),
                    }
                },
            ));
        }

        if st.p() == 0 && st.q() == 3 {
            report.push(run_law(
                &tagged("fueter_sce.spot_x_squared", st),
                params.seed,
                1,
                |_, _| {
                    // Delta(x^2) = -4 for the quaternion-type split, cross-checked
                    // against the direct ambient Laplacian
                    let x0 = AmbientPoly::var(st, 1, 0).unwrap();
                    let s = crate::extensions::ck_extend(&x0.mul(&x0)).unwrap();
                    let image = fueter_sce_map(&s).unwrap();
                    let expected =
                        AmbientPoly::scalar(st, st.nvars(), crate::rational::rat_int(-4));
                    let ambient_route = crate::operators::laplacian(&s.materialize());
                    let ok = image.materialize() == expected && ambient_route == expected;
                    (!ok).then(|| {
                        (
                            "Delta(x^2) != -4".into(),
                            json!({"setting": st.spec_string()}),
                        )
                    })
                },
            ));
        }
    }
    report.finish()
}
