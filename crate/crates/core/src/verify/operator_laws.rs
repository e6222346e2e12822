//! Operator-algebra laws: the four Laplacian factorizations, the eight
//! splitting-lemma formulas, spherical-Dirac identities, slice harmonicity,
//! the radial-iterate system, and order-independence of iterated Dirac
//! powers.

use serde_json::{json, Value};

use crate::algebra::{AlgebraKind, Setting};
use crate::extensions::seed_to_ambient;
use crate::json::{poly_to_json, stem_to_json};
use crate::operators::{
    dirac, dirac_bar, dirac_bar_base, dirac_bar_right, dirac_base, dirac_power, dirac_q,
    dirac_right, gamma_spherical, inter_relation_residual, laplacian, slice_dirac,
    slice_laplacian_residuals,
};
use crate::poly::{assoc_product, x_q_poly, AmbientPoly, AssocTree};
use crate::rational::rat_int;
use crate::stem::{evaluate_on_slice, partial_even_odd, subst_u_with_rho};
use crate::verify::{run_law, tagged, SuiteParams, SuiteReport};

fn payload(setting: &Setting, polys: &[(&str, &AmbientPoly)]) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("setting".into(), json!(setting.spec_string()));
    for (name, p) in polys {
        obj.insert((*name).into(), poly_to_json(p));
    }
    Value::Object(obj)
}

/// All multi-indices over `nvars` slots with total weight exactly `w`.
fn multi_indices(nvars: usize, w: u32) -> Vec<Vec<u16>> {
    fn go(nvars: usize, w: u32, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if prefix.len() == nvars - 1 {
            prefix.push(w as u16);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for take in 0..=w {
            prefix.push(take as u16);
            go(nvars, w - take, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(nvars, w, &mut Vec::new(), &mut out);
    out
}

fn multiset_perms(sorted: &[usize]) -> Vec<Vec<usize>> {
    let mut cur = sorted.to_vec();
    let mut out = vec![cur.clone()];
    loop {
        let n = cur.len();
        if n < 2 {
            break;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

/// Independent route for `D^k f`: the grouped symmetrized sum
/// `sum_{|k|=k} sum_{perms} (v_{i_1} v_{i_2} .. v_{i_k} (d^k f))_tree`.
fn dirac_power_symmetrized(f: &AmbientPoly, k: u32, tree: &dyn Fn(usize) -> AssocTree) -> AmbientPoly {
    let setting = f.setting().clone();
    let n = f.nvars();
    let mut out = AmbientPoly::zero(&setting, n);
    for idx in multi_indices(n, k) {
        // d^idx f
        let mut df = f.clone();
        for (var, &e) in idx.iter().enumerate() {
            for _ in 0..e {
                df = df.partial(var).unwrap();
            }
        }
        if df.is_zero() {
            continue;
        }
        let mut align = Vec::new();
        for (var, &e) in idx.iter().enumerate() {
            for _ in 0..e {
                align.push(var);
            }
        }
        for perm in multiset_perms(&align) {
            let mut factors: Vec<AmbientPoly> = perm
                .iter()
                .map(|&v| AmbientPoly::constant(&setting, n, setting.v(v).clone()))
                .collect();
            factors.push(df.clone());
            out = out.add(&assoc_product(&factors, &tree(factors.len())).unwrap());
        }
    }
    out
}

pub fn operators_suite(settings: &[Setting], params: &SuiteParams) -> SuiteReport {
    let mut report = SuiteReport::new("operators", params, settings);
    for st in settings {
        report.push(run_law(
            &tagged("laplacian.four_routes", st),
            params.seed,
            params.trials,
            |rng, _| {
                let f = rng.ambient_poly(st, params.degree.min(5));
                let delta = laplacian(&f);
                let ok = delta == dirac_bar(&dirac(&f))
                    && delta == dirac(&dirac_bar(&f))
                    && delta == dirac_bar_right(&dirac_right(&f))
                    && delta == dirac_right(&dirac_bar_right(&f));
                (!ok).then(|| ("Laplacian routes disagree".into(), payload(st, &[("f", &f)])))
            },
        ));

        report.push(run_law(
            &tagged("splitting.eight_formulas", st),
            params.seed,
            params.trials,
            |rng, _| {
                let q = rat_int(st.q() as i64);
                let g = seed_to_ambient(&rng.seed_poly(st, 3));
                let xq = x_q_poly(st);
                for k in 0..=3u32 {
                    let even = xq.pow(2 * k); // real scalar polynomial
                    let odd = even.mul(&xq);
                    let even_g = even.mul(&g);
                    let odd_g = odd.mul(&g);
                    let two_k = rat_int(2 * k as i64);
                    // x_q^{2k-1} g with the convention 0 * x_q^{-1} g = 0
                    let even_minus_one_g = if k == 0 {
                        AmbientPoly::zero(st, st.nvars())
                    } else {
                        even.div_exact_by_real(&crate::poly::rho_poly(st))
                            .map(|e| e.neg().mul(&xq).mul(&g))
                            .unwrap_or_else(|| AmbientPoly::zero(st, st.nvars()))
                    };
                    let dp_even = dirac_base(&even_g);
                    let dp_odd = dirac_base(&odd_g);
                    let dq_even = dirac_q(&even_g);
                    let dq_odd = dirac_q(&odd_g);
                    let ok = dp_even == even.mul(&dirac_base(&g))
                        && dp_odd == odd.mul(&dirac_bar_base(&g))
                        && dq_even == even_minus_one_g.scale(&two_k).neg()
                        && dq_odd == even_g.scale(&(two_k.clone() + &q)).neg()
                        && dirac(&even_g)
                            == even.mul(&dirac_base(&g)).sub(&even_minus_one_g.scale(&two_k))
                        && dirac(&odd_g)
                            == odd
                                .mul(&dirac_bar_base(&g))
                                .sub(&even_g.scale(&(two_k.clone() + &q)))
                        && dirac_bar(&even_g)
                            == even
                                .mul(&dirac_bar_base(&g))
                                .add(&even_minus_one_g.scale(&two_k))
                        && dirac_bar(&odd_g)
                            == odd.mul(&dirac_base(&g)).add(&even_g.scale(&(two_k + &q)));
                    if !ok {
                        return Some((
                            format!("splitting formula failed at k = {k}"),
                            payload(st, &[("g", &g)]),
                        ));
                    }
                }
                None
            },
        ));

        report.push(run_law(
            &tagged("gamma.spherical_derivative", st),
            params.seed,
            params.trials,
            |rng, _| {
                let s = rng.stem(st, params.degree.min(4));
                let f = s.materialize();
                let expected = x_q_poly(st)
                    .mul(&subst_u_with_rho(&s.spherical_derivative()))
                    .scale(&rat_int(st.q() as i64 - 1));
                let got = gamma_spherical(&f);
                (got != expected).then(|| {
                    (
                        "Gamma f != (q-1) x_q f_s'".into(),
                        json!({"setting": st.spec_string(), "stem": stem_to_json(&s)}),
                    )
                })
            },
        ));

        report.push(run_law(
            &tagged("gamma.po_part", st),
            params.seed,
            params.trials,
            |rng, _| {
                let s = rng.stem(st, params.degree.min(4));
                let f = s.materialize();
                let (_, po) = partial_even_odd(&f);
                let ok = gamma_spherical(&f) == po.scale(&rat_int(st.q() as i64 - 1));
                (!ok).then(|| {
                    (
                        "Gamma f != (q-1) PO[f]".into(),
                        json!({"setting": st.spec_string(), "stem": stem_to_json(&s)}),
                    )
                })
            },
        ));

        report.push(run_law(
            &tagged("slice.d_minus_d_omega", st),
            params.seed,
            params.trials,
            |rng, _| {
                // (D - D_omega) f = (1 - q) f_s' at rational slice points
                let s = rng.stem(st, params.degree.min(4));
                let f = s.materialize();
                let df = dirac(&f);
                let deriv = subst_u_with_rho(&s.spherical_derivative());
                for _ in 0..3 {
                    let omega = rng.sphere(st);
                    let slice_df = slice_dirac(&f, &omega);
                    let xp = rng.point(st.p() + 1);
                    let r = rng.rat();
                    let lhs_ambient = evaluate_on_slice(&df, &xp, &r, &omega);
                    let mut slice_pt = xp.clone();
                    slice_pt.push(r.clone());
                    let lhs = lhs_ambient.sub(&slice_df.evaluate(&slice_pt));
                    let rhs = evaluate_on_slice(&deriv, &xp, &r, &omega)
                        .scale(&rat_int(1 - st.q() as i64));
                    if lhs != rhs {
                        return Some((
                            "(D - D_omega) f != (1-q) f_s'".into(),
                            json!({"setting": st.spec_string(), "stem": stem_to_json(&s)}),
                        ));
                    }
                }
                None
            },
        ));

        report.push(run_law(
            &tagged("slice.harmonic_components", st),
            params.seed,
            params.trials,
            |rng, _| {
                // GPS-regular stems have harmonic F1, F2 in the slice variables
                let s = match rng.gps_stem(st, params.degree.min(5)) {
                    Ok(s) => s,
                    Err(e) => return Some((format!("stem generation failed: {e}"), Value::Null)),
                };
                let (r1, r2) = slice_laplacian_residuals(&s);
                (!(r1.is_zero() && r2.is_zero())).then(|| {
                    (
                        "slice Laplacian residual nonzero".into(),
                        json!({"setting": st.spec_string(), "stem": stem_to_json(&s)}),
                    )
                })
            },
        ));

        report.push(run_law(
            &tagged("radial.inter_relation", st),
            params.seed,
            params.trials,
            |rng, _| {
                let s = match rng.gps_stem(st, params.degree.min(5)) {
                    Ok(s) => s,
                    Err(e) => return Some((format!("stem generation failed: {e}"), Value::Null)),
                };
                for k in 0..=3u32 {
                    let (r1, r2) = inter_relation_residual(&s, k);
                    if !(r1.is_zero() && r2.is_zero()) {
                        return Some((
                            format!("radial iterate system fails at k = {k}"),
                            json!({"setting": st.spec_string(), "stem": stem_to_json(&s)}),
                        ));
                    }
                }
                None
            },
        ));

        // order-independence of the iterated Dirac power is only informative
        // where the algebra is non-associative
        let max_power = if matches!(st.algebra().kind(), AlgebraKind::Octonion) {
            3
        } else {
            2
        };
        report.push(run_law(
            &tagged("dirac_power.symmetrized_sum", st),
            params.seed,
            params.trials.min(20),
            |rng, _| {
                let f = rng.ambient_poly(st, 3);
                for k in 1..=max_power {
                    let iterated = dirac_power(&f, k);
                    let left = dirac_power_symmetrized(&f, k, &AssocTree::left_comb);
                    let right = dirac_power_symmetrized(&f, k, &AssocTree::right_comb);
                    if iterated != left || iterated != right {
                        return Some((
                            format!("iterated D^{k} disagrees with symmetrized sum"),
                            payload(st, &[("f", &f)]),
                        ));
                    }
                }
                None
            },
        ));

        report.push(run_law(
            &tagged("dirac_power.dbar_gives_laplacian", st),
            params.seed,
            params.trials,
            |rng, _| {
                let f = rng.ambient_poly(st, params.degree.min(5));
                let ok = dirac_bar(&dirac(&f)) == laplacian(&f);
                (!ok).then(|| ("Dbar D != Delta".into(), payload(st, &[("f", &f)])))
            },
        ));
    }
    report.finish()
}
