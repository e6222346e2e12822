//! Kernel laws: the Dirac-power ladder on the poly-monogenic family, slice
//! kernel annihilation (formal and instantiated), space closure, and the
//! fundamental solution.

use serde_json::json;

use crate::algebra::{Algebra, Setting};
use crate::kernels::{
    cauchy_kernel, fundamental_solution, kelvin_dirac, kelvin_dirac_base_left,
    kelvin_dirac_power, kelvin_dirac_power_right, poly_kernel, slice_cauchy_kernel,
    slice_kernel_at, slice_kernel_dirac_left, slice_kernel_dirac_right, KelvinFunction,
};
use crate::verify::{run_law, tagged, SuiteParams, SuiteReport};

fn ambient_settings() -> Vec<Setting> {
    let mut out = Vec::new();
    for m in [2usize, 3] {
        out.push(Setting::new(Algebra::clifford(m as u32).unwrap(), m, 0).unwrap());
        out.push(Setting::new(Algebra::octonion(), m, 0).unwrap());
    }
    out
}

fn slice_settings() -> Vec<Setting> {
    // p in {0,1,2}; keep q = 2 so the formal unit matters
    (0..=2usize)
        .map(|p| Setting::new(Algebra::clifford((p + 2) as u32).unwrap(), p + 2, p).unwrap())
        .collect()
}

pub fn kernels_suite(params: &SuiteParams) -> SuiteReport {
    let mut report = SuiteReport::new("kernels", params, &[]);

    for st in ambient_settings() {
        report.push(run_law(
            &tagged("kernel.dirac_power_ladder", &st),
            params.seed,
            1,
            |_, _| {
                for k in 1..=4u32 {
                    let ek = poly_kernel(&st, k).unwrap();
                    for n in 1..=k {
                        let left = kelvin_dirac_power(&ek, n).unwrap();
                        let right = kelvin_dirac_power_right(&ek, n).unwrap();
                        let expected = if n == k {
                            KelvinFunction::zero(&st, st.nvars())
                        } else {
                            poly_kernel(&st, k - n).unwrap()
                        };
                        if left != expected || right != expected {
                            return Some((
                                format!("D^{n} E^[{k}] ladder broken"),
                                json!({"setting": st.spec_string(), "k": k, "n": n}),
                            ));
                        }
                    }
                }
                None
            },
        ));

        report.push(run_law(
            &tagged("kernel.cauchy_monogenic", &st),
            params.seed,
            1,
            |_, _| {
                let e = cauchy_kernel(&st).unwrap();
                let ok = kelvin_dirac(&e).unwrap().is_zero();
                (!ok).then(|| ("Cauchy kernel not monogenic".into(), json!({"setting": st.spec_string()})))
            },
        ));

        report.push(run_law(
            &tagged("kernel.fundamental_solution_harmonic", &st),
            params.seed,
            1,
            |_, _| {
                let k = fundamental_solution(&st, st.nvars());
                let ok = k.laplacian().unwrap().is_zero();
                (!ok).then(|| ("rho^{2-nu} not harmonic".into(), json!({"setting": st.spec_string()})))
            },
        ));

        report.push(run_law(
            &tagged("kernel.closure_under_derivative", &st),
            params.seed,
            params.trials.min(20),
            |rng, _| {
                // derivative raises the exponent by exactly 2 before reduction
                let num = rng.ambient_poly(&st, 3);
                if num.is_zero() {
                    return None;
                }
                let s = 2 * rng.small_index(3) as u32 + st.nvars() as u32;
                let k = KelvinFunction::new(num, s);
                if k.is_zero() {
                    return None;
                }
                let i = rng.small_index(st.nvars());
                let d = k.derivative(i).unwrap();
                let ok = d.is_zero()
                    || (d.denominator_exponent() <= k.denominator_exponent() + 2
                        && d.denominator_exponent() % 2 == (k.denominator_exponent() + 2) % 2);
                (!ok).then(|| {
                    (
                        "derivative left the Kelvin space".into(),
                        json!({"setting": st.spec_string(), "s": s, "i": i}),
                    )
                })
            },
        ));
    }

    for st in slice_settings() {
        report.push(run_law(
            &tagged("kernel.slice_annihilated_formally", &st),
            params.seed,
            1,
            |_, _| {
                let k = slice_cauchy_kernel(&st);
                let left = slice_kernel_dirac_left(&k).unwrap();
                let right = slice_kernel_dirac_right(&k).unwrap();
                let ok = left.0.is_zero() && left.1.is_zero() && right.0.is_zero() && right.1.is_zero();
                (!ok).then(|| {
                    (
                        "slice kernel survives the formal slice Dirac".into(),
                        json!({"setting": st.spec_string()}),
                    )
                })
            },
        ));

        report.push(run_law(
            &tagged("kernel.slice_annihilated_at_points", &st),
            params.seed,
            params.trials.min(10),
            |rng, _| {
                // rational-point cross-check of the formal route
                let k = slice_cauchy_kernel(&st);
                let omega = rng.sphere(&st);
                let inst = slice_kernel_at(&k, &omega).unwrap();
                let w = omega.induced(&st);
                let p = st.p();
                let d = kelvin_dirac_base_left(&inst)
                    .unwrap()
                    .add(&inst.derivative(p + 1).unwrap().leftmul(&w))
                    .unwrap();
                (!d.is_zero()).then(|| {
                    (
                        "instantiated slice kernel not annihilated".into(),
                        json!({"setting": st.spec_string()}),
                    )
                })
            },
        ));
    }

    report.finish()
}
