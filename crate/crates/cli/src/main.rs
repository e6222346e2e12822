//! `hyperck`: exact computations and theorem verification for generalized
//! partial-slice monogenic functions over Clifford algebras and octonions.
//!
//! All inputs and outputs are JSON; rationals are `"num/den"` strings, so
//! every run is bit-exact and reports are byte-identical for identical
//! configurations. Exit codes: 0 success / all laws pass, 1 a check or a
//! verification suite failed, 2 configuration or input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hyperck_core::extensions::{
    ck_extend, fueter_polynomial, gck_extend, hgck_extend, v_polynomial,
};
use hyperck_core::fueter_sce::fueter_sce_map;
use hyperck_core::json::{poly_from_json, poly_to_json, stem_from_json, stem_to_json};
use hyperck_core::kernels::{
    kelvin_dirac_power, kelvin_dirac_power_right, poly_kernel, slice_cauchy_kernel,
    slice_kernel_dirac_left, slice_kernel_dirac_right, KelvinFunction,
};
use hyperck_core::operators::{cr_check, dirac, laplacian};
use hyperck_core::verify::{run_suite, SuiteParams, SUITES};
use hyperck_core::Setting;

#[derive(Parser)]
#[command(
    name = "hyperck",
    about = "Exact hypercomplex-analysis toolkit: CK extensions, Fueter-Sce map, theorem suites",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct IoArgs {
    /// Hypercomplex setting, e.g. "clifford:n=5,m=5,p=2" or "octonion,m=7,p=4"
    #[arg(long)]
    setting: String,
    /// Input JSON file
    #[arg(long)]
    input: PathBuf,
    /// Output JSON file (stdout when omitted)
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    /// dirac(f) = 0 for an ambient polynomial
    Monogenic,
    /// laplacian(f) = 0 for an ambient polynomial
    Harmonic,
    /// the generalized Cauchy-Riemann system for a stem
    GpsRegular,
}

#[derive(Subcommand)]
enum Cmd {
    /// Describe an algebra/setting: dimension, blade labels, basis validation
    AlgebraInfo {
        #[arg(long)]
        setting: String,
    },
    /// Generalized partial-slice monogenic extension of base data (stem out)
    CkExtend(IoArgs),
    /// Monogenic extension of base data (ambient polynomial out)
    GckExtend(IoArgs),
    /// Harmonic extension of a pair {"A0": .., "A1": ..} (ambient out)
    HgckExtend(IoArgs),
    /// Apply the Fueter-Sce map to a GPS-regular stem (stem out)
    FueterSce(IoArgs),
    /// Fueter polynomial for a multi-index, e.g. --k 1,1,0
    FueterPoly {
        #[arg(long)]
        setting: String,
        /// Comma-separated multi-index over x_0..x_p
        #[arg(long)]
        k: String,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Also compare against the CK route and report equality
        #[arg(long, default_value_t = false)]
        check_ck_route: bool,
    },
    /// Kernel checks: build the k-th poly-monogenic kernel and verify
    /// Dirac-power relations
    Kernel {
        #[arg(long)]
        setting: String,
        /// Kernel order k >= 1
        #[arg(long)]
        k: u32,
        /// Check the n-fold Dirac power (left and right) against the ladder
        #[arg(long = "check-dirac-power")]
        check_dirac_power: Option<u32>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Structural checks on a polynomial or stem
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        #[arg(long)]
        setting: String,
        #[arg(long)]
        input: PathBuf,
    },
    /// Run a randomized law suite and emit a JSON report
    VerifyTheorems {
        /// algebra|hypercomplex|poly|stem|operators|extensions|diagrams|kernels|all
        #[arg(long)]
        suite: String,
        /// Explicit setting (overrides the suite's default list and --q)
        #[arg(long)]
        setting: Option<String>,
        /// Comma-separated odd q values for the diagram suite, e.g. 3,5
        #[arg(long)]
        q: Option<String>,
        #[arg(long, default_value_t = 4)]
        degree: u32,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn max_dim_cap() -> usize {
    std::env::var("HYPERCK_MAX_DIM")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(4096)
}

fn parse_setting(spec: &str) -> Result<Setting> {
    let setting = Setting::parse_spec(spec)?;
    let cap = max_dim_cap();
    if setting.algebra().dim() > cap {
        bail!(
            "algebra dimension {} exceeds HYPERCK_MAX_DIM = {cap}",
            setting.algebra().dim()
        );
    }
    Ok(setting)
}

fn read_json(path: &PathBuf) -> Result<Value> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(value: &Value, output: Option<&PathBuf>) -> Result<()> {
    let text = format!("{}\n", serde_json::to_string_pretty(value)?);
    match output {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn parse_multi_index(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| anyhow!("invalid multi-index component {x:?}"))
        })
        .collect()
}

fn kelvin_to_json(k: &KelvinFunction) -> Value {
    json!({
        "numerator": poly_to_json(k.numerator()),
        "rho_exponent": k.denominator_exponent(),
    })
}

fn run(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::AlgebraInfo { setting } => {
            let st = parse_setting(&setting)?;
            let info = json!({
                "setting": st.spec_string(),
                "algebra": st.algebra().kind().to_string(),
                "dimension": st.algebra().dim(),
                "blade_labels": st.algebra().labels(),
                "m": st.m(),
                "p": st.p(),
                "q": st.q(),
                "hypercomplex_basis_valid": st.validate_basis().is_ok(),
            });
            emit(&info, None)?;
            Ok(0)
        }
        Cmd::CkExtend(io) => {
            let st = parse_setting(&io.setting)?;
            let seed = poly_from_json(&st, st.p() + 1, &read_json(&io.input)?)?;
            let stem = ck_extend(&seed)?;
            emit(&stem_to_json(&stem), io.output.as_ref())?;
            Ok(0)
        }
        Cmd::GckExtend(io) => {
            let st = parse_setting(&io.setting)?;
            let seed = poly_from_json(&st, st.p() + 1, &read_json(&io.input)?)?;
            let out = gck_extend(&seed)?;
            emit(&poly_to_json(&out), io.output.as_ref())?;
            Ok(0)
        }
        Cmd::HgckExtend(io) => {
            let st = parse_setting(&io.setting)?;
            let doc = read_json(&io.input)?;
            let a0 = doc
                .get("A0")
                .ok_or_else(|| anyhow!("hgck input needs \"A0\""))?;
            let a1 = doc
                .get("A1")
                .ok_or_else(|| anyhow!("hgck input needs \"A1\""))?;
            let a0 = poly_from_json(&st, st.p() + 1, a0)?;
            let a1 = poly_from_json(&st, st.p() + 1, a1)?;
            let out = hgck_extend(&a0, &a1)?;
            emit(&poly_to_json(&out), io.output.as_ref())?;
            Ok(0)
        }
        Cmd::FueterSce(io) => {
            let st = parse_setting(&io.setting)?;
            let stem = stem_from_json(&st, &read_json(&io.input)?)?;
            let image = fueter_sce_map(&stem)?;
            emit(&stem_to_json(&image), io.output.as_ref())?;
            Ok(0)
        }
        Cmd::FueterPoly {
            setting,
            k,
            output,
            check_ck_route,
        } => {
            let st = parse_setting(&setting)?;
            let k = parse_multi_index(&k)?;
            let p = fueter_polynomial(&st, &k)?;
            if check_ck_route {
                let v = v_polynomial(&st, &k)?;
                let doc = json!({
                    "k": k,
                    "polynomial": poly_to_json(&p),
                    "ck_route_equal": v == p,
                });
                emit(&doc, output.as_ref())?;
                return Ok(if v == p { 0 } else { 1 });
            }
            emit(&poly_to_json(&p), output.as_ref())?;
            Ok(0)
        }
        Cmd::Kernel {
            setting,
            k,
            check_dirac_power,
            output,
        } => {
            let st = parse_setting(&setting)?;
            let ek = poly_kernel(&st, k)?;
            let mut doc = serde_json::Map::new();
            doc.insert("setting".into(), json!(st.spec_string()));
            doc.insert("k".into(), json!(k));
            doc.insert("kernel".into(), kelvin_to_json(&ek));
            let mut ok = true;
            if let Some(n) = check_dirac_power {
                let left = kelvin_dirac_power(&ek, n)?;
                let right = kelvin_dirac_power_right(&ek, n)?;
                let expected = if n >= k {
                    KelvinFunction::zero(&st, st.nvars())
                } else {
                    poly_kernel(&st, k - n)?
                };
                let left_ok = left == expected;
                let right_ok = right == expected;
                ok = left_ok && right_ok;
                doc.insert(
                    "dirac_power".into(),
                    json!({
                        "n": n,
                        "left_matches_ladder": left_ok,
                        "right_matches_ladder": right_ok,
                        "result": kelvin_to_json(&left),
                    }),
                );
            }
            let slice = slice_cauchy_kernel(&st);
            let (l1, l2) = slice_kernel_dirac_left(&slice)?;
            let (r1, r2) = slice_kernel_dirac_right(&slice)?;
            let slice_ok = l1.is_zero() && l2.is_zero() && r1.is_zero() && r2.is_zero();
            doc.insert("slice_kernel_annihilated".into(), json!(slice_ok));
            ok &= slice_ok;
            emit(&Value::Object(doc), output.as_ref())?;
            Ok(if ok { 0 } else { 1 })
        }
        Cmd::Check {
            kind,
            setting,
            input,
        } => {
            let st = parse_setting(&setting)?;
            let doc = read_json(&input)?;
            let (name, ok) = match kind {
                CheckKind::Monogenic => {
                    let f = poly_from_json(&st, st.nvars(), &doc)?;
                    ("monogenic", dirac(&f).is_zero())
                }
                CheckKind::Harmonic => {
                    let f = poly_from_json(&st, st.nvars(), &doc)?;
                    ("harmonic", laplacian(&f).is_zero())
                }
                CheckKind::GpsRegular => {
                    let s = stem_from_json(&st, &doc)?;
                    ("gps-regular", cr_check(&s))
                }
            };
            emit(
                &json!({"check": name, "setting": st.spec_string(), "ok": ok}),
                None,
            )?;
            Ok(if ok { 0 } else { 1 })
        }
        Cmd::VerifyTheorems {
            suite,
            setting,
            q,
            degree,
            trials,
            seed,
            output,
        } => {
            let params = SuiteParams {
                trials,
                degree,
                seed,
            };
            let settings = match &setting {
                Some(spec) => vec![parse_setting(spec)?],
                None => vec![],
            };
            let qs: Vec<usize> = match &q {
                Some(list) => list
                    .split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<usize>()
                            .map_err(|_| anyhow!("invalid q value {x:?}"))
                    })
                    .collect::<Result<_>>()?,
                None => vec![3],
            };
            let suites: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut reports = Vec::new();
            let mut all_passed = true;
            for s in suites {
                let report = run_suite(s, &settings, &qs, &params)?;
                all_passed &= report.passed;
                reports.push(serde_json::to_value(&report)?);
            }
            let doc = if reports.len() == 1 {
                reports.pop().unwrap()
            } else {
                json!({"suites": reports, "passed": all_passed})
            };
            emit(&doc, output.as_ref())?;
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
