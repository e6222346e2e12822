//! Seeded randomized verification suites.
//!
//! Each law draws its trials from an independent deterministic stream
//! (suite seed mixed with the law name, trial index as the stream id), runs
//! them through [`crate::par::run_trials`], and collects failures with full
//! counterexample payloads. Reports are sorted by law name and trial index,
//! so identical configurations produce byte-identical JSON regardless of
//! thread scheduling.

mod algebra_laws;
mod diagram_laws;
mod extension_laws;
mod kernel_laws;
mod operator_laws;
mod structure_laws;

use serde::Serialize;
use serde_json::Value;

use crate::algebra::{Algebra, Setting};
use crate::error::{Error, Result};
use crate::par::run_trials;
use crate::rng::TrialRng;

pub use algebra_laws::{algebra_suite, algebra_suite_filtered, hypercomplex_suite};
pub use diagram_laws::diagrams_suite;
pub use extension_laws::extensions_suite;
pub use kernel_laws::kernels_suite;
pub use operator_laws::operators_suite;
pub use structure_laws::{poly_suite, stem_suite};

#[derive(Clone, Copy, Debug)]
pub struct SuiteParams {
    pub trials: usize,
    pub degree: u32,
    pub seed: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            trials: 50,
            degree: 4,
            seed: 42,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub trial: u64,
    pub detail: String,
    pub payload: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct LawResult {
    pub law: String,
    pub trials: u64,
    pub failures: Vec<Failure>,
}

impl LawResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub trials: u64,
    pub degree: u32,
    pub settings: Vec<String>,
    pub laws: Vec<LawResult>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn new(suite: &str, params: &SuiteParams, settings: &[Setting]) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            seed: params.seed,
            trials: params.trials as u64,
            degree: params.degree,
            settings: settings.iter().map(Setting::spec_string).collect(),
            laws: Vec::new(),
            passed: true,
        }
    }

    pub fn push(&mut self, law: LawResult) {
        self.passed &= law.passed();
        self.laws.push(law);
    }

    pub fn finish(mut self) -> SuiteReport {
        self.laws.sort_by(|a, b| a.law.cmp(&b.law));
        self
    }

    pub fn failure_count(&self) -> usize {
        self.laws.iter().map(|l| l.failures.len()).sum()
    }
}

fn fnv1a(s: &str) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Runs one law: `check` returns `None` on success or a failure detail plus
/// counterexample payload.
pub(crate) fn run_law<F>(name: &str, seed: u64, trials: usize, check: F) -> LawResult
where
    F: Fn(&mut TrialRng, u64) -> Option<(String, Value)> + Sync,
{
    let law_seed = seed ^ fnv1a(name);
    let mut failures: Vec<Failure> = run_trials(trials, |t| {
        let mut rng = TrialRng::new(law_seed, t as u64);
        check(&mut rng, t as u64).map(|(detail, payload)| Failure {
            trial: t as u64,
            detail,
            payload,
        })
    })
    .into_iter()
    .flatten()
    .collect();
    failures.sort_by_key(|f| f.trial);
    LawResult {
        law: name.to_string(),
        trials: trials as u64,
        failures,
    }
}

/// Law name tagged with the setting it runs under.
pub(crate) fn tagged(law: &str, setting: &Setting) -> String {
    format!("{law} [{}]", setting.spec_string())
}

/// Default setting lists per suite (used by the CLI when no explicit setting
/// is given); acceptance tests pass their own lists.
pub fn default_settings(suite: &str) -> Result<Vec<Setting>> {
    let clifford = |n: u32, m: usize, p: usize| Setting::new(Algebra::clifford(n)?, m, p);
    let octonion = |m: usize, p: usize| Setting::new(Algebra::octonion(), m, p);
    Ok(match suite {
        "algebra" => vec![
            clifford(3, 3, 1)?,
            clifford(5, 5, 2)?,
            octonion(7, 4)?,
        ],
        "poly" => vec![clifford(3, 3, 1)?, octonion(7, 4)?],
        "stem" => vec![clifford(3, 3, 1)?, clifford(5, 5, 2)?, octonion(7, 4)?],
        "operators" => vec![clifford(3, 3, 1)?, clifford(5, 5, 2)?, octonion(7, 4)?],
        "extensions" => vec![
            clifford(2, 2, 1)?,
            clifford(3, 3, 1)?,
            clifford(5, 5, 2)?,
            octonion(7, 2)?,
        ],
        "kernels" | "hypercomplex" => vec![],
        "diagrams" => vec![],
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown suite {other:?} (expected algebra|hypercomplex|poly|stem|operators|extensions|diagrams|kernels)"
            )))
        }
    })
}

/// Settings used by the diagram suite for a given odd `q`.
pub fn diagram_settings(q: usize) -> Result<Vec<Setting>> {
    if q.is_multiple_of(2) {
        return Err(Error::EvenQ(q as u32));
    }
    let mut out = Vec::new();
    // p = 0 slice-type split
    out.push(Setting::new(Algebra::clifford(q as u32)?, q, 0)?);
    // p = 2 mixed split when the Clifford cap allows it
    if q + 2 <= 12 {
        out.push(Setting::new(Algebra::clifford((q + 2) as u32)?, q + 2, 2)?);
    }
    // octonions with m = 7 when p = 7 - q is valid
    if q <= 7 {
        out.push(Setting::new(Algebra::octonion(), 7, 7 - q)?);
    }
    Ok(out)
}

/// Runs a suite by name against explicit settings (or the defaults when the
/// list is empty). `qs` is consumed by the diagram suite only.
pub fn run_suite(
    suite: &str,
    settings: &[Setting],
    qs: &[usize],
    params: &SuiteParams,
) -> Result<SuiteReport> {
    let owned;
    let settings = if settings.is_empty() && suite != "diagrams" {
        owned = default_settings(suite)?;
        &owned
    } else {
        settings
    };
    match suite {
        "algebra" => Ok(algebra_suite(settings, params)),
        "hypercomplex" => Ok(hypercomplex_suite(params)),
        "poly" => Ok(poly_suite(settings, params)),
        "stem" => Ok(stem_suite(settings, params)),
        "operators" => Ok(operators_suite(settings, params)),
        "extensions" => Ok(extensions_suite(settings, params)),
        "kernels" => Ok(kernels_suite(params)),
        "diagrams" => {
            let mut list = Vec::new();
            if settings.is_empty() {
                for &q in qs {
                    list.extend(diagram_settings(q)?);
                }
            } else {
                for s in settings {
                    if s.q() % 2 == 0 {
                        return Err(Error::EvenQ(s.q() as u32));
                    }
                    list.push(s.clone());
                }
            }
            Ok(diagrams_suite(&list, params))
        }
        other => Err(Error::InvalidInput(format!("unknown suite {other:?}"))),
    }
}

pub const SUITES: &[&str] = &[
    "algebra",
    "hypercomplex",
    "poly",
    "stem",
    "operators",
    "extensions",
    "diagrams",
    "kernels",
];
