//! Orchestration: runs both suites in a fixed order and aggregates a report.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::curves::{
    check_double_curve_structure, check_pinch_points, check_restriction_square, check_singular_containment,
};
use super::pencil::check_pencil_avoids_vertices;
use super::percolation::{check_percolation, PercolationParams};
use super::planes::{check_general_position, companion_quintic};
use super::result::{timed, CheckResult};
use super::reverse::check_reverse_inclusion;
use super::vertex::{check_vertex_structure, VertexSetup};
use crate::arith::Rat;
use crate::error::ConfigError;
use crate::models::{
    build_arrangement, fermat_octic, octic, octic_symbolic, OcticParams, TangentFrame, DEFAULT_LAMBDA,
};
use crate::report::Report;

pub const MIN_ORDER: usize = 6;
pub const MAX_ORDER: usize = 20;
pub const DEFAULT_ORDER: usize = 12;
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_PLANES: usize = 15;
/// Quintic draws before the companion search gives up.
pub const MAX_QUINTIC_DRAWS: u64 = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FrameChoice {
    Given([Rat; 3]),
    Auto(AutoTag),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AutoTag {
    Auto,
}

impl FrameChoice {
    pub const AUTO: FrameChoice = FrameChoice::Auto(AutoTag::Auto);
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Suites {
    pub planes: bool,
    pub octic: bool,
    /// The slow direction `Sing(X₀) ⊆ ∪S̄_j`; off by default.
    pub reverse_inclusion: bool,
}

impl Default for Suites {
    fn default() -> Suites {
        Suites { planes: true, octic: true, reverse_inclusion: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct SuiteConfig {
    pub lambda: [Rat; 4],
    pub frame: FrameChoice,
    pub order: usize,
    pub seed: u64,
    pub planes: usize,
    pub suites: Suites,
    /// Worker threads; not part of the report body.
    #[serde(skip)]
    pub threads: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig {
            lambda: DEFAULT_LAMBDA.map(Rat::from),
            frame: FrameChoice::AUTO,
            order: DEFAULT_ORDER,
            seed: DEFAULT_SEED,
            planes: DEFAULT_PLANES,
            suites: Suites::default(),
            threads: None,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(MIN_ORDER..=MAX_ORDER).contains(&self.order) {
            return Err(ConfigError::Order(self.order));
        }
        if self.planes < 4 {
            return Err(ConfigError::Invalid(format!("need at least 4 planes, got {}", self.planes)));
        }
        if self.threads == Some(0) {
            return Err(ConfigError::Invalid("threads must be positive".into()));
        }
        Ok(())
    }
}

type Job<'a> = Box<dyn Fn() -> CheckResult + Send + Sync + 'a>;

fn run_jobs(jobs: Vec<Job<'_>>) -> Vec<CheckResult> {
    jobs.into_par_iter().map(timed).collect()
}

fn skip_all(ids: &[String], reason: &str) -> Vec<CheckResult> {
    ids.iter().map(|id| CheckResult::skipped(id.clone(), reason)).collect()
}

fn octic_ids() -> Vec<String> {
    let mut ids =
        vec!["octic.frame".to_string(), "octic.restriction_square".into(), "octic.singular_containment".into()];
    ids.extend((0..4).map(|j| format!("octic.double_curve_{j}")));
    ids.push("octic.pinch_points".into());
    ids.extend((0..4).map(|j| format!("octic.vertex_{j}")));
    ids.push("octic.pencil_vertices".into());
    ids.push("octic.reverse_inclusion".into());
    ids
}

fn octic_suite(config: &SuiteConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut params_check = CheckResult::new("octic.params");
    let params = match OcticParams::new(config.lambda.clone()) {
        Ok(p) => {
            let l: Vec<String> = p.lambda.iter().map(Rat::to_string).collect();
            params_check.witness("lambda", l.join(","));
            p
        }
        Err(e) => {
            params_check.fail("construction", e);
            out.push(params_check);
            out.extend(skip_all(&octic_ids(), "octic.params failed"));
            return out;
        }
    };
    out.push(params_check);

    let mut frame_check = CheckResult::new("octic.frame");
    let frame = match &config.frame {
        FrameChoice::Auto(_) => TangentFrame::auto(&params),
        FrameChoice::Given(mu) => TangentFrame::new(&params, mu.clone()),
    };
    match &frame {
        Ok(f) => {
            let mu: Vec<String> = f.mu.iter().map(Rat::to_string).collect();
            frame_check.witness("mu", mu.join(","));
        }
        Err(e) => {
            frame_check.fail("frame", e);
        }
    }

    let q_sym = octic_symbolic();
    let q = octic(&params);
    let seed = config.seed;
    let p = &params;
    let mut jobs: Vec<Job> =
        vec![Box::new(|| check_restriction_square(&q_sym)), Box::new(|| check_singular_containment(&q_sym))];
    for j in 0..4 {
        jobs.push(Box::new(move || check_double_curve_structure(p, j, seed)));
    }
    let mut base = run_jobs(jobs);
    let square_ok = base[0].passed();
    let curves_ok = base[2..6].iter().all(CheckResult::passed);

    let mut jobs: Vec<Job> = Vec::new();
    if curves_ok {
        jobs.push(Box::new(|| check_pinch_points(p, seed)));
    }
    if let Ok(f) = &frame {
        for j in 0..4 {
            let q = &q;
            let q_sym = &q_sym;
            let order = config.order;
            jobs.push(Box::new(move || {
                let mut setup = VertexSetup::new(p, f, order);
                setup.q_sym = Some(q_sym);
                check_vertex_structure(&setup, q, j)
            }));
        }
    }
    jobs.push(Box::new(|| check_pencil_avoids_vertices(&q, &fermat_octic())));
    if config.suites.reverse_inclusion && square_ok {
        jobs.push(Box::new(|| check_reverse_inclusion(&q)));
    }
    let mut rest = run_jobs(jobs).into_iter();

    out.push(frame_check);
    out.append(&mut base);
    out.push(if curves_ok {
        rest.next().expect("pinch")
    } else {
        CheckResult::skipped("octic.pinch_points", "a double curve check failed")
    });
    for j in 0..4 {
        out.push(match &frame {
            Ok(_) => rest.next().expect("vertex"),
            Err(_) => CheckResult::skipped(format!("octic.vertex_{j}"), "no tangent frame"),
        });
    }
    out.push(rest.next().expect("pencil"));
    out.push(if !config.suites.reverse_inclusion {
        CheckResult::skipped("octic.reverse_inclusion", "disabled; enable with the reverse_inclusion suite flag")
    } else if !square_ok {
        CheckResult::skipped("octic.reverse_inclusion", "octic.restriction_square failed")
    } else {
        rest.next().expect("reverse")
    });
    out
}

fn planes_suite(config: &SuiteConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut arr_check = CheckResult::new("planes.arrangement");
    let arr = match build_arrangement(config.planes, config.seed) {
        Ok(a) => {
            arr_check.witness("forms", a.len());
            arr_check.witness("seed", config.seed);
            a
        }
        Err(e) => {
            arr_check.fail("generator", e);
            out.push(arr_check);
            let ids = ["planes.general_position", "planes.triple_points", "planes.quintic_sections"];
            out.extend(ids.iter().map(|id| CheckResult::skipped(*id, "no arrangement")));
            out.push(timed(|| check_percolation(percolation_params(config))));
            return out;
        }
    };
    out.push(arr_check);
    let gp = timed(|| check_general_position(&arr));
    let gp_ok = gp.passed();
    out.push(gp);
    if gp_ok {
        let start = std::time::Instant::now();
        let (quintic, mut tp, sec, draws) = companion_quintic(&arr, config.seed, MAX_QUINTIC_DRAWS);
        tp.duration_ms = start.elapsed().as_millis() as u64;
        tp.witness("quintic", &quintic);
        tp.witness("draws", draws);
        out.push(tp);
        out.push(sec);
    } else {
        out.push(CheckResult::skipped("planes.triple_points", "planes.general_position failed"));
        out.push(CheckResult::skipped("planes.quintic_sections", "planes.general_position failed"));
    }
    out.push(timed(|| check_percolation(percolation_params(config))));
    out
}

/// The plane section of the arrangement meets the other planes in
/// `planes − 1` lines.
fn percolation_params(config: &SuiteConfig) -> PercolationParams {
    PercolationParams { n_lines: (config.planes - 1) as u32, ..PercolationParams::PLANES15 }
}

/// Runs every enabled check. Check failures are data; only an invalid
/// configuration is an error.
pub fn verify_all(config: &SuiteConfig) -> Result<Report, ConfigError> {
    config.validate()?;
    let run = || {
        let mut checks = Vec::new();
        if config.suites.planes {
            checks.extend(planes_suite(config));
        }
        if config.suites.octic {
            checks.extend(octic_suite(config));
        }
        checks
    };
    let checks = match config.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| ConfigError::Invalid(e.to_string()))?
            .install(run),
        None => run(),
    };
    Ok(Report::new(config.clone(), checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::Status;

    #[test]
    fn zero_lambda3_fails_params_and_skips_dependents() {
        let mut config = SuiteConfig::default();
        config.lambda[3] = Rat::zero();
        config.suites.planes = false;
        let report = verify_all(&config).unwrap();
        assert_eq!(report.overall, Status::Fail);
        let params = report.check("octic.params").unwrap();
        assert_eq!(params.status, Status::Fail);
        assert!(params.witnesses.iter().any(|w| w.value.contains("λ₃ must be nonzero")));
        assert!(report.checks[1..].iter().all(|c| c.status == Status::Skipped));
    }

    #[test]
    fn invalid_order_is_config_error() {
        let config = SuiteConfig { order: 3, ..SuiteConfig::default() };
        assert!(verify_all(&config).is_err());
    }

    #[test]
    fn config_json_round_trip() {
        let config = SuiteConfig { frame: FrameChoice::Given([1, 2, 3].map(Rat::from)), ..SuiteConfig::default() };
        let text = serde_json::to_string(&config).unwrap();
        assert_eq!(serde_json::from_str::<SuiteConfig>(&text).unwrap(), config);
        let auto: SuiteConfig = serde_json::from_str(r#"{"frame": "auto", "seed": 7}"#).unwrap();
        assert_eq!(auto.frame, FrameChoice::AUTO);
        assert_eq!(auto.seed, 7);
    }
}
