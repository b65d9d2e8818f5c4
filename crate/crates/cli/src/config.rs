use std::fs;
use std::path::{Path, PathBuf};

use paramvex_core::analysis::CheckKind;
use paramvex_core::numeric::ParamBox;
use paramvex_core::problem::{catalog_instance, CatalogInstance};
use paramvex_core::{Program64, Tolerances64};
use serde::Deserialize;

/// Points per dimension: one count for all, or one per dimension.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Points {
    Uniform(usize),
    PerDim(Vec<usize>),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub points: Points,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegionSpec {
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToleranceOverride {
    pub feasibility_eps: Option<f64>,
    pub value_eps: Option<f64>,
    pub convexity_eps: Option<f64>,
    pub unbounded_threshold: Option<f64>,
}

/// Scenario file as written by the user.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub program: Option<String>,
    pub program_file: Option<PathBuf>,
    pub grid: Option<GridSpec>,
    pub region: Option<RegionSpec>,
    pub checks: Option<Vec<String>>,
    #[serde(default)]
    pub tolerances: ToleranceOverride,
    pub seed: Option<u64>,
    pub output: Option<PathBuf>,
}

/// A loaded scenario, ready to run.
pub struct Scenario {
    pub name: String,
    pub program: Program64,
    pub instance: Option<CatalogInstance<f64>>,
    pub grid_box: ParamBox<f64>,
    pub grid_points: Vec<usize>,
    pub region: ParamBox<f64>,
    pub checks: Vec<CheckKind>,
    pub tolerances: Tolerances64,
    pub seed: u64,
    pub output: Option<PathBuf>,
}

pub const DEFAULT_GRID_POINTS: usize = 101;

impl Scenario {
    pub fn load(path: &Path, profile: &str, seed: Option<u64>) -> Result<Self, String> {
        let text = fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        let cfg: ScenarioConfig = serde_json::from_str(&text)
            .map_err(|e| format!("invalid config {}: {e}", path.display()))?;
        let base = path.parent().unwrap_or(Path::new("."));
        Scenario::resolve(cfg, base, profile, seed)
    }

    fn resolve(
        cfg: ScenarioConfig,
        base: &Path,
        profile: &str,
        seed: Option<u64>,
    ) -> Result<Self, String> {
        let (name, program, instance) = match (&cfg.program, &cfg.program_file) {
            (Some(id), None) => {
                let inst = catalog_instance::<f64>(id).map_err(|e| e.to_string())?;
                (id.clone(), inst.program.clone(), Some(inst))
            }
            (None, Some(file)) => {
                let file = base.join(file);
                let text = fs::read_to_string(&file)
                    .map_err(|e| format!("cannot read program {}: {e}", file.display()))?;
                let program = Program64::from_json(&text)
                    .map_err(|e| format!("invalid program {}: {e}", file.display()))?;
                (file.display().to_string(), program, None)
            }
            _ => return Err("config needs exactly one of \"program\" and \"program_file\"".into()),
        };
        let m = program.m();

        let (grid_box, grid_points) = match cfg.grid {
            Some(g) => {
                let b = ParamBox::new(g.lower, g.upper).map_err(|e| format!("grid: {e}"))?;
                let points = match g.points {
                    Points::Uniform(k) => vec![k; b.dim()],
                    Points::PerDim(v) => v,
                };
                (b, points)
            }
            None => match &instance {
                Some(inst) => (inst.sweep_box.clone(), vec![DEFAULT_GRID_POINTS; m]),
                None => return Err("\"grid\" is required for a program file".into()),
            },
        };
        if grid_box.dim() != m || grid_points.len() != m {
            return Err(format!("grid must have {m} dimensions"));
        }
        if grid_points.iter().any(|&k| k < 2) {
            return Err("grid needs at least 2 points per dimension".into());
        }

        let region = match (cfg.region, &instance) {
            (Some(r), _) => ParamBox::new(r.lower, r.upper).map_err(|e| format!("region: {e}"))?,
            (None, Some(inst)) => inst.analysis_box.clone(),
            (None, None) => grid_box.clone(),
        };
        if region.dim() != m {
            return Err(format!("region must have {m} dimensions"));
        }

        let checks = match cfg.checks {
            Some(names) => names
                .iter()
                .map(|s| s.parse::<CheckKind>().map_err(|e| e.to_string()))
                .collect::<Result<Vec<_>, _>>()?,
            None => match &instance {
                Some(inst) => inst.default_checks.clone(),
                None => CheckKind::ALL.to_vec(),
            },
        };

        let mut tol = Tolerances64::profile(profile).map_err(|e| e.to_string())?;
        let o = cfg.tolerances;
        tol.feasibility_eps = o.feasibility_eps.unwrap_or(tol.feasibility_eps);
        tol.value_eps = o.value_eps.unwrap_or(tol.value_eps);
        tol.convexity_eps = o.convexity_eps.unwrap_or(tol.convexity_eps);
        tol.unbounded_threshold = o.unbounded_threshold.unwrap_or(tol.unbounded_threshold);
        tol.validate().map_err(|e| e.to_string())?;

        Ok(Scenario {
            name,
            program,
            instance,
            grid_box,
            grid_points,
            region,
            checks,
            tolerances: tol,
            seed: seed.or(cfg.seed).unwrap_or(0),
            output: cfg.output.map(|o| base.join(o)),
        })
    }

    pub fn grid(&self) -> Vec<Vec<f64>> {
        self.grid_box
            .grid(&self.grid_points)
            .expect("grid validated at load")
    }
}
