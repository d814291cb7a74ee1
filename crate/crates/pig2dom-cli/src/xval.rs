//! Cross-validation harness: seeded random instances through all three
//! solvers, asserting equal sizes and valid witnesses.

use std::path::Path;

use pig2dom::gen::SplitMix64;
use pig2dom::{formats, gen, oracle, reduced, reference, StraightGraph, VertexSet};

pub struct XvalConfig {
    pub trials: u64,
    pub nmax: usize,
    pub seed: u64,
    pub density_min: f64,
    pub density_max: f64,
    pub use_oracle: bool,
}

pub struct XvalSummary {
    pub trials: u64,
    pub feasible: u64,
    pub mismatches: u64,
}

fn agree(g: &StraightGraph, use_oracle: bool) -> Result<bool, String> {
    let fast = reduced::solve(g);
    let slow = reference::solve_reference(g);
    let best = if use_oracle {
        Some(oracle::brute_min_2dom(g).map_err(|e| e.to_string())?)
    } else {
        None
    };
    match (&fast, &slow) {
        (None, None) => {
            if let Some(Some(b)) = &best {
                return Err(format!("solvers infeasible, oracle found size {}", b.size));
            }
            Ok(false)
        }
        (Some(f), Some(s)) => {
            if f.size != s.size {
                return Err(format!("reduced {} != reference {}", f.size, s.size));
            }
            if let Some(ob) = &best {
                match ob {
                    Some(b) if b.size == f.size => {}
                    Some(b) => return Err(format!("solvers {} != oracle {}", f.size, b.size)),
                    None => return Err("solvers solved an infeasible instance".to_string()),
                }
            }
            for (name, sol) in [("reduced", f), ("reference", s)] {
                let valid = oracle::is_2dom(g, &VertexSet::new(sol.vertices.clone()))
                    .map_err(|e| e.to_string())?;
                if !valid {
                    return Err(format!("{name} witness is not a 2-dom"));
                }
            }
            Ok(true)
        }
        (f, s) => Err(format!(
            "feasibility disagreement: reduced {:?}, reference {:?}",
            f.as_ref().map(|x| x.size),
            s.as_ref().map(|x| x.size)
        )),
    }
}

/// Runs the harness; on mismatch, writes the instance to `repro_dir` and
/// reports through `log`.
pub fn run(
    cfg: &XvalConfig,
    repro_dir: &Path,
    log: &mut impl FnMut(String),
) -> std::io::Result<XvalSummary> {
    let mut rng = SplitMix64::new(cfg.seed);
    let mut summary = XvalSummary {
        trials: cfg.trials,
        feasible: 0,
        mismatches: 0,
    };
    for trial in 0..cfg.trials {
        let n = if cfg.nmax == 0 {
            0
        } else {
            (rng.next_u64() % (cfg.nmax as u64 + 1)) as usize
        };
        let span = (cfg.density_max - cfg.density_min).max(0.0);
        let density =
            cfg.density_min + span * (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
        let instance_seed = rng.next_u64();
        let g = gen::random_straight(n, density, instance_seed);
        match agree(&g, cfg.use_oracle) {
            Ok(feasible) => {
                if feasible {
                    summary.feasible += 1;
                }
            }
            Err(why) => {
                summary.mismatches += 1;
                let path = repro_dir.join(format!("xval-fail-{trial}.straight"));
                std::fs::write(&path, formats::serialize_straight(&g))?;
                log(format!(
                    "trial {trial} (n={n}, density={density:.3}, seed={instance_seed}): {why}; instance written to {}",
                    path.display()
                ));
            }
        }
    }
    Ok(summary)
}
