//! Running either algorithm and rendering its outcome.

use std::time::Instant;

use anyhow::{bail, Result};
use ballcut::halving::{self, IterationTrace, PlanarParams};
use ballcut::separator::{self, DirectionTrace};
use ballcut::BallSet;
use serde::{Deserialize, Serialize};

use crate::{Algo, SeparatorArgs};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Guarantees {
    pub min_side: usize,
    pub max_cut: Option<f64>,
}

/// The result JSON; field order is part of the output format.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub algorithm: String,
    pub n: usize,
    pub d: usize,
    pub normal: Vec<f64>,
    pub offset: f64,
    pub left_closed: usize,
    pub right_closed: usize,
    pub intersected: usize,
    pub intersected_ids: Vec<usize>,
    pub guarantees: Guarantees,
    pub iterations: usize,
    pub warnings: Vec<String>,
    pub wall_ms: f64,
}

/// One line of a planar trace file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlanarTraceRecord {
    /// Rotation applied to the instance before dualizing.
    pub rotation: f64,
    #[serde(flatten)]
    pub trace: IterationTrace,
}

pub enum TraceRecord {
    Planar(IterationTrace),
    Direction(DirectionTrace),
}

pub fn planar_params(args: &SeparatorArgs) -> PlanarParams {
    PlanarParams {
        gamma: args.gamma,
        epsilon: args.epsilon,
        min_lines: args.min_lines,
        optimize_finish: args.optimize_finish,
        ..PlanarParams::default()
    }
}

fn nd_params(
    args: &SeparatorArgs,
    d: usize,
    n: usize,
) -> Result<(separator::SeparatorParams, Option<ballcut::Error>)> {
    Ok(if args.f_log {
        let f = (n as f64).log2().max(1.0);
        separator::params_from_f_lenient(d, n, f)?
    } else {
        separator::params_from_alpha_lenient(d, n, args.alpha.unwrap_or(0.25))?
    })
}

/// Runs the selected algorithm, passing trace records to `on_trace`.
/// Also returns the rotation the planar algorithm applied (0 for nd).
pub fn run(
    balls: &BallSet,
    args: &SeparatorArgs,
    on_trace: &mut dyn FnMut(TraceRecord),
) -> Result<(Report, f64)> {
    let (n, d) = (balls.len(), balls.dim());
    if n == 0 {
        bail!("instance has no balls");
    }
    let start = Instant::now();
    let mut rotation = 0.0;
    let mut report = match args.algo {
        Algo::Nd => {
            if d < 2 {
                bail!("the nd algorithm needs d >= 2");
            }
            let (params, _) = nd_params(args, d, n)?;
            let r = separator::find_separator_nd_traced(balls, &params, &mut |t| {
                on_trace(TraceRecord::Direction(t.clone()))
            })?;
            Report {
                algorithm: Algo::Nd.name().into(),
                n,
                d,
                normal: r.plane.normal.coords().to_vec(),
                offset: r.plane.offset,
                left_closed: r.actual_left,
                right_closed: r.actual_right,
                intersected: r.actual_cut,
                intersected_ids: r.intersected_ids,
                guarantees: Guarantees {
                    min_side: r.guaranteed_min_side,
                    max_cut: r.guaranteed_max_cut,
                },
                iterations: r.directions_scanned,
                warnings: r.warnings.iter().map(|w| w.to_string()).collect(),
                wall_ms: 0.0,
            }
        }
        Algo::Planar => {
            if d != 2 {
                bail!("the planar algorithm needs d = 2, instance has d = {d}");
            }
            let r = halving::halving_line_traced(balls, &planar_params(args), &mut |s| {
                on_trace(TraceRecord::Planar(s.trace.clone()))
            })?;
            rotation = r.rotation;
            Report {
                algorithm: Algo::Planar.name().into(),
                n,
                d,
                normal: r.plane.normal.coords().to_vec(),
                offset: r.plane.offset,
                left_closed: r.left_count,
                right_closed: r.right_count,
                intersected: r.intersected_ids.len(),
                intersected_ids: r.intersected_ids,
                guarantees: Guarantees {
                    min_side: n / 2 + n % 2,
                    max_cut: None,
                },
                iterations: r.iterations,
                warnings: Vec::new(),
                wall_ms: 0.0,
            }
        }
    };
    if !args.no_timing {
        report.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    }
    Ok((report, rotation))
}
