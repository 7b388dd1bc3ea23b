use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, ensure, Context, Result};
use ballcut::geom::{Direction, Hyperplane};
use ballcut::{instances, oracle, BallSet};

use crate::report::{self, PlanarTraceRecord, Report, TraceRecord};
use crate::svg;
use crate::{BenchArgs, GenArgs, HalveArgs, Layout, PlotArgs, VerifyArgs};

fn load(path: &Path) -> Result<BallSet> {
    instances::load(path).with_context(|| format!("loading {}", path.display()))
}

pub fn gen(args: &GenArgs) -> Result<ExitCode> {
    let balls = match args.layout {
        Layout::Grid => match (args.side, args.n) {
            (Some(side), _) => instances::jittered_grid(args.dim, side, args.spacing, args.seed)?,
            (None, Some(n)) => instances::jittered_grid_n(args.dim, n, args.spacing, args.seed)?,
            (None, None) => bail!("grid layout needs --side or --n"),
        },
        Layout::Clusters => {
            let n = args.n.context("clusters layout needs --n")?;
            instances::clusters(args.dim, n, args.clusters, args.seed)?
        }
        Layout::Row => {
            let n = args.n.context("row layout needs --n")?;
            instances::collinear_row(args.dim, n, args.spacing)?
        }
    };
    instances::save(&balls, &args.out)
        .with_context(|| format!("writing {}", args.out.display()))?;
    log::info!("wrote {} balls to {}", balls.len(), args.out.display());
    Ok(ExitCode::SUCCESS)
}

pub fn halve(args: &HalveArgs) -> Result<ExitCode> {
    let balls = load(&args.input)?;
    let mut planar = Vec::new();
    let mut directions = Vec::new();
    let (report, rotation) = report::run(&balls, &args.sep, &mut |t| match t {
        TraceRecord::Planar(t) => planar.push(t),
        TraceRecord::Direction(t) => directions.push(t),
    })?;
    if let Some(path) = &args.trace {
        let mut out = BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        );
        for trace in planar {
            let record = PlanarTraceRecord { rotation, trace };
            writeln!(out, "{}", serde_json::to_string(&record)?)?;
        }
        for t in directions {
            writeln!(out, "{}", serde_json::to_string(&t)?)?;
        }
        out.flush()?;
    }
    println!("{}", serde_json::to_string_pretty(&report)?);
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    Ok(if report.warnings.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn parse_normal(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .with_context(|| format!("bad normal component `{t}`"))
        })
        .collect()
}

pub fn verify(args: &VerifyArgs) -> Result<ExitCode> {
    let balls = load(&args.input)?;
    let raw = parse_normal(&args.normal)?;
    ensure!(
        raw.len() == balls.dim(),
        "normal has {} components, instance has dimension {}",
        raw.len(),
        balls.dim()
    );
    let norm = raw.iter().map(|x| x * x).sum::<f64>().sqrt();
    ensure!(norm > 0.0 && norm.is_finite(), "normal must be non-zero and finite");
    let normal = Direction::normalized(raw)?;
    let plane = Hyperplane::new(normal, args.offset / norm)?;
    let sides = oracle::count_sides(&balls, &plane)?;
    let (cut, _) = oracle::count_intersected(&balls, &plane)?;
    let ok = sides.min_closed() >= args.m;
    println!("n {}", balls.len());
    println!("left {}", sides.left);
    println!("right {}", sides.right);
    println!("on {}", sides.on);
    println!("left_closed {}", sides.left_closed());
    println!("right_closed {}", sides.right_closed());
    println!("intersected {cut}");
    println!("{}-separator {}", args.m, if ok { "PASS" } else { "FAIL" });
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

/// Instance spacing used by `bench`.
pub const BENCH_SPACING: f64 = 2.5;

pub fn bench(args: &BenchArgs) -> Result<ExitCode> {
    ensure!(!args.sizes.is_empty(), "--sizes must list at least one size");
    ensure!(args.reps >= 1, "--reps must be at least 1");
    let mut sizes = args.sizes.clone();
    sizes.sort_unstable();
    sizes.dedup();
    let mut csv = String::from("n,algo,mean_ms,intersected,intersected_over_sqrt_nlogn,iterations\n");
    for &n in &sizes {
        ensure!(n >= 1, "sizes must be positive");
        let balls = instances::jittered_grid_n(args.dim, n, BENCH_SPACING, args.seed)?;
        let mut total_ms = 0.0;
        let mut last: Option<Report> = None;
        for _ in 0..args.reps {
            let (r, _) = report::run(&balls, &args.sep, &mut |_| {})?;
            total_ms += r.wall_ms;
            last = Some(r);
        }
        let r = last.expect("reps >= 1");
        let nf = n as f64;
        let scale = (nf * nf.log2().max(1.0)).sqrt();
        csv.push_str(&format!(
            "{n},{},{:.3},{},{:.6},{}\n",
            args.sep.algo.name(),
            total_ms / args.reps as f64,
            r.intersected,
            r.intersected as f64 / scale,
            r.iterations
        ));
        log::info!("n = {n} done");
    }
    match &args.out {
        Some(path) => std::fs::write(path, csv)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{csv}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn read_trace(path: &Path) -> Result<Vec<PlanarTraceRecord>> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record = serde_json::from_str(&line)
            .with_context(|| format!("{}:{}: not a planar trace record", path.display(), i + 1))?;
        out.push(record);
    }
    Ok(out)
}

/// `dir/stem_iterK.svg` next to `out`.
fn iteration_path(out: &Path, k: usize) -> PathBuf {
    let stem = out.file_stem().and_then(|s| s.to_str()).unwrap_or("plot");
    out.with_file_name(format!("{stem}_iter{k}.svg"))
}

pub fn plot(args: &PlotArgs) -> Result<ExitCode> {
    let balls = load(&args.input)?;
    ensure!(balls.dim() == 2, "plots need a planar instance");
    let result: Option<Report> = match &args.result {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            Some(serde_json::from_str(&text).context("parsing result JSON")?)
        }
        None => None,
    };
    std::fs::write(&args.out, svg::primal(&balls, result.as_ref())?)
        .with_context(|| format!("writing {}", args.out.display()))?;
    if let Some(path) = &args.trace {
        let records = read_trace(path)?;
        for r in &records {
            let file = iteration_path(&args.out, r.trace.iteration);
            std::fs::write(&file, svg::dual(&balls, r)?)
                .with_context(|| format!("writing {}", file.display()))?;
        }
        log::info!("wrote {} trace plots", records.len());
    }
    Ok(ExitCode::SUCCESS)
}
