//! Deterministic instance generators and the plain-text instance format.
//!
//! Format: a header line `d n`, then `n` lines of `d` coordinates separated
//! by single spaces. Lines starting with `#` are comments. Radii are 1.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::geom::{BallSet, Point};

/// Smallest spacing accepted by the generators.
pub const MIN_SPACING: f64 = 2.2;

/// SplitMix64 finalizer.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Uniform in `[-1, 1)`, keyed by `(seed, index, coord)`.
fn jitter_unit(seed: u64, index: u64, coord: u64) -> f64 {
    let h = splitmix64(splitmix64(splitmix64(seed) ^ index) ^ coord);
    (h >> 11) as f64 / (1u64 << 52) as f64 - 1.0
}

fn check_spacing(spacing: f64) -> Result<()> {
    if !(spacing >= MIN_SPACING) || !spacing.is_finite() {
        return Err(Error::Spacing(spacing));
    }
    Ok(())
}

/// Per-coordinate jitter amplitude; keeps centers at distance >= 2.1.
pub fn jitter_amplitude(spacing: f64) -> f64 {
    (spacing - 2.0) / 2.0 - 0.05
}

fn grid_points(d: usize, side: usize, spacing: f64, seed: u64, count: usize) -> Vec<Point> {
    let amp = jitter_amplitude(spacing);
    (0..count)
        .map(|index| {
            let mut rest = index;
            let coords = (0..d)
                .map(|c| {
                    let cell = rest % side;
                    rest /= side;
                    let j = jitter_unit(seed, index as u64, c as u64);
                    cell as f64 * spacing + amp * j
                })
                .collect();
            Point::new(coords).expect("grid coordinates are finite")
        })
        .collect()
}

fn side_count(d: usize, side: usize) -> Result<usize> {
    u32::try_from(d)
        .ok()
        .and_then(|e| side.checked_pow(e))
        .ok_or(Error::Size {
            n: side,
            reason: "grid size overflows",
        })
}

fn check_dim(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidParameter("dimension must be >= 1".into()));
    }
    Ok(())
}

/// `side^d` centers on a grid with the given spacing, each coordinate
/// jittered by at most `(spacing - 2)/2 - 0.05`.
pub fn jittered_grid(d: usize, side: usize, spacing: f64, seed: u64) -> Result<BallSet> {
    check_dim(d)?;
    check_spacing(spacing)?;
    let count = side_count(d, side)?;
    BallSet::new(d, grid_points(d, side, spacing, seed, count))
}

/// The first `n` centers of the jittered grid with side `ceil(n^(1/d))`.
pub fn jittered_grid_n(d: usize, n: usize, spacing: f64, seed: u64) -> Result<BallSet> {
    check_dim(d)?;
    check_spacing(spacing)?;
    let mut side = (n as f64).powf(1.0 / d as f64).round() as usize;
    while side_count(d, side)? < n {
        side += 1;
    }
    while side > 1 && side_count(d, side - 1)? >= n {
        side -= 1;
    }
    BallSet::new(d, grid_points(d, side.max(1), spacing, seed, n))
}

/// Centers `(i * spacing, 0, ..., 0)` for `i = 0..n`.
pub fn collinear_row(d: usize, n: usize, spacing: f64) -> Result<BallSet> {
    check_dim(d)?;
    check_spacing(spacing)?;
    BallSet::from_coords(
        d,
        (0..n).map(|i| {
            let mut c = vec![0.0; d];
            c[0] = i as f64 * spacing;
            c
        }),
    )
}

/// Spacing inside each cluster.
pub const CLUSTER_SPACING: f64 = 2.5;

/// `n` centers split into `n_clusters` jittered grids placed far apart.
/// With one cluster this is exactly `jittered_grid_n(d, n, 2.5, seed)`.
pub fn clusters(d: usize, n: usize, n_clusters: usize, seed: u64) -> Result<BallSet> {
    check_dim(d)?;
    if n_clusters == 0 {
        return Err(Error::InvalidParameter("need at least one cluster".into()));
    }
    let per = n.div_ceil(n_clusters);
    let sub_side = (1..).find(|&s| side_count(d, s).is_ok_and(|c| c >= per)).expect("finite");
    let extent = sub_side as f64 * CLUSTER_SPACING;
    // clusters sit on a coarse grid, with gaps several times their own size
    let coarse_side = (1..)
        .find(|&s| side_count(d, s).is_ok_and(|c| c >= n_clusters))
        .expect("finite");
    let pitch = 4.0 * extent;
    let mut centers = Vec::with_capacity(n);
    for c in 0..n_clusters {
        let size = per.min(n - centers.len().min(n));
        if size == 0 {
            break;
        }
        let cluster_seed = seed.wrapping_add((c as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let mut rest = c;
        let offset: Vec<f64> = (0..d)
            .map(|_| {
                let cell = rest % coarse_side;
                rest /= coarse_side;
                cell as f64 * pitch
            })
            .collect();
        for p in grid_points(d, sub_side, CLUSTER_SPACING, cluster_seed, size) {
            let coords = p.coords().iter().zip(&offset).map(|(x, o)| x + o).collect();
            centers.push(Point::new(coords)?);
        }
    }
    BallSet::new(d, centers)
}

/// Parses the instance format, validating shape and disjointness.
pub fn parse(text: &str) -> Result<BallSet> {
    let mut rows = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = rows.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header `d n`".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let parse_usize = |s: &str| s.parse::<usize>().ok();
    let (d, n) = match fields.as_slice() {
        [d, n] => match (parse_usize(d), parse_usize(n)) {
            (Some(d), Some(n)) if d >= 1 => (d, n),
            _ => {
                return Err(Error::Parse {
                    line: header_line,
                    message: format!("bad header `{header}`"),
                })
            }
        },
        _ => {
            return Err(Error::Parse {
                line: header_line,
                message: format!("header must be `d n`, got `{header}`"),
            })
        }
    };
    let mut centers = Vec::with_capacity(n);
    for (line, row) in rows.by_ref() {
        if centers.len() == n {
            return Err(Error::Parse {
                line,
                message: format!("more than {n} centers"),
            });
        }
        let coords = row
            .split_whitespace()
            .map(|t| t.parse::<f64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
        if coords.len() != d {
            return Err(Error::Parse {
                line,
                message: format!("expected {d} coordinates, found {}", coords.len()),
            });
        }
        let p = Point::new(coords).map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
        centers.push(p);
    }
    if centers.len() != n {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: format!("expected {n} centers, found {}", centers.len()),
        });
    }
    BallSet::new(d, centers)
}

/// Renders the instance format with round-trip precision.
pub fn format(balls: &BallSet) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", balls.dim(), balls.len()).expect("writing to a string");
    for p in balls.centers() {
        let row: Vec<String> = p.coords().iter().map(|x| format!("{x:?}")).collect();
        writeln!(out, "{}", row.join(" ")).expect("writing to a string");
    }
    out
}

pub fn load(path: impl AsRef<Path>) -> Result<BallSet> {
    parse(&std::fs::read_to_string(path)?)
}

pub fn save(balls: &BallSet, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, format(balls))?;
    Ok(())
}
