//! The `evscan` command line.
//!
//! Every failure ends with one line on stderr of the form
//! `evscan: error: class=<input|validation|usage> exit=<code> message=<text>`.
//! Usage errors and unreadable or malformed files exit with 2, failed
//! preconditions with 1.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::block::{run_hsfc_block, ScanBlockConfig, ScanSsm};
use crate::curves::{generate, write_binary, write_text, CurveKind, GridDims};
use crate::error::{Error, ErrorClass, Result};
use crate::events::{group_events, read_events, read_evx, voxelize, write_csv, write_evx, EventGroup, VoxelGrid};
use crate::locality::{LocalityRow, CSV_HEADER};
use crate::ssm::{build_kernel, discretize, scan_convolutional, scan_recurrent, DiscreteSsm, SsmParams, StateMatrix};
use crate::windowing::{build_mask, build_random_mask, WindowOffset};

#[derive(Debug, Parser)]
#[command(name = "evscan", version, about = "Space-filling curves, event voxel grids, window offsets and SSM scans")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CurveFormat {
    /// One "x y z" line per point.
    Text,
    /// Little-endian u32 linear indices.
    Bin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridFormat {
    /// EVXGRID1 container.
    Bin,
    /// "bin,y,x,value" rows of nonzero cells.
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a curve and export its point order.
    Curve {
        #[arg(long, default_value = "hilbert")]
        kind: CurveKind,
        /// Grid size, WxH or WxHxD.
        #[arg(long)]
        dims: GridDims,
        #[arg(long, value_enum, default_value = "text")]
        format: CurveFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV of jump/still proportions and SLR over a kind × size matrix.
    Locality {
        #[arg(long, value_delimiter = ',', default_value = "hilbert,reshape")]
        kinds: Vec<CurveKind>,
        /// Side lengths N.
        #[arg(long, value_delimiter = ',', default_value = "2,4,8")]
        sizes: Vec<usize>,
        /// Dimensionalities D (2 and/or 3).
        #[arg(long, value_delimiter = ',', default_value = "2")]
        dims: Vec<usize>,
        /// Above this many ordered pairs the SLR search is sampled.
        #[arg(long, default_value_t = 1 << 24)]
        pair_budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Turn an event text file into voxel grids.
    Voxelize {
        input: PathBuf,
        #[arg(long, default_value_t = crate::events::DEFAULT_BINS)]
        bins: usize,
        /// Sensor size WxH; overrides the file header.
        #[arg(long)]
        dims: Option<GridDims>,
        /// Frame timestamps s_0,s_1,...; one grid per consecutive pair.
        #[arg(long, value_delimiter = ',')]
        frames: Vec<f64>,
        #[arg(long, value_enum, default_value = "bin")]
        format: GridFormat,
        /// Output file; with several groups `_<k>` is appended to the stem.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the region-label grid of a random window offset.
    Mask {
        #[arg(long)]
        dims: GridDims,
        #[arg(long)]
        win_size: usize,
        /// Explicit offset "dh,dw"; otherwise drawn from --seed.
        #[arg(long, conflicts_with = "seed")]
        offset: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the dual Hilbert/trans-Hilbert scan block on an EVXGRID1 volume.
    Scanblock {
        input: PathBuf,
        /// Scan the channel axis as the third curve dimension.
        #[arg(long)]
        volumetric: bool,
        #[arg(long)]
        win_size: Option<usize>,
        #[arg(long, default_value_t = 8)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Average over all offsets instead of sampling.
        #[arg(long)]
        enumerate: bool,
        /// Diagonal of A (or of Ā with --discrete).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "-1")]
        a: Vec<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1")]
        b: Vec<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1")]
        c: Vec<f64>,
        #[arg(long, default_value_t = 0.1)]
        delta: f64,
        /// Treat --a/--b/--c as already discretized; --delta is ignored.
        #[arg(long)]
        discrete: bool,
        #[arg(long, value_enum, default_value = "bin")]
        format: GridFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Throughput tables for the SSM scans and curve generators.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "256,1024,4096")]
        lengths: Vec<usize>,
        #[arg(long, default_value_t = 8)]
        state_dim: usize,
        #[arg(long, value_delimiter = ',', default_value = "16,64,256")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                let _ = e.print();
                return 0;
            }
            let _ = e.print();
            let msg = e.kind().to_string();
            report("usage", 2, &msg);
            return 2;
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            let (class, code) = match e.class() {
                ErrorClass::Input => ("input", 2),
                ErrorClass::Validation => ("validation", 1),
            };
            report(class, code, &e.to_string());
            code
        }
    }
}

fn report(class: &str, code: i32, message: &str) {
    let message = message.replace(['\n', '\r'], " ");
    eprintln!("evscan: error: class={class} exit={code} message={message}");
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, bytes)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
        }
    }
    Ok(())
}

pub fn execute(command: Command) -> Result<()> {
    match command {
        Command::Curve {
            kind,
            dims,
            format,
            out,
        } => {
            let path = generate(kind, dims)?;
            let mut buf = Vec::new();
            match format {
                CurveFormat::Text => write_text(&path, &mut buf)?,
                CurveFormat::Bin => write_binary(&path, &mut buf)?,
            }
            emit(out.as_deref(), &buf)
        }
        Command::Locality {
            kinds,
            sizes,
            dims,
            pair_budget,
            out,
        } => {
            let mut csv = format!("{CSV_HEADER}\n");
            for &d in &dims {
                for &kind in &kinds {
                    for &n in &sizes {
                        csv.push_str(&LocalityRow::measure(kind, n, d, pair_budget)?.to_csv());
                        csv.push('\n');
                    }
                }
            }
            emit(out.as_deref(), csv.as_bytes())
        }
        Command::Voxelize {
            input,
            bins,
            dims,
            frames,
            format,
            out,
        } => voxelize_cmd(&input, bins, dims, &frames, format, out.as_deref()),
        Command::Mask {
            dims,
            win_size,
            offset,
            seed,
            out,
        } => {
            if !dims.is_planar() {
                return Err(Error::InvalidDims(format!("mask needs a planar WxH grid, got {dims}")));
            }
            let (h, w) = (dims.height(), dims.width());
            let (mask, off) = match offset {
                Some(text) => {
                    let off = parse_offset(&text, win_size)?;
                    (build_mask(h, w, off)?, off)
                }
                None => build_random_mask(h, w, win_size, seed)?,
            };
            eprintln!(
                "offset dh={} dw={} regions={}",
                off.dh(),
                off.dw(),
                mask.region_count()
            );
            emit(out.as_deref(), mask.to_text().as_bytes())
        }
        Command::Scanblock {
            input,
            volumetric,
            win_size,
            samples,
            seed,
            enumerate,
            a,
            b,
            c,
            delta,
            discrete,
            format,
            out,
        } => {
            let vol = read_evx(BufReader::new(File::open(&input)?))?.into_volume();
            let (ch, h, w) = vol.shape();
            let dims = if volumetric {
                GridDims::new(w, h, ch)?
            } else {
                GridDims::planar(w, h)?
            };
            let ssm: ScanSsm = if discrete {
                DiscreteSsm::new(StateMatrix::Diagonal(a), b, c)?.into()
            } else {
                SsmParams::diagonal(a, b, c, delta)?.into()
            };
            let mut cfg = ScanBlockConfig::new(dims, ssm);
            cfg.win_size = win_size;
            cfg.samples = samples;
            cfg.seed = seed;
            cfg.enumerate = enumerate;
            let result = VoxelGrid::from_volume(run_hsfc_block(&cfg, &vol)?);
            let mut buf = Vec::new();
            match format {
                GridFormat::Bin => write_evx(&result, &mut buf)?,
                GridFormat::Csv => write_csv(&result, &mut buf)?,
            }
            emit(out.as_deref(), &buf)
        }
        Command::Bench {
            lengths,
            state_dim,
            sizes,
            repeats,
            seed,
            out,
        } => {
            let table = bench(&lengths, state_dim, &sizes, repeats, seed)?;
            emit(out.as_deref(), table.as_bytes())
        }
    }
}

fn parse_offset(text: &str, win_size: usize) -> Result<WindowOffset> {
    let bad = || Error::InvalidArgument(format!("offset {text:?} is not \"dh,dw\""));
    let (dh, dw) = text.split_once(',').ok_or_else(bad)?;
    let dh = dh.trim().parse().map_err(|_| bad())?;
    let dw = dw.trim().parse().map_err(|_| bad())?;
    WindowOffset::new(dh, dw, win_size)
}

fn voxelize_cmd(
    input: &Path,
    bins: usize,
    dims: Option<GridDims>,
    frames: &[f64],
    format: GridFormat,
    out: Option<&Path>,
) -> Result<()> {
    let parsed = read_events(input)?;
    if !parsed.nonmonotonic_lines.is_empty() {
        eprintln!(
            "warning: timestamps decrease at line(s) {:?}",
            parsed.nonmonotonic_lines
        );
    }
    let (width, height) = match (dims, parsed.sensor) {
        (Some(d), _) => {
            if !d.is_planar() {
                return Err(Error::InvalidDims(format!("sensor size must be WxH, got {d}")));
            }
            (d.width(), d.height())
        }
        (None, Some((w, h))) => (w as usize, h as usize),
        // no header: the bounding box of the events
        (None, None) => parsed
            .events
            .iter()
            .fold((0, 0), |(w, h), e| (w.max(e.x as usize + 1), h.max(e.y as usize + 1))),
    };
    let groups = if frames.is_empty() {
        let (lo, hi) = parsed
            .events
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), e| (lo.min(e.t), hi.max(e.t)));
        if parsed.events.is_empty() {
            return Err(Error::InvalidArgument("event file has no events and no --frames".into()));
        }
        vec![EventGroup::new(parsed.events, lo, hi.next_up())?]
    } else {
        let g = group_events(&parsed.events, frames)?;
        if g.dropped_before + g.dropped_after > 0 {
            eprintln!(
                "dropped {} events before the first frame and {} at or after the last",
                g.dropped_before, g.dropped_after
            );
        }
        g.groups
    };
    if groups.len() > 1 && out.is_none() {
        return Err(Error::InvalidArgument(format!(
            "{} groups need --out to name the output files",
            groups.len()
        )));
    }
    for (k, group) in groups.iter().enumerate() {
        let grid = voxelize(group, bins, height, width)?;
        let mut buf = Vec::new();
        match format {
            GridFormat::Bin => write_evx(&grid, &mut buf)?,
            GridFormat::Csv => write_csv(&grid, &mut buf)?,
        }
        let target = match out {
            Some(p) if groups.len() > 1 => Some(indexed_path(p, k)),
            Some(p) => Some(p.to_path_buf()),
            None => None,
        };
        emit(target.as_deref(), &buf)?;
    }
    Ok(())
}

fn indexed_path(p: &Path, k: usize) -> PathBuf {
    let stem = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match p.extension() {
        Some(ext) => format!("{stem}_{k}.{}", ext.to_string_lossy()),
        None => format!("{stem}_{k}"),
    };
    p.with_file_name(name)
}

/// Timing columns are the last two of every row.
pub const BENCH_HEADER: &str = "section,name,size,repeats,checksum,elapsed_ms,items_per_sec";

fn bench(lengths: &[usize], state_dim: usize, sizes: &[usize], repeats: usize, seed: u64) -> Result<String> {
    if repeats == 0 || state_dim == 0 {
        return Err(Error::InvalidArgument("repeats and state dimension must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = (0..state_dim).map(|_| -rng.gen_range(0.1..2.0)).collect();
    let b = (0..state_dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let c = (0..state_dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let ssm = discretize(&SsmParams::diagonal(a, b, c, 0.05)?)?;

    let mut rows = vec![BENCH_HEADER.to_string()];
    let mut row = |section: &str, name: &str, size: usize, checksum: f64, items: usize, secs: f64| {
        let ms = secs * 1e3;
        let rate = (items * repeats) as f64 / secs.max(1e-12);
        rows.push(format!("{section},{name},{size},{repeats},{checksum:.6e},{ms:.3},{rate:.1}"));
    };

    for &len in lengths {
        if len == 0 {
            return Err(Error::InvalidArgument("sequence length must be at least 1".into()));
        }
        let x: Vec<f64> = (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let start = Instant::now();
        let mut y = Vec::new();
        for _ in 0..repeats {
            y = scan_recurrent(&ssm, &x)?;
        }
        row("ssm", "recurrent", len, y.iter().sum(), len, start.elapsed().as_secs_f64());

        let start = Instant::now();
        for _ in 0..repeats {
            y = scan_convolutional(&build_kernel(&ssm, len)?, &x)?;
        }
        row("ssm", "convolutional", len, y.iter().sum(), len, start.elapsed().as_secs_f64());
    }

    for &n in sizes {
        let dims = GridDims::planar(n, n)?;
        for kind in CurveKind::ALL {
            if !kind.supports(dims) {
                continue;
            }
            let start = Instant::now();
            let mut check = 0usize;
            for _ in 0..repeats {
                let path = generate(kind, dims)?;
                check = path.points().iter().take(n).map(|p| p.x + p.y).sum();
            }
            row("curve", kind.name(), n, check as f64, n * n, start.elapsed().as_secs_f64());
        }
    }
    rows.push(String::new());
    Ok(rows.join("\n"))
}
