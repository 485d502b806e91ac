//! Command-line front end.
//!
//! Exit codes: 0 success, 2 invalid input, 3 no facet cycle exists,
//! 4 internal invariant failure.

use std::fs;
use std::io::IsTerminal;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use vertex_unfold::complex::{build_dual, is_simplicial};
use vertex_unfold::io::{self, LayoutDocument, Provenance, SvgOptions};
use vertex_unfold::layout::{layout, verify_layout};
use vertex_unfold::unfold::{checkering_of, UnfoldedComplex};
use vertex_unfold::{facet_cycle, facet_path, hull, make_noncrossing, Error, FacetPath, SimplicialComplex};

const LAYOUT_TOL: f64 = 1e-9;

#[derive(Parser)]
#[command(name = "vunfold", version, about = "Facet paths, facet cycles and vertex-unfoldings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a complex and report its structure.
    Check { file: PathBuf },
    /// Compute a facet path.
    Path {
        file: PathBuf,
        #[arg(long)]
        noncrossing: bool,
        /// Write the path as JSON.
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
    },
    /// Compute a facet cycle, or explain why none exists.
    Cycle {
        file: PathBuf,
        #[arg(long, value_name = "K")]
        start_facet: Option<usize>,
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
    },
    /// Lay out a facet path or cycle in strips.
    Unfold(UnfoldArgs),
    /// Write the convex hull of random points on the unit sphere.
    Gen {
        #[arg(long)]
        points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; `.json` writes a JSON complex, anything else OFF.
        #[arg(long)]
        out: PathBuf,
    },
    /// Time the path and layout pipeline on random hulls.
    Bench {
        /// Target facet counts.
        #[arg(long, value_delimiter = ',', default_value = "1000,2000,4000,8000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        /// Print rows as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct UnfoldArgs {
    file: PathBuf,
    #[arg(long, conflicts_with = "path")]
    cycle: bool,
    #[arg(long)]
    path: bool,
    #[arg(long, default_value_t = 0.0)]
    gap: f64,
    #[arg(long)]
    noncrossing: bool,
    #[arg(long, value_name = "OUT")]
    svg: Option<PathBuf>,
    #[arg(long, value_name = "OUT")]
    json: Option<PathBuf>,
    /// Label vertices in the SVG.
    #[arg(long)]
    labels: bool,
    /// Omit the strip guide lines from the SVG.
    #[arg(long)]
    no_strips: bool,
}

fn color() -> bool {
    std::env::var_os("NO_COLOR").is_none() && std::io::stderr().is_terminal()
}

fn paint(code: &str, s: &str) -> String {
    if color() {
        format!("\x1b[{code}m{s}\x1b[0m")
    } else {
        s.to_string()
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::NoCycle(_)) => 3,
        Some(
            Error::Invariant(_)
            | Error::DisconnectedScaffold { .. }
            | Error::SwapSearchExhausted { .. }
            | Error::CheckeredInput,
        ) => 4,
        _ => 2,
    }
}

fn load(file: &Path) -> anyhow::Result<(SimplicialComplex, String)> {
    let (c, bytes) = io::read_complex(file).with_context(|| format!("reading {}", file.display()))?;
    Ok((c, io::input_hash(&bytes)))
}

fn show_path(p: &FacetPath) -> String {
    let mut s = p.vertices[0].to_string();
    for (i, f) in p.facets.iter().enumerate() {
        s.push_str(&format!(" [{f}] {}", p.vertices[i + 1]));
    }
    s
}

fn write_file(path: &Path, contents: &str) -> anyhow::Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn noncrossing_if(c: &SimplicialComplex, p: FacetPath, on: bool) -> anyhow::Result<FacetPath> {
    Ok(if on { make_noncrossing(c, &p)? } else { p })
}

fn check(file: &Path) -> anyhow::Result<()> {
    let (c, hash) = load(file)?;
    let dual = build_dual(&c)?;
    println!("file: {}", file.display());
    println!("sha256: {hash}");
    println!("dimension: {}", c.dim());
    println!("vertices: {}", c.vertex_count());
    println!("facets: {}", c.facet_count());
    println!("dual arcs: {}", dual.arcs().len());
    println!("boundary ridges: {}", dual.boundary().len());
    println!("closed: {}", dual.boundary().is_empty());
    println!("simplicial: {}", is_simplicial(&c)?);
    println!("dual is a tree: {}", dual.is_tree());
    if c.dim() == 2 && dual.is_tree() {
        let checkered = checkering_of(&UnfoldedComplex::identity(&c)?)?.is_some();
        println!("checkered: {checkered}");
    }
    println!("{}", paint("32", "valid"));
    Ok(())
}

fn path_cmd(file: &Path, noncrossing: bool, json: Option<&Path>) -> anyhow::Result<()> {
    let (c, _) = load(file)?;
    let p = noncrossing_if(&c, facet_path(&c)?, noncrossing)?;
    println!("{}", show_path(&p));
    if let Some(out) = json {
        write_file(out, &serde_json::to_string_pretty(&p)?)?;
    }
    Ok(())
}

fn cycle_cmd(file: &Path, start: Option<usize>, json: Option<&Path>) -> anyhow::Result<()> {
    let (c, _) = load(file)?;
    let p = facet_cycle(&c, start)?;
    println!("{}", show_path(&p));
    if let Some(out) = json {
        write_file(out, &serde_json::to_string_pretty(&p)?)?;
    }
    Ok(())
}

fn unfold_cmd(a: &UnfoldArgs) -> anyhow::Result<()> {
    let (c, hash) = load(&a.file)?;
    let p = if a.cycle { facet_cycle(&c, None)? } else { facet_path(&c)? };
    let p = noncrossing_if(&c, p, a.noncrossing)?;
    let l = layout(&c, &p, a.gap)?;
    let report = verify_layout(&l, &c, LAYOUT_TOL);
    if !report.is_ok() {
        return Err(Error::Invariant(format!("layout failed verification: {report}")).into());
    }
    // render everything before writing anything
    let svg = match &a.svg {
        Some(_) => {
            let opts = SvgOptions {
                labels: a.labels,
                show_strips: !a.no_strips,
                ..SvgOptions::default()
            };
            Some(io::write_svg(&l, &opts)?)
        }
        None => None,
    };
    let width = l.total_width();
    let count = l.placements.len();
    let json = a.json.as_ref().map(|_| {
        io::write_layout_json(&LayoutDocument {
            provenance: Provenance::new(hash, None),
            layout: l,
        })
    });
    if let (Some(out), Some(s)) = (&a.svg, &svg) {
        write_file(out, s)?;
    }
    if let (Some(out), Some(s)) = (&a.json, &json) {
        write_file(out, s)?;
    }
    println!("{}", show_path(&p));
    println!("strips: {count}");
    println!("width: {width}");
    Ok(())
}

fn gen_cmd(points: usize, seed: u64, out: &Path) -> anyhow::Result<()> {
    let (c, report) = hull::gen_hull_with_report(points, seed)?;
    let text = if out.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) {
        io::write_complex_json(&c)
    } else {
        io::write_off(&c)?
    };
    write_file(out, &text)?;
    println!("vertices: {}", c.vertex_count());
    println!("facets: {}", c.facet_count());
    if !report.perturbed.is_empty() {
        eprintln!("perturbed points: {:?}", report.perturbed);
    }
    if !report.dropped.is_empty() {
        eprintln!("dropped points: {:?}", report.dropped);
    }
    Ok(())
}

#[derive(Serialize)]
struct BenchRow {
    facets: usize,
    vertices: usize,
    seconds: f64,
    ratio: Option<f64>,
}

fn bench_cmd(sizes: &[usize], seed: u64, reps: usize, json: bool) -> anyhow::Result<()> {
    let mut rows: Vec<BenchRow> = Vec::new();
    for &size in sizes {
        let c = hull::gen_hull(size / 2 + 2, seed)?;
        let mut times = Vec::with_capacity(reps.max(1));
        for _ in 0..reps.max(1) {
            let t = Instant::now();
            let p = facet_path(&c)?;
            let l = layout(&c, &p, 0.0)?;
            times.push(t.elapsed().as_secs_f64());
            std::hint::black_box(l);
        }
        times.sort_by(f64::total_cmp);
        let seconds = times[times.len() / 2];
        // time ratio normalized to a doubling of the facet count
        let ratio = rows.last().map(|r| {
            let growth = c.facet_count() as f64 / r.facets as f64;
            2.0 * (seconds / r.seconds) / growth
        });
        rows.push(BenchRow {
            facets: c.facet_count(),
            vertices: c.vertex_count(),
            seconds,
            ratio,
        });
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&rows)?);
    } else {
        println!("{:>8} {:>8} {:>12} {:>8}", "facets", "vertices", "ms", "ratio");
        for r in &rows {
            let ratio = r.ratio.map_or("-".to_string(), |x| format!("{x:.2}"));
            println!("{:>8} {:>8} {:>12.3} {:>8}", r.facets, r.vertices, r.seconds * 1e3, ratio);
        }
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Check { file } => check(&file),
        Command::Path { file, noncrossing, json } => path_cmd(&file, noncrossing, json.as_deref()),
        Command::Cycle { file, start_facet, json } => cycle_cmd(&file, start_facet, json.as_deref()),
        Command::Unfold(a) => unfold_cmd(&a),
        Command::Gen { points, seed, out } => gen_cmd(points, seed, &out),
        Command::Bench { sizes, seed, reps, json } => bench_cmd(&sizes, seed, reps, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let code = exit_code(&e);
            eprintln!("{} {e:#}", paint("31", "error:"));
            ExitCode::from(code)
        }
    }
}
