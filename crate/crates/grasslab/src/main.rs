//! grasslab command line: build geometries, run verification suites,
//! recognize Grassmann maps, emit the counterexample gallery, export
//! adjacency graphs.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 semantic failure
//! (a suite failed or a map was not recognized).

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use grasslab::chow::{recognize, FramePolicy, RecognizeConfig, RecognizeMode, Verdict};
use grasslab::formats;
use grasslab::gallery;
use grasslab::gf::FieldSpec;
use grasslab::grassmann::{Ambient, GrassmannSpace};
use grasslab::linspace::LinearSpace;
use grasslab::projspace::build_pg;
use grasslab::report::{self, CheckLine, SuiteConfig};

#[derive(Parser)]
#[command(name = "grasslab", version, about = "exact finite projective and Grassmann space engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a geometry and write it as JSON.
    Build {
        #[command(subcommand)]
        target: BuildTarget,
    },
    /// Run verification suites against a geometry file.
    Check(CheckArgs),
    /// Classify a Grassmann map as induced by a collineation, duality or
    /// embedding.
    Recognize(RecognizeArgs),
    /// Build and check the counterexample gallery.
    Gallery {
        #[command(subcommand)]
        action: GalleryAction,
    },
    /// Export a Grassmann adjacency graph.
    Export(ExportArgs),
}

#[derive(Subcommand)]
enum BuildTarget {
    /// The projective space PG(n,q).
    Pg {
        #[arg(long)]
        n: usize,
        /// Field designator: an order like "4" or characteristic^degree like "2^2".
        #[arg(long)]
        q: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// PG(n,q) with one point deleted.
    Punctured {
        #[arg(long)]
        n: usize,
        /// Field designator: an order like "4" or characteristic^degree like "2^2".
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 0)]
        delete: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// PG(3,q) with one plane promoted to a line.
    Kreuzer {
        /// Field designator: an order like "4" or characteristic^degree like "2^2".
        #[arg(long)]
        q: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// The linear space whose lines are all two-point subsets.
    Complete {
        #[arg(long)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct CheckArgs {
    /// Suite to run.
    #[arg(value_enum)]
    suite: SuiteName,
    /// Geometry file.
    geometry: PathBuf,
    #[arg(long, default_value_t = 1)]
    k: i64,
    /// Frame policy: "all" or "sample:N".
    #[arg(long, default_value = "sample:50")]
    frames: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    roundtrips: usize,
    #[arg(long, default_value_t = 500)]
    clique_cap: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Axioms,
    Projective,
    Exchange,
    Bases,
    Maps,
    Distance,
    Cliques,
    ComplementAdjacency,
    BasesetLemmas,
    Counts,
    Recognition,
    Plucker,
    CollineationGroup,
    Gallery,
    All,
}

#[derive(Args)]
struct RecognizeArgs {
    /// Map file: {source, target, k, map} with geometry paths.
    #[arg(long)]
    map: PathBuf,
    #[arg(long, value_enum, default_value_t = ModeName::Chow)]
    mode: ModeName,
    #[arg(long, default_value = "sample:200")]
    frames: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeName {
    Chow,
    Baseset,
}

#[derive(Subcommand)]
enum GalleryAction {
    /// Build every item (or one) and write JSON bundles.
    Run {
        #[arg(long)]
        item: Option<String>,
        /// Field designator for the gallery instances.
        #[arg(long, default_value = "2")]
        q: String,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct ExportArgs {
    /// Output format.
    #[arg(value_enum)]
    format: ExportFormat,
    #[arg(long)]
    geometry: PathBuf,
    #[arg(long, default_value_t = 1)]
    k: i64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Build { target } => build(target),
        Command::Check(args) => check(args),
        Command::Recognize(args) => do_recognize(args),
        Command::Gallery { action } => run_gallery(action),
        Command::Export(args) => export(args),
    }
}

/// Accepts both plain orders ("4", "16") and characteristic^degree
/// designators ("2^2", "2^4").
fn parse_field(designator: &str) -> Result<std::sync::Arc<FieldSpec>, String> {
    FieldSpec::catalog(designator)
        .or_else(|_| {
            designator
                .parse::<u32>()
                .map_err(|e| grasslab::gf::FieldError::UnsupportedField(e.to_string()))
                .and_then(FieldSpec::for_q)
        })
        .map_err(|e| e.to_string())
}

fn parse_frames(s: &str) -> Result<FramePolicy, String> {
    if s == "all" {
        return Ok(FramePolicy::All);
    }
    if let Some(n) = s.strip_prefix("sample:") {
        return n
            .parse::<usize>()
            .map(FramePolicy::Sample)
            .map_err(|e| e.to_string());
    }
    Err(format!("bad frame policy {s:?}; use \"all\" or \"sample:N\""))
}

fn build(target: BuildTarget) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let (geometry, counts, out, json) = match target {
        BuildTarget::Pg { n, q, out, json } => {
            let pg = build_pg(n, parse_field(&q)?)?;
            let mut counts = vec![("points", pg.space.n_points), ("lines", pg.space.lines.len())];
            if n >= 3 {
                counts.push(("planes", pg.subspaces_of_dim(2).len()));
            }
            (formats::geometry_of_pg(&pg), counts, out, json)
        }
        BuildTarget::Punctured { n, q, delete, out, json } => {
            let pg = build_pg(n, parse_field(&q)?)?;
            if delete >= pg.space.n_points {
                return Err(format!("point {delete} out of range").into());
            }
            let mut x = pg.space.all_points();
            x.remove(delete);
            let (punct, _) = pg.space.restrict(&x)?;
            let counts = vec![("points", punct.n_points), ("lines", punct.lines.len())];
            let mut g = formats::geometry_of_space(&punct);
            g.label = format!("punctured-pg({n},{q})-minus-{delete}");
            (g, counts, out, json)
        }
        BuildTarget::Kreuzer { q, out, json } => {
            let (_, space, _) = gallery::build_kreuzer_space(parse_field(&q)?.q())?;
            let counts = vec![("points", space.n_points), ("lines", space.lines.len())];
            (formats::geometry_of_space(&space), counts, out, json)
        }
        BuildTarget::Complete { points, out, json } => {
            let space = LinearSpace::complete_graph(points);
            let counts = vec![("points", space.n_points), ("lines", space.lines.len())];
            (formats::geometry_of_space(&space), counts, out, json)
        }
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&geometry)?);
    } else {
        let summary: Vec<String> = counts.iter().map(|(k, v)| format!("{v} {k}")).collect();
        println!("{}: {}", geometry.label, summary.join(", "));
    }
    if let Some(path) = out {
        formats::write_json(&path, &geometry)?;
        if !json {
            println!("wrote {}", path.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn check(args: CheckArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let geometry = formats::read_geometry(&args.geometry)?;
    let ambient = formats::ambient_from_geometry(&geometry)?;
    let cfg = SuiteConfig {
        k: args.k,
        frames: parse_frames(&args.frames)?,
        seed: args.seed,
        roundtrips: args.roundtrips,
        clique_cap: args.clique_cap,
    };
    let lines = run_suites(args.suite, &ambient, &cfg)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&lines)?);
    } else {
        for l in &lines {
            println!(
                "[{}] {:<42} {:>9} instances {:>7} ms  {}",
                if l.pass { "PASS" } else { "FAIL" },
                l.id,
                l.instances,
                l.millis,
                l.detail
            );
        }
        let failed = lines.iter().filter(|l| !l.pass).count();
        println!("{} checks, {} failed", lines.len(), failed);
    }
    if lines.iter().all(|l| l.pass) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(2))
    }
}

fn grass_at(
    ambient: &Arc<Ambient>,
    k: i64,
) -> Result<Arc<GrassmannSpace>, Box<dyn std::error::Error>> {
    Ok(Arc::new(GrassmannSpace::enumerate(ambient.clone(), k)?))
}

fn run_suites(
    suite: SuiteName,
    ambient: &Arc<Ambient>,
    cfg: &SuiteConfig,
) -> Result<Vec<CheckLine>, Box<dyn std::error::Error>> {
    let space = ambient.space();
    let mut lines = Vec::new();
    match suite {
        SuiteName::Axioms => lines.extend(report::suite_axioms(space)),
        SuiteName::Projective => lines.extend(report::suite_projective(space)),
        SuiteName::Exchange => lines.extend(report::suite_exchange(space)),
        SuiteName::Bases => lines.extend(report::suite_closure_bases(space)),
        SuiteName::Maps => lines.extend(report::suite_maps()),
        SuiteName::Distance => {
            lines.extend(report::suite_distance(grass_at(ambient, cfg.k)?.as_ref()));
        }
        SuiteName::Cliques => {
            lines.extend(report::suite_cliques(grass_at(ambient, cfg.k)?.as_ref(), cfg.clique_cap));
        }
        SuiteName::ComplementAdjacency => {
            lines.extend(report::suite_complement_adjacency(grass_at(ambient, cfg.k)?.as_ref()));
        }
        SuiteName::BasesetLemmas => {
            lines.extend(report::suite_baseset(&grass_at(ambient, cfg.k)?, cfg));
        }
        SuiteName::Counts => match ambient.pg() {
            Some(pg) => lines.extend(report::suite_counts(pg)),
            None => return Err("counts suite needs a projective geometry".into()),
        },
        SuiteName::Recognition => match ambient.pg() {
            Some(pg) => lines.extend(report::suite_recognition(pg, cfg)),
            None => return Err("recognition suite needs a projective geometry".into()),
        },
        SuiteName::Plucker => match ambient.pg() {
            Some(pg) => lines.extend(report::suite_plucker(pg, cfg)),
            None => return Err("plucker suite needs a projective geometry".into()),
        },
        SuiteName::CollineationGroup => match ambient.pg() {
            Some(pg) => lines.extend(report::suite_collineation_group(pg)),
            None => return Err("collineation-group suite needs a projective geometry".into()),
        },
        SuiteName::Gallery => {
            let q = ambient.pg().map(|p| p.field.q()).unwrap_or(2);
            lines.extend(report::suite_gallery(q));
        }
        SuiteName::All => {
            lines.extend(report::suite_axioms(space));
            lines.extend(report::suite_exchange(space));
            if space.n_points <= 16 {
                lines.extend(report::suite_closure_bases(space));
            }
            lines.extend(report::suite_maps());
            let g = grass_at(ambient, cfg.k)?;
            lines.extend(report::suite_distance(&g));
            lines.extend(report::suite_cliques(&g, cfg.clique_cap));
            if let Some(pg) = ambient.pg() {
                lines.extend(report::suite_projective(space));
                lines.extend(report::suite_counts(pg));
                let n = ambient.dim() as i64;
                if cfg.k > 0 && cfg.k < n - 1 {
                    lines.extend(report::suite_complement_adjacency(&g));
                    lines.extend(report::suite_baseset(&g, cfg));
                    lines.extend(report::suite_recognition(pg, cfg));
                    lines.extend(report::suite_plucker(pg, cfg));
                }
                lines.extend(report::suite_collineation_group(pg));
                lines.extend(report::suite_gallery(pg.field.q()));
            }
        }
    }
    Ok(lines)
}

fn do_recognize(args: RecognizeArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let map = formats::load_map(&args.map)?;
    let mode = match args.mode {
        ModeName::Chow => RecognizeMode::Chow,
        ModeName::Baseset => RecognizeMode::BaseSubset,
    };
    let cfg = RecognizeConfig {
        frame_policy: parse_frames(&args.frames)?,
        seed: args.seed,
    };
    let result = recognize(&map, mode, cfg)?;
    let json = formats::recognition_to_json(&result);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&json)?);
    } else {
        println!("verdict: {}", serde_json::to_string(&json.verdict)?);
        if let Some(w) = &json.witness {
            println!(
                "witness point map ({}): {:?}",
                if json.witness_into_dual {
                    "into the dual space"
                } else {
                    "into the target space"
                },
                w
            );
        }
        for d in &json.checks.diagnostics {
            println!("note: {d}");
        }
    }
    if result.verdict == Verdict::Unrecognized {
        Ok(ExitCode::from(2))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn run_gallery(action: GalleryAction) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match action {
        GalleryAction::Run { item, q, out } => {
            std::fs::create_dir_all(&out)?;
            let q = parse_field(&q)?.q();
            let items = match item {
                Some(id) => vec![gallery::run_item(&id, q)?],
                None => gallery::all_items(q)?,
            };
            let mut all_pass = true;
            for it in &items {
                let path = out.join(format!("{}.json", it.id));
                formats::write_json(&path, it)?;
                let status = if it.all_pass() { "ok" } else { "FAILED" };
                all_pass &= it.all_pass();
                println!("{}: {} claims {status} -> {}", it.id, it.claims.len(), path.display());
            }
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
    }
}

fn export(args: ExportArgs) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let geometry = formats::read_geometry(&args.geometry)?;
    let ambient = formats::ambient_from_geometry(&geometry)?;
    let g = GrassmannSpace::enumerate(ambient, args.k)?;
    match args.format {
        ExportFormat::Dot => {
            std::fs::write(&args.out, formats::adjacency_dot(&g))?;
        }
        ExportFormat::Json => {
            formats::write_json(&args.out, &formats::grassmann_to_json(&g))?;
        }
    }
    println!(
        "exported level {} with {} elements to {}",
        args.k,
        g.len(),
        args.out.display()
    );
    Ok(ExitCode::SUCCESS)
}
