mod grid;

use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use knotwidth::carving::{
    exact_carving_width_with_cap, heuristic_bond_carving, heuristic_carving, DEFAULT_EXACT_CAP,
};
use knotwidth::families::{
    pretzel_diagram, torus_diagram, trefoil_connect_sum, two_bridge_diagram, FamilySpec,
};
use knotwidth::pipeline::{report_from_run, run_pipeline, PipelineRun};
use knotwidth::spheres::pretzel_natural_decomposition;
use knotwidth::triangulation::{
    drilled_block, face_pairing_width, layered_solid_torus, prism_block, torus_complement,
    torus_filling, Triangulation,
};
use knotwidth::{
    parse_pd, subdivide_to_simple, tw_bounds_from_cw, CarvingDecomposition, Diagram, Error, Graph,
};

#[derive(Parser, Debug)]
#[command(
    name = "knotwidth",
    version,
    about = "Carving width, sphere-decompositions and Heegaard splittings of knot diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Largest graph solved by the exact carving-width solver.
    #[arg(long, global = true, default_value_t = DEFAULT_EXACT_CAP, value_parser = parse_cap)]
    exact_cap: usize,
    /// Restrict carvings to bond decompositions.
    #[arg(long, global = true)]
    bond: bool,
    /// Fail instead of falling back to the heuristic above the exact cap.
    #[arg(long, global = true)]
    exact_only: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized corpora.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for grids.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Directory for artifacts.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

fn parse_cap(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 2 => Ok(n),
        Ok(_) => Err("the exact cap must be at least 2".into()),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
    Svg,
    Csv,
    Md,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Piece {
    Complement,
    Filling,
    Upper,
    Lower,
    Prism,
    Drilled,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a diagram given as a PD file, JSON file, `-` or a family spec such as `torus:3,2`.
    Parse {
        input: String,
    },
    GenTorus {
        p: i64,
        q: i64,
    },
    GenPretzel {
        #[arg(allow_hyphen_values = true)]
        a: i64,
        #[arg(allow_hyphen_values = true)]
        b: i64,
        #[arg(allow_hyphen_values = true)]
        c: i64,
    },
    GenSum {
        n: usize,
    },
    GenTwoBridge {
        #[arg(required = true, allow_hyphen_values = true)]
        cf: Vec<i64>,
    },
    /// Carving decomposition of the subdivided diagram graph.
    Carve {
        input: String,
    },
    /// Realizing curves for a bond carving.
    Realize {
        input: String,
    },
    Spheres {
        input: String,
    },
    Tube {
        input: String,
    },
    /// Full run with the chain of width inequalities.
    Report {
        input: String,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Triangulation of a torus knot complement or one of its pieces.
    Triangulate {
        p: u64,
        q: u64,
        #[arg(long, value_enum, default_value_t = Piece::Complement)]
        piece: Piece,
    },
    /// Batch table over a family.
    Grid {
        #[arg(value_enum)]
        family: grid::GridFamily,
        /// Largest parameter (or instance count for `random`).
        #[arg(long, default_value_t = 9)]
        max: u64,
    },
}

/// Outcome of a command: whether every validation passed.
type Verdict = anyhow::Result<bool>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Verdict {
    match &cli.command {
        Command::Parse { input } => cmd_parse(cli, input),
        Command::GenTorus { p, q } => emit_diagram(cli, &torus_diagram(*p, *q)?, "torus"),
        Command::GenPretzel { a, b, c } => {
            emit_diagram(cli, &pretzel_diagram(*a, *b, *c)?.diagram, "pretzel")
        }
        Command::GenSum { n } => emit_diagram(cli, &trefoil_connect_sum(*n)?, "sum"),
        Command::GenTwoBridge { cf } => emit_diagram(cli, &two_bridge_diagram(cf)?, "two-bridge"),
        Command::Carve { input } => cmd_carve(cli, input),
        Command::Realize { input } => cmd_realize(cli, input),
        Command::Spheres { input } => cmd_spheres(cli, input),
        Command::Tube { input } => cmd_tube(cli, input),
        Command::Report { input, k } => cmd_report(cli, input, *k),
        Command::Triangulate { p, q, piece } => cmd_triangulate(cli, *p, *q, *piece),
        Command::Grid { family, max } => grid::cmd_grid(
            cli.format,
            cli.seed,
            cli.exact_cap,
            *family,
            *max,
            cli.out.as_deref(),
        ),
    }
}

fn load_diagram(input: &str) -> anyhow::Result<Diagram> {
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else if Path::new(input).exists() {
        std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    } else {
        return FamilySpec::parse(input)
            .and_then(|f| f.diagram())
            .with_context(|| format!("{input:?} is neither a file nor a family spec"));
    };
    if text.trim_start().starts_with('{') {
        Ok(Diagram::from_json(&text)?)
    } else {
        Ok(parse_pd(&text)?)
    }
}

fn write_artifact(cli: &Cli, name: &str, body: &str) -> anyhow::Result<()> {
    if let Some(dir) = &cli.out {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let path = dir.join(name);
        std::fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn unsupported(cli: &Cli, what: &str) -> anyhow::Error {
    anyhow::anyhow!("format {:?} is not available for {what}", cli.format)
}

fn emit_diagram(cli: &Cli, d: &Diagram, name: &str) -> Verdict {
    let body = match cli.format {
        Format::Text => d.to_pd()?,
        Format::Json => d.to_json(),
        Format::Dot => d.to_dot(),
        _ => return Err(unsupported(cli, "diagrams")),
    };
    write_artifact(cli, &format!("{name}.{}", extension(cli.format)), &body)?;
    print!("{}", ensure_newline(body));
    Ok(true)
}

fn extension(f: Format) -> &'static str {
    match f {
        Format::Text => "txt",
        Format::Json => "json",
        Format::Dot => "dot",
        Format::Svg => "svg",
        Format::Csv => "csv",
        Format::Md => "md",
    }
}

fn ensure_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn cmd_parse(cli: &Cli, input: &str) -> Verdict {
    let d = load_diagram(input)?;
    if cli.format != Format::Text {
        return emit_diagram(cli, &d, "diagram");
    }
    let g = subdivide_to_simple(&d);
    println!("crossings: {}", d.crossing_count());
    println!("components: {}", d.component_count());
    println!("reduced: {}", d.is_reduced());
    println!(
        "subdivided graph: {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count()
    );
    Ok(true)
}

fn carve(cli: &Cli, g: &Graph, bond: bool) -> anyhow::Result<(CarvingDecomposition, bool)> {
    let n = g.vertex_count();
    if n <= cli.exact_cap {
        return Ok((
            exact_carving_width_with_cap(g, bond, cli.exact_cap)?.1,
            true,
        ));
    }
    if cli.exact_only {
        return Err(Error::ExactCapExceeded {
            vertices: n,
            cap: cli.exact_cap,
        }
        .into());
    }
    eprintln!(
        "warning: {n} vertices exceed the exact cap {}; using the heuristic upper bound",
        cli.exact_cap
    );
    let dec = if bond {
        heuristic_bond_carving(g)?
    } else {
        heuristic_carving(g)
    };
    Ok((dec, false))
}

fn cmd_carve(cli: &Cli, input: &str) -> Verdict {
    let d = load_diagram(input)?;
    let g = subdivide_to_simple(&d).graph();
    let (dec, exact) = carve(cli, &g, cli.bond)?;
    let body = match cli.format {
        Format::Json => dec.to_json(),
        Format::Dot => dec.to_dot(),
        Format::Text => {
            let b = tw_bounds_from_cw(dec.width(), g.max_degree());
            format!(
                "carving width: {} ({})\ngraph: {} vertices, {} edges, max degree {}\nbond: {}\ntree-width interval: [{}, {}]\n",
                dec.width(),
                if exact { "exact" } else { "heuristic upper bound" },
                g.vertex_count(),
                g.edge_count(),
                g.max_degree(),
                dec.is_bond(&g),
                b.tw_lower,
                b.tw_upper
            )
        }
        _ => return Err(unsupported(cli, "carvings")),
    };
    write_artifact(cli, &format!("carving.{}", extension(cli.format)), &body)?;
    print!("{}", ensure_newline(body));
    Ok(true)
}

fn pipeline(cli: &Cli, input: &str) -> anyhow::Result<(Diagram, PipelineRun)> {
    let d = load_diagram(input)?;
    let n = subdivide_to_simple(&d).vertex_count();
    if n > cli.exact_cap {
        if cli.exact_only {
            return Err(Error::ExactCapExceeded {
                vertices: n,
                cap: cli.exact_cap,
            }
            .into());
        }
        eprintln!(
            "warning: {n} vertices exceed the exact cap {}; using the heuristic upper bound",
            cli.exact_cap
        );
    }
    let run = run_pipeline(&d, cli.exact_cap)?;
    Ok((d, run))
}

fn cmd_realize(cli: &Cli, input: &str) -> Verdict {
    let (_, run) = pipeline(cli, input)?;
    let report = run.curves.validate(run.graph.map(), &run.carving);
    let body = match cli.format {
        Format::Json => run.curves.to_json(),
        Format::Svg => run.curves.to_svg(&run.graph, None),
        Format::Text => {
            let mut s = format!("curves: {}\n", run.curves.len());
            for c in &report.checks {
                s.push_str(&format!(
                    "[{}] {}{}\n",
                    if c.passed { "ok" } else { "FAIL" },
                    c.name,
                    c.witness
                        .as_deref()
                        .map(|w| format!(": {w}"))
                        .unwrap_or_default()
                ));
            }
            s
        }
        _ => return Err(unsupported(cli, "curves")),
    };
    write_artifact(cli, &format!("curves.{}", extension(cli.format)), &body)?;
    print!("{}", ensure_newline(body));
    Ok(report.all_passed())
}

fn cmd_spheres(cli: &Cli, input: &str) -> Verdict {
    let (_, run) = pipeline(cli, input)?;
    let ok = run.spheres.validate().is_ok();
    let body = match cli.format {
        Format::Json => run.spheres.to_json(),
        Format::Svg => run.spheres.to_svg(&run.graph, &run.curves),
        Format::Text => run.spheres.report(),
        _ => return Err(unsupported(cli, "sphere-decompositions")),
    };
    write_artifact(cli, &format!("spheres.{}", extension(cli.format)), &body)?;
    print!("{}", ensure_newline(body));
    Ok(ok)
}

fn cmd_tube(cli: &Cli, input: &str) -> Verdict {
    let (_, run) = pipeline(cli, input)?;
    let ok = run.splitting.validate().is_ok();
    let body = match cli.format {
        Format::Json => run.splitting.to_json(),
        Format::Dot => run.splitting.to_dot(),
        Format::Text => format!(
            "thick spheres: {}\nthin spheres: {}\ncompression bodies: {}\ncost: {}\nwidth: {}\n",
            run.splitting.thick.len(),
            run.splitting.thin.len(),
            run.splitting.bodies.len(),
            run.splitting.cost(),
            run.splitting.width()
        ),
        _ => return Err(unsupported(cli, "splittings")),
    };
    write_artifact(cli, &format!("splitting.{}", extension(cli.format)), &body)?;
    print!("{}", ensure_newline(body));
    Ok(ok)
}

fn cmd_report(cli: &Cli, input: &str, k: Option<usize>) -> Verdict {
    let (d, run) = pipeline(cli, input)?;
    let report = report_from_run(&d, &run, k);
    // Every intermediate artifact is written before the verdict.
    write_artifact(cli, "diagram.json", &d.to_json())?;
    write_artifact(cli, "graph.dot", &run.graph.to_dot())?;
    write_artifact(cli, "carving.json", &run.carving.to_json())?;
    write_artifact(cli, "curves.json", &run.curves.to_json())?;
    write_artifact(cli, "spheres.json", &run.spheres.to_json())?;
    write_artifact(cli, "splitting.json", &run.splitting.to_json())?;
    write_artifact(cli, "report.json", &serde_json::to_string_pretty(&report)?)?;
    write_artifact(cli, "report.md", &report.markdown())?;
    let valid = run
        .curves
        .validate(run.graph.map(), &run.carving)
        .all_passed()
        && run.spheres.validate().is_ok()
        && run.splitting.validate().is_ok();
    let natural = match FamilySpec::parse(input) {
        Ok(FamilySpec::Pretzel { a, b, c }) => {
            let w = pretzel_natural_decomposition(a, b, c)?
                .decomposition
                .width_list();
            let w: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            format!("natural sphere-decomposition width: {{{}}}\n", w.join(","))
        }
        _ => String::new(),
    };
    let body = match cli.format {
        Format::Text => report.text() + &natural,
        Format::Md => report.markdown() + &natural,
        Format::Json => serde_json::to_string_pretty(&report)?,
        _ => return Err(unsupported(cli, "reports")),
    };
    print!("{}", ensure_newline(body));
    Ok(valid && report.all_hold())
}

fn cmd_triangulate(cli: &Cli, p: u64, q: u64, piece: Piece) -> Verdict {
    let (tri, label, expect_integers): (Triangulation, String, Option<bool>) = match piece {
        Piece::Complement => {
            let c = torus_complement(p, q)?;
            (
                c.triangulation,
                format!("T({},{}) complement, u = {}, v = {}", c.p, c.q, c.u, c.v),
                Some(true),
            )
        }
        Piece::Filling => {
            let c = torus_filling(p, q)?;
            (
                c.triangulation,
                format!("T({},{}) filling, u = {}, v = {}", c.p, c.q, c.u, c.v),
                Some(false),
            )
        }
        Piece::Upper | Piece::Lower => {
            if p <= q {
                bail!("layered solid torus needs p > u, got p = {p}, u = {q}");
            }
            let l = layered_solid_torus(p, q)?;
            let t = l.triple;
            (
                l.triangulation,
                format!(
                    "layered solid torus, meridian triple ({}, {}, {})",
                    t.a, t.b, t.c
                ),
                Some(true),
            )
        }
        Piece::Prism => (prism_block().triangulation, "prism block".into(), None),
        Piece::Drilled => (drilled_block().triangulation, "drilled block".into(), None),
    };
    let h1 = tri.homology_h1()?;
    let ok = tri.validate().is_ok()
        && tri.is_orientable()
        && match expect_integers {
            Some(true) => h1.is_integers(),
            Some(false) => h1.is_trivial(),
            None => true,
        };
    let (_, width) = face_pairing_width(&tri);
    let body = match cli.format {
        Format::Text => format!(
            "# {label}\n# tetrahedra {}, vertices {}, orientable {}, H1 = {h1}, path width {width}\n{}",
            tri.size(),
            tri.vertex_count(),
            tri.is_orientable(),
            tri.to_text()
        ),
        Format::Json => tri.to_json(),
        Format::Dot => tri.to_dot(),
        Format::Md => format!(
            "| quantity | value |\n|---|---|\n| piece | {label} |\n| tetrahedra | {} |\n| H1 | {h1} |\n| path width | {width} |\n",
            tri.size()
        ),
        _ => return Err(unsupported(cli, "triangulations")),
    };
    write_artifact(
        cli,
        &format!("triangulation.{}", extension(cli.format)),
        &body,
    )?;
    print!("{}", ensure_newline(body));
    Ok(ok)
}
