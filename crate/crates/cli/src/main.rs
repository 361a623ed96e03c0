//! `epg`: build, validate, analyse and draw grid representations.
//!
//! Exit codes: 0 success, 1 semantic failure (validation, construction or a
//! violated bound), 2 usage, input or parse error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use epg_core::bounds::{check_edge_count_bound, cross_check_pathwidth, projection_pathwidth_bound};
use epg_core::construct::{epg_any_graph, pathwidth_epg};
use epg_core::graph::{apply_minor, Graph, MinorRecipe};
use epg_core::interval::decomposition_to_intervals;
use epg_core::io::{
    parse_decomposition, parse_drawing, parse_graph, parse_intervals, parse_minor_recipe,
    parse_representation, write_representation, Format, Report,
};
use epg_core::representation::{stats, validate, GridRepresentation, Mode};
use epg_core::svg::{render_svg, RenderStyle};

#[derive(Parser)]
#[command(name = "epg", version, about = "Grid-path representations of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Universal xy+-monotone construction for any graph.
    Complete,
    /// Height linear in pathwidth, from intervals or a path decomposition.
    Pathwidth,
    /// From an orthogonal drawing, optionally of a minor.
    Orthogonal,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Epg,
    Vpg,
    ProperVpg,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Epg => Mode::Epg,
            ModeArg::Vpg => Mode::Vpg,
            ModeArg::ProperVpg => Mode::ProperVpg,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build an EPG-representation and validate it against its target graph.
    Construct {
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long)]
        graph: PathBuf,
        /// Interval file (`v l r` lines); pathwidth method.
        #[arg(long, conflicts_with = "decomposition")]
        intervals: Option<PathBuf>,
        /// Path decomposition (one bag per line); pathwidth method.
        #[arg(long)]
        decomposition: Option<PathBuf>,
        /// Orthogonal drawing of the graph; orthogonal method.
        #[arg(long)]
        drawing: Option<PathBuf>,
        /// Minor recipe applied before drawing; orthogonal method.
        #[arg(long)]
        minor: Option<PathBuf>,
        /// Keep the vertex cycles closed (orthogonal method).
        #[arg(long)]
        closed: bool,
        /// Representation output; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Validation report output; standard error when absent.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Compare the graph induced by a representation with a graph.
    Validate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        rep: PathBuf,
        /// Overrides the mode line of the representation file.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Print statistics and, with `--bounds`, lower-bound checks.
    Analyze {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        bounds: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Draw a representation as SVG.
    Render {
        #[arg(long)]
        rep: PathBuf,
        /// SVG output; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 24)]
        cell: u32,
        #[arg(long, default_value_t = 3)]
        offset: u32,
        #[arg(long)]
        no_labels: bool,
        #[arg(long)]
        no_grid: bool,
    },
}

enum Failure {
    /// Exit 1, with the report or message already composed.
    Semantic(String),
    /// Exit 2.
    Input(String),
}

type Outcome = Result<(), Failure>;

fn input(e: impl ToString) -> Failure {
    Failure::Input(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load<T, E: ToString>(
    path: &Path,
    parse: impl FnOnce(&str) -> Result<T, E>,
) -> Result<T, Failure> {
    parse(&read(path)?)
        .map_err(|e| Failure::Input(format!("{}: {}", path.display(), e.to_string())))
}

fn emit(path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct {
            method,
            graph,
            intervals,
            decomposition,
            drawing,
            minor,
            closed,
            out,
            report,
            svg,
            format,
        } => construct(
            method,
            &graph,
            intervals.as_deref(),
            decomposition.as_deref(),
            drawing.as_deref(),
            minor.as_deref(),
            closed,
            out.as_deref(),
            report.as_deref(),
            svg.as_deref(),
            format.into(),
        ),
        Command::Validate {
            graph,
            rep,
            mode,
            format,
        } => validate_cmd(&graph, &rep, mode.map(Into::into), format.into()),
        Command::Analyze {
            rep,
            graph,
            bounds,
            format,
        } => analyze(&rep, graph.as_deref(), bounds, format.into()),
        Command::Render {
            rep,
            out,
            cell,
            offset,
            no_labels,
            no_grid,
        } => render(&rep, out.as_deref(), cell, offset, !no_labels, !no_grid),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Semantic(msg)) => {
            eprint!("{msg}");
            if !msg.ends_with('\n') {
                eprintln!();
            }
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn construct(
    method: Method,
    graph: &Path,
    intervals: Option<&Path>,
    decomposition: Option<&Path>,
    drawing: Option<&Path>,
    minor: Option<&Path>,
    closed: bool,
    out: Option<&Path>,
    report_path: Option<&Path>,
    svg: Option<&Path>,
    format: Format,
) -> Outcome {
    let g = load(graph, parse_graph)?;
    let (rep, target): (GridRepresentation, Graph) = match method {
        Method::Complete => (
            epg_any_graph(&g).map_err(|e| Failure::Semantic(e.to_string()))?,
            g,
        ),
        Method::Pathwidth => {
            let ir = match (intervals, decomposition) {
                (Some(p), None) => load(p, parse_intervals)?,
                (None, Some(p)) => {
                    let pd = load(p, parse_decomposition)?;
                    decomposition_to_intervals(&pd)
                        .map_err(|e| input(format!("{}: {e}", p.display())))?
                }
                _ => {
                    return Err(input(
                        "the pathwidth method needs --intervals or --decomposition",
                    ))
                }
            };
            (
                pathwidth_epg(&g, &ir).map_err(|e| Failure::Semantic(e.to_string()))?,
                g,
            )
        }
        Method::Orthogonal => {
            let Some(dp) = drawing else {
                return Err(input("the orthogonal method needs --drawing"));
            };
            let d = load(dp, parse_drawing)?;
            let r = match minor {
                Some(p) => load(p, parse_minor_recipe)?,
                None => MinorRecipe::default(),
            };
            let target = apply_minor(&g, &r).map_err(|e| Failure::Semantic(e.to_string()))?;
            let rep = epg_core::transform::orth_to_epg(&d, &g, &r, !closed)
                .map_err(|e| Failure::Semantic(e.to_string()))?;
            (rep, target)
        }
    };

    let rep = rep.normalized();
    let v = validate(&rep, &target).map_err(|e| Failure::Semantic(e.to_string()))?;
    let ok = v.is_exact();
    let text = Report::new("construct", ok)
        .section("validation", &v)
        .render(format);

    emit(out, &write_representation(&rep))?;
    if let Some(p) = svg {
        let style = RenderStyle::default();
        let s = render_svg(&rep, &style).map_err(input)?;
        write(p, &s)?;
    }
    match (report_path, ok) {
        (Some(p), true) => write(p, &text),
        (Some(p), false) => {
            write(p, &text)?;
            Err(Failure::Semantic(text))
        }
        (None, true) => {
            eprint!("{text}");
            Ok(())
        }
        (None, false) => Err(Failure::Semantic(text)),
    }
}

fn validate_cmd(graph: &Path, rep: &Path, mode: Option<Mode>, format: Format) -> Outcome {
    let g = load(graph, parse_graph)?;
    let mut r = load(rep, |t| parse_representation(t, Mode::Epg))?;
    if let Some(m) = mode {
        r.mode = m;
    }
    let v = validate(&r, &g).map_err(|e| Failure::Semantic(e.to_string()))?;
    let ok = v.passes();
    let text = Report::new("validate", ok)
        .section("validation", &v)
        .render(format);
    print!("{text}");
    if ok {
        Ok(())
    } else {
        Err(Failure::Semantic(format!(
            "validation failed: missing {:?}, excess {:?}",
            v.missing, v.excess
        )))
    }
}

fn analyze(rep: &Path, graph: Option<&Path>, bounds: bool, format: Format) -> Outcome {
    let r = load(rep, |t| parse_representation(t, Mode::Epg))?;
    let g = graph.map(|p| load(p, parse_graph)).transpose()?;
    let mut report = Report::new("analyze", true).section("stats", &stats(&r));
    let mut violated = Vec::new();
    if bounds {
        let mut checks = vec![projection_pathwidth_bound(&r)];
        if let Some(g) = &g {
            checks.push(check_edge_count_bound(&r, g));
            checks.push(cross_check_pathwidth(&r, g));
        }
        violated = checks
            .iter()
            .filter(|b| b.is_violated())
            .map(|b| b.name.clone())
            .collect();
        report.ok = violated.is_empty();
        report = report.section("bounds", &checks);
    }
    print!("{}", report.render(format));
    if violated.is_empty() {
        Ok(())
    } else {
        Err(Failure::Semantic(format!(
            "violated bounds: {}",
            violated.join(", ")
        )))
    }
}

fn render(
    rep: &Path,
    out: Option<&Path>,
    cell: u32,
    offset: u32,
    labels: bool,
    grid_dots: bool,
) -> Outcome {
    let r = load(rep, |t| parse_representation(t, Mode::Epg))?;
    let style = RenderStyle {
        cell,
        offset,
        labels,
        grid_dots,
        ..RenderStyle::default()
    };
    let svg = render_svg(&r, &style).map_err(input)?;
    emit(out, &svg)
}
