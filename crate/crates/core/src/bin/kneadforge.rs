use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kneadforge::algebra::{parse_rational, Elem};
use kneadforge::bifurcation::derive_bifurcation_eq;
use kneadforge::exceptional::{
    cascade_search, classify_turning_point, codim1_analyze, hyperbolic_approx_obstruction, nonrigidity_scan,
    renormalization_check, CascadeOptions,
};
use kneadforge::io::{self, LoadedMap, MapDescriptor};
use kneadforge::itinerary::{itinerary_of, Itinerary};
use kneadforge::plot::{plot_svg, PlotStyle, Series};
use kneadforge::pwl::{orbit, validate_space, CombData, IntervalMap};
use kneadforge::reproduce::{reproduce, IDS};
use kneadforge::{Error, Result};

/// Exact analysis of constant-slope piecewise-linear multimodal maps.
#[derive(Parser)]
#[command(name = "kneadforge", version)]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Output format; each subcommand accepts a subset.
    #[arg(long, short, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Args, Clone)]
struct MapArgs {
    /// Map descriptor JSON file: {"lambda", "b"} or {"comb", "lambda", "breakpoints", "offsets"}.
    #[arg(long, conflicts_with_all = ["lambda", "b"])]
    map: Option<PathBuf>,
    /// Slope: "p/q", a decimal, or "c0,c1,...,cn@lo:hi" for a polynomial root.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Middle offset of the bimodal map.
    #[arg(long, allow_hyphen_values = true, requires = "lambda")]
    b: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check combinatorial data of a space of maps.
    Validate {
        /// JSON file with {"N", "sigma", "l", "s"}.
        comb: PathBuf,
    },
    /// Report whether a map is feasible and list violated constraints.
    Feasible(#[command(flatten)] MapArgs),
    /// Exact orbit of a point.
    Orbit {
        #[command(flatten)]
        map: MapArgs,
        /// Starting point: a rational or a turning point such as "c1".
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(short, long, default_value_t = 20)]
        n: usize,
    },
    /// Itinerary of a point, with a classification when it is a turning point.
    Itinerary {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(short, long, default_value_t = 50)]
        n: usize,
    },
    /// Bifurcation equation of a turning-point itinerary.
    Bifeq {
        /// e.g. "c1 J2 c1".
        itinerary: String,
        /// "bimodal" or "standard:l:s".
        #[arg(long, default_value = "bimodal")]
        chart: String,
    },
    /// Search for exceptional itineraries built on a periodic base.
    Cascade {
        base: String,
        #[arg(short = 'm', long, default_value_t = 3)]
        max_insertions: usize,
        /// Slope window "lo:hi".
        #[arg(long, default_value = "1:3")]
        window: String,
        /// Lap indices that may be inserted, comma separated.
        #[arg(long, default_value = "0,1")]
        alphabet: String,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Codimension-one curve from controlled itineraries, or the obstruction
    /// test for a concrete map when no itineraries are given.
    Codim1 {
        #[command(flatten)]
        map: MapArgs,
        /// Controlled itinerary; repeat once per controlled turning point.
        #[arg(long)]
        controlled: Vec<String>,
        #[arg(long, default_value = "bimodal")]
        chart: String,
        #[arg(long, default_value_t = 200)]
        horizon: usize,
    },
    /// Renormalization interval around a turning point.
    Renorm {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long, default_value_t = 1)]
        center: usize,
        #[arg(long, default_value_t = 2)]
        period: usize,
    },
    /// Turning-point itineraries across a grid of bimodal offsets.
    Scan {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Offset range "lo:hi".
        #[arg(long, allow_hyphen_values = true, default_value = "-11/100:11/100")]
        b_range: String,
        #[arg(long, default_value_t = 21)]
        points: usize,
        #[arg(long, default_value_t = 24)]
        horizon: usize,
    },
    /// Recompute a worked example and compare with its printed values.
    Reproduce {
        /// Example id; omit with --list.
        id: Option<String>,
        #[arg(long)]
        list: bool,
    },
    /// SVG picture of a map and the orbits of chosen points.
    Plot {
        #[command(flatten)]
        map: MapArgs,
        /// Comma-separated starting points; defaults to every turning point.
        #[arg(long, allow_hyphen_values = true)]
        points: Option<String>,
        #[arg(short, long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value = "cobweb")]
        style: String,
    },
}

impl Command {
    fn formats(&self) -> &'static [Format] {
        match self {
            Command::Orbit { .. } => &[Format::Json, Format::Csv],
            Command::Cascade { .. } => &[Format::Json, Format::Csv],
            Command::Plot { .. } => &[Format::Svg],
            _ => &[Format::Json],
        }
    }
}

enum Output {
    Json(Value),
    Text(String),
}

fn load(args: &MapArgs) -> Result<LoadedMap> {
    descriptor(args)?.load()
}

fn descriptor(args: &MapArgs) -> Result<MapDescriptor> {
    match (&args.map, &args.lambda, &args.b) {
        (Some(p), _, _) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
            MapDescriptor::from_json(&text)
        }
        (None, Some(l), Some(b)) => Ok(MapDescriptor::Bimodal { lambda: io::parse_lambda(l)?, b: b.clone() }),
        _ => Err(Error::Parse("give --map FILE or both --lambda and --b".into())),
    }
}

fn point(m: &dyn IntervalMap, s: &str) -> Result<(String, Elem)> {
    let s = s.trim();
    if let Some(i) = s.strip_prefix('c').and_then(|k| k.parse::<usize>().ok()) {
        let c = m
            .turning_points()
            .get(i.wrapping_sub(1))
            .ok_or_else(|| Error::Parse(format!("no turning point {s}")))?;
        return Ok((s.to_string(), c.clone()));
    }
    Ok((s.to_string(), m.field().from_rational(&parse_rational(s)?)))
}

fn range(s: &str) -> Result<(num_rational::BigRational, num_rational::BigRational)> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| Error::Parse(format!("expected lo:hi, got {s:?}")))?;
    Ok((parse_rational(lo)?, parse_rational(hi)?))
}

fn itinerary(s: &str) -> Result<Itinerary> {
    s.parse()
}

fn run(cmd: &Command, format: Format) -> Result<Output> {
    Ok(match cmd {
        Command::Validate { comb } => {
            let text = std::fs::read_to_string(comb).map_err(|e| Error::Parse(format!("{}: {e}", comb.display())))?;
            let data: CombData = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            Output::Json(io::envelope("space_report", serde_json::to_value(validate_space(&data)?).expect("plain data")))
        }
        Command::Feasible(args) => {
            let d = descriptor(args)?;
            let body = match d.feasibility()? {
                Ok(_) => json!({ "feasible": true, "violations": [] }),
                Err(v) => json!({ "feasible": false, "violations": v }),
            };
            Output::Json(io::envelope("feasibility", body))
        }
        Command::Orbit { map, x, n } => {
            let loaded = load(map)?;
            let m = loaded.interval_map()?;
            let (_, x) = point(m, x)?;
            let pts = orbit(m, &x, *n)?;
            match format {
                Format::Csv => Output::Text(io::orbit_csv(&pts)),
                _ => Output::Json(io::orbit_json(m.field(), &pts)),
            }
        }
        Command::Itinerary { map, x, n } => {
            let loaded = load(map)?;
            let m = loaded.interval_map()?;
            let (label, xe) = point(m, x)?;
            let it = itinerary_of(m, &xe, *n)?;
            let mut body = json!({ "x": label, "horizon": n, "itinerary": it });
            if let Some(i) = m.turning_points().iter().position(|c| m.field().equal(c, &xe)) {
                body["classification"] = io::classification_json(&classify_turning_point(m, i + 1, *n)?);
            }
            Output::Json(io::envelope("itinerary", body))
        }
        Command::Bifeq { itinerary: s, chart } => {
            let eq = derive_bifurcation_eq(io::parse_chart(chart)?, &itinerary(s)?)?;
            Output::Json(io::equation_json(&eq))
        }
        Command::Cascade { base, max_insertions, window, alphabet, jobs } => {
            let mut opts = CascadeOptions::new(*max_insertions, range(window)?);
            opts.alphabet = alphabet
                .split(',')
                .map(|j| j.trim().parse::<usize>().map_err(|e| Error::Parse(format!("alphabet: {e}"))))
                .collect::<Result<_>>()?;
            opts.jobs = *jobs;
            let out = cascade_search(&itinerary(base)?, &opts)?;
            match format {
                Format::Csv => Output::Text(io::cascade_csv(&out)),
                _ => Output::Json(io::cascade_json(&out)),
            }
        }
        Command::Codim1 { map, controlled, chart, horizon } => {
            if controlled.is_empty() {
                let loaded = load(map)?;
                Output::Json(io::obstruction_json(&hyperbolic_approx_obstruction(loaded.interval_map()?, *horizon)?))
            } else {
                let lambda = map.lambda.as_ref().ok_or_else(|| Error::Parse("codim1 with --controlled needs --lambda".into()))?;
                let field = io::parse_lambda(lambda)?.field()?;
                let its = controlled.iter().map(|s| itinerary(s)).collect::<Result<Vec<_>>>()?;
                Output::Json(io::codim1_json(&codim1_analyze(io::parse_chart(chart)?, &its, &field)?))
            }
        }
        Command::Renorm { map, center, period } => {
            let loaded = load(map)?;
            let m = loaded.interval_map()?;
            if *center == 0 || *center > m.turning_count() {
                return Err(Error::Parse(format!("center must be in 1..={}", m.turning_count())));
            }
            Output::Json(io::renorm_json(m.field(), &renormalization_check(m, *center, *period)?))
        }
        Command::Scan { lambda, b_range, points, horizon } => {
            let field = io::parse_lambda(lambda)?.field()?;
            let (lo, hi) = range(b_range)?;
            let grid: Vec<Elem> = match *points {
                0 => Vec::new(),
                1 => vec![Elem::rational(&lo)],
                k => (0..k)
                    .map(|i| {
                        let t = num_rational::BigRational::new(i.into(), (k - 1).into());
                        Elem::rational(&(&lo + (&hi - &lo) * t))
                    })
                    .collect(),
            };
            Output::Json(io::scan_json(&nonrigidity_scan(&field, &grid, *horizon)?))
        }
        Command::Reproduce { id, list } => match (id, list) {
            (_, true) | (None, false) => Output::Json(io::envelope("reproduction_ids", json!({ "ids": IDS }))),
            (Some(id), false) => Output::Json(reproduce(id)?.to_json()),
        },
        Command::Plot { map, points, n, style } => {
            let style: PlotStyle = style.parse()?;
            let loaded = load(map)?;
            let m = loaded.interval_map()?;
            let series = match points {
                Some(p) => p.split(',').map(|s| point(m, s)).collect::<Result<Vec<_>>>()?,
                None => (1..=m.turning_count()).map(|i| (format!("c{i}"), m.turning_points()[i - 1].clone())).collect(),
            };
            let series: Vec<Series> = series.into_iter().map(|(label, start)| Series { label, start }).collect();
            Output::Text(plot_svg(m, &series, *n, style)?)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let allowed = cli.command.formats();
    let format = cli.format.unwrap_or(allowed[0]);
    if !allowed.contains(&format) {
        let name = format.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        eprintln!("error: format {name} is not available for this subcommand");
        return ExitCode::from(2);
    }
    let text = match run(&cli.command, format) {
        Ok(Output::Json(v)) => format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable")),
        Ok(Output::Text(s)) => s,
        Err(e) => {
            eprintln!("{}", io::error_json(&e));
            return ExitCode::from(1);
        }
    };
    match &cli.output {
        Some(p) => {
            if let Err(e) = std::fs::write(p, text) {
                eprintln!("{}", io::error_json(&Error::Parse(format!("{}: {e}", p.display()))));
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}
