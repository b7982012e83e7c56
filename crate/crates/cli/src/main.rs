//! Command-line front end: compute throttling reports and curves, generate
//! families, enumerate catalogs, run the verification harness and convert
//! between graph formats.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;

use throttle_core::budget::Budget;
use throttle_core::characterize::{check_ids, verify_theorem_capped, TheoremCheck};
use throttle_core::enumerate::{enumerate_all, enumerate_connected};
use throttle_core::error::Error;
use throttle_core::families::{self, CoronaBase, FamilySpec, GalleryGraph};
use throttle_core::graph::Graph;
use throttle_core::graph6::{encode_graph6, parse_graph6};
use throttle_core::pursuit;
use throttle_core::throttling::{
    throttle, throttle_curve, CurvePoint, ParamKind, ThrottlingReport, Variant,
};

#[derive(Parser)]
#[command(
    name = "throttle",
    about = "Exact graph-search throttling: zero forcing, PSD forcing, power domination, Cops-and-Robbers",
    version,
    max_term_width = 100
)]
struct Cli {
    /// Worker threads (default: THROTTLE_THREADS or all cores). Output is
    /// byte-identical for every thread count.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    /// standard zero forcing
    Zf,
    /// positive semidefinite zero forcing
    Psd,
    /// power domination
    Pd,
    /// Cops and Robbers
    Cops,
}

impl KindArg {
    fn kind(self) -> ParamKind {
        match self {
            KindArg::Zf => ParamKind::StandardZf,
            KindArg::Psd => ParamKind::PsdZf,
            KindArg::Pd => ParamKind::PowerDom,
            KindArg::Cops => ParamKind::CopsRobbers,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    /// k + pt(G,k), minimized over k
    Sum,
    /// k * (omega + pt(G,k)): placement cost charged per round unit
    Prodx,
    /// k * pt(G,k) over k < n: connected graphs of order at least two
    Prodstar,
}

impl VariantArg {
    fn variant(self, omega: u32) -> Variant {
        match self {
            VariantArg::Sum => Variant::Sum,
            VariantArg::Prodx => Variant::ProductInitialCost(omega),
            VariantArg::Prodstar => Variant::ProductNoCost,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum OutFormat {
    Json,
    Csv,
    Table,
    Graph6,
}

#[derive(Args)]
struct GraphInput {
    /// graph6-encoded graph (takes precedence over --file and --family)
    #[arg(long)]
    graph6: Option<String>,
    #[arg(
        long,
        help = "file of graph6 lines, or an edge-list JSON {\"n\":..,\"edges\":[[u,v],..]}; \
                \"-\" reads stdin; multiple graph6 lines stream one result each"
    )]
    file: Option<String>,
    /// family name (see `family --help`); combine with --params
    #[arg(long)]
    family: Option<String>,
    /// comma-separated family parameters
    #[arg(long, default_value = "")]
    params: String,
}

#[derive(Subcommand)]
enum Command {
    /// Minimize a throttling objective and report value, optimal k,
    /// witness placement and the searched curve
    Compute {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// initial cost per vertex for prodx (>= 1)
        #[arg(long, default_value_t = 1)]
        omega: u32,
        /// evaluate a single placement size instead of minimizing
        #[arg(long)]
        k: Option<usize>,
        /// with --kind cops and --k: dump the solved game table as CSV
        /// (cops, robber, turn, value) instead of the report
        #[arg(long, default_value_t = false)]
        dump_game_table: bool,
        #[arg(long, value_enum, default_value = "json")]
        out: OutFormat,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Print the full k -> pt curve for a kind and variant, no pruning
    Curve {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long, default_value_t = 1)]
        omega: u32,
        #[arg(long, value_enum, default_value = "csv")]
        out: OutFormat,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Generate a named family instance.
    ///
    /// Names and parameters: path N | cycle N | complete N |
    /// complete-bipartite P,Q | hypercube D | full-ary-tree R,H |
    /// corona path|cycle,N | necklace J,D | gnsm N,S,M | wheel K,R |
    /// mgraph R | g1chain R | grid N,M | unit-interval X1,X2,...
    /// (rational endpoints like 3/2 allowed)
    Family {
        #[arg(long)]
        name: String,
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long, value_enum, default_value = "graph6")]
        out: OutFormat,
    },
    /// Print one of the fixed gallery graphs
    Gallery {
        /// h11 | bowtie | house | c5 | interval-t
        #[arg(long)]
        name: String,
        #[arg(long, value_enum, default_value = "graph6")]
        out: OutFormat,
    },
    /// Stream one representative per isomorphism class of connected graphs
    /// of order n (use --all to include disconnected classes)
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = false)]
        all: bool,
        #[arg(long, value_enum, default_value = "graph6")]
        out: OutFormat,
    },
    /// Replay registered claim verifications; exits 3 on any counterexample
    Verify {
        /// check id; omit (or pass "all") to run the whole registry
        #[arg(long, default_value = "all")]
        id: String,
        /// clamp catalog scopes to this order for a quick reduced-scope
        /// run; the registry scope is the default and the source of truth
        #[arg(long)]
        max_n: Option<usize>,
        /// list registered check ids and scopes, then exit
        #[arg(long, default_value_t = false)]
        list: bool,
        #[arg(long, value_enum, default_value = "json")]
        out: OutFormat,
    },
    /// Re-encode graphs between graph6 and edge-list JSON
    Convert {
        #[arg(long, value_enum, default_value = "json")]
        out: OutFormat,
        #[command(flatten)]
        input: GraphInput,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap help/version go to stdout with success
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    let threads = cli.threads.or_else(|| {
        std::env::var("THROTTLE_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(t) = threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build_global();
    }
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn dispatch(cmd: Command) -> Result<ExitCode, Error> {
    let budget = Budget::from_env();
    match cmd {
        Command::Compute {
            kind,
            variant,
            omega,
            k,
            dump_game_table,
            out,
            input,
        } => {
            let v = variant.variant(omega);
            for g in load_graphs(&input)? {
                if dump_game_table {
                    let kk =
                        k.ok_or_else(|| Error::BadParams("--dump-game-table needs --k".into()))?;
                    if kind.kind() != ParamKind::CopsRobbers {
                        return Err(Error::BadParams(
                            "--dump-game-table applies to --kind cops".into(),
                        ));
                    }
                    dump_table(&g, kk, &budget)?;
                    continue;
                }
                let report = match k {
                    None => throttle(&g, kind.kind(), v, &budget)?,
                    Some(k) => single_k_report(&g, kind.kind(), v, k, &budget)?,
                };
                render_report(&report, out);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Curve {
            kind,
            variant,
            omega,
            out,
            input,
        } => {
            let v = variant.variant(omega);
            for g in load_graphs(&input)? {
                let curve = throttle_curve(&g, kind.kind(), v, &budget)?;
                render_curve(&curve, v, out);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Family { name, params, out } => {
            let spec = parse_family(&name, &params)?;
            let g = families::generate(&spec)?;
            print_graph(&g, out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gallery { name, out } => {
            let which = match name.as_str() {
                "h11" => GalleryGraph::H11,
                "bowtie" => GalleryGraph::Bowtie,
                "house" => GalleryGraph::House,
                "c5" => GalleryGraph::C5,
                "interval-t" => GalleryGraph::IntervalT,
                other => return Err(Error::BadParams(format!("unknown gallery graph {other}"))),
            };
            print_graph(&families::fixed_gallery(which), out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n, all, out } => {
            let graphs = if all {
                enumerate_all(n)?
            } else {
                enumerate_connected(n)?
            };
            for g in graphs {
                print_graph(&g, out)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            id,
            max_n,
            list,
            out,
        } => {
            if list {
                for (id, scope) in throttle_core::characterize::CHECK_REGISTRY {
                    println!("{id:32} {scope}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let outcomes: Vec<TheoremCheck> = if id == "all" {
                check_ids()
                    .iter()
                    .map(|i| verify_theorem_capped(i, &budget, max_n))
                    .collect::<Result<_, _>>()?
            } else {
                vec![verify_theorem_capped(&id, &budget, max_n)?]
            };
            let mut all_pass = true;
            for o in &outcomes {
                all_pass &= o.pass;
                match out {
                    OutFormat::Json => println!("{}", o.to_json()),
                    _ => println!(
                        "{:32} {:5} {:7}ms {}",
                        o.id,
                        if o.pass { "pass" } else { "FAIL" },
                        o.elapsed_ms,
                        o.counterexample.as_deref().unwrap_or("")
                    ),
                }
            }
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
        Command::Convert { out, input } => {
            for g in load_graphs(&input)? {
                print_graph(&g, out)?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Evaluate the objective at one fixed k and wrap it as a report.
fn single_k_report(
    g: &Graph,
    kind: ParamKind,
    variant: Variant,
    k: usize,
    budget: &Budget,
) -> Result<ThrottlingReport, Error> {
    let pt = throttle_core::throttling::pt_param(g, kind, k, budget)?;
    let pt = pt.ok_or_else(|| {
        Error::Undefined(format!(
            "no placement of {k} vertices completes the process"
        ))
    })?;
    Ok(ThrottlingReport {
        kind,
        variant,
        value: variant.objective(k, pt),
        optimal_k: k,
        witness: Vec::new(),
        curve: vec![CurvePoint { k, pt: Some(pt) }],
    })
}

fn dump_table(g: &Graph, k: usize, budget: &Budget) -> Result<(), Error> {
    let table = pursuit::solve_game(g, k, budget)?;
    println!("cops,robber,turn,value");
    for (cops, r, turn, v) in table.rows() {
        let cops: Vec<String> = cops.iter().map(|c| c.to_string()).collect();
        println!(
            "{},{},{},{}",
            cops.join(" "),
            r,
            match turn {
                pursuit::Turn::CopsToMove => "cops",
                pursuit::Turn::RobberToMove => "robber",
            },
            v.map(|x| x.to_string()).unwrap_or_else(|| "inf".into())
        );
    }
    Ok(())
}

fn render_report(r: &ThrottlingReport, out: OutFormat) {
    match out {
        OutFormat::Json => println!("{}", r.to_json()),
        OutFormat::Csv => {
            println!("k,pt,objective");
            for p in &r.curve {
                if let Some(t) = p.pt {
                    println!("{},{},{}", p.k, t, r.variant.objective(p.k, t));
                }
            }
        }
        _ => {
            println!(
                "kind={} variant={} omega={} value={} k={} witness={:?}",
                r.kind.token(),
                r.variant.token(),
                r.variant.omega(),
                r.value,
                r.optimal_k,
                r.witness
            );
        }
    }
}

fn render_curve(curve: &[CurvePoint], variant: Variant, out: OutFormat) {
    match out {
        OutFormat::Json => {
            let pts: Vec<serde_json::Value> = curve
                .iter()
                .filter_map(|p| p.pt.map(|t| serde_json::json!([p.k, t])))
                .collect();
            println!("{}", serde_json::json!({ "curve": pts }));
        }
        _ => {
            println!("k,pt,objective");
            for p in curve {
                match p.pt {
                    Some(t) => println!("{},{},{}", p.k, t, variant.objective(p.k, t)),
                    None => println!("{},inf,inf", p.k),
                }
            }
        }
    }
}

fn print_graph(g: &Graph, out: OutFormat) -> Result<(), Error> {
    match out {
        OutFormat::Json => {
            let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(u, v)| [u, v]).collect();
            println!("{}", serde_json::json!({ "n": g.order(), "edges": edges }));
        }
        _ => println!("{}", encode_graph6(g)?),
    }
    Ok(())
}

fn load_graphs(input: &GraphInput) -> Result<Vec<Graph>, Error> {
    if let Some(g6) = &input.graph6 {
        return Ok(vec![parse_graph6(g6)?]);
    }
    if let Some(path) = &input.file {
        let text = if path == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            s
        } else {
            std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?
        };
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            return Ok(vec![graph_from_json(trimmed)?]);
        }
        let mut graphs = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if !line.is_empty() {
                graphs.push(parse_graph6(line)?);
            }
        }
        if graphs.is_empty() {
            return Err(Error::Parse("no graphs in input file".into()));
        }
        return Ok(graphs);
    }
    if let Some(name) = &input.family {
        let spec = parse_family(name, &input.params)?;
        return Ok(vec![families::generate(&spec)?]);
    }
    Err(Error::BadParams(
        "no graph given: use --graph6, --file or --family".into(),
    ))
}

fn graph_from_json(text: &str) -> Result<Graph, Error> {
    let v: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("json: {e}")))?;
    let n = v["n"]
        .as_u64()
        .ok_or_else(|| Error::Parse("json graph needs an integer \"n\"".into()))?
        as usize;
    let mut edges = Vec::new();
    let arr = v["edges"]
        .as_array()
        .ok_or_else(|| Error::Parse("json graph needs an \"edges\" array".into()))?;
    for e in arr {
        let pair = e
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| Error::Parse("each edge must be a [u,v] pair".into()))?;
        let u = pair[0]
            .as_u64()
            .ok_or_else(|| Error::Parse("bad edge endpoint".into()))?;
        let v2 = pair[1]
            .as_u64()
            .ok_or_else(|| Error::Parse("bad edge endpoint".into()))?;
        edges.push((u as usize, v2 as usize));
    }
    Graph::from_edges(n, &edges).map_err(|e| Error::Parse(e.to_string()))
}

fn ints(params: &str, want: usize, name: &str) -> Result<Vec<usize>, Error> {
    let vals: Result<Vec<usize>, _> = params
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|s| s.trim().parse())
        .collect();
    let vals = vals.map_err(|_| Error::BadParams(format!("{name} needs integer parameters")))?;
    if vals.len() != want {
        return Err(Error::BadParams(format!(
            "{name} needs {want} parameter(s), got {}",
            vals.len()
        )));
    }
    Ok(vals)
}

fn parse_family(name: &str, params: &str) -> Result<FamilySpec, Error> {
    Ok(match name {
        "path" => FamilySpec::Path(ints(params, 1, name)?[0]),
        "cycle" => FamilySpec::Cycle(ints(params, 1, name)?[0]),
        "complete" => FamilySpec::Complete(ints(params, 1, name)?[0]),
        "complete-bipartite" => {
            let v = ints(params, 2, name)?;
            FamilySpec::CompleteBipartite(v[0], v[1])
        }
        "hypercube" => FamilySpec::Hypercube(ints(params, 1, name)?[0]),
        "full-ary-tree" => {
            let v = ints(params, 2, name)?;
            FamilySpec::FullAryTree(v[0], v[1])
        }
        "corona" => {
            let parts: Vec<&str> = params.split(',').collect();
            if parts.len() != 2 {
                return Err(Error::BadParams("corona needs base,N (e.g. path,6)".into()));
            }
            let base = match parts[0].trim() {
                "path" => CoronaBase::Path,
                "cycle" => CoronaBase::Cycle,
                other => return Err(Error::BadParams(format!("unknown corona base {other}"))),
            };
            let n = parts[1]
                .trim()
                .parse()
                .map_err(|_| Error::BadParams("corona size must be an integer".into()))?;
            FamilySpec::Corona(base, n)
        }
        "necklace" => {
            let v = ints(params, 2, name)?;
            FamilySpec::GeneralizedNecklace(v[0], v[1])
        }
        "gnsm" => {
            let v = ints(params, 3, name)?;
            FamilySpec::Gnsm(v[0], v[1], v[2])
        }
        "wheel" => {
            let v = ints(params, 2, name)?;
            FamilySpec::GeneralizedWheel(v[0], v[1])
        }
        "mgraph" => FamilySpec::Mgraph(ints(params, 1, name)?[0]),
        "g1chain" => FamilySpec::G1Chain(ints(params, 1, name)?[0], None),
        "grid" => {
            let v = ints(params, 2, name)?;
            FamilySpec::Grid(v[0], v[1])
        }
        "unit-interval" => {
            let pts: Result<Vec<Rational64>, Error> = params
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|s| parse_rational(s.trim()))
                .collect();
            FamilySpec::UnitInterval(pts?)
        }
        other => return Err(Error::BadParams(format!("unknown family {other}"))),
    })
}

fn parse_rational(s: &str) -> Result<Rational64, Error> {
    let bad = || Error::BadParams(format!("bad rational {s}"));
    match s.split_once('/') {
        Some((num, den)) => {
            let n: i64 = num.trim().parse().map_err(|_| bad())?;
            let d: i64 = den.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(n, d))
        }
        None => {
            let n: i64 = s.parse().map_err(|_| bad())?;
            Ok(Rational64::from_integer(n))
        }
    }
}
