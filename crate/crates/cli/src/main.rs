use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use pathgame::game::Coalition;
use pathgame::io::{self, ParseError};
use pathgame::nucleolus::{nucleolus_sp, Composition};
use pathgame::oracle::{self, DEFAULT_PLAYER_CAP};
use pathgame::scalar::{format_exact, parse_exact};
use pathgame::solve::{self, InterceptMode, Separation};
use pathgame::{Family, GameSpec, LeastCoreResult, Rational};

#[derive(Parser)]
#[command(name = "pathgame", version, about = "Solution concepts for s-t path games")]
struct Cli {
    /// Report wall-clock timings (makes output non-deterministic).
    #[arg(long, global = true)]
    timings: bool,
    /// Player cap for brute-force methods.
    #[arg(long, global = true, default_value_t = DEFAULT_PLAYER_CAP)]
    max_players: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide core non-emptiness and name a veto player.
    Core { file: PathBuf },
    /// Compute the least core.
    Leastcore {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = LeastCoreMethod::Cg)]
        method: LeastCoreMethod,
    },
    /// Check membership of a payoff in the ε-core.
    Verify {
        file: PathBuf,
        #[arg(long)]
        payoff: PathBuf,
        #[arg(long)]
        epsilon: String,
    },
    /// Compute the nucleolus.
    Nucleolus {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = NucleolusMethod::Sp)]
        method: NucleolusMethod,
    },
    /// Maxmin inspection strategy for the path intercept game.
    Maxmin {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        probs: Option<PathBuf>,
    },
    /// Value of a coalition given as comma-separated player ids.
    Value {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        coalition: String,
    },
    /// Cross-check the fast solvers against the brute-force oracles.
    Selftest { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum LeastCoreMethod {
    Cg,
    Combinatorial,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum NucleolusMethod {
    Sp,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Edge,
    Vertex,
}

enum Failure {
    /// Bad input or a solver precondition; exit 1.
    Input { kind: &'static str, message: String },
    /// Self-test disagreement; exit 2 with the full report.
    Disagreement(Map<String, Value>),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Input { kind: e.kind(), message: e.to_string() }
    }
}

impl From<pathgame::Error> for Failure {
    fn from(e: pathgame::Error) -> Self {
        Failure::Input { kind: io::error_kind(&e), message: e.to_string() }
    }
}

fn sp_failure(g: &pathgame::Graph, e: pathgame::Error) -> Failure {
    match &e {
        pathgame::Error::NotSeriesParallel(r) => {
            let pairs: Vec<String> =
                r.edges.iter().map(|&(u, v)| format!("{}-{}", g.vertex_name(u), g.vertex_name(v))).collect();
            Failure::Input {
                kind: io::error_kind(&e),
                message: format!("{e}; irreducible remainder: {}", pairs.join(", ")),
            }
        }
        _ => e.into(),
    }
}

type Outcome = Result<Map<String, Value>, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, file) = match &cli.command {
        Command::Core { file } => ("core", file),
        Command::Leastcore { file, .. } => ("leastcore", file),
        Command::Verify { file, .. } => ("verify", file),
        Command::Nucleolus { file, .. } => ("nucleolus", file),
        Command::Maxmin { file, .. } => ("maxmin", file),
        Command::Value { file, .. } => ("value", file),
        Command::Selftest { file } => ("selftest", file),
    };
    let mut out = Map::new();
    out.insert("command".into(), json!(name));

    let started = Instant::now();
    let result = read(file).and_then(|text| {
        out.insert("input_digest".into(), json!(format!("sha256:{}", hex::encode(Sha256::digest(&text)))));
        let spec: GameSpec = io::parse_game_file(&text)?;
        out.insert("family".into(), json!(spec.family().name()));
        run(&cli, &spec)
    });
    let code = match result {
        Ok(body) => {
            out.extend(body);
            0
        }
        Err(Failure::Input { kind, message }) => {
            out.insert("error".into(), json!({ "kind": kind, "message": message }));
            1
        }
        Err(Failure::Disagreement(body)) => {
            out.extend(body);
            2
        }
    };
    if cli.timings {
        out.insert("timings".into(), json!({ "total_ms": started.elapsed().as_secs_f64() * 1e3 }));
    }
    println!("{}", serde_json::to_string_pretty(&Value::Object(out)).expect("serializable"));
    ExitCode::from(code)
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Input { kind: "io", message: format!("{}: {e}", path.display()) })
}

fn run(cli: &Cli, spec: &GameSpec) -> Outcome {
    match &cli.command {
        Command::Core { .. } => {
            let test = solve::core_nonempty(spec);
            Ok(object([
                ("nonempty", json!(test.nonempty)),
                ("witness", test.witness.map_or(Value::Null, |i| json!(spec.player_name(i)))),
            ]))
        }
        Command::Leastcore { method, .. } => {
            let (label, lc) = match method {
                LeastCoreMethod::Cg => ("cg", solve::least_core(spec)),
                LeastCoreMethod::Combinatorial => ("combinatorial", solve::combinatorial_least_core(spec)?),
                LeastCoreMethod::Brute => {
                    ("brute", oracle::brute_force_least_core(&oracle::enumerate_values(spec, cli.max_players)?))
                }
            };
            Ok(least_core_json(spec, label, &lc))
        }
        Command::Verify { payoff, epsilon, .. } => {
            let x = io::parse_payoff_file(&read(payoff)?, spec)?;
            let eps: Rational = parse_exact(epsilon)
                .map_err(|e| Failure::Input { kind: "rational", message: format!("--epsilon: {e}") })?;
            let member = solve::in_epsilon_core(spec, &x, &eps)?;
            let sep = solve::separation_oracle(spec, &x, &eps);
            let (coalition, excess) = match &sep {
                Separation::Feasible { coalition, excess } | Separation::Violated { coalition, excess } => {
                    (coalition, excess)
                }
            };
            Ok(object([
                ("epsilon", rat(&eps)),
                ("member", json!(member)),
                ("min_winning_excess", rat(excess)),
                ("min_excess_coalition", names(spec, coalition)),
            ]))
        }
        Command::Nucleolus { method, .. } => match method {
            NucleolusMethod::Sp => {
                if spec.family() != Family::Epcg || !spec.is_costless() {
                    return Err(Failure::Input {
                        kind: "unsupported_family",
                        message: "the series-parallel method needs a costless epcg game; use --method brute".into(),
                    });
                }
                let r = nucleolus_sp(spec.graph()).map_err(|e| sp_failure(spec.graph(), e))?;
                let g = spec.graph();
                let trace: Vec<Value> = r
                    .trace
                    .iter()
                    .map(|s| {
                        json!({
                            "composition": match s.composition {
                                Composition::Leaf => "leaf",
                                Composition::SeriesUnequal => "series-unequal",
                                Composition::SeriesEqual => "series-equal",
                                Composition::Parallel => "parallel",
                            },
                            "source": g.vertex_name(s.source),
                            "sink": g.vertex_name(s.sink),
                            "cut": s.cut,
                            "alpha": s.alpha.as_ref().map_or(Value::Null, rat),
                        })
                    })
                    .collect();
                Ok(object([
                    ("method", json!("sp")),
                    ("payoff", payoff_json(spec, r.payoff.values())),
                    ("trace", json!(trace)),
                ]))
            }
            NucleolusMethod::Brute => {
                let table = oracle::enumerate_values(spec, cli.max_players)?;
                let x = oracle::brute_force_nucleolus(&table);
                Ok(object([("method", json!("brute")), ("payoff", payoff_json(spec, x.values()))]))
            }
        },
        Command::Maxmin { mode, probs, .. } => {
            let g = spec.graph();
            let (mode, label, items): (InterceptMode, &str, Vec<&str>) = match mode {
                Mode::Edge => (InterceptMode::Edge, "edge", g.edge_names().iter().map(String::as_str).collect()),
                Mode::Vertex => {
                    (InterceptMode::Vertex, "vertex", g.internal_vertices().map(|v| g.vertex_name(v)).collect())
                }
            };
            let p: Vec<Rational> = match probs {
                Some(path) => io::parse_probs_file(&read(path)?, &items)?,
                None => vec![Rational::from_integer(1.into()); items.len()],
            };
            let r = solve::maxmin_intercept(g, mode, &p)?;
            let strategy: Map<String, Value> =
                items.iter().zip(&r.strategy).map(|(n, v)| (n.to_string(), rat(v))).collect();
            Ok(object([
                ("mode", json!(label)),
                ("value", rat(&r.value)),
                ("strategy", Value::Object(strategy)),
                ("support", json!(r.support.iter().map(|&i| items[i]).collect::<Vec<_>>())),
                ("lp_paths", json!(r.lp_paths)),
            ]))
        }
        Command::Value { coalition, .. } => {
            let mut s = Coalition::empty(spec.player_count());
            for id in coalition.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                let i =
                    spec.player_by_name(id).ok_or_else(|| Failure::from(ParseError::UnknownPlayer(id.to_string())))?;
                s.insert(i);
            }
            Ok(object([
                ("coalition", names(spec, &s)),
                ("winning", json!(spec.simple_value(&s))),
                ("value", rat(&spec.cost_value(&s))),
            ]))
        }
        Command::Selftest { .. } => selftest(cli, spec),
    }
}

fn selftest(cli: &Cli, spec: &GameSpec) -> Outcome {
    let n = spec.player_count();
    let brute_ok = n <= cli.max_players;
    let mut checks = Map::new();
    let mut failed = false;
    let mut record = |name: &str, verdict: Result<bool, String>| {
        let v = match verdict {
            Ok(true) => json!("agree"),
            Ok(false) => {
                failed = true;
                json!("disagree")
            }
            Err(reason) => json!(format!("skipped: {reason}")),
        };
        checks.insert(name.to_string(), v);
    };
    let too_many = || format!("{n} players exceeds the cap of {}", cli.max_players);

    let cg = solve::least_core(spec);
    let brute_table = if brute_ok { Some(oracle::enumerate_values(spec, cli.max_players)?) } else { None };

    record(
        "core_vs_brute",
        if brute_ok {
            let simple = oracle::enumerate_simple_values(spec, cli.max_players)?;
            Ok(solve::core_nonempty(spec).nonempty != oracle::brute_force_core_empty(&simple))
        } else {
            Err(too_many())
        },
    );
    record(
        "leastcore_cg_vs_brute",
        match &brute_table {
            Some(t) => {
                let b = oracle::brute_force_least_core(t);
                Ok(b.epsilon1 == cg.epsilon1 && t.in_epsilon_core(cg.payoff.values(), &b.epsilon1))
            }
            None => Err(too_many()),
        },
    );
    record(
        "closed_form_vs_cg",
        match solve::combinatorial_least_core(spec) {
            Ok(cf) => Ok(cf.epsilon1 == cg.epsilon1 && solve::in_epsilon_core(spec, cf.payoff.values(), &cg.epsilon1)?),
            Err(e) => Err(e.to_string()),
        },
    );
    record(
        "nucleolus_sp_vs_brute",
        if spec.family() != Family::Epcg || !spec.is_costless() {
            Err("needs a costless epcg game".into())
        } else {
            match (nucleolus_sp::<Rational>(spec.graph()), &brute_table) {
                (Ok(sp), Some(t)) => Ok(sp.payoff == oracle::brute_force_nucleolus(t)),
                (Err(e), _) => Err(e.to_string()),
                (_, None) => Err(too_many()),
            }
        },
    );
    let ones = |k: usize| vec![Rational::from_integer(1.into()); k];
    let g = spec.graph();
    record(
        "maxmin_edge_cut_vs_lp",
        match solve::maxmin_intercept(g, InterceptMode::Edge, &ones(g.edge_count())) {
            Ok(_) => Ok(true),
            Err(pathgame::Error::MaxminMismatch { .. }) => Ok(false),
            Err(e) => Err(e.to_string()),
        },
    );
    record(
        "maxmin_vertex_cut_vs_lp",
        match solve::maxmin_intercept(g, InterceptMode::Vertex, &ones(g.internal_vertices().count())) {
            Ok(_) => Ok(true),
            Err(pathgame::Error::MaxminMismatch { .. }) => Ok(false),
            Err(e) => Err(e.to_string()),
        },
    );

    let body = object([("agree", json!(!failed)), ("checks", Value::Object(checks))]);
    if failed {
        Err(Failure::Disagreement(body))
    } else {
        Ok(body)
    }
}

fn object<const N: usize>(fields: [(&str, Value); N]) -> Map<String, Value> {
    fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn rat(v: &Rational) -> Value {
    json!(format_exact(v))
}

fn payoff_json(spec: &GameSpec, x: &[Rational]) -> Value {
    Value::Object((0..spec.player_count()).map(|i| (spec.player_name(i).to_string(), rat(&x[i]))).collect())
}

fn names(spec: &GameSpec, s: &Coalition) -> Value {
    json!(s.members().map(|i| spec.player_name(i)).collect::<Vec<_>>())
}

fn least_core_json(spec: &GameSpec, method: &str, lc: &LeastCoreResult) -> Map<String, Value> {
    object([
        ("method", json!(method)),
        ("epsilon1", rat(&lc.epsilon1)),
        ("payoff", payoff_json(spec, lc.payoff.values())),
        ("tight_coalitions", json!(lc.tight_coalitions.iter().map(|s| names(spec, s)).collect::<Vec<_>>())),
        ("iterations", json!(lc.iterations)),
    ])
}
