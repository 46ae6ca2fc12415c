use std::fmt::Write as _;
use std::io::{Read, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use lyndon_order::alphabet::latin1;
use lyndon_order::io::{
    emit_report, parse_fasta, rank_histogram, run_rank_experiment, IngestPolicy, RankHistogram,
    ReportFormat, UnknownSymbols,
};
use lyndon_order::search::DEFAULT_SIGMA_LIMIT;
use lyndon_order::umff::standard_suites;
use lyndon_order::{
    co_lyndon_factorize, compute_ep, duval_factorize, exhaustive_search, greedy_order,
    lyndon_array, lyndon_factorization_array, Objective, OrderedAlphabet, RankingReport, Text,
};

/// Lyndon factorization under chosen alphabet orderings.
#[derive(Parser, Debug)]
#[command(name = "lyndon-order", version, about)]
struct Cli {
    /// Output format (each command has its own default).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// What to do with symbols other than A, C, G, T.
    #[arg(long, global = true, value_enum, default_value_t = Unknown::Keep)]
    unknown: Unknown,

    /// Do not fold sequence letters (and --order) to upper case.
    #[arg(long, global = true)]
    preserve_case: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Lyndon (or co-Lyndon) factorization.
    Factorize {
        #[command(flatten)]
        order: OrderArg,
        /// Use co-Lyndon factors instead.
        #[arg(long)]
        co: bool,
        input: Option<PathBuf>,
    },
    /// Print the exponent Parikh vector.
    Ep { input: Option<PathBuf> },
    /// Print the Lyndon array or the factorization array, 1-indexed.
    Array {
        #[arg(value_enum)]
        kind: ArrayKind,
        #[command(flatten)]
        order: OrderArg,
        input: Option<PathBuf>,
    },
    /// Search for an ordering with few (or many) factors.
    #[command(group(ArgGroup::new("mode").required(true).args(["exhaustive", "greedy"])))]
    Search {
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        greedy: bool,
        /// Keep the first candidate least letter even if it fails.
        #[arg(long, conflicts_with = "exhaustive")]
        no_backtrack: bool,
        #[arg(long, value_enum, default_value_t = Goal::Min)]
        objective: Goal,
        #[arg(long, default_value_t = DEFAULT_SIGMA_LIMIT)]
        sigma_limit: usize,
        input: Option<PathBuf>,
    },
    /// Rank every ordering of each input and summarize where greedy lands.
    Rank {
        #[arg(long, default_value_t = DEFAULT_SIGMA_LIMIT)]
        sigma_limit: usize,
        /// Also write the greedy-rank histogram as CSV to this path.
        #[arg(long)]
        histogram: Option<PathBuf>,
        inputs: Vec<PathBuf>,
    },
    /// Run the factorization law suites.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct OrderArg {
    /// Letters in ascending rank, e.g. `bcad` for b<c<a<d. Defaults to byte order.
    #[arg(long)]
    order: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
    Human,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Unknown {
    Keep,
    Strip,
    Error,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ArrayKind {
    Lyndon,
    Count,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Goal {
    Min,
    Max,
}

impl Format {
    fn report(self) -> ReportFormat {
        match self {
            Format::Csv => ReportFormat::Csv,
            Format::Json => ReportFormat::Json,
            Format::Human => ReportFormat::Human,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, ok)) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
            {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("lyndon-order: error: {e}");
                    return ExitCode::FAILURE;
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("lyndon-order: error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

struct Session {
    policy: IngestPolicy,
}

impl Session {
    fn read(&self, input: Option<&Path>) -> Result<Text> {
        let mut bytes = Vec::new();
        let source = match input {
            Some(p) if p != Path::new("-") => {
                bytes = std::fs::read(p).with_context(|| format!("reading {}", p.display()))?;
                p.display().to_string()
            }
            _ => {
                std::io::stdin()
                    .read_to_end(&mut bytes)
                    .context("reading standard input")?;
                "standard input".to_string()
            }
        };
        parse_fasta(&bytes, &self.policy).with_context(|| source)
    }

    fn order(&self, arg: &OrderArg, text: &[u8]) -> Result<OrderedAlphabet> {
        let order = match &arg.order {
            None => return Ok(OrderedAlphabet::natural(text)),
            Some(s) => s,
        };
        let mut letters = latin1::decode(order).context("--order must be Latin-1 text")?;
        if self.policy.uppercase {
            letters.make_ascii_uppercase();
        }
        let order = OrderedAlphabet::from_ascending(&letters).context("--order")?;
        if let Some(p) = text.iter().position(|&b| order.rank(b).is_none()) {
            bail!(
                "--order {order} does not rank {:?} at position {}",
                latin1::encode(&text[p..=p]),
                p + 1
            );
        }
        Ok(order)
    }
}

fn run(cli: &Cli) -> Result<(String, bool)> {
    let session = Session {
        policy: IngestPolicy {
            unknown: match cli.unknown {
                Unknown::Keep => UnknownSymbols::Keep,
                Unknown::Strip => UnknownSymbols::Strip,
                Unknown::Error => UnknownSymbols::Error,
            },
            uppercase: !cli.preserve_case,
            ..IngestPolicy::default()
        },
    };
    let format = |default| cli.format.unwrap_or(default);
    let out = match &cli.command {
        Command::Factorize { order, co, input } => {
            let text = session.read(input.as_deref())?;
            let order = session.order(order, &text)?;
            let f = if *co {
                co_lyndon_factorize(&text, &order)?
            } else {
                duval_factorize(&text, &order)?
            };
            let family = if *co { "co-lyndon" } else { "lyndon" };
            let factors: Vec<String> = f.factors(&text).into_iter().map(latin1::encode).collect();
            match format(Format::Human) {
                Format::Human => {
                    let mut s = format!("order {order}: {} {family} factors\n", f.count());
                    for w in &factors {
                        s.push_str(w);
                        s.push('\n');
                    }
                    s
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["index", "start", "length", "factor"])?;
                    for (i, (range, factor)) in f.ranges().zip(&factors).enumerate() {
                        w.write_record(&[
                            (i + 1).to_string(),
                            (range.start + 1).to_string(),
                            range.len().to_string(),
                            factor.clone(),
                        ])?;
                    }
                    String::from_utf8(w.into_inner()?)?
                }
                Format::Json => json_line(&json!({
                    "order": latin1::encode(order.ascending()),
                    "family": family,
                    "factor_count": f.count(),
                    "factors": factors,
                })),
            }
        }
        Command::Ep { input } => {
            let text = session.read(input.as_deref())?;
            let ep = compute_ep(&text);
            match format(Format::Json) {
                Format::Json => ep.to_json() + "\n",
                Format::Human | Format::Csv => {
                    let mut s = String::from("letter,exponents\n");
                    for (r, l) in ep.letters().iter().enumerate() {
                        let e: Vec<String> = ep.exponents(r).iter().map(u64::to_string).collect();
                        let _ = writeln!(s, "{},{}", latin1::encode(&[*l]), e.join(" "));
                    }
                    s
                }
            }
        }
        Command::Array { kind, order, input } => {
            let text = session.read(input.as_deref())?;
            let order = session.order(order, &text)?;
            let (name, values) = match kind {
                ArrayKind::Lyndon => ("lyndon", lyndon_array(&text, &order)?),
                ArrayKind::Count => ("count", lyndon_factorization_array(&text, &order)?),
            };
            match format(Format::Human) {
                Format::Json => json_line(&json!({
                    "order": latin1::encode(order.ascending()),
                    "array": name,
                    "values": values,
                })),
                Format::Human | Format::Csv => {
                    let mut s = format!("position,symbol,{name}\n");
                    for (i, v) in values.iter().enumerate() {
                        let _ = writeln!(s, "{},{},{v}", i + 1, latin1::encode(&text[i..=i]));
                    }
                    s
                }
            }
        }
        Command::Search {
            exhaustive,
            greedy: _,
            no_backtrack,
            objective,
            sigma_limit,
            input,
        } => {
            let text = session.read(input.as_deref())?;
            let objective = match objective {
                Goal::Min => Objective::Minimize,
                Goal::Max => Objective::Maximize,
            };
            if *exhaustive {
                let report = exhaustive_search(&text, objective, *sigma_limit)?;
                emit_report(&report, format(Format::Human).report())
            } else {
                greedy_output(&text, objective, !no_backtrack, format(Format::Human))?
            }
        }
        Command::Rank {
            sigma_limit,
            histogram,
            inputs,
        } => {
            let sources: Vec<Option<&Path>> = if inputs.is_empty() {
                vec![None]
            } else {
                inputs.iter().map(|p| Some(p.as_path())).collect()
            };
            let mut reports = Vec::new();
            for src in &sources {
                let text = session.read(*src)?;
                let name = src.map_or("-".to_string(), |p| p.display().to_string());
                let report =
                    run_rank_experiment(&text, *sigma_limit).with_context(|| name.clone())?;
                reports.push((name, report));
            }
            let h = rank_histogram(reports.iter().map(|(_, r)| r));
            if let Some(path) = histogram {
                std::fs::write(path, h.to_csv())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            rank_output(&reports, &h, format(Format::Human))?
        }
        Command::Verify { seed } => {
            let outcomes = standard_suites(*seed);
            let ok = outcomes.iter().all(|o| o.passed());
            let out = match format(Format::Human) {
                Format::Json => json_line(&json!(outcomes
                    .iter()
                    .map(|o| json!({
                        "law": o.law,
                        "cases": o.cases,
                        "passed": o.passed(),
                        "violations": o.violations,
                    }))
                    .collect::<Vec<_>>())),
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["law", "cases", "violations", "result"])?;
                    for o in &outcomes {
                        w.write_record(&[
                            o.law.to_string(),
                            o.cases.to_string(),
                            o.violations.len().to_string(),
                            if o.passed() { "pass" } else { "fail" }.to_string(),
                        ])?;
                    }
                    String::from_utf8(w.into_inner()?)?
                }
                Format::Human => {
                    let mut s = String::new();
                    for o in &outcomes {
                        let status = if o.passed() { "PASS" } else { "FAIL" };
                        let _ = writeln!(s, "{status}  {} ({} cases)", o.law, o.cases);
                        for v in o.violations.iter().take(3) {
                            let _ = writeln!(s, "      {v}");
                        }
                    }
                    s
                }
            };
            return Ok((out, ok));
        }
    };
    Ok((out, true))
}

fn json_line(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn greedy_output(
    text: &[u8],
    objective: Objective,
    backtrack: bool,
    format: Format,
) -> Result<String> {
    let out = greedy_order(text, objective, backtrack)?;
    let d = &out.diagnostics;
    let perm = latin1::encode(out.order.ascending());
    let count = out.factorization.count();
    Ok(match format {
        Format::Csv => format!("permutation,factor_count\n{perm},{count}\n"),
        Format::Json => json_line(&json!({
            "permutation": perm,
            "factor_count": count,
            "chosen": d.chosen.map(|c| latin1::encode(&[c])),
            "fallback": d.fallback,
            "attempts": d.attempts.iter().map(|a| json!({
                "letter": latin1::encode(&[a.letter]),
                "exponent_factors": a.exponent_factors,
                "failure": a.failure.map(|f| f.to_string()),
            })).collect::<Vec<_>>(),
            "constraints": d.constraints.iter()
                .map(|&(u, v)| latin1::encode(&[u, v]))
                .collect::<Vec<_>>(),
        })),
        Format::Human => {
            let mut s = format!("ordering: {}\nfactors: {count}\n", out.order);
            for a in &d.attempts {
                let result = match a.failure {
                    None => "ok".to_string(),
                    Some(f) => format!("failed, {f}"),
                };
                let _ = writeln!(
                    s,
                    "candidate {} ({} exponent factors): {result}",
                    latin1::encode(&[a.letter]),
                    a.exponent_factors
                );
            }
            if d.fallback {
                s.push_str("every candidate failed; ranked letters by exponent factor count\n");
            }
            s
        }
    })
}

fn rank_output(
    reports: &[(String, RankingReport)],
    h: &RankHistogram,
    format: Format,
) -> Result<String> {
    let placement = |g: &Option<lyndon_order::search::GreedyRank>| {
        g.as_ref()
            .map(|g| (latin1::encode(&g.permutation), g.factor_count, g.rank))
    };
    Ok(match format {
        Format::Json => {
            let inputs: Vec<_> = reports
                .iter()
                .map(|(name, r)| Ok(json!({ "source": name, "report": serde_json::to_value(r)? })))
                .collect::<Result<_, serde_json::Error>>()?;
            json_line(&json!({
                "inputs": inputs,
                "histogram": {
                    "with_backtracking": h.with_backtracking,
                    "without_backtracking": h.without_backtracking,
                },
            }))
        }
        Format::Csv => {
            if let [(_, r)] = reports {
                return Ok(emit_report(r, ReportFormat::Csv));
            }
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "source",
                "best_permutation",
                "best_count",
                "greedy_permutation",
                "greedy_count",
                "greedy_rank",
                "no_backtrack_permutation",
                "no_backtrack_count",
                "no_backtrack_rank",
            ])?;
            for (name, r) in reports {
                let best = r
                    .best()
                    .map(|b| (latin1::encode(&b.permutation), b.factor_count));
                let mut row = vec![name.clone()];
                row.extend(
                    best.map_or([String::new(), String::new()], |(p, c)| [p, c.to_string()]),
                );
                for g in [placement(&r.greedy), placement(&r.greedy_no_backtrack)] {
                    row.extend(g.map_or(
                        [String::new(), String::new(), String::new()],
                        |(p, c, k)| [p, c.to_string(), k.to_string()],
                    ));
                }
                w.write_record(&row)?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        Format::Human => {
            let mut s = String::new();
            for (name, r) in reports {
                let _ = writeln!(s, "== {name}");
                s.push_str(&r.to_human());
            }
            let _ = writeln!(s, "== greedy rank histogram ({} inputs)", reports.len());
            s.push_str(&h.to_csv());
            s
        }
    })
}
