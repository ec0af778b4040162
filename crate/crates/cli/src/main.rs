use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hkl_core::borcherds::{gritsenko_from, Group, HeegnerData, Provenance, Relation, Variant};
use hkl_core::divisor::{pullback, MapLabel};
use hkl_core::dtower::Decoration;
use hkl_core::expr::parse_class;
use hkl_core::predictions::{positivity_audit, walls};
use hkl_core::rational::{fmt_q, parse_q};
use hkl_core::{borcherds, checks, picard, Error};

const EXIT_SELF_CHECK: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Which {
    First,
    Second,
    Gritsenko,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GroupArg {
    Decorated,
    Stable,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DecorationArg {
    Xi,
    Zeta,
    ZetaPrime,
}

/// Lattice and divisor computations for the D-tower of hyperkähler moduli.
#[derive(Debug, Parser)]
#[command(name = "hkl", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, env = "HKL_FORMAT", default_value = "table")]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Picard ranks of the stable-group quotients.
    Rank {
        #[arg(long)]
        min: u32,
        #[arg(long)]
        max: u32,
    },
    /// Relations in the Picard group obtained from quasi-pullbacks.
    Relation {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "first")]
        which: Which,
        #[arg(long, value_enum, default_value = "decorated")]
        group: GroupArg,
        #[arg(long, value_enum, default_value = "xi")]
        decoration: DecorationArg,
    },
    /// Predicted walls of the Mori chamber decomposition.
    Walls {
        #[arg(long)]
        n: u32,
    },
    /// Unigonal Heegner coefficients mu(N).
    Mu {
        #[arg(long, default_value_t = 3)]
        min: u32,
        #[arg(long, default_value_t = 25)]
        max: u32,
    },
    /// Pullback of a class along a map.
    Pullback {
        /// Map name: f, l, m, p, q, r, rho.
        #[arg(long)]
        map: String,
        /// Index of the map.
        #[arg(long)]
        n: u32,
        /// Class expression on the codomain, e.g. "2*lambda - 1/2 Hn".
        #[arg(long = "class")]
        class: String,
    },
    /// Restrictions of lambda + beta*Delta to every tower stratum.
    Audit {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        beta: String,
    },
    /// Run the self-check suites.
    Check {
        #[arg(long)]
        all: bool,
    },
}

enum Failure {
    Usage(String),
    SelfCheck(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SelfCheck(_) | Error::Inconsistent(_) | Error::Bruinier(_) => Failure::SelfCheck(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Out = Result<(String, bool), Failure>;

fn json_lines(rows: impl IntoIterator<Item = serde_json::Value>) -> String {
    rows.into_iter().map(|r| r.to_string() + "\n").collect()
}

fn cmd_rank(min: u32, max: u32, fmt: Format) -> Out {
    if min < 3 || min > max {
        return Err(Failure::Usage(format!("invalid range {min}..{max}: need 3 <= min <= max")));
    }
    let mut reports = vec![];
    for n in min..=max {
        reports.push(picard::report(n)?);
    }
    let ok = reports.iter().all(|r| r.rank == r.closed_form_rank);
    let out = match fmt {
        Format::Json => json_lines(reports.iter().map(|r| serde_json::to_value(r).expect("serializable"))),
        Format::Table | Format::Tsv => {
            let sep = if fmt == Format::Tsv { "\t" } else { "  " };
            let mut s = ["N", "d", "alpha1", "alpha2", "alpha3", "alpha4", "dimS", "rank"].join(sep) + "\n";
            for r in &reports {
                let cols = [
                    r.n.to_string(),
                    r.d.to_string(),
                    fmt_q(&r.alpha1),
                    fmt_q(&r.alpha2),
                    fmt_q(&r.alpha3),
                    fmt_q(&r.alpha4),
                    r.dim_cusp.to_string(),
                    r.rank.to_string(),
                ];
                s += &(cols.join(sep) + "\n");
            }
            s
        }
    };
    Ok((out, ok))
}

fn relation(n: u32, which: Which, group: GroupArg, decoration: Decoration) -> Result<Relation, Error> {
    let data = |variant| HeegnerData::compute(n, variant);
    let build = |d: &HeegnerData, p: Provenance| match group {
        GroupArg::Decorated => d.decorated_relation(p, decoration),
        GroupArg::Stable => d.stable_relation(p),
    };
    match which {
        Which::First => build(&data(Variant::D)?, Provenance::First),
        Which::Second => build(&data(Variant::E8D)?, Provenance::Second),
        Which::Gritsenko => {
            let (a, b) = (data(Variant::D)?, data(Variant::E8D)?);
            gritsenko_from(&build(&a, Provenance::First)?, &build(&b, Provenance::Second)?)
        }
    }
}

fn cmd_relation(n: u32, which: Which, group: GroupArg, dec: DecorationArg, fmt: Format) -> Out {
    let decoration = match dec {
        DecorationArg::Xi => Decoration::Standard,
        DecorationArg::Zeta => Decoration::Zeta,
        DecorationArg::ZetaPrime => Decoration::ZetaPrime,
    };
    let r = relation(n, which, group, decoration)?;
    let out = match fmt {
        Format::Table => format!("{r}\n"),
        Format::Json => json_lines([r.to_json()]),
        Format::Tsv => {
            let g = if r.group == Group::Stable { "stable" } else { "decorated" };
            let p = r.to_json()["provenance"].as_str().unwrap_or_default().to_string();
            format!("{}\t{g}\t{p}\t{}\t{}\t{}\t{}\n", r.n, fmt_q(&r.lambda), fmt_q(&r.hn), fmt_q(&r.hh), fmt_q(&r.hu))
        }
    };
    Ok((out, true))
}

fn cmd_walls(n: u32, fmt: Format) -> Out {
    let r = walls(n)?;
    let out = match fmt {
        Format::Json => json_lines([r.to_json()]),
        Format::Table | Format::Tsv => {
            let mut s = String::new();
            if let Some(note) = &r.note {
                writeln!(s, "note: {note}").expect("write");
            }
            if fmt == Format::Table {
                for w in &r.walls {
                    writeln!(s, "{:>5}  k={:<2}  case {}  {}", fmt_q(&w.beta), w.k, w.case, w.description()).expect("write");
                }
            } else {
                for w in &r.walls {
                    let names: Vec<String> = w.centers.iter().map(|c| c.to_string()).collect();
                    writeln!(s, "{}\t{}\t{}\t{}", fmt_q(&w.beta), w.k, w.case, names.join(";")).expect("write");
                }
            }
            s
        }
    };
    Ok((out, true))
}

fn cmd_mu(min: u32, max: u32, fmt: Format) -> Out {
    if min < 3 || max > 25 || min > max {
        return Err(Failure::Usage(format!("invalid range {min}..{max}: need 3 <= min <= max <= 25")));
    }
    let t = borcherds::mu_table(min..=max)?;
    let out = match fmt {
        Format::Json => json_lines(t.iter().map(|(n, m)| serde_json::json!({ "N": n, "mu": m }))),
        Format::Table => t.iter().map(|(n, m)| format!("{n:>2}  {m}\n")).collect(),
        Format::Tsv => t.iter().map(|(n, m)| format!("{n}\t{m}\n")).collect(),
    };
    Ok((out, true))
}

fn cmd_pullback(map: &str, n: u32, class: &str, fmt: Format) -> Out {
    let map = MapLabel::from_parts(map, n)?;
    let c = parse_class(class, map.codomain()?)?;
    let p = pullback(map, &c)?;
    let out = match fmt {
        Format::Table => format!("{p} on {}\n", p.space),
        Format::Json => json_lines([p.to_json()]),
        Format::Tsv => {
            let cols: Vec<String> = p.coeffs().iter().map(fmt_q).collect();
            format!("{}\t{}\n", p.space, cols.join("\t"))
        }
    };
    Ok((out, true))
}

fn cmd_audit(n: u32, beta: &str, fmt: Format) -> Out {
    let beta = parse_q(beta)?;
    let r = positivity_audit(n, &beta)?;
    let out = match fmt {
        Format::Json => json_lines(r.entries.iter().map(|e| {
            serde_json::json!({
                "stratum": e.stratum.to_json(),
                "class": e.class.to_json(),
                "lambda_coeff": fmt_q(&e.lambda_coeff),
                "gritsenko": e.gritsenko,
                "positive": e.positive,
                "effective": e.effective,
            })
        })),
        Format::Table | Format::Tsv => {
            let sep = if fmt == Format::Tsv { "\t" } else { "  " };
            r.entries
                .iter()
                .map(|e| {
                    let t = e.stratum.t_value.map_or("-".to_string(), |t| t.to_string());
                    let verdict = if e.positive && e.effective { "ok" } else { "no" };
                    [e.stratum.to_string(), t, e.class.to_string(), verdict.to_string()].join(sep) + "\n"
                })
                .collect()
        }
    };
    Ok((out, true))
}

fn cmd_check(all: bool, fmt: Format) -> Out {
    if !all {
        return Err(Failure::Usage("check requires --all".into()));
    }
    let results = checks::run_all();
    let ok = results.iter().all(|r| r.passed);
    let out = match fmt {
        Format::Json => json_lines(
            results.iter().map(|r| serde_json::json!({ "suite": r.name, "passed": r.passed, "detail": r.detail })),
        ),
        Format::Table | Format::Tsv => {
            let sep = if fmt == Format::Tsv { "\t" } else { "  " };
            let mut s: String = results
                .iter()
                .map(|r| [if r.passed { "PASS" } else { "FAIL" }, r.name, &r.detail].join(sep) + "\n")
                .collect();
            let passed = results.iter().filter(|r| r.passed).count();
            writeln!(s, "{passed}/{} suites passed", results.len()).expect("write");
            s
        }
    };
    Ok((out, ok))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let fmt = cli.format;
    let res = match &cli.cmd {
        Cmd::Rank { min, max } => cmd_rank(*min, *max, fmt),
        Cmd::Relation { n, which, group, decoration } => cmd_relation(*n, *which, *group, *decoration, fmt),
        Cmd::Walls { n } => cmd_walls(*n, fmt),
        Cmd::Mu { min, max } => cmd_mu(*min, *max, fmt),
        Cmd::Pullback { map, n, class } => cmd_pullback(map, *n, class, fmt),
        Cmd::Audit { n, beta } => cmd_audit(*n, beta, fmt),
        Cmd::Check { all } => cmd_check(*all, fmt),
    };
    match res {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_SELF_CHECK)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::SelfCheck(msg)) => {
            eprintln!("self-check failed: {msg}");
            ExitCode::from(EXIT_SELF_CHECK)
        }
    }
}
