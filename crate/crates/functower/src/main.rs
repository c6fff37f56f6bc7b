//! Batch command-line front end.
//!
//! Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or
//! configuration error. Output is deterministic: identical invocations
//! produce byte-identical payloads (reports carry an elapsed-time field,
//! which is the one exception).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use functower::conf::{conf_poincare, e_infinity_check, e_one_check, verify_difhom};
use functower::config::{OutputFormat, RunConfig};
use functower::cross::{cr2_structural_check, oracle_equivalence_check};
use functower::functor::{
    closed_form, functional_equation_check, solver_uniqueness_check, type_f_limit_check,
    ClosedFormParams, FunctorKind,
};
use functower::layers::{
    a_k_recurrence, layer_formulas_check, layers_exponential, layers_geometric, layers_logarithmic,
    LayerInput, LayerTable,
};
use functower::lie::{
    fn_composition_check, log_hilbert_equation_check, pbw_dimension_check,
    pbw_functional_identity_with_exponent, witt_lyndon_check, witt_table,
};
use functower::rational::Rational;
use functower::report::ReportDocument;
use functower::series::Series;
use functower::suite::{negative_controls_check, run_suite, suite_checks};

#[derive(Parser)]
#[command(
    name = "functower",
    version,
    about = "Exact power-series workbench for functional-equation functor models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindName {
    Exponential,
    Geometric,
    Logarithmic,
    #[value(name = "type_f")]
    TypeF,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Tsv,
    Pretty,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> OutputFormat {
        match f {
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Tsv => OutputFormat::Tsv,
            FormatArg::Pretty => OutputFormat::Pretty,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the closed-form series of a functor kind.
    Expand(ExpandArgs),
    /// Check one named identity; exits 0 on pass, 1 on fail.
    ///
    /// Identities: functional-eq, solver, difhom, e-one, e-infinity, pbw,
    /// pbw-dim, fn-comp, witt-lyndon, cross-effects, cr2, layer-formulas,
    /// type-f-limit, log-hilbert-eq, negative-controls, all.
    Verify(VerifyArgs),
    /// Print a table: conf | witt | layers.
    Table(TableArgs),
    /// Run the full verification suite and emit the aggregated reports.
    Report(ReportArgs),
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(long)]
    kind: KindName,
    /// Scale parameter, as an integer or exact fraction p/q.
    #[arg(long, default_value = "1", value_parser = parse_rational)]
    a: Rational,
    /// Family index for --kind type_f.
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    order: Option<u32>,
    #[arg(long)]
    format: Option<FormatArg>,
}

#[derive(Args)]
struct VerifyArgs {
    identity: String,
    #[arg(long)]
    kind: Option<KindName>,
    #[arg(long, value_parser = parse_rational)]
    a: Option<Rational>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k_max: Option<u32>,
    #[arg(long)]
    order: Option<u32>,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    d_x: Option<u32>,
    #[arg(long)]
    d_y: Option<u32>,
    /// Seed for randomized oracle-equivalence sampling.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    count: Option<u32>,
    #[arg(long)]
    max_arity: Option<usize>,
    /// Exponent perturbation for the pbw identity (negative control).
    #[arg(long, value_parser = parse_rational)]
    perturb: Option<Rational>,
    #[arg(long)]
    format: Option<FormatArg>,
    #[arg(long)]
    parallelism: Option<usize>,
}

#[derive(Args)]
struct TableArgs {
    which: String,
    #[arg(long)]
    kind: Option<KindName>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k_max: Option<u32>,
    #[arg(long)]
    d: Option<u32>,
    /// Evaluate the degree marker at an exact rational point.
    #[arg(long, value_parser = parse_rational)]
    at_q: Option<Rational>,
    #[arg(long)]
    format: Option<FormatArg>,
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long)]
    order: Option<u32>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    format: Option<FormatArg>,
    #[arg(long)]
    parallelism: Option<usize>,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse()
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn resolve_kind(kind: KindName, n: Option<u32>) -> Result<FunctorKind, String> {
    match kind {
        KindName::Exponential => Ok(FunctorKind::Exponential),
        KindName::Geometric => Ok(FunctorKind::Geometric),
        KindName::Logarithmic => Ok(FunctorKind::Logarithmic),
        KindName::TypeF => match n {
            Some(n) if n >= 1 => Ok(FunctorKind::TypeF { n }),
            Some(_) => Err("--n must be at least 1".into()),
            None => Err("--kind type_f requires --n".into()),
        },
    }
}

fn print_series(series: &Series, format: OutputFormat) {
    match format {
        OutputFormat::Pretty => println!("{series}"),
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(series).expect("series serializes")
            )
        }
        OutputFormat::Tsv => {
            let mut terms: Vec<_> = series.terms().collect();
            terms.sort_by_key(|(m, _)| (m.arity_degree(), (*m).clone()));
            println!("x\tq\tc");
            for (m, c) in terms {
                let exps = m
                    .arity_exponents
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(",");
                println!("{exps}\t{}\t{}", m.q_exponent, c.fraction_string());
            }
        }
    }
}

fn emit_reports(reports: &[ReportDocument], format: OutputFormat) -> ExitCode {
    match format {
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(reports).expect("reports serialize")
            );
        }
        _ => {
            for r in reports {
                println!("{}", r.summary_line());
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            println!("{} checks, {} failed", reports.len(), failed);
        }
    }
    if reports.iter().all(ReportDocument::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_verify(
    config: &RunConfig,
    args: &VerifyArgs,
    format: OutputFormat,
) -> Result<ExitCode, String> {
    let order = args.order.unwrap_or(config.default_order);
    let k_max = args.k_max.unwrap_or(config.k_range.1);
    let scale = args.a.clone().unwrap_or_else(Rational::one);
    let need_kind = || -> Result<FunctorKind, String> {
        resolve_kind(args.kind.ok_or("this identity requires --kind")?, args.n)
    };
    let report = match args.identity.as_str() {
        "functional-eq" => functional_equation_check(need_kind()?, &scale, order),
        "solver" => solver_uniqueness_check(need_kind()?, &scale, order),
        "difhom" => {
            let n = args.n.ok_or("verify difhom requires --n")?;
            if n < 1 || k_max < 2 {
                return Err("difhom needs --n >= 1 and --k-max >= 2".into());
            }
            verify_difhom(n, k_max)
        }
        "e-one" => e_one_check(k_max),
        "e-infinity" => e_infinity_check(k_max),
        "pbw" => {
            let exponent = args.perturb.clone().unwrap_or_else(Rational::one);
            pbw_functional_identity_with_exponent(&exponent, order)
        }
        "pbw-dim" => pbw_dimension_check(args.d.unwrap_or(2), order),
        "fn-comp" => fn_composition_check(args.n.ok_or("verify fn-comp requires --n")?, order),
        "witt-lyndon" => witt_lyndon_check(args.d.unwrap_or(3), k_max),
        "cross-effects" => oracle_equivalence_check(
            args.seed.unwrap_or(0),
            args.count.unwrap_or(100),
            args.max_arity.unwrap_or(5),
            order.min(8),
        ),
        "cr2" => {
            let kind = need_kind()?;
            cr2_structural_check(kind, args.d_x.unwrap_or(1), args.d_y.unwrap_or(1), order)
                .map_err(|e| e.to_string())?
        }
        "layer-formulas" => layer_formulas_check(k_max),
        "type-f-limit" => type_f_limit_check(8, 10),
        "log-hilbert-eq" => log_hilbert_equation_check(args.d.unwrap_or(2), order.min(8)),
        "negative-controls" => negative_controls_check(),
        "all" => {
            let checks = suite_checks(order, config.n_range, k_max, args.seed.unwrap_or(0));
            let reports = run_suite(checks, args.parallelism.unwrap_or(config.parallelism));
            return Ok(emit_reports(&reports, format));
        }
        other => {
            return Err(format!(
                "unknown identity {other:?}; see --help for the list"
            ))
        }
    };
    Ok(emit_reports(std::slice::from_ref(&report), format))
}

fn layer_table_for(kind: FunctorKind, d: u32, n: u32, k_max: u32) -> Result<LayerTable, String> {
    let d1 = Series::constant(1, 1, Rational::from_int(i64::from(d)));
    let input = LayerInput::new(d1, Series::one(1, 1), n);
    match kind {
        FunctorKind::Geometric => Ok(layers_geometric(&input, k_max)),
        FunctorKind::Exponential => layers_exponential(&input, k_max).map_err(|e| e.to_string()),
        FunctorKind::Logarithmic => layers_logarithmic(&input, k_max).map_err(|e| e.to_string()),
        FunctorKind::TypeF { .. } => Ok(a_k_recurrence(&input, k_max)),
    }
}

fn run_table(
    config: &RunConfig,
    args: &TableArgs,
    format: OutputFormat,
) -> Result<ExitCode, String> {
    let k_max = args.k_max.unwrap_or(config.k_range.1);
    if k_max < 1 {
        return Err("--k-max must be at least 1".into());
    }
    match args.which.as_str() {
        "conf" => {
            let n = args.n.ok_or("table conf requires --n")?;
            if n < 1 {
                return Err("--n must be at least 1".into());
            }
            let rows: Vec<_> = (1..=k_max).map(|k| conf_poincare(n, k)).collect();
            match (&args.at_q, format) {
                (Some(q), OutputFormat::Json) => {
                    let obj: std::collections::BTreeMap<u32, String> = rows
                        .iter()
                        .map(|r| {
                            let v = r.poly.to_series().eval_q(q).coefficient_of(&[0], 0);
                            (r.points, v.fraction_string())
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&obj).expect("table serializes")
                    );
                }
                (Some(q), OutputFormat::Tsv) => {
                    println!("n\tk\tvalue");
                    for r in &rows {
                        let v = r.poly.to_series().eval_q(q).coefficient_of(&[0], 0);
                        println!("{n}\t{}\t{}", r.points, v.fraction_string());
                    }
                }
                (Some(q), OutputFormat::Pretty) => {
                    let cells: Vec<String> = rows
                        .iter()
                        .map(|r| {
                            r.poly
                                .to_series()
                                .eval_q(q)
                                .coefficient_of(&[0], 0)
                                .to_string()
                        })
                        .collect();
                    println!("{}", cells.join(", "));
                }
                (None, OutputFormat::Json) => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&rows).expect("table serializes")
                    );
                }
                (None, OutputFormat::Tsv) => {
                    let top = i64::from(k_max - 1) * (i64::from(n) - 1);
                    let header: Vec<String> = (0..=top).map(|deg| format!("q{deg}")).collect();
                    println!("n\tk\t{}", header.join("\t"));
                    for r in &rows {
                        let cells: Vec<String> = (0..=top)
                            .map(|deg| r.poly.coefficient(deg).to_string())
                            .collect();
                        println!("{n}\t{}\t{}", r.points, cells.join("\t"));
                    }
                }
                (None, OutputFormat::Pretty) => {
                    for r in &rows {
                        let top = r.poly.degree();
                        let cells: Vec<String> = (0..=top)
                            .map(|deg| r.poly.coefficient(deg).to_string())
                            .collect();
                        println!("k={}: {}", r.points, cells.join(", "));
                    }
                }
            }
        }
        "witt" => {
            let d = args.d.ok_or("table witt requires --d")?;
            if d < 1 {
                return Err("--d must be at least 1".into());
            }
            let table = witt_table(d, k_max);
            match format {
                OutputFormat::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&table).expect("table serializes")
                    );
                }
                OutputFormat::Tsv => {
                    println!("d\tk\tdim");
                    for (k, v) in &table.entries {
                        println!("{d}\t{k}\t{v}");
                    }
                }
                OutputFormat::Pretty => {
                    let cells: Vec<String> = table.entries.values().map(u128::to_string).collect();
                    println!("{}", cells.join(", "));
                }
            }
        }
        "layers" => {
            let kind = resolve_kind(args.kind.ok_or("table layers requires --kind")?, args.n)?;
            let table = layer_table_for(kind, args.d.unwrap_or(1), args.n.unwrap_or(1), k_max)?;
            match format {
                OutputFormat::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&table).expect("table serializes")
                    );
                }
                OutputFormat::Tsv => {
                    println!("k\tseries");
                    for (k, s) in &table.entries {
                        let shown = match &args.at_q {
                            None => s.to_string(),
                            Some(q) => s.eval_q(q).to_string(),
                        };
                        println!("{k}\t{shown}");
                    }
                }
                OutputFormat::Pretty => {
                    for (k, s) in &table.entries {
                        let shown = match &args.at_q {
                            None => s.to_string(),
                            Some(q) => s.eval_q(q).to_string(),
                        };
                        println!("k={k}: {shown}");
                    }
                }
            }
        }
        other => {
            return Err(format!(
                "unknown table {other:?}; expected conf, witt, or layers"
            ))
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match RunConfig::from_env() {
        Ok(c) => c,
        Err(e) => return usage_error(&e),
    };
    if let Err(e) = config.validate() {
        return usage_error(&e);
    }
    match cli.command {
        Command::Expand(args) => {
            let order = args.order.unwrap_or(config.default_order);
            if order < 1 {
                return usage_error("--order must be at least 1");
            }
            let kind = match resolve_kind(args.kind, args.n) {
                Ok(k) => k,
                Err(e) => return usage_error(&e),
            };
            let series = closed_form(kind, &ClosedFormParams::new(args.a.clone()), order);
            print_series(
                &series,
                args.format.map_or(config.output_format, Into::into),
            );
            ExitCode::SUCCESS
        }
        Command::Verify(args) => {
            let format = args.format.map_or(config.output_format, Into::into);
            match run_verify(&config, &args, format) {
                Ok(code) => code,
                Err(e) => usage_error(&e),
            }
        }
        Command::Table(args) => {
            let format = args.format.map_or(config.output_format, Into::into);
            match run_table(&config, &args, format) {
                Ok(code) => code,
                Err(e) => usage_error(&e),
            }
        }
        Command::Report(args) => {
            let order = args.order.unwrap_or(config.default_order);
            let checks = suite_checks(
                order,
                config.n_range,
                config.k_range.1,
                args.seed.unwrap_or(0),
            );
            let reports = run_suite(checks, args.parallelism.unwrap_or(config.parallelism));
            emit_reports(
                &reports,
                args.format.map_or(config.output_format, Into::into),
            )
        }
    }
}
