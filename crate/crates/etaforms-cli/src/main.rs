//! Command-line front end: q-expansion of eta-quotients and theta series,
//! class group tables, prime classification, Hecke operator application,
//! closed-form coefficient evaluation, and the verification suites.
//!
//! Exit codes: 0 on success (and all-pass for verification), 1 when a
//! verification or check fails, 2 on usage errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use etaforms::bqf::{self, Form};
use etaforms::formulas::{self, Level};
use etaforms::hecke::{apply_tp, eigen_check_detailed, EigenOutcome};
use etaforms::qseries::{eta_quotient, theta_form, EtaQuotientSpec, QSeries};
use etaforms::verify;

#[derive(Parser)]
#[command(
    name = "etaforms",
    version,
    about = "Exact q-series for weight-1 eta-quotients and binary quadratic form theta series"
)]
struct Cli {
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Expand an eta-quotient or a form's theta series to a given order
    Expand {
        /// Eta-quotient spec "J:S1^R1,S2^R2,..." for q^J prod E(q^Si)^Ri
        #[arg(long, conflicts_with = "form")]
        eta: Option<String>,
        /// Form "a,b,c" whose theta series to expand
        #[arg(long)]
        form: Option<String>,
        /// Truncation order (default 400, or env ETAFORMS_ORDER)
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print the class group of a discriminant with its genus characters
    Classgroup {
        #[arg(long, allow_hyphen_values = true)]
        disc: i64,
    },
    /// Classify a prime against one of the six discriminants
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        disc: i64,
        #[arg(long)]
        p: u64,
    },
    /// Apply T_p to a form's theta series, or report the eigenvalues of the
    /// completions at a level
    Hecke {
        #[arg(long, allow_hyphen_values = true)]
        disc: Option<i64>,
        #[arg(long)]
        p: u64,
        /// Form "a,b,c" to apply T_p to (needs --disc)
        #[arg(long)]
        form: Option<String>,
        /// Level whose completions to test instead
        #[arg(long)]
        level: Option<u64>,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Evaluate the closed-form coefficient formulas at a level
    Coeff {
        #[arg(long)]
        level: u64,
        #[arg(long)]
        n: u64,
        /// Also evaluate the independent series oracle and print PASS/FAIL
        #[arg(long)]
        check: bool,
    },
    /// Run a verification suite
    Verify {
        /// thm1|thm2|thm3|thm4|hecke|eigen|gordon-hughes|mult|identities|genus|all
        #[arg(long)]
        suite: String,
        #[arg(long)]
        order: Option<usize>,
        /// Worker threads for independent checks
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((output, code)) => {
            match cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, output) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{output}"),
            }
            code
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(String, ExitCode), String> {
    match command {
        Command::Expand {
            eta,
            form,
            order,
            format,
        } => cmd_expand(eta, form, order, format),
        Command::Classgroup { disc } => cmd_classgroup(disc),
        Command::Classify { disc, p } => cmd_classify(disc, p),
        Command::Hecke {
            disc,
            p,
            form,
            level,
            order,
        } => cmd_hecke(disc, p, form, level, order),
        Command::Coeff { level, n, check } => cmd_coeff(level, n, check),
        Command::Verify { suite, order, jobs } => cmd_verify(&suite, order, jobs),
    }
}

fn default_order(order: Option<usize>) -> usize {
    order
        .or_else(|| {
            std::env::var("ETAFORMS_ORDER")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(400)
}

fn parse_form(text: &str) -> Result<Form, String> {
    let parts: Vec<i64> = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| format!("bad form component {t:?}: {e}"))
        })
        .collect::<Result<_, _>>()?;
    if parts.len() != 3 {
        return Err(format!("form must be \"a,b,c\", got {text:?}"));
    }
    let f = Form::new(parts[0], parts[1], parts[2]);
    if !f.is_positive_definite() {
        return Err(format!("{f} is not positive definite"));
    }
    Ok(f)
}

fn parse_eta(text: &str) -> Result<EtaQuotientSpec, String> {
    let (j, rest) = text
        .split_once(':')
        .ok_or_else(|| format!("eta spec must be \"J:S^R,...\", got {text:?}"))?;
    let j: usize = j
        .trim()
        .parse()
        .map_err(|e| format!("bad prefactor {j:?}: {e}"))?;
    let mut factors = Vec::new();
    for part in rest.split(',') {
        let (s, r) = part
            .split_once('^')
            .ok_or_else(|| format!("factor must be \"S^R\", got {part:?}"))?;
        let s: usize = s
            .trim()
            .parse()
            .map_err(|e| format!("bad scale {s:?}: {e}"))?;
        let r: i64 = r
            .trim()
            .parse()
            .map_err(|e| format!("bad power {r:?}: {e}"))?;
        if s == 0 || r == 0 {
            return Err(format!(
                "factor {part:?} must have positive scale and nonzero power"
            ));
        }
        factors.push((s, r));
    }
    Ok(EtaQuotientSpec::from_merged(j, &factors))
}

fn render_series(s: &QSeries, format: Format, out: &mut String) {
    match format {
        Format::Text => {
            let _ = writeln!(out, "{s}");
        }
        Format::Records => {
            for n in s.support() {
                let _ = writeln!(out, "n={n} c={}", s.coeff(n));
            }
            let _ = writeln!(out, "order={}", s.order());
        }
    }
}

fn cmd_expand(
    eta: Option<String>,
    form: Option<String>,
    order: Option<usize>,
    format: Format,
) -> Result<(String, ExitCode), String> {
    let order = default_order(order);
    let mut out = String::new();
    let series = match (eta, form) {
        (Some(spec), None) => {
            let spec = parse_eta(&spec)?;
            let _ = writeln!(
                out,
                "eta-quotient: prefactor={} weight={} level={} proper={}",
                spec.prefactor,
                spec.weight(),
                spec.level(),
                spec.is_proper()
            );
            eta_quotient(&spec, order)
        }
        (None, Some(form)) => {
            let f = parse_form(&form)?;
            let _ = writeln!(
                out,
                "theta series of {f}, discriminant {}",
                f.discriminant()
            );
            theta_form(&f, order)
        }
        _ => return Err("expand needs exactly one of --eta or --form".into()),
    };
    render_series(&series, format, &mut out);
    Ok((out, ExitCode::SUCCESS))
}

fn structure_label(structure: &[u64]) -> String {
    structure
        .iter()
        .map(|k| format!("C{k}"))
        .collect::<Vec<_>>()
        .join("x")
}

fn cmd_classgroup(disc: i64) -> Result<(String, ExitCode), String> {
    let group = bqf::class_group(disc).map_err(|e| e.to_string())?;
    let chars = bqf::character_system(disc);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "discriminant={disc} classes={} structure={} conductor={}",
        group.order(),
        structure_label(&group.structure),
        bqf::conductor(disc)
    );
    let labels: Vec<String> = chars.iter().map(|c| c.label()).collect();
    let _ = writeln!(out, "characters: {}", labels.join(" "));
    for form in &group.classes {
        let vector = bqf::genus_characters(form, &chars).map_err(|e| e.to_string())?;
        let rendered: Vec<String> = vector
            .iter()
            .map(|v| format!("{}{v}", if *v > 0 { "+" } else { "" }))
            .collect();
        let _ = writeln!(out, "form={form} genus=({})", rendered.join(","));
    }
    Ok((out, ExitCode::SUCCESS))
}

fn level_for_disc(disc: i64) -> Result<Level, String> {
    Level::from_discriminant(disc)
        .ok_or_else(|| format!("discriminant {disc} is not one of -47,-71,-135,-648,-1024,-1872"))
}

fn cmd_classify(disc: i64, p: u64) -> Result<(String, ExitCode), String> {
    if !etaforms::ntheory::is_prime(p) {
        return Err(format!("{p} is not prime"));
    }
    let level = level_for_disc(disc)?;
    let classification = formulas::classify(level, p);
    let mut out = String::new();
    let _ = writeln!(out, "d={disc} p={p}: {classification}");
    if let Some(pair) = classification.pair() {
        let (x, y) = pair
            .representation_witness(p)
            .expect("represented prime has a witness");
        let _ = writeln!(out, "witness: {pair} at (x,y)=({x},{y})");
    }
    Ok((out, ExitCode::SUCCESS))
}

fn cmd_hecke(
    disc: Option<i64>,
    p: u64,
    form: Option<String>,
    level: Option<u64>,
    order: Option<usize>,
) -> Result<(String, ExitCode), String> {
    if !etaforms::ntheory::is_prime(p) {
        return Err(format!("{p} is not prime"));
    }
    let mut out = String::new();
    match (form, level) {
        (Some(form), None) => {
            let d = disc.ok_or("applying T_p to a form needs --disc")?;
            let f = parse_form(&form)?;
            let order = default_order(order);
            let image = apply_tp(&theta_form(&f, order), d, p).map_err(|e| e.to_string())?;
            let _ = writeln!(out, "T_{p} B({},{},{}) for d={d}:", f.a, f.b, f.c);
            render_series(&image, Format::Text, &mut out);
        }
        (None, Some(n)) => {
            let level = Level::from_number(n).ok_or(format!("unknown level {n}"))?;
            let order = order
                .or_else(|| {
                    std::env::var("ETAFORMS_ORDER")
                        .ok()
                        .and_then(|v| v.parse().ok())
                })
                .unwrap_or(2000);
            let d = level.discriminant();
            let names = level.completion_names();
            for (i, series) in formulas::completions(level, order).iter().enumerate() {
                match eigen_check_detailed(series, d, p).map_err(|e| e.to_string())? {
                    EigenOutcome::Eigenform(v) => {
                        let _ = writeln!(out, "{}: eigenform of T_{p}, eigenvalue {v}", names[i]);
                    }
                    EigenOutcome::NotEigenform { index, .. } => {
                        let _ = writeln!(
                            out,
                            "{}: not an eigenform of T_{p} (first discrepancy at n={index})",
                            names[i]
                        );
                    }
                }
            }
        }
        _ => return Err("hecke needs exactly one of --form or --level".into()),
    }
    Ok((out, ExitCode::SUCCESS))
}

fn check_verdict(formula: &str, oracle: &str) -> &'static str {
    if formula == oracle {
        "PASS"
    } else {
        "FAIL"
    }
}

fn cmd_coeff(level_no: u64, n: u64, check: bool) -> Result<(String, ExitCode), String> {
    if n == 0 {
        return Err("n must be positive".into());
    }
    let level = Level::from_number(level_no).ok_or(format!("unknown level {level_no}"))?;
    let mut out = String::new();
    // primary value: the coefficient of the level's eta-product where it is
    // unique, otherwise the completion coefficient
    let (primary, extractors): (String, Vec<(&str, String)>) = match level {
        Level::L47 => (formulas::level47::a(n).to_string(), vec![]),
        Level::L71 => (formulas::level71::a(n).to_string(), vec![]),
        Level::L135 => (
            formulas::level135::a(n).to_string(),
            vec![
                (
                    "q*E(q^9)E(q^15)",
                    formulas::level135::coeff_q_e9_e15(n).to_string(),
                ),
                (
                    "q^2*E(q^3)E(q^45)",
                    formulas::level135::coeff_q2_e3_e45(n).to_string(),
                ),
            ],
        ),
        Level::L648 => (
            formulas::level648::a(n).to_string(),
            vec![
                ("g", formulas::level648::coeff_g(n).to_string()),
                ("h", formulas::level648::coeff_h(n).to_string()),
            ],
        ),
        Level::L1024 => (
            formulas::level1024::a(n).to_string(),
            vec![
                (
                    "q*psi(q^8)phi(-q^64)",
                    formulas::level1024::coeff_psi_phi(n).to_string(),
                ),
                (
                    "q^5*psi(-q^8)psi(-q^32)",
                    formulas::level1024::coeff_psi_psi(n).to_string(),
                ),
            ],
        ),
        Level::L1872 => (
            formulas::level1872::coeff_eta(n).to_string(),
            vec![("completion", formulas::level1872::a(n).to_string())],
        ),
    };
    let _ = writeln!(out, "{primary}");
    for (name, value) in &extractors {
        let _ = writeln!(out, "{name}={value}");
    }
    if !check {
        return Ok((out, ExitCode::SUCCESS));
    }
    let oracle = coeff_oracle(level, n);
    let verdict = check_verdict(&primary, &oracle);
    let _ = writeln!(out, "oracle={oracle} {verdict}");
    let code = if verdict == "PASS" {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    };
    Ok((out, code))
}

/// Independent oracle for the primary coefficient: a direct series
/// expansion that never touches the classification formulas.
fn coeff_oracle(level: Level, n: u64) -> String {
    let order = n as usize;
    match level {
        Level::L47 => eta_quotient(&EtaQuotientSpec::new(2, &[(1, 1), (47, 1)]), order)
            .coeff(order)
            .to_string(),
        Level::L71 => eta_quotient(&EtaQuotientSpec::new(3, &[(1, 1), (71, 1)]), order)
            .coeff(order)
            .to_string(),
        Level::L1872 => eta_quotient(&EtaQuotientSpec::new(7, &[(12, 1), (156, 1)]), order)
            .coeff(order)
            .to_string(),
        // the completion itself, from the theta combinations
        _ => formulas::completion_series(level, order)
            .coeff(order)
            .to_string(),
    }
}

fn cmd_verify(
    suite: &str,
    order: Option<usize>,
    jobs: usize,
) -> Result<(String, ExitCode), String> {
    let known: Vec<&str> = verify::SUITES.iter().copied().chain(["all"]).collect();
    if !known.contains(&suite) {
        return Err(format!(
            "unknown suite {suite:?}; known: {}",
            known.join(", ")
        ));
    }
    let order = order.or_else(|| {
        std::env::var("ETAFORMS_ORDER")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    let reports = verify::run_suite_jobs(suite, order, jobs.max(1)).map_err(|e| e.to_string())?;
    let mut out = String::new();
    let mut failures = 0usize;
    for report in &reports {
        if !report.passed() {
            failures += 1;
        }
        let _ = writeln!(out, "{}", report.line());
    }
    let _ = writeln!(out, "total={} failures={failures}", reports.len());
    let code = if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    };
    Ok((out, code))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_spec_parsing() {
        let spec = parse_eta("2:1^1,47^1").unwrap();
        assert_eq!(spec.prefactor, 2);
        assert_eq!(spec.factors, vec![(1, 1), (47, 1)]);
        let spec = parse_eta("0:2^2,1^-1").unwrap();
        assert_eq!(spec.factors, vec![(1, -1), (2, 2)]);
        assert!(parse_eta("x:1^1").is_err());
        assert!(parse_eta("0:1").is_err());
        assert!(parse_eta("0:0^1").is_err());
    }

    #[test]
    fn form_parsing() {
        assert_eq!(parse_form("1,1,12").unwrap(), Form::new(1, 1, 12));
        assert!(parse_form("1,1").is_err());
        assert!(parse_form("1,99,1").is_err()); // indefinite
    }

    #[test]
    fn check_verdict_rejects_injected_fault() {
        assert_eq!(check_verdict("-1", "-1"), "PASS");
        // fault injection: a wrong formula value must never report PASS
        assert_eq!(check_verdict("1", "-1"), "FAIL");
        assert_eq!(check_verdict("0", "-1"), "FAIL");
    }

    #[test]
    fn verdict_is_never_pass_on_mismatch_exhaustive_small() {
        for a in -9i64..=9 {
            for b in -9i64..=9 {
                let verdict = check_verdict(&a.to_string(), &b.to_string());
                assert_eq!(verdict == "PASS", a == b);
            }
        }
    }
}
