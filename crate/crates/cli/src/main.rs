mod args;
mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::Parser;
use serde_json::Deserializer;
use simple_games::enumeration::{closed_formulas, enumerate_bipartite_canonical, CountRecord};
use simple_games::oracle::{classify_by_t, cross_validate, Check, ORACLE_MAX_N};
use simple_games::{canonical_form, is_isomorphic, SimpleGame, VectorGame};

use args::{Cli, Command, Format};

/// Mismatch found by `verify`; maps to exit status 1.
const EXIT_MISMATCH: u8 = 1;
/// Bad arguments or unreadable input; maps to exit status 2.
const EXIT_INPUT: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(EXIT_INPUT),
            };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_MISMATCH),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

/// Returns `Ok(false)` only when a verification check fails.
fn run(cli: Cli) -> anyhow::Result<bool> {
    let mut out = open_output(cli.output.as_deref())?;
    let format = cli.format;
    let passed = match cli.command {
        Command::Count { n, n_range } => {
            let range = match (n, n_range) {
                (Some(n), _) => n..=n,
                (None, Some(range)) => range,
                (None, None) => bail!("count needs --n or --n-range"),
            };
            let records = range.map(closed_formulas).collect::<Result<Vec<_>, _>>()?;
            write_counts(&mut out, &records, format.unwrap_or(Format::Csv))?;
            true
        }
        Command::Enumerate { n } => {
            let format = format.unwrap_or(Format::Json);
            for pair in enumerate_bipartite_canonical(n)? {
                write_pair(&mut out, &pair, format)?;
            }
            true
        }
        Command::Expand { input } => {
            let pair: VectorGame = parse_one(input.as_deref())?;
            let game = pair.expand()?;
            match format.unwrap_or(Format::Json) {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&game)?)?,
                Format::Text => {
                    for c in game.min_winning() {
                        writeln!(out, "{c}")?;
                    }
                }
                Format::Csv => unsupported("expand", Format::Csv)?,
            }
            true
        }
        Command::Canon { input } => {
            let game: SimpleGame = parse_one(input.as_deref())?;
            write_pair(
                &mut out,
                &canonical_form(&game),
                format.unwrap_or(Format::Json),
            )?;
            true
        }
        Command::Iso { inputs } => {
            let (a, b) = parse_two(&inputs)?;
            let answer = is_isomorphic(&a, &b);
            match format.unwrap_or(Format::Text) {
                Format::Csv => unsupported("iso", Format::Csv)?,
                _ => writeln!(out, "{answer}")?,
            }
            true
        }
        Command::Oracle { n, allow_n6 } => {
            check_n6(n, allow_n6)?;
            let report = if n >= 2 {
                cross_validate(n as usize)?
            } else {
                classify_by_t(n as usize)?
            };
            match format.unwrap_or(Format::Json) {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
                Format::Text => {
                    writeln!(out, "n = {}", report.n)?;
                    writeln!(out, "labeled games = {}", report.labeled_total)?;
                    for (t, count) in &report.by_t {
                        writeln!(out, "t = {t}: {count}")?;
                    }
                    write_checks_text(&mut out, &report.checks)?;
                }
                Format::Csv => unsupported("oracle", Format::Csv)?,
            }
            report.passed()
        }
        Command::Verify {
            max_n,
            oracle_max_n,
            allow_n6,
        } => {
            check_n6(oracle_max_n.min(max_n), allow_n6)?;
            let checks = verify::run(max_n, oracle_max_n);
            let passed = checks.iter().all(|c| c.pass);
            match format.unwrap_or(Format::Text) {
                Format::Text => {
                    write_checks_text(&mut out, &checks)?;
                    let failed = checks.iter().filter(|c| !c.pass).count();
                    writeln!(out, "{} checks, {failed} failed", checks.len())?;
                }
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::json!({ "passed": passed, "checks": checks })
                )?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut out);
                    w.write_record(["name", "pass"])?;
                    for c in &checks {
                        w.write_record([c.name.as_str(), if c.pass { "true" } else { "false" }])?;
                    }
                    w.flush()?;
                }
            }
            passed
        }
    };
    out.flush()?;
    Ok(passed)
}

fn open_output(path: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn check_n6(n: u32, allow_n6: bool) -> anyhow::Result<()> {
    if n as usize >= ORACLE_MAX_N && !allow_n6 {
        bail!("the oracle at n = {ORACLE_MAX_N} classifies 7,828,352 games; pass --allow-n6");
    }
    Ok(())
}

fn unsupported(command: &str, format: Format) -> anyhow::Result<()> {
    bail!("{command} does not support --format {format:?}")
}

fn read_input(path: Option<&Path>) -> anyhow::Result<String> {
    let mut text = String::new();
    match path {
        Some(p) => {
            File::open(p)
                .and_then(|mut f| f.read_to_string(&mut text))
                .with_context(|| format!("cannot read {}", p.display()))?;
        }
        None => {
            io::stdin()
                .read_to_string(&mut text)
                .context("cannot read standard input")?;
        }
    }
    Ok(text)
}

fn parse_one<T: serde::de::DeserializeOwned>(path: Option<&Path>) -> anyhow::Result<T> {
    let text = read_input(path)?;
    serde_json::from_str(&text).context("invalid input document")
}

fn parse_two(inputs: &[PathBuf]) -> anyhow::Result<(SimpleGame, SimpleGame)> {
    match inputs {
        [a, b] => Ok((parse_one(Some(a))?, parse_one(Some(b))?)),
        [] => {
            let text = read_input(None)?;
            let games = Deserializer::from_str(&text)
                .into_iter::<SimpleGame>()
                .collect::<Result<Vec<_>, _>>()
                .context("invalid input document")?;
            match <[SimpleGame; 2]>::try_from(games) {
                Ok([a, b]) => Ok((a, b)),
                Err(games) => bail!(
                    "expected two games on standard input, found {}",
                    games.len()
                ),
            }
        }
        _ => bail!("iso takes two files, or two games on standard input"),
    }
}

fn write_pair(out: &mut dyn Write, pair: &VectorGame, format: Format) -> anyhow::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(pair)?)?,
        Format::Text => writeln!(out, "{pair}")?,
        Format::Csv => unsupported("this command", Format::Csv)?,
    }
    Ok(())
}

fn write_counts(
    out: &mut dyn Write,
    records: &[CountRecord],
    format: Format,
) -> anyhow::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CountRecord::CSV_HEADER)?;
            for r in records {
                w.write_record([
                    r.n.to_string(),
                    r.cases.to_string(),
                    r.violations.to_string(),
                    r.r1_count.to_string(),
                    r.total_pairs.to_string(),
                    r.symmetric.to_string(),
                    r.bipartite.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Json => {
            for r in records {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Text => {
            writeln!(out, "{}", CountRecord::CSV_HEADER.join("\t"))?;
            for r in records {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.n, r.cases, r.violations, r.r1_count, r.total_pairs, r.symmetric, r.bipartite
                )?;
            }
        }
    }
    Ok(())
}

fn write_checks_text(out: &mut dyn Write, checks: &[Check]) -> io::Result<()> {
    for c in checks {
        writeln!(out, "{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name)?;
    }
    Ok(())
}
