//! Command-line front end. Data goes to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 invalid input.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::billey::{restriction_matrix, sigma_matrix, S1Value};
use crate::error::{Error, Result};
use crate::fillings::{
    dimension_pairs, enumerate_permissible, reading_word, top_parts, HessenbergFunction, YoungDiagram,
};
use crate::hess334::{h334, verify_334_theorem};
use crate::perm::Permutation;
use crate::pinball::{fixed_points, rolldown_table, rolldown_word, verify_pinball};
use crate::poly::MultivariatePolynomial;
use crate::report::Check;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hesspin", version, about = "Hessenberg variety fixed points, rolldowns and restriction matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Pinball,
    Basis334,
}

#[derive(Args, Debug, Clone)]
pub struct Variety {
    /// Number of boxes / size of the permutations.
    #[arg(long)]
    pub n: usize,

    /// Hessenberg function as a comma list (default: 3,3,4,...,n,n for n >= 4, else n,...,n).
    #[arg(long)]
    pub h: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List permissible fillings with reading words, dimension pairs and top parts.
    Fillings {
        #[command(flatten)]
        variety: Variety,
        /// Row lengths of the Young diagram (default: a single row).
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Tabulate fixed points w, roll(w) and the length of roll(w).
    Rolldowns {
        #[command(flatten)]
        variety: Variety,
    },
    /// Run the pinball conditions or the full 334-type basis verification.
    Verify {
        #[command(flatten)]
        variety: Variety,
        #[arg(long, value_enum, default_value_t = Mode::Pinball)]
        mode: Mode,
        /// Row lengths of the Young diagram (pinball mode only).
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Print the restriction matrix p_roll(v)(w) over all fixed points.
    Matrix {
        #[command(flatten)]
        variety: Variety,
        /// Emit full-torus polynomials instead of circle values.
        #[arg(long)]
        full_torus: bool,
    },
}

/// One line of machine output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "snake_case")]
pub enum OutputRecord {
    Filling {
        reading_word: Permutation,
        filling: String,
        dimension_pairs: Vec<(usize, usize)>,
        top_parts: Vec<usize>,
    },
    Rolldown {
        fixed_point: Permutation,
        rolldown: Permutation,
        word: String,
        length: usize,
    },
    Betti {
        source: String,
        values: Vec<usize>,
    },
    Check(Check),
    Entry {
        row: Permutation,
        col: Permutation,
        rolldown: Permutation,
        value: S1Value,
    },
    PolynomialEntry {
        row: Permutation,
        col: Permutation,
        rolldown: Permutation,
        value: MultivariatePolynomial,
    },
    Summary {
        mode: String,
        n: usize,
        fixed_points: usize,
        passed: bool,
    },
}

fn pairs_text(pairs: &[(usize, usize)]) -> String {
    pairs.iter().map(|(a, b)| format!("({a},{b})")).collect::<Vec<_>>().join(" ")
}

fn list_text(values: &[usize]) -> String {
    format!("({})", values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
}

impl OutputRecord {
    pub fn kind(&self) -> &'static str {
        match self {
            OutputRecord::Filling { .. } => "filling",
            OutputRecord::Rolldown { .. } => "rolldown",
            OutputRecord::Betti { .. } => "betti",
            OutputRecord::Check(_) => "check",
            OutputRecord::Entry { .. } => "entry",
            OutputRecord::PolynomialEntry { .. } => "polynomial_entry",
            OutputRecord::Summary { .. } => "summary",
        }
    }

    pub fn header(&self) -> &'static [&'static str] {
        match self {
            OutputRecord::Filling { .. } => &["reading_word", "filling", "dimension_pairs", "top_parts"],
            OutputRecord::Rolldown { .. } => &["fixed_point", "rolldown", "word", "length"],
            OutputRecord::Betti { .. } => &["source", "values"],
            OutputRecord::Check(_) => &["check", "status", "cases", "failures", "witnesses"],
            OutputRecord::Entry { .. } => &["row", "col", "rolldown", "coeff", "deg"],
            OutputRecord::PolynomialEntry { .. } => &["row", "col", "rolldown", "polynomial"],
            OutputRecord::Summary { .. } => &["mode", "n", "fixed_points", "status"],
        }
    }

    /// Rendered cells, in header order.
    pub fn cells(&self) -> Vec<String> {
        match self {
            OutputRecord::Filling {
                reading_word,
                filling,
                dimension_pairs,
                top_parts,
            } => vec![
                reading_word.to_string(),
                filling.clone(),
                pairs_text(dimension_pairs),
                list_text(top_parts),
            ],
            OutputRecord::Rolldown {
                fixed_point,
                rolldown,
                word,
                length,
            } => vec![fixed_point.to_string(), rolldown.to_string(), word.clone(), length.to_string()],
            OutputRecord::Betti { source, values } => vec![source.clone(), list_text(values)],
            OutputRecord::Check(c) => vec![
                c.name.clone(),
                if c.passed { "PASS" } else { "FAIL" }.to_string(),
                c.cases.to_string(),
                c.failures.to_string(),
                c.witnesses.join("; "),
            ],
            OutputRecord::Entry {
                row,
                col,
                rolldown,
                value,
            } => vec![
                row.to_string(),
                col.to_string(),
                rolldown.to_string(),
                value.coefficient().to_string(),
                value.degree().to_string(),
            ],
            OutputRecord::PolynomialEntry {
                row,
                col,
                rolldown,
                value,
            } => vec![row.to_string(), col.to_string(), rolldown.to_string(), value.to_string()],
            OutputRecord::Summary {
                mode,
                n,
                fixed_points,
                passed,
            } => vec![
                mode.clone(),
                n.to_string(),
                fixed_points.to_string(),
                if *passed { "PASS" } else { "FAIL" }.to_string(),
            ],
        }
    }
}

/// Writes records in the chosen format. Table and CSV start a new header
/// whenever the record kind changes.
pub fn write_records(out: &mut dyn Write, records: &[OutputRecord], format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                writeln!(out)?;
            }
        }
        Format::Csv | Format::Table => {
            let mut first = true;
            for group in records.chunk_by(|a, b| a.kind() == b.kind()) {
                if !first {
                    writeln!(out)?;
                }
                first = false;
                let header = group[0].header();
                let rows: Vec<Vec<String>> = group.iter().map(OutputRecord::cells).collect();
                if format == Format::Csv {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(header).map_err(std::io::Error::other)?;
                    for row in &rows {
                        w.write_record(row).map_err(std::io::Error::other)?;
                    }
                    out.write_all(&w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?)?;
                } else {
                    write_table(out, header, &rows)?;
                }
            }
        }
    }
    Ok(())
}

fn write_table(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> std::io::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    writeln!(out, "{}", rule.join("  "))?;
    for row in rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

fn hessenberg(v: &Variety) -> Result<HessenbergFunction> {
    if v.n == 0 {
        return Err(Error::InvalidHessenberg("n must be positive".into()));
    }
    let h = match &v.h {
        Some(s) => s.parse::<HessenbergFunction>()?,
        None if v.n >= 4 => h334(v.n)?,
        None => HessenbergFunction::full(v.n),
    };
    if h.n() != v.n {
        return Err(Error::InvalidHessenberg(format!(
            "{} values given for n = {}",
            h.n(),
            v.n
        )));
    }
    Ok(h)
}

fn diagram(lambda: &Option<String>, n: usize) -> Result<YoungDiagram> {
    let shape = match lambda {
        Some(s) => s.parse::<YoungDiagram>()?,
        None => YoungDiagram::single_row(n),
    };
    if shape.n() != n {
        return Err(Error::InvalidDiagram(format!("{shape} has {} boxes, expected {n}", shape.n())));
    }
    Ok(shape)
}

/// Builds the records for a parsed command; the flag reports whether all
/// verification checks passed.
pub fn execute(command: &Command) -> Result<(Vec<OutputRecord>, bool)> {
    match command {
        Command::Fillings { variety, lambda } => {
            let h = hessenberg(variety)?;
            let shape = diagram(lambda, variety.n)?;
            let records = enumerate_permissible(&shape, &h)?
                .iter()
                .map(|f| {
                    let dp = dimension_pairs(f, &h)?;
                    let x = top_parts(&dp, variety.n)?;
                    Ok(OutputRecord::Filling {
                        reading_word: reading_word(f),
                        filling: f.to_string(),
                        dimension_pairs: dp.iter().collect(),
                        top_parts: x.as_slice().to_vec(),
                    })
                })
                .collect::<Result<_>>()?;
            Ok((records, true))
        }
        Command::Rolldowns { variety } => {
            let h = hessenberg(variety)?;
            let shape = YoungDiagram::single_row(variety.n);
            let records = rolldown_table(&shape, &h)?
                .into_iter()
                .map(|(w, r)| {
                    let word = rolldown_word(&w, &shape, &h)?;
                    Ok(OutputRecord::Rolldown {
                        fixed_point: w,
                        length: r.length(),
                        rolldown: r,
                        word: word.to_string(),
                    })
                })
                .collect::<Result<_>>()?;
            Ok((records, true))
        }
        Command::Verify {
            variety,
            mode: Mode::Pinball,
            lambda,
        } => {
            let h = hessenberg(variety)?;
            let shape = diagram(lambda, variety.n)?;
            let report = verify_pinball(&shape, &h)?;
            let mut records = vec![
                OutputRecord::Betti {
                    source: "dimension pairs".into(),
                    values: report.betti.0.clone(),
                },
                OutputRecord::Betti {
                    source: "rolldown lengths".into(),
                    values: report.rolldown_betti.0.clone(),
                },
            ];
            records.extend(report.checks().into_iter().map(OutputRecord::Check));
            records.push(OutputRecord::Summary {
                mode: "pinball".into(),
                n: variety.n,
                fixed_points: report.fixed_points,
                passed: report.passed(),
            });
            Ok((records, report.passed()))
        }
        Command::Verify {
            variety,
            mode: Mode::Basis334,
            lambda,
        } => {
            if variety.n < 4 {
                return Err(Error::TrivialHessenberg { n: variety.n });
            }
            let h = hessenberg(variety)?;
            let expected = h334(variety.n)?;
            if h != expected {
                return Err(Error::InvalidHessenberg(format!(
                    "basis334 needs h = {expected}, got {h}"
                )));
            }
            if !diagram(lambda, variety.n)?.is_single_row() {
                return Err(Error::InvalidDiagram("basis334 needs the single-row diagram".into()));
            }
            let report = verify_334_theorem(variety.n)?;
            let passed = report.passed();
            let mut records: Vec<OutputRecord> = report.checks.into_iter().map(OutputRecord::Check).collect();
            records.push(OutputRecord::Summary {
                mode: "basis334".into(),
                n: variety.n,
                fixed_points: report.fixed_points,
                passed,
            });
            Ok((records, passed))
        }
        Command::Matrix { variety, full_torus } => {
            let h = hessenberg(variety)?;
            let shape = YoungDiagram::single_row(variety.n);
            let points = fixed_points(&shape, &h)?;
            let table = rolldown_table(&shape, &h)?;
            let mut records = Vec::new();
            if *full_torus {
                let m = sigma_matrix(&points, &table)?;
                for (i, row) in m.entries.into_iter().enumerate() {
                    for (j, value) in row.into_iter().enumerate() {
                        records.push(OutputRecord::PolynomialEntry {
                            row: m.fixed_points[i].clone(),
                            col: m.fixed_points[j].clone(),
                            rolldown: m.rolldowns[i].clone(),
                            value,
                        });
                    }
                }
            } else {
                let m = restriction_matrix(&points, &table)?;
                for (i, row) in m.entries.into_iter().enumerate() {
                    for (j, value) in row.into_iter().enumerate() {
                        records.push(OutputRecord::Entry {
                            row: m.fixed_points[i].clone(),
                            col: m.fixed_points[j].clone(),
                            rolldown: m.rolldowns[i].clone(),
                            value,
                        });
                    }
                }
            }
            Ok((records, true))
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let outcome = match cli.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| execute(&cli.command)),
            Err(e) => {
                let _ = writeln!(err, "error: cannot start {j} workers: {e}");
                return EXIT_INVALID;
            }
        },
        None => execute(&cli.command),
    };
    match outcome {
        Ok((records, passed)) => {
            match write_records(out, &records, cli.format) {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => return EXIT_OK,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_FAILED;
                }
                Ok(()) => {}
            }
            if passed {
                EXIT_OK
            } else {
                let _ = writeln!(err, "verification failed");
                EXIT_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}
