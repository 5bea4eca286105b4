//! `symrep`: exact representation theory of the symmetric groups from the shell.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use symrep::characters::{
    central_idempotent, character_table, mn_character, CharacterTable, DEFAULT_TABLE_CAP,
};
use symrep::combinatorics::partitions_of;
use symrep::fock::{fock_character, lambda_op, FockVector};
use symrep::repforms::{jm_matrix, trace_character, OrthogonalRep, Representation, SeminormalRep};
use symrep::symfunc::{frobenius_expand, schur_poly, DEFAULT_SYMFUNC_CAP};
use symrep::tableaux::standard_tableaux;
use symrep::verify::{self, Mutation, Suite, VerifyOptions};
use symrep::{Error, Partition, Permutation, SkewShape};

const EXIT_USAGE: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_MISMATCH: u8 = 3;
const EXIT_RESOURCE: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "symrep", version, about = "Exact representation theory of the symmetric groups")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Tolerance for floating-point comparisons.
    #[arg(long, global = true, env = "SYMREP_TOL", default_value_t = 1e-9, value_parser = positive_f64)]
    tol: f64,

    /// Largest degree kept in the truncated Fock space.
    #[arg(long, global = true, env = "SYMREP_FOCK_CAP", default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
    fock_cap: u64,

    /// Largest n for which group algebra idempotents are built.
    #[arg(long, global = true, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    idempotent_cap: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Mn,
    Trace,
    Fock,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Form {
    Seminormal,
    Orthogonal,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Coxeter,
    Orthogonality,
    Characters,
    Fock,
    Boson,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum InjectArg {
    MnSign,
    OrthogonalSign,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the partitions of N in decreasing lexicographic order.
    Partitions { n: usize },
    /// List the standard tableaux of LAMBDA, or of LAMBDA/MU.
    Tableaux {
        #[arg(value_parser = partition)]
        lambda: Partition,
        #[arg(long, value_parser = partition)]
        skew: Option<Partition>,
    },
    /// Dimension of the irreducible representation LAMBDA.
    Dim {
        #[arg(value_parser = partition)]
        lambda: Partition,
    },
    /// Character table of S_N.
    Chartable { n: usize },
    /// Character value of LAMBDA (or LAMBDA/MU) on the class RHO.
    Chi {
        #[arg(value_parser = partition)]
        lambda: Partition,
        #[arg(value_parser = partition)]
        rho: Partition,
        #[arg(long, value_parser = partition)]
        skew: Option<Partition>,
        #[arg(long, value_enum, default_value_t = Method::Mn)]
        method: Method,
    },
    /// Matrices of a representation in Young's seminormal or orthogonal form.
    Rep {
        #[arg(value_parser = partition)]
        lambda: Partition,
        #[arg(long, value_parser = partition)]
        skew: Option<Partition>,
        #[arg(long, value_enum)]
        form: Form,
        /// A permutation in one-line ("2,1,3") or cycle ("(1 2)") notation.
        #[arg(long)]
        perm: Option<String>,
    },
    /// Matrix of the Jucys-Murphy element L_K in the seminormal form of LAMBDA.
    Jm {
        #[arg(value_parser = partition)]
        lambda: Partition,
        k: usize,
    },
    /// Schur polynomial S_LAMBDA in the power-sum variables.
    Schur {
        #[arg(value_parser = partition)]
        lambda: Partition,
    },
    /// Expansion of the power sum P_RHO in Schur polynomials.
    Frobenius {
        #[arg(value_parser = partition)]
        rho: Partition,
    },
    /// Central idempotent of LAMBDA in the group algebra of S_N.
    Idempotent {
        n: usize,
        #[arg(value_parser = partition)]
        lambda: Partition,
    },
    /// Apply Λ_K to the sum of the basis vectors v_LAMBDA.
    FockApply {
        #[arg(allow_negative_numbers = true)]
        k: i64,
        #[arg(value_parser = partition, required = true, num_args = 1..)]
        lambdas: Vec<Partition>,
    },
    /// Run the cross-checking suites for all sizes up to N.
    Verify {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Corrupt the gathered data before checking (sanity check of the suites).
        #[arg(long, value_enum, hide = true)]
        inject: Option<InjectArg>,
    },
}

fn partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn positive_f64(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(format!("tolerance must be positive, got {s}"))
    }
}

/// What went wrong, with the exit code it maps to.
enum Failure {
    Lib(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(out)) => {
            print!("{out}");
            ExitCode::from(EXIT_MISMATCH)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Shape(_) | Error::Domain(_) | Error::Precondition(_) => EXIT_DOMAIN,
                Error::Parse(_) => EXIT_USAGE,
                Error::Verification(_) => EXIT_MISMATCH,
                Error::Resource { .. } | Error::Truncation(_) => EXIT_RESOURCE,
            })
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let fmt = cli.format;
    match &cli.command {
        Command::Partitions { n } => {
            let ps = partitions_of(*n);
            Ok(match fmt {
                Format::Json => json_line(json!(ps)),
                _ => lines(ps.iter().map(|p| p.to_string())),
            })
        }
        Command::Tableaux { lambda, skew } => {
            let shape = shape_of(lambda, skew)?;
            let ts = standard_tableaux(&shape);
            Ok(match fmt {
                Format::Json => json_line(json!(ts)),
                _ => {
                    let mut out = String::new();
                    for (i, t) in ts.iter().enumerate() {
                        if i > 0 {
                            out.push('\n');
                        }
                        out.push_str(&t.render());
                    }
                    out
                }
            })
        }
        Command::Dim { lambda } => {
            let d = lambda.hook_dimension();
            Ok(match fmt {
                Format::Json => json_line(json!({"partition": lambda, "dim": d.to_string()})),
                _ => format!("{d}\n"),
            })
        }
        Command::Chartable { n } => {
            let table = character_table(*n, DEFAULT_TABLE_CAP)?;
            match fmt {
                Format::Json => Ok(json_line(json!(table))),
                Format::Csv => chartable_csv(&table),
                Format::Text => Ok(chartable_text(&table)),
            }
        }
        Command::Chi {
            lambda,
            rho,
            skew,
            method,
        } => chi(cli, &shape_of(lambda, skew)?, rho, *method),
        Command::Rep {
            lambda,
            skew,
            form,
            perm,
        } => rep(cli, &shape_of(lambda, skew)?, *form, perm.as_deref()),
        Command::Jm { lambda, k } => {
            let rep = SeminormalRep::new(lambda)?;
            let m = jm_matrix(&rep, *k)?;
            Ok(match fmt {
                Format::Json => json_line(json!(m)),
                _ => m.to_string(),
            })
        }
        Command::Schur { lambda } => {
            let s = schur_poly(lambda);
            Ok(match fmt {
                Format::Json => json_line(json!(s)),
                _ => format!("{s}\n"),
            })
        }
        Command::Frobenius { rho } => {
            let coeffs = frobenius_expand(rho, DEFAULT_SYMFUNC_CAP)?;
            // decreasing lexicographic order, as everywhere else
            let terms: Vec<_> = coeffs.iter().rev().collect();
            Ok(match fmt {
                Format::Json => json_line(Value::Array(
                    terms
                        .iter()
                        .map(|(l, c)| json!({"partition": l, "coeff": c.to_string()}))
                        .collect(),
                )),
                _ => lines(terms.iter().map(|(l, c)| format!("{c} S_({l})"))),
            })
        }
        Command::Idempotent { n, lambda } => {
            let e = central_idempotent(*n, lambda, cli.idempotent_cap as usize)?;
            Ok(match fmt {
                Format::Json => json_line(Value::Array(
                    e.terms()
                        .map(|(w, c)| json!({"perm": w.images(), "coeff": c.to_string()}))
                        .collect(),
                )),
                _ => lines(e.terms().map(|(w, c)| format!("{c} [{w}]"))),
            })
        }
        Command::FockApply { k, lambdas } => {
            let cap = cli.fock_cap as usize;
            let mut v = FockVector::zero(cap);
            for l in lambdas {
                v = v.add(&FockVector::basis(l.clone(), cap)?)?;
            }
            let w = lambda_op(*k, &v)?;
            Ok(match fmt {
                Format::Json => json_line(json!(w)),
                _ => format!("{w}\n"),
            })
        }
        Command::Verify { n, suite, inject } => {
            let suite = match suite {
                SuiteArg::Coxeter => Suite::Coxeter,
                SuiteArg::Orthogonality => Suite::Orthogonality,
                SuiteArg::Characters => Suite::Characters,
                SuiteArg::Fock => Suite::Fock,
                SuiteArg::Boson => Suite::Boson,
                SuiteArg::All => Suite::All,
            };
            let mut opts = VerifyOptions::new(*n);
            opts.tolerance = cli.tol;
            opts.fock_cap = cli.fock_cap as usize;
            opts.mutation = inject.map(|m| match m {
                InjectArg::MnSign => Mutation::MnSign,
                InjectArg::OrthogonalSign => Mutation::OrthogonalSign,
            });
            let report = verify::run(suite, &opts)?;
            let out = match fmt {
                Format::Json => json_line(json!({
                    "passed": report.passed(),
                    "checks": report.checks.iter().map(|c| json!({
                        "suite": c.suite.to_string(),
                        "name": c.name,
                        "cases": c.cases,
                        "passed": c.passed(),
                        "failure": c.failure,
                    })).collect::<Vec<_>>(),
                })),
                _ => format!("{report}\n"),
            };
            if report.passed() {
                Ok(out)
            } else {
                Err(Failure::Mismatch(out))
            }
        }
    }
}

fn shape_of(lambda: &Partition, skew: &Option<Partition>) -> Result<SkewShape, Error> {
    match skew {
        Some(mu) => SkewShape::new(lambda.clone(), mu.clone()),
        None => Ok(SkewShape::straight(lambda.clone())),
    }
}

fn chi(cli: &Cli, shape: &SkewShape, rho: &Partition, method: Method) -> Outcome {
    let methods: Vec<Method> = match method {
        Method::All if shape.is_straight() => vec![Method::Mn, Method::Trace, Method::Fock],
        // the Fock method only computes straight characters
        Method::All => vec![Method::Mn, Method::Trace],
        Method::Fock if !shape.is_straight() => {
            return Err(Error::Domain("the fock method needs a straight shape".into()).into())
        }
        m => vec![m],
    };
    let mut values = Vec::new();
    for m in &methods {
        let v = match m {
            Method::Mn => mn_character(shape, rho)?,
            Method::Trace => trace_character(shape, rho, cli.tol)?,
            Method::Fock => fock_character(shape.outer(), rho)?,
            Method::All => unreachable!(),
        };
        values.push((method_name(*m), v));
    }
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    let out = match cli.format {
        Format::Json => json_line(Value::Object(
            values
                .iter()
                .map(|(k, v)| (k.to_string(), json!(v.to_string())))
                .chain([("agree".to_string(), json!(agree))])
                .collect(),
        )),
        _ if method == Method::All => {
            lines(std::iter::once(values.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")))
        }
        _ => format!("{}\n", values[0].1),
    };
    if agree {
        Ok(out)
    } else {
        Err(Failure::Mismatch(out))
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Mn => "mn",
        Method::Trace => "trace",
        Method::Fock => "fock",
        Method::All => "all",
    }
}

fn rep(cli: &Cli, shape: &SkewShape, form: Form, perm: Option<&str>) -> Outcome {
    let n = shape.size();
    let perm = perm
        .map(|p| Permutation::parse(p, Some(n)))
        .transpose()?;
    let json = cli.format == Format::Json;
    match form {
        Form::Seminormal => {
            if !shape.is_straight() {
                return Err(Error::Domain("the seminormal form is built for straight shapes".into()).into());
            }
            let r = SeminormalRep::new(shape.outer())?;
            Ok(render_rep(&r, perm.as_ref(), json, |m| json!(m), |m| m.to_string())?)
        }
        Form::Orthogonal => {
            let r = OrthogonalRep::new(shape)?;
            Ok(render_rep(&r, perm.as_ref(), json, |m| json!(m), |m| m.to_string())?)
        }
    }
}

fn render_rep<R: Representation>(
    r: &R,
    perm: Option<&Permutation>,
    json: bool,
    to_json: impl Fn(&symrep::matrix::Matrix<R::Scalar>) -> Value,
    to_text: impl Fn(&symrep::matrix::Matrix<R::Scalar>) -> String,
) -> Result<String, Error> {
    let mats: Vec<(String, symrep::matrix::Matrix<R::Scalar>)> = match perm {
        Some(w) => vec![(w.to_string(), r.rep_matrix(w)?)],
        None => r
            .generators()
            .iter()
            .enumerate()
            .map(|(i, g)| (format!("s{}", i + 1), g.clone()))
            .collect(),
    };
    if json {
        return Ok(json_line(json!({
            "basis": r.basis(),
            "matrices": mats.iter().map(|(k, m)| json!({"element": k, "matrix": to_json(m)})).collect::<Vec<_>>(),
        })));
    }
    let mut out = String::new();
    for (k, m) in &mats {
        let _ = writeln!(out, "{k}:");
        out.push_str(&to_text(m));
    }
    Ok(out)
}

/// Partition label safe inside CSV cells: parts joined by `+`.
fn plus_label(p: &Partition) -> String {
    if p.is_empty() {
        return "0".into();
    }
    p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join("+")
}

fn chartable_csv(table: &CharacterTable) -> Outcome {
    let mut w = csv::WriterBuilder::new()
        .quote_style(csv::QuoteStyle::NonNumeric)
        .from_writer(Vec::new());
    let cols = table.col_labels();
    let header: Vec<String> = std::iter::once("lambda".to_string())
        .chain(cols.iter().map(plus_label))
        .collect();
    let io = |e: csv::Error| Failure::Lib(Error::Parse(e.to_string()));
    w.write_record(&header).map_err(io)?;
    for (l, row) in table.row_labels().iter().zip(&table.entries) {
        let rec: Vec<String> = std::iter::once(plus_label(l))
            .chain(row.iter().map(|v| v.to_string()))
            .collect();
        w.write_record(&rec).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Lib(Error::Parse(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn chartable_text(table: &CharacterTable) -> String {
    let mut grid: Vec<Vec<String>> = vec![std::iter::once(String::new())
        .chain(table.col_labels().iter().map(|p| p.to_string()))
        .collect()];
    for (l, row) in table.row_labels().iter().zip(&table.entries) {
        grid.push(
            std::iter::once(l.to_string())
                .chain(row.iter().map(|v| v.to_string()))
                .collect(),
        );
    }
    let ncol = grid[0].len();
    let widths: Vec<usize> = (0..ncol)
        .map(|j| grid.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &grid {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(j, (c, &w))| {
                if j == 0 {
                    format!("{c:<w$}")
                } else {
                    format!("{c:>w$}")
                }
            })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn json_line(v: Value) -> String {
    format!("{v}\n")
}

fn lines(items: impl IntoIterator<Item = String>) -> String {
    items.into_iter().map(|s| s + "\n").collect()
}
