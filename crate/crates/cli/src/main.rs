use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hesskit::polyalg::{self, MonomialOrder};
use hesskit::regnilp::{self, check_identities, sweep};
use hesskit::{
    render, springer, Error, Filling, HessenbergFunction, LabeledTree, Monomial, Shape, SizeCap,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "hesskit",
    version,
    about = "Fillings, trees and monomial bases for Hessenberg varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,

    /// Largest n accepted by enumerating commands.
    #[arg(long, env = "HESSKIT_MAX_N", default_value_t = SizeCap::DEFAULT.0, global = true)]
    max_n: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TreeKind {
    Gp,
    ModifiedGp,
    H,
    HTableau,
}

#[derive(Subcommand)]
enum Command {
    /// List permissible fillings with dimension pairs and monomials.
    Fillings {
        #[arg(long)]
        h: HessenbergFunction,
        #[arg(long)]
        mu: Shape,
    },
    /// Betti numbers and Poincaré polynomial.
    Betti {
        #[arg(long)]
        h: HessenbergFunction,
        #[arg(long)]
        mu: Shape,
    },
    /// Build a GP-tree (needs --mu) or an h-tree (needs --h).
    Tree {
        #[arg(long)]
        kind: TreeKind,
        #[arg(long)]
        h: Option<HessenbergFunction>,
        #[arg(long)]
        mu: Option<Shape>,
    },
    /// Generators of J_h.
    Ideal {
        #[arg(long)]
        h: HessenbergFunction,
        /// Print the leading-term ideal instead.
        #[arg(long)]
        leading: bool,
    },
    /// Monomial basis: B_h for --h, the Garsia-Procesi basis for --mu.
    Basis {
        #[arg(long, conflicts_with = "mu", required_unless_present = "mu")]
        h: Option<HessenbergFunction>,
        #[arg(long)]
        mu: Option<Shape>,
    },
    /// Map a filling to its monomial.
    Phi {
        #[arg(long)]
        h: HessenbergFunction,
        /// Expected shape; defaults to the filling's own.
        #[arg(long)]
        mu: Option<Shape>,
        /// Rows separated by `/`, e.g. `12/36/45`, or a bare word for one row.
        #[arg(long)]
        filling: String,
    },
    /// Map a Garsia-Procesi basis monomial to a row-strict filling.
    Psi {
        #[arg(long)]
        mu: Shape,
        #[arg(long)]
        monomial: String,
    },
    /// Map a monomial of B_h to a one-row filling.
    Psih {
        #[arg(long)]
        h: HessenbergFunction,
        #[arg(long)]
        monomial: String,
    },
    /// Check the counting identities for one h or every h of size N.
    Verify {
        #[arg(long, conflicts_with = "all_n", required_unless_present = "all_n")]
        h: Option<HessenbergFunction>,
        #[arg(long)]
        all_n: Option<usize>,
    },
}

enum Failed {
    Lib(Error),
    Usage(String),
    Check(String),
}

impl From<Error> for Failed {
    fn from(e: Error) -> Self {
        Failed::Lib(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failed::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::SizeLimitExceeded { .. } => 3,
                Error::NotInBasis(_) => 4,
                _ => 2,
            })
        }
        Err(Failed::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failed::Check(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
    }
}

fn json_out(v: serde_json::Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
}

fn format_or(cli: &Cli, default: Format, allowed: &[Format]) -> Result<Format, Failed> {
    let f = cli.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Failed::Usage(
            "this command does not support the requested --format".into(),
        ))
    }
}

fn run(cli: &Cli) -> Result<String, Failed> {
    let cap = SizeCap(cli.max_n);
    let plain_json = [Format::Plain, Format::Json];
    match &cli.command {
        Command::Fillings { h, mu } => {
            check_size(h, mu)?;
            let records = render::filling_records(h, mu, cap)?;
            Ok(match format_or(cli, Format::Plain, &plain_json)? {
                Format::Json => json_out(render::fillings_json(&records)),
                _ => render::fillings_plain(&records),
            })
        }
        Command::Betti { h, mu } => {
            check_size(h, mu)?;
            Ok(match format_or(cli, Format::Plain, &plain_json)? {
                Format::Json => {
                    let b = hesskit::betti_numbers(h, mu, cap)?;
                    json_out(json!({ "betti": b, "poincare": hesskit::poincare_polynomial(&b) }))
                }
                _ => render::betti_plain(h, mu, cap)?,
            })
        }
        Command::Tree { kind, h, mu } => {
            let tree: LabeledTree = match (kind, h, mu) {
                (TreeKind::Gp, None, Some(mu)) => springer::build_gp_tree(mu, cap)?,
                (TreeKind::ModifiedGp, None, Some(mu)) => {
                    springer::build_modified_gp_tree(mu, cap)?
                }
                (TreeKind::H, Some(h), None) => regnilp::build_h_tree(h, cap)?,
                (TreeKind::HTableau, Some(h), None) => regnilp::build_h_tableau_tree(h, cap)?,
                (TreeKind::Gp | TreeKind::ModifiedGp, _, _) => {
                    return Err(Failed::Usage(
                        "gp and modified-gp trees take --mu only".into(),
                    ))
                }
                _ => return Err(Failed::Usage("h and h-tableau trees take --h only".into())),
            };
            Ok(match cli.format.unwrap_or(Format::Dot) {
                Format::Dot => tree.to_dot(),
                Format::Json => json_out(tree.to_json()),
                Format::Plain => tree.to_outline(),
            })
        }
        Command::Ideal { h, leading } => {
            let gens = polyalg::jh_generators(h);
            let fmt = format_or(cli, Format::Plain, &plain_json)?;
            if *leading {
                let lts = polyalg::leading_monomials(&gens)?;
                return Ok(match fmt {
                    Format::Json => {
                        json_out(json!(lts.iter().map(|m| m.to_string()).collect::<Vec<_>>()))
                    }
                    _ => {
                        let parts: Vec<String> = lts.iter().map(|m| m.to_string()).collect();
                        format!("<{}>\n", parts.join(", "))
                    }
                });
            }
            Ok(match fmt {
                Format::Json => {
                    json_out(json!(gens.iter().map(|g| g.to_json()).collect::<Vec<_>>()))
                }
                _ => render::polynomials_plain(&gens),
            })
        }
        Command::Basis { h, mu } => {
            let basis = match (h, mu) {
                (Some(h), _) => {
                    cap.check(h.n())?;
                    let gens = polyalg::jh_generators(h);
                    let standard = polyalg::standard_monomials(&gens, MonomialOrder::Lex)?;
                    let staircase = regnilp::b_h_basis(h);
                    if standard != staircase {
                        return Err(Error::Invariant(
                            "standard monomials differ from the staircase".into(),
                        )
                        .into());
                    }
                    staircase
                }
                (None, Some(mu)) => springer::garsia_procesi_basis(mu, cap)?,
                (None, None) => unreachable!("clap requires one of --h/--mu"),
            };
            Ok(match format_or(cli, Format::Plain, &plain_json)? {
                Format::Json => json_out(render::basis_json(basis)),
                _ => render::basis_plain(basis),
            })
        }
        Command::Phi { h, mu, filling } => {
            let t = Filling::parse(filling)?;
            if let Some(mu) = mu {
                if mu.rows() != t.shape().rows() {
                    return Err(Error::InvalidFilling(format!(
                        "filling has shape {}, not {mu}",
                        t.shape()
                    ))
                    .into());
                }
            }
            let pairs = hesskit::dimension_pairs(h, &t)?;
            let m = hesskit::phi(h, &t)?;
            Ok(match format_or(cli, Format::Plain, &plain_json)? {
                Format::Json => {
                    json_out(json!({ "filling": t, "pairs": pairs, "monomial": m.to_string() }))
                }
                _ => format!("{m}\n"),
            })
        }
        Command::Psi { mu, monomial } => {
            let m = Monomial::parse(monomial, mu.n())?;
            filling_out(cli, springer::psi(mu, &m)?)
        }
        Command::Psih { h, monomial } => {
            let m = Monomial::parse(monomial, h.n())?;
            filling_out(cli, regnilp::psi_h(h, &m)?)
        }
        Command::Verify { h, all_n } => {
            let (checked, failures) = match (h, all_n) {
                (Some(h), _) => {
                    cap.check(h.n())?;
                    let failures = check_identities(h, cap)
                        .err()
                        .map(|reason| regnilp::Failure {
                            h: h.clone(),
                            reason,
                        })
                        .into_iter()
                        .collect();
                    (1, failures)
                }
                (None, Some(n)) => {
                    if *n == 0 {
                        return Err(Failed::Usage("--all-n must be at least 1".into()));
                    }
                    cap.check(*n)?;
                    sweep(*n, |h| check_identities(h, cap))
                }
                (None, None) => unreachable!("clap requires one of --h/--all-n"),
            };
            let mut out = String::new();
            for f in &failures {
                out.push_str(&format!("FAIL {}: {}\n", f.h, f.reason));
            }
            let noun = if checked == 1 {
                "function"
            } else {
                "functions"
            };
            out.push_str(&format!(
                "{checked} {noun} checked, {} failures\n",
                failures.len()
            ));
            if failures.is_empty() {
                Ok(out)
            } else {
                Err(Failed::Check(out))
            }
        }
    }
}

fn check_size(h: &HessenbergFunction, mu: &Shape) -> Result<(), Failed> {
    if h.n() != mu.n() {
        return Err(Error::SizeMismatch {
            expected: h.n(),
            found: mu.n(),
        }
        .into());
    }
    Ok(())
}

fn filling_out(cli: &Cli, t: Filling) -> Result<String, Failed> {
    Ok(
        match format_or(cli, Format::Plain, &[Format::Plain, Format::Json])? {
            Format::Json => json_out(json!(t)),
            _ => format!("{t}\n"),
        },
    )
}
