//! `bigbracket`: check, derive and twist structures given as JSON files.
//!
//! Exit status: 0 when every check passes, 1 when a mathematical check
//! fails, 2 on unreadable or invalid input.

mod input;
mod output;

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use bigbracket::structures::{
    check_courant, check_lie_algebroid, check_poisson, check_pqn_background, cps_defect, decode_bracket,
    derive_pqn_from_pair, encode_algebroid, encode_tensor, nijenhuis_torsion, pqn_from_cps,
    quasi_bialgebroid_hamiltonian, Side,
};
use bigbracket::suites::{default_instances, run_suite, SUITES};
use bigbracket::tensor_oracle as oracle;
use bigbracket::{bracket, twist_exp, CheckReport, Condition, GradedPoly};
use clap::{Parser, Subcommand, ValueEnum};

use input::StructureFile;
use output::{Item, Outcome};

#[derive(Parser)]
#[command(name = "bigbracket", version, about = "Exact big-bracket checks of algebroid structures")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a structure read from FILE (`-` for stdin).
    Check {
        #[arg(value_enum)]
        what: CheckKind,
        file: PathBuf,
    },
    /// Derive a structure from simpler data.
    Derive {
        #[arg(value_enum)]
        what: DeriveKind,
        file: PathBuf,
    },
    /// Twist `{π,μ}` by `ω` and compare with the induced quasi-Lie bialgebroid.
    Twist { file: PathBuf },
    /// Nijenhuis torsion of `n`, from the bracket and from the tensor oracle.
    Torsion { file: PathBuf },
    /// Run a seeded randomized suite.
    Suite {
        #[arg(value_parser = suite_names())]
        name: String,
        #[arg(long, env = "BIGBRACKET_SEED", default_value_t = 0)]
        seed: u64,
        /// Defaults to the suite's own instance count.
        #[arg(long)]
        instances: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    LieAlgebroid,
    Poisson,
    PqnBackground,
    Cps,
    Courant,
}

#[derive(Clone, Copy, ValueEnum)]
enum DeriveKind {
    PqnFromPair,
}

fn suite_names() -> clap::builder::PossibleValuesParser {
    clap::builder::PossibleValuesParser::new(SUITES.iter().map(|(n, _)| *n))
}

fn read_file(path: &Path) -> Result<StructureFile> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
    } else {
        text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    }
    input::parse(&text)
}

/// Push the `{μ,μ} = 0` report; the caller stops when it fails.
fn lie_gate(mu: &GradedPoly, out: &mut Outcome) -> Result<bool> {
    let r = check_lie_algebroid(mu)?;
    let ok = r.passed();
    if !ok {
        out.reports.push(r);
    }
    Ok(ok)
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Check { what, file } => {
            let f = read_file(&file)?;
            let alg = f.load()?;
            let mu = encode_algebroid(&alg);
            let name = what.to_possible_value().unwrap().get_name().to_string();
            let mut out = Outcome::new(&format!("check {name}"));
            if let CheckKind::LieAlgebroid = what {
                out.reports.push(check_lie_algebroid(&mu)?);
                return Ok(out);
            }
            let (pi, quad, cps, h) = (
                f.tensor(&alg, "pi", !matches!(what, CheckKind::Poisson))?,
                f.quadruple(&alg)?,
                f.cps(&alg)?,
                f.tensor(&alg, "h", true)?,
            );
            if !lie_gate(&mu, &mut out)? {
                return Ok(out);
            }
            match what {
                CheckKind::LieAlgebroid => unreachable!(),
                CheckKind::Poisson => out.reports.push(check_poisson(&pi, &mu)?),
                CheckKind::PqnBackground => out.reports.push(check_pqn_background(&quad, &mu)?),
                CheckKind::Cps => {
                    let r = cps_defect(&cps, &mu, &h)?;
                    let ok = r.passed();
                    out.reports.push(r);
                    if ok {
                        let induced = pqn_from_cps(&cps, &mu, &h)?;
                        let mut r = check_pqn_background(&induced, &mu)?;
                        r.title = format!("{} induced by (π, N, σ)", r.title);
                        out.reports.push(r);
                        let file = StructureFile::from_parts(
                            &alg,
                            &[("pi", &induced.pi), ("n", &induced.n), ("psi", &induced.psi), ("h", &induced.h)],
                        );
                        out.items.push(("quadruple".into(), Item::File(Box::new(file))));
                    }
                }
                CheckKind::Courant => out.reports.push(check_courant(&cps, &mu, &h)?),
            }
            Ok(out)
        }
        Command::Derive { what: DeriveKind::PqnFromPair, file } => {
            let f = read_file(&file)?;
            let alg = f.load()?;
            let mu = encode_algebroid(&alg);
            let (pi, omega) = (f.tensor(&alg, "pi", false)?, f.tensor(&alg, "omega", false)?);
            let mut out = Outcome::new("derive pqn-from-pair");
            if !lie_gate(&mu, &mut out)? {
                return Ok(out);
            }
            let poisson = check_poisson(&pi, &mu)?;
            if !poisson.passed() {
                out.reports.push(poisson);
                return Ok(out);
            }
            let quad = derive_pqn_from_pair(&pi, &omega, &mu)?;
            out.reports.push(check_pqn_background(&quad, &mu)?);
            let file = StructureFile::from_parts(
                &alg,
                &[("pi", &quad.pi), ("n", &quad.n), ("psi", &quad.psi), ("h", &quad.h)],
            );
            out.items.push(("quadruple".into(), Item::File(Box::new(file))));
            Ok(out)
        }
        Command::Twist { file } => {
            let f = read_file(&file)?;
            let alg = f.load()?;
            let mu = encode_algebroid(&alg);
            let (pi, omega) = (f.tensor(&alg, "pi", false)?, f.tensor(&alg, "omega", false)?);
            let mut out = Outcome::new("twist");
            if !lie_gate(&mu, &mut out)? {
                return Ok(out);
            }
            let poisson = check_poisson(&pi, &mu)?;
            if !poisson.passed() {
                out.reports.push(poisson);
                return Ok(out);
            }
            let mu_pi = bracket(&encode_tensor(&pi), &mu)?;
            let twisted = twist_exp(&encode_tensor(&omega), &mu_pi)?;
            let quad = derive_pqn_from_pair(&pi, &omega, &mu)?;
            let s = quasi_bialgebroid_hamiltonian(&quad, &mu)?;
            let mut r = CheckReport::new("twisted hamiltonian");
            r.push(Condition::hamiltonian("twist", "S̃ − {π + N, μ + H} − ψ = 0", &twisted - &s));
            r.push(Condition::hamiltonian("quasi-bialgebroid", "{S̃,S̃} = 0", bracket(&twisted, &twisted)?));
            out.reports.push(r);
            out.items.push(("twisted".into(), Item::Text(twisted.to_string())));
            Ok(out)
        }
        Command::Torsion { file } => {
            let f = read_file(&file)?;
            let alg = f.load()?;
            let mu = encode_algebroid(&alg);
            let n = f.tensor(&alg, "n", false)?;
            let mut out = Outcome::new("torsion");
            if !lie_gate(&mu, &mut out)? {
                return Ok(out);
            }
            let t = nijenhuis_torsion(&n, &mu)?;
            let decoded = decode_bracket(&t, Side::Primal)?;
            let classical = oracle::torsion(&alg, &n);
            if decoded != classical {
                return Err(bigbracket::Error::Inconsistent("decoded T_N differs from the classical torsion".into()).into());
            }
            let mut r = CheckReport::new("Nijenhuis torsion");
            r.push(Condition::hamiltonian("nijenhuis", "½({N,{N,μ}} − {N²,μ}) = 0", t.clone()));
            r.push(Condition::tensor(
                "nijenhuis (tensor)",
                "[NX,NY] − N[NX,Y] − N[X,NY] + N²[X,Y] = 0",
                classical.nonzero_entries(),
            ));
            out.reports.push(r);
            out.items.push(("torsion".into(), Item::Text(t.to_string())));
            Ok(out)
        }
        Command::Suite { name, seed, instances } => {
            let k = instances.unwrap_or_else(|| default_instances(&name));
            if k == 0 {
                bail!("--instances must be positive");
            }
            let mut out = Outcome::new(&format!("suite {name}"));
            out.suite = Some(run_suite(&name, seed, k)?);
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli.command) {
        Ok(out) => {
            match format {
                Format::Text => print!("{}", out.text()),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json()).unwrap()),
            }
            ExitCode::from(if out.passed() { 0 } else { 1 })
        }
        Err(e) => {
            let code = match e.downcast_ref::<bigbracket::Error>() {
                Some(bigbracket::Error::Inconsistent(_)) => 1,
                _ => 2,
            };
            match format {
                Format::Text => eprintln!("error: {e:#}"),
                Format::Json => println!("{}", serde_json::json!({ "error": format!("{e:#}") })),
            }
            ExitCode::from(code)
        }
    }
}
