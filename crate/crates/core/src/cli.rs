//! The `chevalley` command line.
//!
//! Exit codes: 0 success, 1 a verification suite failed, 2 bad usage or
//! unreadable input.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::canonical::build_inductive;
use crate::cartan::{build_cartan, default_epsilon, folding_source, standard_automorphism, CartanType, SignFunction};
use crate::closed_form::build_closed_table;
use crate::error::{Error, Result};
use crate::folding::{fold, folded_table, folded_type};
use crate::io::{Provenance, TableDocument};
use crate::report::VerificationReport;
use crate::roots::{generate_roots, Root};
use crate::table::BracketTable;
use crate::verify::{canonical_relations, chevalley_audit, differential, jacobi_sweep, sl_n_compare, RootMap};

#[derive(Parser, Debug)]
#[command(name = "chevalley", version, about = "Canonical Chevalley bases of the simple Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the structure constant table of a type.
    Gen {
        /// Type and rank, e.g. E8, g2, B3.
        #[arg(long = "type")]
        ty: CartanType,
        #[arg(long, value_enum, default_value_t = EpsilonChoice::Default)]
        epsilon: EpsilonChoice,
        /// Defaults to `closed` for A, D, E and `fold` for B, C, F, G.
        #[arg(long, value_enum)]
        method: Option<Method>,
        #[command(flatten)]
        output: Output,
    },
    /// Fold a simply-laced type along its diagram automorphism.
    Fold {
        /// Parent type: A(2n-1), D(n+1), D4 or E6.
        #[arg(long = "type")]
        ty: CartanType,
        /// Automorphism order; D4 folds to G2 with 3 (default) and to B3 with 2.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value_t = EpsilonChoice::Default)]
        epsilon: EpsilonChoice,
        #[command(flatten)]
        output: Output,
    },
    /// Run verification suites on a table file.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Comma-separated subset of jacobi, chevalley, canonical,
        /// differential, slN. Defaults to all that apply.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<Suite>,
        /// Print the reports as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Print one structure constant and the root string behind it.
    Show {
        #[arg(long = "in")]
        input: PathBuf,
        /// Root as compact digits (`1110`, `-0110`) or comma separated.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Root,
        #[arg(long, allow_hyphen_values = true)]
        beta: Root,
    },
}

#[derive(clap::Args, Debug)]
struct Output {
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum EpsilonChoice {
    Default,
    Flipped,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Inductive,
    Closed,
    Fold,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    Jacobi,
    Chevalley,
    Canonical,
    Differential,
    #[value(name = "slN", alias = "sln")]
    SlN,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Runs the command line on `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    match command {
        Command::Gen { ty, epsilon, method, output } => {
            let method = method.unwrap_or(if ty.is_simply_laced() { Method::Closed } else { Method::Fold });
            let (table, provenance) = generate(ty, epsilon, method)?;
            emit(&TableDocument::from_table(&table, provenance), &output, out)
        }
        Command::Fold { ty, order, epsilon, output } => {
            let cm = build_cartan(ty);
            let order = match order {
                Some(d) => d,
                None => standard_automorphism(&cm)?.order(),
            };
            let target = folded_type(ty, order)?;
            if target == ty {
                return Err(Failure::Usage(format!("{ty} has no folding of order {order}")));
            }
            let (table, provenance) = generate(target, epsilon, Method::Fold)?;
            emit(&TableDocument::from_table(&table, provenance), &output, out)
        }
        Command::Verify { input, suite, json } => verify(&input, &suite, json, out),
        Command::Show { input, alpha, beta } => show(&input, &alpha, &beta, out),
    }
}

fn epsilon_for(cm: &crate::cartan::CartanMatrix, choice: EpsilonChoice) -> SignFunction {
    let eps = default_epsilon(cm);
    match choice {
        EpsilonChoice::Default => eps,
        EpsilonChoice::Flipped => eps.flip(),
    }
}

fn generate(ty: CartanType, epsilon: EpsilonChoice, method: Method) -> Result<(BracketTable, Provenance)> {
    match method {
        Method::Inductive => {
            let cm = build_cartan(ty);
            let eps = epsilon_for(&cm, epsilon);
            Ok((build_inductive(&generate_roots(&cm), &eps)?, Provenance::Inductive))
        }
        Method::Closed => {
            if !ty.is_simply_laced() {
                return Err(Error::IllegalType(format!("{ty} with --method closed; the closed formula covers A, D, E (use --method fold)")));
            }
            let cm = build_cartan(ty);
            let eps = epsilon_for(&cm, epsilon);
            Ok((build_closed_table(&generate_roots(&cm), &eps)?, Provenance::ClosedForm))
        }
        Method::Fold => {
            let (parent, auto) = folding_source(ty)?;
            let eps = epsilon_for(&parent, epsilon);
            let fs = fold(&generate_roots(&parent), &eps, &auto)?;
            let provenance = Provenance::Folded {
                parent: parent.cartan_type().to_string(),
                automorphism: auto.labelled_orbits(),
            };
            Ok((folded_table(&fs)?, provenance))
        }
    }
}

fn emit(doc: &TableDocument, output: &Output, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let text = match output.format {
        Format::Json => doc.to_json(),
        Format::Csv => doc.to_csv(),
    };
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| Failure::Usage(e.to_string())),
    }
}

fn load(path: &PathBuf) -> std::result::Result<(TableDocument, BracketTable), Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let doc = TableDocument::from_json(&text)?;
    let table = doc.to_table()?;
    Ok((doc, table))
}

/// The table of the same type and sign function built by the other route.
fn independent_table(doc: &TableDocument, t: &BracketTable) -> Result<BracketTable> {
    let ty = t.root_system().cartan().cartan_type();
    let choice = if t.epsilon() == &default_epsilon(t.root_system().cartan()) { EpsilonChoice::Default } else { EpsilonChoice::Flipped };
    let method = match doc.provenance {
        Provenance::Inductive if ty.is_simply_laced() => Method::Closed,
        Provenance::Inductive => Method::Fold,
        _ => Method::Inductive,
    };
    generate(ty, choice, method).map(|(table, _)| table)
}

fn verify(input: &PathBuf, suites: &[Suite], json: bool, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let (doc, table) = load(input)?;
    let is_a = table.root_system().cartan().cartan_type().family() == crate::cartan::Family::A;
    let suites: Vec<Suite> = if suites.is_empty() {
        let mut s = vec![Suite::Jacobi, Suite::Chevalley, Suite::Canonical, Suite::Differential];
        if is_a {
            s.push(Suite::SlN);
        }
        s
    } else {
        suites.to_vec()
    };
    let mut reports: Vec<VerificationReport> = Vec::new();
    for suite in suites {
        let report = match suite {
            Suite::Jacobi => jacobi_sweep(&table),
            Suite::Chevalley => chevalley_audit(&table),
            Suite::Canonical => canonical_relations(&table),
            Suite::Differential => {
                let other = independent_table(&doc, &table)?;
                differential(&table, &other, &RootMap::identity(table.root_system().len()))?
            }
            Suite::SlN if is_a => sl_n_compare(&table)?,
            Suite::SlN => return Err(Failure::Usage(format!("slN applies to type A tables, not {}", doc.type_label))),
        };
        reports.push(report);
    }
    let write = |out: &mut dyn Write, s: String| out.write_all(s.as_bytes()).map_err(|e| Failure::Usage(e.to_string()));
    if json {
        write(out, serde_json::to_string(&reports).expect("reports serialize") + "\n")?;
    } else {
        for r in &reports {
            write(out, format!("{r}\n"))?;
        }
    }
    if reports.iter().all(VerificationReport::passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn show(input: &PathBuf, alpha: &Root, beta: &Root, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let (_, t) = load(input)?;
    let rs = t.root_system();
    let find = |r: &Root| rs.find(r).ok_or_else(|| Failure::Usage(format!("{r} is not a root of {}", rs.cartan().cartan_type())));
    let (a, b) = (find(alpha)?, find(beta)?);
    let mut text = format!("alpha = {}, beta = {}\n", rs.root(a), rs.root(b));
    if a == b {
        text.push_str("N = 0 (alpha = beta)\n");
    } else if b == rs.neg(a) {
        let sign = if rs.height(a) % 2 == 0 { 1 } else { -1 };
        let coords: Vec<i64> = t.opposite(a).iter().map(|c| sign * c).collect();
        text.push_str(&format!("[e_alpha, e_-alpha] = (-1)^{} h_alpha, h_alpha = {:?} over h_i\n", rs.height(a), t.opposite(a)));
        text.push_str(&format!("bracket = {coords:?} over h_i\n"));
    } else {
        let (p, q) = rs.string_lengths(a, b)?;
        match rs.sum(a, b) {
            Some(s) => text.push_str(&format!("alpha + beta = {}\nN = {}\n", rs.root(s), t.constant(a, b))),
            None => text.push_str("alpha + beta is not a root\nN = 0\n"),
        }
        let string: Vec<String> = (-q..=p)
            .map(|k| Root::new(rs.root(b).coeffs().iter().zip(rs.root(a).coeffs()).map(|(y, x)| y + k * x).collect()).to_string())
            .collect();
        text.push_str(&format!("alpha-string through beta (q = {q}, p = {p}): {}\n", string.join(" ")));
    }
    out.write_all(text.as_bytes()).map_err(|e| Failure::Usage(e.to_string()))
}
