//! Command-line front end.

pub mod reproduce;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{fingerprint, is_iso_witness, matrix_from_text, matrix_to_text, Algebra};
use crate::catalog::{make_algebra, Family, FamilySpec};
use crate::cohomology::{cohomology_basis, form_to_vec, BilinearForm, Cocycle};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar};
use crate::extension::{central_extend, reconstruct};
use crate::orbitlab::{ff_iso_search, verify_action, verify_t_list};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "cexkit", version, about = "Second cohomology and central extensions of nilpotent algebras")]
struct Cli {
    /// Emit structured algebra/cocycle/matrix documents instead of plain text.
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimensions and bases of Z², B² and H².
    Cohomology { alg: String },
    /// Central extension by a cocycle file.
    Extend {
        alg: String,
        #[arg(long)]
        cocycle: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Structure constants of a catalog member such as `mu1_2:7` or `mu2_2:6:alpha=1/2`.
    Catalog { spec: String },
    /// Basis-independent invariants.
    Fingerprint { alg: String },
    /// Checks that a matrix maps A isomorphically onto B.
    IsoWitness {
        a: String,
        b: String,
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Exhaustive isomorphism search over F_p (dim ≤ 5, p ∈ {2, 3}).
    IsoSearch {
        a: String,
        b: String,
        #[arg(long)]
        field: u64,
    },
    /// Splits an algebra as a central extension of A / Ann(A).
    Reconstruct { alg: String },
    /// Compares the symbolic automorphism action with the stated formulas.
    VerifyAction {
        family: String,
        #[arg(long)]
        n: usize,
    },
    /// Orbit cases and extension list for s-dimensional subspaces.
    VerifyClassification {
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
    },
    /// Runs every acceptance criterion.
    ReproducePaper {
        #[arg(long)]
        n: Option<usize>,
    },
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    run_with(argv, &mut out, &mut err)
}

/// As [`run`], writing to the given streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    if let Err(e) = configure_threads() {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    match execute(&cli, out) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAIL,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn configure_threads() -> Result<()> {
    let Ok(v) = std::env::var("CEXKIT_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Parse(format!("CEXKIT_THREADS must be a positive integer, got `{v}`")))?;
    // a pool that is already set up (repeated calls in one process) is kept
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Reads `<alg>`: an existing file in the algebra text format, or a catalog spec.
pub fn load_algebra(arg: &str) -> Result<Algebra> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path)?;
        return Algebra::from_text(&text).map_err(|e| Error::Parse(format!("{arg}: {e}")));
    }
    let spec: FamilySpec = arg.parse().map_err(|e| match e {
        Error::InvalidSpec(m) => Error::InvalidSpec(format!("{m} (and no file named `{arg}`)")),
        e => e,
    })?;
    make_algebra(&spec)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let machine = cli.machine;
    match &cli.command {
        Command::Cohomology { alg } => {
            let a = load_algebra(alg)?;
            write!(out, "{}", cohomology_text(&a, machine)).map_err(io)?;
            Ok(true)
        }
        Command::Extend { alg, cocycle, output } => {
            let a = load_algebra(alg)?;
            let theta = Cocycle::from_text(&read(cocycle)?)?;
            let ext = central_extend(&a, &theta)?;
            match output {
                Some(p) => fs::write(p, ext.to_text()).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
                None => write!(out, "{}", ext.to_text()).map_err(io)?,
            }
            Ok(true)
        }
        Command::Catalog { spec } => {
            let spec: FamilySpec = spec.parse()?;
            write!(out, "{}", make_algebra(&spec)?.to_text()).map_err(io)?;
            Ok(true)
        }
        Command::Fingerprint { alg } => {
            let fp = fingerprint(&load_algebra(alg)?);
            if machine {
                let v = serde_json::to_string_pretty(&fp).map_err(|e| Error::Parse(e.to_string()))?;
                writeln!(out, "{v}").map_err(io)?;
            } else {
                writeln!(out, "{fp}").map_err(io)?;
            }
            Ok(true)
        }
        Command::IsoWitness { a, b, matrix } => {
            let (a, b) = (load_algebra(a)?, load_algebra(b)?);
            let m = matrix_from_text(&read(matrix)?)?;
            if m.rows() != a.dim() || m.cols() != b.dim() {
                return Err(Error::Dimension(format!(
                    "matrix is {}x{}, algebras have dimensions {} and {}",
                    m.rows(),
                    m.cols(),
                    a.dim(),
                    b.dim()
                )));
            }
            let ok = is_iso_witness(&a, &b, &m);
            writeln!(out, "{}", if ok { "witness verified" } else { "not an isomorphism" }).map_err(io)?;
            Ok(ok)
        }
        Command::IsoSearch { a, b, field } => {
            let (a, b) = (load_algebra(a)?, load_algebra(b)?);
            let r = ff_iso_search(&a, &b, *field)?;
            match (&r.witness, machine) {
                (Some(w), true) => {
                    let data = (0..w.n).flat_map(|i| (0..w.n).map(move |j| (i, j)));
                    let m = Matrix::from_data(w.n, w.n, data.map(|(i, j)| Scalar::from_int(w.get(i, j) as i64)).collect())?;
                    write!(out, "{}", matrix_to_text(&m)).map_err(io)?;
                }
                (None, true) => writeln!(out, "{}", json!({ "field": r.p, "witness": Value::Null })).map_err(io)?,
                _ => writeln!(out, "{r}").map_err(io)?,
            }
            Ok(r.witness.is_some())
        }
        Command::Reconstruct { alg } => {
            let r = reconstruct(&load_algebra(alg)?)?;
            if machine {
                let v = json!({
                    "a_prime": parse_json(&r.a_prime.to_text())?,
                    "theta": parse_json(&r.theta.to_text())?,
                    "witness": parse_json(&matrix_to_text(&r.witness))?,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&v).map_err(|e| Error::Parse(e.to_string()))?)
                    .map_err(io)?;
            } else {
                write!(
                    out,
                    "A':\n{}theta:\n{}witness (A -> A'_theta):\n{}",
                    r.a_prime.to_text(),
                    r.theta.to_text(),
                    matrix_to_text(&r.witness)
                )
                .map_err(io)?;
            }
            Ok(true)
        }
        Command::VerifyAction { family, n } => {
            let r = verify_action(family.parse::<Family>()?, *n)?;
            writeln!(out, "{r}").map_err(io)?;
            Ok(r.passed())
        }
        Command::VerifyClassification { family, n, s } => {
            let r = verify_t_list(family.parse::<Family>()?, *n, *s)?;
            writeln!(out, "{r}").map_err(io)?;
            Ok(r.passed())
        }
        Command::ReproducePaper { n } => {
            let mut all = true;
            for id in 1..=7 {
                let r = reproduce::criterion(id, *n)?;
                all &= r.passed();
                writeln!(out, "{r}").map_err(io)?;
                out.flush().map_err(io)?;
            }
            writeln!(out, "overall: {}", if all { "PASS" } else { "FAIL" }).map_err(io)?;
            Ok(all)
        }
    }
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn forms_text(n: usize, forms: &[BilinearForm]) -> String {
    Cocycle { dim: n, components: forms.to_vec() }.to_text()
}

fn form_line(f: &BilinearForm) -> String {
    let n = f.rows();
    let terms: Vec<String> = form_to_vec(f)
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let d = format!("D({},{})", k / n + 1, k % n + 1);
            if c.is_one() {
                d
            } else {
                format!("{}*{d}", c.pretty())
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// Output of `cohomology`; depends only on the structure constants.
pub fn cohomology_text(a: &Algebra, machine: bool) -> String {
    let n = a.dim();
    let h = cohomology_basis(a);
    let (z, b, hd) = h.dims();
    let z2: Vec<BilinearForm> = h.z2.basis_vectors().iter().map(|v| crate::cohomology::vec_to_form(n, v)).collect();
    let b2: Vec<BilinearForm> = h.b2.basis_vectors().iter().map(|v| crate::cohomology::vec_to_form(n, v)).collect();
    if machine {
        let v = json!({
            "dims": [z, b, hd],
            "z2": parse_json(&forms_text(n, &z2)).expect("cocycle text is JSON"),
            "b2": parse_json(&forms_text(n, &b2)).expect("cocycle text is JSON"),
            "h2": parse_json(&forms_text(n, &h.h2_reps)).expect("cocycle text is JSON"),
        });
        return format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"));
    }
    let mut s = format!("dim Z2 = {z}\ndim B2 = {b}\ndim H2 = {hd}\n");
    for (name, forms) in [("Z2", &z2), ("B2", &b2), ("H2", &h.h2_reps)] {
        s.push_str(&format!("{name} basis:\n"));
        for (k, f) in forms.iter().enumerate() {
            s.push_str(&format!("  [{}] {}\n", k + 1, form_line(f)));
        }
    }
    s
}
