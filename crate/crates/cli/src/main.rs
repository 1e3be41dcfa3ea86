use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use mubforge::bases::{meb_family_d_lambda_d, mub_family_dd, mub_family_p_p2, BasisFamily};
use mubforge::designs::{builtin, DifferenceMatrix, BUILTINS};
use mubforge::hadamard::{fourier, hw_matrix, HadamardMatrix};
use mubforge::io::{dm_from_json, dm_to_json, family_from_json, family_to_json, report_to_json};
use mubforge::verify::{family_report, DEFAULT_TOLERANCE};

/// Build and verify mutually unbiased bases from difference matrices.
#[derive(Parser)]
#[command(name = "mubforge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in difference matrices.
    Catalog,
    /// Construct a difference matrix and write it as JSON.
    Gen {
        #[arg(long, value_enum)]
        construction: Construction,
        /// Field order for gf-mult and qq1.
        #[arg(long)]
        q: Option<usize>,
        /// Group order for cyclic-smallest-prime.
        #[arg(long)]
        d: Option<usize>,
        /// Built-in name.
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct a basis family and write it as JSON.
    Bases {
        /// DM file or built-in name.
        #[arg(long, conflicts_with = "theorem")]
        dm: Option<String>,
        /// Hadamard per row: fourier, hw (D^r F for row r) or hw:<m>.
        /// One value applies to every row.
        #[arg(long)]
        hadamard: Vec<String>,
        /// Order-lambda Hadamards for lambda >= 2 matrices.
        #[arg(long)]
        hadamard2: Vec<String>,
        /// Fixed family instead of a DM: p-p2 gives p+1 MUBs in C^p⊗C^(p²).
        #[arg(long, value_enum)]
        theorem: Option<Theorem>,
        /// Prime for --theorem p-p2.
        #[arg(long)]
        p: Option<usize>,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a basis-family file. Exit 0 on pass, 1 on failure, 2 on bad input.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
    /// Lower bounds on M(d,d) computed from the available difference matrices.
    Table1 {
        #[arg(long, env = "MUBFORGE_DM_DIR")]
        dm_dir: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
        /// Largest d whose bases are built and verified in full.
        #[arg(long, default_value_t = 40)]
        max_verify_dim: usize,
    },
    /// Read a DM file, re-verify it and write it back in canonical form.
    Ingest {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    GfMult,
    Qq1,
    CyclicSmallestPrime,
    Builtin,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    #[value(name = "p-p2")]
    PP2,
}

/// Failure carrying the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn check(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<mubforge::Error> for Failure {
    fn from(e: mubforge::Error) -> Self {
        Failure::input(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Catalog => catalog(),
        Command::Gen {
            construction,
            q,
            d,
            name,
            out,
        } => gen(construction, q, d, name, out),
        Command::Bases {
            dm,
            hadamard,
            hadamard2,
            theorem,
            p,
            out,
        } => bases(dm, &hadamard, &hadamard2, theorem, p, out),
        Command::Verify {
            input,
            report,
            tolerance,
        } => verify(&input, report.as_deref(), tolerance),
        Command::Table1 {
            dm_dir,
            tolerance,
            max_verify_dim,
        } => table1(dm_dir.as_deref(), tolerance, max_verify_dim),
        Command::Ingest {
            input,
            normalize,
            out,
        } => ingest(&input, normalize, out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("mubforge: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn check_out(out: &Option<PathBuf>) -> CliResult {
    if let Some(path) = out {
        let parent = path.parent().filter(|p| !p.as_os_str().is_empty());
        if let Some(dir) = parent {
            if !dir.is_dir() {
                return Err(Failure::input(format!(
                    "output directory {} does not exist",
                    dir.display()
                )));
            }
        }
    }
    Ok(())
}

fn emit(out: &Option<PathBuf>, text: &str) -> CliResult {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn catalog() -> CliResult {
    for info in BUILTINS {
        let m = builtin(info.name)?;
        let (d, n, lambda) = m.params();
        println!(
            "{} over {}  d={d} N={n} lambda={lambda}  {}",
            info.name,
            m.group().spec(),
            info.description
        );
    }
    Ok(())
}

fn require(value: Option<usize>, flag: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::input(format!("--{flag} is required for this construction")))
}

fn gen(
    construction: Construction,
    q: Option<usize>,
    d: Option<usize>,
    name: Option<String>,
    out: Option<PathBuf>,
) -> CliResult {
    check_out(&out)?;
    let m = match construction {
        Construction::GfMult => DifferenceMatrix::gf_mult(require(q, "q")?)?,
        Construction::Qq1 => DifferenceMatrix::qq1(require(q, "q")?)?,
        Construction::CyclicSmallestPrime => {
            DifferenceMatrix::cyclic_smallest_prime(require(d, "d")?)?
        }
        Construction::Builtin => {
            let name = name.ok_or_else(|| Failure::input("--name is required for builtin"))?;
            builtin(&name)?
        }
    };
    if let Some(v) = m.verify().violation {
        return Err(Failure::check(format!(
            "constructed matrix fails the difference check at rows {:?}",
            v.rows
        )));
    }
    emit(&out, &dm_to_json(&m))
}

fn load_dm(source: &str) -> Result<DifferenceMatrix, Failure> {
    if BUILTINS.iter().any(|b| b.name == source) {
        return Ok(builtin(source)?);
    }
    let text = fs::read_to_string(source)
        .map_err(|e| Failure::input(format!("cannot read DM {source}: {e}")))?;
    let m = dm_from_json(&text)?;
    if let Some(v) = m.verify().violation {
        return Err(Failure::input(format!(
            "{source} is not a difference matrix: rows {:?}, element {} occurs {} times, expected {}",
            v.rows, v.element, v.count, v.expected
        )));
    }
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Selector {
    Fourier,
    /// `D^r F̂` for row `r`.
    Hw,
    HwFixed(i64),
}

fn parse_selector(s: &str) -> Result<Selector, Failure> {
    match s {
        "fourier" => Ok(Selector::Fourier),
        "hw" => Ok(Selector::Hw),
        _ => s
            .strip_prefix("hw:")
            .and_then(|m| m.parse().ok())
            .map(Selector::HwFixed)
            .ok_or_else(|| Failure::input(format!("unknown Hadamard selector {s:?}"))),
    }
}

/// Hadamards of the given order for `rows`, one selector per row or one for all.
fn hadamards(
    selectors: &[String],
    order: usize,
    rows: &[usize],
) -> Result<Vec<HadamardMatrix>, Failure> {
    let parsed = selectors
        .iter()
        .map(|s| parse_selector(s))
        .collect::<Result<Vec<_>, _>>()?;
    let per_row: Vec<Selector> = match parsed.len() {
        0 => vec![Selector::Fourier; rows.len()],
        1 => vec![parsed[0]; rows.len()],
        n if n == rows.len() => parsed,
        n => {
            return Err(Failure::input(format!(
                "{n} Hadamard selectors for {} rows",
                rows.len()
            )))
        }
    };
    rows.iter()
        .zip(per_row)
        .map(|(&r, sel)| {
            Ok(match sel {
                Selector::Fourier => fourier(order)?,
                Selector::Hw => hw_matrix(order, r as i64)?,
                Selector::HwFixed(m) => hw_matrix(order, m)?,
            })
        })
        .collect()
}

fn bases(
    dm: Option<String>,
    hadamard: &[String],
    hadamard2: &[String],
    theorem: Option<Theorem>,
    p: Option<usize>,
    out: Option<PathBuf>,
) -> CliResult {
    check_out(&out)?;
    let family: BasisFamily = match (dm, theorem) {
        (None, Some(Theorem::PP2)) => {
            if !hadamard.is_empty() || !hadamard2.is_empty() {
                return Err(Failure::input("--theorem p-p2 fixes its Hadamard matrices"));
            }
            mub_family_p_p2(require(p, "p")?)?
        }
        (Some(source), None) => {
            let m = load_dm(&source)?;
            if m.lambda() == 1 {
                if !hadamard2.is_empty() {
                    return Err(Failure::input("--hadamard2 needs a lambda >= 2 matrix"));
                }
                let m = if m.is_normalized() { m } else { m.normalize()? };
                let rows: Vec<usize> = (0..m.n_rows()).collect();
                let hs = hadamards(hadamard, m.order(), &rows)?;
                mub_family_dd(&m, &hs)?
            } else {
                let id = m.group().identity();
                let has_identity_row = m.rows().iter().any(|r| r.iter().all(|&e| e == id));
                let n = m.n_rows() - usize::from(has_identity_row);
                let rows1: Vec<usize> = (1..n).collect();
                let rows2: Vec<usize> = (0..n).collect();
                let h1s = hadamards(hadamard, m.order(), &rows1)?;
                let h2s = hadamards(hadamard2, m.lambda(), &rows2)?;
                meb_family_d_lambda_d(&m, &h1s, &h2s)?
            }
        }
        _ => return Err(Failure::input("give exactly one of --dm or --theorem")),
    };
    emit(&out, &family_to_json(&family))
}

fn verify(input: &Path, report: Option<&Path>, tolerance: f64) -> CliResult {
    let write_report = |text: &str| -> CliResult {
        match report {
            Some(path) => fs::write(path, text)
                .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display()))),
            None => Ok(()),
        }
    };
    let failed_input = |message: String| -> Failure {
        let body = serde_json::json!({ "error": message, "passed": false });
        let _ = write_report(&format!(
            "{}\n",
            serde_json::to_string_pretty(&body).unwrap()
        ));
        Failure::input(message)
    };
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(failed_input(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    let text = fs::read_to_string(input)
        .map_err(|e| failed_input(format!("cannot read {}: {e}", input.display())))?;
    let family = family_from_json(&text).map_err(|e| failed_input(e.to_string()))?;
    let r = family_report(&family, tolerance).map_err(|e| failed_input(e.to_string()))?;
    write_report(&report_to_json(&r))?;
    println!("{}", r.summary);
    if r.passed {
        println!("PASS at tolerance {tolerance:e}");
        Ok(())
    } else {
        Err(Failure::check(format!(
            "verification failed at tolerance {tolerance:e}"
        )))
    }
}

/// `(d, N)` of the `(d,N,1)`-DMs behind each table1 row.
const TABLE1_NEEDS: [(usize, usize); 10] = [
    (12, 6),
    (21, 6),
    (24, 8),
    (33, 6),
    (39, 6),
    (48, 9),
    (51, 6),
    (57, 7),
    (75, 8),
    (273, 16),
];

/// Valid `λ = 1` matrices found in `dir`, keyed by file name.
fn scan_dm_dir(dir: &Path) -> Result<Vec<(String, DifferenceMatrix)>, Failure> {
    let entries = fs::read_dir(dir)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let mut found = Vec::new();
    for path in paths {
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        let parsed = fs::read_to_string(&path)
            .map_err(mubforge::Error::from)
            .and_then(|t| dm_from_json(&t));
        match parsed {
            Ok(m) if m.lambda() == 1 && m.is_valid() => found.push((name, m)),
            Ok(_) => eprintln!("mubforge: skipping {name}: not a valid lambda = 1 DM"),
            Err(e) => eprintln!("mubforge: skipping {name}: {e}"),
        }
    }
    Ok(found)
}

fn table1(dm_dir: Option<&Path>, tolerance: f64, max_verify_dim: usize) -> CliResult {
    let mut pool: Vec<(String, DifferenceMatrix)> = BUILTINS
        .iter()
        .map(|b| Ok((format!("built-in {}", b.name), builtin(b.name)?)))
        .collect::<Result<Vec<_>, Failure>>()?
        .into_iter()
        .filter(|(_, m)| m.lambda() == 1)
        .collect();
    if let Some(dir) = dm_dir {
        pool.extend(scan_dm_dir(dir)?);
    }
    println!("{:>5}  {:>10}  source", "d", "M(d,d) >=");
    for (d, n_needed) in TABLE1_NEEDS {
        let best = pool
            .iter()
            .filter(|(_, m)| m.order() == d)
            .max_by_key(|(_, m)| m.n_rows());
        let Some((source, m)) = best else {
            println!("{d:>5}  {:>10}  needs ({d},{n_needed},1)-DM file", "-");
            continue;
        };
        let m = m.normalize()?;
        let short = if m.n_rows() < n_needed {
            format!("; a ({d},{n_needed},1)-DM file would give {}", n_needed - 1)
        } else {
            String::new()
        };
        if d > max_verify_dim {
            println!(
                "{d:>5}  {:>10}  {source}, ({d},{},1)-DM verified; bases not built above d = {max_verify_dim}{short}",
                m.n_rows() - 1,
                m.n_rows()
            );
            continue;
        }
        let hs = vec![fourier(d)?; m.n_rows()];
        let family = mub_family_dd(&m, &hs)?;
        let r = family_report(&family, tolerance)?;
        if r.passed {
            println!(
                "{d:>5}  {:>10}  {source}, {} bases verified at {tolerance:e}{short}",
                r.unbiased_meb_count,
                family.bases.len()
            );
        } else {
            println!("{d:>5}  {:>10}  {source}, verification FAILED", "-");
        }
    }
    Ok(())
}

fn ingest(input: &Path, normalize: bool, out: Option<PathBuf>) -> CliResult {
    check_out(&out)?;
    let text = fs::read_to_string(input)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", input.display())))?;
    let m = dm_from_json(&text)?;
    if let Some(v) = m.verify().violation {
        return Err(Failure::check(format!(
            "not a difference matrix: rows {:?}, element {} occurs {} times, expected {}",
            v.rows, v.element, v.count, v.expected
        )));
    }
    let (d, n, lambda) = m.params();
    eprintln!(
        "valid ({d},{n},{lambda})-DM over {}{}",
        m.group().spec(),
        if m.is_normalized() {
            ", normalized"
        } else {
            ""
        }
    );
    let m = if normalize { m.normalize()? } else { m };
    emit(&out, &dm_to_json(&m))
}
