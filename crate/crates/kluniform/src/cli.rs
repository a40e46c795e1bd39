//! Command-line front end. Results go to `out`, diagnostics to `err`.
//!
//! Exit codes: 0 true or success, 1 false, 2 usage or input error,
//! 3 internal cross-check failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use kluniform_core::activity::all_activities;
use kluniform_core::constructors::{schubert, theorem4_construct, uniform};
use kluniform_core::iso::{find_minor, is_isomorphic};
use kluniform_core::tutte::{tutte_by_activities, tutte_by_deletion_contraction, tutte_by_deletion_contraction_memo};
use kluniform_core::uniformity::{
    is_almost_kl_uniform_tutte, is_excluded_minor_tutte, is_kl_uniform_flats, is_kl_uniform_minor,
    is_kl_uniform_tutte, uniformity_profile, DefinitionalOracle,
};
use kluniform_core::{KLPair, SchubertSpec, TuttePolynomial};

use crate::census::{monotonicity_violation, ratio_rows, render_table, Census, RecordStore, TableFormat};
use crate::error::Result;
use crate::format::{read_matroid, write_matroid};
use crate::memo::SharedMemo;
use crate::verify::{verify, VerifyConfig};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CROSS_CHECK: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "kluniform", version, about = "(k,l)-uniform matroids, Tutte coefficients and excluded minors")]
struct Cli {
    /// Worker threads for census and verify (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Tutte coefficients as `t[i][j]=c`.
    Tutte {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Algorithm::Activity)]
        algorithm: Algorithm,
        /// Cache deletion-contraction subproblems.
        #[arg(long)]
        memo: bool,
    },
    /// Print every basis with its internal and external activity.
    Activities { file: PathBuf },
    /// Test (k,l)-uniformity.
    Uniform {
        file: PathBuf,
        #[command(flatten)]
        kl: KLArgs,
        #[arg(long, value_enum, default_value_t = UniformMethod::Tutte)]
        method: UniformMethod,
    },
    /// Test almost-(k,l)-uniformity.
    Almost {
        file: PathBuf,
        #[command(flatten)]
        kl: KLArgs,
        #[arg(long, value_enum, default_value_t = DefMethod::Tutte)]
        method: DefMethod,
    },
    /// Test for an excluded minor of the almost-(k,l)-uniform matroids.
    Excluded {
        file: PathBuf,
        #[command(flatten)]
        kl: KLArgs,
        #[arg(long, value_enum, default_value_t = DefMethod::Tutte)]
        method: DefMethod,
    },
    /// Minimal (k,l) within bounds for which the matroid is (k,l)-uniform.
    Profile {
        file: PathBuf,
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        lmax: usize,
    },
    /// Emit a named matroid in the text format.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Isomorphism test; prints a certificate when one exists.
    Iso { a: PathBuf, b: PathBuf },
    /// Minor containment test; prints a witness when one exists.
    Minor { m: PathBuf, n: PathBuf },
    /// Counts of (k,l)-uniform matroids on {1..n}.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        lmax: usize,
        /// Revlex catalog of isomorphism class representatives.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        /// Record file reused and extended across runs.
        #[arg(long)]
        records: Option<PathBuf>,
    },
    /// Cross-check every predicate pair over all labeled matroids on {1..n}.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        lmax: usize,
        /// Also run every smaller ground set.
        #[arg(long)]
        all_sizes: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random relabelings per matroid.
        #[arg(long, default_value_t = 20)]
        permutations: usize,
    },
}

#[derive(Debug, clap::Args)]
struct KLArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    l: usize,
}

impl KLArgs {
    fn pair(&self) -> Result<KLPair> {
        Ok(KLPair::new(self.k, self.l)?)
    }
}

#[derive(Debug, Subcommand)]
enum Construct {
    /// U_{r,n}.
    Uniform { r: usize, n: usize },
    /// Bases Gale-above the comma-separated defining set.
    Schubert {
        n: usize,
        #[arg(value_delimiter = ',')]
        defining: Vec<usize>,
    },
    /// m-fold truncation of N ⊕ U_{r(N),|N|}.
    Theorem4 {
        file: PathBuf,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Algorithm {
    Activity,
    Dc,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum UniformMethod {
    Tutte,
    Flats,
    Minor,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DefMethod {
    Tutte,
    Def,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Tsv,
    Md,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                return EXIT_USAGE;
            }
            let _ = out.write_all(text.as_bytes());
            return EXIT_TRUE;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    match pool.install(|| dispatch(cli.command)) {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).and_then(|()| out.flush()).is_err() {
                return EXIT_USAGE;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn exit_for(value: bool) -> i32 {
    if value {
        EXIT_TRUE
    } else {
        EXIT_FALSE
    }
}

fn write_coefficients(out: &mut String, t: &TuttePolynomial) {
    for ((i, j), c) in t.terms() {
        writeln!(out, "t[{i}][{j}]={c}").expect("writing to a String");
    }
}

/// One `name=value` line per method; all must agree.
fn report_methods(results: &[(&str, bool)]) -> (String, i32) {
    let mut out = String::new();
    if let [(_, value)] = results {
        writeln!(out, "{value}").expect("writing to a String");
        return (out, exit_for(*value));
    }
    for (name, value) in results {
        writeln!(out, "{name}={value}").expect("writing to a String");
    }
    let first = results[0].1;
    if results.iter().all(|&(_, v)| v == first) {
        (out, exit_for(first))
    } else {
        out.push_str("methods disagree\n");
        (out, EXIT_CROSS_CHECK)
    }
}

fn dispatch(command: Command) -> Result<(String, i32)> {
    let mut out = String::new();
    match command {
        Command::Tutte { file, algorithm, memo } => {
            let m = read_matroid(&file)?;
            let dc = || {
                if memo {
                    tutte_by_deletion_contraction_memo(&m, &SharedMemo::new())
                } else {
                    tutte_by_deletion_contraction(&m)
                }
            };
            match algorithm {
                Algorithm::Activity => write_coefficients(&mut out, &tutte_by_activities(&m)),
                Algorithm::Dc => write_coefficients(&mut out, &dc()),
                Algorithm::Both => {
                    let (a, d) = (tutte_by_activities(&m), dc());
                    if a != d {
                        writeln!(out, "activity: {a}\ndeletion-contraction: {d}").expect("writing to a String");
                        return Ok((out, EXIT_CROSS_CHECK));
                    }
                    write_coefficients(&mut out, &a);
                }
            }
            Ok((out, EXIT_TRUE))
        }
        Command::Activities { file } => {
            let m = read_matroid(&file)?;
            for (b, a) in all_activities(&m) {
                writeln!(out, "{b} {} {}", a.internal, a.external).expect("writing to a String");
            }
            Ok((out, EXIT_TRUE))
        }
        Command::Uniform { file, kl, method } => {
            let kl = kl.pair()?;
            let m = read_matroid(&file)?;
            let mut results = Vec::new();
            if matches!(method, UniformMethod::Tutte | UniformMethod::All) {
                results.push(("tutte", is_kl_uniform_tutte(&m, kl)));
            }
            if matches!(method, UniformMethod::Flats | UniformMethod::All) {
                results.push(("flats", is_kl_uniform_flats(&m, kl)));
            }
            if matches!(method, UniformMethod::Minor | UniformMethod::All) {
                results.push(("minor", is_kl_uniform_minor(&m, kl)));
            }
            Ok(report_methods(&results))
        }
        Command::Almost { file, kl, method } => {
            let kl = kl.pair()?;
            let m = read_matroid(&file)?;
            let mut results = Vec::new();
            if method != DefMethod::Def {
                results.push(("tutte", is_almost_kl_uniform_tutte(&m, kl)));
            }
            if method != DefMethod::Tutte {
                results.push(("def", DefinitionalOracle::shallow(&m).is_almost(kl)));
            }
            Ok(report_methods(&results))
        }
        Command::Excluded { file, kl, method } => {
            let kl = kl.pair()?;
            let m = read_matroid(&file)?;
            let mut results = Vec::new();
            if method != DefMethod::Def {
                results.push(("tutte", is_excluded_minor_tutte(&m, kl)));
            }
            if method != DefMethod::Tutte {
                results.push(("def", DefinitionalOracle::new(&m).is_excluded_minor(kl)));
            }
            Ok(report_methods(&results))
        }
        Command::Profile { file, kmax, lmax } => {
            let m = read_matroid(&file)?;
            let profile = uniformity_profile(&m, kmax, lmax)?;
            if profile.minimal_pairs().is_empty() {
                out.push_str("none\n");
            }
            for kl in profile.minimal_pairs() {
                writeln!(out, "k={} l={}", kl.k(), kl.l()).expect("writing to a String");
            }
            Ok((out, EXIT_TRUE))
        }
        Command::Construct { what } => {
            let m = match what {
                Construct::Uniform { r, n } => uniform(r, n)?,
                Construct::Schubert { n, defining } => schubert(&SchubertSpec::new(n, &defining)?),
                Construct::Theorem4 { file, m } => theorem4_construct(&read_matroid(&file)?, m)?,
            };
            Ok((write_matroid(&m), EXIT_TRUE))
        }
        Command::Iso { a, b } => {
            let (a, b) = (read_matroid(&a)?, read_matroid(&b)?);
            match is_isomorphic(&a, &b) {
                Some(cert) => {
                    writeln!(out, "isomorphic: {cert}").expect("writing to a String");
                    Ok((out, EXIT_TRUE))
                }
                None => Ok(("not isomorphic\n".into(), EXIT_FALSE)),
            }
        }
        Command::Minor { m, n } => {
            let (m, n) = (read_matroid(&m)?, read_matroid(&n)?);
            match find_minor(&m, &n) {
                Some(w) => {
                    writeln!(out, "minor: contract {} delete {}\nmap: {}", w.contracted, w.deleted, w.certificate)
                        .expect("writing to a String");
                    Ok((out, EXIT_TRUE))
                }
                None => Ok(("no minor\n".into(), EXIT_FALSE)),
            }
        }
        Command::Census { n, kmax, lmax, catalog, format, records } => {
            census_command(n, kmax, lmax, catalog.as_deref(), format, records.as_deref())
        }
        Command::Verify { n, kmax, lmax, all_sizes, seed, permutations } => {
            let config = VerifyConfig { all_sizes, seed, permutations, ..VerifyConfig::new(n, kmax, lmax) };
            let report = verify(&config)?;
            let code = if report.all_passed() { EXIT_TRUE } else { EXIT_CROSS_CHECK };
            Ok((report.to_string(), code))
        }
    }
}

fn census_command(
    n: usize,
    k_max: usize,
    l_max: usize,
    catalog: Option<&Path>,
    format: Format,
    records: Option<&Path>,
) -> Result<(String, i32)> {
    let mut store = match records {
        Some(path) => RecordStore::load(path)?,
        None => RecordStore::default(),
    };
    let source = if catalog.is_some() {
        kluniform_core::census::Source::Catalog
    } else {
        kluniform_core::census::Source::BruteForce
    };
    let mut census: Option<Census> = None;
    let mut mismatch = None;
    let rows = ratio_rows(k_max, l_max, |kl| {
        if let Some(r) = store.get(n, kl, source) {
            return Ok(r);
        }
        if census.is_none() {
            census = Some(Census::load(n, catalog)?);
        }
        let c = census.as_ref().expect("just loaded");
        let record = c.count_uniform(kl);
        let from_classes = c.count_from_classes(kl);
        if record.labeled_count != from_classes.labeled_count && mismatch.is_none() {
            mismatch = Some((record, from_classes));
        }
        store.insert(record);
        Ok(record)
    })?;
    if let Some(path) = records {
        store.save(path)?;
    }
    let format = match format {
        Format::Tsv => TableFormat::Tsv,
        Format::Md => TableFormat::Markdown,
    };
    let mut out = render_table(&rows, format);
    let mut code = EXIT_TRUE;
    if let Some((brute, classes)) = mismatch {
        writeln!(
            out,
            "cross-check failed at {},{}: brute force {} vs class sum {}",
            brute.k, brute.l, brute.labeled_count, classes.labeled_count
        )
        .expect("writing to a String");
        code = EXIT_CROSS_CHECK;
    }
    let computed: Vec<_> = store.iter().filter(|r| r.n == n && r.source == source).copied().collect();
    if let Some((a, b)) = monotonicity_violation(&computed) {
        writeln!(
            out,
            "monotonicity failed: m({},{})={} > m({},{})={}",
            a.k, a.l, a.labeled_count, b.k, b.l, b.labeled_count
        )
        .expect("writing to a String");
        code = EXIT_CROSS_CHECK;
    }
    Ok((out, code))
}
