//! Command-line front end. [`run`] is what the `lacunary` binary calls; it is
//! exposed so the whole command surface can be exercised in-process.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::arith::first_primes;
use crate::bohr;
use crate::error::{Error, Result};
use crate::io::{
    bezout_from_json, bezout_to_json, parse_basis, poly_to_json, AnyPoly, AnySeries, BezoutJson,
    PolyJson, WireScalar,
};
use crate::scalar::{Backend, ExactComplex, C64};
use crate::semigroup::{atoms, sieve_expr, MembershipSieve, SemigroupSpec, SetExpr, SieveJson, DEFAULT_MAX_N};
use crate::series::{
    abscissa_estimates, evaluate, fejer_smooth, l_series, multiplier_ratio_max, sup_norm_lower_bound, zeta_s,
    HalfPlanePoint,
};
use crate::stable_rank::{unimodular_tuple, verify_bezout, BezoutSystem};

/// Environment variable holding the largest truncation any command may build.
pub const MAX_N_ENV: &str = "LACUNARY_MAX_N";

#[derive(Debug, Parser)]
#[command(name = "lacunary", version, about = "Truncated Dirichlet series on multiplicative semigroups")]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Semigroup expression, e.g. `coprime(6)`, `gen(2,3)`, `and(coprime(2),powers(3))`, `{1,2,3}`.
    #[arg(long, global = true)]
    pub spec: Option<String>,
    /// Truncation N (for `bezout`: the tuple size n).
    #[arg(long = "n", global = true)]
    pub n: Option<usize>,
    /// Backend for generated series; inputs keep theirs unless converted to float.
    #[arg(long, global = true)]
    pub backend: Option<Backend>,
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Input file (`-` for stdin); repeat for binary commands.
    #[arg(long = "in", global = true)]
    pub inputs: Vec<PathBuf>,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Members of `--spec` up to `--n`.
    Sieve,
    /// Atoms and unique-factorization verdict for `--spec` up to `--n`.
    Atoms,
    /// Closure check of `--spec` (or a sieve JSON via `--in`).
    Closure,
    /// Dirichlet convolution of two series.
    Conv,
    /// Convolution inverse of a series with nonzero constant term.
    Invert,
    /// Coefficient norms and lower bounds for the sup norm.
    Norms {
        #[arg(long, default_value_t = 16)]
        trials: usize,
    },
    /// Evaluate at every point of the grid `--sigma` x `--t`.
    Eval {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        sigma: Vec<f64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "0")]
        t: Vec<f64>,
        /// ℓ² norm of the discarded tail, for a rigorous error bound.
        #[arg(long)]
        residual: Option<f64>,
    },
    /// Lacunary zeta of `--spec` truncated at `--n`.
    #[command(name = "zeta-s")]
    ZetaS,
    /// L-series of the principal character mod `--m`.
    Lseries {
        #[arg(long)]
        m: u64,
    },
    /// Fejér mollification with parameter `--m`.
    Fejer {
        #[arg(long)]
        m: f64,
    },
    /// Bohr lift to a polynomial over `--basis`.
    Lift {
        #[arg(long, default_value = "primes")]
        basis: String,
    },
    /// Drop a polynomial back to a series truncated at `--n`.
    Drop,
    /// Homogeneous parts of a polynomial.
    Homog,
    /// Unimodular tuple with cofactors, or verification of a system given via `--in`.
    Bezout {
        #[arg(long, value_delimiter = ',')]
        gens: Option<Vec<u64>>,
        /// Truncation, at least the product of the generators.
        #[arg(long)]
        trunc: Option<usize>,
    },
    /// Heuristic abscissa estimates.
    Abscissa,
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
///
/// Exit codes: 0 success, 1 mathematical precondition failure, 2 usage, I/O or
/// configuration failure. Errors are reported on `stderr` as `{"error", "message"}`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            report(stderr, "usage", &e.to_string());
            return 2;
        }
    };
    let ceiling = match std::env::var(MAX_N_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(c) if c >= 1 => c,
            _ => {
                report(stderr, "parse", &format!("{MAX_N_ENV} must be a positive integer, got {v:?}"));
                return 2;
            }
        },
        Err(_) => DEFAULT_MAX_N,
    };
    let session = Session { opts: &cli.opts, ceiling };
    match session.dispatch(&cli.command).and_then(|out| session.write(out, stdout)) {
        Ok(Status::Done) => 0,
        Ok(Status::Failed(message)) => {
            report(stderr, "verification_failed", &message);
            1
        }
        Err(e) => {
            report(stderr, e.kind(), &e.to_string());
            if e.is_config() {
                2
            } else {
                1
            }
        }
    }
}

fn report(stderr: &mut dyn Write, kind: &str, message: &str) {
    let _ = writeln!(stderr, "{}", json!({ "error": kind, "message": message.trim_end() }));
}

enum Status {
    Done,
    Failed(String),
}

struct Output {
    json: String,
    csv: Option<String>,
    failure: Option<String>,
}

impl Output {
    fn json(value: impl Serialize) -> Result<Self> {
        let mut json = serde_json::to_string_pretty(&value)?;
        json.push('\n');
        Ok(Output { json, csv: None, failure: None })
    }

    fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }

    fn series(f: &AnySeries) -> Result<Self> {
        let mut csv = String::from("n,abs\n");
        for (n, a) in f.magnitudes() {
            let _ = writeln!(csv, "{n},{a}");
        }
        Ok(Output::json(f.to_json())?.with_csv(csv))
    }
}

struct Session<'a> {
    opts: &'a GlobalOpts,
    ceiling: usize,
}

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
    }
}

#[derive(Serialize)]
struct ClosureReport {
    spec: String,
    #[serde(rename = "N")]
    n: usize,
    closed: bool,
    violations: Vec<(u64, u64, u64)>,
}

#[derive(Serialize)]
struct AtomsOut {
    spec: String,
    #[serde(rename = "N")]
    n: usize,
    atoms: Vec<u64>,
    unique_factorization: bool,
    counterexample: Option<u64>,
    skipped: usize,
}

#[derive(Serialize)]
struct NormsOut {
    #[serde(rename = "N")]
    n: usize,
    backend: Backend,
    nonzero: usize,
    l1: f64,
    l2: f64,
    max_abs: f64,
    sup_lower_bound: f64,
    multiplier_lower_bound: f64,
    trials: usize,
    seed: u64,
}

#[derive(Serialize)]
struct EvalPoint {
    sigma: f64,
    t: f64,
    re: f64,
    im: f64,
    abs: f64,
    tail_bound: f64,
}

#[derive(Serialize)]
struct HomogPart {
    degree: u32,
    poly: PolyJson,
}

impl Session<'_> {
    fn n(&self) -> Result<usize> {
        let n = self.opts.n.ok_or_else(|| Error::Parse("--n is required".into()))?;
        if n == 0 {
            return Err(Error::Parse("--n must be >= 1".into()));
        }
        if n > self.ceiling {
            return Err(Error::ResourceLimit { requested: n, ceiling: self.ceiling });
        }
        Ok(n)
    }

    fn set_expr(&self) -> Result<SetExpr> {
        self.opts.spec.as_deref().ok_or_else(|| Error::Parse("--spec is required".into()))?.parse()
    }

    fn sieve(&self) -> Result<MembershipSieve> {
        sieve_expr(&self.set_expr()?, self.n()?, self.ceiling)
    }

    fn backend(&self) -> Backend {
        self.opts.backend.unwrap_or(Backend::Rational)
    }

    fn inputs(&self, count: usize) -> Result<Vec<String>> {
        if self.opts.inputs.len() != count {
            return Err(Error::Parse(format!("expected {count} --in file(s), got {}", self.opts.inputs.len())));
        }
        self.opts.inputs.iter().map(|p| read_text(p)).collect()
    }

    /// Parses a series, applying `--backend float` as an explicit conversion and
    /// `--n` as a truncation.
    fn series_from(&self, text: &str) -> Result<AnySeries> {
        let mut f = AnySeries::parse(text, self.ceiling)?;
        match (self.opts.backend, f.backend()) {
            (Some(Backend::Float), Backend::Rational) => f = AnySeries::Float(f.to_float()),
            (Some(want), have) if want != have => return Err(Error::BackendMismatch { left: have, right: want }),
            _ => {}
        }
        if let Some(n) = self.opts.n {
            if n == 0 {
                return Err(Error::Parse("--n must be >= 1".into()));
            }
            if n < f.truncation() {
                f = match f {
                    AnySeries::Rational(g) => AnySeries::Rational(g.truncate(n)?),
                    AnySeries::Float(g) => AnySeries::Float(g.truncate(n)?),
                };
            }
        }
        Ok(f)
    }

    fn one_series(&self) -> Result<AnySeries> {
        self.series_from(&self.inputs(1)?[0])
    }

    fn poly(&self) -> Result<AnyPoly> {
        let json: PolyJson = serde_json::from_str(&self.inputs(1)?[0])?;
        AnyPoly::from_json(&json)
    }

    fn dispatch(&self, command: &Command) -> Result<Output> {
        if self.opts.tol.is_nan() || self.opts.tol <= 0.0 {
            return Err(Error::Parse("--tol must be > 0".into()));
        }
        match command {
            Command::Sieve => {
                let sv = self.sieve()?;
                let mut csv = String::from("n\n");
                for m in sv.members() {
                    let _ = writeln!(csv, "{m}");
                }
                Ok(Output::json(sv.to_json())?.with_csv(csv))
            }
            Command::Atoms => {
                let sv = self.sieve()?;
                let r = atoms(&sv)?;
                Output::json(AtomsOut {
                    spec: sv.source().to_string(),
                    n: sv.bound(),
                    atoms: r.atoms,
                    unique_factorization: r.unique_factorization,
                    counterexample: r.counterexample,
                    skipped: r.skipped,
                })
            }
            Command::Closure => {
                let sv = if self.opts.inputs.is_empty() {
                    self.sieve()?
                } else {
                    let json: SieveJson = serde_json::from_str(&self.inputs(1)?[0])?;
                    MembershipSieve::from_json(&json, self.ceiling)?
                };
                let violations = sv.verify_closure();
                Output::json(ClosureReport {
                    spec: sv.source().to_string(),
                    n: sv.bound(),
                    closed: sv.contains(1) && violations.is_empty(),
                    violations,
                })
            }
            Command::Conv => {
                let texts = self.inputs(2)?;
                let f = self.series_from(&texts[0])?;
                let g = self.series_from(&texts[1])?;
                Output::series(&f.convolve(&g)?)
            }
            Command::Invert => Output::series(&self.one_series()?.invert()?),
            Command::Norms { trials } => {
                let f = self.one_series()?;
                let float = f.to_float();
                let grid: Vec<HalfPlanePoint> =
                    (0..64).map(|k| HalfPlanePoint::new(1e-3, k as f64 * 0.25)).collect();
                Output::json(NormsOut {
                    n: float.truncation(),
                    backend: f.backend(),
                    nonzero: float.nonzero_terms().count(),
                    l1: float.l1_norm(),
                    l2: float.l2_norm(),
                    max_abs: float.max_abs_coeff(),
                    sup_lower_bound: sup_norm_lower_bound(&float, &grid)?,
                    multiplier_lower_bound: multiplier_ratio_max(&float, *trials, self.opts.seed)?,
                    trials: *trials,
                    seed: self.opts.seed,
                })
            }
            Command::Eval { sigma, t, residual } => {
                let f = self.one_series()?;
                let mut points = Vec::new();
                let mut csv = String::from("sigma,t,abs\n");
                for &x in sigma {
                    for &y in t {
                        let s = HalfPlanePoint::new(x, y);
                        let r = match &f {
                            AnySeries::Rational(g) => evaluate(g, s, *residual),
                            AnySeries::Float(g) => evaluate(g, s, *residual),
                        };
                        let _ = writeln!(csv, "{x},{y},{}", r.value.norm());
                        points.push(EvalPoint {
                            sigma: x,
                            t: y,
                            re: r.value.re,
                            im: r.value.im,
                            abs: r.value.norm(),
                            tail_bound: r.tail_bound,
                        });
                    }
                }
                Ok(Output::json(json!({ "points": points }))?.with_csv(csv))
            }
            Command::ZetaS => {
                let sv = Arc::new(self.sieve()?);
                let n = sv.bound();
                let f = match self.backend() {
                    Backend::Rational => AnySeries::Rational(zeta_s(&sv, n)?),
                    Backend::Float => AnySeries::Float(zeta_s(&sv, n)?),
                };
                Output::series(&f)
            }
            Command::Lseries { m } => {
                let n = self.n()?;
                let f = match self.backend() {
                    Backend::Rational => AnySeries::Rational(l_series(*m, n)?),
                    Backend::Float => AnySeries::Float(l_series(*m, n)?),
                };
                Output::series(&f)
            }
            Command::Fejer { m } => {
                let f = self.one_series()?.to_float();
                Output::series(&AnySeries::Float(fejer_smooth(&f, *m)?))
            }
            Command::Lift { basis } => {
                let basis = parse_basis(basis)?;
                match self.one_series()? {
                    AnySeries::Rational(f) => Output::json(poly_to_json(&bohr::lift(&f, &basis)?)),
                    AnySeries::Float(f) => Output::json(poly_to_json(&bohr::lift(&f, &basis)?)),
                }
            }
            Command::Drop => {
                let n = self.n()?;
                let f = match self.poly()? {
                    AnyPoly::Rational(p) => AnySeries::Rational(bohr::drop(&p, n)?),
                    AnyPoly::Float(p) => AnySeries::Float(bohr::drop(&p, n)?),
                };
                Output::series(&f)
            }
            Command::Homog => {
                let parts: Vec<HomogPart> = match self.poly()? {
                    AnyPoly::Rational(p) => homog_parts(&p),
                    AnyPoly::Float(p) => homog_parts(&p),
                };
                Output::json(json!({ "parts": parts }))
            }
            Command::Bezout { gens, trunc } => match self.backend() {
                Backend::Rational => self.bezout::<ExactComplex>(gens.as_deref(), *trunc),
                Backend::Float => self.bezout::<C64>(gens.as_deref(), *trunc),
            },
            Command::Abscissa => {
                let est = match self.one_series()? {
                    AnySeries::Rational(f) => abscissa_estimates(&f),
                    AnySeries::Float(f) => abscissa_estimates(&f),
                };
                Output::json(est)
            }
        }
    }

    fn bezout<K: WireScalar>(&self, gens: Option<&[u64]>, trunc: Option<usize>) -> Result<Output> {
        let sys: BezoutSystem<K> = if self.opts.inputs.is_empty() {
            let n = self.opts.n.unwrap_or(1);
            let q = match gens {
                Some(q) => q.to_vec(),
                None => first_primes(2 * n),
            };
            if let Some(t) = trunc {
                if t > self.ceiling {
                    return Err(Error::ResourceLimit { requested: t, ceiling: self.ceiling });
                }
            }
            let required = crate::stable_rank::required_truncation(&q).unwrap_or(u64::MAX);
            if trunc.is_none() && required > self.ceiling as u64 {
                return Err(Error::ResourceLimit {
                    requested: usize::try_from(required).unwrap_or(usize::MAX),
                    ceiling: self.ceiling,
                });
            }
            unimodular_tuple(&q, n, trunc)?
        } else {
            let json: BezoutJson = serde_json::from_str(&self.inputs(1)?[0])?;
            bezout_from_json(&json, self.ceiling)?
        };
        if let Some(spec) = &self.opts.spec {
            sys.check_within(&spec.parse::<SemigroupSpec>()?)?;
        }
        let mut verdict = verify_bezout(&sys)?;
        if K::BACKEND == Backend::Float {
            verdict.holds = verdict.residual.max_abs_coeff() <= self.opts.tol;
        }
        let mut out = Output::json(bezout_to_json(&sys, &verdict))?;
        if !verdict.holds {
            out.failure = Some(format!("sum f_j g_j differs from 1 at {} coefficient(s)", verdict.residual.nonzero_terms().count()));
        }
        Ok(out)
    }

    fn write(&self, out: Output, stdout: &mut dyn Write) -> Result<Status> {
        let text = match self.opts.format {
            Format::Json => out.json,
            Format::Csv => out.csv.ok_or_else(|| Error::Parse("csv output is not available for this command".into()))?,
        };
        match &self.opts.out {
            Some(path) => std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
            None => stdout.write_all(text.as_bytes())?,
        }
        Ok(match out.failure {
            Some(m) => Status::Failed(m),
            None => Status::Done,
        })
    }
}

fn homog_parts<K: WireScalar>(p: &bohr::MultiPowerSeries<K>) -> Vec<HomogPart> {
    p.homogeneous_parts().into_iter().map(|(degree, q)| HomogPart { degree, poly: poly_to_json(&q) }).collect()
}
