mod config;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use witnessgate::families::Family;
use witnessgate::groebner::{sufficient_block_positive, GroebnerCaps, SufficientVerdict};
use witnessgate::matrix::MatrixError;
use witnessgate::oracle::{estimate_mu, OracleOptions};
use witnessgate::poly::{count_roots, eval_alternative, nonneg};
use witnessgate::qudit::{necessary_block_positive, NecessaryVerdict};
use witnessgate::scalar::{format_rational, parse_rational};
use witnessgate::sweep::sweep;
use witnessgate::{classify, BipartiteHermitian, Domain, RatPoly, Rational, RationalInterval};

const EXIT_MALFORMED: u8 = 2;
const EXIT_NOT_HERMITIAN: u8 = 3;

#[derive(Parser)]
#[command(name = "witnessgate", version, about = "Exact block-positivity checks for bipartite Hermitian matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the matrix in a JSON file.
    Check {
        path: PathBuf,
        /// Also report the numerical minimum over product vectors.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        oracle_opts: OracleFlags,
        #[command(flatten)]
        caps: CapFlags,
    },
    /// Sweep a test family and print CSV.
    Sweep {
        #[arg(long)]
        family: Family,
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        from: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        to: Rational,
        #[arg(long, value_parser = rational)]
        step: Rational,
        #[command(flatten)]
        oracle_opts: OracleFlags,
        #[command(flatten)]
        caps: CapFlags,
    },
    /// Univariate polynomial debugging.
    #[command(subcommand)]
    Poly(PolyCommand),
}

#[derive(Args)]
struct OracleFlags {
    /// Random restarts (default 8·dA·dB).
    #[arg(long)]
    restarts: Option<usize>,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl OracleFlags {
    fn options(&self, da: usize, db: usize) -> OracleOptions {
        let base = OracleOptions::for_shape(da, db);
        OracleOptions { restarts: self.restarts.unwrap_or(base.restarts), tol: self.tol, seed: self.seed }
    }
}

#[derive(Args)]
struct CapFlags {
    /// TOML file with a `[groebner]` table.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long = "groebner.max-pairs")]
    max_pairs: Option<usize>,
    #[arg(long = "groebner.max-terms")]
    max_terms: Option<usize>,
}

impl CapFlags {
    fn caps(&self) -> anyhow::Result<GroebnerCaps> {
        config::load_caps(self.config.as_deref(), self.max_pairs, self.max_terms)
    }
}

#[derive(Args)]
struct Interval {
    #[arg(long, allow_hyphen_values = true, value_parser = rational, requires = "hi")]
    lo: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = rational, requires = "lo")]
    hi: Option<Rational>,
}

impl Interval {
    fn domain(&self) -> anyhow::Result<Domain> {
        match (&self.lo, &self.hi) {
            (Some(lo), Some(hi)) => Ok(Domain::Interval(RationalInterval::new(lo.clone(), hi.clone())?)),
            _ => Ok(Domain::AllReals),
        }
    }
}

#[derive(Subcommand)]
enum PolyCommand {
    /// Distinct real roots; coefficients lowest degree first, comma separated.
    CountRoots {
        #[arg(allow_hyphen_values = true, value_parser = coeffs)]
        coeffs: RatPoly,
        #[command(flatten)]
        interval: Interval,
    },
    /// Whether the polynomial is nonnegative on the domain.
    Nonneg {
        #[arg(allow_hyphen_values = true, value_parser = coeffs)]
        coeffs: RatPoly,
        #[command(flatten)]
        interval: Interval,
    },
    /// Whether `g1 ≥ 0 or g2 ≥ 0` holds at every point of the domain.
    Alternative {
        #[arg(allow_hyphen_values = true, value_parser = coeffs)]
        g1: RatPoly,
        #[arg(allow_hyphen_values = true, value_parser = coeffs)]
        g2: RatPoly,
        #[command(flatten)]
        interval: Interval,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn coeffs(s: &str) -> Result<RatPoly, String> {
    let c = s.split(',').map(|t| rational(t.trim())).collect::<Result<Vec<_>, _>>()?;
    Ok(RatPoly::from_rationals(&c))
}

/// An error with its exit code.
struct Failure(u8, anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(EXIT_MALFORMED, e.into())
    }
}

fn print_json(v: &Value) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer(&mut out, v)?;
    writeln!(out)?;
    Ok(())
}

fn check_matrix(x: &BipartiteHermitian, caps: &GroebnerCaps) -> Result<Value, Failure> {
    if (x.da(), x.db()) == (2, 2) {
        return Ok(report::verdict(&classify(x).map_err(anyhow::Error::from)?));
    }
    let psd = x.eigen_signature().0 == 0;
    let mut report = serde_json::Map::new();
    report.insert("verdict".into(), Value::Null);
    let verdict = if psd {
        "PositiveSemidefinite"
    } else {
        let nec = if x.db() == 2 { Some(necessary_block_positive(x).map_err(anyhow::Error::from)?) } else { None };
        let suf = sufficient_block_positive(x, caps);
        let refuted = nec.as_ref().is_some_and(|n| n.verdict == NecessaryVerdict::Fails);
        let certified = suf.verdict == SufficientVerdict::BlockPositive;
        if let Some(c) = nec.as_ref().and_then(|n| n.certificate.as_ref()) {
            report.insert("certificate".into(), report::certificate(c));
        }
        if let Some(n) = &nec {
            report.insert("necessary".into(), report::necessary(n));
        }
        report.insert("sufficient".into(), report::sufficient(&suf));
        match (refuted, certified) {
            (true, _) => "NotBlockPositive",
            (false, true) => "EntanglementWitness",
            (false, false) => "Inconclusive",
        }
    };
    report.insert("verdict".into(), json!(verdict));
    Ok(Value::Object(report))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Check { path, oracle, oracle_opts, caps } => {
            let caps = caps.caps()?;
            let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            let x = BipartiteHermitian::from_json(&text).map_err(|e| match e {
                MatrixError::NotHermitian { .. } => Failure(EXIT_NOT_HERMITIAN, e.into()),
                _ => Failure(EXIT_MALFORMED, e.into()),
            })?;
            let mut report = check_matrix(&x, &caps)?;
            if oracle {
                let est = estimate_mu(&x, &oracle_opts.options(x.da(), x.db()));
                report["mu_hat"] = json!(est.mu_hat);
            }
            print_json(&report)?;
        }
        Command::Sweep { family, from, to, step, oracle_opts, caps } => {
            let caps = caps.caps()?;
            let (da, db) = family.shape();
            let rows = sweep(family, &from, &to, &step, &oracle_opts.options(da, db), &caps)?;
            let mut w = csv::Writer::from_writer(std::io::stdout().lock());
            w.write_record(["a", "lambda_min", "mu_hat", "verdict_exact", "necessary_verdict", "sufficient_verdict"])?;
            for r in rows {
                w.write_record([
                    format_rational(&r.a),
                    float(r.lambda_min),
                    float(r.mu_hat),
                    r.verdict_exact.unwrap_or_default(),
                    r.necessary_verdict,
                    r.sufficient_verdict,
                ])?;
            }
            w.flush()?;
        }
        Command::Poly(p) => {
            let v = match p {
                PolyCommand::CountRoots { coeffs, interval } => {
                    json!({ "count": count_roots(&coeffs, &interval.domain()?)? })
                }
                PolyCommand::Nonneg { coeffs, interval } => json!({ "nonneg": nonneg(&coeffs, &interval.domain()?) }),
                PolyCommand::Alternative { g1, g2, interval } => {
                    let alt = eval_alternative(&g1, &g2, &interval.domain()?)?;
                    json!({ "holds": alt.holds, "witness_point": alt.witness_point.as_ref().map(format_rational) })
                }
            };
            print_json(&v)?;
        }
    }
    Ok(())
}

/// 17 significant digits.
fn float(x: f64) -> String {
    format!("{x:.16e}")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(n) = std::env::var("WITNESSGATE_THREADS") {
        match n.parse::<usize>() {
            Ok(n) if n > 0 => {
                // fails only if a pool already exists, which cannot happen here
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                eprintln!("error: WITNESSGATE_THREADS must be a positive integer");
                return ExitCode::from(EXIT_MALFORMED);
            }
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
