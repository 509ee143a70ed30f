//! `qtspec`: spectral bounds and exact minimum distances for quasi-twisted
//! codes from the command line. Every subcommand prints JSON on stdout.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use qtspec_core::bounds::{
    bch_bound, ht_bound, roos_bound, shift_bound, spectral_bound, spectral_roos, spectral_shift, BoundWitness,
    DefiningSet, DpSource, HtOptions, NSource, SpectralOptions, StridePolicy,
};
use qtspec_core::codefile::parse_code_file;
use qtspec_core::examples::run_examples;
use qtspec_core::ntheory::prime_power;
use qtspec_core::oracle::{constacyclic_generator, qt_min_distance, OracleConfig};
use qtspec_core::spectral::{common_eigenspace, eigencode, parity_check, spectral_data};
use qtspec_core::table1::{verify_table1, TABLE1};
use qtspec_core::{Field, QtCode, RootSystem};

#[derive(Parser)]
#[command(name = "qtspec", version, about = "Spectral minimum-distance bounds for quasi-twisted codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Bch,
    Ht,
    Roos,
    Shift,
    Spectral,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrideArg {
    Unit,
    Coprime,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DpSourceArg {
    Bch,
    Ht,
    Roos,
    Shift,
    Oracle,
}

#[derive(Subcommand)]
enum Command {
    /// Lower bounds on the minimum distance of a code, with witnesses.
    Bounds {
        #[arg(long)]
        code: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "bch,ht,roos,shift,spectral")]
        methods: Vec<MethodArg>,
        #[arg(long, value_enum, default_value = "unit")]
        stride_policy: StrideArg,
        /// Source of d_P for the spectral method.
        #[arg(long, value_enum, default_value = "roos")]
        dp_source: DpSourceArg,
        /// Search limits as key=value pairs: max_m_prime, roos_n=bch|ht,
        /// max_states, max_supersets, general_n1=true|false.
        #[arg(long, value_delimiter = ',')]
        caps: Vec<String>,
    },
    /// Eigenvalues, multiplicities, eigenspaces and eigencodes.
    Eigen {
        #[arg(long)]
        code: PathBuf,
    },
    /// Exact minimum distance by enumeration.
    Mindist {
        #[arg(long)]
        code: PathBuf,
    },
    /// Constacyclic code with a given defining set: generator and bounds.
    Constacyclic {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: usize,
        /// Field element as comma-separated ascending coefficients.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Root indices, comma separated (ranges like 1-4 allowed).
        #[arg(long, default_value = "")]
        defset: String,
        /// Skip the exact distance computation.
        #[arg(long)]
        no_oracle: bool,
    },
    /// Verify the table of constacyclic codes (text on stderr).
    Table1,
    /// Run both worked examples.
    Examples,
}

fn options_from(stride: StrideArg, caps: &[String]) -> anyhow::Result<SpectralOptions> {
    let mut opts = SpectralOptions { oracle: OracleConfig::from_env(), ..Default::default() };
    opts.stride_policy = match stride {
        StrideArg::Unit => StridePolicy::Unit,
        StrideArg::Coprime => StridePolicy::Coprime,
    };
    for item in caps.iter().filter(|c| !c.trim().is_empty()) {
        let (key, value) = item.split_once('=').ok_or_else(|| anyhow!("cap {item:?} is not key=value"))?;
        let number = || value.parse::<usize>().with_context(|| format!("cap {key} needs an integer"));
        match key.trim() {
            "max_m_prime" => opts.roos.max_m_prime = number()?,
            "roos_n" => {
                opts.roos.n_source = match value {
                    "bch" => NSource::Bch,
                    "ht" => NSource::Ht,
                    _ => bail!("roos_n must be bch or ht"),
                }
            }
            "max_states" => opts.shift.max_states = number()?,
            "max_supersets" => opts.shift.max_supersets = number()?,
            "general_n1" => opts.ht.general_n1 = value.parse().context("general_n1 must be true or false")?,
            other => bail!("unknown cap {other:?}"),
        }
    }
    Ok(opts)
}

fn dp_source(arg: DpSourceArg) -> DpSource {
    match arg {
        DpSourceArg::Bch => DpSource::Bch,
        DpSourceArg::Ht => DpSource::Ht,
        DpSourceArg::Roos => DpSource::Roos,
        DpSourceArg::Shift => DpSource::Shift,
        DpSourceArg::Oracle => DpSource::Oracle,
    }
}

fn load(path: &PathBuf) -> anyhow::Result<QtCode> {
    parse_code_file(path).with_context(|| format!("reading code file {}", path.display()))
}

fn code_summary(code: &QtCode) -> Value {
    let f = code.field();
    json!({
        "q": f.order(),
        "lambda": f.format(code.lambda()),
        "m": code.m(),
        "ell": code.ell(),
        "length": code.length(),
        "dimension": code.dimension(),
        "gmatrix": code.gmatrix().serialize(),
    })
}

#[derive(Serialize)]
struct BoundResult {
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<BoundWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

/// Every method is evaluated through its spectral lift, which for index 1
/// coincides with the plain defining-set bound.
fn cmd_bounds(
    code: PathBuf,
    methods: Vec<MethodArg>,
    stride: StrideArg,
    dp: DpSourceArg,
    caps: Vec<String>,
) -> anyhow::Result<(Value, bool)> {
    let code = load(&code)?;
    let opts = options_from(stride, &caps)?;
    let omega_bar = spectral_data(&code)?.omega_bar();
    let mut results = Vec::new();
    for method in methods {
        let (name, outcome) = match method {
            MethodArg::Bch => ("bch", spectral_bound(&code, None, DpSource::Bch, &opts)),
            MethodArg::Ht => ("ht", spectral_bound(&code, None, DpSource::Ht, &opts)),
            MethodArg::Roos => ("roos", spectral_roos(&code, &opts)),
            MethodArg::Shift => ("shift", spectral_shift(&code, &opts)),
            MethodArg::Spectral => ("spectral", spectral_bound(&code, None, dp_source(dp), &opts)),
        };
        match outcome {
            Ok(w) => results.push(BoundResult { method: name, witness: Some(w), error: None }),
            Err(e) => results.push(BoundResult { method: name, witness: None, error: Some(e.to_string()) }),
        }
    }
    let ok = results.iter().all(|r| r.error.is_none());
    let best = results.iter().filter_map(|r| r.witness.as_ref().map(|w| w.value)).max();
    Ok((
        json!({
            "code": code_summary(&code),
            "omega_bar": omega_bar,
            "bounds": results,
            "best": best,
        }),
        ok,
    ))
}

fn cmd_eigen(code: PathBuf) -> anyhow::Result<(Value, bool)> {
    let code = load(&code)?;
    let config = OracleConfig::from_env();
    let data = spectral_data(&code)?;
    let ext = code.roots()?.ext().clone();
    let mut ok = true;
    let mut eigen = Vec::new();
    for e in &data.eigenvalues {
        let ec = eigencode(&code, &e.eigenspace, &config);
        let (distance, error) = match ec {
            Ok(ec) => (Some(ec.distance), None),
            Err(err) => {
                ok = false;
                (None, Some(err.to_string()))
            }
        };
        eigen.push(json!({
            "index": e.index,
            "value": ext.format(e.value),
            "multiplicity": e.multiplicity,
            "eigenspace_dim": e.eigenspace.rows(),
            "eigenspace": e.eigenspace.row_vecs().iter()
                .map(|r| r.iter().map(|&x| ext.format(x)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "eigencode_distance": distance,
            "error": error,
        }));
    }
    let omega_bar = data.omega_bar();
    let common = if omega_bar.is_empty() {
        Value::Null
    } else {
        let v = common_eigenspace(&code, &omega_bar)?;
        match eigencode(&code, &v, &config) {
            Ok(ec) => json!({ "dim": v.rows(), "eigencode_distance": ec.distance }),
            Err(err) => {
                ok = false;
                json!({ "dim": v.rows(), "error": err.to_string() })
            }
        }
    };
    let h = parity_check(&code)?;
    Ok((
        json!({
            "code": code_summary(&code),
            "splitting_field": { "p": ext.characteristic(), "degree": ext.degree() },
            "omega_bar": omega_bar,
            "eigenvalues": eigen,
            "common": common,
            "parity_check": { "rows": h.matrix.rows(), "rank": h.matrix.rank(), "full_space": h.full_space },
        }),
        ok,
    ))
}

fn cmd_mindist(code: PathBuf) -> anyhow::Result<(Value, bool)> {
    let code = load(&code)?;
    let d = qt_min_distance(&code, &OracleConfig::from_env())?;
    Ok((json!({ "code": code_summary(&code), "distance": d }), true))
}

fn parse_defset(s: &str) -> anyhow::Result<Vec<usize>> {
    Ok(qtspec_core::table1::parse_index_list(s)?)
}

fn cmd_constacyclic(q: u64, m: usize, lambda: &str, defset: &str, no_oracle: bool) -> anyhow::Result<(Value, bool)> {
    let (p, s) = prime_power(q).ok_or_else(|| anyhow!("q = {q} is not a prime power"))?;
    let field = Field::new(p, s)?;
    let lambda = field.parse(lambda).context("parsing lambda")?;
    let roots = RootSystem::new(&field, m, lambda)?;
    let l = DefiningSet::new(m, &parse_defset(defset)?)?;
    let frob = roots.frobenius();
    if !l.is_closed(frob) {
        bail!("defining set is not closed under the Frobenius map; its closure is {:?}", l.closure(frob).indices());
    }
    let g = constacyclic_generator(&roots, &l)?;
    let code = QtCode::constacyclic(&field, lambda, m, &g)?;
    let mut bounds = serde_json::Map::new();
    if !l.is_empty() && !l.is_full() {
        let opts = SpectralOptions::default();
        bounds.insert("bch".into(), serde_json::to_value(bch_bound(&l, StridePolicy::Unit)?)?);
        bounds.insert("bch_coprime".into(), serde_json::to_value(bch_bound(&l, StridePolicy::Coprime)?)?);
        bounds.insert("ht".into(), serde_json::to_value(ht_bound(&l, HtOptions::default())?)?);
        bounds.insert("roos".into(), serde_json::to_value(roos_bound(&l, opts.roos)?)?);
        bounds.insert("shift".into(), serde_json::to_value(shift_bound(&l, frob, opts.shift)?)?);
    }
    let distance = if no_oracle || l.is_full() {
        None
    } else {
        Some(qt_min_distance(&code, &OracleConfig::from_env())?)
    };
    Ok((
        json!({
            "q": q,
            "m": m,
            "lambda": field.format(lambda),
            "defset": l.indices(),
            "generator": g.serialize(),
            "dimension": code.dimension(),
            "bounds": bounds,
            "distance": distance,
        }),
        true,
    ))
}

fn show(d: Option<usize>) -> String {
    d.map_or("-".into(), |v| v.to_string())
}

fn cmd_table1() -> anyhow::Result<(Value, bool)> {
    let reports = verify_table1(&OracleConfig::from_env());
    eprintln!("{:>3} {:>2} {:>3} {:>3} {:>3} | {:>5} {:>5} {:>5} | {:>5} {:>5} {:>5} | status", "no", "q", "lam", "m", "ell", "d_BCH", "d_HT", "d_SP", "BCH", "HT", "SP");
    for (row, r) in TABLE1.iter().zip(&reports) {
        eprintln!(
            "{:>3} {:>2} {:>3} {:>3} {:>3} | {:>5} {:>5} {:>5} | {:>5} {:>5} {:>5} | {}",
            row.no,
            row.q,
            row.lambda,
            row.m,
            row.ell,
            row.d_bch,
            row.d_ht,
            row.d_sp,
            show(r.d_bch),
            show(r.d_ht),
            show(r.d_sp),
            if r.pass { "PASS" } else { "FAIL" }
        );
        if let Some(e) = &r.error {
            eprintln!("    error: {e}");
        }
    }
    let ok = reports.iter().all(|r| r.pass);
    Ok((json!({ "rows": reports, "all_pass": ok }), ok))
}

fn cmd_examples() -> anyhow::Result<(Value, bool)> {
    let report = run_examples(&OracleConfig::from_env())?;
    for c in &report.checks {
        eprintln!(
            "example {} {:<50} expected {:<8} got {:<8} {}",
            c.example,
            c.name,
            c.expected,
            c.actual,
            if c.pass { "PASS" } else { "FAIL" }
        );
        if let Some(n) = &c.note {
            eprintln!("    note: {n}");
        }
    }
    let ok = report.all_pass();
    let mut value = serde_json::to_value(&report)?;
    value["all_pass"] = json!(ok);
    Ok((value, ok))
}

fn run(cli: Cli) -> anyhow::Result<(Value, bool)> {
    match cli.command {
        Command::Bounds { code, methods, stride_policy, dp_source, caps } => {
            cmd_bounds(code, methods, stride_policy, dp_source, caps)
        }
        Command::Eigen { code } => cmd_eigen(code),
        Command::Mindist { code } => cmd_mindist(code),
        Command::Constacyclic { q, m, lambda, defset, no_oracle } => {
            cmd_constacyclic(q, m, &lambda, &defset, no_oracle)
        }
        Command::Table1 => cmd_table1(),
        Command::Examples => cmd_examples(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((value, ok)) => {
            let text = serde_json::to_string_pretty(&value).expect("JSON values serialize");
            let mut out = std::io::stdout().lock();
            if let Err(e) = writeln!(out, "{text}") {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::FAILURE;
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps_parse() {
        let o = options_from(StrideArg::Coprime, &["max_m_prime=7".into(), "roos_n=ht".into()]).unwrap();
        assert_eq!(o.roos.max_m_prime, 7);
        assert_eq!(o.roos.n_source, NSource::Ht);
        assert_eq!(o.stride_policy, StridePolicy::Coprime);
        assert!(options_from(StrideArg::Unit, &["bogus=1".into()]).is_err());
        assert!(options_from(StrideArg::Unit, &["max_states".into()]).is_err());
    }

    #[test]
    fn distance_serializes_in_reports() {
        let v = serde_json::to_value(qtspec_core::Distance::Infinite).unwrap();
        assert_eq!(v["kind"], "infinite");
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
