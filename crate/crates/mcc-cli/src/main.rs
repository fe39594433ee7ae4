//! mcc: multicyclic code toolkit.
//!
//! Exit codes: 0 success, 1 verification found an invariant violation,
//! 2 input error (bad spec file, unparsable polynomial, malformed message),
//! 3 no proven combinatorial basis and no fallback requested.

mod specfile;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mcc_core::corpus::{check_single, run_corpus, CorpusConfig, Fault};
use mcc_core::genmatrix::{to_matrix, BasisSource, GeneratorMatrix};
use mcc_core::gf::FieldElement;
use mcc_core::ideal::{Code, DEFAULT_ENUM_CAP};
use mcc_core::idealbasis::SelectionStrategy;
use mcc_core::sepasdar::{analyze, Analysis, BasisStatus};
use mcc_core::ExecMode;

const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_NO_BASIS: u8 = 3;

#[derive(Parser)]
#[command(name = "mcc", version, about = "Multicyclic code toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    #[default]
    MinALex,
    First,
}

impl From<StrategyArg> for SelectionStrategy {
    fn from(s: StrategyArg) -> SelectionStrategy {
        match s {
            StrategyArg::MinALex => SelectionStrategy::MinALex,
            StrategyArg::First => SelectionStrategy::First,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    #[default]
    Text,
    Csv,
}

#[derive(Args)]
struct StrategyOpt {
    /// Layer representative selection.
    #[arg(long, value_enum, default_value_t)]
    strategy: StrategyArg,
}

#[derive(Subcommand)]
enum Cmd {
    /// Length, dimension and (when small enough) codeword count.
    Params { spec: PathBuf },
    /// Staircase rows, layer representatives and the candidate basis B.
    Basis {
        spec: PathBuf,
        #[command(flatten)]
        strategy: StrategyOpt,
    },
    /// Generator matrix rows in exponent-rank column order.
    Genmatrix {
        spec: PathBuf,
        #[command(flatten)]
        strategy: StrategyOpt,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
        /// Use the oracle basis when B is not proven.
        #[arg(long)]
        fallback_oracle: bool,
        /// Reduce the matrix rows to canonical echelon form.
        #[arg(long)]
        rref: bool,
    },
    /// Check structural invariants on one spec or on the random corpus.
    Verify {
        #[arg(required_unless_present = "corpus", conflicts_with = "corpus")]
        spec: Option<PathBuf>,
        #[arg(long)]
        corpus: bool,
        #[command(flatten)]
        strategy: StrategyOpt,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random corpus cases (the exhaustive sweep is always added).
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
    /// Map a comma-separated message to its codeword.
    Encode {
        spec: PathBuf,
        message: String,
        #[command(flatten)]
        strategy: StrategyOpt,
        #[arg(long)]
        fallback_oracle: bool,
    },
}

struct Fail {
    code: u8,
    msg: String,
}

impl Fail {
    fn input(msg: impl Into<String>) -> Fail {
        Fail {
            code: EXIT_INPUT,
            msg: msg.into(),
        }
    }
}

/// Caps from the environment: MCC_CAP overrides both the ring length cap
/// and the codeword enumeration cap.
fn env_cap() -> Result<Option<u64>, Fail> {
    match std::env::var("MCC_CAP") {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(Some)
            .map_err(|_| Fail::input(format!("MCC_CAP: not a number: {v}"))),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(Fail::input(format!("MCC_CAP: {e}"))),
    }
}

fn env_fault() -> Result<Option<Fault>, Fail> {
    match std::env::var("MCC_FAULT") {
        Ok(v) if v == "independence" => Ok(Some(Fault::DuplicateMember)),
        Ok(v) => Err(Fail::input(format!("MCC_FAULT: unknown fault '{v}'"))),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(Fail::input(format!("MCC_FAULT: {e}"))),
    }
}

fn load(path: &Path, cap: Option<u64>) -> Result<Code, Fail> {
    specfile::load_code(path, cap.map(|c| c as usize)).map_err(Fail::input)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(fail) => {
            eprintln!("mcc: {}", fail.msg);
            ExitCode::from(fail.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Fail> {
    let cap = env_cap()?;
    let mode = ExecMode::default();
    match cli.cmd {
        Cmd::Params { spec } => {
            let code = load(&spec, cap)?;
            let enum_cap = cap.map(|c| c as u128).unwrap_or(DEFAULT_ENUM_CAP);
            let mut line = format!("n={} dim={}", code.spec().n(), code.dimension());
            if let Some(count) = code.cardinality().filter(|&c| c <= enum_cap) {
                line.push_str(&format!(" |I|={count}"));
            }
            println!("{line}");
            Ok(0)
        }
        Cmd::Basis { spec, strategy } => {
            let code = load(&spec, cap)?;
            let analysis = run_analysis(&code, strategy.strategy.into(), mode)?;
            print_analysis(&code, &analysis);
            match analysis.basis.status() {
                BasisStatus::ProvenBasis => Ok(0),
                BasisStatus::IndependentOnly => Ok(EXIT_NO_BASIS),
            }
        }
        Cmd::Genmatrix {
            spec,
            strategy,
            format,
            fallback_oracle,
            rref,
        } => {
            let code = load(&spec, cap)?;
            let matrix = basis_matrix(&code, strategy.strategy.into(), fallback_oracle, mode)?;
            let matrix = if rref { matrix.to_rref(mode) } else { matrix };
            match format {
                FormatArg::Text => print!("{}", matrix.render_text()),
                FormatArg::Csv => print!("{}", matrix.render_csv()),
            }
            Ok(0)
        }
        Cmd::Verify {
            spec,
            corpus,
            strategy,
            seed,
            count,
        } => {
            let fault = env_fault()?;
            let cfg = CorpusConfig {
                seed,
                random_cases: count,
                strategy: strategy.strategy.into(),
                fault,
                ..CorpusConfig::default()
            };
            let report = if corpus {
                run_corpus(&cfg, mode)
            } else {
                let path = spec.expect("clap enforces spec xor --corpus");
                let code = load(&path, cap)?;
                check_single(code.spec(), code.generators().to_vec(), &cfg, mode)
            };
            print!("{}", report.render());
            Ok(if report.passed() { 0 } else { EXIT_VIOLATION })
        }
        Cmd::Encode {
            spec,
            message,
            strategy,
            fallback_oracle,
        } => {
            let code = load(&spec, cap)?;
            let matrix = basis_matrix(&code, strategy.strategy.into(), fallback_oracle, mode)?;
            let msg = parse_message(&code, &message)?;
            let word = matrix.encode(&msg).map_err(|e| Fail::input(e.to_string()))?;
            println!("{word}");
            Ok(0)
        }
    }
}

fn run_analysis(code: &Code, strategy: SelectionStrategy, mode: ExecMode) -> Result<Analysis, Fail> {
    analyze(code, strategy, mode).map_err(|e| Fail::input(e.to_string()))
}

/// The matrix commands want a real basis: B when proven, otherwise the
/// oracle rows behind --fallback-oracle, otherwise exit 3.
fn basis_matrix(
    code: &Code,
    strategy: SelectionStrategy,
    fallback: bool,
    mode: ExecMode,
) -> Result<GeneratorMatrix, Fail> {
    let analysis = run_analysis(code, strategy, mode)?;
    let (elements, source) = match analysis.basis.status() {
        BasisStatus::ProvenBasis => (analysis.basis.elements(), BasisSource::Sepasdar),
        BasisStatus::IndependentOnly if fallback => {
            (code.oracle_basis().to_vec(), BasisSource::OracleRref)
        }
        BasisStatus::IndependentOnly => {
            return Err(Fail {
                code: EXIT_NO_BASIS,
                msg: format!(
                    "no proven basis: |B|={} < dim={} (use --fallback-oracle)",
                    analysis.basis.len(),
                    analysis.basis.dimension()
                ),
            })
        }
    };
    if elements.is_empty() {
        return Err(Fail::input("the zero ideal has no generator matrix"));
    }
    to_matrix(code.spec(), &elements, source, mode).map_err(|e| Fail::input(e.to_string()))
}

fn print_analysis(code: &Code, analysis: &Analysis) {
    println!("n={} dim={}", code.spec().n(), code.dimension());
    for row in analysis.staircase.rows() {
        println!(
            "staircase k={}: a={} {}",
            row.layer(),
            row.leading_degree(),
            row.element()
        );
    }
    for rep in analysis.representatives.iter().flatten() {
        println!(
            "rep k={}: a={} {}",
            rep.layer(),
            rep.leading_degree(),
            rep.element()
        );
    }
    for (i, m) in analysis.basis.members().iter().enumerate() {
        println!("B[{i}]: k={} shift={} {}", m.layer(), m.shift(), m.element());
    }
    println!(
        "status={} |B|={} dim={}",
        analysis.basis.status().name(),
        analysis.basis.len(),
        analysis.basis.dimension()
    );
}

/// Comma-separated field elements; tuples carry their own parentheses.
/// Empty input is the empty message.
fn parse_message(code: &Code, input: &str) -> Result<Vec<FieldElement>, Fail> {
    let field = code.spec().field();
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    let mut parts: Vec<String> = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in trimmed.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Fail::input("message: unbalanced ')'"));
                }
                cur.push(ch);
            }
            ',' if depth == 0 => {
                parts.push(std::mem::take(&mut cur));
            }
            _ => cur.push(ch),
        }
    }
    if depth != 0 {
        return Err(Fail::input("message: unbalanced '('"));
    }
    parts.push(cur);
    let mut out = Vec::with_capacity(parts.len());
    for (i, part) in parts.iter().enumerate() {
        let part = part.trim();
        let elem = if let Some(inner) = part.strip_prefix('(').and_then(|p| p.strip_suffix(')')) {
            let coeffs: Result<Vec<u64>, _> =
                inner.split(',').map(|c| c.trim().parse::<u64>()).collect();
            let coeffs =
                coeffs.map_err(|_| Fail::input(format!("message[{i}]: bad tuple '{part}'")))?;
            field
                .element_from_coeffs(&coeffs)
                .map_err(|e| Fail::input(format!("message[{i}]: {e}")))?
        } else {
            let v: u64 = part
                .parse()
                .map_err(|_| Fail::input(format!("message[{i}]: bad element '{part}'")))?;
            field.element_from_int(v)
        };
        out.push(elem);
    }
    Ok(out)
}
