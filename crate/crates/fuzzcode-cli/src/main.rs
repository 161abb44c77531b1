//! Command-line front end for fuzzy linear codes.
//!
//! Exit codes: 0 on success, 1 when a verification or decode fails, 2 for
//! usage and input-format errors. The `FUZZCODE_CAP` environment variable
//! overrides both enumeration caps (minimum-distance search and space/coset
//! scans) with a single value.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fuzzcode::duality;
use fuzzcode::fuzzy;
use fuzzcode::io;
use fuzzcode::oracle;
use fuzzcode::zoo;
use fuzzcode::{
    classic_decode, FieldVector, FuzzyDecoder, FuzzyLinearCode, LinearCode, Rational,
    DEFAULT_DISTANCE_CAP, DEFAULT_ENUM_CAP,
};

mod simulate;

#[derive(Parser)]
#[command(
    name = "fuzzcode",
    version,
    about = "Fuzzy linear codes: nested chains of linear codes over prime fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named code or fuzzy chain and print or write it
    Construct {
        /// One of: hamming, ext-hamming, simplex, golay, rm, fuzzy-v4,
        /// fuzzy-hamming-b, fuzzy-hamming-d, fuzzy-simplex-e, fuzzy-golay,
        /// fuzzy-rm
        name: String,
        /// Reed-Muller order (rm only)
        #[arg(long)]
        r: Option<usize>,
        /// Reed-Muller size: length 2^m (rm, fuzzy-rm)
        #[arg(long)]
        m: Option<usize>,
        /// Comma-separated levels in (1/2, 1), strictly decreasing
        /// (fuzzy-rm only; defaults to dimension-derived levels)
        #[arg(long)]
        alphas: Option<String>,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Summarize a matrix, LINEARCODE, or FUZZYCODE file
    Info { file: PathBuf },
    /// Re-check every invariant of a code file; exit 1 on any failure
    Verify { file: PathBuf },
    /// Encode a message with a linear code (or a chosen cut of a chain)
    Encode {
        /// LINEARCODE file, or FUZZYCODE file with --alpha
        #[arg(long)]
        code: PathBuf,
        /// Message of length k (digits, or comma/space separated)
        #[arg(long)]
        message: String,
        /// Cut level to encode with when --code is a FUZZYCODE file
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Decode a word against a chain at a confidence level
    Decode {
        /// FUZZYCODE file
        #[arg(long)]
        code: PathBuf,
        /// Confidence level: the decoder corrects into this cut
        #[arg(long)]
        alpha1: String,
        /// Received word of length n
        #[arg(long)]
        word: String,
        /// Print the syndrome table used, one entry per line
        #[arg(long)]
        dump_table: bool,
    },
    /// Seeded noisy-channel round trips through the decoder
    Simulate {
        /// FUZZYCODE file
        #[arg(long)]
        code: PathBuf,
        /// Cut level codewords are drawn from (and decoded back into)
        #[arg(long)]
        alpha1: String,
        /// Per-coordinate symbol error probability, 0 <= p < 1
        #[arg(long = "channel-p")]
        channel_p: f64,
        /// Number of trials
        #[arg(long)]
        trials: u64,
        /// RNG seed; reports are byte-identical for identical inputs
        #[arg(long)]
        seed: u64,
    },
    /// Pointwise minimum of two chains (always a chain)
    Meet {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Direct sum of two chains on the concatenated space
    Directsum {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extension-principle sum; reports whether the result is a chain
    Extsum {
        a: PathBuf,
        b: PathBuf,
        /// Write the resulting chain here when it is one
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dual of a linear code
    Dual {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The orthogonal fuzzy code of a chain, when it exists
    FuzzyDual {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Brute-force reference computations (development aid)
    #[command(hide = true)]
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
}

#[derive(Subcommand)]
enum OracleOp {
    /// All vectors orthogonal to a LINEARCODE file's code, by full scan
    Dual { file: PathBuf },
    /// Minimum distance by enumerating the whole span
    Mindist { file: PathBuf },
    /// Chain membership of a word by walking master-row spans
    Membership { file: PathBuf, word: String },
    /// Extension-sum membership of a word by exhausting decompositions
    Extsum { a: PathBuf, b: PathBuf, word: String },
    /// Nearest codeword by scanning the whole code
    Nearest { file: PathBuf, word: String },
    /// The span of a matrix file's rows, as an explicit list
    Span { file: PathBuf },
}

/// Failures are verification/decode verdicts (exit 1); usage covers bad
/// arguments and unreadable or malformed inputs (exit 2).
enum CliError {
    Failure(String),
    Usage(String),
}

fn failure(msg: impl Into<String>) -> CliError {
    CliError::Failure(msg.into())
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn main() -> ExitCode {
    // Die quietly when a pipe closes early (e.g. `fuzzcode ... | head`)
    // instead of panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Enumeration caps: (distance search, space/coset scans). `FUZZCODE_CAP`
/// overrides both.
fn caps() -> Result<(u128, u128), CliError> {
    match std::env::var("FUZZCODE_CAP") {
        Err(std::env::VarError::NotPresent) => Ok((DEFAULT_DISTANCE_CAP, DEFAULT_ENUM_CAP)),
        Err(e) => Err(usage(format!("FUZZCODE_CAP: {e}"))),
        Ok(s) => {
            let v = s
                .parse::<u128>()
                .map_err(|_| usage(format!("FUZZCODE_CAP must be an integer, got '{s}'")))?;
            Ok((v, v))
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_linear(path: &Path) -> Result<LinearCode, CliError> {
    let text = read_file(path)?;
    match io::detect_kind(&text) {
        io::FileKind::LinearCode => {
            io::parse_linear_code(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
        }
        other => Err(usage(format!("{}: expected a LINEARCODE file, found {other:?}", path.display()))),
    }
}

fn load_fuzzy(path: &Path) -> Result<FuzzyLinearCode, CliError> {
    let text = read_file(path)?;
    match io::detect_kind(&text) {
        io::FileKind::FuzzyCode => {
            io::parse_fuzzy_code(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
        }
        other => Err(usage(format!("{}: expected a FUZZYCODE file, found {other:?}", path.display()))),
    }
}

fn parse_alpha(s: &str) -> Result<Rational, CliError> {
    s.parse::<Rational>().map_err(|e| usage(format!("invalid level '{s}': {e}")))
}

/// Levels used as decoding confidence must be positive.
fn parse_positive_alpha(s: &str) -> Result<Rational, CliError> {
    let alpha = parse_alpha(s)?;
    if alpha.is_zero() {
        return Err(usage("the confidence level must be positive"));
    }
    Ok(alpha)
}

fn parse_word(code_field: fuzzcode::FieldSpec, n: usize, s: &str) -> Result<FieldVector, CliError> {
    let v = io::parse_vector(code_field, s).map_err(|e| usage(format!("invalid word '{s}': {e}")))?;
    if v.len() != n {
        return Err(usage(format!("word has length {}, the code needs {n}", v.len())));
    }
    Ok(v)
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            println!("written: {}", path.display());
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Construct { name, r, m, alphas, out } => construct(&name, r, m, alphas.as_deref(), out.as_deref()),
        Command::Info { file } => info(&file),
        Command::Verify { file } => verify(&file),
        Command::Encode { code, message, alpha } => encode(&code, &message, alpha.as_deref()),
        Command::Decode { code, alpha1, word, dump_table } => decode(&code, &alpha1, &word, dump_table),
        Command::Simulate { code, alpha1, channel_p, trials, seed } => {
            let chain = load_fuzzy(&code)?;
            let alpha1 = parse_positive_alpha(&alpha1)?;
            let (_, enum_cap) = caps()?;
            let report = simulate::run(&chain, alpha1, channel_p, trials, seed, enum_cap)?;
            print!("{report}");
            Ok(())
        }
        Command::Meet { a, b, out } => {
            let result = fuzzy::meet(&load_fuzzy(&a)?, &load_fuzzy(&b)?)
                .map_err(|e| failure(e.to_string()))?;
            emit(&io::write_fuzzy_code(&result), out.as_deref())
        }
        Command::Directsum { a, b, out } => {
            let result = fuzzy::direct_sum(&load_fuzzy(&a)?, &load_fuzzy(&b)?)
                .map_err(|e| failure(e.to_string()))?;
            emit(&io::write_fuzzy_code(&result), out.as_deref())
        }
        Command::Extsum { a, b, out } => extsum(&a, &b, out.as_deref()),
        Command::Dual { file, out } => {
            let code = load_linear(&file)?;
            emit(&io::write_linear_code(&code.dual()), out.as_deref())
        }
        Command::FuzzyDual { file, out } => {
            let chain = load_fuzzy(&file)?;
            let dual = duality::fuzzy_dual(&chain).map_err(|e| failure(e.to_string()))?;
            emit(&io::write_fuzzy_code(&dual), out.as_deref())
        }
        Command::Oracle { op } => oracle_cmd(op),
    }
}

fn parse_alpha_list(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(parse_alpha)
        .collect()
}

fn construct(
    name: &str,
    r: Option<usize>,
    m: Option<usize>,
    alphas: Option<&str>,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let reject_params = |taken: &str| -> Result<(), CliError> {
        if (r.is_some() && !taken.contains("r")) || (m.is_some() && !taken.contains("m")) {
            return Err(usage(format!("'{name}' does not take --r/--m")));
        }
        if alphas.is_some() && !taken.contains("a") {
            return Err(usage(format!("'{name}' does not take --alphas")));
        }
        Ok(())
    };
    let linear = |c: LinearCode| io::write_linear_code(&c);
    let fuzzy_text = |c: FuzzyLinearCode| io::write_fuzzy_code(&c);
    let text = match name {
        "hamming" => {
            reject_params("")?;
            linear(zoo::hamming_7_4())
        }
        "ext-hamming" => {
            reject_params("")?;
            linear(zoo::ext_hamming_8_4())
        }
        "simplex" => {
            reject_params("")?;
            linear(zoo::simplex_7_3())
        }
        "golay" => {
            reject_params("")?;
            linear(zoo::golay_24_12())
        }
        "rm" => {
            let r = r.ok_or_else(|| usage("'rm' needs --r"))?;
            let m = m.ok_or_else(|| usage("'rm' needs --m"))?;
            reject_params("rm")?;
            linear(zoo::reed_muller(r, m).map_err(|e| usage(e.to_string()))?)
        }
        "fuzzy-v4" => {
            reject_params("")?;
            fuzzy_text(zoo::fuzzy_v4())
        }
        "fuzzy-hamming-b" => {
            reject_params("")?;
            fuzzy_text(zoo::fuzzy_hamming_b())
        }
        "fuzzy-hamming-d" => {
            reject_params("")?;
            fuzzy_text(zoo::fuzzy_hamming_d())
        }
        "fuzzy-simplex-e" => {
            reject_params("")?;
            fuzzy_text(zoo::fuzzy_simplex_e())
        }
        "fuzzy-golay" => {
            reject_params("")?;
            fuzzy_text(zoo::fuzzy_golay())
        }
        "fuzzy-rm" => {
            let m = m.ok_or_else(|| usage("'fuzzy-rm' needs --m"))?;
            reject_params("ma")?;
            let levels = alphas.map(parse_alpha_list).transpose()?;
            let chain = zoo::fuzzy_reed_muller(m, levels.as_deref())
                .map_err(|e| usage(e.to_string()))?;
            fuzzy_text(chain)
        }
        other => return Err(usage(format!("unknown construction '{other}'"))),
    };
    emit(&text, out)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn info(path: &Path) -> Result<(), CliError> {
    let text = read_file(path)?;
    let (distance_cap, enum_cap) = caps()?;
    match io::detect_kind(&text) {
        io::FileKind::Matrix => {
            let m = io::parse_matrix(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            println!("kind: matrix");
            println!("field: {}", m.field().modulus());
            println!("rows: {}", m.rows());
            println!("cols: {}", m.cols());
            println!("rank: {}", m.rank());
        }
        io::FileKind::LinearCode => {
            let c = io::parse_linear_code(&text)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let s = c.summary_capped(distance_cap);
            println!("kind: linear");
            println!("field: {}", c.field().modulus());
            println!("length: {}", s.n);
            println!("dimension: {}", s.k);
            let d = s.min_distance.map_or("?".to_string(), |d| d.to_string());
            println!("min_distance: {d}");
            let t = s.error_capability.map_or("?".to_string(), |t| t.to_string());
            println!("error_capability: {t}");
            println!("self_orthogonal: {}", yes_no(s.self_orthogonal));
            println!("self_dual: {}", yes_no(s.self_dual));
            let label = if s.self_dual {
                " self-dual"
            } else if s.self_orthogonal {
                " self-orthogonal"
            } else {
                ""
            };
            println!("summary: {} {} {d}{label}", s.n, s.k);
        }
        io::FileKind::FuzzyCode => {
            let a = io::parse_fuzzy_code(&text)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            println!("kind: fuzzy");
            println!("field: {}", a.field().modulus());
            println!("length: {}", a.n());
            println!("levels: {}", a.num_levels());
            let image: Vec<String> = a.image().iter().map(|v| v.to_string()).collect();
            println!("image: {}", image.join(" "));
            println!("fuzzy_self_orthogonal: {}", yes_no(duality::is_fuzzy_self_orthogonal(&a)));
            println!("fuzzy_self_dual: {}", yes_no(duality::is_fuzzy_self_dual(&a)));
            let _ = enum_cap;
            for (i, &(alpha, dim)) in a.levels().iter().enumerate() {
                let cut = a.cut_at(i);
                let d = if dim == 0 {
                    "-".to_string()
                } else {
                    cut.min_distance_capped(distance_cap)
                        .map_or("?".to_string(), |d| d.to_string())
                };
                println!("level {alpha}: dim {dim}, min_distance {d}");
            }
        }
    }
    Ok(())
}

fn verify(path: &Path) -> Result<(), CliError> {
    let text = read_file(path)?;
    let (_, enum_cap) = caps()?;
    let mut ok = true;
    let mut check = |name: &str, passed: bool, detail: &str| {
        if passed {
            println!("{name}: ok");
        } else {
            println!("{name}: FAILED{}{}", if detail.is_empty() { "" } else { " — " }, detail);
            ok = false;
        }
    };
    match io::detect_kind(&text) {
        io::FileKind::Matrix => match io::parse_matrix(&text) {
            Err(e) => return Err(failure(format!("parse: {e}"))),
            Ok(_) => check("parse", true, ""),
        },
        io::FileKind::LinearCode => {
            let c = match io::parse_linear_code(&text) {
                Err(e) => return Err(failure(format!("parse: {e}"))),
                Ok(c) => c,
            };
            check("parse", true, "");
            check("basis canonical", c.basis().rref().matrix == *c.basis(), "basis is not in reduced row echelon form");
            let mut orthogonal = true;
            for row in c.basis().row_vectors() {
                let s = c.syndrome(&row).map_err(|e| failure(e.to_string()))?;
                if !s.is_zero() {
                    orthogonal = false;
                }
            }
            check("parity annihilates basis", orthogonal, "some basis row has nonzero syndrome");
            check("dual involution", c.dual().dual() == c, "dual of dual differs");
        }
        io::FileKind::FuzzyCode => {
            let a = match io::parse_fuzzy_code(&text) {
                Err(e) => return Err(failure(format!("parse: {e}"))),
                Ok(a) => a,
            };
            check("parse", true, "");
            let levels = a.levels();
            let mut strict = true;
            for i in 0..levels.len() {
                if levels[i].0.is_zero() {
                    strict = false;
                }
                if i > 0 && levels[i].0 >= levels[i - 1].0 {
                    strict = false;
                }
            }
            check("levels strictly decreasing", strict, "levels are not strictly decreasing positives");
            let mut nested = true;
            for i in 1..a.num_levels() {
                let inner = a.cut_at(i - 1);
                let outer = a.cut_at(i);
                let sub = inner.is_subcode(outer).map_err(|e| failure(e.to_string()))?;
                if !(sub && inner.dim() < outer.dim()) {
                    nested = false;
                }
            }
            check("cuts strictly nested", nested, "some cut is not strictly inside its successor");
            let mut spans = true;
            let rows = a.master_rows().row_vectors();
            for (i, &(_, dim)) in levels.iter().enumerate() {
                let from_prefix = LinearCode::from_rows(a.field(), a.n(), &rows[..dim])
                    .map_err(|e| failure(e.to_string()))?;
                if &from_prefix != a.cut_at(i) {
                    spans = false;
                }
            }
            check("master rows span cuts", spans, "a master-row prefix spans the wrong cut");
            // The pointwise check walks every pair of vectors, so gate it by
            // the squared space size, like the other pair-exhaustive scans.
            let pair_count = (a.field().modulus() as u128)
                .checked_pow(2 * a.n() as u32)
                .unwrap_or(u128::MAX);
            if pair_count <= enum_cap {
                let map = a.to_level_map_capped(enum_cap).map_err(|e| failure(e.to_string()))?;
                check(
                    "membership axioms (pointwise)",
                    fuzzy::verify_axioms_pointwise(&map),
                    "axioms fail on some pair",
                );
            } else {
                println!("membership axioms (pointwise): skipped (space too large)");
            }
            println!("fuzzy self-orthogonal: {}", yes_no(duality::is_fuzzy_self_orthogonal(&a)));
            println!("fuzzy self-dual: {}", yes_no(duality::is_fuzzy_self_dual(&a)));
        }
    }
    if ok {
        println!("verdict: ok");
        Ok(())
    } else {
        println!("verdict: FAILED");
        Err(failure("verification failed".to_string()))
    }
}

fn encode(code_path: &Path, message: &str, alpha: Option<&str>) -> Result<(), CliError> {
    let text = read_file(code_path)?;
    let code = match io::detect_kind(&text) {
        io::FileKind::LinearCode => {
            if alpha.is_some() {
                return Err(usage("--alpha only applies to FUZZYCODE inputs"));
            }
            io::parse_linear_code(&text).map_err(|e| usage(format!("{}: {e}", code_path.display())))?
        }
        io::FileKind::FuzzyCode => {
            let chain = io::parse_fuzzy_code(&text)
                .map_err(|e| usage(format!("{}: {e}", code_path.display())))?;
            let alpha = parse_alpha(alpha.ok_or_else(|| usage("FUZZYCODE input needs --alpha to pick a cut"))?)?;
            chain
                .cut(alpha)
                .ok_or_else(|| failure(format!("cut at level {alpha} is empty")))?
        }
        io::FileKind::Matrix => {
            return Err(usage("encode needs a LINEARCODE or FUZZYCODE file"));
        }
    };
    let msg = io::parse_vector(code.field(), message)
        .map_err(|e| usage(format!("invalid message '{message}': {e}")))?;
    if msg.len() != code.dim() {
        return Err(usage(format!(
            "message has length {}, the code needs {}",
            msg.len(),
            code.dim()
        )));
    }
    let word = code.encode(&msg).map_err(|e| failure(e.to_string()))?;
    println!("{word}");
    Ok(())
}

fn decode(code_path: &Path, alpha1: &str, word: &str, dump_table: bool) -> Result<(), CliError> {
    let chain = load_fuzzy(code_path)?;
    let alpha1 = parse_positive_alpha(alpha1)?;
    let y = parse_word(chain.field(), chain.n(), word)?;
    let (_, enum_cap) = caps()?;
    let mut decoder = FuzzyDecoder::with_cap(chain, enum_cap);
    let membership = decoder.code().membership(&y).map_err(|e| failure(e.to_string()))?;

    if membership >= alpha1 {
        if dump_table {
            println!("no table used");
            println!();
        }
        println!("word: {y}");
        println!("membership: {membership}");
        println!("no correction needed");
        println!("codeword: {y}");
        println!("corrected_membership: {membership}");
        println!("reliable: yes");
        return Ok(());
    }

    let table = decoder.table(alpha1, membership).map_err(|e| failure(e.to_string()))?;
    if dump_table {
        print!("{}", table.dump());
        println!();
    }
    let syndrome = table.inner().syndrome(&y).map_err(|e| failure(e.to_string()))?;
    let result = decoder.decode(alpha1, &y).map_err(|e| failure(e.to_string()))?;
    println!("word: {y}");
    println!("membership: {membership}");
    println!("table_entries: {}", table.len());
    let classic = table.classic_table_size().map_or("?".into(), |v: u128| v.to_string());
    println!("classic_entries: {classic}");
    let ratio = table.reduction_ratio().map_or("?".into(), |v: u128| v.to_string());
    println!("reduction_ratio: {ratio}");
    println!("syndrome: {syndrome}");
    println!("leader: {}", result.error_vector);
    println!("codeword: {}", result.codeword);
    println!("corrected_membership: {}", result.corrected_membership);
    println!("reliable: {}", yes_no(result.reliable));
    if result.outside_chain {
        println!("warning: membership 0 lies outside the chain; corrected against the full space");
    }
    Ok(())
}

fn extsum(a: &Path, b: &Path, out: Option<&Path>) -> Result<(), CliError> {
    let a = load_fuzzy(a)?;
    let b = load_fuzzy(b)?;
    let (_, enum_cap) = caps()?;
    let (map, linear) = fuzzy::ext_sum(&a, &b, enum_cap).map_err(|e| failure(e.to_string()))?;
    println!("linear: {}", yes_no(linear));
    if !linear {
        match fuzzy::from_level_map(&map) {
            Err(fuzzcode::FuzzyError::NotFuzzyLinear { alpha, x, y, sum }) => {
                println!("witness: {x} + {y} = {sum} escapes the cut at level {alpha}");
            }
            other => {
                return Err(failure(format!(
                    "internal disagreement between the axiom check and chain extraction: {other:?}"
                )));
            }
        }
    }
    println!("map:");
    for (v, value) in map.iter() {
        println!("{v} {value}");
    }
    if linear {
        let chain = fuzzy::from_level_map(&map).map_err(|e| failure(e.to_string()))?;
        match out {
            None => {
                println!();
                print!("{}", io::write_fuzzy_code(&chain));
            }
            Some(path) => {
                std::fs::write(path, io::write_fuzzy_code(&chain))
                    .map_err(|e| usage(format!("{}: {e}", path.display())))?;
                println!("written: {}", path.display());
            }
        }
    }
    Ok(())
}

fn oracle_cmd(op: OracleOp) -> Result<(), CliError> {
    let (_, enum_cap) = caps()?;
    match op {
        OracleOp::Dual { file } => {
            let code = load_linear(&file)?;
            let dual = oracle::brute_dual(&code, enum_cap).map_err(|e| failure(e.to_string()))?;
            println!("count: {}", dual.len());
            for v in dual {
                let v = FieldVector::new(code.field(), v).expect("stored residues");
                println!("{v}");
            }
        }
        OracleOp::Mindist { file } => {
            let code = load_linear(&file)?;
            let d = oracle::brute_min_distance(&code, enum_cap).map_err(|e| failure(e.to_string()))?;
            println!("{d}");
        }
        OracleOp::Membership { file, word } => {
            let chain = load_fuzzy(&file)?;
            let x = parse_word(chain.field(), chain.n(), &word)?;
            let m = oracle::brute_chain_membership(&chain, &x, enum_cap)
                .map_err(|e| failure(e.to_string()))?;
            println!("{m}");
        }
        OracleOp::Extsum { a, b, word } => {
            let a = load_fuzzy(&a)?;
            let b = load_fuzzy(&b)?;
            let z = parse_word(a.field(), a.n(), &word)?;
            let m = oracle::brute_ext_sum(&a, &b, &z, enum_cap).map_err(|e| failure(e.to_string()))?;
            println!("{m}");
        }
        OracleOp::Nearest { file, word } => {
            let code = load_linear(&file)?;
            let y = parse_word(code.field(), code.n(), &word)?;
            let (c, unique) =
                oracle::brute_nearest(&code, &y, enum_cap).map_err(|e| failure(e.to_string()))?;
            println!("{c} {}", if unique { "unique" } else { "tied" });
            // Cross-check against the classic decoder on the same input.
            let classic = classic_decode(&code, &y).map_err(|e| failure(e.to_string()))?;
            if classic.codeword != c {
                return Err(failure(format!(
                    "oracle disagreement: classic decoder returned {}",
                    classic.codeword
                )));
            }
        }
        OracleOp::Span { file } => {
            let text = read_file(&file)?;
            let m = io::parse_matrix(&text).map_err(|e| usage(format!("{}: {e}", file.display())))?;
            let span = oracle::brute_span(m.field(), m.cols(), &m.row_vectors(), enum_cap)
                .map_err(|e| failure(e.to_string()))?;
            println!("count: {}", span.len());
            for v in span {
                let v = FieldVector::new(m.field(), v).expect("stored residues");
                println!("{v}");
            }
        }
    }
    Ok(())
}
