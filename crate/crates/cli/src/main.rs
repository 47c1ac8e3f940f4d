//! `wetpaper` command-line tool.
//!
//! Exit codes: 0 success, 1 parse or I/O error, 2 precondition violated,
//! 3 rank deficient, 4 change bound exceeded, 5 infeasible.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wetpaper::analysis::{self, McSolver};
use wetpaper::codes::{Code, GolayVariant, ParityCheckMatrix};
use wetpaper::io::{self, ZzwFile, CONTAINER_MAGIC, MASK_MAGIC};
use wetpaper::wpc::{self, CoverObject};
use wetpaper::zzw::{ColumnBlock, ZzwParams, ZzwScheme};
use wetpaper::{Error, Field};

#[derive(Parser)]
#[command(name = "wetpaper", version, about = "Randomized wet-paper syndrome coding")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CodeArgs {
    /// hamming:Q:P, golay23, golay11, rs:Q:N:DIM, random:Q:ROWS:COLS or file:PATH
    #[arg(long)]
    code: String,
    /// Seed for random codes and simulations.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Solver {
    /// Randomized when --r is given, else wet when a mask is given, else
    /// bounded when --max-changes is given, else plain.
    Auto,
    Plain,
    Bounded,
    Wet,
    Randomized,
}

#[derive(Clone, Copy, ValueEnum)]
enum SimSolver {
    Randomized,
    Wet,
    /// Fresh uniform matrix of the code's shape every trial.
    FreshMatrix,
}

#[derive(Subcommand)]
enum Command {
    /// Embed a message into a cover vector.
    Embed {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        message: PathBuf,
        /// Treat the message file as hex bits packed into symbols.
        #[arg(long)]
        bits: bool,
        #[arg(long)]
        wet_file: Option<PathBuf>,
        /// Random tail length.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        max_changes: Option<usize>,
        #[arg(long, value_enum, default_value_t = Solver::Auto)]
        solver: Solver,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Read the message from a stego vector.
    Extract {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        stego: PathBuf,
        #[arg(long, default_value_t = 0)]
        r: usize,
        /// Write hex bits instead of symbols.
        #[arg(long)]
        bits: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a random layered cover container and wet mask.
    ZzwRandom {
        #[arg(long)]
        r_max: usize,
        #[arg(long)]
        o: usize,
        /// Wet bits per column are drawn uniformly from 0..=max-wet.
        #[arg(long)]
        max_wet: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        wet_out: PathBuf,
    },
    /// Layered embedding into a container file.
    ZzwEmbed {
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        wet_file: PathBuf,
        /// Hex payload bits.
        #[arg(long)]
        message: PathBuf,
        /// Use only the first N bits of the hex payload.
        #[arg(long)]
        payload_bits: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Layered extraction; no wet mask needed.
    ZzwExtract {
        #[arg(long)]
        stego: PathBuf,
        /// Keep only the first N extracted bits.
        #[arg(long)]
        payload_bits: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smallest random tail for a perfect code and ℓ wet positions.
    MinR {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        wet: usize,
    },
    /// Efficiency bound report, or a single bound with --q and --alpha.
    Bounds {
        #[arg(long, required_unless_present = "alpha")]
        code: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[arg(long, requires = "alpha")]
        q: Option<u32>,
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Monte-Carlo success rate.
    Simulate {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        wet: usize,
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[arg(long, value_enum, default_value_t = SimSolver::Randomized)]
        solver: SimSolver,
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        /// Blocks per message.
        #[arg(long, default_value_t = 1)]
        blocks: u32,
        /// Per-trial CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimal tail against ℓ for a perfect code, as CSV.
    Fig1 {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a code's parity-check matrix in the text format read by file:PATH.
    ExportH {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Io(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Io(_) | Failure::Lib(Error::Parse(_)) => 1,
            Failure::Lib(Error::RankDeficient { .. }) => 3,
            Failure::Lib(Error::BoundExceeded { .. }) => 4,
            Failure::Lib(
                Error::Infeasible(_)
                | Error::NoFeasiblePlan
                | Error::DecodeFailure
                | Error::EmbeddingFailure,
            ) => 5,
            Failure::Lib(_) => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Io(s) => s.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn read_bytes(path: &Path) -> CliResult<Vec<u8>> {
    fs::read(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write_out(path: Option<&Path>, data: &[u8]) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, data).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(data)
                .map_err(|e| Failure::Io(e.to_string()))
        }
    }
}

fn parse_num<T: std::str::FromStr>(tok: &str, what: &str) -> CliResult<T> {
    tok.parse()
        .map_err(|_| Failure::Lib(Error::Parse(format!("bad {what} {tok:?} in code selector"))))
}

fn build_code(args: &CodeArgs) -> CliResult<Code> {
    let parts: Vec<&str> = args.code.splitn(2, ':').collect();
    let rest: Vec<&str> = parts.get(1).map_or(Vec::new(), |s| s.split(':').collect());
    let bad = || Failure::Lib(Error::Parse(format!("unknown code selector {:?}", args.code)));
    let code = match (parts[0], rest.len()) {
        ("golay23", 0) => Code::golay(GolayVariant::Binary),
        ("golay11", 0) => Code::golay(GolayVariant::Ternary),
        ("hamming", 2) => Code::hamming(Field::new(parse_num(rest[0], "q")?)?, parse_num(rest[1], "p")?)?,
        ("rs", 3) => Code::reed_solomon(
            Field::new(parse_num(rest[0], "q")?)?,
            parse_num(rest[1], "n")?,
            parse_num(rest[2], "dimension")?,
        )?,
        ("random", 3) => Code::random(
            Field::new(parse_num(rest[0], "q")?)?,
            parse_num(rest[1], "rows")?,
            parse_num(rest[2], "cols")?,
            args.seed,
        )?,
        ("file", _) if parts.len() == 2 => {
            let text = read_text(Path::new(parts[1]))?;
            Code::from_parity_check(ParityCheckMatrix::from_text(&text)?)
        }
        _ => return Err(bad()),
    };
    Ok(code)
}

fn symbol_width(field: &Field) -> CliResult<usize> {
    if field.characteristic() != 2 {
        return Err(Error::Usage(format!("--bits needs a binary field, got GF({})", field.q())).into());
    }
    Ok(field.extension_degree() as usize)
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Embed { code, cover, message, bits, wet_file, r, max_changes, solver, out } => {
            let code = build_code(&code)?;
            let field = code.field().clone();
            let x = io::parse_symbols(&read_text(&cover)?, &field)?;
            let wet = match &wet_file {
                Some(p) => io::parse_wet_mask(&read_text(p)?, x.len())?,
                None => Vec::new(),
            };
            let msg_len = code.redundancy().saturating_sub(r.unwrap_or(0));
            let m = if bits {
                let width = symbol_width(&field)?;
                let b = io::hex_to_bits(&read_text(&message)?, Some(msg_len * width))?;
                wetpaper::zzw::pack_symbols(&b, width)
            } else {
                io::parse_symbols(&read_text(&message)?, &field)?
            };
            let cover = CoverObject::new(x, wet)?;
            let solver = match solver {
                Solver::Auto if r.is_some() => Solver::Randomized,
                Solver::Auto if cover.wet_count() > 0 => Solver::Wet,
                Solver::Auto if max_changes.is_some() => Solver::Bounded,
                Solver::Auto => Solver::Plain,
                s => s,
            };
            let sol = match solver {
                Solver::Plain => wpc::solve_plain(&code, &cover, &m)?,
                Solver::Bounded => {
                    let t = max_changes
                        .ok_or_else(|| Error::Usage("bounded solver needs --max-changes".into()))?;
                    wpc::solve_bounded(&code, &cover, &m, t)?
                }
                Solver::Wet => wpc::solve_wet_unbounded(code.parity_check().matrix(), &cover, &m)?,
                Solver::Randomized | Solver::Auto => {
                    wpc::solve_randomized(&code, &cover, &m, r.unwrap_or(0))?
                }
            };
            let tail = io::format_symbols(&sol.random_tail);
            eprintln!("changes={} R={}", sol.changes, tail.trim_end());
            write_out(out.as_deref(), io::format_symbols(&sol.y).as_bytes())
        }
        Command::Extract { code, stego, r, bits, out } => {
            let code = build_code(&code)?;
            let field = code.field().clone();
            let y = io::parse_symbols(&read_text(&stego)?, &field)?;
            if r > code.redundancy() {
                return Err(Error::Usage(format!("r = {r} exceeds n − k = {}", code.redundancy())).into());
            }
            let s = code.syndrome(&y)?.into_symbols();
            let m = &s[..code.redundancy() - r];
            let text = if bits {
                let width = symbol_width(&field)?;
                let b: Vec<u8> = m
                    .iter()
                    .flat_map(|&v| (0..width).rev().map(move |i| ((v >> i) & 1) as u8))
                    .collect();
                io::bits_to_hex(&b)
            } else {
                io::format_symbols(m)
            };
            write_out(out.as_deref(), text.as_bytes())
        }
        Command::ZzwRandom { r_max, o, max_wet, seed, out, wet_out } => {
            let params = ZzwParams::new(r_max, o)?;
            if max_wet > params.column_len {
                return Err(Error::Usage(format!("max-wet exceeds column length {}", params.column_len)).into());
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut rows = Vec::with_capacity(params.n);
            let mut wet = Vec::with_capacity(params.n);
            for _ in 0..params.n {
                rows.push((0..params.column_len).map(|_| rng.gen_range(0..2u8)).collect());
                let count = rng.gen_range(0..=max_wet);
                let mut set = rand::seq::index::sample(&mut rng, params.column_len, count).into_vec();
                set.sort_unstable();
                wet.push(set);
            }
            write_out(Some(&out), &ZzwFile::new(params, rows)?.to_bytes(CONTAINER_MAGIC))?;
            write_out(Some(&wet_out), &ZzwFile::from_wet_sets(params, &wet)?.to_bytes(MASK_MAGIC))
        }
        Command::ZzwEmbed { cover, wet_file, message, payload_bits, out } => {
            let cover = ZzwFile::from_bytes(&read_bytes(&cover)?, CONTAINER_MAGIC)?;
            let mask = ZzwFile::from_bytes(&read_bytes(&wet_file)?, MASK_MAGIC)?;
            if mask.params != cover.params {
                return Err(Error::Usage("wet mask and cover have different parameters".into()).into());
            }
            let mut payload = io::hex_to_bits(&read_text(&message)?, None)?;
            if let Some(n) = payload_bits {
                if n > payload.len() {
                    return Err(Error::Usage(format!("payload file holds only {} bits", payload.len())).into());
                }
                payload.truncate(n);
            }
            let scheme = ZzwScheme::new(cover.params)?;
            let columns = cover
                .rows
                .iter()
                .zip(mask.wet_sets())
                .map(|(bits, wet)| ColumnBlock::new(bits.clone(), wet))
                .collect::<wetpaper::Result<Vec<_>>>()?;
            let plan = match scheme.plan(&columns) {
                Ok(plan) => plan,
                Err(Error::NoFeasiblePlan) => {
                    let marked = scheme.mark_failure(&columns)?;
                    write_out(Some(&out), &ZzwFile::new(cover.params, marked)?.to_bytes(CONTAINER_MAGIC))?;
                    return Err(Error::NoFeasiblePlan.into());
                }
                Err(e) => return Err(e.into()),
            };
            eprintln!(
                "r={} f={} capacity={} payload={}",
                plan.r,
                plan.f,
                plan.capacity_bits(&cover.params),
                payload.len()
            );
            let stego = scheme.embed(&columns, &payload, &plan)?;
            write_out(Some(&out), &ZzwFile::new(cover.params, stego)?.to_bytes(CONTAINER_MAGIC))
        }
        Command::ZzwExtract { stego, payload_bits, out } => {
            let stego = ZzwFile::from_bytes(&read_bytes(&stego)?, CONTAINER_MAGIC)?;
            let scheme = ZzwScheme::new(stego.params)?;
            let ex = scheme.extract(&stego.rows)?;
            eprintln!("r={} f={} capacity={}", ex.r, ex.f, ex.payload.len());
            let mut payload = ex.payload;
            if let Some(n) = payload_bits {
                if n > payload.len() {
                    return Err(Error::Usage(format!("only {} bits were carried", payload.len())).into());
                }
                payload.truncate(n);
            }
            write_out(out.as_deref(), io::bits_to_hex(&payload).as_bytes())
        }
        Command::MinR { code, wet } => {
            let code = build_code(&code)?;
            println!("{}", wpc::min_r(&code, wet)?);
            Ok(())
        }
        Command::Bounds { code, seed, r, q, alpha } => {
            if let Some(alpha) = alpha {
                let q = q.unwrap_or(2);
                println!("{}", analysis::sphere_covering_bound(q, alpha)?);
                return Ok(());
            }
            let code = build_code(&CodeArgs { code: code.expect("clap enforces"), seed })?;
            let rep = analysis::bound_report(&code, r)?;
            println!("alpha,e_bound,e_actual,loss");
            println!("{},{},{},{}", rep.alpha, rep.e_bound, rep.e_actual, rep.loss);
            Ok(())
        }
        Command::Simulate { code: code_args, wet, r, solver, trials, blocks, out } => {
            let code = build_code(&code_args)?;
            let mc = match solver {
                SimSolver::Randomized => McSolver::Randomized { code: &code, r },
                SimSolver::Wet => McSolver::WetUnbounded { code: &code },
                SimSolver::FreshMatrix => McSolver::RandomMatrix {
                    field: code.field().clone(),
                    rows: code.redundancy(),
                    cols: code.n(),
                },
            };
            let est = analysis::failure_rate_mc(&mc, wet, blocks, trials, code_args.seed)?;
            println!("trials,successes,block_rate,message_rate");
            println!("{},{},{},{}", est.trials, est.successes, est.block_rate, est.message_rate);
            match out {
                Some(p) => write_out(Some(&p), est.to_csv().as_bytes()),
                None => Ok(()),
            }
        }
        Command::Fig1 { code, out } => {
            let code = build_code(&code)?;
            let rows = analysis::fig1_table(&code)?;
            write_out(out.as_deref(), analysis::fig1_csv(&rows).as_bytes())
        }
        Command::ExportH { code, out } => {
            let code = build_code(&code)?;
            write_out(out.as_deref(), code.parity_check().to_text().as_bytes())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
