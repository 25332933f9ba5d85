use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use polyhelly::census::{run_census, to_csv};
use polyhelly::engine::check_certificate;
use polyhelly::enumerate::{EnumerationCursor, MAX_ENUMERATION_SIZE};
use polyhelly::io::{polyomino_from_file, polyomino_from_inline};
use polyhelly::structures::{fq_witness, make_fq};
use polyhelly::{helly_number, CertificateFile, Polyomino, WitnessCertificate};

/// Helly numbers of polyominoes.
#[derive(Parser)]
#[command(name = "polyhelly", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count polyominoes of each size up to --max-size.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=MAX_ENUMERATION_SIZE as u64))]
        max_size: u64,
        /// Count translation classes.
        #[arg(long, conflicts_with = "free")]
        fixed: bool,
        /// Count symmetry classes (default).
        #[arg(long)]
        free: bool,
    },
    /// Compute the Helly number of one polyomino.
    Helly {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Write the witness certificate to this path.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Tabulate Helly numbers of all free polyominoes up to --max-size as CSV.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=MAX_ENUMERATION_SIZE as u64))]
        max_size: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, env = "HELLY_JOBS", default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
    },
    /// Build and verify the witness family of the bridge polyomino F_q.
    Fq {
        #[arg(long, value_parser = clap::value_parser!(u64).range(4..=4096))]
        q: u64,
        /// Do not run the exact engine (it runs by default for q <= 6).
        #[arg(long)]
        skip_engine: bool,
        /// Write the witness certificate to this path.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Check a certificate file.
    Verify {
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Print a polyomino as ASCII art.
    Render {
        #[command(flatten)]
        shape: ShapeArgs,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ShapeArgs {
    /// Inline cells: "x,y;x,y;..."
    #[arg(long)]
    cells: Option<String>,
    /// File with one "x y" pair per line.
    #[arg(long)]
    file: Option<PathBuf>,
}

/// Failure carrying its exit status.
struct Exit(u8, String);

impl<E: std::fmt::Display> From<E> for Exit {
    fn from(e: E) -> Self {
        Exit(2, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Exit {
    Exit(2, msg.into())
}

fn load_shape(args: &ShapeArgs) -> Result<Polyomino, Exit> {
    match (&args.cells, &args.file) {
        (Some(inline), _) => polyomino_from_inline(inline).map_err(|e| usage(format!("--cells: {e}"))),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            polyomino_from_file(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
        }
        (None, None) => Err(usage("one of --cells or --file is required")),
    }
}

fn write_certificate(path: &Path, cert: &WitnessCertificate) -> Result<(), Exit> {
    fs::write(path, cert.to_json())
        .with_context(|| format!("writing {}", path.display()))
        .map_err(|e| usage(format!("{e:#}")))
}

fn run(cli: Cli) -> Result<(), Exit> {
    match cli.command {
        Command::Enumerate { max_size, fixed, free: _ } => {
            let max = max_size as usize;
            let mut counts = vec![0usize; max + 1];
            for p in EnumerationCursor::new(max)? {
                if fixed || p.is_canonical() {
                    counts[p.len()] += 1;
                }
            }
            for (n, c) in counts.iter().enumerate().skip(1) {
                println!("n={n} count={c}");
            }
        }
        Command::Helly { shape, certificate } => {
            let p = load_shape(&shape)?;
            let result = helly_number(&p).map_err(|e| Exit(1, e.to_string()))?;
            println!("helly={} size={} shortcut={}", result.helly_number, p.len(), result.shortcut.tag());
            if let Some(path) = certificate {
                write_certificate(&path, &result.certificate)?;
            }
        }
        Command::Table { max_size, out, jobs } => {
            fs::write(&out, "").map_err(|e| usage(format!("{}: {e}", out.display())))?;
            let rows = run_census(max_size as usize, jobs as usize, |row| {
                println!("n={} total={} seconds={:.2}", row.n, row.total, row.seconds);
            })
            .map_err(|e| Exit(1, e.to_string()))?;
            let csv = to_csv(&rows).map_err(|e| Exit(1, e.to_string()))?;
            fs::write(&out, csv).map_err(|e| usage(format!("{}: {e}", out.display())))?;
        }
        Command::Fq { q, skip_engine, certificate } => {
            let q = q as usize;
            let fq = make_fq(q)?;
            let cert = fq_witness(q).map_err(|e| Exit(1, e.to_string()))?;
            let verified = check_certificate(&cert).is_ok();
            print!("{}", fq.render_ascii());
            let mut line = format!("size={} witness={} verified={verified}", fq.len(), cert.copies.len());
            let mut ok = verified;
            if !skip_engine && q <= 6 {
                let h = helly_number(&fq).map_err(|e| Exit(1, e.to_string()))?.helly_number;
                line.push_str(&format!(" helly={h}"));
                ok &= h == q + 1;
            }
            println!("{line}");
            if let Some(path) = certificate {
                write_certificate(&path, &cert)?;
            }
            if !ok {
                return Err(Exit(1, format!("F_{q}: verification mismatch")));
            }
        }
        Command::Verify { certificate } => {
            let text = fs::read_to_string(&certificate).map_err(|e| usage(format!("{}: {e}", certificate.display())))?;
            let raw = CertificateFile::parse(&text).map_err(|e| {
                usage(format!("{}: malformed at line {} column {}: {e}", certificate.display(), e.line(), e.column()))
            })?;
            let cert = match raw.into_certificate() {
                Ok(cert) => cert,
                Err(reason) => {
                    println!("INVALID: {reason}");
                    return Err(Exit(1, String::new()));
                }
            };
            match check_certificate(&cert) {
                Ok(()) => println!("VALID h={} copies={}", cert.h, cert.copies.len()),
                Err(v) => {
                    println!("INVALID: {v}");
                    return Err(Exit(1, String::new()));
                }
            }
        }
        Command::Render { shape } => print!("{}", load_shape(&shape)?.render_ascii()),
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit(code, msg)) => {
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(code)
        }
    }
}
