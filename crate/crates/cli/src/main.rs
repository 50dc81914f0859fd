//! `fanocheck`: verify the Betti/Chern identity on smooth toric Fano
//! polytopes and Hodge diamonds.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fanocheck::corpus::{dim2_corpus, gen_direct_sum, gen_pn};
use fanocheck::io::{read_polytope, write_polytope};
use fanocheck::lattice_polytope::FanoPolytope;
use fanocheck::report::{
    expand_paths, run_batch, run_check, run_diamond, CheckOptions, RunReport,
};
use fanocheck::Error;

#[derive(Parser)]
#[command(name = "fanocheck", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on one polytope or diamond file.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// The file holds the anticanonical polytope in M instead of the
        /// Fano polytope in N.
        #[arg(long)]
        dual: bool,
    },
    /// Check many files (directories are expanded one level).
    Batch {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Process files one at a time.
        #[arg(long)]
        sequential: bool,
    },
    /// Write a generated polytope file.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Write a built-in corpus as polytope files.
    Corpus {
        #[command(subcommand)]
        set: CorpusSet,
    },
    /// Check a Hodge diamond file.
    Diamond {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// Projective space P^N.
    Pn {
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Direct sum of two polytope files (product of the varieties).
    Sum {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum CorpusSet {
    /// The five smooth toric del Pezzo surfaces.
    Dim2 {
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn emit(report: &RunReport, format: Format) -> ExitCode {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    ExitCode::from(report.exit_code() as u8)
}

fn load_fano(path: &Path) -> Result<FanoPolytope, Error> {
    let file = read_polytope(path)?;
    FanoPolytope::new(file.dim, file.vertices)
}

fn save(path: &Path, polytope: &FanoPolytope, comment: &str) -> Result<(), Error> {
    let text = write_polytope(polytope.dim(), polytope.vertices(), Some(comment));
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn generate(family: GenFamily) -> Result<(), Error> {
    match family {
        GenFamily::Pn { n, output } => save(&output, &gen_pn(n)?, &format!("P{n}")),
        GenFamily::Sum {
            first,
            second,
            output,
        } => {
            let sum = gen_direct_sum(&load_fano(&first)?, &load_fano(&second)?)?;
            let comment = format!("{} (+) {}", first.display(), second.display());
            save(&output, &sum, &comment)
        }
    }
}

fn write_corpus(set: CorpusSet) -> Result<(), Error> {
    match set {
        CorpusSet::Dim2 { output } => {
            fs::create_dir_all(&output)
                .map_err(|e| Error::Io(format!("{}: {e}", output.display())))?;
            for entry in dim2_corpus() {
                let path = output.join(format!("{}.txt", entry.name));
                save(&path, &entry.polytope, &entry.name)?;
            }
            Ok(())
        }
    }
}

fn report_error(result: Result<(), Error>) -> ExitCode {
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check { file, format, dual } => emit(&run_check(&file, &CheckOptions { dual }), format),
        Command::Diamond { file, format } => emit(&run_diamond(&file), format),
        Command::Batch {
            paths,
            format,
            sequential,
        } => match expand_paths(&paths) {
            Ok(files) => emit(
                &run_batch(&files, &CheckOptions::default(), !sequential),
                format,
            ),
            Err(e) => report_error(Err(e)),
        },
        Command::Gen { family } => report_error(generate(family)),
        Command::Corpus { set } => report_error(write_corpus(set)),
    }
}
