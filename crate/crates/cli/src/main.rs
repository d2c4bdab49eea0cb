//! ringlab: build finite commutative rings from a small construction
//! language, list and classify their ideals against the absorbing-prime
//! predicate family, verify structure laws over a ring corpus, and hunt
//! for examples by flag expression.

mod expr;
mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use ringlab_core::{classify, enumerate_ideals, FiniteRing, Ideal, RingSpec};
use ringlab_suite::{
    default_corpus, parse_corpus, run_suite, search_open_question, Corpus, RunOptions,
};

use crate::expr::FlagExpr;
use crate::render::Format;

#[derive(Parser)]
#[command(name = "ringlab", version)]
#[command(about = "Finite commutative ring explorer: ideal lattices, absorbing-prime \
                   classification, and exhaustive structure-law verification")]
struct Cli {
    /// Largest ring order any command may construct (default 256; the
    /// RINGLAB_CAP environment variable overrides the default).
    #[arg(long, global = true)]
    cap: Option<usize>,

    /// Output format; json carries the full report.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Worker threads for corpus commands (default: all cores).
    #[arg(long, global = true)]
    parallelism: Option<usize>,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Ring construction facts.
    Ring {
        #[command(subcommand)]
        cmd: RingCmd,
    },

    /// Ideal lattice listings.
    Ideals {
        #[command(subcommand)]
        cmd: IdealsCmd,
    },

    /// Classification profiles, with a violating tuple for every false flag.
    Classify {
        /// Ring construction, e.g. "Z12", "Z2 x Z4", or "Z8 (+) {0,4}".
        spec: String,

        /// Classify only the ideal generated by these element indices
        /// (comma separated); default is every ideal of the ring.
        #[arg(long, value_delimiter = ',')]
        gens: Option<Vec<usize>>,
    },

    /// Run the structure-law checks over a corpus of rings.
    Verify {
        /// Corpus file, one construction per line; default is built in.
        #[arg(long)]
        corpus: Option<PathBuf>,

        /// Case-insensitive substring filter on check ids.
        #[arg(long)]
        check: Option<String>,

        /// Include slow-tier rings and the larger constructed family.
        #[arg(long)]
        slow: bool,

        /// Write the report to a file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },

    /// List proper ideals whose profile satisfies a flag expression.
    Search {
        /// Boolean expression over flag names with !, &&, || and parens,
        /// e.g. "weakly_one_absorbing_prime && !weakly_prime".
        expr: String,

        /// Corpus file, one construction per line; default is built in.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },

    /// Scan for nonzero triple products of proper ideals landing in a
    /// weakly 1-absorbing prime ideal without either factor containment;
    /// hits are recorded as data, never judged.
    OpenQuestion {
        /// Corpus file, one construction per line; default is built in.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum RingCmd {
    /// Order, units, nilradical, locality, and maximal ideals of one ring.
    Info { spec: String },
}

#[derive(Subcommand)]
enum IdealsCmd {
    /// Every ideal with its size and lattice flags.
    List { spec: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    let cap = resolve_cap(cli.cap)?;
    if let Some(threads) = cli.parallelism {
        if threads == 0 {
            return Err("parallelism must be at least 1".into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| format!("thread pool: {e}"))?;
    }
    let format = cli.format;
    match cli.command {
        Commands::Ring { cmd: RingCmd::Info { spec } } => cmd_ring_info(&spec, cap, format),
        Commands::Ideals { cmd: IdealsCmd::List { spec } } => cmd_ideals_list(&spec, cap, format),
        Commands::Classify { spec, gens } => cmd_classify(&spec, gens.as_deref(), cap, format),
        Commands::Verify { corpus, check, slow, output } => {
            cmd_verify(corpus, check, slow, output, cap, format)
        }
        Commands::Search { expr, corpus } => cmd_search(&expr, corpus, cap, format),
        Commands::OpenQuestion { corpus } => cmd_open_question(corpus, cap, format),
    }
}

fn resolve_cap(flag: Option<usize>) -> Result<usize, String> {
    let cap = match flag {
        Some(v) => v,
        None => match std::env::var("RINGLAB_CAP") {
            Ok(raw) => raw
                .trim()
                .parse()
                .map_err(|_| format!("RINGLAB_CAP must be an integer, got '{raw}'"))?,
            Err(_) => 256,
        },
    };
    if cap < 2 {
        return Err("cap must be at least 2".into());
    }
    Ok(cap)
}

fn build_ring(text: &str, cap: usize) -> Result<Arc<FiniteRing>, String> {
    let spec = RingSpec::parse(text).map_err(|e| e.to_string())?;
    spec.build(cap).map_err(|e| e.to_string())
}

/// Single writer: every command renders one string and emits it once.
fn emit(rendered: String, output: Option<&PathBuf>) -> Result<(), String> {
    match output {
        Some(path) => {
            fs::write(path, rendered).map_err(|e| format!("writing {}: {e}", path.display()))
        }
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn load_corpus(path: Option<&PathBuf>, slow: bool) -> Result<(Corpus, String), String> {
    match path {
        Some(p) => {
            let content = fs::read_to_string(p)
                .map_err(|e| format!("reading {}: {e}", p.display()))?;
            let corpus = parse_corpus(&content).map_err(|e| e.to_string())?;
            Ok((corpus, p.display().to_string()))
        }
        None => Ok((default_corpus(slow), "default".into())),
    }
}

fn cmd_ring_info(text: &str, cap: usize, format: Format) -> Result<u8, String> {
    let ring = build_ring(text, cap)?;
    let lattice = enumerate_ideals(&ring, cap).map_err(|e| e.to_string())?;
    let nilradical = Ideal::nilradical(&ring);
    let doc = render::RingInfoDoc {
        spec: ring.label().to_string(),
        order: ring.order(),
        units: ring.units_count(),
        local: ring.is_local(),
        reduced: nilradical.len() == 1,
        nilradical: nilradical.members().to_vec(),
        maximal_ideals: lattice
            .maximal_ideals()
            .iter()
            .map(|i| i.members().to_vec())
            .collect(),
        // Construction validates the ring axioms and fails hard otherwise,
        // so a built ring is always validated.
        validated: true,
    };
    emit(render::ring_info(&doc, &ring, format), None)?;
    Ok(0)
}

fn cmd_ideals_list(text: &str, cap: usize, format: Format) -> Result<u8, String> {
    let ring = build_ring(text, cap)?;
    let lattice = enumerate_ideals(&ring, cap).map_err(|e| e.to_string())?;
    let doc = render::IdealsDoc {
        ring: ring.label().to_string(),
        order: ring.order(),
        count: lattice.entries().len(),
        ideals: lattice
            .entries()
            .iter()
            .enumerate()
            .map(|(index, e)| render::IdealRow {
                index,
                size: e.ideal.len(),
                proper: e.proper,
                maximal: e.maximal,
                prime: e.prime,
                members: e.ideal.members().to_vec(),
            })
            .collect(),
    };
    emit(render::ideals(&doc, &ring, format), None)?;
    Ok(0)
}

fn cmd_classify(
    text: &str,
    gens: Option<&[usize]>,
    cap: usize,
    format: Format,
) -> Result<u8, String> {
    let ring = build_ring(text, cap)?;
    let ideals = match gens {
        Some(gens) => vec![Ideal::generated(&ring, gens).map_err(|e| e.to_string())?],
        None => enumerate_ideals(&ring, cap)
            .map_err(|e| e.to_string())?
            .entries()
            .iter()
            .map(|e| e.ideal.clone())
            .collect(),
    };
    let rows = ideals
        .iter()
        .map(|ideal| {
            Ok(render::ClassifyRow {
                members: ideal.members().to_vec(),
                profile: classify(ideal).map_err(|e| e.to_string())?,
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    let doc = render::ClassifyDoc { ring: ring.label().to_string(), ideals: rows };
    emit(render::classify(&doc, &ring, format), None)?;
    Ok(0)
}

fn cmd_verify(
    corpus: Option<PathBuf>,
    check: Option<String>,
    slow: bool,
    output: Option<PathBuf>,
    cap: usize,
    format: Format,
) -> Result<u8, String> {
    let (corpus, source) = load_corpus(corpus.as_ref(), slow)?;
    let options = RunOptions { cap, slow, check_filter: check, corpus_source: source };
    let report = run_suite(&corpus, &options);
    emit(render::suite_report(&report, format), output.as_ref())?;
    Ok(report.exit_code() as u8)
}

fn cmd_search(
    expr_text: &str,
    corpus: Option<PathBuf>,
    cap: usize,
    format: Format,
) -> Result<u8, String> {
    let expr = FlagExpr::parse(expr_text)?;
    let (corpus, _) = load_corpus(corpus.as_ref(), false)?;
    let entries = corpus.active(false);
    let scanned: Vec<Result<(u64, Vec<render::SearchHit>), String>> = entries
        .par_iter()
        .map(|entry| {
            let ring = entry.spec.build(cap).map_err(|e| format!("{}: {e}", entry.text))?;
            let lattice =
                enumerate_ideals(&ring, cap).map_err(|e| format!("{}: {e}", entry.text))?;
            let mut count = 0u64;
            let mut hits = Vec::new();
            for e in lattice.entries() {
                if !e.proper {
                    continue;
                }
                count += 1;
                let profile = classify(&e.ideal).map_err(|e| format!("{}: {e}", entry.text))?;
                if expr.eval(&profile) {
                    hits.push(render::SearchHit {
                        ring: ring.label().to_string(),
                        members: e.ideal.members().to_vec(),
                        member_names: e
                            .ideal
                            .members()
                            .iter()
                            .map(|&m| ring.elem_name(m).to_string())
                            .collect(),
                        profile,
                    });
                }
            }
            Ok((count, hits))
        })
        .collect();

    let mut doc = render::SearchDoc {
        expression: expr_text.to_string(),
        rings_scanned: 0,
        ideals_scanned: 0,
        hits: Vec::new(),
        build_errors: Vec::new(),
    };
    for item in scanned {
        match item {
            Ok((count, hits)) => {
                doc.rings_scanned += 1;
                doc.ideals_scanned += count;
                doc.hits.extend(hits);
            }
            Err(e) => doc.build_errors.push(e),
        }
    }
    let failed = !doc.build_errors.is_empty();
    emit(render::search(&doc, format), None)?;
    Ok(if failed { 2 } else { 0 })
}

fn cmd_open_question(
    corpus: Option<PathBuf>,
    cap: usize,
    format: Format,
) -> Result<u8, String> {
    let (corpus, source) = load_corpus(corpus.as_ref(), false)?;
    let options = RunOptions { cap, slow: false, check_filter: None, corpus_source: source };
    let report = search_open_question(&corpus, &options);
    let failed = !report.build_errors.is_empty();
    emit(render::open_question(&report, format), None)?;
    Ok(if failed { 2 } else { 0 })
}
