use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use rps::cache::{solve_cached, Cache};
use rps::oeis::{Lookup, OeisClient};
use rps::{json, report, seqfile, SolveOptions};
use rps_core::words::{oracle_terms, InstanceSpec, Symmetry, Word};

#[derive(Parser)]
#[command(name = "rps", version, about = "Count words whose factor occurrences satisfy a linear relation")]
struct Cli {
    /// Skip the on-disk proposition cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a1*#w1 - a2*#w2 = r.
    Solve {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        w1: String,
        #[arg(long)]
        w2: String,
        #[arg(long, default_value_t = 1)]
        a1: i64,
        #[arg(long, default_value_t = 1)]
        a2: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        r: i64,
        #[command(flatten)]
        out: Output,
    },
    /// Solve sum c_i * #p_i = r for several words.
    SolveMulti {
        #[arg(long)]
        m: usize,
        /// WORD:WEIGHT, repeatable.
        #[arg(long = "pattern", required = true, allow_hyphen_values = true)]
        patterns: Vec<String>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        r: i64,
        #[command(flatten)]
        out: Output,
    },
    /// One proposition per canonical pair of length-k words.
    Webbook {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        budget: Budget,
        /// Directory for the text and JSON files; stdout otherwise.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SymmetryArg::PermsRev)]
        symmetry: SymmetryArg,
    },
    /// Look a sequence up in the OEIS.
    Oeis {
        /// Comma-separated terms.
        #[arg(long, conflicts_with_all = ["m", "w1", "w2"])]
        terms: Option<String>,
        #[arg(long, requires_all = ["w1", "w2"])]
        m: Option<usize>,
        #[arg(long)]
        w1: Option<String>,
        #[arg(long)]
        w2: Option<String>,
        /// Number of terms to query when computing them.
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long)]
        offline: bool,
    },
}

#[derive(Args)]
struct Budget {
    #[arg(long, default_value_t = 50)]
    terms: usize,
    #[arg(long, default_value_t = 10)]
    guard: usize,
    #[arg(long, default_value_t = 12)]
    max_deg_t: usize,
    #[arg(long, default_value_t = 12)]
    max_deg_p: usize,
    #[arg(long, default_value_t = 8)]
    max_order: usize,
    #[arg(long, default_value_t = 12)]
    max_deg: usize,
    #[arg(long, default_value_t = 2000)]
    asymptotic_terms: usize,
}

impl Budget {
    fn options(&self) -> SolveOptions {
        SolveOptions {
            terms: self.terms,
            guard: self.guard,
            max_deg_t: self.max_deg_t,
            max_deg_p: self.max_deg_p,
            max_order: self.max_order,
            max_deg: self.max_deg,
            asymptotic_terms: self.asymptotic_terms,
        }
    }
}

#[derive(Args)]
struct Output {
    #[command(flatten)]
    budget: Budget,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the terms as an `n a(n)` sequence file.
    #[arg(long)]
    seq: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SymmetryArg {
    #[value(name = "perms")]
    Perms,
    #[value(name = "perms+rev")]
    PermsRev,
}

impl From<SymmetryArg> for Symmetry {
    fn from(s: SymmetryArg) -> Self {
        match s {
            SymmetryArg::Perms => Symmetry::LetterPerms,
            SymmetryArg::PermsRev => Symmetry::LetterPermsAndReversal,
        }
    }
}

fn open_cache(disabled: bool) -> Option<Cache> {
    if disabled {
        return None;
    }
    let dir = Cache::default_dir();
    match Cache::open(&dir) {
        Ok(c) => Some(c),
        Err(e) => {
            log::warn!("cache disabled, cannot use {}: {e}", dir.display());
            None
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn solve(spec: InstanceSpec, out: &Output, cache: Option<&Cache>) -> Result<()> {
    let p = solve_cached(&spec, &out.budget.options(), cache);
    let text = match out.format {
        Format::Text => report::proposition_text(&p, 1),
        Format::Json => json::to_string(&p) + "\n",
    };
    emit(&text, out.out.as_ref())?;
    if let Some(path) = &out.seq {
        let f = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
        seqfile::write_terms(std::io::BufWriter::new(f), &p.terms)?;
    }
    Ok(())
}

fn parse_pattern(m: usize, text: &str) -> Result<(Word, i64, rps_core::words::Lettering)> {
    let Some((word, weight)) = text.rsplit_once(':') else { bail!("expected WORD:WEIGHT, got {text:?}") };
    let (w, l) = Word::parse(word, m)?;
    Ok((w, weight.parse().with_context(|| format!("bad weight in {text:?}"))?, l))
}

fn main() -> Result<()> {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let cache = open_cache(cli.no_cache);
    match cli.command {
        Command::Solve { m, w1, w2, a1, a2, r, out } => {
            let spec = InstanceSpec::parse(m, &[&w1, &w2], vec![a1, -a2], r)?;
            solve(spec, &out, cache.as_ref())
        }
        Command::SolveMulti { m, patterns, r, out } => {
            let parsed = patterns.iter().map(|p| parse_pattern(m, p)).collect::<Result<Vec<_>>>()?;
            let lettering = parsed.first().map(|p| p.2).unwrap_or_default();
            let words = parsed.iter().map(|p| p.0.clone()).collect();
            let weights = parsed.iter().map(|p| p.1).collect();
            let spec = InstanceSpec::new(m, words, weights, r)?.with_lettering(lettering);
            solve(spec, &out, cache.as_ref())
        }
        Command::Webbook { m, k, budget, out, symmetry } => {
            let book = rps::generate_webbook(m, k, symmetry.into(), &budget.options(), cache.as_ref())?;
            let text = rps::report::webbook_text(&book);
            match out {
                Some(dir) => {
                    fs::create_dir_all(&dir)?;
                    fs::write(dir.join(format!("oRPS{m}{k}.txt")), &text)?;
                    let all: Vec<_> = book.propositions.iter().map(json::to_json).collect();
                    fs::write(dir.join(format!("oRPS{m}{k}.json")), serde_json::to_string_pretty(&all)? + "\n")?;
                    Ok(())
                }
                None => emit(&text, None),
            }
        }
        Command::Oeis { terms, m, w1, w2, count, offline } => {
            let seq: Vec<BigUint> = match (terms, m, w1, w2) {
                (Some(t), ..) => t
                    .split(',')
                    .map(|s| s.trim().parse::<BigUint>().with_context(|| format!("bad term {s:?}")))
                    .collect::<Result<_>>()?,
                (None, Some(m), Some(w1), Some(w2)) => {
                    let spec = InstanceSpec::parse(m, &[&w1, &w2], vec![1, -1], 0)?;
                    oracle_terms(&spec, count.max(1) - 1)
                }
                _ => bail!("give either --terms or --m with --w1 and --w2"),
            };
            let client = OeisClient::new(Cache::default_dir().join("oeis"), offline);
            match client.lookup(&seq) {
                Lookup::Found(matches) if matches.is_empty() => println!("no matches"),
                Lookup::Found(matches) => {
                    for hit in matches {
                        println!("{} (prefix {}): {}", hit.id, hit.matched_prefix_length, hit.name);
                    }
                }
                Lookup::Unavailable(why) => {
                    println!("lookup unavailable: {why}");
                    std::process::exit(2);
                }
            }
            Ok(())
        }
    }
}
