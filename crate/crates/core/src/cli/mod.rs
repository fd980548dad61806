pub mod config;

use std::collections::HashSet;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};

use wordlab::ingest::{self, AnswerDatabase, IngestOptions, IngestOutcome};
use wordlab::metrics::{EmbeddingTable, MetricSuite, PhoneticLexicon};
use wordlab::pipeline;
use wordlab::solver::{self, Replayer};
use wordlab::{FeedbackPattern, GameHistory, Lexicon, Word};

use config::{CommonArgs, RunConfig};

pub const RECORDS_FILE: &str = "records.csv";
pub const TALLY_FILE: &str = "rejections.csv";
pub const REPLAY_FILE: &str = "replay.csv";
pub const METRICS_FILE: &str = "metrics.csv";

#[derive(Parser, Debug)]
#[command(name = "wordlab", version, about = "Wordle solver benchmarks and human-vs-solver gameplay analysis")]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Play every solution with the configured policy and report guess counts.
    Bench,
    /// Extract game records from post dumps.
    Ingest,
    /// Generate solver counterparts for every human guess after the first.
    Replay,
    /// Compute metrics on the replay output and write the comparison report.
    Analyze,
    /// Rebuild the comparison report from an existing metrics file.
    Report,
    /// Rank next guesses for a partial game.
    Suggest {
        /// Alternating guess and pattern tokens, e.g. `salet bbygb`.
        history: Vec<String>,
        /// How many guesses to print.
        #[arg(long, default_value_t = 10)]
        top: usize,
    },
}

impl Command {
    fn stage(&self) -> &'static str {
        match self {
            Command::Bench => "bench",
            Command::Ingest => "ingest",
            Command::Replay => "replay",
            Command::Analyze => "analyze",
            Command::Report => "report",
            Command::Suggest { .. } => "suggest",
        }
    }
}

/// Runs a parsed command line, returning the message for a failed run.
pub fn run(cli: Cli) -> Result<(), String> {
    let stage = cli.command.stage();
    let config = RunConfig::resolve(&cli.common).map_err(|e| format!("{stage}: {e}"))?;
    if let Some(jobs) = config.jobs {
        // fails only if a pool already exists, which is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let result = match cli.command {
        Command::Bench => bench(&config),
        Command::Ingest => ingest_stage(&config),
        Command::Replay => replay(&config),
        Command::Analyze => analyze(&config),
        Command::Report => report(&config),
        Command::Suggest { history, top } => suggest(&config, &history, top),
    };
    result.map_err(|e| format!("{stage}: {e}"))
}

type StageResult = Result<(), String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn lexicon(config: &RunConfig) -> Result<Lexicon, String> {
    match (&config.guessable, &config.solutions) {
        (None, None) => Ok(Lexicon::bundled()),
        (Some(g), Some(s)) => Lexicon::from_files(g, s).map_err(err),
        _ => Err("--guessable and --solutions must be given together".into()),
    }
}

fn prepare_out(config: &RunConfig) -> Result<&Path, String> {
    std::fs::create_dir_all(&config.out).map_err(|e| format!("{}: {e}", config.out.display()))?;
    Ok(&config.out)
}

/// Path of an earlier stage's output, or an error naming that stage.
fn prerequisite(config: &RunConfig, file: &str, producer: &str) -> Result<PathBuf, String> {
    let path = config.out.join(file);
    if path.is_file() {
        Ok(path)
    } else {
        Err(format!(
            "missing {}; run the {producer} stage first",
            path.display()
        ))
    }
}

fn bench(config: &RunConfig) -> StageResult {
    let lexicon = lexicon(config)?;
    let solver = config.solver();
    let started = Instant::now();
    let summary = solver::evaluate_policy(&lexicon, &solver).map_err(err)?;
    let elapsed = started.elapsed();
    let out = prepare_out(config)?;
    let path = out.join(format!("bench-{}-{}.csv", summary.heuristic, summary.opener));
    pipeline::write_bench(&path, &summary).map_err(err)?;
    for (count, games) in &summary.histogram {
        println!("{count}\t{games}");
    }
    println!("{} seconds={:.1}", pipeline::bench_summary_line(&summary), elapsed.as_secs_f64());
    Ok(())
}

fn ingest_stage(config: &RunConfig) -> StageResult {
    let answers = config.answers.as_ref().ok_or("no answers file given (--answers)")?;
    if config.dumps.is_empty() {
        return Err("no dump given (--dump)".into());
    }
    let lexicon = lexicon(config)?;
    let db = AnswerDatabase::load(answers).map_err(err)?;
    let options = IngestOptions { strict: config.strict };
    let mut outcome = IngestOutcome::default();
    for dump in &config.dumps {
        outcome.merge(ingest::ingest_dump(dump, &db, &lexicon, options).map_err(err)?);
    }
    let out = prepare_out(config)?;
    ingest::write_records(&out.join(RECORDS_FILE), &outcome.records).map_err(err)?;
    ingest::write_tally(&out.join(TALLY_FILE), &outcome).map_err(err)?;
    println!(
        "posts={} games={} kept={} rejected={} skipped_lines={}",
        outcome.posts_scanned,
        outcome.games_scanned,
        outcome.records.len(),
        outcome.rejections.total(),
        outcome.skipped_lines
    );
    for (reason, count) in outcome.rejections.nonzero() {
        println!("{}\t{count}", reason.name());
    }
    Ok(())
}

fn replay(config: &RunConfig) -> StageResult {
    let records_path = prerequisite(config, RECORDS_FILE, "ingest")?;
    let records = ingest::read_records(&records_path).map_err(err)?;
    let lexicon = lexicon(config)?;
    let solver = config.solver();
    solver.validate(&lexicon).map_err(err)?;
    let replayer = Replayer::new(&lexicon, solver);
    let mut results = Vec::with_capacity(records.len());
    let mut failed = 0;
    for (record, result) in records.iter().zip(replayer.replay_all(&records)) {
        match result {
            Ok(r) => results.push(r),
            Err(e) => {
                failed += 1;
                eprintln!("replay: skipping game {}: {e}", record.game_id);
            }
        }
    }
    let rows = pipeline::replay_rows(&results);
    let out = prepare_out(config)?;
    pipeline::write_replay(&out.join(REPLAY_FILE), &rows).map_err(err)?;
    println!("games={} replayed={} skipped={failed} steps={}", records.len(), results.len(), rows.len());
    Ok(())
}

fn metric_suite(config: &RunConfig, lexicon: &Lexicon) -> Result<MetricSuite, String> {
    let phonetic = match &config.phonetic {
        Some(p) => PhoneticLexicon::load(p).map_err(err)?,
        None => PhoneticLexicon::bundled(),
    };
    let keep: HashSet<Word> = lexicon.guessable().iter().copied().collect();
    let mut tables = Vec::new();
    for source in &config.embeddings {
        let dim = EmbeddingTable::sniff_dim(&source.path).map_err(err)?;
        let table = EmbeddingTable::load(&source.path, &source.name, dim, Some(&keep)).map_err(err)?;
        eprintln!("analyze: embeddings {} cover {} of {} guessable words", source.name, table.len(), keep.len());
        tables.push(table);
    }
    Ok(MetricSuite::new(phonetic, tables, config.convention))
}

fn analyze(config: &RunConfig) -> StageResult {
    let replay_path = prerequisite(config, REPLAY_FILE, "replay")?;
    let rows = pipeline::read_replay(&replay_path).map_err(err)?;
    let lexicon = lexicon(config)?;
    let suite = metric_suite(config, &lexicon)?;
    let metrics = pipeline::compute_metrics(&rows, &suite);
    let out = prepare_out(config)?;
    pipeline::write_metrics(&out.join(METRICS_FILE), &metrics).map_err(err)?;
    write_analysis(&metrics, out)
}

fn report(config: &RunConfig) -> StageResult {
    let metrics_path = prerequisite(config, METRICS_FILE, "analyze")?;
    let metrics = pipeline::read_metrics(&metrics_path).map_err(err)?;
    write_analysis(&metrics, &config.out)
}

fn write_analysis(metrics: &[pipeline::MetricRow], out: &Path) -> StageResult {
    let table = pipeline::emit_analysis(metrics, out).map_err(err)?;
    println!("state\tmetric\tn_human\tn_model\tcohens_d\tp");
    let show = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{x:.3}"));
    for row in &table {
        println!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            row.state,
            row.metric,
            row.n_human,
            row.n_model,
            show(row.cohens_d),
            show(row.p)
        );
    }
    Ok(())
}

fn parse_history(tokens: &[String]) -> Result<GameHistory, String> {
    if !tokens.len().is_multiple_of(2) {
        return Err("history needs guess and pattern tokens in pairs".into());
    }
    let mut history = GameHistory::new();
    for pair in tokens.chunks(2) {
        let guess = Word::parse_loose(&pair[0]).map_err(err)?;
        let pattern: FeedbackPattern = pair[1].parse().map_err(err)?;
        history.push(guess, pattern).map_err(err)?;
    }
    Ok(history)
}

fn suggest(config: &RunConfig, tokens: &[String], top: usize) -> StageResult {
    let history = parse_history(tokens)?;
    let lexicon = lexicon(config)?;
    let (ranked, remaining) = solver::rank_guesses(&history, &lexicon, &config.solver(), top).map_err(err)?;
    println!("remaining candidates: {remaining}");
    let unit = match config.heuristic {
        wordlab::Heuristic::Entropy => "bits",
        wordlab::Heuristic::Minimax => "worst",
    };
    for (i, g) in ranked.iter().enumerate() {
        let mark = if g.is_candidate { "*" } else { "" };
        println!("{:>3}. {}{mark}\t{:.4} {unit}", i + 1, g.word, g.score);
    }
    Ok(())
}
