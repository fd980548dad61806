//! Run configuration: flags, then `WORDLAB_*` environment variables (both
//! handled by clap), then an optional TOML file, then defaults.

use std::path::{Path, PathBuf};

use clap::Args;
use serde::Deserialize;

use wordlab::metrics::DistanceConvention;
use wordlab::{Heuristic, SolverConfig, Word};

pub const DEFAULT_OPENER: &str = "salet";

#[derive(Args, Debug, Clone, Default)]
pub struct CommonArgs {
    /// TOML file with defaults for any of the options below.
    #[arg(long, global = true, env = "WORDLAB_CONFIG")]
    pub config: Option<PathBuf>,

    /// Guessable word list (one word per line). Bundled list if omitted.
    #[arg(long, global = true, env = "WORDLAB_GUESSABLE")]
    pub guessable: Option<PathBuf>,

    /// Solution word list. Bundled list if omitted.
    #[arg(long, global = true, env = "WORDLAB_SOLUTIONS")]
    pub solutions: Option<PathBuf>,

    #[arg(long, global = true, env = "WORDLAB_HEURISTIC")]
    pub heuristic: Option<Heuristic>,

    #[arg(long, global = true, env = "WORDLAB_OPENER")]
    pub opener: Option<String>,

    #[arg(long, global = true, env = "WORDLAB_DISTANCE_CONVENTION")]
    pub distance_convention: Option<DistanceConvention>,

    /// Worker threads for solver and metric batches.
    #[arg(long, global = true, env = "WORDLAB_JOBS")]
    pub jobs: Option<usize>,

    /// Directory for stage outputs.
    #[arg(long, global = true, env = "WORDLAB_OUT")]
    pub out: Option<PathBuf>,

    /// `wordle_id,answer` CSV used by ingest.
    #[arg(long, global = true, env = "WORDLAB_ANSWERS")]
    pub answers: Option<PathBuf>,

    /// JSONL post dump(s) for ingest.
    #[arg(long = "dump", global = true, env = "WORDLAB_DUMPS", value_delimiter = ',')]
    pub dumps: Vec<PathBuf>,

    /// Pronouncing dictionary in CMU format. Bundled subset if omitted.
    #[arg(long, global = true, env = "WORDLAB_PHONETIC")]
    pub phonetic: Option<PathBuf>,

    /// Embedding file as NAME=PATH, in word2vec/GloVe text layout.
    #[arg(long = "embeddings", global = true, env = "WORDLAB_EMBEDDINGS", value_delimiter = ',')]
    pub embeddings: Vec<String>,

    /// Fail on undecodable dump lines instead of skipping them.
    #[arg(long, global = true, env = "WORDLAB_STRICT")]
    pub strict: bool,
}

#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct FileConfig {
    guessable: Option<PathBuf>,
    solutions: Option<PathBuf>,
    heuristic: Option<String>,
    opener: Option<String>,
    distance_convention: Option<String>,
    jobs: Option<usize>,
    out: Option<PathBuf>,
    answers: Option<PathBuf>,
    #[serde(default)]
    dumps: Vec<PathBuf>,
    phonetic: Option<PathBuf>,
    #[serde(default)]
    embeddings: Vec<String>,
    strict: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct EmbeddingSource {
    pub name: String,
    pub path: PathBuf,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub guessable: Option<PathBuf>,
    pub solutions: Option<PathBuf>,
    pub answers: Option<PathBuf>,
    pub dumps: Vec<PathBuf>,
    pub phonetic: Option<PathBuf>,
    pub embeddings: Vec<EmbeddingSource>,
    pub heuristic: Heuristic,
    pub opener: Word,
    pub convention: DistanceConvention,
    pub jobs: Option<usize>,
    pub out: PathBuf,
    pub strict: bool,
}

impl RunConfig {
    pub fn resolve(args: &CommonArgs) -> Result<Self, String> {
        let file = match &args.config {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                toml::from_str::<FileConfig>(&text).map_err(|e| format!("{}: {e}", path.display()))?
            }
            None => FileConfig::default(),
        };
        // relative paths in a config file are relative to the file
        let base = args.config.as_deref().and_then(Path::parent).unwrap_or(Path::new(""));
        let rel = |p: Option<PathBuf>| p.map(|p| base.join(p));

        let heuristic = match (&args.heuristic, &file.heuristic) {
            (Some(h), _) => *h,
            (None, Some(s)) => s.parse().map_err(|e| format!("config heuristic: {e}"))?,
            (None, None) => Heuristic::Entropy,
        };
        let opener_text = args
            .opener
            .clone()
            .or(file.opener)
            .unwrap_or_else(|| DEFAULT_OPENER.to_string());
        let opener = Word::parse_loose(&opener_text).map_err(|e| format!("opener {opener_text:?}: {e}"))?;
        let convention = match (&args.distance_convention, &file.distance_convention) {
            (Some(c), _) => *c,
            (None, Some(s)) => s.parse().map_err(|e| format!("config distance-convention: {e}"))?,
            (None, None) => DistanceConvention::default(),
        };
        let dumps = if args.dumps.is_empty() {
            file.dumps.into_iter().map(|p| base.join(p)).collect()
        } else {
            args.dumps.clone()
        };
        let embedding_specs = if args.embeddings.is_empty() {
            file.embeddings
                .into_iter()
                .map(|s| parse_embedding(&s).map(|e| EmbeddingSource { path: base.join(e.path), ..e }))
                .collect::<Result<Vec<_>, _>>()?
        } else {
            args.embeddings.iter().map(|s| parse_embedding(s)).collect::<Result<Vec<_>, _>>()?
        };

        let config = RunConfig {
            guessable: args.guessable.clone().or(rel(file.guessable)),
            solutions: args.solutions.clone().or(rel(file.solutions)),
            answers: args.answers.clone().or(rel(file.answers)),
            dumps,
            phonetic: args.phonetic.clone().or(rel(file.phonetic)),
            embeddings: embedding_specs,
            heuristic,
            opener,
            convention,
            jobs: args.jobs.or(file.jobs),
            out: args.out.clone().or(rel(file.out)).unwrap_or_else(|| PathBuf::from("wordlab-out")),
            strict: args.strict || file.strict.unwrap_or(false),
        };
        if config.jobs == Some(0) {
            return Err("--jobs must be at least 1".into());
        }
        config.check_inputs()?;
        Ok(config)
    }

    fn check_inputs(&self) -> Result<(), String> {
        let inputs = [&self.guessable, &self.solutions, &self.answers, &self.phonetic];
        let named = inputs.into_iter().flatten().chain(&self.dumps);
        for path in named.chain(self.embeddings.iter().map(|e| &e.path)) {
            if !path.exists() {
                return Err(format!("input file {} does not exist", path.display()));
            }
        }
        Ok(())
    }

    pub fn solver(&self) -> SolverConfig {
        SolverConfig::new(self.heuristic, self.opener)
    }
}

fn parse_embedding(spec: &str) -> Result<EmbeddingSource, String> {
    match spec.split_once('=') {
        Some((name, path)) if !name.is_empty() && !path.is_empty() => Ok(EmbeddingSource {
            name: name.to_string(),
            path: PathBuf::from(path),
        }),
        _ => Err(format!("embeddings {spec:?}: expected NAME=PATH")),
    }
}
