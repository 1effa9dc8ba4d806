use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "sgt", version, about = "Sequence Graph Transform features and mining tools")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Transform a corpus into a features CSV.
    Transform(TransformArgs),
    /// Render one sequence (or the corpus mean) as a DOT graph.
    Graph(GraphArgs),
    /// Cluster sequences with Manhattan k-means.
    Cluster(ClusterArgs),
    /// Cluster the alphabet by spectral clustering of the mean SGT.
    AlphabetCluster(AlphabetClusterArgs),
    /// Rank corpus sequences by Manhattan distance to each query.
    Search(SearchArgs),
    /// Label query feature rows by k-nearest-neighbour vote.
    Classify(ClassifyArgs),
    /// Run the synthetic clustering benchmarks.
    Bench(BenchArgs),
    /// Compare closed-form moments with Monte Carlo estimates.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    /// One sequence per line, one event per character.
    Char,
    /// One sequence per line, events separated by --delimiter.
    Token,
    Fasta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    LengthSensitive,
    LengthInsensitive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UndirectedArg {
    /// Pool pair counts and effects in both directions.
    Exact,
    /// Average the directed matrix with its transpose.
    Approx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    Auto,
    Dense,
    Positional,
}

#[derive(Debug, Clone, Args)]
pub struct CorpusArgs {
    /// Corpus file.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "char")]
    pub format: FormatArg,
    /// Token separator for --format token.
    #[arg(long, default_value = ",")]
    pub delimiter: String,
    /// File with one alphabet token per line; fixes column order and rejects
    /// other tokens.
    #[arg(long)]
    pub alphabet: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SgtArgs {
    #[arg(long, default_value_t = 1.0)]
    pub kappa: f64,
    #[arg(long, value_enum, default_value = "length-sensitive")]
    pub mode: ModeArg,
    /// Symmetric features; bare flag means exact.
    #[arg(long, value_enum, num_args = 0..=1, require_equals = true, default_missing_value = "exact")]
    pub undirected: Option<UndirectedArg>,
    #[arg(long, value_enum, default_value = "auto")]
    pub algorithm: AlgorithmArg,
    /// Worker threads; defaults to available parallelism.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct TransformArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    #[command(flatten)]
    pub sgt: SgtArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    #[command(flatten)]
    pub sgt: SgtArgs,
    /// Id of the sequence to draw; the first sequence when omitted.
    #[arg(long, conflicts_with = "aggregate")]
    pub sequence: Option<String>,
    /// Draw the mean SGT of the whole corpus.
    #[arg(long)]
    pub aggregate: bool,
    /// Drop edges with weight below this.
    #[arg(long, default_value_t = 0.0)]
    pub threshold: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
#[command(group = clap::ArgGroup::new("how").required(true).args(["k", "auto_search"]))]
pub struct ClusterArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    #[command(flatten)]
    pub sgt: SgtArgs,
    /// Treat the input as a features CSV instead of a corpus.
    #[arg(long, conflicts_with = "auto_search")]
    pub features: bool,
    /// Number of clusters.
    #[arg(long)]
    pub k: Option<usize>,
    /// Choose the cluster count and kappa by minimizing the DB-index.
    #[arg(long)]
    pub auto_search: bool,
    #[arg(long, value_delimiter = ',', default_value = "2,3,4,5,6,7,8,9,10")]
    pub nc_grid: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "1,5,10")]
    pub kappa_grid: Vec<f64>,
    #[arg(long, default_value_t = 10)]
    pub max_rounds: usize,
    #[arg(long, default_value_t = 10)]
    pub restarts: usize,
    #[arg(long, default_value_t = 100)]
    pub max_iter: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct AlphabetClusterArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    #[command(flatten)]
    pub sgt: SgtArgs,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    #[command(flatten)]
    pub sgt: SgtArgs,
    /// Query sequences, in the corpus format and alphabet.
    #[arg(long)]
    pub query: PathBuf,
    /// Rank in the space of this many principal components.
    #[arg(long)]
    pub pca: Option<usize>,
    #[arg(long, default_value_t = 10)]
    pub top: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ClassifyArgs {
    /// Training features CSV.
    #[arg(long)]
    pub train: PathBuf,
    /// Training labels CSV (`id,label`).
    #[arg(long)]
    pub labels: PathBuf,
    /// Query features CSV with the same columns.
    #[arg(long)]
    pub queries: PathBuf,
    #[arg(long, default_value_t = 5)]
    pub knn: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExperimentArg {
    /// Five clusters at rising motif overlap, SGT against 2-grams.
    Exp1,
    /// Long length-sensitive sequences with automatic model selection.
    Exp3,
    /// Three clusters over two symbol groups.
    Exp4,
    All,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub experiment: ExperimentArg,
    /// Number of seeds, starting at --seed.
    #[arg(long, default_value_t = 3)]
    pub seeds: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Sequences per cluster.
    #[arg(long, default_value_t = 40)]
    pub count: usize,
    #[arg(long, default_value_t = 5.0)]
    pub kappa: f64,
    /// Also write each generated corpus and its labels here.
    #[arg(long)]
    pub corpus_dir: Option<PathBuf>,
    #[arg(long)]
    pub jobs: Option<usize>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    /// Replicates for the mean comparison.
    #[arg(long, default_value_t = 2000)]
    pub replicates: usize,
    /// Replicates for the variance comparison.
    #[arg(long, default_value_t = 5000)]
    pub variance_replicates: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Grid ticks per event unit in the simulator.
    #[arg(long, default_value_t = sgt_theory::VALIDATION_RESOLUTION)]
    pub resolution: u32,
    #[command(flatten)]
    pub out: OutputArgs,
}
