use std::collections::HashMap;
use std::fs::File;
use std::io::Write;

use sgt_core::io::{
    format_value, read_alphabet, read_corpus_file, read_features_csv, read_labels_csv, write_dot, write_features_csv,
    write_labels_csv, Corpus, CorpusFormat, DotOptions,
};
use sgt_core::{
    make_undirected, transform, transform_all, transform_corpus, with_jobs, Algorithm, Directionality, FeatureTable,
    Normalization, SgtConfig, SgtMatrix, UndirectedMode,
};
use sgt_mining::{
    davies_bouldin, nn_classify, nn_search, pca_fit, pca_transform, random_search, spectral_alphabet_clusters, KMeans,
    SearchConfig,
};

use crate::args::*;
use crate::error::{CliError, Result};
use crate::experiments;

pub(crate) fn dispatch(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    match command {
        Command::Transform(a) => transform_cmd(&a, stdout),
        Command::Graph(a) => graph_cmd(&a, stdout),
        Command::Cluster(a) => cluster_cmd(&a, stdout, stderr),
        Command::AlphabetCluster(a) => alphabet_cluster_cmd(&a, stdout),
        Command::Search(a) => search_cmd(&a, stdout),
        Command::Classify(a) => classify_cmd(&a, stdout),
        Command::Bench(a) => experiments::bench_cmd(&a, stdout),
        Command::Oracle(a) => experiments::oracle_cmd(&a, stdout),
    }
}

/// Writes the finished output to the `--output` file or to stdout.
pub(crate) fn emit(out: &OutputArgs, bytes: &[u8], stdout: &mut dyn Write) -> Result<()> {
    match &out.output {
        Some(path) => std::fs::write(path, bytes)
            .map_err(|e| CliError::Data(format!("cannot write {}: {e}", path.display()))),
        None => Ok(stdout.write_all(bytes)?),
    }
}

pub(crate) fn load_corpus(args: &CorpusArgs) -> Result<Corpus> {
    let format = match args.format {
        FormatArg::Char => CorpusFormat::CharLine,
        FormatArg::Token => CorpusFormat::token_line(args.delimiter.clone()),
        FormatArg::Fasta => CorpusFormat::Fasta,
    };
    let alphabet = match &args.alphabet {
        Some(path) => {
            let file = File::open(path).map_err(|e| CliError::Data(format!("cannot open {}: {e}", path.display())))?;
            Some(read_alphabet(file)?)
        }
        None => None,
    };
    read_corpus_file(&args.input, &format, alphabet.as_ref())
        .map_err(|e| with_path(e, &args.input))
}

fn with_path(e: sgt_core::SgtError, path: &std::path::Path) -> CliError {
    match CliError::from(e) {
        CliError::Data(msg) => CliError::Data(format!("{}: {msg}", path.display())),
        other => other,
    }
}

fn read_features(path: &std::path::Path) -> Result<FeatureTable> {
    let file = File::open(path).map_err(|e| CliError::Data(format!("cannot open {}: {e}", path.display())))?;
    read_features_csv(file).map_err(|e| with_path(e, path))
}

pub(crate) fn sgt_config(args: &SgtArgs) -> Result<SgtConfig> {
    let normalization = match args.mode {
        ModeArg::LengthSensitive => Normalization::LengthSensitive,
        ModeArg::LengthInsensitive => Normalization::LengthInsensitive,
    };
    let directionality = match args.undirected {
        None => Directionality::Directed,
        Some(UndirectedArg::Exact) => Directionality::Undirected,
        Some(UndirectedArg::Approx) => Directionality::UndirectedApprox,
    };
    let algorithm = match args.algorithm {
        AlgorithmArg::Auto => Algorithm::Auto,
        AlgorithmArg::Dense => Algorithm::Dense,
        AlgorithmArg::Positional => Algorithm::Positional,
    };
    if args.jobs == Some(0) {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    Ok(SgtConfig::new(args.kappa)?
        .with_normalization(normalization)
        .with_directionality(directionality)
        .with_algorithm(algorithm))
}

fn transform_cmd(args: &TransformArgs, stdout: &mut dyn Write) -> Result<()> {
    let config = sgt_config(&args.sgt)?;
    let corpus = load_corpus(&args.corpus)?;
    let table = transform_corpus(&corpus.sequences, &corpus.alphabet, &config, args.sgt.jobs)?;
    let mut buf = Vec::new();
    write_features_csv(&table, &mut buf)?;
    emit(&args.out, &buf, stdout)
}

fn graph_cmd(args: &GraphArgs, stdout: &mut dyn Write) -> Result<()> {
    let config = sgt_config(&args.sgt)?;
    let options = DotOptions { threshold: args.threshold, ..DotOptions::default() };
    if !(args.threshold >= 0.0) {
        return Err(CliError::Usage(format!("--threshold must be non-negative, got {}", args.threshold)));
    }
    let corpus = load_corpus(&args.corpus)?;
    let sgt = if args.aggregate {
        let all = transform_all(&corpus.sequences, &corpus.alphabet, &config, args.sgt.jobs)?;
        SgtMatrix::mean_of(&all)?
    } else {
        let seq = match &args.sequence {
            Some(id) => corpus
                .sequences
                .iter()
                .find(|s| s.id() == id)
                .ok_or_else(|| CliError::Data(format!("no sequence with id {id:?}")))?,
            None => &corpus.sequences[0],
        };
        transform(seq, corpus.alphabet.len(), &config)?
    };
    let mut buf = Vec::new();
    write_dot(&sgt, &corpus.alphabet, &options, &mut buf)?;
    emit(&args.out, &buf, stdout)
}

fn cluster_cmd(args: &ClusterArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let config = sgt_config(&args.sgt)?;
    if args.restarts == 0 || args.max_iter == 0 {
        return Err(CliError::Usage("--restarts and --max-iter must be at least 1".into()));
    }
    let (ids, assignment, k, kappa, db) = if args.auto_search {
        let corpus = load_corpus(&args.corpus)?;
        let search = SearchConfig {
            nc_grid: args.nc_grid.clone(),
            kappa_grid: args.kappa_grid.clone(),
            max_rounds: args.max_rounds,
            seed: args.seed,
            restarts: args.restarts,
            jobs: args.sgt.jobs,
        };
        let out = with_jobs(args.sgt.jobs, || random_search(&corpus.sequences, &corpus.alphabet, &search, &config))??;
        let ids = corpus.sequences.iter().map(|s| s.id().to_owned()).collect::<Vec<_>>();
        (ids, out.clustering.assignment, out.best_nc, Some(out.best_kappa), out.best_db)
    } else {
        let k = args.k.expect("clap requires --k or --auto-search");
        let table = if args.features {
            read_features(&args.corpus.input)?
        } else {
            let corpus = load_corpus(&args.corpus)?;
            transform_corpus(&corpus.sequences, &corpus.alphabet, &config, args.sgt.jobs)?
        };
        let kmeans = KMeans::new(k).with_seed(args.seed).with_restarts(args.restarts).with_max_iter(args.max_iter);
        let result = with_jobs(args.sgt.jobs, || kmeans.fit(table.rows()))??;
        let db = if k >= 2 { davies_bouldin(&table, &result.assignment)? } else { f64::NAN };
        let kappa = (!args.features).then(|| config.kappa());
        (table.ids().to_vec(), result.assignment, k, kappa, db)
    };

    let mut buf = Vec::new();
    write_labels_csv(&ids, &assignment, &mut buf)?;
    emit(&args.out, &buf, stdout)?;
    let kappa = kappa.map(|k| format!(" kappa={}", format_value(k))).unwrap_or_default();
    writeln!(stderr, "k={k}{kappa} db_index={}", format_value(db))?;
    Ok(())
}

fn alphabet_cluster_cmd(args: &AlphabetClusterArgs, stdout: &mut dyn Write) -> Result<()> {
    let config = sgt_config(&args.sgt)?;
    let corpus = load_corpus(&args.corpus)?;
    let all = transform_all(&corpus.sequences, &corpus.alphabet, &config, args.sgt.jobs)?;
    let mean = SgtMatrix::mean_of(&all)?;
    let symmetric = if mean.is_symmetric(0.0) { mean } else { make_undirected(&mean, UndirectedMode::Approximate)? };
    let labels = spectral_alphabet_clusters(&symmetric, args.k, args.seed)?;
    let mut buf = Vec::new();
    write_labels_csv(corpus.alphabet.tokens(), &labels, &mut buf)?;
    emit(&args.out, &buf, stdout)
}

fn search_cmd(args: &SearchArgs, stdout: &mut dyn Write) -> Result<()> {
    let config = sgt_config(&args.sgt)?;
    if args.top == 0 {
        return Err(CliError::Usage("--top must be at least 1".into()));
    }
    let corpus = load_corpus(&args.corpus)?;
    let mut query_args = args.corpus.clone();
    query_args.input = args.query.clone();
    let format = match query_args.format {
        FormatArg::Char => CorpusFormat::CharLine,
        FormatArg::Token => CorpusFormat::token_line(query_args.delimiter.clone()),
        FormatArg::Fasta => CorpusFormat::Fasta,
    };
    let queries = read_corpus_file(&args.query, &format, Some(&corpus.alphabet)).map_err(|e| with_path(e, &args.query))?;

    let mut table = transform_corpus(&corpus.sequences, &corpus.alphabet, &config, args.sgt.jobs)?;
    let mut query_table = transform_corpus(&queries.sequences, &corpus.alphabet, &config, args.sgt.jobs)?;
    if let Some(k) = args.pca {
        let model = pca_fit(&table, k)?;
        table = pca_transform(&model, &table)?;
        query_table = pca_transform(&model, &query_table)?;
    }

    let mut writer = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| CliError::Data(e.to_string());
    writer.write_record(["query", "rank", "id", "distance"]).map_err(csv_err)?;
    for (qid, row) in query_table.ids().iter().zip(query_table.rows()) {
        for (rank, hit) in nn_search(row, &table, args.top)?.into_iter().enumerate() {
            writer
                .write_record([qid.as_str(), &(rank + 1).to_string(), &hit.id, &format_value(hit.distance)])
                .map_err(csv_err)?;
        }
    }
    let buf = writer.into_inner().map_err(|e| CliError::Data(e.to_string()))?;
    emit(&args.out, &buf, stdout)
}

fn classify_cmd(args: &ClassifyArgs, stdout: &mut dyn Write) -> Result<()> {
    if args.knn == 0 {
        return Err(CliError::Usage("--knn must be at least 1".into()));
    }
    let train = read_features(&args.train)?;
    let queries = read_features(&args.queries)?;
    if train.columns() != queries.columns() {
        return Err(CliError::Data("query columns differ from training columns".into()));
    }
    let file = File::open(&args.labels).map_err(|e| CliError::Data(format!("cannot open {}: {e}", args.labels.display())))?;
    let pairs = read_labels_csv(file).map_err(|e| with_path(e, &args.labels))?;
    let by_id: HashMap<String, String> = pairs.into_iter().collect();
    let labels = train
        .ids()
        .iter()
        .map(|id| by_id.get(id).cloned().ok_or_else(|| CliError::Data(format!("no label for training row {id:?}"))))
        .collect::<Result<Vec<_>>>()?;

    let predicted = queries
        .rows()
        .iter()
        .map(|q| nn_classify(q, &train, &labels, args.knn))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let mut buf = Vec::new();
    write_labels_csv(queries.ids(), &predicted, &mut buf)?;
    emit(&args.out, &buf, stdout)
}
