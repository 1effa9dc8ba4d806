use std::io::Write;
use std::path::Path;

use sgt_bench::experiments::{exp1, exp3, exp4, RunConfig};
use sgt_bench::{clustering_f1, gen_bicluster_corpus, gen_clustered_corpus, ClusterSpec, LabeledCorpus};
use sgt_core::io::{format_value, write_labels_csv};
use sgt_core::Normalization;
use sgt_mining::SearchConfig;
use sgt_theory::{expected_psi, monte_carlo_psi, validation_grid, variance_psi};

use crate::args::{BenchArgs, ExperimentArg, OracleArgs};
use crate::commands::emit;
use crate::error::{CliError, Result};

pub(crate) const EXP1_OVERLAPS: [f64; 3] = [0.0, 0.4, 0.8];
pub(crate) const EXP4_NOISE: [f64; 2] = [0.3, 0.5];
const EXP3_CLUSTERS: usize = 5;

struct Csv(csv::Writer<Vec<u8>>);

impl Csv {
    fn new(header: &[&str]) -> Result<Self> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(header).map_err(csv_err)?;
        Ok(Self(w))
    }

    fn row(&mut self, fields: &[String]) -> Result<()> {
        self.0.write_record(fields).map_err(csv_err)
    }

    fn finish(self) -> Result<Vec<u8>> {
        self.0.into_inner().map_err(|e| CliError::Data(e.to_string()))
    }
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Data(e.to_string())
}

fn mode_name(mode: Normalization) -> &'static str {
    match mode {
        Normalization::LengthSensitive => "length-sensitive",
        Normalization::LengthInsensitive => "length-insensitive",
    }
}

pub(crate) fn bench_cmd(args: &BenchArgs, stdout: &mut dyn Write) -> Result<()> {
    if args.seeds == 0 || args.count == 0 {
        return Err(CliError::Usage("--seeds and --count must be at least 1".into()));
    }
    if args.jobs == Some(0) {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    let run = RunConfig { count: args.count, kappa: args.kappa, jobs: args.jobs };
    let wants = |e: ExperimentArg| args.experiment == e || args.experiment == ExperimentArg::All;
    let mut out = Csv::new(&["experiment", "seed", "setting", "method", "f1", "runtime_ms", "detail"])?;
    if let Some(dir) = &args.corpus_dir {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Data(format!("cannot create {}: {e}", dir.display())))?;
    }

    for seed in args.seed..args.seed + args.seeds {
        if wants(ExperimentArg::Exp1) {
            for overlap in EXP1_OVERLAPS {
                for row in exp1(overlap, seed, &run)? {
                    out.row(&[
                        row.experiment,
                        seed.to_string(),
                        format_value(overlap),
                        row.method,
                        format_value(row.f1),
                        format!("{:.3}", row.runtime_ms),
                        String::new(),
                    ])?;
                }
                if let Some(dir) = &args.corpus_dir {
                    let corpus = gen_clustered_corpus(&ClusterSpec::exp1(overlap, seed), args.count)?;
                    save_corpus(dir, &format!("exp1_seed{seed}_overlap{overlap}"), &corpus)?;
                }
            }
        }
        if wants(ExperimentArg::Exp3) {
            let search = SearchConfig { jobs: args.jobs, ..SearchConfig::default() };
            let o = exp3(EXP3_CLUSTERS, seed, &run, &search)?;
            out.row(&[
                "exp3".into(),
                seed.to_string(),
                EXP3_CLUSTERS.to_string(),
                "sgt-search".into(),
                format_value(o.f1),
                format!("{:.3}", o.runtime_ms),
                format!("nc={};kappa={};db={}", o.selected_nc, format_value(o.selected_kappa), format_value(o.db)),
            ])?;
            if let Some(dir) = &args.corpus_dir {
                let corpus = gen_clustered_corpus(&ClusterSpec::exp3(EXP3_CLUSTERS, seed), args.count)?;
                save_corpus(dir, &format!("exp3_seed{seed}"), &corpus)?;
            }
        }
        if wants(ExperimentArg::Exp4) {
            for noise in EXP4_NOISE {
                let o = exp4(noise, seed, &run)?;
                out.row(&[
                    "exp4".into(),
                    seed.to_string(),
                    format_value(noise),
                    "sgt-kmeans".into(),
                    format_value(o.sequence_f1),
                    format!("{:.3}", o.runtime_ms),
                    String::new(),
                ])?;
                let corpus = gen_bicluster_corpus(&ClusterSpec::exp4((noise, noise), seed), args.count)?;
                let groups = corpus.alphabet_labels.clone().expect("bicluster corpus has groups");
                out.row(&[
                    "exp4".into(),
                    seed.to_string(),
                    format_value(noise),
                    "spectral-alphabet".into(),
                    format_value(clustering_f1(&o.alphabet_clusters, &groups)?),
                    String::new(),
                    format!("errors={}", o.alphabet_errors),
                ])?;
                if let Some(dir) = &args.corpus_dir {
                    let stem = format!("exp4_seed{seed}_noise{noise}");
                    save_corpus(dir, &stem, &corpus)?;
                    let mut buf = Vec::new();
                    write_labels_csv(corpus.alphabet.tokens(), &groups, &mut buf)?;
                    write_file(&dir.join(format!("{stem}_groups.csv")), &buf)?;
                }
            }
        }
    }
    emit(&args.out, &out.finish()?, stdout)
}

/// Char-line corpus plus labels keyed by the line-number ids the reader assigns.
fn save_corpus(dir: &Path, stem: &str, corpus: &LabeledCorpus) -> Result<()> {
    let mut text = String::new();
    let mut ids = Vec::with_capacity(corpus.sequences.len());
    for (i, seq) in corpus.sequences.iter().enumerate() {
        text.extend(seq.tokens(&corpus.alphabet));
        text.push('\n');
        ids.push((i + 1).to_string());
    }
    write_file(&dir.join(format!("{stem}.txt")), text.as_bytes())?;
    let mut buf = Vec::new();
    write_labels_csv(&ids, &corpus.labels, &mut buf)?;
    write_file(&dir.join(format!("{stem}_labels.csv")), &buf)
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    std::fs::write(path, bytes).map_err(|e| CliError::Data(format!("cannot write {}: {e}", path.display())))
}

pub(crate) fn oracle_cmd(args: &OracleArgs, stdout: &mut dyn Write) -> Result<()> {
    if args.replicates < 2 || args.variance_replicates < 2 {
        return Err(CliError::Usage("replicate counts must be at least 2".into()));
    }
    if args.resolution == 0 {
        return Err(CliError::Usage("--resolution must be at least 1".into()));
    }
    let mut out = Csv::new(&[
        "point",
        "kappa",
        "mode",
        "mu_alpha",
        "sigma_alpha",
        "mu_beta",
        "sigma_beta",
        "p",
        "length",
        "closed_mean",
        "mc_mean",
        "std_error",
        "z",
        "closed_var",
        "mc_var",
        "var_rel",
    ])?;
    for (i, (params, mode)) in validation_grid().into_iter().enumerate() {
        let params = params.with_resolution(args.resolution);
        let seed = args.seed.wrapping_add(1000 * i as u64);
        let closed_mean = expected_psi(&params, mode)?;
        let closed_var = variance_psi(&params, mode)?;
        let mc = monte_carlo_psi(&params, mode, args.replicates, seed)?;
        let mc_var = monte_carlo_psi(&params, mode, args.variance_replicates, seed.wrapping_add(77))?.variance;
        out.row(&[
            (i + 1).to_string(),
            format_value(params.kappa),
            mode_name(mode).into(),
            format_value(params.mu_alpha),
            format_value(params.sigma_alpha),
            format_value(params.mu_beta),
            format_value(params.sigma_beta),
            format_value(params.p),
            params.length.to_string(),
            format_value(closed_mean),
            format_value(mc.mean),
            format_value(mc.std_error),
            format_value(mc.z_score(closed_mean)),
            format_value(closed_var),
            format_value(mc_var),
            format_value((mc_var - closed_var) / closed_var),
        ])?;
    }
    emit(&args.out, &out.finish()?, stdout)
}
