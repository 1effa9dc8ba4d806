use sgt_bench::experiments::{exp1, exp3, exp4, RunConfig};
use sgt_bench::{gen_bicluster_corpus, gen_clustered_corpus, ClusterSpec};
use sgt_core::{transform_corpus, Normalization, SgtConfig};
use sgt_mining::{davies_bouldin, random_search, KMeans, SearchConfig};

fn run() -> RunConfig {
    RunConfig { count: 40, kappa: 5.0, jobs: None }
}

#[test]
fn bicluster_seed_f1_and_alphabet_groups() {
    for seed in 0..3 {
        let low = exp4(0.0, seed, &run()).unwrap();
        assert_eq!(low.sequence_f1, 1.0, "seed {seed}");
        assert_eq!(low.alphabet_errors, 0, "seed {seed}");
        let noisy = exp4(0.5, seed, &run()).unwrap();
        assert!(noisy.sequence_f1 >= 0.9, "seed {seed}: {}", noisy.sequence_f1);
        assert!(noisy.alphabet_errors <= 1, "seed {seed}: {}", noisy.alphabet_errors);
    }
}

#[test]
fn overlap_erodes_separability() {
    let levels = [0.0, 0.4, 0.8];
    let seeds = 0..3;
    let mean = |overlap: f64, method: &str| {
        let scores: Vec<f64> = seeds
            .clone()
            .map(|s| exp1(overlap, s, &run()).unwrap().into_iter().find(|r| r.method == method).unwrap().f1)
            .collect();
        scores.iter().sum::<f64>() / scores.len() as f64
    };
    let sgt: Vec<f64> = levels.iter().map(|&o| mean(o, "sgt")).collect();
    assert!(sgt[0] >= 0.9, "{sgt:?}");
    assert!(sgt.windows(2).all(|w| w[1] <= w[0]), "{sgt:?}");
}

#[test]
fn nearest_distinct_symbol_shares_the_group_without_noise() {
    let corpus = gen_bicluster_corpus(&ClusterSpec::exp4((0.0, 0.0), 11), 20).unwrap();
    let groups = corpus.alphabet_labels.unwrap();
    let (mut same, mut total) = (0, 0);
    for seq in &corpus.sequences {
        let e = seq.events();
        for i in 0..e.len() {
            if let Some(j) = (i + 1..e.len()).find(|&j| e[j] != e[i]) {
                total += 1;
                same += (groups[e[i]] == groups[e[j]]) as usize;
            }
        }
    }
    assert!(same as f64 / total as f64 >= 0.8, "{same}/{total}");
}

fn exhaustive_best(corpus: &sgt_bench::LabeledCorpus, search: &SearchConfig, template: &SgtConfig) -> (usize, f64, f64) {
    let mut best = (0, 0.0, f64::INFINITY);
    for &kappa in &search.kappa_grid {
        let table = transform_corpus(&corpus.sequences, &corpus.alphabet, &template.with_kappa(kappa).unwrap(), None).unwrap();
        for &nc in &search.nc_grid {
            let r = KMeans::new(nc).with_seed(search.seed).with_restarts(search.restarts).fit(table.rows()).unwrap();
            let db = davies_bouldin(&table, &r.assignment).unwrap();
            if db < best.2 {
                best = (nc, kappa, db);
            }
        }
    }
    best
}

#[test]
fn alternating_search_agrees_with_exhaustive_grid() {
    let template = SgtConfig::new(1.0).unwrap().with_normalization(Normalization::LengthInsensitive);
    let mut agree = 0;
    for seed in 0..10 {
        let corpus = gen_clustered_corpus(&ClusterSpec::exp1(0.0, seed), 16).unwrap();
        let search = SearchConfig { nc_grid: (2..=8).collect(), seed, restarts: 5, ..Default::default() };
        let found = random_search(&corpus.sequences, &corpus.alphabet, &search, &template).unwrap();
        let oracle = exhaustive_best(&corpus, &search, &template);
        assert!(found.best_db >= oracle.2);
        agree += ((found.best_nc, found.best_kappa) == (oracle.0, oracle.1)) as usize;
    }
    assert!(agree >= 8, "{agree}/10");
}

/// DB-index keeps falling past the planted five clusters on these corpora,
/// because extra clusters peel off outlying sequences.
#[test]
#[ignore = "known failure: DB-index selects 9-10 clusters on five-cluster corpora"]
fn search_recovers_five_clusters() {
    let template = SgtConfig::new(1.0).unwrap().with_normalization(Normalization::LengthInsensitive);
    let hits = (0..10)
        .filter(|&seed| {
            let corpus = gen_clustered_corpus(&ClusterSpec::exp1(0.0, seed), 40).unwrap();
            let search = SearchConfig { seed, restarts: 20, ..Default::default() };
            random_search(&corpus.sequences, &corpus.alphabet, &search, &template).unwrap().best_nc == 5
        })
        .count();
    assert!(hits >= 8, "{hits}/10");
}

#[test]
fn long_sequence_search_reports_grid_values() {
    let search = SearchConfig { nc_grid: vec![3, 5, 7], restarts: 3, ..Default::default() };
    let out = exp3(5, 2, &RunConfig { count: 12, kappa: 1.0, jobs: None }, &search).unwrap();
    assert!(search.nc_grid.contains(&out.selected_nc));
    assert!(search.kappa_grid.contains(&out.selected_kappa));
    assert!((0.0..=1.0).contains(&out.f1));
}
