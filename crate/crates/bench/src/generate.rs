use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use sgt_core::{AlphabetIndex, Sequence};

use crate::error::{invalid, Result};

/// Shape of a synthetic clustered corpus.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterSpec {
    pub num_clusters: usize,
    /// Letters `A..` of this many symbols, at most 26.
    pub alphabet_size: usize,
    pub motifs_per_cluster: usize,
    /// Inclusive motif length range.
    pub motif_len: (usize, usize),
    /// Per-sequence noise share is uniform in this inclusive range.
    pub noise: (f64, f64),
    pub length_mean: f64,
    pub length_std: f64,
    /// Share of each cluster's motifs drawn from a pool common to all
    /// clusters.
    pub overlap: f64,
    pub seed: u64,
    /// Explicit motifs per cluster, replacing the random ones.
    pub motifs: Option<Vec<Vec<Vec<usize>>>>,
    /// Group id per symbol, for bicluster corpora.
    pub groups: Option<Vec<usize>>,
    /// Inclusive number of same-group motifs per run, for bicluster corpora.
    pub run_len: (usize, usize),
}

impl ClusterSpec {
    pub fn new(num_clusters: usize, alphabet_size: usize, seed: u64) -> Self {
        Self {
            num_clusters,
            alphabet_size,
            motifs_per_cluster: 5,
            motif_len: (3, 8),
            noise: (0.0, 0.0),
            length_mean: 100.0,
            length_std: 0.0,
            overlap: 0.0,
            seed,
            motifs: None,
            groups: None,
            run_len: (2, 4),
        }
    }

    /// Five clusters over 26 symbols, lengths near 116 ± 48, 35-65% noise.
    pub fn exp1(overlap: f64, seed: u64) -> Self {
        Self { noise: (0.35, 0.65), length_mean: 116.4, length_std: 47.7, overlap, ..Self::new(5, 26, seed) }
    }

    /// Long sequences, 424 ± 131, with 45-50% noise.
    pub fn exp3(num_clusters: usize, seed: u64) -> Self {
        Self { noise: (0.45, 0.50), length_mean: 424.6, length_std: 130.6, ..Self::new(num_clusters, 26, seed) }
    }

    /// Three clusters over 16 symbols split into `A-H` and `I-P`.
    pub fn exp4(noise: (f64, f64), seed: u64) -> Self {
        Self {
            noise,
            length_mean: 103.9,
            length_std: 33.6,
            motifs_per_cluster: 3,
            groups: Some((0..16).map(|i| i / 8).collect()),
            ..Self::new(3, 16, seed)
        }
    }

    pub fn alphabet(&self) -> Result<AlphabetIndex> {
        Ok(AlphabetIndex::letters(self.alphabet_size)?)
    }

    fn validate(&self) -> Result<()> {
        if self.num_clusters < 2 {
            return invalid("need at least two clusters");
        }
        if self.alphabet_size == 0 || self.alphabet_size > 26 {
            return invalid(format!("alphabet size must be in 1..=26, got {}", self.alphabet_size));
        }
        let (lo, hi) = self.noise;
        if !(0.0 <= lo && lo <= hi && hi < 1.0) {
            return invalid(format!("noise range must satisfy 0 <= lo <= hi < 1, got {lo}..{hi}"));
        }
        if !(0.0..=1.0).contains(&self.overlap) {
            return invalid(format!("overlap must be in [0, 1], got {}", self.overlap));
        }
        if !(self.length_mean > 0.0) || !(self.length_std >= 0.0) {
            return invalid("length mean must be positive and std non-negative");
        }
        let (min, max) = self.motif_len;
        if min == 0 || min > max {
            return invalid(format!("bad motif length range {min}..={max}"));
        }
        if max as f64 > self.length_mean {
            return invalid(format!("motifs of length {max} do not fit sequences of mean length {}", self.length_mean));
        }
        if self.motifs_per_cluster == 0 {
            return invalid("need at least one motif per cluster");
        }
        if self.run_len.0 == 0 || self.run_len.0 > self.run_len.1 {
            return invalid("bad run length range");
        }
        if let Some(motifs) = &self.motifs {
            if motifs.len() != self.num_clusters || motifs.iter().any(|m| m.is_empty() || m.iter().any(Vec::is_empty)) {
                return invalid("explicit motifs need a non-empty list per cluster");
            }
            if motifs.iter().flatten().flatten().any(|&e| e >= self.alphabet_size) {
                return invalid("explicit motif uses a symbol outside the alphabet");
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledCorpus {
    pub sequences: Vec<Sequence>,
    pub labels: Vec<usize>,
    pub alphabet: AlphabetIndex,
    /// Group id per symbol, for bicluster corpora.
    pub alphabet_labels: Option<Vec<usize>>,
    /// Motifs planted in each cluster.
    pub motifs: Vec<Vec<Vec<usize>>>,
}

fn random_motif(rng: &mut ChaCha8Rng, len: (usize, usize), symbols: &[usize]) -> Vec<usize> {
    let n = rng.random_range(len.0..=len.1);
    (0..n).map(|_| *symbols.choose(rng).expect("non-empty symbol set")).collect()
}

struct Layout {
    length: Normal<f64>,
    noise: (f64, f64),
    alphabet_size: usize,
}

impl Layout {
    fn new(spec: &ClusterSpec) -> Result<Self> {
        let length = Normal::new(spec.length_mean, spec.length_std)
            .map_err(|e| crate::BenchError::InvalidArgument(e.to_string()))?;
        Ok(Self { length, noise: spec.noise, alphabet_size: spec.alphabet_size })
    }

    /// Target length, clamped to fit the longest motif, and noise count.
    fn draw(&self, rng: &mut ChaCha8Rng, longest: usize) -> (usize, usize) {
        let len = (self.length.sample(rng).round().max(0.0) as usize).max(longest);
        let share = if self.noise.0 == self.noise.1 { self.noise.0 } else { rng.random_range(self.noise.0..=self.noise.1) };
        (len, (share * len as f64).round() as usize)
    }

    /// Blocks shuffled among `noise` single random symbols.
    fn assemble(&self, rng: &mut ChaCha8Rng, blocks: Vec<Vec<usize>>, noise: usize) -> Vec<usize> {
        let mut items: Vec<Option<Vec<usize>>> = blocks.into_iter().map(Some).collect();
        items.extend(std::iter::repeat_n(None, noise));
        items.shuffle(rng);
        let mut events = Vec::new();
        for item in items {
            match item {
                Some(block) => events.extend(block),
                None => events.push(rng.random_range(0..self.alphabet_size)),
            }
        }
        events
    }
}

fn longest(motifs: &[Vec<Vec<usize>>]) -> usize {
    motifs.iter().flatten().map(Vec::len).max().unwrap_or(1)
}

/// `count` sequences per cluster, each a shuffle of the cluster's motifs
/// and uniform noise symbols.
///
/// Motif blocks are added until they cover the non-noise share of the
/// target length, so lengths can overshoot by less than one motif.
pub fn gen_clustered_corpus(spec: &ClusterSpec, count: usize) -> Result<LabeledCorpus> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let all: Vec<usize> = (0..spec.alphabet_size).collect();
    let motifs = match &spec.motifs {
        Some(m) => m.clone(),
        None => {
            let shared_n = (spec.overlap * spec.motifs_per_cluster as f64).round() as usize;
            let shared: Vec<Vec<usize>> = (0..shared_n).map(|_| random_motif(&mut rng, spec.motif_len, &all)).collect();
            (0..spec.num_clusters)
                .map(|_| {
                    let mut own = shared.clone();
                    own.extend(
                        (shared_n..spec.motifs_per_cluster).map(|_| random_motif(&mut rng, spec.motif_len, &all)),
                    );
                    own
                })
                .collect()
        }
    };
    let layout = Layout::new(spec)?;
    let alphabet = spec.alphabet()?;
    let top = longest(&motifs);

    let mut sequences = Vec::with_capacity(count * spec.num_clusters);
    let mut labels = Vec::with_capacity(count * spec.num_clusters);
    for (c, own) in motifs.iter().enumerate() {
        for i in 0..count {
            let (len, noise) = layout.draw(&mut rng, top);
            let mut blocks = Vec::new();
            let mut covered = 0;
            while covered < len - noise.min(len) {
                let m = own.choose(&mut rng).expect("non-empty motif list").clone();
                covered += m.len();
                blocks.push(m);
            }
            let events = layout.assemble(&mut rng, blocks, noise);
            sequences.push(Sequence::new(format!("c{c}_{i:04}"), events, &alphabet)?);
            labels.push(c);
        }
    }
    Ok(LabeledCorpus { sequences, labels, alphabet, alphabet_labels: None, motifs })
}

/// Like [`gen_clustered_corpus`], but every motif stays inside one symbol
/// group and motifs are laid out in runs of the same group.
///
/// Each cluster has `motifs_per_cluster` motifs per group. Same-group
/// symbols therefore occur near each other in every sequence, whatever its
/// cluster.
pub fn gen_bicluster_corpus(spec: &ClusterSpec, count: usize) -> Result<LabeledCorpus> {
    spec.validate()?;
    let Some(groups) = spec.groups.clone() else {
        return invalid("bicluster corpora need an alphabet partition");
    };
    if groups.len() != spec.alphabet_size {
        return invalid(format!("{} group labels for {} symbols", groups.len(), spec.alphabet_size));
    }
    let group_count = groups.iter().max().map_or(0, |g| g + 1);
    let members: Vec<Vec<usize>> =
        (0..group_count).map(|g| (0..spec.alphabet_size).filter(|&s| groups[s] == g).collect()).collect();
    if group_count < 2 || members.iter().any(Vec::is_empty) {
        return invalid("need at least two non-empty symbol groups numbered from 0");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    // motifs[cluster][group][k]
    let grouped: Vec<Vec<Vec<Vec<usize>>>> = (0..spec.num_clusters)
        .map(|_| {
            members
                .iter()
                .map(|syms| (0..spec.motifs_per_cluster).map(|_| random_motif(&mut rng, spec.motif_len, syms)).collect())
                .collect()
        })
        .collect();
    let motifs: Vec<Vec<Vec<usize>>> = grouped.iter().map(|per| per.iter().flatten().cloned().collect()).collect();
    let layout = Layout::new(spec)?;
    let alphabet = spec.alphabet()?;
    let top = longest(&motifs);

    let mut sequences = Vec::with_capacity(count * spec.num_clusters);
    let mut labels = Vec::with_capacity(count * spec.num_clusters);
    for (c, per_group) in grouped.iter().enumerate() {
        for i in 0..count {
            let (len, noise) = layout.draw(&mut rng, top);
            let mut blocks = Vec::new();
            let mut covered = 0;
            let mut group = rng.random_range(0..group_count);
            while covered < len - noise.min(len) {
                let run = rng.random_range(spec.run_len.0..=spec.run_len.1);
                for _ in 0..run {
                    let m = per_group[group].choose(&mut rng).expect("non-empty motif list").clone();
                    covered += m.len();
                    blocks.push(m);
                }
                group = (group + rng.random_range(1..group_count)) % group_count;
            }
            let events = layout.assemble(&mut rng, blocks, noise);
            sequences.push(Sequence::new(format!("c{c}_{i:04}"), events, &alphabet)?);
            labels.push(c);
        }
    }
    Ok(LabeledCorpus { sequences, labels, alphabet, alphabet_labels: Some(groups), motifs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn contains(haystack: &[usize], needle: &[usize]) -> bool {
        haystack.windows(needle.len()).any(|w| w == needle)
    }

    #[test]
    fn noiseless_disjoint_motifs_separate_by_substring() {
        let spec = ClusterSpec {
            motifs: Some(vec![vec![vec![0, 1, 2]], vec![vec![3, 4, 5]]]),
            length_std: 10.0,
            ..ClusterSpec::new(2, 6, 1)
        };
        let corpus = gen_clustered_corpus(&spec, 20).unwrap();
        for (seq, &label) in corpus.sequences.iter().zip(&corpus.labels) {
            let has_first = contains(seq.events(), &[0, 1, 2]);
            assert_eq!(has_first, label == 0);
            assert_eq!(contains(seq.events(), &[3, 4, 5]), label == 1);
        }
    }

    #[test]
    fn reproducible_per_seed() {
        let spec = ClusterSpec::exp1(0.2, 4);
        assert_eq!(gen_clustered_corpus(&spec, 5).unwrap(), gen_clustered_corpus(&spec, 5).unwrap());
        let other = ClusterSpec { seed: 5, ..spec.clone() };
        assert_ne!(gen_clustered_corpus(&spec, 5).unwrap(), gen_clustered_corpus(&other, 5).unwrap());
    }

    #[test]
    fn overlap_shares_motifs() {
        let corpus = gen_clustered_corpus(&ClusterSpec::exp1(0.4, 2), 1).unwrap();
        let first = &corpus.motifs[0];
        for other in &corpus.motifs[1..] {
            assert_eq!(first[..2], other[..2]);
            assert_ne!(first[2..], other[2..]);
        }
        let full = gen_clustered_corpus(&ClusterSpec::exp1(1.0, 2), 1).unwrap();
        assert!(full.motifs.iter().all(|m| *m == full.motifs[0]));
    }

    #[test]
    fn lengths_and_noise_follow_the_settings() {
        let spec = ClusterSpec::exp1(0.0, 9);
        let corpus = gen_clustered_corpus(&spec, 200).unwrap();
        let lens: Vec<f64> = corpus.sequences.iter().map(|s| s.len() as f64).collect();
        let mean = lens.iter().sum::<f64>() / lens.len() as f64;
        // blocks overshoot the target by under one motif
        assert!((mean - 116.4).abs() < 8.0, "{mean}");
        assert_eq!(corpus.labels.len(), 1000);
        assert!(corpus.labels.iter().all(|&l| l < 5));
    }

    #[test]
    fn bicluster_runs_keep_groups_together() {
        let spec = ClusterSpec::exp4((0.0, 0.0), 3);
        let corpus = gen_bicluster_corpus(&spec, 10).unwrap();
        let groups = corpus.alphabet_labels.as_ref().unwrap();
        assert_eq!(groups.len(), 16);
        assert!(corpus.motifs.iter().flatten().all(|m| m.iter().all(|&s| groups[s] == groups[m[0]])));
        let (mut same, mut total) = (0usize, 0usize);
        for seq in &corpus.sequences {
            for w in seq.events().windows(2) {
                if w[0] != w[1] {
                    total += 1;
                    same += (groups[w[0]] == groups[w[1]]) as usize;
                }
            }
        }
        assert!(same as f64 / total as f64 > 0.8, "{same}/{total}");
    }

    #[test]
    fn invalid_specs() {
        assert!(gen_clustered_corpus(&ClusterSpec::new(1, 5, 0), 3).is_err());
        assert!(gen_clustered_corpus(&ClusterSpec { noise: (0.5, 1.0), ..ClusterSpec::new(2, 5, 0) }, 3).is_err());
        assert!(gen_clustered_corpus(&ClusterSpec { overlap: 1.5, ..ClusterSpec::new(2, 5, 0) }, 3).is_err());
        assert!(gen_clustered_corpus(&ClusterSpec { motif_len: (3, 200), ..ClusterSpec::new(2, 5, 0) }, 3).is_err());
        assert!(gen_bicluster_corpus(&ClusterSpec::new(2, 5, 0), 3).is_err());
    }
}
