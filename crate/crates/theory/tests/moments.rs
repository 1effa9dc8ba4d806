use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sgt_core::{transform, Normalization, SgtConfig};
use sgt_theory::*;

#[test]
fn closed_form_mean_within_three_standard_errors() {
    for (i, (params, mode)) in validation_grid().into_iter().enumerate() {
        let mc = monte_carlo_psi(&params, mode, 2000, 1_000 * i as u64).unwrap();
        let closed = expected_psi(&params, mode).unwrap();
        let z = mc.z_score(closed);
        assert!(z <= 3.0, "point {i}: closed {closed} mc {} se {} z {z}", mc.mean, mc.std_error);
    }
}

#[test]
fn closed_form_variance_within_fifteen_percent() {
    for (i, (params, mode)) in validation_grid().into_iter().enumerate().take(3) {
        let mc = monte_carlo_psi(&params, mode, 5000, 77 + i as u64).unwrap();
        let closed = variance_psi(&params, mode).unwrap();
        let rel = (closed - mc.variance).abs() / mc.variance;
        assert!(rel <= 0.15, "point {i}: closed {closed} mc {} rel {rel}", mc.variance);
    }
}

#[test]
fn empirical_variance_decays_with_length() {
    let base = PatternParams {
        mu_alpha: 1.0,
        sigma_alpha: 0.3,
        mu_beta: 4.0,
        sigma_beta: 0.8,
        p: 0.1,
        length: 30,
        kappa: 1.0,
        resolution: 100,
    };
    let var = |length| monte_carlo_psi(&base.with_length(length), Normalization::LengthInsensitive, 2000, 3).unwrap().variance;
    let (v30, v100, v1000) = (var(30), var(100), var(1000));
    assert!(v1000 < v100 && v100 < v30, "{v30} {v100} {v1000}");
}

#[test]
fn insensitive_feature_is_length_invariant_past_thirty() {
    let params = PatternParams {
        mu_alpha: 1.0,
        sigma_alpha: 0.0,
        mu_beta: 4.0,
        sigma_beta: 0.0,
        p: 0.25,
        length: 100,
        kappa: 1.0,
        resolution: 1,
    };
    let config = SgtConfig::new(1.0).unwrap().with_normalization(Normalization::LengthInsensitive);
    let psi = |length| {
        let (seq, alphabet) = simulate_assumption1(&params.with_length(length), 4).unwrap();
        let sgt = transform(&seq, alphabet.len(), &config).unwrap();
        sgt.get(alphabet.id("u").unwrap(), alphabet.id("v").unwrap())
    };
    let (short, long) = (psi(100), psi(1000));
    assert!((short - long).abs() / long <= 0.05, "{short} vs {long}");
}

#[test]
fn simulated_short_gaps_are_unbiased() {
    for (mu, sigma, resolution) in [(3.0, 0.5, 1), (2.37, 0.4, 100)] {
        let params = PatternParams {
            mu_alpha: mu,
            sigma_alpha: sigma,
            mu_beta: 9.0,
            sigma_beta: 1.0,
            p: 0.1,
            length: 10_000,
            kappa: 1.0,
            resolution,
        };
        let sample = simulate_pattern(&params, &mut ChaCha8Rng::seed_from_u64(21)).unwrap();
        assert_eq!(sample.u_positions.len(), 1000);
        let gaps: Vec<f64> = sample
            .u_positions
            .iter()
            .zip(&sample.v_positions)
            .map(|(u, v)| (v - u) as f64 / resolution as f64)
            .collect();
        let n = gaps.len() as f64;
        let mean = gaps.iter().sum::<f64>() / n;
        let sd = (gaps.iter().map(|g| (g - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt();
        assert!((mean - mu).abs() <= 3.0 * sd / n.sqrt(), "mean {mean} vs {mu}");
    }
}

#[test]
fn periodic_placement_without_variance() {
    let params = PatternParams {
        mu_alpha: 2.0,
        sigma_alpha: 0.0,
        mu_beta: 4.0,
        sigma_beta: 0.0,
        p: 0.2,
        length: 50,
        kappa: 1.0,
        resolution: 1,
    };
    let (seq, alphabet) = simulate_assumption1(&params, 0).unwrap();
    let positions = seq.alphabet_positions(alphabet.len());
    let u = &positions[alphabet.id("u").unwrap()];
    let v = &positions[alphabet.id("v").unwrap()];
    assert_eq!(u.len(), 10);
    assert!(u.windows(2).all(|w| w[1] - w[0] == 4));
    assert!(u.iter().zip(v).all(|(a, b)| b - a == 2));

    let (again, _) = simulate_assumption1(&params, 0).unwrap();
    assert_eq!(seq, again);
    let noisy = PatternParams { sigma_alpha: 0.5, sigma_beta: 0.5, ..params };
    let (a, _) = simulate_assumption1(&noisy, 1).unwrap();
    let (b, _) = simulate_assumption1(&noisy, 2).unwrap();
    assert_ne!(a.events(), b.events());
}

#[test]
fn feature_level_separation_grows_with_kappa() {
    let near = PatternParams {
        mu_alpha: 2.0,
        sigma_alpha: 0.5,
        mu_beta: 12.0,
        sigma_beta: 1.0,
        p: 0.08,
        length: 500,
        kappa: 1.0,
        resolution: 1,
    };
    let far = PatternParams { mu_alpha: 5.0, ..near };
    let grid = [1.5, 2.0, 3.0, 5.0, 10.0];
    let wins = (0..10)
        .filter(|&seed| {
            delta_separation(&near, &far, &grid, Normalization::LengthSensitive, 200, seed * 1_000)
                .unwrap()
                .is_increasing()
        })
        .count();
    assert!(wins >= 8, "{wins}/10");
}
