use crate::error::{invalid, Result};

/// `Σ|a_i − b_i|`
pub fn manhattan(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return invalid(format!("length mismatch: {} vs {}", a.len(), b.len()));
    }
    Ok(l1(a, b))
}

#[inline]
pub(crate) fn l1(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum()
}

/// Per-coordinate median of `points`, averaging the two middle values for
/// even counts.
pub(crate) fn median_center<'a>(points: impl Iterator<Item = &'a [f64]>, dim: usize) -> Vec<f64> {
    let points: Vec<&[f64]> = points.collect();
    let n = points.len();
    if n == 0 {
        return vec![0.0; dim];
    }
    let mut column = vec![0.0; n];
    (0..dim)
        .map(|d| {
            for (slot, p) in column.iter_mut().zip(&points) {
                *slot = p[d];
            }
            let mid = n / 2;
            let (_, &mut upper, _) = column.select_nth_unstable_by(mid, f64::total_cmp);
            if n % 2 == 1 {
                upper
            } else {
                let lower = column[..mid].iter().copied().fold(f64::NEG_INFINITY, f64::max);
                0.5 * (lower + upper)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_values() {
        assert_eq!(manhattan(&[1.0, 2.0], &[3.0, 1.0]).unwrap(), 3.0);
        assert_eq!(manhattan(&[0.5, -1.0], &[0.5, -1.0]).unwrap(), 0.0);
        assert!(manhattan(&[1.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn medians() {
        let pts = [vec![1.0, 10.0], vec![3.0, 0.0], vec![2.0, 4.0]];
        assert_eq!(median_center(pts.iter().map(|p| p.as_slice()), 2), vec![2.0, 4.0]);
        let even = [vec![1.0], vec![4.0], vec![2.0], vec![10.0]];
        assert_eq!(median_center(even.iter().map(|p| p.as_slice()), 1), vec![3.0]);
    }

    proptest! {
        #[test]
        fn metric_axioms(
            a in prop::collection::vec(-10.0f64..10.0, 5),
            b in prop::collection::vec(-10.0f64..10.0, 5),
            c in prop::collection::vec(-10.0f64..10.0, 5),
        ) {
            let ab = manhattan(&a, &b).unwrap();
            prop_assert_eq!(ab, manhattan(&b, &a).unwrap());
            prop_assert!(ab <= manhattan(&a, &c).unwrap() + manhattan(&c, &b).unwrap() + 1e-12);
            prop_assert!(ab >= 0.0);
        }

        #[test]
        fn median_minimizes_l1(points in prop::collection::vec(prop::collection::vec(-5.0f64..5.0, 3), 1..12)) {
            let m = median_center(points.iter().map(|p| p.as_slice()), 3);
            let cost = |c: &[f64]| points.iter().map(|p| l1(p, c)).sum::<f64>();
            let best = cost(&m);
            for p in &points {
                prop_assert!(best <= cost(p) + 1e-9);
            }
        }
    }
}
