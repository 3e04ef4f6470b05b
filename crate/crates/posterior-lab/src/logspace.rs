//! Log-domain accumulation helpers.
//!
//! Posterior masses in this crate can be as small as `exp(-n * gap)` with
//! `n` in the millions, far below the smallest positive `f64`. All mass
//! arithmetic therefore happens on logarithms, with `-inf` standing for an
//! exact zero.

/// `log(exp(a) + exp(b))` without overflow.
#[inline]
pub fn log_add_exp(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY && b == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    if a >= b {
        a + (b - a).exp().ln_1p()
    } else {
        b + (a - b).exp().ln_1p()
    }
}

/// `log(sum_i exp(xs[i]))` by max-shifting. Empty input is an empty sum,
/// i.e. `-inf`.
pub fn log_sum_exp(xs: &[f64]) -> f64 {
    let m = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    let sum: f64 = xs.iter().map(|&x| (x - m).exp()).sum();
    m + sum.ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_naive_in_safe_range() {
        let xs = [0.5, 2.0, -1.0];
        let naive = xs.iter().map(|x| x.exp()).sum::<f64>().ln();
        assert!((log_sum_exp(&xs) - naive).abs() < 1e-14);
        assert!((log_add_exp(0.5, 2.0) - (0.5f64.exp() + 2.0f64.exp()).ln()).abs() < 1e-14);
    }

    #[test]
    fn survives_extreme_magnitudes() {
        // exp(-20000) underflows; the log-domain result is still exact.
        let xs = [-20000.0, -20003.0];
        let expected = -20000.0 + (1.0 + (-3.0f64).exp()).ln();
        assert!((log_sum_exp(&xs) - expected).abs() < 1e-12);

        let xs = [1234.0, 1232.0];
        let expected = 1232.0 + (2.0f64.exp() + 1.0).ln();
        assert!((log_sum_exp(&xs) - expected).abs() < 1e-12);
    }

    #[test]
    fn neg_infinity_is_absorbing_zero() {
        assert_eq!(log_sum_exp(&[]), f64::NEG_INFINITY);
        assert_eq!(
            log_sum_exp(&[f64::NEG_INFINITY, f64::NEG_INFINITY]),
            f64::NEG_INFINITY
        );
        assert_eq!(log_add_exp(f64::NEG_INFINITY, 2.0), 2.0);
        assert_eq!(log_sum_exp(&[f64::NEG_INFINITY, 2.0]), 2.0);
    }

    #[test]
    fn max_term_lower_bounds_the_sum() {
        // Needed exactly (not just approximately) by the posterior sandwich
        // bounds: log_sum_exp(xs) >= max(xs) holds in floating point.
        let cases = [
            vec![0.0, 0.0, 0.0],
            vec![-1e9, -1e9 + 1.0],
            vec![3.5],
            vec![-745.0, -746.0, f64::NEG_INFINITY],
        ];
        for xs in cases {
            let m = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            assert!(log_sum_exp(&xs) >= m);
        }
    }
}
