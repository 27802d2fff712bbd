//! Log-space arithmetic helpers shared by the samplers and estimators.
//!
//! Probabilities are carried as natural logs everywhere; sums of
//! probabilities go through the max-subtracted log-sum-exp device below.

use std::sync::OnceLock;

/// log(exp(a) + exp(b)) without overflow.
#[inline]
pub fn logsumexp2(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    if a > b {
        a + (b - a).exp().ln_1p()
    } else {
        b + (a - b).exp().ln_1p()
    }
}

/// log Σ exp(v_i) over a slice, with the max subtracted.
pub fn logsumexp(values: &[f64]) -> f64 {
    let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    let sum: f64 = values.iter().map(|v| (v - max).exp()).sum();
    max + sum.ln()
}

/// Streaming log-sum-exp accumulator for one-pass reductions.
#[derive(Debug, Clone, Copy)]
pub struct StreamingLse {
    max: f64,
    sum: f64,
}

impl StreamingLse {
    pub fn new() -> Self {
        StreamingLse {
            max: f64::NEG_INFINITY,
            sum: 0.0,
        }
    }

    pub fn add(&mut self, value: f64) {
        if value == f64::NEG_INFINITY {
            return;
        }
        if value <= self.max {
            self.sum += (value - self.max).exp();
        } else {
            self.sum = self.sum * (self.max - value).exp() + 1.0;
            self.max = value;
        }
    }

    pub fn value(&self) -> f64 {
        if self.max == f64::NEG_INFINITY {
            f64::NEG_INFINITY
        } else {
            self.max + self.sum.ln()
        }
    }
}

impl Default for StreamingLse {
    fn default() -> Self {
        Self::new()
    }
}

/// ln Γ(x). Thin wrapper so the special-function dependency stays local.
#[inline]
pub fn ln_gamma(x: f64) -> f64 {
    statrs::function::gamma::ln_gamma(x)
}

/// ln B(a, b) = ln Γ(a) + ln Γ(b) − ln Γ(a+b).
#[inline]
pub fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)
}

/// ln C(n, k).
pub fn ln_binomial(n: usize, k: usize) -> f64 {
    debug_assert!(k <= n);
    ln_gamma(n as f64 + 1.0) - ln_gamma(k as f64 + 1.0) - ln_gamma((n - k) as f64 + 1.0)
}

const LN_FACTORIAL_CACHE: usize = 1024;

fn ln_factorial_table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Vec::with_capacity(LN_FACTORIAL_CACHE);
        let mut acc = 0.0f64;
        t.push(0.0);
        for n in 1..LN_FACTORIAL_CACHE {
            acc += (n as f64).ln();
            t.push(acc);
        }
        t
    })
}

/// ln(x!) for a nonnegative integer stored in an f64.
#[inline]
pub fn ln_factorial(x: f64) -> f64 {
    debug_assert!(x >= 0.0 && x.fract() == 0.0);
    let n = x as usize;
    if n < LN_FACTORIAL_CACHE {
        ln_factorial_table()[n]
    } else {
        ln_gamma(x + 1.0)
    }
}

/// Median of a slice; the slice is copied and partially sorted.
pub fn median(values: &[f64]) -> f64 {
    assert!(!values.is_empty());
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn logsumexp_matches_naive_in_range() {
        let a = 0.3f64;
        let b = -1.2f64;
        let naive = (a.exp() + b.exp()).ln();
        assert!((logsumexp2(a, b) - naive).abs() < 1e-14);
        assert!((logsumexp(&[a, b]) - naive).abs() < 1e-14);
    }

    #[test]
    fn logsumexp_survives_large_magnitudes() {
        let v = logsumexp2(-1e4, -1e4 + 3.0);
        assert!((v - (-1e4 + 3.0 + 1.0f64.exp().powi(-3).ln_1p())).abs() < 1e-9);
        assert_eq!(logsumexp2(f64::NEG_INFINITY, f64::NEG_INFINITY), f64::NEG_INFINITY);
    }

    #[test]
    fn streaming_matches_batch() {
        let xs = [-3.0, 0.5, -700.0, 2.25, -1.0];
        let mut s = StreamingLse::new();
        for &x in &xs {
            s.add(x);
        }
        assert!((s.value() - logsumexp(&xs)).abs() < 1e-12);
    }

    #[test]
    fn ln_factorial_agrees_with_gamma() {
        for n in [0usize, 1, 5, 170, 1023, 5000] {
            let x = n as f64;
            assert!((ln_factorial(x) - ln_gamma(x + 1.0)).abs() < 1e-8 * (1.0 + x));
        }
    }

    #[test]
    fn median_even_odd() {
        assert_eq!(median(&[3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&[4.0, 1.0, 2.0, 3.0]), 2.5);
    }
}
