//! Doubling-size timing harness for the complexity trends of the main
//! algorithms.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::edit::{precompute_special, p_lev_table};
use crate::hamming::{factor_coverage_all, prefix_coverage};
use crate::lcpk::pref_k;
use crate::penalty::PenaltyMatrix;
use crate::restricted::{q_table_fast, q_table_quadratic};
use crate::sample::random_text;
use crate::text::Text;

/// One timed algorithm at sizes `n` and `2n`.
#[derive(Debug, Clone)]
pub struct Trend {
    pub name: &'static str,
    pub n: usize,
    pub seconds_n: f64,
    pub seconds_2n: f64,
    /// Ratio predicted by the polynomial degree; `tolerance` is added on top.
    pub bound: f64,
    pub tolerance: f64,
    pub attempts: usize,
}

impl Trend {
    pub fn ratio(&self) -> f64 {
        self.seconds_2n / self.seconds_n.max(1e-9)
    }

    /// Fitted growth exponent `log2(ratio)`.
    pub fn exponent(&self) -> f64 {
        self.ratio().log2()
    }

    pub fn passed(&self) -> bool {
        self.ratio() <= self.bound + self.tolerance
    }
}

#[derive(Debug, Clone, Copy)]
pub struct BenchConfig {
    pub seed: u64,
    /// Timed repetitions per size; the fastest is kept.
    pub reps: usize,
    /// Extra attempts when a ratio is above its bound.
    pub retries: usize,
    pub prefix_n: usize,
    pub hamming_n: usize,
    pub levenshtein_n: usize,
    pub q_n: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            seed: 7,
            reps: 7,
            retries: 3,
            prefix_n: 1 << 15,
            hamming_n: 1024,
            levenshtein_n: 48,
            q_n: 32,
        }
    }
}

fn fastest(reps: usize, mut f: impl FnMut()) -> Duration {
    (0..reps.max(1))
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed()
        })
        .min()
        .unwrap()
}

fn text(seed: u64, n: usize, sigma: usize) -> Text {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
    random_text(&mut rng, n..n + 1, sigma..sigma + 1)
}

fn trend(
    cfg: &BenchConfig,
    name: &'static str,
    n: usize,
    bound: f64,
    mut time: impl FnMut(usize) -> Duration,
) -> Trend {
    let mut out = Trend { name, n, seconds_n: 0.0, seconds_2n: 0.0, bound, tolerance: 1.0, attempts: 0 };
    for _ in 0..=cfg.retries {
        out.attempts += 1;
        out.seconds_n = time(n).as_secs_f64();
        out.seconds_2n = time(2 * n).as_secs_f64();
        if out.passed() {
            break;
        }
    }
    out
}

/// Prefix k-coverage after `PREF_k` is built (linear prediction).
pub fn prefix_coverage_trend(cfg: &BenchConfig) -> Trend {
    trend(cfg, "prefix-coverage-hamming", cfg.prefix_n, 3.0, |n| {
        let t = text(cfg.seed, n, 4);
        let pref = pref_k(&t, 2);
        fastest(cfg.reps, || {
            std::hint::black_box(prefix_coverage(&t, &pref).unwrap());
        })
    })
}

/// Hamming k-coverage of all factors (quadratic prediction).
pub fn hamming_factor_trend(cfg: &BenchConfig) -> Trend {
    trend(cfg, "factor-coverage-hamming", cfg.hamming_n, 5.0, |n| {
        let t = text(cfg.seed, n, 4);
        fastest(cfg.reps, || {
            std::hint::black_box(factor_coverage_all(&t, 2));
        })
    })
}

/// Levenshtein k-coverage of all factors via the wave table (cubic
/// prediction).
pub fn levenshtein_factor_trend(cfg: &BenchConfig) -> Trend {
    trend(cfg, "factor-coverage-levenshtein", cfg.levenshtein_n, 9.0, |n| {
        let t = text(cfg.seed, n, 4);
        fastest(cfg.reps, || {
            std::hint::black_box(p_lev_table(&t, 1).unwrap().factor_coverage());
        })
    })
}

/// Total time of the quadratic and the fast `Q` table over every factor;
/// informational only.
#[derive(Debug, Clone)]
pub struct QCrossover {
    pub n: usize,
    pub quadratic_seconds: f64,
    pub fast_seconds: f64,
    pub index_seconds: f64,
}

pub fn q_crossover(cfg: &BenchConfig, n: usize) -> QCrossover {
    let t = text(cfg.seed, n, 3);
    let p = PenaltyMatrix::unit(t.sigma());
    let factors: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let start = Instant::now();
    let idx = precompute_special(&t, &p).unwrap();
    let index_seconds = start.elapsed().as_secs_f64();
    let quadratic = fastest(1, || {
        for &(a, b) in &factors {
            std::hint::black_box(q_table_quadratic(&t, a, b, &p).unwrap());
        }
    });
    let fast = fastest(1, || {
        for &(a, b) in &factors {
            std::hint::black_box(q_table_fast(&t, a, b, &p, &idx).unwrap());
        }
    });
    QCrossover {
        n,
        quadratic_seconds: quadratic.as_secs_f64(),
        fast_seconds: fast.as_secs_f64(),
        index_seconds,
    }
}

/// All three trends plus the `Q` table comparison at `q_n` and `2·q_n`.
pub fn run(cfg: &BenchConfig) -> (Vec<Trend>, Vec<QCrossover>) {
    let trends = vec![prefix_coverage_trend(cfg), hamming_factor_trend(cfg), levenshtein_factor_trend(cfg)];
    let q = vec![q_crossover(cfg, cfg.q_n), q_crossover(cfg, 2 * cfg.q_n)];
    (trends, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_reports_ratios() {
        let cfg = BenchConfig { reps: 1, retries: 0, prefix_n: 64, hamming_n: 16, levenshtein_n: 8, q_n: 6, ..Default::default() };
        let (trends, q) = run(&cfg);
        assert_eq!(trends.len(), 3);
        assert!(trends.iter().all(|t| t.attempts == 1 && t.ratio().is_finite()));
        assert_eq!(q[1].n, 12);
    }
}
