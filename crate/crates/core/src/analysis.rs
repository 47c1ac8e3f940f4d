//! Bounds, efficiency accounting and Monte-Carlo failure rates.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codes::{ball_volume, checked_pow, random_matrix, Code};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::wpc::{min_r, solve_randomized, solve_wet_unbounded, CoverObject};

/// q-ary entropy `x log_q(q−1) − x log_q x − (1−x) log_q(1−x)`, with the
/// usual `0 log 0 = 0` convention at the endpoints.
pub fn entropy_q(q: u32, x: f64) -> f64 {
    let q = q as f64;
    let ln_q = q.ln();
    let xlogx = |t: f64| if t <= 0.0 { 0.0 } else { t * t.ln() };
    (x * (q - 1.0).ln() - xlogx(x) - xlogx(1.0 - x)) / ln_q
}

/// Inverse of [`entropy_q`] on `[0, 1 − 1/q]`, by bisection.
pub fn inv_entropy_q(q: u32, y: f64) -> f64 {
    let top = 1.0 - 1.0 / q as f64;
    if y <= 0.0 {
        return 0.0;
    }
    if y >= 1.0 {
        return top;
    }
    let (mut lo, mut hi) = (0.0f64, top);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if entropy_q(q, mid) < y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Upper bound `α / H_q^{-1}(α)` on embedding efficiency at relative payload `α`.
pub fn sphere_covering_bound(q: u32, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::Domain(format!("relative payload {alpha} not in (0, 1]")));
    }
    Ok(alpha / inv_entropy_q(q, alpha))
}

/// Relative efficiency lost by reserving `r` of the `n − k` syndrome symbols.
pub fn efficiency_loss(r: usize, n: usize, k: usize) -> Result<f64> {
    if k > n || r >= n - k {
        return Err(Error::Domain(format!(
            "r = {r} leaves no message symbols for an [{n}, {k}] code"
        )));
    }
    Ok(r as f64 / (n - k) as f64)
}

/// Exact relative loss `⌈log_q((q−1)⌊λn⌋ + 1)⌉ / p` for the Hamming code
/// of redundancy `p` with a fraction `λ` of wet positions.
pub fn asymptotic_loss(q: u32, lambda: f64, p: usize) -> Result<f64> {
    if !(lambda >= 0.0 && lambda < 1.0 / q as f64) {
        return Err(Error::Domain(format!("λ = {lambda} not in [0, 1/{q})")));
    }
    if p < 2 {
        return Err(Error::Domain(format!("p = {p} must be ≥ 2")));
    }
    let qq = q as u128;
    let n = checked_pow(qq, p as u32)
        .map(|v| (v - 1) / (qq - 1))
        .ok_or_else(|| Error::SizeLimit(format!("q^p overflows for p = {p}")))?;
    let wet = (lambda * n as f64).floor() as u128;
    let target = (qq - 1) * wet + 1;
    let mut r = 0;
    let mut power = 1u128;
    while power < target {
        power *= qq;
        r += 1;
    }
    Ok(r as f64 / p as f64)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    /// Message symbols per cover symbol.
    pub alpha: f64,
    pub e_bound: f64,
    pub e_actual: f64,
    pub loss: f64,
}

/// Efficiency of syndrome coding with `code` and a random tail of `r`
/// symbols. Average changes are the mean coset-leader weight under
/// uniformly distributed syndromes (`1 − q^{−p}` for Hamming codes).
pub fn bound_report(code: &Code, r: usize) -> Result<BoundReport> {
    let (n, k) = (code.n(), code.k());
    let loss = efficiency_loss(r, n, k)?;
    let message = (n - k - r) as f64;
    let alpha = message / n as f64;
    let avg = code.average_leader_weight().ok_or_else(|| {
        Error::Unsupported("average change count unavailable for this code".into())
    })?;
    Ok(BoundReport {
        alpha,
        e_bound: sphere_covering_bound(code.field().q(), alpha)?,
        e_actual: message / avg,
        loss,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fig1Row {
    pub wet: usize,
    pub min_r: usize,
    pub remaining: usize,
}

/// `(ℓ, min_r, n − k − min_r)` for every ℓ from 0 to n.
pub fn fig1_table(code: &Code) -> Result<Vec<Fig1Row>> {
    (0..=code.n())
        .map(|wet| {
            let r = min_r(code, wet)?;
            Ok(Fig1Row {
                wet,
                min_r: r,
                remaining: code.redundancy() - r,
            })
        })
        .collect()
}

pub fn fig1_csv(rows: &[Fig1Row]) -> String {
    let mut out = String::from("l,min_r,remaining\n");
    for row in rows {
        out.push_str(&format!("{},{},{}\n", row.wet, row.min_r, row.remaining));
    }
    out
}

/// Whether the counting condition holds for `code`, `ℓ` wet positions and
/// a tail of `r` symbols.
pub fn counting_condition(code: &Code, wet: usize, r: usize) -> bool {
    let spec = code.spec();
    let q = spec.q() as u128;
    let Some(rho) = spec.rho else { return false };
    let total = q.pow(spec.redundancy() as u32);
    total < q.pow(r as u32) + ball_volume(q, (spec.n - wet) as u64, rho as u64)
}

/// Which embedding problem a Monte-Carlo trial solves.
#[derive(Debug, Clone)]
pub enum McSolver<'a> {
    /// Randomized solver on a fixed code with tail length `r`.
    Randomized { code: &'a Code, r: usize },
    /// Unbounded wet-paper solver on a fixed code.
    WetUnbounded { code: &'a Code },
    /// Unbounded wet-paper solver on a fresh uniform `rows × cols` matrix
    /// every trial.
    RandomMatrix { field: Field, rows: usize, cols: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct McEstimate {
    pub trials: usize,
    pub successes: usize,
    /// Estimated single-block success probability.
    pub block_rate: f64,
    /// `block_rate^L` for a message of `L` blocks.
    pub message_rate: f64,
    pub outcomes: Vec<bool>,
}

impl McEstimate {
    /// `trial_block,success` rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("trial_block,success\n");
        for (i, &ok) in self.outcomes.iter().enumerate() {
            out.push_str(&format!("{i},{}\n", u8::from(ok)));
        }
        out
    }
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Seeded estimate of the per-block embedding success rate with `wet`
/// random wet positions and uniform covers and messages. Each trial draws
/// from its own ChaCha stream, so results do not depend on partitioning.
pub fn failure_rate_mc(
    solver: &McSolver<'_>,
    wet: usize,
    blocks: u32,
    trials: usize,
    seed: u64,
) -> Result<McEstimate> {
    if trials == 0 {
        return Err(Error::Usage("at least one trial is required".into()));
    }
    let (field, n, msg_len) = match solver {
        McSolver::Randomized { code, r } => {
            if *r > code.redundancy() {
                return Err(Error::Usage(format!("r = {r} exceeds n − k")));
            }
            (code.field().clone(), code.n(), code.redundancy() - r)
        }
        McSolver::WetUnbounded { code } => (code.field().clone(), code.n(), code.redundancy()),
        McSolver::RandomMatrix { field, rows, cols } => (field.clone(), *cols, *rows),
    };
    if wet > n {
        return Err(Error::Usage(format!("ℓ = {wet} exceeds n = {n}")));
    }
    let q = field.q();
    let outcomes: Vec<bool> = (0..trials)
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            let h = match solver {
                McSolver::RandomMatrix { rows, cols, .. } => {
                    Some(random_matrix(&field, *rows, *cols, &mut rng))
                }
                _ => None,
            };
            let x: Vec<u32> = (0..n).map(|_| rng.gen_range(0..q)).collect();
            let wet_set = sample(&mut rng, n, wet).into_vec();
            let m: Vec<u32> = (0..msg_len).map(|_| rng.gen_range(0..q)).collect();
            let cover = CoverObject::new(x, wet_set).expect("sampled indices are distinct");
            match solver {
                McSolver::Randomized { code, r } => solve_randomized(code, &cover, &m, *r).is_ok(),
                McSolver::WetUnbounded { code } => {
                    solve_wet_unbounded(code.parity_check().matrix(), &cover, &m).is_ok()
                }
                McSolver::RandomMatrix { .. } => {
                    solve_wet_unbounded(h.as_ref().unwrap(), &cover, &m).is_ok()
                }
            }
        })
        .collect();
    let successes = outcomes.iter().filter(|&&ok| ok).count();
    let block_rate = successes as f64 / trials as f64;
    Ok(McEstimate {
        trials,
        successes,
        block_rate,
        message_rate: block_rate.powi(blocks as i32),
        outcomes,
    })
}

/// Fraction of `trials` uniform `nrow × ncol` matrices with rank `nrow`.
pub fn full_rank_frequency(field: &Field, nrow: usize, ncol: usize, trials: usize, seed: u64) -> f64 {
    let hits = (0..trials)
        .filter(|&t| {
            let mut rng = trial_rng(seed, t);
            random_matrix(field, nrow, ncol, &mut rng).rank() == nrow
        })
        .count();
    hits as f64 / trials as f64
}

/// Standard deviation of a binomial frequency.
pub fn binomial_sigma(p: f64, trials: usize) -> f64 {
    (p * (1.0 - p) / trials as f64).sqrt()
}
