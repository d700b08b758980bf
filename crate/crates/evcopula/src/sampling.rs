//! Exact samplers for the copulas handled by this crate.
//!
//! Discrete spectral measures are sampled through the max-linear model: with
//! coefficients `a_{m,k} = d p_m q_{m,k}` (column sums one) and iid unit
//! Frechet `Z_m`, the vector `U_k = exp(-1 / max_m a_{m,k} Z_m)` follows the
//! extreme-value copula of the measure exactly, singular components
//! included.
//!
//! Conditionally-iid models `(b, lambda)` are sampled by event-driven first
//! passage of the latent non-decreasing process
//! `H_t = b t + sum_k -log G_k((T_k / t)-)`, where `T_k` are the arrival
//! times of a Poisson process of rate `1 - b` and each `G_k` is drawn from
//! the mixture. (The mixture weight `1 - b` thins the arrival rate; scaling
//! the jump heights instead would break the normalization
//! `-log E[exp(-H_1)] = 1` that makes the margins uniform.) For discrete
//! `G_k` the process is piecewise linear with slope `b` between the jump
//! times `T_k / x` (one per positive atom `x` of `G_k`, left limits taken at
//! the atoms, `H` right-continuous) and jump sizes `log F(x+)/F(x-)`; a
//! component without mass at zero jumps to infinity at `T_k / x_min`,
//! truncating every remaining passage. The coordinates are
//! `U_j = exp(-X_j)` with `X_j = inf{t : H_t > eps_j}` for iid standard
//! exponential thresholds, resolved exactly by scanning events in time
//! order.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::extendibility::CondIIDSpec;
use crate::spectral::DiscreteSpectralMeasure;

/// Tag identifying the generator family of every batch produced here.
pub const GENERATOR_TAG: &str = "chacha12";

/// Per-row event budget of the first-passage sampler.
pub const EVENT_CAP: usize = 1_000_000;

/// A reproducible random stream: a 64-bit seed plus a stream index. Distinct
/// stream indices of the same seed yield independent ChaCha streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngStream {
    seed: u64,
    stream: u64,
}

impl RngStream {
    pub fn new(seed: u64, stream: u64) -> Self {
        Self { seed, stream }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    fn rng(&self) -> ChaCha12Rng {
        let mut rng = ChaCha12Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }
}

/// A matrix of copula samples in the open unit cube, together with the
/// provenance needed to regenerate it bit for bit.
#[derive(Debug, Clone)]
pub struct SampleBatch {
    dim: usize,
    rows: Vec<f64>,
    seed: u64,
    stream: u64,
    generator: String,
}

impl SampleBatch {
    /// Wraps a flat row-major matrix; every entry must lie strictly inside
    /// `(0, 1)`.
    pub fn from_rows(
        dim: usize,
        rows: Vec<f64>,
        seed: u64,
        stream: u64,
        generator: impl Into<String>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument(
                "batch dimension must be positive".into(),
            ));
        }
        if !rows.len().is_multiple_of(dim) {
            return Err(Error::InvalidArgument(format!(
                "row data of length {} is not a multiple of dimension {dim}",
                rows.len()
            )));
        }
        if rows.iter().any(|u| !(*u > 0.0 && *u < 1.0)) {
            return Err(Error::Invariant(
                "batch entries must lie strictly inside (0,1)".into(),
            ));
        }
        Ok(Self {
            dim,
            rows,
            seed,
            stream,
            generator: generator.into(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.rows.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.rows[r * self.dim..(r + 1) * self.dim]
    }

    pub fn get(&self, r: usize, k: usize) -> f64 {
        self.rows[r * self.dim + k]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.rows.chunks(self.dim)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    pub fn generator(&self) -> &str {
        &self.generator
    }
}

/// Draws `n` iid rows from the extreme-value copula of a discrete spectral
/// measure via the max-linear model.
pub fn sample_maxlinear(
    measure: &DiscreteSpectralMeasure,
    n: usize,
    stream: &RngStream,
) -> Result<SampleBatch> {
    if n == 0 {
        return Err(Error::InvalidArgument("need at least one sample".into()));
    }
    let d = measure.dim();
    let coeff: Vec<Vec<f64>> = measure
        .atoms()
        .iter()
        .map(|a| (0..d).map(|k| d as f64 * a.mass * a.point.get(k)).collect())
        .collect();
    let mut rng = stream.rng();
    let mut rows = Vec::with_capacity(n * d);
    let mut y = vec![0.0f64; d];
    for _ in 0..n {
        y.fill(0.0);
        for a in &coeff {
            let z = unit_frechet(&mut rng);
            for k in 0..d {
                if a[k] > 0.0 {
                    y[k] = y[k].max(a[k] * z);
                }
            }
        }
        for &yk in &y {
            rows.push(squash_open01((-1.0 / yk).exp()));
        }
    }
    SampleBatch::from_rows(d, rows, stream.seed(), stream.stream(), GENERATOR_TAG)
}

/// Draws `n` iid rows of the `d`-dimensional conditionally-iid model by
/// event-driven first passage (see the module docs). Errors when a row
/// needs more than [`EVENT_CAP`] events.
pub fn sample_condiid(
    spec: &CondIIDSpec,
    d: usize,
    n: usize,
    stream: &RngStream,
) -> Result<SampleBatch> {
    sample_condiid_with_cap(spec, d, n, stream, EVENT_CAP)
}

pub(crate) fn sample_condiid_with_cap(
    spec: &CondIIDSpec,
    d: usize,
    n: usize,
    stream: &RngStream,
    event_cap: usize,
) -> Result<SampleBatch> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "need at least one coordinate".into(),
        ));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("need at least one sample".into()));
    }
    let mut rng = stream.rng();
    let b = spec.drift();
    let mut rows = Vec::with_capacity(n * d);

    if b == 1.0 || spec.mixture().is_empty() {
        // pure drift: H_t = t and the passage times are the thresholds
        for _ in 0..n {
            for _ in 0..d {
                rows.push(squash_open01((-exp1(&mut rng)).exp()));
            }
        }
        return SampleBatch::from_rows(d, rows, stream.seed(), stream.stream(), GENERATOR_TAG);
    }

    // Per component: atoms in descending order with the jump of
    // -log G((T/t)-) at event time T/x. A missing atom at zero makes the
    // earliest event (largest index here) jump to infinity.
    let components: Vec<Vec<(f64, f64)>> = spec
        .mixture()
        .iter()
        .map(|(_, f)| {
            let atoms = f.atoms();
            let mut events = Vec::new();
            let mut below = 0.0;
            let mut cumulative = Vec::with_capacity(atoms.len());
            for (_, p) in atoms {
                below += p;
                cumulative.push(below);
            }
            for i in (0..atoms.len()).rev() {
                let (x, _) = atoms[i];
                if x <= 0.0 {
                    continue;
                }
                let before = if i == 0 { 0.0 } else { cumulative[i - 1] };
                let jump = if before == 0.0 {
                    f64::INFINITY
                } else {
                    cumulative[i].ln() - before.ln()
                };
                events.push((x, jump));
            }
            events
        })
        .collect();
    let weights: Vec<f64> = spec.mixture().iter().map(|(w, _)| *w).collect();
    let x_sup = spec
        .mixture()
        .iter()
        .map(|(_, f)| f.max_atom())
        .fold(0.0, f64::max);

    let mut thresholds: Vec<(f64, usize)> = Vec::with_capacity(d);
    let mut passage = vec![0.0f64; d];
    for _ in 0..n {
        thresholds.clear();
        for j in 0..d {
            thresholds.push((exp1(&mut rng), j));
        }
        thresholds.sort_by(|a, b| a.0.total_cmp(&b.0));
        resolve_row(
            &mut rng,
            b,
            1.0 - b,
            &components,
            &weights,
            x_sup,
            &thresholds,
            &mut passage,
            event_cap,
        )?;
        for &x in passage.iter() {
            rows.push(squash_open01((-x).exp()));
        }
    }
    SampleBatch::from_rows(d, rows, stream.seed(), stream.stream(), GENERATOR_TAG)
}

/// An upcoming jump of the latent process.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Event {
    time: f64,
    jump: f64,
}

impl Eq for Event {}

impl PartialOrd for Event {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Event {
    fn cmp(&self, other: &Self) -> Ordering {
        // reversed: BinaryHeap pops the earliest event first
        other
            .time
            .total_cmp(&self.time)
            .then_with(|| other.jump.total_cmp(&self.jump))
    }
}

#[allow(clippy::too_many_arguments)]
fn resolve_row(
    rng: &mut ChaCha12Rng,
    b: f64,
    arrival_rate: f64,
    components: &[Vec<(f64, f64)>],
    weights: &[f64],
    x_sup: f64,
    thresholds: &[(f64, usize)],
    passage: &mut [f64],
    event_cap: usize,
) -> Result<()> {
    let d = thresholds.len();
    let eps_max = thresholds[d - 1].0;
    let mut heap: BinaryHeap<Event> = BinaryHeap::new();
    let mut jump_level = 0.0f64;
    let mut arrival_time = exp1(rng) / arrival_rate;
    let mut events_used = 0usize;
    let mut next = 0usize;

    while next < d {
        // time by which every remaining threshold passes on drift alone
        let horizon = if b > 0.0 {
            (eps_max - jump_level) / b
        } else {
            f64::INFINITY
        };
        // generate arrivals until no unscheduled arrival can matter before
        // the heap top (or before linear completion)
        loop {
            let bound = heap.peek().map_or(horizon, |e| e.time.min(horizon));
            if arrival_time / x_sup > bound {
                break;
            }
            let component = pick_component(rng, weights);
            for &(x, jump) in &components[component] {
                heap.push(Event {
                    time: arrival_time / x,
                    jump,
                });
            }
            events_used += components[component].len();
            if events_used > event_cap {
                return Err(Error::EventCapExceeded { cap: event_cap });
            }
            arrival_time += exp1(rng) / arrival_rate;
        }
        let next_event = heap.peek().copied().filter(|e| e.time <= horizon);
        match next_event {
            None => {
                // no jump interferes: the rest passes on the linear part
                for &(eps, j) in &thresholds[next..] {
                    passage[j] = (eps - jump_level) / b;
                }
                next = d;
            }
            Some(event) => {
                heap.pop();
                if b > 0.0 {
                    // linear passages strictly before the jump
                    while next < d && thresholds[next].0 < b * event.time + jump_level {
                        let (eps, j) = thresholds[next];
                        passage[j] = (eps - jump_level) / b;
                        next += 1;
                    }
                }
                jump_level += event.jump;
                if jump_level.is_infinite() {
                    for &(_, j) in &thresholds[next..] {
                        passage[j] = event.time;
                    }
                    next = d;
                } else {
                    while next < d && thresholds[next].0 < b * event.time + jump_level {
                        let (_, j) = thresholds[next];
                        passage[j] = event.time;
                        next += 1;
                    }
                }
            }
        }
    }
    Ok(())
}

fn pick_component(rng: &mut ChaCha12Rng, weights: &[f64]) -> usize {
    if weights.len() == 1 {
        return 0;
    }
    let v: f64 = rng.gen();
    let mut acc = 0.0;
    for (i, w) in weights.iter().enumerate() {
        acc += w;
        if v < acc {
            return i;
        }
    }
    weights.len() - 1
}

/// Uniform draw from the open interval (0, 1).
fn uniform_open01(rng: &mut ChaCha12Rng) -> f64 {
    loop {
        let v: f64 = rng.gen();
        if v > 0.0 {
            return v;
        }
    }
}

/// Standard exponential variate.
fn exp1(rng: &mut ChaCha12Rng) -> f64 {
    -uniform_open01(rng).ln()
}

/// Unit Frechet variate as -1/log(V); the open-interval draw keeps it
/// finite and positive.
fn unit_frechet(rng: &mut ChaCha12Rng) -> f64 {
    -1.0 / uniform_open01(rng).ln()
}

/// Clamps to the open unit interval (the nearest representable neighbours
/// of 0 and 1); only reachable by draws of astronomical rarity.
fn squash_open01(u: f64) -> f64 {
    u.clamp(f64::MIN_POSITIVE, 1.0 - f64::EPSILON / 2.0)
}
