//! Property suites: randomized algebraic invariants (proptest) and seeded
//! statistical invariants of the samplers.

mod common;

use proptest::prelude::*;

use evcopula::{
    check_necessary_discrete, estimate_pickands, extremal_stdf, sample_condiid, sample_maxlinear,
    singular_paths, uniform_grid, CondIIDSpec, DiscreteSpectralMeasure, DiscreteUnitMeanDF,
    EquivClass, RngStream, SampleBatch, SimplexVector,
};

fn exchangeable_measure() -> impl Strategy<Value = DiscreteSpectralMeasure> {
    (
        2usize..=4,
        prop::collection::vec((prop::collection::vec(1u32..1000, 4), 1u32..1000), 1..=3),
    )
        .prop_map(|(d, raw)| {
            let atoms: Vec<(SimplexVector, f64)> = raw
                .into_iter()
                .map(|(ws, mass)| {
                    let ws: Vec<f64> = ws[..d].iter().map(|w| *w as f64).collect();
                    (SimplexVector::from_weights(&ws).unwrap(), mass as f64)
                })
                .collect();
            DiscreteSpectralMeasure::exchangeable_from_atoms(d, &atoms).unwrap()
        })
}

fn unit_mean_df() -> impl Strategy<Value = DiscreteUnitMeanDF> {
    (
        prop::collection::btree_set(1u32..=200, 1..=6),
        prop::collection::vec(1u32..1000, 7),
        any::<bool>(),
    )
        .prop_map(|(locations, weights, with_zero)| {
            let mut locations: Vec<f64> = locations.into_iter().map(|v| v as f64 / 20.0).collect();
            if with_zero {
                locations.insert(0, 0.0);
            }
            let weights = &weights[..locations.len()];
            let total: f64 = weights.iter().map(|w| *w as f64).sum();
            let probs: Vec<f64> = weights.iter().map(|w| *w as f64 / total).collect();
            let mean: f64 = locations.iter().zip(&probs).map(|(x, p)| x * p).sum();
            let atoms: Vec<(f64, f64)> = locations
                .iter()
                .zip(&probs)
                .map(|(x, p)| (x / mean, *p))
                .collect();
            DiscreteUnitMeanDF::new(atoms).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn stdf_is_homogeneous_and_bounded(
        m in exchangeable_measure(),
        raw_x in prop::collection::vec(0.0f64..2.0, 4),
        t in 0.1f64..3.0,
    ) {
        let x = &raw_x[..m.dim()];
        let value = m.stdf(x).unwrap();
        let tx: Vec<f64> = x.iter().map(|v| t * v).collect();
        prop_assert!((m.stdf(&tx).unwrap() - t * value).abs() <= 1e-12);
        let max = x.iter().copied().fold(0.0, f64::max);
        let sum: f64 = x.iter().sum();
        prop_assert!(value >= max - 1e-12);
        prop_assert!(value <= sum + 1e-12);
    }

    #[test]
    fn stdf_is_permutation_invariant_on_symmetric_measures(
        m in exchangeable_measure(),
        raw_x in prop::collection::vec(0.0f64..2.0, 4),
        rotation in 0usize..4,
    ) {
        let d = m.dim();
        let x = &raw_x[..d];
        let mut permuted = x.to_vec();
        permuted.rotate_left(rotation % d);
        let a = m.stdf(x).unwrap();
        let b = m.stdf(&permuted).unwrap();
        // the term multisets coincide; only the summation order differs
        prop_assert!((a - b).abs() <= 1e-14 * (1.0 + a.abs()));
    }

    #[test]
    fn extremal_stdf_matches_spread_measure_and_oracle(
        weights in prop::collection::vec(1u32..1000, 3),
        raw_x in prop::collection::vec(0.0f64..2.0, 3),
    ) {
        let ws: Vec<f64> = weights.iter().map(|w| *w as f64).collect();
        let point = SimplexVector::from_weights(&ws).unwrap();
        let class = EquivClass::new(point);
        let direct = extremal_stdf(&class, &raw_x).unwrap();
        let via_measure = DiscreteSpectralMeasure::extremal(&class)
            .unwrap()
            .stdf(&raw_x)
            .unwrap();
        prop_assert!((direct - via_measure).abs() <= 1e-12);
        let oracle = common::oracle_extremal_stdf(class.representative().entries(), &raw_x);
        prop_assert!((direct - oracle).abs() <= 1e-12);
    }

    #[test]
    fn copula_satisfies_the_extreme_value_property(
        m in exchangeable_measure(),
        raw_u in prop::collection::vec(0.05f64..0.999, 4),
        t in 0.2f64..4.0,
    ) {
        let u = &raw_u[..m.dim()];
        let ut: Vec<f64> = u.iter().map(|v| v.powf(t)).collect();
        let lhs = m.copula(&ut).unwrap();
        let rhs = m.copula(u).unwrap().powf(t);
        prop_assert!((lhs - rhs).abs() <= 1e-12);
    }

    #[test]
    fn margins_stay_consistent(
        m in exchangeable_measure().prop_filter("need d >= 3", |m| m.dim() >= 3),
        raw_x in prop::collection::vec(0.0f64..2.0, 4),
        pick in 0usize..8,
    ) {
        let n = 2 + pick % (m.dim() - 2).max(1);
        let margin = m.margin(n).unwrap();
        let x = &raw_x[..n];
        let mut padded = x.to_vec();
        padded.resize(m.dim(), 0.0);
        prop_assert!((margin.stdf(x).unwrap() - m.stdf(&padded).unwrap()).abs() <= 1e-12);
    }

    #[test]
    fn pair_law_invariants(f in unit_mean_df()) {
        let law = f.q_law();
        prop_assert!(law.is_symmetric());
        prop_assert!((law.mean() - 0.5).abs() <= 1e-12);
        let total: f64 = law.atoms().iter().map(|(_, p)| p).sum();
        prop_assert!((total - 1.0).abs() <= 1e-12);
        // mass at the center is sum of p_i^2 x_i
        let expected_half: f64 = f.atoms().iter().map(|(x, p)| p * p * x).sum();
        prop_assert!((law.prob_at(0.5) - expected_half).abs() <= 1e-12);
        // the pair law can never violate the necessary condition
        prop_assert!(check_necessary_discrete(&law).unwrap().pass);
    }

    #[test]
    fn mixture_stdf_is_homogeneous_and_symmetric(
        f in unit_mean_df(),
        b in 0.0f64..1.0,
        raw_x in prop::collection::vec(0.0f64..2.0, 3),
        t in 0.1f64..3.0,
        rotation in 0usize..3,
    ) {
        let spec = CondIIDSpec::new(b, vec![(1.0, f)]).unwrap();
        let value = spec.stdf(&raw_x).unwrap();
        let tx: Vec<f64> = raw_x.iter().map(|v| t * v).collect();
        prop_assert!((spec.stdf(&tx).unwrap() - t * value).abs() <= 1e-11 * (1.0 + value));
        let mut permuted = raw_x.clone();
        permuted.rotate_left(rotation);
        prop_assert!((spec.stdf(&permuted).unwrap() - value).abs() <= 1e-12 * (1.0 + value));
    }

    #[test]
    fn pair_route_and_breakpoint_route_agree(f in unit_mean_df()) {
        let a = f.pickands_function().unwrap();
        let tol = 1e-12 * f.max_atom().max(1.0);
        for i in 0..=100 {
            let x = i as f64 / 100.0;
            let direct = f.pickands_value_by_integration(x).unwrap();
            prop_assert!((a.eval(x) - direct).abs() <= tol);
        }
    }

    #[test]
    fn symmetric_dependence_functions_round_trip(
        seed in 0u64..1_000_000,
    ) {
        let mut rng = common::rng(seed);
        let law = common::random_symmetric_q_law(&mut rng, 3);
        let a = law.pickands_function().unwrap();
        let back = a.q_law().unwrap();
        prop_assert_eq!(law.atoms().len(), back.atoms().len());
        for (x, y) in law.atoms().iter().zip(back.atoms()) {
            prop_assert!((x.0 - y.0).abs() <= 1e-12);
            prop_assert!((x.1 - y.1).abs() <= 1e-12);
        }
        let nu = a.decompose().unwrap();
        let again = nu.recompose().unwrap();
        for kink in a.kinks() {
            prop_assert!((a.eval(*kink) - again.eval(*kink)).abs() <= 1e-12);
        }
    }
}

/// With drift strictly between 0 and 1 the first-passage sampler still
/// reproduces the exact mixed dependence function.
#[test]
fn condiid_sampler_handles_interior_drift() {
    let spec = CondIIDSpec::new(
        0.3,
        vec![(1.0, DiscreteUnitMeanDF::cuadras_auge(0.6).unwrap())],
    )
    .unwrap();
    let exact = spec.pickands_function().unwrap();
    let batch = sample_condiid(&spec, 2, 100_000, &RngStream::new(55, 0)).unwrap();
    let est = estimate_pickands(&batch, 0, 1, &uniform_grid(9)).unwrap();
    let err = est.sup_error(|x| exact.eval(x));
    assert!(err <= 0.02, "sup error {err}");
}

/// KS margin uniformity: at n = 1e5 the statistic stays below the 1%
/// critical value 1.63/sqrt(n) in at least 19 of 20 seeded repetitions, per
/// coordinate and sampler.
#[test]
fn sampler_margins_are_uniform() {
    let n = 100_000;
    let critical = 1.63 / (n as f64).sqrt();
    let reps = 20;

    let bc2 =
        DiscreteSpectralMeasure::from_q_law(&evcopula::bc2_q_law(0.25, 0.75).unwrap()).unwrap();
    let spec = CondIIDSpec::new(
        0.25,
        vec![(1.0, DiscreteUnitMeanDF::cuadras_auge(0.5).unwrap())],
    )
    .unwrap();

    let mut failures = [[0usize; 2]; 2];
    for rep in 0..reps {
        let batches: [SampleBatch; 2] = [
            sample_maxlinear(&bc2, n, &RngStream::new(1000 + rep, 0)).unwrap(),
            sample_condiid(&spec, 2, n, &RngStream::new(2000 + rep, 0)).unwrap(),
        ];
        for (s, batch) in batches.iter().enumerate() {
            for (k, slot) in failures[s].iter_mut().enumerate() {
                let mut column: Vec<f64> = (0..n).map(|r| batch.get(r, k)).collect();
                if common::ks_uniform(&mut column) >= critical {
                    *slot += 1;
                }
            }
        }
    }
    for (s, per_sampler) in failures.iter().enumerate() {
        for (k, &f) in per_sampler.iter().enumerate() {
            assert!(f <= 1, "sampler {s} coordinate {k}: {f}/{reps} KS failures");
        }
    }
}

/// Componentwise block maxima (block size 10), raised to the block size,
/// follow the same copula: the re-estimated dependence function stays within
/// 0.03 of the exact one.
#[test]
fn maxlinear_output_is_max_stable() {
    let m = DiscreteSpectralMeasure::from_q_law(&evcopula::bc2_q_law(0.25, 0.75).unwrap()).unwrap();
    let exact = m.pickands_function().unwrap();
    let block = 10;
    let n_blocks = 100_000;
    let base = sample_maxlinear(&m, block * n_blocks, &RngStream::new(31, 0)).unwrap();
    let mut rows = Vec::with_capacity(n_blocks * 2);
    for b in 0..n_blocks {
        for k in 0..2 {
            let mut v: f64 = 0.0;
            for r in 0..block {
                v = v.max(base.get(b * block + r, k));
            }
            rows.push(v.powi(block as i32));
        }
    }
    let powered = SampleBatch::from_rows(2, rows, 31, 0, "block-maxima").unwrap();
    let est = estimate_pickands(&powered, 0, 1, &uniform_grid(9)).unwrap();
    let err = est.sup_error(|x| exact.eval(x));
    assert!(err <= 0.03, "sup error {err}");
}

/// Pairwise dependence estimates of an exchangeable batch coincide.
#[test]
fn condiid_batches_are_exchangeable() {
    let spec = CondIIDSpec::single(DiscreteUnitMeanDF::cuadras_auge(0.5).unwrap());
    let batch = sample_condiid(&spec, 3, 100_000, &RngStream::new(77, 0)).unwrap();
    let grid = uniform_grid(9);
    let estimates: Vec<_> = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(i, j)| estimate_pickands(&batch, i, j, &grid).unwrap())
        .collect();
    for a in 0..estimates.len() {
        for b in (a + 1)..estimates.len() {
            let sup = estimates[a]
                .clipped()
                .iter()
                .zip(estimates[b].clipped())
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max);
            assert!(sup <= 0.03, "pairs {a} and {b} disagree by {sup}");
        }
    }
}

/// The number of ratio clusters equals the number of distinct coordinate
/// ratios among atoms with both coordinates positive.
#[test]
fn singular_cluster_count_matches_atom_ratios() {
    let q = SimplexVector::new(vec![1.0 / 6.0, 1.0 / 3.0, 0.5]).unwrap();
    let figure = DiscreteSpectralMeasure::exchangeable_from_atoms(3, &[(q, 1.0)])
        .unwrap()
        .margin(2)
        .unwrap();
    let cases: Vec<(DiscreteSpectralMeasure, u64)> = vec![
        (DiscreteSpectralMeasure::comonotone(2), 41),
        (DiscreteSpectralMeasure::independence(2), 42),
        (
            DiscreteSpectralMeasure::from_q_law(&evcopula::bc2_q_law(0.25, 0.75).unwrap()).unwrap(),
            43,
        ),
        (figure, 44),
    ];
    for (measure, seed) in cases {
        let mut expected: Vec<f64> = measure
            .atoms()
            .iter()
            .filter(|a| a.point.get(0) > 0.0 && a.point.get(1) > 0.0)
            .map(|a| a.point.get(0) / a.point.get(1))
            .collect();
        expected.sort_by(f64::total_cmp);
        expected.dedup_by(|a, b| (*a - *b).abs() <= 1e-9);
        let batch = sample_maxlinear(&measure, 3000, &RngStream::new(seed, 0)).unwrap();
        let clusters = singular_paths(&batch, 0, 1).unwrap();
        assert_eq!(
            clusters.len(),
            expected.len(),
            "measure with {} atoms",
            measure.support_size()
        );
    }
}
