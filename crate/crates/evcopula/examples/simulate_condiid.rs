//! Event-driven sampling of a conditionally-iid model and the cross-check
//! against the max-linear sampler applied to the same model re-expressed as
//! a spectral measure.
//!
//! ```bash
//! cargo run --release --example simulate_condiid
//! ```

use evcopula::{
    estimate_pickands, sample_condiid, sample_maxlinear, uniform_grid, CondIIDSpec,
    DiscreteUnitMeanDF, Result, RngStream,
};

fn main() -> Result<()> {
    let theta = 0.5;
    let spec = CondIIDSpec::new(0.2, vec![(1.0, DiscreteUnitMeanDF::cuadras_auge(theta)?)])?;
    println!("model: drift b = {}, one mixture component", spec.drift());

    let n = 100_000;
    let d = 2;
    let event_driven = sample_condiid(&spec, d, n, &RngStream::new(7, 0))?;

    let spectral = spec.spectral_measure(d)?;
    let max_linear = sample_maxlinear(&spectral, n, &RngStream::new(7, 1))?;

    let exact = spec.pickands_function()?;
    let grid = uniform_grid(9);
    let est_event = estimate_pickands(&event_driven, 0, 1, &grid)?;
    let est_max = estimate_pickands(&max_linear, 0, 1, &grid)?;

    println!("\nx     exact A    first-passage  max-linear");
    for (((x, a), e1), e2) in grid
        .iter()
        .map(|&x| (x, exact.eval(x)))
        .zip(est_event.clipped())
        .zip(est_max.clipped())
    {
        println!("{x:<5} {a:<10.6} {e1:<14.6} {e2:.6}");
    }
    println!(
        "\nsup errors: first-passage {:.5}, max-linear {:.5}",
        est_event.sup_error(|x| exact.eval(x)),
        est_max.sup_error(|x| exact.eval(x)),
    );

    // exchangeability in dimension five: every pair estimates the same A
    let batch5 = sample_condiid(&spec, 5, n, &RngStream::new(8, 0))?;
    let mut worst = 0.0f64;
    for i in 0..5 {
        for j in (i + 1)..5 {
            let est = estimate_pickands(&batch5, i, j, &grid)?;
            worst = worst.max(est.sup_error(|x| exact.eval(x)));
        }
    }
    println!("worst pairwise sup error at d = 5: {worst:.5}");
    Ok(())
}
