//! Absolutely continuous unit-mean distributions: dependence-function
//! values by adaptive quadrature, the density of Q, and the continuous
//! necessary-condition check. The unit exponential makes everything
//! closed-form: A_F(x) = 1 - x(1-x) and Q_F is uniform.
//!
//! ```bash
//! cargo run --example exponential_family
//! ```

use evcopula::{check_necessary_continuous, ContinuousUnitMeanDF, Result};

fn main() -> Result<()> {
    let f = ContinuousUnitMeanDF::unit_exponential();

    println!("x      A_F(x)              1 - x(1-x)");
    for x in [0.1, 0.25, 1.0 / 3.0, 0.5] {
        let v = f.pickands_value(x)?;
        println!("{x:<6} {v:<19.12} {}", 1.0 - x * (1.0 - x));
    }

    println!("\nq      f_Q(q)   (uniform: 1)");
    let mut samples = Vec::new();
    for i in 1..=19 {
        let q = i as f64 / 20.0;
        let v = f.q_density(q)?;
        samples.push((q, v));
        if i % 4 == 0 || i == 10 {
            println!("{q:<6} {v:.9}");
        }
    }

    let verdict = check_necessary_continuous(&samples)?;
    println!(
        "\ncontinuous necessary condition on {} grid points: pass = {}",
        verdict.grid_points, verdict.pass
    );
    println!(
        "implied lower bound on f_Q(1/2): {:.9} (equality for the uniform density)",
        verdict.implied_half_density_lower_bound
    );
    Ok(())
}
