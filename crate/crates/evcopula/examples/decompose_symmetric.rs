//! Decompose a symmetric dependence function into its unique mixture of
//! symmetric two-atom functions and rebuild it.
//!
//! ```bash
//! cargo run --example decompose_symmetric
//! ```

use evcopula::{QLaw, Result};

fn main() -> Result<()> {
    // the Cuadras-Auge function at theta = 1/2 through its law of Q
    let theta = 0.5;
    let law = QLaw::new(vec![
        (0.0, (1.0 - theta) / 2.0),
        (0.5, theta),
        (1.0, (1.0 - theta) / 2.0),
    ])?;
    let a = law.pickands_function()?;
    println!("A(x) = 1 - {theta} min(x, 1-x)");
    println!("kinks {:?}, values {:?}", a.kinks(), a.values());

    let nu = a.decompose()?;
    println!("\nmixing measure over the symmetric two-atom family:");
    for (q, mass) in nu.atoms() {
        println!("  weight {mass:.4} on the pair ({q}, {})", 1.0 - q);
    }

    let rebuilt = nu.recompose()?;
    let mut max_diff = 0.0f64;
    for i in 0..=1000 {
        let x = i as f64 / 1000.0;
        max_diff = max_diff.max((a.eval(x) - rebuilt.eval(x)).abs());
    }
    println!("\nrecomposition max error: {max_diff:.3e}");

    // recovering the law of Q from the function closes the other loop
    let recovered = rebuilt.q_law()?;
    println!("recovered law of Q: {:?}", recovered.atoms());
    Ok(())
}
