//! The extendibility diagnostics as a screening workflow: given a symmetric
//! dependence function, recover its law of Q and test the necessary
//! condition that interior mass is dominated by the mass at 1/2.
//!
//! ```bash
//! cargo run --example extendibility_check
//! ```

use evcopula::{bc2, check_necessary_discrete, QLaw, Result};

fn main() -> Result<()> {
    // a gallery of symmetric dependence functions
    let cases: Vec<(&str, QLaw)> = vec![
        ("comonotone", QLaw::new(vec![(0.5, 1.0)])?),
        ("independence", QLaw::new(vec![(0.0, 0.5), (1.0, 0.5)])?),
        (
            "Cuadras-Auge theta=0.75",
            QLaw::new(vec![(0.0, 0.125), (0.5, 0.75), (1.0, 0.125)])?,
        ),
        ("two-atom boundary q=0.25", bc2(0.25, 0.75)?.q_law()?),
        (
            "thin center",
            QLaw::new(vec![(0.3, 0.45), (0.5, 0.1), (0.7, 0.45)])?,
        ),
    ];

    for (name, law) in cases {
        let a = law.pickands_function()?;
        let verdict = check_necessary_discrete(&a.q_law()?)?;
        print!("{name:<28} A(1/2) = {:.4}  ->  ", a.eval(0.5));
        if verdict.pass {
            println!("PASS (tightest: {:.4} <= {:.4})", verdict.lhs, verdict.rhs);
        } else {
            println!(
                "FAIL at q = {} ({:.4} > {:.4})",
                verdict.witness_q.unwrap(),
                verdict.lhs,
                verdict.rhs
            );
        }
    }
    println!("\nFAIL means: no exchangeable extension to every higher dimension exists.");
    Ok(())
}
