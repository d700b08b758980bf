//! The Cuadras-Auge family end to end: the unit-mean distribution behind
//! it, the induced law of Q, the dependence function, and why it passes the
//! extendibility check while the two-atom boundary family fails.
//!
//! ```bash
//! cargo run --example cuadras_auge
//! ```

use evcopula::{bc2_q_law, check_necessary_discrete, DiscreteUnitMeanDF, Result};

fn main() -> Result<()> {
    let theta = 0.5;
    let f = DiscreteUnitMeanDF::cuadras_auge(theta)?;
    println!("F atoms (location, mass): {:?}", f.atoms());

    let law = f.q_law();
    println!("\ninduced law of Q:");
    for (q, p) in law.atoms() {
        println!("  P(Q = {q}) = {p}");
    }

    let a = f.pickands_function()?;
    println!("\nA(x) = 1 - theta min(x, 1-x):");
    for x in [0.1, 0.25, 0.5] {
        println!(
            "  A({x}) = {}  (expected {})",
            a.eval(x),
            1.0 - theta * x.min(1.0 - x)
        );
    }

    let verdict = check_necessary_discrete(&law)?;
    println!(
        "\nnecessary condition on Q_F: pass = {} (tightest atom: {} <= {})",
        verdict.pass, verdict.lhs, verdict.rhs
    );

    // the symmetric two-atom function at q = 1/4 puts no mass at 1/2, so
    // the interior bound collapses and the check fails
    let boundary = bc2_q_law(0.25, 0.75)?;
    let verdict = check_necessary_discrete(&boundary)?;
    println!(
        "two-atom boundary law at q = 1/4: pass = {}, witness q = {:?} ({} > {})",
        verdict.pass, verdict.witness_q, verdict.lhs, verdict.rhs
    );
    Ok(())
}
