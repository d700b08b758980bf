//! The two-atom family is the extremal boundary of the bivariate
//! dependence functions, but mixtures over it are not unique: two different
//! boundary combinations produce the same function. Restricted to the
//! symmetric family the mixing measure becomes unique.
//!
//! ```bash
//! cargo run --example bc2_beran
//! ```

use evcopula::{bc2, bc2_q_law, QLaw, Result};

fn main() -> Result<()> {
    let lhs1 = bc2(0.0, 1.0)?;
    let lhs2 = bc2(1.0 / 3.0, 2.0 / 3.0)?;
    let rhs1 = bc2(0.0, 2.0 / 3.0)?;
    let rhs2 = bc2(1.0 / 3.0, 1.0)?;

    let mut max_diff = 0.0f64;
    for i in 0..=1000 {
        let x = i as f64 / 1000.0;
        let lhs = 0.25 * lhs1.eval(x) + 0.75 * lhs2.eval(x);
        let rhs = 0.5 * rhs1.eval(x) + 0.5 * rhs2.eval(x);
        max_diff = max_diff.max((lhs - rhs).abs());
    }
    println!("1/4 A(0,1) + 3/4 A(1/3,2/3)  vs  1/2 A(0,2/3) + 1/2 A(1/3,1)");
    println!("max pointwise difference over 1001 points: {max_diff:.3e}");
    println!("boundary representations: {{(0,1): 1/4, (1/3,2/3): 3/4}} != {{(0,2/3): 1/2, (1/3,1): 1/2}}");

    // the common function is symmetric, and its mixing measure over the
    // symmetric two-atom family is one and the same
    let mix = |pairs: &[((f64, f64), f64)]| -> Result<QLaw> {
        let mut atoms = Vec::new();
        for &((a, b), w) in pairs {
            for &(q, p) in bc2_q_law(a, b)?.atoms() {
                atoms.push((q, w * p));
            }
        }
        QLaw::new(atoms)
    };
    let left = mix(&[((0.0, 1.0), 0.25), ((1.0 / 3.0, 2.0 / 3.0), 0.75)])?;
    let right = mix(&[((0.0, 2.0 / 3.0), 0.5), ((1.0 / 3.0, 1.0), 0.5)])?;
    let nu_left = left.pickands_function()?.decompose()?;
    let nu_right = right.pickands_function()?.decompose()?;
    println!(
        "\nunique symmetric decomposition from the left mixture:  {:?}",
        nu_left.atoms()
    );
    println!(
        "unique symmetric decomposition from the right mixture: {:?}",
        nu_right.atoms()
    );
    println!("identical: {}", nu_left.approx_eq(&nu_right));
    Ok(())
}
