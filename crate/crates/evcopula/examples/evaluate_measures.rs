//! Build discrete spectral measures and evaluate their stable tail
//! dependence function, copula, and bivariate dependence function.
//!
//! ```bash
//! cargo run --example evaluate_measures
//! ```

use evcopula::{DiscreteSpectralMeasure, EquivClass, Result, SimplexVector};

fn main() -> Result<()> {
    let comonotone = DiscreteSpectralMeasure::comonotone(2);
    let independence = DiscreteSpectralMeasure::independence(2);
    println!(
        "l(0.3, 0.8) comonotone    = {}",
        comonotone.stdf(&[0.3, 0.8])?
    );
    println!(
        "l(0.3, 0.8) independence  = {}",
        independence.stdf(&[0.3, 0.8])?
    );
    println!(
        "C(0.5, 0.8) comonotone    = {}",
        comonotone.copula(&[0.5, 0.8])?
    );
    println!(
        "C(0.5, 0.8) independence  = {}",
        independence.copula(&[0.5, 0.8])?
    );

    // an exchangeable three-dimensional measure spread from one atom
    let point = SimplexVector::new(vec![1.0 / 6.0, 1.0 / 3.0, 0.5])?;
    let class = EquivClass::new(point);
    let extremal = DiscreteSpectralMeasure::extremal(&class)?;
    println!(
        "\nextremal measure of [(1/6, 1/3, 1/2)]: {} atoms, symmetric = {}",
        extremal.support_size(),
        extremal.is_symmetric()
    );
    println!("l(1, 1, 1) = {}", extremal.stdf(&[1.0, 1.0, 1.0])?);
    println!("C(0.9, 0.9, 0.9) = {}", extremal.copula(&[0.9, 0.9, 0.9])?);

    // the exact dependence function of a bivariate measure is piecewise
    // linear with kinks where the maximizing atom changes
    let a = extremal.margin(2)?.pickands_function()?;
    println!("\nbivariate margin dependence function:");
    println!("  kinks  {:?}", a.kinks());
    println!("  values {:?}", a.values());
    println!("  A(1/2) = {}", a.eval(0.5));
    Ok(())
}
