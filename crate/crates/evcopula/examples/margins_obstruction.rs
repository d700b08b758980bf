//! Lower-dimensional margins of exchangeable spectral measures, and the
//! support-counting argument showing extremal measures with a
//! distinct-positive-entry atom never arise as margins.
//!
//! ```bash
//! cargo run --example margins_obstruction
//! ```

use evcopula::{DiscreteSpectralMeasure, Result, SimplexVector};

fn main() -> Result<()> {
    let point = SimplexVector::new(vec![1.0 / 6.0, 1.0 / 3.0, 0.5])?;
    let m = DiscreteSpectralMeasure::exchangeable_from_atoms(3, &[(point, 1.0)])?;
    println!(
        "three-dimensional extremal measure: {} atoms",
        m.support_size()
    );

    let margin = m.margin(2)?;
    println!("\nbivariate margin atoms (first coordinate, mass):");
    for atom in margin.atoms() {
        println!("  ({:.6}, {:.6})", atom.point.get(0), atom.mass);
    }

    // margin consistency: evaluating the margin equals padding with zeros
    let via_margin = margin.stdf(&[1.0, 1.0])?;
    let via_padding = m.stdf(&[1.0, 1.0, 0.0])?;
    println!("\nl_margin(1,1) = {via_margin}");
    println!("l_full(1,1,0) = {via_padding}");

    // a bivariate extremal measure has at most 2 atoms; this margin has 6,
    // so the bivariate boundary cannot embed into dimension three
    let report = m.obstruction_check(2)?;
    println!(
        "\nobstruction: margin support {} > {} = 2! (distinct-positive atom present: {})",
        report.margin_support, report.bound, report.has_distinct_positive_atom
    );

    // cyclic rotations of one atom give a valid but non-exchangeable
    // measure; symmetrization spreads it over the full orbit
    let third = 1.0 / 3.0;
    let lopsided = DiscreteSpectralMeasure::new(
        3,
        vec![
            (SimplexVector::new(vec![0.6, 0.3, 0.1])?, third),
            (SimplexVector::new(vec![0.1, 0.6, 0.3])?, third),
            (SimplexVector::new(vec![0.3, 0.1, 0.6])?, third),
        ],
        false,
    )?;
    let spread = lopsided.symmetrize()?;
    println!(
        "\nsymmetrize: {} atoms -> {} atoms, symmetric = {}",
        lopsided.support_size(),
        spread.support_size(),
        spread.is_symmetric()
    );
    Ok(())
}
