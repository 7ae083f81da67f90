//! The three digit-probability models side by side.
//!
//! ```bash
//! cargo run -p benford --example digit_models
//! ```

use benford::DigitLawModel;

fn main() -> Result<(), benford::Error> {
    let classical = DigitLawModel::classical(10)?;
    let uniform = DigitLawModel::uniform(10)?;
    let zipfish = DigitLawModel::generalized(10, 2.0)?;
    let near_one = DigitLawModel::generalized(10, 1.000001)?;

    println!("digit   Benford   uniform   beta=2.0   beta~1");
    let (b, u, z, n1) = (
        classical.probabilities(),
        uniform.probabilities(),
        zipfish.probabilities(),
        near_one.probabilities(),
    );
    for d in 0..9 {
        println!(
            "{:>5}     {:.3}     {:.3}      {:.3}    {:.3}",
            d + 1,
            b[d],
            u[d],
            z[d],
            n1[d]
        );
    }

    println!(
        "\nsums: {:.12} / {:.12} / {:.12}",
        b.iter().sum::<f64>(),
        u.iter().sum::<f64>(),
        z.iter().sum::<f64>()
    );
    println!(
        "beta -> 1 recovers the classical law: max |diff| = {:.2e}",
        b.iter()
            .zip(&n1)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0f64, f64::max)
    );

    // The same law in another base.
    let hex = DigitLawModel::classical(16)?;
    println!(
        "\nclassical base 16: P(1) = {:.3}, P(f) = {:.3}",
        hex.probabilities()[0],
        hex.probabilities()[14]
    );
    Ok(())
}
