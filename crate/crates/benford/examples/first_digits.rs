//! Extracting first significant digits and tallying them.
//!
//! ```bash
//! cargo run -p benford --example first_digits
//! ```

use benford::{first_digit, tally_ints, Digit};

fn main() -> Result<(), benford::Error> {
    // Citation counts of three well-cited articles: 118 starts with 1,
    // 234 with 2, 342 with 3.
    for count in [118.0, 234.0, 342.0] {
        let digit = first_digit(count, 10)?;
        println!("first digit of {count:>5} is {digit}");
    }

    // The digit is about position, not magnitude: scaling by powers of the
    // base never changes it.
    let x = 0.0345;
    println!(
        "\nfirst digit of {x} is {} (same as {} and {})",
        first_digit(x, 10)?,
        first_digit(x * 100.0, 10)?,
        first_digit(x * 1e6, 10)?,
    );

    // Any base from 2 to 36 works; digits above 9 print as letters.
    println!(
        "255 in base 16 starts with '{}' (0xff)",
        first_digit(255.0, 16)?
    );

    // Tallying a record set produces the observed digit distribution.
    let records: Vec<u64> = (1..=2000).map(|k| k * k).collect();
    let distribution = tally_ints(records.iter().copied(), 10)?;
    println!(
        "\nfirst digits of the squares 1..2000^2 (N = {}):",
        distribution.n()
    );
    let proportions = distribution.proportions();
    for (i, digit) in distribution.digits().enumerate() {
        let bar = "#".repeat((proportions[i] * 120.0).round() as usize);
        println!("  {digit}: {:>5}  {bar}", distribution.counts()[i]);
    }
    let _ = Digit::new(9, 10)?;
    Ok(())
}
