//! Group the closed-form eigenvalues into multiplicity classes and compare
//! them with the index-level predictions.
//!
//! ```text
//! cargo run --example multiplicities -- 7
//! ```

use andrasfai::{pair_multiplicities, predict, spectrum_closed_form};

pub fn run_example() -> andrasfai::Result<()> {
    let k = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7usize).max(2);
    let spectrum = spectrum_closed_form(k)?;
    let table = pair_multiplicities(&spectrum);
    let prediction = predict(k)?;

    println!("And({k}), n = {}", spectrum.n);
    for class in &table.classes {
        println!("  {:>12.8}  x{}  at {:?}", class.value, class.multiplicity, class.members);
    }
    println!("distinct: {} (predicted {})", table.distinct_count(), prediction.distinct_count);
    println!(
        "smallest at {:?}, second largest at {:?}",
        prediction.smallest_indices, prediction.second_largest_indices
    );
    if let Some(l) = prediction.minus_one_witness {
        println!("-1 at l = {l}");
    }
    if let Some((a, b)) = prediction.plus_one_indices() {
        println!("+1 at l = {a} and l = {b}");
    }

    assert_eq!(table.distinct_count(), prediction.distinct_count);
    assert_eq!(table.accidental_coincidences(), 0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> andrasfai::Result<()> {
    run_example()
}
