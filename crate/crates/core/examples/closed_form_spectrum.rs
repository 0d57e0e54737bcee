//! Evaluate the cosine closed form for And(k) and cross-check it against the
//! general circulant formula applied to the first adjacency row.
//!
//! ```text
//! cargo run --example closed_form_spectrum -- 7
//! ```

use andrasfai::spectrum_io::to_table;
use andrasfai::{andrasfai, eigenvalue_closed_form, spectrum_closed_form, spectrum_general_circulant};

fn k_from_args() -> usize {
    std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5)
}

pub fn run_example() -> andrasfai::Result<()> {
    run_for(k_from_args().max(1))
}

fn run_for(k: usize) -> andrasfai::Result<()> {
    let spectrum = spectrum_closed_form(k)?;
    print!("{}", to_table(&spectrum));

    let general = spectrum_general_circulant(&andrasfai(k)?.first_row())?;
    let dev = spectrum.values.iter().zip(&general.values).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    println!("max |parity-split - general circulant| = {dev:.2e}");
    assert!(dev < andrasfai::TOL_SYM);

    println!("palindrome defect {:.2e}, trace {:.2e}", spectrum.palindrome_defect(), spectrum.trace());
    println!("sum of squares {:.6} (n*k = {})", spectrum.sum_of_squares(), spectrum.n * k);

    // Single eigenvalues are available without building the whole list.
    assert_eq!(eigenvalue_closed_form(k, 0)?, k as f64);
    Ok(())
}

#[allow(dead_code)]
fn main() -> andrasfai::Result<()> {
    run_example()
}
