//! Run the dense Jacobi eigensolver on an explicit adjacency matrix and match
//! its output against the closed form.
//!
//! ```text
//! cargo run --release --example jacobi_oracle -- 40
//! ```

use andrasfai::oracle::default_threshold;
use andrasfai::{
    adjacency_matrix, andrasfai, cluster_distinct, compare_spectra, jacobi_eigenvalues, spectrum_closed_form,
    DenseMatrix, TOL_CLUSTER,
};

pub fn run_example() -> andrasfai::Result<()> {
    let k = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(12usize).max(1);
    let dense = adjacency_matrix(&andrasfai(k)?).to_dense();
    let oracle = jacobi_eigenvalues(&dense, default_threshold(dense.n()))?;
    println!(
        "And({k}): {} eigenvalues after {} sweeps, off-diagonal norm {:.2e}",
        oracle.n, oracle.iterations, oracle.off_diagonal_norm
    );

    let comparison = compare_spectra(&spectrum_closed_form(k)?, &oracle)?;
    println!("max deviation from closed form {:.2e}, matched: {}", comparison.max_abs_dev, comparison.matched);
    assert!(comparison.matched);

    for (value, count) in cluster_distinct(&oracle.sorted_values, TOL_CLUSTER) {
        println!("  {value:>12.8} x{count}");
    }

    // The solver is generic: any symmetric matrix will do.
    let m = DenseMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]])?;
    assert_eq!(jacobi_eigenvalues(&m, 1e-12)?.sorted_values, vec![1.0, 3.0]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> andrasfai::Result<()> {
    run_example()
}
