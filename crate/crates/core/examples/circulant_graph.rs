//! Build And(k) and a hand-picked circulant, then look at their structure.
//!
//! ```text
//! cargo run --example circulant_graph
//! ```

use andrasfai::{adjacency_matrix, andrasfai, build_circulant, CirculantGraph};

fn describe(name: &str, g: &CirculantGraph) {
    println!(
        "{name}: n = {}, S = {:?}, degree {}, {} edges, connected: {}",
        g.n(),
        g.connection().members(),
        g.degree(),
        g.edge_count(),
        g.is_connected()
    );
}

pub fn run_example() -> andrasfai::Result<()> {
    let and4 = andrasfai(4)?;
    describe("And(4)", &and4);

    let matrix = adjacency_matrix(&and4);
    for row in 0..matrix.n() {
        let line: String = matrix.row(row).iter().map(|&b| if b == 1 { '1' } else { '.' }).collect();
        println!("  {line}");
    }
    assert!(matrix.is_symmetric());
    assert!(matrix.row_sums().iter().all(|&d| d == 4));

    // Any negation-closed subset of Z_n works; {1, 4} in Z_5 is the 5-cycle.
    let c5 = build_circulant(5, &[1, 4])?;
    describe("C_5", &c5);
    assert_eq!(c5.connection(), andrasfai(2)?.connection());

    // {1} alone is not closed under negation mod 5.
    assert!(build_circulant(5, &[1]).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> andrasfai::Result<()> {
    run_example()
}
