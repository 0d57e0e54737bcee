//! Export And(k) as DOT, an edge list and JSON, and read the latter two back.
//!
//! ```text
//! cargo run --example export_formats -- 3 > and3.dot
//! ```

use andrasfai::export::parse_graph_json;
use andrasfai::spectrum_io;
use andrasfai::{andrasfai, export_graph, parse_edge_list, spectrum_closed_form, CirculantGraph, GraphFormat};

pub fn run_example() -> andrasfai::Result<()> {
    let k = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3usize).max(1);
    let graph = andrasfai(k)?;

    print!("{}", export_graph(&graph, GraphFormat::Dot));

    let edge_list = export_graph(&graph, GraphFormat::EdgeList);
    let rebuilt = CirculantGraph::from_edges(graph.n(), &parse_edge_list(&edge_list)?)?;
    assert_eq!(rebuilt.connection(), graph.connection());

    let json = export_graph(&graph, GraphFormat::Json);
    assert_eq!(parse_graph_json(&json)?.connection(), graph.connection());

    // Spectra serialize too; a second pass through JSON is byte-identical.
    let spectrum_json = spectrum_io::to_json(&spectrum_closed_form(k)?)?;
    assert_eq!(spectrum_io::to_json(&spectrum_io::from_json(&spectrum_json)?)?, spectrum_json);
    eprintln!("{} edges, {} bytes of spectrum JSON", graph.edge_count(), spectrum_json.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> andrasfai::Result<()> {
    run_example()
}
