//! Exhaustive Max-Cut search on a few small graphs.
//!
//! Scores all 2^n colorings and prints every optimal one. The argmax set
//! always comes in complement pairs: flipping all colors cuts the same
//! edges.
//!
//! Run with: cargo run --example brute_force

use qaoa_maxcut::Graph;

fn main() -> Result<(), qaoa_maxcut::Error> {
    let graphs = [
        ("ring of 4", Graph::from_edge_list(include_str!("../graphs/c4.txt"))?),
        ("star of 5", Graph::from_edge_list(include_str!("../graphs/star5.txt"))?),
        ("petersen", Graph::from_edge_list(include_str!("../graphs/petersen.txt"))?),
        ("triangle", Graph::new(3, vec![(0, 1), (1, 2), (2, 0)])?),
    ];

    for (name, graph) in graphs {
        let (max_score, argmax) = graph.brute_force_max()?;
        println!(
            "{name}: {} vertices, {} edges, max cut {max_score}",
            graph.n_vertices(),
            graph.n_edges()
        );
        let rendered: Vec<String> = argmax.iter().map(|b| b.to_string()).collect();
        if rendered.len() <= 8 {
            println!("  optimal colorings: {}", rendered.join(" "));
        } else {
            println!("  {} optimal colorings, first: {}", rendered.len(), rendered[0]);
        }
    }
    Ok(())
}
