//! The 7-dimensional degeneration graph as DOT.

use dualmock::shell::cli::graph;
use dualmock::shell::graphio::emit_dot;

pub fn main() {
    let g = graph(7).unwrap();
    print!("{}", emit_dot(&g));
    println!("// rigid candidates: {}", g.rigid_candidates().join(", "));
}
