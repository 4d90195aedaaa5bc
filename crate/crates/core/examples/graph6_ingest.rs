//! Reads graph6 lines from stdin (or a built-in sample) and reports forcing
//! numbers and claws for each.

use std::io::Read;

use zforce::graph6::parse_graph6_lines;
use zforce::solver::forcing_number;
use zforce::{to_graph6, Rule};

const SAMPLE: &str = "C~\nCF\nDhc\nG?bBf_\n";

fn main() -> zforce::Result<()> {
    let mut text = String::new();
    if std::env::args().any(|a| a == "-") {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| zforce::Error::Io(e.to_string()))?;
    } else {
        text = SAMPLE.to_string();
    }
    for g in parse_graph6_lines(&text) {
        let g = g?;
        let z = forcing_number(&g, Rule::Standard)?.value;
        let zp = forcing_number(&g, Rule::Psd)?.value;
        println!(
            "{:<10} n={} m={} Z={z} Z+={zp} claws={}",
            to_graph6(&g),
            g.n(),
            g.edge_count(),
            g.find_claws().len()
        );
    }
    Ok(())
}
