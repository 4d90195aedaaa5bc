//! Checks Z = Z+ on every connected claw-free labeled graph with up to
//! N vertices (default 6).

use zforce::enumerate_graphs;
use zforce::verifier::{run_corpus, CorpusMode, CorpusOptions};

fn main() -> zforce::Result<()> {
    let max_n: usize = std::env::args().nth(1).map_or(6, |a| a.parse().expect("N"));
    let graphs = (1..=max_n).flat_map(|n| enumerate_graphs(n, false).expect("n in range"));
    let summary = run_corpus(graphs.map(Ok), CorpusMode::Theorem, &CorpusOptions::default())?;
    println!(
        "{} graphs, {} connected claw-free checked, {} failures",
        summary.total, summary.checked, summary.failure_count
    );
    for f in &summary.failures {
        println!("  {f}");
    }
    Ok(())
}
