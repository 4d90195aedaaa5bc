//! Compares Z = Z+ over all induced subgraphs with claw-freeness, and shows
//! the mirror check on a claw-free graph.

use zforce::reconnection::connected_complement_set;
use zforce::verifier::{is_zz_perfect_direct, mirror_check};
use zforce::Graph;

fn main() -> zforce::Result<()> {
    let graphs = [
        ("K1,3", Graph::star(3)?),
        ("C5", Graph::cycle(5)?),
        (
            "diamond",
            Graph::from_labeled_edges(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])?,
        ),
        ("P2 + K1,3", Graph::path(2)?.disjoint_union(&Graph::star(3)?)?),
    ];
    for (name, g) in &graphs {
        println!(
            "{name:<14} claw-free {:<5} perfect {}",
            g.is_claw_free(),
            is_zz_perfect_direct(g)?
        );
    }

    let g = zforce::fixtures::two_diamonds();
    let s = connected_complement_set(&g)?;
    let report = mirror_check(&g, s)?;
    println!("mirror from {:?}: passed {}", s.to_labels(), report.passed);
    for st in &report.steps {
        println!(
            "  step {} white {:?} ({} component) {}->{} standard-valid {}",
            st.step,
            st.white.to_labels(),
            st.white_components,
            st.force.source + 1,
            st.force.target + 1,
            st.standard_valid
        );
    }
    Ok(())
}
