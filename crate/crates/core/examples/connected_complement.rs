//! Rebalances a minimum psd forcing set until its complement is connected,
//! printing every improvement step.

use zforce::reconnection::connected_complement_trace;
use zforce::Graph;

fn main() -> zforce::Result<()> {
    // spider with three legs of length two; the solver picks the center
    let g = Graph::from_labeled_edges(7, &[(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)])?;
    let trace = connected_complement_trace(&g)?;
    println!("start  {:?}", trace.start.to_labels());
    for st in &trace.steps {
        println!(
            "  C={:?} x={} t={} w*={} -> S'={:?} C'={:?}",
            st.c.to_labels(),
            st.x + 1,
            st.t,
            st.w_star + 1,
            st.s_prime.to_labels(),
            st.c_prime.to_labels()
        );
    }
    println!("result {:?}", trace.result.to_labels());
    println!(
        "complement connected: {}",
        g.is_connected_on(trace.result.complement(g.n()))
    );
    Ok(())
}
