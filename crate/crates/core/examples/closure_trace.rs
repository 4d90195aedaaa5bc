//! Greedy psd closure and the lexicographic chronological list on the
//! two-diamond graph, starting from {2, 4, 6}.

use zforce::fixtures::{labeled, two_diamonds};
use zforce::{chronological_list, closure, OrderPolicy, Rule};

fn main() -> zforce::Result<()> {
    let g = two_diamonds();
    let b = labeled(&[2, 4, 6]);

    let (chron, exp) = closure(&g, b, Rule::Psd);
    println!("greedy closure, tau = {}", chron.tau());
    for (t, step) in chron.steps.iter().enumerate() {
        let forces: Vec<String> = step
            .iter()
            .map(|f| format!("{}->{}", f.source + 1, f.target + 1))
            .collect();
        println!(
            "  F{} = {{{}}}  E{} = {:?}",
            t + 1,
            forces.join(", "),
            t + 1,
            exp.states[t + 1].to_labels()
        );
    }

    let list = chronological_list(&g, b, Rule::Psd, &OrderPolicy::Lex)?;
    println!("lex chronological list, {} steps", list.tau());
    for (t, f) in list.forces() {
        println!("  {t}: {}->{}", f.source + 1, f.target + 1);
    }
    Ok(())
}
