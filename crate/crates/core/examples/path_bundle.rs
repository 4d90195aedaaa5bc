//! Component history, path bundle and terminus for x = 7 on the
//! two-diamond graph.

use zforce::bundle::{build_bundle, component_history, terminus};
use zforce::fixtures::{labeled, two_diamonds};
use zforce::{Chronology, Force, Rule};

fn main() -> zforce::Result<()> {
    let g = two_diamonds();
    let f = |s: usize, t: usize| Force::new(s - 1, t - 1);
    let chron = Chronology::from_steps(
        &g,
        labeled(&[2, 4, 6]),
        Rule::Psd,
        vec![vec![f(4, 3), f(4, 5)], vec![f(3, 1), f(5, 7)], vec![f(6, 8)]],
    )?;
    let x = 7 - 1;

    let history = component_history(&g, &chron, x)?;
    for (t, c) in history.comps.iter().enumerate() {
        println!("C^{t} = {:?}", c.to_labels());
    }
    let bundle = build_bundle(&g, &chron, x)?;
    for p in &bundle.paths {
        let labels: Vec<usize> = p.iter().map(|v| v + 1).collect();
        println!("path {labels:?}");
    }
    let term = terminus(&chron, &bundle);
    println!("terminus {:?}", term.members.to_labels());
    Ok(())
}
