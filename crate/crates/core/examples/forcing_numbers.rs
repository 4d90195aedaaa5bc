//! Standard and psd forcing numbers for a few familiar families.

use zforce::solver::forcing_number;
use zforce::{Graph, Rule};

fn main() -> zforce::Result<()> {
    let graphs = [
        ("P6", Graph::path(6)?),
        ("C6", Graph::cycle(6)?),
        ("K5", Graph::complete(5)?),
        ("K1,3", Graph::star(3)?),
        ("K1,5", Graph::star(5)?),
        ("two diamonds", zforce::fixtures::two_diamonds()),
    ];
    println!("{:<14} {:>3} {:>3}  witnesses", "graph", "Z", "Z+");
    for (name, g) in graphs {
        let z = forcing_number(&g, Rule::Standard)?;
        let zp = forcing_number(&g, Rule::Psd)?;
        println!(
            "{name:<14} {:>3} {:>3}  {:?} {:?}",
            z.value,
            zp.value,
            z.witness.to_labels(),
            zp.witness.to_labels()
        );
    }
    Ok(())
}
