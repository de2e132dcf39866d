//! SVG strip diagrams of periodic permutations.

use ctilde::{PeriodicPermutation, Strip, StripDiagram};

fn main() -> ctilde::Result<()> {
    let strip = Strip::new(9, &[5, 6, 7, 8, 9])?;
    let w = PeriodicPermutation::parse("(5,7,8,3,2)", 9)?;
    let d = StripDiagram::new(&strip, &w, 2);
    println!("<!-- {} paths, {} crossings -->", d.orbit_count(), d.crossings().len());
    print!("{}", d.to_svg());
    Ok(())
}
