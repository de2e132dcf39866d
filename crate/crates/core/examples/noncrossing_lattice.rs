//! Non-crossing periodic partitions on the parity strip: meets, joins and refinement.

use ctilde::{PeriodicPartition, Strip};

fn main() -> ctilde::Result<()> {
    let strip = Strip::ctilde(2)?;
    let a = PeriodicPartition::parse("{1,3}", strip)?;
    let b = PeriodicPartition::parse("{2,3}", strip)?;
    let join = a.join(&b)?;
    let meet = a.meet(&b)?;
    println!("a = {a}\nb = {b}\na v b = {join}\na ^ b = {meet}");
    println!("a refines a v b: {}", a.refines(&join));
    println!("a v b is sigma-stable: {}", join.is_sigma_stable());
    Ok(())
}
