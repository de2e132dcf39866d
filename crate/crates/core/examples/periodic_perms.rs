//! Arithmetic of periodic permutations: parsing, composition, cycles and the Coxeter element.

use ctilde::{coxeter_element, PeriodicPermutation};

fn main() -> ctilde::Result<()> {
    let n = 3;
    let c = coxeter_element(n)?;
    println!("c = {}  window {:?}", c.cycles(), c.images());
    println!("c^2 = {}", c.pow(2).cycles());

    let w = PeriodicPermutation::parse("(1,3)(0,-2)", 2 * n)?;
    println!("w = {}  sigma(w) = {}", w.cycles(), w.sigma()?.cycles());
    let cw = w.compose(&c)?;
    println!("w.c = {}  shift {}", cw.cycles(), cw.total_shift());
    println!("(w.c)^-1 = {}", cw.inverse().cycles());
    Ok(())
}
