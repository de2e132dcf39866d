//! Hurwitz action on reduced reflection decompositions of c.

use ctilde::{Garside, Hurwitz};

fn main() -> ctilde::Result<()> {
    let hz = Hurwitz::new(2)?;
    let g = Garside::new(2)?;
    let start = hz.tuple(vec![g.generator_reflection(0)?, g.generator_reflection(2)?, g.generator_reflection(1)?]);
    let moved = hz.hurwitz_move(&start, 1, 1)?;
    println!("start  {:?}", start.entries.iter().map(|r| r.to_string()).collect::<Vec<_>>());
    println!("move 1 {:?}", moved.entries.iter().map(|r| r.to_string()).collect::<Vec<_>>());

    let c = hz.germ().coxeter();
    let decs = hz.reduced_decompositions(&c, 1)?;
    let orbit = hz.orbit_in_window(&start, 3, 100_000);
    let covered = decs.tuples.is_subset(&orbit.tuples);
    println!(
        "{} decompositions of c in window 1; orbit within window 3 has {} tuples, covers them: {covered}",
        decs.tuples.len(),
        orbit.tuples.len()
    );
    Ok(())
}
