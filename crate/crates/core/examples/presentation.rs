//! Dual relations among atoms in a window, and braid relations recovered from them.

use ctilde::Garside;

fn main() -> ctilde::Result<()> {
    let g = Garside::new(2)?;
    let p = g.emit_presentation(1)?;
    println!(
        "{} generators, {} relations (window {}, truncated {})",
        p.generators.len(),
        p.relations.len(),
        p.window,
        p.truncated
    );
    for r in p.relations.iter().take(10) {
        println!("  {r}");
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        println!("braid length of s{i}, s{j}: {}", g.braid_length(i, j));
    }
    Ok(())
}
