//! Garside normal forms decide equality of braid words.

use ctilde::{Garside, Word};

fn main() -> ctilde::Result<()> {
    let g = Garside::new(2)?;
    for s in ["s0 s2 s1", "s0 s2 s1 s1", "s1^-1 s0 s2 s1 s1", ""] {
        println!("{s:>20}  ->  {}", g.normalize(&Word::parse(s)?)?);
    }
    let left = Word::parse("s0 s1 s0 s1")?;
    let right = Word::parse("s1 s0 s1 s0")?;
    println!("{left} == {right}: {}", g.equals(&left, &right)?);
    let short = (Word::parse("s0 s1 s0")?, Word::parse("s1 s0 s1")?);
    println!("{} == {}: {}", short.0, short.1, g.equals(&short.0, &short.1)?);
    Ok(())
}
