//! The germ of divisors of c: enumeration, lengths, lcm and gcd.

use ctilde::Germ;

fn main() -> ctilde::Result<()> {
    let germ = Germ::ctilde(2)?;
    let all = germ.enumerate_sigma(1);
    println!("{} sigma-stable divisors of c in window 1 (n = 2)", all.len());
    for x in all.iter().take(8) {
        println!("  {x}  l_A = {}  f = {}", x.length_a(), germ.reflection_length_c(x)?);
    }
    let x = germ.parse("(2,3)")?;
    let y = germ.parse("(1,2)(3,4)")?;
    println!("lcm({x}, {y}) = {}", germ.lcm(&x, &y)?);
    println!("gcd({x}, {y}) = {}", germ.gcd(&x, &y)?);
    println!("right complement of {x}: {}", germ.right_complement(&x)?);
    Ok(())
}
