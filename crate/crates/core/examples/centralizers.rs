//! Divisors of c fixed by conjugation with c^h form a germ of type C.

use ctilde::centralizer::verify_centralizer_type;

fn main() -> ctilde::Result<()> {
    for (h, n) in [(2, 2), (3, 3), (2, 4), (1, 3)] {
        let r = verify_centralizer_type(h, n, 1)?;
        println!(
            "n = {n}, h = {h}: type C{}, fixed divisors {}, type C divisors {}, isomorphic {}",
            r.expected_rank, r.fixed.divisors, r.type_c.divisors, r.lattice_isomorphic
        );
    }
    Ok(())
}
