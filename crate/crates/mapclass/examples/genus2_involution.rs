//! The 64-dimensional representation of the genus-2 mapping class group and
//! the hyperelliptic involution.
//!
//! ```bash
//! cargo run -p mapclass --example genus2_involution
//! ```

use mapclass::genus2::Genus2Rep;
use mapclass::word::{Context, Word};

fn main() -> mapclass::Result<()> {
    let rep = Genus2Rep::new()?;
    println!("rho = K_6 (+) H acts in dimension {}.\n", rep.dim());

    let iota = Genus2Rep::involution_word();
    println!("iota = {iota}");
    let (sphere_part, symplectic_part) = rep.eval_parts(&iota)?;
    println!("K_6 part of rho(iota) is the identity:   {}", sphere_part.is_identity());
    println!("H part of rho(iota):\n{symplectic_part}");

    let m = rep.eval(&iota)?;
    println!("rho(iota) = I:    {}", m.is_identity());
    println!("rho(iota)^2 = I:  {}", m.try_mul(&m)?.is_identity());

    let chain = Word::parse("t1 t2 t3 t4 t5", Context::Genus2)?;
    println!("rho((t1..t5)^6) = I: {}", rep.eval(&chain.repeat(6))?.is_identity());
    Ok(())
}
