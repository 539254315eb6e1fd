//! Build Lawrence-Krammer generator matrices and check a braid relation.
//!
//! ```bash
//! cargo run -p mapclass --example lk_matrices
//! ```

use mapclass::lk::LkRep;
use mapclass::word::{Context, Word};

fn main() -> mapclass::Result<()> {
    let rep = LkRep::new(3)?;
    println!("L_3 acts on C(3,2) = {} basis vectors v_jk.\n", rep.dim());

    for i in 1..=2 {
        println!("L_3(s{i}) =\n{}", rep.generator(i)?);
        println!("L_3(s{i})^-1 =\n{}", rep.generator_inverse(i)?);
    }

    let lhs = rep.eval(&Word::parse("s1 s2 s1", Context::Braid(3))?, false)?;
    let rhs = rep.eval(&Word::parse("s2 s1 s2", Context::Braid(3))?, false)?;
    println!("s1 s2 s1 = s2 s1 s2 under L_3: {}", lhs == rhs);
    Ok(())
}
