//! The Artin free-group action as an independent equality oracle.
//!
//! ```bash
//! cargo run -p mapclass --example artin_oracle
//! ```

use mapclass::artin::artin_apply;
use mapclass::lk::LkRep;
use mapclass::word::{Context, Word};

fn main() -> mapclass::Result<()> {
    let ctx = Context::Braid(3);
    let w = Word::parse("s1", ctx)?;
    let endo = artin_apply(&w)?;
    println!("Artin action of s1 on the free group <x1, x2, x3>:");
    for i in 1..=3 {
        println!("  x{i} -> {}", endo.image(i));
    }

    let rep = LkRep::new(3)?;
    let pairs = [("s1 s2 s1", "s2 s1 s2"), ("s1 s2", "s2 s1"), ("s1 s1^-1", "")];
    println!("\nmatrix equality vs oracle equality:");
    for (a, b) in pairs {
        let (wa, wb) = (Word::parse(a, ctx)?, Word::parse(b, ctx)?);
        let matrix_eq = rep.eval(&wa, false)? == rep.eval(&wb, false)?;
        let oracle_eq = artin_apply(&wa)? == artin_apply(&wb)?;
        println!("  \"{a}\" vs \"{b}\": L_3 {matrix_eq}, Artin {oracle_eq}");
        assert_eq!(matrix_eq, oracle_eq);
    }
    Ok(())
}
