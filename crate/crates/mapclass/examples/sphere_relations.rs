//! The induced representation K_n of the punctured-sphere mapping class
//! group: block structure and the sphere relations.
//!
//! ```bash
//! cargo run -p mapclass --example sphere_relations
//! ```

use mapclass::sphere::{coset_factor, SphereRep};
use mapclass::word::{Context, Word};

fn main() -> mapclass::Result<()> {
    let n = 6;
    let rep = SphereRep::new(n)?;
    println!(
        "K_{n} has dimension {} = {n} blocks of size C({},2) = {}.\n",
        rep.dim(),
        n - 1,
        rep.block_dim()
    );

    println!("block permutation and coset factors of K_{n}(s5):");
    for j in 1..=n {
        let factor = coset_factor(n, n - 1, j)?;
        let row = rep.cosets().phi(n - 1, j);
        let text = if factor.is_empty() { "<empty>".into() } else { factor.to_string() };
        println!("  column {j} -> row {row}, acting by L'_{}({text})", n - 1);
    }

    let boundary = Word::parse("s1 s2 s3 s4 s5 s5 s4 s3 s2 s1", Context::Sphere(n))?;
    println!("\nK_6(s1 s2 s3 s4 s5 s5 s4 s3 s2 s1) = I: {}",
        rep.eval_blocks(&boundary)?.is_identity());

    let up = Word::parse("s1 s2 s3 s4 s5", Context::Sphere(n))?;
    println!("K_6((s1 s2 s3 s4 s5)^6)           = I: {}",
        rep.eval_blocks(&up.repeat(6))?.is_identity());
    Ok(())
}
