//! The genus-g hyperelliptic representation K_{2g+2} (+) H.
//!
//! ```bash
//! cargo run -p mapclass --example hyperelliptic
//! ```

use mapclass::genus2::{hyperelliptic_dim, involution_word, lickorish_classes, HyperellipticRep};

fn main() -> mapclass::Result<()> {
    for g in [2usize, 3] {
        println!(
            "g={g}: dimension (2g+2) C(2g+1,2) + 2g = {}",
            hyperelliptic_dim(g)
        );
    }

    println!("\nchain homology classes for g=3 (basis a1,b1,a2,b2,a3,b3):");
    for (i, c) in lickorish_classes(3).iter().enumerate() {
        println!("  c{} = {:?}", i + 1, c.coords());
    }

    let g = 3;
    let rep = HyperellipticRep::new(g)?;
    let iota = involution_word(g);
    let (sphere_part, symplectic_part) = rep.eval_parts(&iota)?;
    println!("\ng=3 involution: K_8 part = I: {}", sphere_part.is_identity());
    println!("H part (must be -I_6):\n{symplectic_part}");
    Ok(())
}
