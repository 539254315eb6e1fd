//! Deciding word equality through the faithful representations.
//!
//! ```bash
//! cargo run -p mapclass --example word_equality
//! ```

use mapclass::equal_words;
use mapclass::lk::full_twist_word;
use mapclass::word::{Context, Word};

fn main() -> mapclass::Result<()> {
    let cases = [
        ("t1 t2 t1", "t2 t1 t2", Context::Genus2),
        ("t1", "t2", Context::Genus2),
        ("t1 t3", "t3 t1", Context::Genus2),
        ("s1 s2 s1", "s2 s1 s2", Context::Braid(4)),
        ("s1 s3", "s3 s1", Context::Braid(4)),
        ("s1 s2", "s2 s1", Context::Braid(4)),
        ("s1 s2 s3 s4 s4 s3 s2 s1", "", Context::Sphere(5)),
    ];
    for (a, b, ctx) in cases {
        let w1 = Word::parse(a, ctx)?;
        let w2 = Word::parse(b, ctx)?;
        let verdict = if equal_words(&w1, &w2)? { "EQUAL" } else { "DISTINCT" };
        println!("{ctx}: \"{a}\" vs \"{b}\" -> {verdict}");
    }

    // the involution generates the kernel of genus2 -> sphere(6); it is
    // nontrivial but its square is trivial
    let iota = Word::parse("t1 t2 t3 t4 t5 t5 t4 t3 t2 t1", Context::Genus2)?;
    let empty = Word::empty(Context::Genus2);
    println!("genus2: iota vs <empty>   -> {}",
        if equal_words(&iota, &empty)? { "EQUAL" } else { "DISTINCT" });
    println!("genus2: iota^2 vs <empty> -> {}",
        if equal_words(&iota.concat(&iota)?, &empty)? { "EQUAL" } else { "DISTINCT" });

    // Delta^2 is nontrivial in B_4 (it generates the center)
    let d2 = full_twist_word(4);
    println!("braid(4): Delta^2 vs <empty> -> {}",
        if equal_words(&d2, &Word::empty(Context::Braid(4)))? { "EQUAL" } else { "DISTINCT" });
    Ok(())
}
