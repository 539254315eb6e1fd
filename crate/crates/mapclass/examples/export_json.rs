//! Serialize matrices in the deterministic JSON export format.
//!
//! ```bash
//! cargo run -p mapclass --example export_json
//! ```

use mapclass::export::{block_record, matrix_record, to_json_string};
use mapclass::lk::LkRep;
use mapclass::sphere::SphereRep;

fn main() -> mapclass::Result<()> {
    let rep = LkRep::new(3)?;
    println!("{}", to_json_string(&matrix_record(rep.generator(1)?)));

    // the block form of an induced generator: permutation plus per-column blocks
    let sphere = SphereRep::new(5)?;
    let record = block_record(sphere.generator_blocks(4)?);
    let json = to_json_string(&record);
    // print only the head; the full record holds five 6x6 blocks
    for line in json.lines().take(12) {
        println!("{line}");
    }
    println!("  ... ({} more lines)", json.lines().count() - 12);
    Ok(())
}
