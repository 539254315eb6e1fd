//! The full twist is a scalar under L_n; rescaling sends it to the identity.
//!
//! ```bash
//! cargo run -p mapclass --example rescaled_center
//! ```

use mapclass::lk::{abelianization, full_twist_word, rescaling_scalar, LkRep};
use mapclass::LaurentPoly;

fn main() -> mapclass::Result<()> {
    for n in 2..=5usize {
        let rep = LkRep::new(n)?;
        let d2 = full_twist_word(n);
        let scalar = rep.eval(&d2, false)?.is_scalar().expect("full twist is central");
        let rescaled = rep.eval(&d2, true)?;
        let unit = rescaling_scalar(n);
        println!(
            "n={n}: ab(Delta^2) = {:>2}, L_{n}(Delta^2) = ({scalar}) I, \
             per-letter rescale {}, L'_{n}(Delta^2) = I: {}",
            abelianization(&d2)?,
            LaurentPoly::from(unit),
            rescaled.is_identity()
        );
    }
    Ok(())
}
