//! (-1)-curves on del Pezzo surfaces, which generate the curve cone.
//!
//! ```bash
//! cargo run -p syzcert --example minus_one_curves
//! ```

use syzcert::surfaces::{minus_one_curves, SurfaceModel};

fn main() -> syzcert::Result<()> {
    for r in 1..=8 {
        let s: SurfaceModel = format!("delpezzo:{r}").parse()?;
        let curves = minus_one_curves(&s)?;
        println!("dP_{r}: {} curves", curves.len());
        if r <= 4 {
            for c in &curves {
                println!("    {}", c.display_with(&s.basis_labels));
            }
        }
    }

    // the 240 on dP_8 by degree a in a h - sum m_i e_i
    let dp8: SurfaceModel = "delpezzo:8".parse()?;
    let mut by_degree = [0usize; 7];
    for c in minus_one_curves(&dp8)? {
        by_degree[c.coords()[0] as usize] += 1;
    }
    println!("dP_8 by degree: {by_degree:?}");
    Ok(())
}
