//! Euler characteristic, certified h0 and h1-vanishing on a Hirzebruch
//! surface and a del Pezzo surface.
//!
//! ```bash
//! cargo run -p syzcert --example cohomology_table
//! ```

use syzcert::cohomology::cohomology;
use syzcert::surfaces::SurfaceModel;

fn main() -> syzcert::Result<()> {
    let f2: SurfaceModel = "hirzebruch:2".parse()?;
    println!("F_2      chi   h0   h1=0  method");
    for (a, b) in [(0, 0), (1, 2), (1, 3), (2, 3), (-1, 0), (0, -2), (-2, -4)] {
        let d = f2.class(&[a, b])?;
        let c = cohomology(&f2, &d)?;
        println!(
            "{:<8} {:>4} {:>4}   {:<5?} {:?}",
            format!("({a},{b})"),
            c.chi,
            c.h0.map_or("?".into(), |v| v.to_string()),
            c.h1_zero,
            c.method
        );
    }

    let dp3: SurfaceModel = "delpezzo:3".parse()?;
    println!("\ndP_3");
    for coords in [[3, -1, -1, -1], [1, 0, 0, 0], [2, -1, -1, -1], [0, 1, 0, 0], [-1, 0, 0, 0]] {
        let d = dp3.class(&coords)?;
        let c = cohomology(&dp3, &d)?;
        println!(
            "{:<16} chi={:<3} h0={:<3} h1=0:{:?} ({:?})",
            d.display_with(&dp3.basis_labels).to_string(),
            c.chi,
            c.h0.map_or("?".into(), |v| v.to_string()),
            c.h1_zero,
            c.method
        );
    }
    Ok(())
}
