//! Lattice data of the built-in surfaces.
//!
//! ```bash
//! cargo run -p syzcert --example surface_info
//! ```

use syzcert::surfaces::SurfaceModel;

fn main() -> syzcert::Result<()> {
    for name in ["p2", "hirzebruch:0", "hirzebruch:3", "delpezzo:4", "delpezzo:8"] {
        let s: SurfaceModel = name.parse()?;
        println!("{name}");
        println!("  basis   {}", s.basis_labels.join(", "));
        for row in s.form.matrix() {
            println!("  {row:?}");
        }
        println!("  K       {}", s.canonical.display_with(&s.basis_labels));
        println!("  K^2     {}", s.canonical_square()?);
        println!("  rays    {}", s.extremal_rays.len());
    }

    let enriques: SurfaceModel = "numeric:L2=10,LK=0,K2=0,chiO=1,q=0,Ktriv=1".parse()?;
    println!("{}", enriques.descriptor());
    println!("  rank {} (numbers only)", enriques.rank());
    Ok(())
}
