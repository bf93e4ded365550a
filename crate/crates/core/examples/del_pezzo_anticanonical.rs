//! -K-stability on del Pezzo surfaces, including a degree-1 surface where
//! global generation needs L.(-K) >= 2.
//!
//! ```bash
//! cargo run -p syzcert --example del_pezzo_anticanonical
//! ```

use syzcert::certify::{check, check_delpezzo_antik, Assumptions, Polarization};
use syzcert::surfaces::{Assertion, SurfaceModel};

fn main() -> syzcert::Result<()> {
    let dp6: SurfaceModel = "delpezzo:6".parse()?;
    let h = dp6.class(&[1, 0, 0, 0, 0, 0, 0])?;
    print!("{}", check_delpezzo_antik(&dp6, &h, &Assumptions::none())?.to_text());

    let dp8: SurfaceModel = "delpezzo:8".parse()?;
    let two_anti_k = dp8.anticanonical().scaled(2)?;
    let cert = check_delpezzo_antik(&dp8, &two_anti_k, &Assumptions::none())?;
    println!("\ndP_8, L = -2K: {}", cert.verdict);

    let anti_k = dp8.anticanonical();
    let cert = check_delpezzo_antik(&dp8, &anti_k, &Assumptions::none())?;
    println!(
        "dP_8, L = -K: {} (blocked by {})",
        cert.verdict,
        cert.blocking().map_or("-", |h| h.id.as_str())
    );
    let asserted = Assumptions::with([Assertion::Generated, Assertion::IrreducibleMember]);
    let cert = check(&dp8, &anti_k, &Polarization::ANTI_K, None, &asserted)?;
    println!("dP_8, L = -K with assertions: {} via {}", cert.verdict, cert.criterion);
    Ok(())
}
