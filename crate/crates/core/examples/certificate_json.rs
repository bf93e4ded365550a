//! Certificates as JSON: write, read back, and inspect the hypotheses.
//!
//! ```bash
//! cargo run -p syzcert --example certificate_json
//! ```

use syzcert::certify::{check, Assumptions, Certificate, Polarization};
use syzcert::surfaces::SurfaceModel;

fn main() -> syzcert::Result<()> {
    let dp3: SurfaceModel = "delpezzo:3".parse()?;
    let cubic = dp3.class(&[3, -1, -1, -1])?;
    let cert = check(&dp3, &cubic, &Polarization::L, None, &Assumptions::none())?;
    let json = cert.to_json();
    println!("{json}");

    let back = Certificate::from_json(&json)?;
    assert_eq!(back, cert);
    assert!(back.is_consistent());

    let not_ample = dp3.class(&[2, -1, -1, -1])?;
    let cert = check(&dp3, &not_ample, &Polarization::L, None, &Assumptions::none())?;
    for h in &cert.hypotheses {
        println!("{:<20} {:?}", h.id, h.status);
    }
    println!("verdict {}", cert.verdict);
    Ok(())
}
