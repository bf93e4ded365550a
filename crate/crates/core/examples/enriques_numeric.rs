//! Surfaces known only through L^2, L.K, K^2, chi(O) and q. Positivity and
//! the Clifford index of the curve in |L| are supplied as assertions.
//!
//! ```bash
//! cargo run -p syzcert --example enriques_numeric
//! ```

use syzcert::certify::{check_enriques, check_prop34, Assumptions};
use syzcert::lattice::DivisorClass;
use syzcert::surfaces::{Assertion, SurfaceModel};

fn main() -> syzcert::Result<()> {
    let facts = [Assertion::Ample, Assertion::Generated, Assertion::IrreducibleMember];
    for l2 in [2, 4, 10, 16] {
        let s: SurfaceModel = format!("numeric:L2={l2},LK=0,K2=0,chiO=1,q=0,Ktriv=1").parse()?;
        for cliff in [None, Some(1), Some(2)] {
            let mut asm = Assumptions::with(facts);
            asm.cliff_bound = cliff;
            let cert = check_enriques(&s, &asm)?;
            let why = cert
                .blocking()
                .map_or(String::new(), |h| format!(" ({}: {})", h.id, h.evidence));
            println!("L^2={l2:<3} cliff>={cliff:?}: {}{why}", cert.verdict);
        }
    }

    let s: SurfaceModel = "numeric:L2=10,LK=0,K2=0,chiO=1,q=0".parse()?;
    let cert = check_prop34(&s, &DivisorClass::zero(0), &Assumptions::with(facts).cliff(2))?;
    println!();
    print!("{}", cert.to_text());
    Ok(())
}
