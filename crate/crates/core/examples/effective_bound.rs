//! Smallest n for which M_{nL+D} is certified H-stable, with the per-n
//! trace of the four conditions.
//!
//! ```bash
//! cargo run -p syzcert --example effective_bound
//! ```

use syzcert::certify::{bound_thm21, Assumptions};
use syzcert::surfaces::SurfaceModel;

fn main() -> syzcert::Result<()> {
    let cases: [(&str, &[i64], &[i64], &[i64]); 4] = [
        ("p2", &[1], &[-3], &[1]),
        ("hirzebruch:1", &[1, 2], &[0, 0], &[1, 2]),
        ("hirzebruch:2", &[1, 3], &[-4, -9], &[1, 3]),
        ("delpezzo:5", &[3, -1, -1, -1, -1, -1], &[-6, 2, 2, 2, 2, 2], &[3, -1, -1, -1, -1, -1]),
    ];
    for (name, l, d, h) in cases {
        let s: SurfaceModel = name.parse()?;
        let search = bound_thm21(&s, &s.class(l)?, &s.class(d)?, &s.class(h)?, None, 100, &Assumptions::none())?;
        println!("{name} L={l:?} D={d:?} H={h:?}: n = {:?}", search.certificate.n);
        for t in &search.trace {
            println!(
                "  n={:<3} ample+generated={:<5} (a)={:<11} (b)={:<11} (d)={:?}",
                t.n,
                t.ample_generated,
                format!("{:?}", t.h1_vanishes),
                format!("{:?}", t.degree_ok),
                t.sections_ok
            );
        }
        if let Some(hyp) = search.certificate.hypothesis("search") {
            println!("  {}", hyp.evidence);
        }
    }
    Ok(())
}
