//! L-stability of M_L for ample classes on Hirzebruch surfaces, with the
//! full certificate for one of them.
//!
//! ```bash
//! cargo run -p syzcert --example hirzebruch_stability
//! ```

use syzcert::certify::{check_hirzebruch, syzygy_slope, Assumptions};
use syzcert::surfaces::SurfaceModel;

fn main() -> syzcert::Result<()> {
    let f1: SurfaceModel = "hirzebruch:1".parse()?;
    let l = f1.class(&[1, 2])?;
    let cert = check_hirzebruch(&f1, &l, &Assumptions::none())?;
    print!("{}", cert.to_text());

    for n in 0..=3u32 {
        let s: SurfaceModel = format!("hirzebruch:{n}").parse()?;
        let n = i64::from(n);
        let mut stable = 0;
        let mut total = 0;
        for a in 1..=4 {
            for b in n * a + 1..=n * a + 8 {
                let l = s.class(&[a, b])?;
                total += 1;
                if check_hirzebruch(&s, &l, &Assumptions::none())?.is_stable() {
                    stable += 1;
                }
            }
        }
        let l = s.class(&[1, n + 1])?;
        let stats = syzygy_slope(&s, &l, &l)?.expect("toric h0 is exact");
        println!(
            "F_{n}: {stable}/{total} ample classes certified; C+{}F has rank {} and slope {}",
            n + 1,
            stats.rank,
            stats.slope
        );
    }
    Ok(())
}
