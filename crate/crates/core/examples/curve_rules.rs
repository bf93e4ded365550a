//! Semistability of M_{L|C} on a curve from genus, degree, Clifford bound and
//! curve flags.
//!
//! ```bash
//! cargo run -p syzcert --example curve_rules
//! ```

use std::collections::BTreeSet;

use syzcert::curves::{curve_syzygy_semistability, CurveFlag, CurveRestriction, CurveStability};

fn main() -> syzcert::Result<()> {
    println!("status by (g, d): S stable, s semistable, . unknown");
    print!("g\\d ");
    for d in 1..=16 {
        print!("{:>3}", d);
    }
    println!();
    for g in 0..=6 {
        print!("{g:<4}");
        for d in 1..=16 {
            let v = curve_syzygy_semistability(&CurveRestriction::plain(g, d)?)?;
            let c = match v.status {
                CurveStability::Stable => 'S',
                CurveStability::Semistable => 's',
                CurveStability::Unknown => '.',
            };
            print!("{c:>3}");
        }
        println!();
    }

    let examples = [
        CurveRestriction::new(5, 8, Some(2), BTreeSet::new())?,
        CurveRestriction::new(4, 6, None, [CurveFlag::IsCanonical, CurveFlag::Nonhyperelliptic].into())?,
        CurveRestriction::new(7, 9, None, [CurveFlag::BnGeneral].into())?,
    ];
    for data in &examples {
        let v = curve_syzygy_semistability(data)?;
        println!("g={} d={}: {:?} by {} ({})", data.genus(), data.degree(), v.status, v.rule, v.reason);
    }

    match CurveRestriction::new(4, 6, Some(2), BTreeSet::new()) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
