//! A CSV table of verdicts over a box of classes, evaluated in parallel and
//! written in lexicographic order.
//!
//! ```bash
//! cargo run -p syzcert --example sweep_table > f2.csv
//! ```

use rayon::prelude::*;

use syzcert::certify::{Assumptions, Polarization};
use syzcert::cli::{box_points, sweep_row};
use syzcert::surfaces::SurfaceModel;

fn main() -> syzcert::Result<()> {
    let f2: SurfaceModel = "hirzebruch:2".parse()?;
    let rows = box_points(&[(0, 3), (0, 8)])
        .par_iter()
        .map(|c| sweep_row(&f2, c, &Polarization::L, None, &Assumptions::none()))
        .collect::<syzcert::Result<Vec<_>>>()?;
    let mut w = csv::Writer::from_writer(std::io::stdout());
    for row in &rows {
        w.serialize(row).expect("stdout is writable");
    }
    w.flush().expect("stdout is writable");

    let stable = rows.iter().filter(|r| r.verdict == "HStable").count();
    let ample = rows.iter().filter(|r| r.ample).count();
    eprintln!("{} rows, {ample} ample, {stable} HStable", rows.len());
    Ok(())
}
