use std::io::Write;

use impartial::euclid::{remoteness_euclid, EuclidPosition};
use impartial::wythoff::{WythoffParams, WythoffTable};

use crate::failure::CliResult;

/// `m,x_m,y_m` for `m = 0..=max_m`.
pub fn wythoff<W: Write>(out: W, params: WythoffParams, max_m: usize) -> CliResult<()> {
    let mut table = WythoffTable::new(params);
    table.extend_to_index(max_m);
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["m", "x_m", "y_m"])?;
    for m in 0..=max_m {
        let (x, y) = table.get(m).expect("table extended");
        w.serialize((m, x, y))?;
    }
    w.flush()?;
    Ok(())
}

/// `x,y,remoteness,class` for `1 ≤ x, y ≤ max`, rows in `x`-major order.
pub fn euclid<W: Write>(out: W, max: u64) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["x", "y", "remoteness", "class"])?;
    for x in 1..=max {
        for y in 1..=max {
            let r = remoteness_euclid(&EuclidPosition::new(x, y)?);
            w.serialize((x, y, r.0, r.outcome().to_string()))?;
        }
    }
    w.flush()?;
    Ok(())
}
