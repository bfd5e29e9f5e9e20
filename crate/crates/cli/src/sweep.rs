use std::io::{self, Write};

use msl::multiseg::{is_ladder, is_regular, is_regular_balanced, is_speh};
use msl::par::map_indexed;
use msl::poles::{pole_report, PoleOptions};
use msl::random::{sample_filtered, stream, Filter, Shape};
use msl::{Error, Multisegment, SampleConfig};
use serde::Serialize;

/// One CSV row; field order is the column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub m: String,
    pub n: String,
    pub is_ladder_m: bool,
    pub is_ladder_n: bool,
    pub is_speh_m: bool,
    pub is_speh_n: bool,
    pub is_regular_m: bool,
    pub is_regular_n: bool,
    pub balanced_m: bool,
    pub balanced_n: bool,
    #[serde(rename = "lambda_Z_mn")]
    pub lambda_z_mn: i64,
    #[serde(rename = "lambda_Z_nm")]
    pub lambda_z_nm: i64,
    pub lambda_nr: i64,
    pub alpha: i64,
    pub alpha_plus: i64,
    pub frak_d: i64,
    pub method: String,
    pub checks_passed: bool,
}

fn row(m: &Multisegment, n: &Multisegment, cfg: &SampleConfig) -> Result<Row, Error> {
    let opts = PoleOptions::checked(SampleConfig { parallel: false, ..*cfg });
    let r = pole_report(m, n, &opts)?;
    Ok(Row {
        m: m.to_string(),
        n: n.to_string(),
        is_ladder_m: is_ladder(m),
        is_ladder_n: is_ladder(n),
        is_speh_m: is_speh(m),
        is_speh_n: is_speh(n),
        is_regular_m: is_regular(m),
        is_regular_n: is_regular(n),
        balanced_m: is_regular_balanced(m),
        balanced_n: is_regular_balanced(n),
        lambda_z_mn: r.lambda_z,
        // Λ(Z(n), Z(m)) = hom(C(m), C(n)) = Λ(L(m), L(n))
        lambda_z_nm: r.lambda_l,
        lambda_nr: r.lambda_nr,
        alpha: r.alpha,
        alpha_plus: r.alpha_plus,
        frak_d: r.frak_d,
        method: r.method.to_string(),
        checks_passed: r.all_passed(),
    })
}

/// Row `k` draws `m` then `n` from stream `k` of the seed, both under the
/// same filters. Rows are evaluated in parallel and returned in order.
pub fn rows(count: usize, shape: &Shape, filters: &[Filter], cfg: &SampleConfig) -> Result<Vec<Row>, Error> {
    map_indexed(count, cfg.parallel, |k| {
        let mut rng = stream(cfg.seed, k as u64);
        let m = sample_filtered(&mut rng, shape, filters)?;
        let n = sample_filtered(&mut rng, shape, filters)?;
        row(&m, &n, cfg)
    })
    .into_iter()
    .collect()
}

pub fn write<W: Write>(sink: W, rows: &[Row]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()
}
