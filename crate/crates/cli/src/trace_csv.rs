//! CSV form of an [`IterationTrace`]: one row per recorded iteration with
//! columns `k,res_max,step_norm,fejer_dist,alphas_min,nT_cum`. Quantities
//! that do not apply to a row are left empty.

use std::fs::File;
use std::path::Path;

use fbsplit::IterationTrace;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceRow {
    pub k: usize,
    pub res_max: Option<f64>,
    pub step_norm: Option<f64>,
    pub fejer_dist: Option<f64>,
    pub alphas_min: Option<f64>,
    #[serde(rename = "nT_cum")]
    pub n_t_cum: u64,
}

impl TraceRow {
    pub fn from_trace(trace: &IterationTrace) -> Vec<TraceRow> {
        trace
            .records
            .iter()
            .map(|r| TraceRow {
                k: r.k,
                res_max: r.max_residual(),
                step_norm: r.step_norm,
                fejer_dist: r.fejer_dist,
                alphas_min: r.min_alpha(),
                n_t_cum: r.n_t_cumulative,
            })
            .collect()
    }
}

const HEADER: [&str; 6] = ["k", "res_max", "step_norm", "fejer_dist", "alphas_min", "nT_cum"];

pub fn emit_trace(trace: &IterationTrace, path: &Path) -> Result<()> {
    let csv_err = |source| Error::Csv {
        path: path.to_owned(),
        source,
    };
    let file = File::create(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(file);
    // Written by hand so that an empty trace still gets its header line.
    w.write_record(HEADER).map_err(csv_err)?;
    for row in TraceRow::from_trace(trace) {
        w.serialize(row).map_err(csv_err)?;
    }
    w.flush().map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn read_trace(path: &Path) -> Result<Vec<TraceRow>> {
    let mut r = csv::Reader::from_path(path).map_err(|source| Error::Csv {
        path: path.to_owned(),
        source,
    })?;
    r.deserialize()
        .collect::<std::result::Result<Vec<TraceRow>, _>>()
        .map_err(|source| Error::Csv {
            path: path.to_owned(),
            source,
        })
}
