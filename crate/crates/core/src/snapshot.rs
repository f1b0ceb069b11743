//! Reproducibility snapshots: enough data to rebuild a constructed pair
//! byte-for-byte (parameters, the σ atom list and the planar row layout).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measure::Atom;
use crate::params::ConstructionParams;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RowLayout {
    pub a_n: f64,
    pub height: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Snapshot {
    pub schema_version: u32,
    pub params: ConstructionParams,
    /// σ truncation depth; the atom list has 2^{generations+1} − 1 entries.
    pub generations: usize,
    pub atoms: Vec<Atom>,
    pub rows: Vec<RowLayout>,
}

impl Snapshot {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("snapshot serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let snap: Snapshot =
            serde_json::from_str(s).map_err(|e| Error::InvalidParameters(e.to_string()))?;
        if snap.schema_version != SCHEMA_VERSION {
            return Err(Error::InvalidParameters(format!(
                "unsupported snapshot schema_version {}",
                snap.schema_version
            )));
        }
        Ok(snap)
    }
}
