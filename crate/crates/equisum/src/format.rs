//! Canonical JSON for partitionings:
//! `{"n":45,"k":9,"t":115,"containers":[[15,27,28,45],...]}`.
//!
//! Containers appear in root order and elements ascending. `k` must equal the
//! number of containers.

use equisum_core::{Container, Partitioning};
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitioningFile {
    n: u64,
    k: u64,
    t: u64,
    containers: Vec<Vec<u64>>,
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed partitioning JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("k = {k} but the file lists {actual} containers")]
    CountMismatch { k: u64, actual: usize },
}

pub fn to_json(p: &Partitioning) -> String {
    let file = PartitioningFile {
        n: p.n(),
        k: p.k(),
        t: p.t(),
        containers: p.containers().iter().map(|c| c.elements().to_vec()).collect(),
    };
    serde_json::to_string(&file).expect("plain integers always serialize")
}

/// Parses a partitioning. Only the schema is checked; validity is left to
/// [`equisum_core::verify`].
pub fn from_json(s: &str) -> Result<Partitioning, FormatError> {
    let file: PartitioningFile = serde_json::from_str(s)?;
    if file.k != file.containers.len() as u64 {
        return Err(FormatError::CountMismatch { k: file.k, actual: file.containers.len() });
    }
    Ok(Partitioning::new(file.n, file.t, file.containers.into_iter().map(Container::new).collect()))
}
