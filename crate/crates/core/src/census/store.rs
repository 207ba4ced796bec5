//! Append-only TSV results file and its checkpoint.

use super::{CensusBounds, CensusEntry};
use crate::error::{OrbError, Result};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const HEADER: &str = "# signature\tweight\tclass\tcertification";

/// Progress record: every tetrahedron count up to `done_tets` is fully written.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub bounds: CensusBounds,
    pub done_tets: usize,
}

pub fn checkpoint_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".checkpoint");
    PathBuf::from(s)
}

fn io(e: std::io::Error) -> OrbError {
    OrbError::Invalid(format!("i/o: {e}"))
}

pub fn load_entries(path: &Path) -> Result<Vec<CensusEntry>> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(io(e)),
    };
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(CensusEntry::from_line(line).map_err(|e| match e {
            OrbError::Parse { msg, .. } => OrbError::Parse { line: i + 1, msg },
            e => e,
        })?);
    }
    Ok(out)
}

pub fn append_entries(path: &Path, entries: &[CensusEntry]) -> Result<()> {
    let fresh = !path.exists();
    let mut f = fs::OpenOptions::new().create(true).append(true).open(path).map_err(io)?;
    let mut buf = String::new();
    if fresh {
        buf.push_str(HEADER);
        buf.push('\n');
    }
    for e in entries {
        buf.push_str(&e.to_line());
        buf.push('\n');
    }
    f.write_all(buf.as_bytes()).map_err(io)?;
    f.sync_data().map_err(io)
}

pub fn write_checkpoint(out: &Path, cp: &Checkpoint) -> Result<()> {
    let b = cp.bounds;
    let text = format!(
        "max_tets={}\nmax_order={}\nmax_weight={}\ndone_tets={}\n",
        b.max_tets, b.max_order, b.max_weight, cp.done_tets
    );
    let path = checkpoint_path(out);
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, text).map_err(io)?;
    fs::rename(&tmp, &path).map_err(io)
}

pub fn read_checkpoint(out: &Path) -> Result<Option<Checkpoint>> {
    let text = match fs::read_to_string(checkpoint_path(out)) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(io(e)),
    };
    let mut vals = [None; 4];
    let keys = ["max_tets", "max_order", "max_weight", "done_tets"];
    for (i, line) in text.lines().enumerate() {
        let bad = || OrbError::Parse { line: i + 1, msg: format!("checkpoint: {line:?}") };
        let (k, v) = line.split_once('=').ok_or_else(bad)?;
        let slot = keys.iter().position(|&x| x == k).ok_or_else(bad)?;
        vals[slot] = Some(v.parse::<u64>().map_err(|_| bad())?);
    }
    let get = |i: usize| vals[i].ok_or_else(|| OrbError::Parse { line: 0, msg: format!("checkpoint lacks {}", keys[i]) });
    Ok(Some(Checkpoint {
        bounds: CensusBounds {
            max_tets: get(0)? as usize,
            max_order: get(1)? as u32,
            max_weight: get(2)?,
        },
        done_tets: get(3)? as usize,
    }))
}
