//! Producer/consumer census driver with resumable output.

use super::enumerate::{closed_tables, decorations};
use super::store::{append_entries, load_entries, read_checkpoint, write_checkpoint, Checkpoint};
use super::{examine, CensusBounds, CensusEntry, CensusTable};
use crate::error::{OrbError, Result};
use crate::orbtri::{iso_signature, OrbifoldTriangulation};
use crate::surgery::SplitOptions;
use std::collections::HashSet;
use std::path::Path;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::{mpsc, Mutex};
use std::thread;

#[derive(Clone, Copy, Debug)]
pub struct CensusOptions {
    pub bounds: CensusBounds,
    pub split: SplitOptions,
    /// Worker threads; 0 uses the available parallelism.
    pub threads: usize,
    /// Resource guard: stop after this many new entries.
    pub max_entries: Option<usize>,
}

impl CensusOptions {
    pub fn new(max_tets: usize, max_order: u32, max_weight: u64) -> Self {
        CensusOptions {
            bounds: CensusBounds { max_tets, max_order, max_weight },
            split: SplitOptions::default(),
            threads: 0,
            max_entries: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CensusRun {
    pub table: CensusTable,
    /// False when the resource guard stopped the run early.
    pub complete: bool,
}

const QUEUE: usize = 256;

/// Entries for one tetrahedron count, sorted by weight then signature.
fn level(
    n: usize,
    opts: &CensusOptions,
    seen: &Mutex<HashSet<String>>,
    produced: &AtomicUsize,
    stop: &AtomicBool,
) -> Result<Vec<CensusEntry>> {
    let b = opts.bounds;
    let threads = match opts.threads {
        0 => thread::available_parallelism().map_or(1, |n| n.get()),
        t => t,
    };
    let (tx, rx) = mpsc::sync_channel::<OrbifoldTriangulation>(QUEUE);
    let rx = Mutex::new(rx);
    let (otx, orx) = mpsc::channel::<Result<CensusEntry>>();
    thread::scope(|s| {
        s.spawn(move || {
            for tri in closed_tables(n) {
                for dec in decorations(&tri, b.max_order, b.max_weight) {
                    if stop.load(Ordering::Relaxed) || tx.send(dec).is_err() {
                        return;
                    }
                }
            }
        });
        for _ in 0..threads {
            let otx = otx.clone();
            let rx = &rx;
            s.spawn(move || loop {
                let next = rx.lock().expect("queue lock").recv();
                let Ok(tri) = next else { break };
                if stop.load(Ordering::Relaxed) {
                    continue;
                }
                let sig = iso_signature(&tri);
                if !seen.lock().expect("dedup lock").insert(sig) {
                    continue;
                }
                if let Some(max) = opts.max_entries {
                    if produced.fetch_add(1, Ordering::SeqCst) >= max {
                        stop.store(true, Ordering::Relaxed);
                        continue;
                    }
                }
                let _ = otx.send(examine(&tri, &opts.split).map(|x| x.entry));
            });
        }
    });
    drop(otx);
    let mut out = orx.into_iter().collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| (a.weight, &a.signature).cmp(&(b.weight, &b.signature)));
    Ok(out)
}

/// Runs the census, appending to `out` level by level when given. An existing file with a
/// matching checkpoint is resumed; a mismatched checkpoint is an error.
pub fn run_census(opts: &CensusOptions, out: Option<&Path>) -> Result<CensusRun> {
    let b = opts.bounds;
    if b.max_tets == 0 || b.max_order == 0 || b.max_weight == 0 {
        return Err(OrbError::Invalid("census parameters must be at least 1".into()));
    }
    let mut entries = Vec::new();
    let mut done = 0;
    if let Some(path) = out {
        if let Some(cp) = read_checkpoint(path)? {
            if cp.bounds != b {
                return Err(OrbError::Invalid(format!(
                    "checkpoint is for bounds {:?}, not {:?}",
                    cp.bounds, b
                )));
            }
            done = cp.done_tets;
        }
        entries = load_entries(path)?;
    }
    let seen = Mutex::new(entries.iter().map(|e| e.signature.clone()).collect::<HashSet<_>>());
    let produced = AtomicUsize::new(0);
    let stop = AtomicBool::new(false);
    for n in done + 1..=b.max_tets.min(b.max_weight as usize) {
        let new = level(n, opts, &seen, &produced, &stop)?;
        if let Some(path) = out {
            append_entries(path, &new)?;
        }
        entries.extend(new);
        if stop.load(Ordering::Relaxed) {
            return Ok(CensusRun {
                table: CensusTable::from_entries(b, entries)?,
                complete: false,
            });
        }
        if let Some(path) = out {
            write_checkpoint(path, &Checkpoint { bounds: b, done_tets: n })?;
        }
    }
    Ok(CensusRun {
        table: CensusTable::from_entries(b, entries)?,
        complete: true,
    })
}
