//! File output helpers: everything lands atomically (temp file + rename) so
//! interrupted runs never leave half-written results.

use std::fs;
use std::path::{Path, PathBuf};

use ctrplace::placement::DelayPoint;
use ctrplace::{Error, Result};

/// Writes `content` to `dir/name` via a temporary sibling file.
pub fn write_atomic(dir: &Path, name: &str, content: &str) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let target = dir.join(name);
    let tmp = dir.join(format!(".{name}.tmp"));
    fs::write(&tmp, content)?;
    fs::rename(&tmp, &target)?;
    Ok(target)
}

/// One delay point per row: semicolon-joined placement, then both delays.
pub fn delay_points_csv(points: &[DelayPoint]) -> String {
    let mut out = String::from("placement,sw_ctr_ms,ctr_ctr_ms\n");
    for p in points {
        out.push_str(&format!(
            "{},{},{}\n",
            join_ids(p.placement.controllers()),
            p.sw_ctr_ms,
            p.ctr_ctr_ms
        ));
    }
    out
}

pub fn join_ids(ids: &[usize]) -> String {
    ids.iter()
        .map(|id| id.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

/// The enumeration cap, overridable through `CTRPLACE_CAP`.
pub fn enumeration_cap() -> Result<u128> {
    match std::env::var("CTRPLACE_CAP") {
        Ok(raw) => raw.trim().parse().map_err(|_| {
            Error::InvalidArgument(format!("CTRPLACE_CAP must be an integer, got '{raw}'"))
        }),
        Err(_) => Ok(ctrplace::pareto::DEFAULT_ENUMERATION_CAP),
    }
}
