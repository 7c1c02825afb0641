//! On-disk cache of geodesic tables.
//!
//! One CSV file per rank, `geodesics-n<N>.csv`. The first record is
//! `brauer-geodesics,<version>,<n>`; every following record is
//! `<diagram text>,<length>`, sorted by the diagram text. Invertible
//! diagrams have no length and are not listed. A file whose header does not
//! match the current version and rank is ignored and rewritten.

use std::fs;
use std::path::{Path, PathBuf};

use brauer_core::geodesics::GeodesicTable;
use brauer_core::BrauerDiagram;

use crate::{parallel, Error, Result};

pub const FORMAT: &str = "brauer-geodesics";
pub const VERSION: u32 = 1;

/// Environment variable consulted when no cache directory is given.
pub const CACHE_DIR_ENV: &str = "BRAUER_CACHE_DIR";

pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("geodesics-n{n}.csv"))
}

pub fn write_table(path: &Path, table: &GeodesicTable) -> Result<()> {
    let mut rows: Vec<(String, usize)> =
        table.iter().map(|(d, len)| (d.to_string(), len)).collect();
    rows.sort();
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let tmp = path.with_extension("csv.tmp");
    {
        let mut w = csv::WriterBuilder::new()
            .flexible(true)
            .has_headers(false)
            .from_path(&tmp)?;
        w.write_record([FORMAT, &VERSION.to_string(), &table.rank().to_string()])?;
        for (text, len) in &rows {
            w.write_record([text.as_str(), &len.to_string()])?;
        }
        w.flush()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Reads a cached table for rank `n`. `Ok(None)` when the file is missing
/// or was written for another format version or rank.
pub fn read_table(path: &Path, n: usize) -> Result<Option<GeodesicTable>> {
    if !path.exists() {
        return Ok(None);
    }
    let bad = |reason: String| Error::Cache {
        path: path.to_owned(),
        reason,
    };
    let mut r = csv::ReaderBuilder::new()
        .flexible(true)
        .has_headers(false)
        .from_path(path)?;
    let mut records = r.records();
    let Some(header) = records.next().transpose()? else {
        return Ok(None);
    };
    let current = header.len() == 3
        && &header[0] == FORMAT
        && header[1].parse() == Ok(VERSION)
        && header[2].parse() == Ok(n);
    if !current {
        return Ok(None);
    }
    let total = brauer_core::combinatorics::double_factorial_odd(n) as usize;
    let mut dist = vec![0u8; total];
    for record in records {
        let record = record?;
        if record.len() != 2 {
            return Err(bad(format!("expected 2 fields, found {}", record.len())));
        }
        let d: BrauerDiagram = record[0].parse().map_err(|e| bad(format!("{e}")))?;
        let len: u8 = record[1]
            .parse()
            .map_err(|_| bad(format!("bad length {:?}", &record[1])))?;
        if d.rank() != n || len == 0 {
            return Err(bad(format!("unexpected row {:?}", record.as_slice())));
        }
        dist[d.rank_index() as usize] = len;
    }
    GeodesicTable::from_distances(n, dist)
        .map(Some)
        .map_err(|e| bad(e.to_string()))
}

/// The table for rank `n`, from `dir` when cached there, otherwise computed
/// (and stored when `dir` is given).
pub fn load_or_compute(dir: Option<&Path>, n: usize, limit: usize) -> Result<GeodesicTable> {
    if let Some(dir) = dir {
        if let Some(table) = read_table(&cache_path(dir, n), n)? {
            return Ok(table);
        }
    }
    let table = parallel::bfs_lengths(n, limit)?;
    if let Some(dir) = dir {
        write_table(&cache_path(dir, n), &table)?;
    }
    Ok(table)
}
