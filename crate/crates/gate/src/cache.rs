//! On-disk cache of relation matrices, one text file per level.
//!
//! ```text
//! torsion-gate space v1
//! level 169
//! generators 182
//! rows 364
//! rank 153
//! 0:1 3:1
//! ...
//! ```
//!
//! Each row line lists `column:coefficient` pairs. Loading recomputes the
//! generator list, checks it has `psi(N)` entries, and confirms the stored
//! rank against a rank computed modulo a large prime before trusting it.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use torsion_core::maninspace::linalg::{rank_mod_p, SparseRow};
use torsion_core::maninspace::SymbolSpace;

use crate::error::{GateError, Result};

const MAGIC: &str = "torsion-gate space v1";
const CHECK_PRIME: u64 = 2_147_483_647;

pub fn cache_file(dir: &Path, level: u64) -> PathBuf {
    dir.join(format!("x0-{level}.msym"))
}

pub fn write_space(path: &Path, space: &SymbolSpace) -> Result<()> {
    let io = |source| GateError::Io { path: path.to_path_buf(), source };
    let mut text = String::new();
    text.push_str(MAGIC);
    text.push('\n');
    text.push_str(&format!("level {}\n", space.level()));
    text.push_str(&format!("generators {}\n", space.generators().len()));
    text.push_str(&format!("rows {}\n", space.relations().len()));
    text.push_str(&format!("rank {}\n", space.relation_rank_q()));
    for row in space.relations() {
        let cells: Vec<String> = row.iter().map(|(c, x)| format!("{c}:{x}")).collect();
        text.push_str(&cells.join(" "));
        text.push('\n');
    }
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(io)?;
    }
    // write-then-rename so a concurrent reader never sees a partial file
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let mut f = fs::File::create(&tmp).map_err(io)?;
    f.write_all(text.as_bytes()).map_err(io)?;
    f.sync_all().map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

pub fn read_space(path: &Path, expected_level: u64) -> Result<SymbolSpace> {
    let text = fs::read_to_string(path).map_err(|source| GateError::Io { path: path.to_path_buf(), source })?;
    let bad = |line: usize, msg: String| GateError::CacheFormat { path: path.to_path_buf(), line, msg };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));

    match lines.next() {
        Some((_, MAGIC)) => {}
        _ => return Err(bad(1, format!("expected header {MAGIC:?}"))),
    }
    let mut field = |name: &str| -> Result<u64> {
        let (no, line) = lines.next().ok_or_else(|| bad(0, format!("missing {name}")))?;
        line.strip_prefix(name)
            .and_then(|rest| rest.trim().parse().ok())
            .ok_or_else(|| bad(no, format!("expected `{name} <integer>`")))
    };
    let level = field("level")?;
    let gens = field("generators")? as usize;
    let nrows = field("rows")? as usize;
    let rank = field("rank")? as usize;
    if level != expected_level {
        return Err(bad(2, format!("level {level}, wanted {expected_level}")));
    }

    let mut rows: Vec<SparseRow> = Vec::with_capacity(nrows);
    for (no, line) in lines {
        let row = line
            .split_whitespace()
            .map(|cell| {
                let (c, x) = cell.split_once(':')?;
                Some((c.parse().ok()?, x.parse().ok()?))
            })
            .collect::<Option<SparseRow>>()
            .ok_or_else(|| bad(no, "malformed row".into()))?;
        rows.push(row);
    }
    if rows.len() != nrows {
        return Err(bad(0, format!("{} rows, header says {nrows}", rows.len())));
    }
    let space = SymbolSpace::from_parts(level, gens, rows, rank)?;
    let check = rank_mod_p(space.relations(), gens, CHECK_PRIME);
    if check != rank {
        return Err(bad(5, format!("stored rank {rank} disagrees with rank {check} mod {CHECK_PRIME}")));
    }
    Ok(space)
}
