use std::path::PathBuf;

use rayon::prelude::*;
use torsion_core::gate::{independence_evidence, ConditionEvidence, Engine};
use torsion_core::maninspace::SymbolSpace;

use crate::cache::{cache_file, read_space, write_space};

/// Checks witness primes on the rayon pool and optionally keeps relation
/// matrices in a cache directory. Results come back in input order, so the
/// least passing prime does not depend on scheduling.
#[derive(Debug, Clone, Default)]
pub struct ParallelEngine {
    pub cache_dir: Option<PathBuf>,
}

impl ParallelEngine {
    pub fn new(cache_dir: Option<PathBuf>) -> Self {
        ParallelEngine { cache_dir }
    }
}

impl Engine for ParallelEngine {
    fn space(&self, n: u64) -> torsion_core::Result<SymbolSpace> {
        let Some(dir) = &self.cache_dir else {
            return SymbolSpace::build(n);
        };
        let path = cache_file(dir, n);
        if path.exists() {
            match read_space(&path, n) {
                Ok(space) => return Ok(space),
                Err(e) => eprintln!("warning: ignoring cache entry: {e}"),
            }
        }
        let space = SymbolSpace::build(n)?;
        if let Err(e) = write_space(&path, &space) {
            eprintln!("warning: could not write cache: {e}");
        }
        Ok(space)
    }

    fn independence(&self, space: &SymbolSpace, d: u32, primes: &[u64]) -> Vec<ConditionEvidence> {
        primes.par_iter().map(|&p| independence_evidence(space, d, p)).collect()
    }
}
