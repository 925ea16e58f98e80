use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::standard::standard_extensions;
use crate::catalog::Family;
use crate::cyclotomic::Field;
use crate::error::Result;
use crate::rep::{GroupKind, LBRep};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub draw: usize,
    pub dim: usize,
    pub conductor: u32,
    pub candidates: usize,
    pub status: String,
    /// Every built standard extension verifies as LB₃.
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub family: Family,
    pub draws: usize,
    pub seed: u64,
    pub working_conductor: u32,
    pub found: usize,
    pub entries: Vec<SweepEntry>,
}

impl SweepReport {
    pub fn rate(&self) -> f64 {
        if self.draws == 0 {
            0.0
        } else {
            self.found as f64 / self.draws as f64
        }
    }
}

/// Draws `draws` representations of `family` and checks each for a
/// verified standard extension.
pub fn conjecture_sweep(family: Family, draws: usize, seed: u64, field: &Field) -> Result<SweepReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reps: Vec<LBRep> = (0..draws).map(|_| family.sample(&mut rng, field)).collect::<Result<_>>()?;
    let entries = reps
        .par_iter()
        .enumerate()
        .map(|(draw, rep)| {
            let (search, built) = standard_extensions(rep)?;
            let verified = !built.is_empty()
                && built.iter().all(|(ext, _)| ext.verify(GroupKind::LB3).map(|r| r.all_hold()).unwrap_or(false));
            Ok(SweepEntry {
                draw,
                dim: rep.dim(),
                conductor: rep.conductor(),
                candidates: search.candidates.len(),
                status: search.status.reason(),
                verified,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let found = entries.iter().filter(|e| e.verified).count();
    Ok(SweepReport { family, draws, seed, working_conductor: field.conductor(), found, entries })
}
