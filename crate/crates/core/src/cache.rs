//! Append-only JSON-lines cache of per-prime residues.
//!
//! One record per `(tag, params, prime)`. The file lives in the directory
//! named by `FINCON_CACHE_DIR` (default `.fincon-cache`) as `residues.jsonl`.

use std::collections::BTreeMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rug::Rational;
use serde::{Deserialize, Serialize};

use crate::arith::{parse_rational, PrimeCtx};
use crate::error::{Error, Result};
use crate::euler::{gamma_m_component, wilson_component};

pub const CACHE_DIR_ENV: &str = "FINCON_CACHE_DIR";
pub const DEFAULT_CACHE_DIR: &str = ".fincon-cache";
pub const CACHE_FILE: &str = "residues.jsonl";

pub const TAG_E_A: &str = "e_A";
pub const TAG_GAMMA_W: &str = "gamma_W";
pub const TAG_GAMMA_M: &str = "gamma_M";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueCacheRecord {
    pub tag: String,
    pub params: BTreeMap<String, String>,
    pub prime: u64,
    pub residue: u64,
}

impl ResidueCacheRecord {
    pub fn new(tag: &str, params: BTreeMap<String, String>, prime: u64, residue: u64) -> Self {
        ResidueCacheRecord { tag: tag.to_string(), params, prime, residue }
    }

    fn key(&self) -> Key {
        (self.tag.clone(), self.params.clone(), self.prime)
    }
}

type Key = (String, BTreeMap<String, String>, u64);

/// Residue of `e_A` at `p`: `sum_{k<p} 1/k! mod p`.
pub fn e_a_component(ctx: &PrimeCtx) -> u64 {
    ctx.inv_fact_table().iter().fold(0, |acc, &v| ctx.add(acc, v))
}

/// Recompute a cached quantity from scratch.
pub fn recompute(record: &ResidueCacheRecord) -> Result<Option<u64>> {
    let ctx = PrimeCtx::new(record.prime);
    match record.tag.as_str() {
        TAG_E_A => Ok(Some(e_a_component(&ctx))),
        TAG_GAMMA_W => Ok(Some(wilson_component(&ctx))),
        TAG_GAMMA_M => {
            let x = record
                .params
                .get("x")
                .ok_or_else(|| Error::InvalidArgument("gamma_M record without x".into()))?;
            Ok(gamma_m_component(&parse_rational(x)?, &ctx))
        }
        other => Err(Error::InvalidArgument(format!("unknown cache tag {other}"))),
    }
}

/// In-memory view of a cache file, with appends written through.
#[derive(Debug)]
pub struct ResidueCache {
    path: PathBuf,
    records: BTreeMap<Key, u64>,
}

impl ResidueCache {
    /// Open (creating the directory if needed) the cache in `dir`.
    pub fn open(dir: impl AsRef<Path>) -> Result<Self> {
        fs::create_dir_all(dir.as_ref())?;
        let path = dir.as_ref().join(CACHE_FILE);
        let mut records = BTreeMap::new();
        if path.exists() {
            for (i, line) in BufReader::new(File::open(&path)?).lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let rec: ResidueCacheRecord = serde_json::from_str(&line)
                    .map_err(|e| Error::Io(format!("{}:{}: {e}", path.display(), i + 1)))?;
                records.insert(rec.key(), rec.residue);
            }
        }
        Ok(ResidueCache { path, records })
    }

    /// Open the cache named by `FINCON_CACHE_DIR`, or the default directory.
    pub fn from_env() -> Result<Self> {
        let dir = std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from).unwrap_or_else(|| DEFAULT_CACHE_DIR.into());
        Self::open(dir)
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, tag: &str, params: &BTreeMap<String, String>, prime: u64) -> Option<u64> {
        self.records.get(&(tag.to_string(), params.clone(), prime)).copied()
    }

    /// Append records not yet present. A record that contradicts a cached
    /// residue is an error and nothing is written.
    pub fn extend(&mut self, new: impl IntoIterator<Item = ResidueCacheRecord>) -> Result<usize> {
        let mut fresh = Vec::new();
        for rec in new {
            match self.records.get(&rec.key()) {
                Some(&r) if r == rec.residue => {}
                Some(&r) => {
                    return Err(Error::InvalidArgument(format!(
                        "cache conflict for {} at p = {}: cached {r}, new {}",
                        rec.tag, rec.prime, rec.residue
                    )))
                }
                None if fresh.iter().any(|f: &ResidueCacheRecord| f.key() == rec.key()) => {}
                None => fresh.push(rec),
            }
        }
        if fresh.is_empty() {
            return Ok(0);
        }
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        let mut buf = String::new();
        for rec in &fresh {
            buf.push_str(&serde_json::to_string(rec)?);
            buf.push('\n');
        }
        file.write_all(buf.as_bytes())?;
        for rec in &fresh {
            self.records.insert(rec.key(), rec.residue);
        }
        Ok(fresh.len())
    }

    pub fn records(&self) -> impl Iterator<Item = ResidueCacheRecord> + '_ {
        self.records.iter().map(|((tag, params, prime), &residue)| ResidueCacheRecord {
            tag: tag.clone(),
            params: params.clone(),
            prime: *prime,
            residue,
        })
    }

    /// Recompute up to `size` records chosen with a seeded RNG and return
    /// those whose fresh value differs, paired with the fresh value.
    pub fn verify_sample(&self, size: usize, seed: u64) -> Result<Vec<(ResidueCacheRecord, Option<u64>)>> {
        let all: Vec<_> = self.records().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let picked = sample(&mut rng, all.len(), size.min(all.len()));
        let mut bad = Vec::new();
        for i in picked {
            let fresh = recompute(&all[i])?;
            if fresh != Some(all[i].residue) {
                bad.push((all[i].clone(), fresh));
            }
        }
        Ok(bad)
    }
}

/// Parameters of a `gamma_M` cache record.
pub fn gamma_m_params(x: &Rational) -> BTreeMap<String, String> {
    BTreeMap::from([("x".to_string(), x.to_string())])
}
