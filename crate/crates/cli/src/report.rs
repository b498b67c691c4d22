//! The JSON report schema and the on-disk cache.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};

use anyhow::Result;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use ufo7::simple::{simple_report, SimpleReport};
use ufo7::weights::{Table1Row, WeightParams};
use ufo7::CycNum;

pub const CACHE_TAG: &str = concat!("ufo7-report-", env!("CARGO_PKG_VERSION"), "-1");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub family: u32,
    pub lambda1: CycNum,
    pub lambda2: CycNum,
    pub dim: usize,
    pub max_degree: [i32; 2],
    pub graded_dims: Vec<[i64; 3]>,
    pub hw_weight: [CycNum; 2],
    pub phi_family: u32,
}

impl From<&SimpleReport> for ReportJson {
    fn from(r: &SimpleReport) -> Self {
        ReportJson {
            family: r.family.index(),
            lambda1: r.lambda1.clone(),
            lambda2: r.lambda2.clone(),
            dim: r.dim,
            max_degree: [r.max_degree.b1, r.max_degree.b2],
            graded_dims: r
                .graded_dims
                .iter()
                .map(|(d, k)| [d.b1 as i64, d.b2 as i64, *k as i64])
                .collect(),
            hw_weight: [r.hw_weight.0.clone(), r.hw_weight.1.clone()],
            phi_family: r.phi_family.index(),
        }
    }
}

impl ReportJson {
    pub fn matches(&self, row: &Table1Row) -> bool {
        self.family == row.family.index()
            && self.dim == row.dim
            && self.max_degree == [row.max_degree.b1, row.max_degree.b2]
            && self.phi_family == row.phi_family.index()
    }
}

/// Computes reports, optionally through a directory of cached JSON files.
pub struct Engine {
    cache: Option<PathBuf>,
    pub hits: AtomicUsize,
    pub computed: AtomicUsize,
}

pub fn cache_key(p: &WeightParams) -> String {
    let text = format!(
        "{CACHE_TAG}\n{}\n{}\n{}\n{}\n{}",
        p.lg1,
        p.lg2,
        p.ls1,
        p.ls2,
        p.q.entry(1, 2)
    );
    hex::encode(Sha256::digest(text.as_bytes()))
}

impl Engine {
    pub fn new(cache: Option<PathBuf>) -> Result<Self> {
        if let Some(dir) = &cache {
            fs::create_dir_all(dir)?;
        }
        Ok(Engine {
            cache,
            hits: AtomicUsize::new(0),
            computed: AtomicUsize::new(0),
        })
    }

    pub fn report(&self, p: &WeightParams) -> Result<ReportJson> {
        let path = self.cache.as_ref().map(|d| d.join(format!("{}.json", cache_key(p))));
        if let Some(r) = path.as_deref().and_then(read_cached) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return Ok(r);
        }
        let r = ReportJson::from(&simple_report(p)?);
        self.computed.fetch_add(1, Ordering::Relaxed);
        if let Some(path) = path {
            write_atomic(&path, &serde_json::to_string(&r)?)?;
        }
        Ok(r)
    }

    pub fn log_cache(&self) {
        if self.cache.is_some() {
            eprintln!(
                "cache: {} hit(s), {} computed",
                self.hits.load(Ordering::Relaxed),
                self.computed.load(Ordering::Relaxed)
            );
        }
    }
}

fn read_cached(path: &Path) -> Option<ReportJson> {
    let text = fs::read_to_string(path).ok()?;
    serde_json::from_str(&text).ok()
}

fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let dir = path.parent().expect("cache files live in a directory");
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use ufo7::weights::{representative, FamilyId};

    #[test]
    fn json_roundtrip_is_byte_identical() {
        let p = representative(FamilyId::new(18).unwrap());
        let r = ReportJson::from(&simple_report(&p).unwrap());
        let text = serde_json::to_string_pretty(&r).unwrap();
        let back: ReportJson = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
        assert!(text.starts_with("{\n  \"family\": 18,\n  \"lambda1\": \"-z^2\""));
    }

    #[test]
    fn keys_depend_on_the_split() {
        let p = representative(FamilyId::new(2).unwrap());
        let mut q = p.clone();
        q.ls1 = CycNum::from_int(2);
        assert_ne!(cache_key(&p), cache_key(&q));
        assert_eq!(cache_key(&p).len(), 64);
    }
}
