use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use rps_core::words::InstanceSpec;

use crate::json;
use crate::pipeline::{solve_instance, Proposition, SolveOptions};

/// Environment variable overriding the cache location.
pub const CACHE_ENV: &str = "RPS_CACHE_DIR";

/// Solved propositions on disk, one JSON file per key.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    /// `$RPS_CACHE_DIR`, else `$XDG_CACHE_HOME/rps`, else `$HOME/.cache/rps`.
    pub fn default_dir() -> PathBuf {
        let var = |k| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
        if let Some(dir) = var(CACHE_ENV) {
            return dir;
        }
        if let Some(xdg) = var("XDG_CACHE_HOME") {
            return xdg.join("rps");
        }
        match var("HOME") {
            Some(home) => home.join(".cache").join("rps"),
            None => std::env::temp_dir().join("rps-cache"),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Hex SHA-256 of the instance, the options and the crate version.
    pub fn key(spec: &InstanceSpec, opts: &SolveOptions) -> String {
        let mut h = Sha256::new();
        h.update(spec.canonical_key().as_bytes());
        h.update(format!("|{:?}|", spec.lettering()).as_bytes());
        h.update(serde_json::to_string(opts).expect("options serialize").as_bytes());
        h.update(crate::VERSION.as_bytes());
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A corrupt entry is logged and treated as a miss.
    pub fn load(&self, key: &str) -> Option<Proposition> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        match json::from_str(&text) {
            Ok(p) => Some(p),
            Err(e) => {
                log::warn!("ignoring corrupt cache entry {key}: {e}");
                None
            }
        }
    }

    /// Write to a temporary file in the cache directory, then rename over
    /// the entry.
    pub fn store(&self, key: &str, p: &Proposition) -> io::Result<()> {
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(json::to_string(p).as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(self.path(key)).map_err(|e| e.error)?;
        Ok(())
    }
}

/// Solve through the cache when one is given. Store failures are logged.
pub fn solve_cached(spec: &InstanceSpec, opts: &SolveOptions, cache: Option<&Cache>) -> Proposition {
    let Some(cache) = cache else { return solve_instance(spec, opts) };
    let key = Cache::key(spec, opts);
    if let Some(p) = cache.load(&key) {
        log::debug!("cache hit for {}", spec.canonical_key());
        return p;
    }
    let p = solve_instance(spec, opts);
    if let Err(e) = cache.store(&key, &p) {
        log::warn!("could not write cache entry {key}: {e}");
    }
    p
}
