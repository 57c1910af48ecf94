//! Content-addressed cache of rendered command output.
//!
//! An entry lives in `<dir>/<key>.json` and stores the output together with
//! its SHA-256 digest. Entries whose digest or key does not match are
//! reported and recomputed.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const ENV_VAR: &str = "ACX_CACHE";

#[derive(Serialize, Deserialize)]
struct Entry {
    body: String,
    digest: String,
    key: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Key over the manifest hash, the metric hash and the command line.
pub fn key(manifest_hash: &str, metric_hash: &str, command: &str) -> String {
    sha256_hex(format!("manifest {manifest_hash}\nmetric {metric_hash}\ncommand {command}\n").as_bytes())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lookup {
    Hit(String),
    Miss,
    /// The entry exists but cannot be trusted; the reason is for the user.
    Corrupt(String),
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `ACX_CACHE` wins over an explicit directory.
    pub fn from_env_or(dir: Option<&Path>) -> Option<Self> {
        match std::env::var_os(ENV_VAR) {
            Some(v) if !v.is_empty() => Some(Cache::new(PathBuf::from(v))),
            _ => dir.map(Cache::new),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn load(&self, key: &str) -> Lookup {
        let path = self.path(key);
        let Ok(text) = fs::read_to_string(&path) else { return Lookup::Miss };
        let entry: Entry = match serde_json::from_str(&text) {
            Ok(e) => e,
            Err(e) => return Lookup::Corrupt(format!("{}: unreadable entry ({e})", path.display())),
        };
        if entry.key != key {
            return Lookup::Corrupt(format!("{}: entry is for key {}", path.display(), entry.key));
        }
        if sha256_hex(entry.body.as_bytes()) != entry.digest {
            return Lookup::Corrupt(format!("{}: digest mismatch", path.display()));
        }
        Lookup::Hit(entry.body)
    }

    /// Writes through a temporary file so readers never see a partial entry.
    pub fn store(&self, key: &str, body: &str) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = Entry { body: body.to_string(), digest: sha256_hex(body.as_bytes()), key: key.to_string() };
        let text = serde_json::to_string_pretty(&entry).expect("entry serializes");
        let tmp = self.dir.join(format!("{key}.tmp{}", std::process::id()));
        let mut f = fs::File::create(&tmp)?;
        f.write_all(text.as_bytes())?;
        f.sync_all()?;
        fs::rename(tmp, self.path(key))
    }
}
