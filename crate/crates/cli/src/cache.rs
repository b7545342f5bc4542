use crate::report::{Status, VERSION};
use crate::task::TaskSpec;
use sha2::{Digest, Sha256};
use std::fs;
use std::path::PathBuf;

/// Environment variable naming the cache directory; caching is off when
/// it is unset.
pub const CACHE_ENV: &str = "HYPERLAB_CACHE";

/// Content address of a task: hash of the canonical task serialization
/// and the tool version, so any parameter, seed or version change misses.
pub fn cache_key(task: &TaskSpec) -> String {
    cache_key_with_version(task, VERSION)
}

pub fn cache_key_with_version(task: &TaskSpec, version: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(task.canonical().as_bytes());
    hasher.update(b"\0");
    hasher.update(version.as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn entry_path(dir: &std::path::Path, key: &str) -> PathBuf {
    dir.join(format!("{key}.json"))
}

/// A stored report's bytes, if present and intact: the entry must parse
/// as a JSON object with a valid status field, else it is treated as
/// corrupted and ignored (the caller recomputes and replaces it).
pub fn cache_lookup(dir: &std::path::Path, key: &str) -> Option<Vec<u8>> {
    let bytes = fs::read(entry_path(dir, key)).ok()?;
    let parsed: serde_json::Value = serde_json::from_slice(&bytes).ok()?;
    let status = parsed.get("status")?.as_str()?;
    Status::from_name(status)?;
    Some(bytes)
}

/// Stores a report's exact bytes under the key, writing to a temp file
/// and renaming for crash safety. Reports with error status are not
/// cached. An unwritable directory degrades to a warning on stderr.
pub fn cache_store(dir: &std::path::Path, key: &str, status: Status, bytes: &[u8]) {
    if status == Status::Error {
        return;
    }
    let store = || -> std::io::Result<()> {
        fs::create_dir_all(dir)?;
        let tmp = dir.join(format!(".{key}.tmp.{}", std::process::id()));
        fs::write(&tmp, bytes)?;
        fs::rename(&tmp, entry_path(dir, key))?;
        Ok(())
    };
    if let Err(e) = store() {
        eprintln!("warning: cache directory {} is unwritable ({e}); continuing", dir.display());
    }
}
