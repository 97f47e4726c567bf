//! Optional signature cache, enabled by the `QWALK_CACHE_DIR` environment
//! variable (the only environment knob). Keys cover the input bytes and
//! the full invariant descriptor, so stale hits are impossible.

use sha2::{Digest, Sha256};
use std::fs;
use std::path::PathBuf;

pub const CACHE_ENV: &str = "QWALK_CACHE_DIR";

pub fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).map(PathBuf::from)
}

pub fn cache_key(input: &[u8], descriptor: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(input);
    hasher.update(b"\0");
    hasher.update(descriptor.as_bytes());
    format!("{:x}", hasher.finalize())
}

/// Cached signature lines for a key, if a cache directory is configured
/// and the entry exists.
pub fn lookup(key: &str) -> Option<Vec<String>> {
    let path = cache_dir()?.join(format!("{key}.sigs"));
    let text = fs::read_to_string(path).ok()?;
    Some(text.lines().map(str::to_string).collect())
}

/// Stores signature lines; silently does nothing without a cache dir.
pub fn store(key: &str, lines: &[String]) {
    let Some(dir) = cache_dir() else {
        return;
    };
    if fs::create_dir_all(&dir).is_err() {
        return;
    }
    let _ = fs::write(dir.join(format!("{key}.sigs")), lines.join("\n") + "\n");
}
