//! On-disk loop corpora: `<dir>/<order>/<hash>.loop` plus
//! `<dir>/<order>/manifest.json`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::loops::CayleyLoop;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub order: usize,
    pub predicate: String,
    pub count: usize,
    pub tool_version: String,
    /// Content hashes of the files, sorted.
    pub files: Vec<String>,
}

/// First 16 hex digits of the SHA-256 of the `.loop` text.
pub fn content_hash(text: &str) -> String {
    hex::encode(&Sha256::digest(text.as_bytes())[..8])
}

fn order_dir(dir: &Path, order: usize) -> PathBuf {
    dir.join(order.to_string())
}

/// Writes one file per loop. Existing `.loop` files in the order directory
/// are removed first so the directory mirrors the manifest.
pub fn corpus_write(dir: &Path, order: usize, predicate: &str, loops: &[CayleyLoop]) -> Result<Manifest> {
    let od = order_dir(dir, order);
    fs::create_dir_all(&od)?;
    for entry in fs::read_dir(&od)? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == "loop") {
            fs::remove_file(path)?;
        }
    }
    let mut files = Vec::with_capacity(loops.len());
    for x in loops {
        if x.order() != order {
            return Err(Error::ManifestMismatch(format!(
                "loop of order {} in an order-{order} corpus",
                x.order()
            )));
        }
        let text = x.to_loop_string();
        let h = content_hash(&text);
        fs::write(od.join(format!("{h}.loop")), &text)?;
        files.push(h);
    }
    files.sort();
    files.dedup();
    let manifest = Manifest {
        order,
        predicate: predicate.to_string(),
        count: files.len(),
        tool_version: TOOL_VERSION.to_string(),
        files,
    };
    let json = serde_json::to_string_pretty(&manifest)? + "\n";
    fs::write(od.join("manifest.json"), json)?;
    Ok(manifest)
}

pub fn read_manifest(dir: &Path, order: usize) -> Result<Manifest> {
    let text = fs::read_to_string(order_dir(dir, order).join("manifest.json"))?;
    Ok(serde_json::from_str(&text)?)
}

/// Reads and checks an order directory: every file hash must match its
/// name and the file set must match the manifest. Loops come back in
/// manifest order.
pub fn corpus_read(dir: &Path, order: usize) -> Result<Vec<CayleyLoop>> {
    let manifest = read_manifest(dir, order)?;
    let od = order_dir(dir, order);
    let mut on_disk = Vec::new();
    for entry in fs::read_dir(&od)? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == "loop") {
            let stem = path
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or_default()
                .to_string();
            on_disk.push(stem);
        }
    }
    on_disk.sort();
    if on_disk != manifest.files || manifest.count != manifest.files.len() || manifest.order != order {
        return Err(Error::ManifestMismatch(format!(
            "{}: manifest lists {} files, directory has {}",
            od.display(),
            manifest.files.len(),
            on_disk.len()
        )));
    }
    manifest
        .files
        .iter()
        .map(|h| {
            let text = fs::read_to_string(od.join(format!("{h}.loop")))?;
            if content_hash(&text) != *h {
                return Err(Error::ManifestMismatch(format!("{h}.loop content hash differs")));
            }
            let x = CayleyLoop::parse(&text)?;
            if x.order() != order {
                return Err(Error::ManifestMismatch(format!("{h}.loop has order {}", x.order())));
            }
            Ok(x)
        })
        .collect()
}

/// Orders present under `dir`, ascending.
pub fn corpus_orders(dir: &Path) -> Result<Vec<usize>> {
    let mut orders: Vec<usize> = fs::read_dir(dir)?
        .filter_map(|e| e.ok())
        .filter(|e| e.path().join("manifest.json").is_file())
        .filter_map(|e| e.file_name().to_str()?.parse().ok())
        .collect();
    orders.sort_unstable();
    Ok(orders)
}
