//! Graph data directories: a `manifest.json` naming graph6 files, their
//! expected intersection arrays and SHA-256 digests.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use super::graph6::{self, Graph6Error};
use super::{check_distance_regular, Graph, GraphError};
use crate::array::IntersectionArray;

pub const MANIFEST_FILE: &str = "manifest.json";
/// Environment variable naming the default data directory.
pub const DATA_DIR_ENV: &str = "DRG_DATA_DIR";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    pub file: String,
    pub array: IntersectionArray,
    /// Lowercase hex digest of the file bytes; `None` until a file is added.
    #[serde(default)]
    pub sha256: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub graphs: Vec<ManifestEntry>,
}

#[derive(Debug, Error)]
pub enum DataError {
    #[error("data absent: {0}")]
    Absent(PathBuf),
    #[error("reading {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("manifest {path}: {source}")]
    Manifest { path: PathBuf, source: serde_json::Error },
    #[error("{file}: digest {actual} does not match manifest {expected}")]
    Digest { file: String, expected: String, actual: String },
    #[error("{file}: {source}")]
    Graph6 { file: String, source: Graph6Error },
    #[error("no manifest entry named {0:?}")]
    UnknownEntry(String),
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn read(path: &Path) -> Result<Vec<u8>, DataError> {
    fs::read(path).map_err(|source| match source.kind() {
        io::ErrorKind::NotFound => DataError::Absent(path.to_path_buf()),
        _ => DataError::Io {
            path: path.to_path_buf(),
            source,
        },
    })
}

impl Manifest {
    pub fn load(dir: &Path) -> Result<Self, DataError> {
        let path = dir.join(MANIFEST_FILE);
        let bytes = read(&path)?;
        serde_json::from_slice(&bytes).map_err(|source| DataError::Manifest { path, source })
    }

    pub fn entry(&self, name: &str) -> Result<&ManifestEntry, DataError> {
        self.graphs
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| DataError::UnknownEntry(name.to_string()))
    }
}

/// Reads a graph6 file from disk.
pub fn load_graph6_file(path: &Path) -> Result<Graph, DataError> {
    let bytes = read(path)?;
    graph6::decode(&bytes).map_err(|source| DataError::Graph6 {
        file: path.display().to_string(),
        source,
    })
}

/// Loads an entry's graph after checking its digest when one is pinned.
pub fn load_entry(dir: &Path, entry: &ManifestEntry) -> Result<Graph, DataError> {
    let bytes = read(&dir.join(&entry.file))?;
    if let Some(expected) = &entry.sha256 {
        let actual = sha256_hex(&bytes);
        if !actual.eq_ignore_ascii_case(expected) {
            return Err(DataError::Digest {
                file: entry.file.clone(),
                expected: expected.clone(),
                actual,
            });
        }
    }
    let g = graph6::decode(&bytes).map_err(|source| DataError::Graph6 {
        file: entry.file.clone(),
        source,
    })?;
    Ok(g.with_label(entry.name.clone()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum EntryStatus {
    /// The file is present, its digest matches and it is distance-regular
    /// with the expected array.
    Verified { digest_pinned: bool },
    DataAbsent,
    WrongArray { found: Option<IntersectionArray> },
    Error { message: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub expected: IntersectionArray,
    #[serde(flatten)]
    pub status: EntryStatus,
}

pub fn verify_entry(dir: &Path, entry: &ManifestEntry) -> EntryReport {
    let status = match load_entry(dir, entry) {
        Err(DataError::Absent(_)) => EntryStatus::DataAbsent,
        Err(e) => EntryStatus::Error { message: e.to_string() },
        Ok(g) => match check_distance_regular(&g) {
            Err(GraphError::Disconnected) | Err(GraphError::Trivial) => EntryStatus::WrongArray { found: None },
            Err(e) => EntryStatus::Error { message: e.to_string() },
            Ok(r) if r.array.as_ref() == Some(&entry.array) => EntryStatus::Verified {
                digest_pinned: entry.sha256.is_some(),
            },
            Ok(r) => EntryStatus::WrongArray { found: r.array },
        },
    };
    EntryReport {
        name: entry.name.clone(),
        expected: entry.array.clone(),
        status,
    }
}

pub fn verify_all(dir: &Path) -> Result<Vec<EntryReport>, DataError> {
    let manifest = Manifest::load(dir)?;
    Ok(manifest.graphs.iter().map(|e| verify_entry(dir, e)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::construct::petersen;

    fn scratch(tag: &str) -> PathBuf {
        let dir = std::env::temp_dir().join(format!("drg-manifest-{tag}-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        dir
    }

    fn entry(file: &str, array: &str, sha256: Option<String>) -> ManifestEntry {
        ManifestEntry {
            name: "petersen".into(),
            file: file.into(),
            array: array.parse().unwrap(),
            sha256,
        }
    }

    #[test]
    fn verify_states() {
        let dir = scratch("states");
        let text = graph6::encode(&petersen());
        fs::write(dir.join("p.g6"), format!("{text}\n")).unwrap();
        let digest = sha256_hex(format!("{text}\n").as_bytes());

        let ok = verify_entry(&dir, &entry("p.g6", "{3,2;1,1}", Some(digest.clone())));
        assert_eq!(ok.status, EntryStatus::Verified { digest_pinned: true });

        let unpinned = verify_entry(&dir, &entry("p.g6", "{3,2;1,1}", None));
        assert_eq!(unpinned.status, EntryStatus::Verified { digest_pinned: false });

        let absent = verify_entry(&dir, &entry("missing.g6", "{3,2;1,1}", None));
        assert_eq!(absent.status, EntryStatus::DataAbsent);

        let wrong = verify_entry(&dir, &entry("p.g6", "{3,2;1,3}", Some(digest)));
        assert!(matches!(wrong.status, EntryStatus::WrongArray { found: Some(_) }));

        let tampered = verify_entry(&dir, &entry("p.g6", "{3,2;1,1}", Some("00".repeat(32))));
        assert!(matches!(tampered.status, EntryStatus::Error { .. }));
        fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn manifest_round_trip() {
        let dir = scratch("manifest");
        let m = Manifest {
            graphs: vec![entry("p.g6", "{3,2;1,1}", None)],
        };
        fs::write(dir.join(MANIFEST_FILE), serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(Manifest::load(&dir).unwrap(), m);
        assert!(matches!(Manifest::load(&dir.join("nope")), Err(DataError::Absent(_))));
        assert!(m.entry("nope").is_err());
        fs::remove_dir_all(dir).unwrap();
    }
}
