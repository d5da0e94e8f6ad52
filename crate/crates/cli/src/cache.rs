//! Append-only result cache: one JSON object per line in `results.jsonl`,
//! keyed by a digest of (graph, operation, arguments).

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use monophonic_core::Graph;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{CliError, Result};
use crate::format::emit_graph;

pub const CACHE_FILE: &str = "results.jsonl";

#[derive(Serialize, Deserialize)]
struct Entry {
    key: String,
    value: Value,
}

pub struct Cache {
    path: PathBuf,
    entries: Mutex<HashMap<String, Value>>,
    file: Mutex<File>,
}

impl Cache {
    /// Opens (creating if needed) the cache under `dir`. Lines that do not
    /// parse, such as a torn final write, are skipped.
    pub fn open(dir: &Path) -> Result<Self> {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        let path = dir.join(CACHE_FILE);
        let mut entries = HashMap::new();
        if path.exists() {
            let f = File::open(&path).map_err(|e| CliError::io(&path, e))?;
            for line in BufReader::new(f).lines() {
                let line = line.map_err(|e| CliError::io(&path, e))?;
                if let Ok(Entry { key, value }) = serde_json::from_str(&line) {
                    entries.insert(key, value);
                }
            }
        }
        let mut file = OpenOptions::new().create(true).append(true).open(&path).map_err(|e| CliError::io(&path, e))?;
        // a torn last line would swallow the next entry
        let torn = std::fs::read(&path).map_err(|e| CliError::io(&path, e))?.last().is_some_and(|&b| b != b'\n');
        if torn {
            writeln!(file).map_err(|e| CliError::io(&path, e))?;
        }
        Ok(Cache { path, entries: Mutex::new(entries), file: Mutex::new(file) })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, key: &str) -> Option<Value> {
        self.entries.lock().expect("cache lock").get(key).cloned()
    }

    /// Records `value` unless the key is already present; returns the stored value.
    pub fn insert(&self, key: &str, value: Value) -> Result<Value> {
        let mut entries = self.entries.lock().expect("cache lock");
        if let Some(existing) = entries.get(key) {
            return Ok(existing.clone());
        }
        let line = serde_json::to_string(&Entry { key: key.to_owned(), value: value.clone() })
            .expect("cache entries serialize");
        let mut file = self.file.lock().expect("cache lock");
        writeln!(file, "{line}").map_err(|e| CliError::io(&self.path, e))?;
        file.flush().map_err(|e| CliError::io(&self.path, e))?;
        entries.insert(key.to_owned(), value.clone());
        Ok(value)
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// SHA-256 of the graph's text form, labels included.
pub fn graph_hash(g: &Graph) -> String {
    hex(&Sha256::digest(emit_graph(g).as_bytes()))
}

pub fn cache_key(graph_hash: Option<&str>, operation: &str, args: &Value) -> String {
    let mut h = Sha256::new();
    h.update(graph_hash.unwrap_or("-").as_bytes());
    h.update([0]);
    h.update(operation.as_bytes());
    h.update([0]);
    h.update(args.to_string().as_bytes());
    hex(&h.finalize())
}
