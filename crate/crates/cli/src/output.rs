//! Output files and the run manifest.
//!
//! Every run writes `manifest.json` next to its outputs. The manifest echoes
//! the resolved configuration, the graph provenance verbatim and the SHA-256
//! of each output; CSV and JSON outputs carry the configuration hash back.

use std::fs;
use std::path::PathBuf;

use ramlab::export::{to_json, Table};
use ramlab::{Error, Result};
use serde::Serialize;
use serde_json::value::RawValue;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const MANIFEST: &str = "manifest.json";

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Serialize)]
struct OutputEntry {
    file: String,
    sha256: String,
}

#[derive(Serialize)]
struct Manifest<'a> {
    tool: &'static str,
    version: &'static str,
    command: &'a str,
    config: &'a Value,
    config_sha256: &'a str,
    provenance: Option<&'a RawValue>,
    outputs: &'a [OutputEntry],
}

pub struct Run {
    dir: PathBuf,
    command: &'static str,
    config: Value,
    config_sha256: String,
    provenance: Option<Box<RawValue>>,
    outputs: Vec<OutputEntry>,
}

impl Run {
    pub fn new(command: &'static str, dir: PathBuf, config: Value, provenance: Option<String>) -> Result<Self> {
        fs::create_dir_all(&dir)?;
        let config_sha256 = sha256_hex(to_json(&config).as_bytes());
        let provenance = provenance
            .map(RawValue::from_string)
            .transpose()
            .map_err(|e| Error::InvariantViolation(format!("provenance is not JSON: {e}")))?;
        Ok(Run { dir, command, config, config_sha256, provenance, outputs: Vec::new() })
    }

    pub fn write_bytes(&mut self, file: &str, bytes: &[u8]) -> Result<()> {
        fs::write(self.dir.join(file), bytes)?;
        self.outputs.push(OutputEntry { file: file.into(), sha256: sha256_hex(bytes) });
        Ok(())
    }

    /// Records a file some other routine already wrote into the directory.
    pub fn record_existing(&mut self, file: &str) -> Result<()> {
        let bytes = fs::read(self.dir.join(file))?;
        self.outputs.push(OutputEntry { file: file.into(), sha256: sha256_hex(&bytes) });
        Ok(())
    }

    pub fn path(&self, file: &str) -> PathBuf {
        self.dir.join(file)
    }

    pub fn write_table(&mut self, file: &str, mut table: Table) -> Result<()> {
        table.meta.insert(0, ("config_sha256".into(), self.config_sha256.clone()));
        self.write_bytes(file, table.to_csv().as_bytes())
    }

    pub fn write_json(&mut self, file: &str, mut value: Value) -> Result<()> {
        if let Value::Object(map) = &mut value {
            map.insert("config_sha256".into(), Value::String(self.config_sha256.clone()));
        }
        self.write_bytes(file, to_json(&value).as_bytes())
    }

    /// Writes the manifest and returns its text.
    pub fn finish(self) -> Result<String> {
        let manifest = Manifest {
            tool: "ramlab",
            version: env!("CARGO_PKG_VERSION"),
            command: self.command,
            config: &self.config,
            config_sha256: &self.config_sha256,
            provenance: self.provenance.as_deref(),
            outputs: &self.outputs,
        };
        let text = to_json(&manifest);
        fs::write(self.dir.join(MANIFEST), &text)?;
        Ok(text)
    }
}
