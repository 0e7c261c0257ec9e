use crate::error::{CliError, CliResult};
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

/// CSV text with 17 significant digits per value.
pub fn csv(header: &[&str], rows: &[Vec<f64>]) -> String {
    let mut s = header.join(",");
    s.push('\n');
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    s
}

/// Rows as a JSON array of objects keyed by the header.
pub fn json_rows(header: &[&str], rows: &[Vec<f64>]) -> CliResult<String> {
    let objs: Vec<BTreeMap<&str, f64>> =
        rows.iter().map(|r| header.iter().copied().zip(r.iter().copied()).collect()).collect();
    to_json(&objs)
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Usage(format!("cannot encode JSON: {e}")))?;
    s.push('\n');
    Ok(s)
}

pub fn write(path: &Path, contents: &str) -> CliResult<()> {
    std::fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub versions: String,
    pub started: String,
    pub finished: String,
    pub checksums: BTreeMap<String, String>,
}

pub fn now() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true)
}

pub fn sha256_hex(path: &Path) -> CliResult<String> {
    let bytes = std::fs::read(path).map_err(|e| CliError::io(path, e))?;
    Ok(hex::encode(Sha256::digest(&bytes)))
}

pub fn manifest_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().map(|n| n.to_os_string()).unwrap_or_default();
    name.push(".manifest.json");
    out.with_file_name(name)
}

impl RunManifest {
    pub fn new(command: &str, args: &impl Serialize, seed: Option<u64>, started: String) -> CliResult<Self> {
        let parameters = match serde_json::to_value(args) {
            Ok(serde_json::Value::Object(m)) => m.into_iter().collect(),
            _ => BTreeMap::new(),
        };
        Ok(RunManifest {
            command: command.to_string(),
            parameters,
            seed,
            versions: format!("sle-duo {}, sle-duo-cli {}", sle_duo::VERSION, env!("CARGO_PKG_VERSION")),
            started,
            finished: String::new(),
            checksums: BTreeMap::new(),
        })
    }

    /// Hashes `outputs` and writes the manifest beside the first of them.
    pub fn finish(mut self, outputs: &[&Path]) -> CliResult<PathBuf> {
        for p in outputs {
            self.checksums.insert(p.display().to_string(), sha256_hex(p)?);
        }
        self.finished = now();
        let path = manifest_path(outputs[0]);
        write(&path, &to_json(&self)?)?;
        Ok(path)
    }
}

/// Plain-text table of named results.
pub fn table(rows: &[(String, bool, String)]) -> String {
    let width = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0);
    let mut s = String::new();
    for (name, ok, detail) in rows {
        let pad = width - name.chars().count();
        let _ = writeln!(s, "{}  {name}{}  {detail}", if *ok { "PASS" } else { "FAIL" }, " ".repeat(pad));
    }
    s
}
