//! `--config` support: keys of a flat TOML table become flags placed right
//! after the subcommand, so later command-line flags override them.

use crate::error::{CliError, CliResult};
use std::ffi::OsString;
use std::path::PathBuf;

/// Path given to `--config`, if any.
fn config_path(argv: &[OsString]) -> Option<PathBuf> {
    let mut it = argv.iter().skip(1);
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--config" {
            return it.next().map(PathBuf::from);
        }
        if let Some(p) = s.strip_prefix("--config=") {
            return Some(PathBuf::from(p));
        }
    }
    None
}

/// Index of the subcommand token in argv.
fn subcommand_index(argv: &[OsString]) -> Option<usize> {
    let mut i = 1;
    while i < argv.len() {
        let s = argv[i].to_string_lossy();
        if s == "--config" {
            i += 2;
            continue;
        }
        if !s.starts_with('-') {
            return Some(i);
        }
        i += 1;
    }
    None
}

fn table_to_flags(text: &str) -> CliResult<Vec<OsString>> {
    let table: toml::Table =
        text.parse().map_err(|e: toml::de::Error| CliError::Usage(format!("config file: {}", e.message())))?;
    let mut flags = Vec::new();
    for (key, value) in table {
        let name = key.replace('_', "-");
        if name == "config" {
            return Err(CliError::Usage("config files cannot include other config files".into()));
        }
        let text = match value {
            toml::Value::String(s) => s,
            toml::Value::Integer(i) => i.to_string(),
            toml::Value::Float(f) => f.to_string(),
            toml::Value::Boolean(true) => {
                flags.push(format!("--{name}").into());
                continue;
            }
            toml::Value::Boolean(false) => continue,
            other => {
                return Err(CliError::Usage(format!(
                    "config key {key:?} must be a string, number or boolean, got {}",
                    other.type_str()
                )))
            }
        };
        flags.push(format!("--{name}={text}").into());
    }
    Ok(flags)
}

/// argv with the config file's flags spliced in after the subcommand.
pub fn expand(argv: Vec<OsString>) -> CliResult<Vec<OsString>> {
    let Some(path) = config_path(&argv) else {
        return Ok(argv);
    };
    let text = std::fs::read_to_string(&path).map_err(|e| CliError::io(&path, e))?;
    let flags = table_to_flags(&text)?;
    let Some(at) = subcommand_index(&argv) else {
        return Ok(argv);
    };
    let mut out = argv[..=at].to_vec();
    out.extend(flags);
    out.extend_from_slice(&argv[at + 1..]);
    Ok(out)
}
