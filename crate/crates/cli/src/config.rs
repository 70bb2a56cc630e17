//! Flat `key = value` configuration files. Keys are long flag names without
//! the leading dashes; `#` starts a comment. Values from the file are placed
//! before the command-line flags, so flags given on the command line win.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};

/// Environment variable naming the default directory for relative output
/// paths.
pub const OUT_DIR_ENV: &str = "DISTGIRTH_OUT_DIR";

pub fn parse(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("config line {}: expected `key = value`", i + 1);
        };
        let key = key.trim().trim_start_matches("--").to_string();
        if key.is_empty() {
            bail!("config line {}: empty key", i + 1);
        }
        if map.insert(key.clone(), value.trim().to_string()).is_some() {
            bail!("config line {}: duplicate key `{key}`", i + 1);
        }
    }
    Ok(map)
}

/// Pulls `--config FILE` (or `--config=FILE`) out of `args`.
pub fn take_config_flag(args: &mut Vec<String>) -> Result<Option<PathBuf>> {
    let mut found = None;
    let mut i = 0;
    while i < args.len() {
        if args[i] == "--config" {
            let Some(path) = args.get(i + 1).cloned() else {
                bail!("--config needs a file");
            };
            args.drain(i..i + 2);
            found = Some(PathBuf::from(path));
        } else if let Some(path) = args[i].strip_prefix("--config=") {
            found = Some(PathBuf::from(path));
            args.remove(i);
        } else {
            i += 1;
        }
    }
    Ok(found)
}

/// Turns config entries into flags for the subcommand. `known` lists the
/// subcommand's long flags with whether each takes a value; entries meant
/// for other subcommands are skipped, entries no subcommand knows are errors.
pub fn to_flags(
    map: &BTreeMap<String, String>,
    known: &[(String, bool)],
    all_known: &[String],
) -> Result<Vec<String>> {
    let mut flags = Vec::new();
    for (key, value) in map {
        match known.iter().find(|(k, _)| k == key) {
            Some((_, true)) => {
                flags.push(format!("--{key}"));
                flags.push(value.clone());
            }
            Some((_, false)) => match value.as_str() {
                "true" | "yes" | "1" => flags.push(format!("--{key}")),
                "false" | "no" | "0" => {}
                _ => bail!("config key `{key}` is a switch; use true or false"),
            },
            None if all_known.contains(key) => {}
            None => bail!("unknown config key `{key}`"),
        }
    }
    Ok(flags)
}

pub fn read(path: &Path) -> Result<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading config {}", path.display()))?;
    parse(&text).with_context(|| format!("in config {}", path.display()))
}

/// Resolves a relative output path against the directory in
/// [`OUT_DIR_ENV`], when set.
pub fn output_path(path: &Path) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() && !dir.is_empty() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}
