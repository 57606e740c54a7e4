//! On-disk cache of intersection numbers.
//!
//! One JSON file per cache directory, tagged with [`FORMAT`] and
//! [`VERSION`]. A file with another version, or one that fails to parse or
//! validate, is recomputed and replaced; it is never reused. Writes go to a
//! temporary file in the same directory which is then renamed over the old
//! one.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use schurq_core::fockvir::{genus_of, intersection_numbers, Entry, IntersectionTable, Provenance};
use schurq_core::Rational;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, InModule, Module};

pub const FORMAT: &str = "schurq-intersection-numbers";
pub const VERSION: u32 = 1;
pub const FILE_NAME: &str = "intersection-numbers.json";
/// Environment variable overriding the cache directory.
pub const DIR_ENV: &str = "SCHURQ_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format: String,
    version: u32,
    max_degree: u32,
    entries: Vec<CachedEntry>,
}

#[derive(Serialize, Deserialize)]
struct CachedEntry {
    degrees: Vec<u32>,
    genus: u32,
    value: String,
    provenance: String,
}

fn provenance_name(p: Provenance) -> &'static str {
    match p {
        Provenance::Seed => "seed",
        Provenance::Recursion => "recursion",
        Provenance::RecursionAndClosedForm => "recursion+closed-form",
    }
}

fn provenance_from(s: &str) -> Option<Provenance> {
    match s {
        "seed" => Some(Provenance::Seed),
        "recursion" => Some(Provenance::Recursion),
        "recursion+closed-form" => Some(Provenance::RecursionAndClosedForm),
        _ => None,
    }
}

/// `--cache-dir`, then `$SCHURQ_CACHE_DIR`, then the user cache directory.
pub fn resolve_dir(flag: Option<&Path>) -> Option<PathBuf> {
    if let Some(dir) = flag {
        return Some(dir.to_path_buf());
    }
    let env = |k: &str| std::env::var_os(k).filter(|v| !v.is_empty()).map(PathBuf::from);
    env(DIR_ENV)
        .or_else(|| env("XDG_CACHE_HOME").map(|d| d.join("schurq")))
        .or_else(|| env("HOME").map(|d| d.join(".cache").join("schurq")))
}

/// Why a cache file was not used.
#[derive(Debug, PartialEq, Eq)]
pub enum Miss {
    Absent,
    TooSmall { cached: u32 },
    Version { found: u32 },
    Corrupt(String),
}

fn encode(table: &IntersectionTable) -> String {
    let file = CacheFile {
        format: FORMAT.into(),
        version: VERSION,
        max_degree: table.max_degree(),
        entries: table
            .entries()
            .map(|(degrees, e)| CachedEntry {
                degrees: degrees.clone(),
                genus: e.genus,
                value: e.value.to_string(),
                provenance: provenance_name(e.provenance).into(),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("cache serializes");
    s.push('\n');
    s
}

fn decode(text: &str) -> Result<IntersectionTable, Miss> {
    #[derive(Deserialize)]
    struct Header {
        format: String,
        version: u32,
    }
    let corrupt = |m: String| Miss::Corrupt(m);
    let header: Header = serde_json::from_str(text).map_err(|e| corrupt(e.to_string()))?;
    if header.format != FORMAT {
        return Err(corrupt(format!("unknown format '{}'", header.format)));
    }
    if header.version != VERSION {
        return Err(Miss::Version { found: header.version });
    }
    let file: CacheFile = serde_json::from_str(text).map_err(|e| corrupt(e.to_string()))?;
    let mut entries = BTreeMap::new();
    for e in file.entries {
        let bad = |what: &str| corrupt(format!("entry {:?}: {what}", e.degrees));
        if !e.degrees.windows(2).all(|w| w[0] <= w[1]) {
            return Err(bad("indices not sorted"));
        }
        if e.degrees.iter().sum::<u32>() > file.max_degree || genus_of(&e.degrees) != Some(e.genus) {
            return Err(bad("violates the dimension constraint"));
        }
        let value: Rational = e.value.parse().map_err(|_| bad("value is not a rational"))?;
        let provenance = provenance_from(&e.provenance).ok_or_else(|| bad("unknown provenance"))?;
        if entries.insert(e.degrees.clone(), Entry { value, genus: e.genus, provenance }).is_some() {
            return Err(bad("duplicate"));
        }
    }
    let table = IntersectionTable::from_entries(file.max_degree, entries);
    let seeds_ok = table.get(&[0, 0, 0]).is_none_or(|e| e.value == Rational::from_integer(1.into()))
        && table.get(&[1]).is_none_or(|e| e.value == Rational::new(1.into(), 24.into()));
    if !seeds_ok {
        return Err(corrupt("seed values altered".into()));
    }
    Ok(table)
}

pub fn load(dir: &Path, max_degree: u32) -> Result<IntersectionTable, Miss> {
    let text = match std::fs::read_to_string(dir.join(FILE_NAME)) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Err(Miss::Absent),
        Err(e) => return Err(Miss::Corrupt(e.to_string())),
    };
    let table = decode(&text)?;
    if table.max_degree() < max_degree {
        return Err(Miss::TooSmall { cached: table.max_degree() });
    }
    Ok(table)
}

pub fn store(dir: &Path, table: &IntersectionTable) -> Result<(), CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(format!("creating {}", dir.display()), e))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .map_err(|e| CliError::io(format!("creating a temporary file in {}", dir.display()), e))?;
    tmp.write_all(encode(table).as_bytes()).map_err(|e| CliError::io("writing the cache", e))?;
    let target = dir.join(FILE_NAME);
    tmp.persist(&target).map_err(|e| CliError::io(format!("replacing {}", target.display()), e.error))?;
    Ok(())
}

/// The table to degree `max_degree`, from the cache when possible.
///
/// Returns the table and, on a cache miss other than absence, a warning.
pub fn table(dir: Option<&Path>, max_degree: u32) -> Result<(IntersectionTable, Option<String>), CliError> {
    let Some(dir) = dir else {
        return Ok((intersection_numbers(max_degree).in_module(Module::Fockvir)?, None));
    };
    let warning = match load(dir, max_degree) {
        Ok(t) => return Ok((t, None)),
        Err(Miss::Absent) | Err(Miss::TooSmall { .. }) => None,
        Err(Miss::Version { found }) => Some(format!("cache version {found} differs from {VERSION}; recomputing")),
        Err(Miss::Corrupt(why)) => Some(format!("cache file is corrupt ({why}); regenerating")),
    };
    let fresh = intersection_numbers(max_degree).in_module(Module::Fockvir)?;
    store(dir, &fresh)?;
    Ok((fresh, warning))
}
