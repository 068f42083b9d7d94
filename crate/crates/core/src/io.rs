//! Instance text files and suite manifests.
//!
//! An instance file has the header `n m` on its first line and the `n`
//! processing times, whitespace separated, after it. Times may come in any
//! order; they are written back sorted non-increasing.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::generate::InstanceClass;
use crate::model::{Instance, ModelError, Time};

pub const MANIFEST_FILE: &str = "manifest.csv";

#[derive(Debug, Error)]
pub enum IoError {
    #[error("empty instance file")]
    Empty,
    #[error("malformed header {0:?}, expected \"n m\"")]
    BadHeader(String),
    #[error("invalid processing time {0:?}")]
    BadTime(String),
    #[error("header announces {expected} jobs, found {found}")]
    JobCount { expected: usize, found: usize },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub fn parse_instance(text: &str) -> Result<Instance, IoError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or(IoError::Empty)?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = fields[..] else {
        return Err(IoError::BadHeader(header.to_string()));
    };
    let n: usize = n
        .parse()
        .map_err(|_| IoError::BadHeader(header.to_string()))?;
    let m: usize = m
        .parse()
        .map_err(|_| IoError::BadHeader(header.to_string()))?;

    let times = lines
        .flat_map(str::split_whitespace)
        .map(|tok| {
            tok.parse::<Time>()
                .map_err(|_| IoError::BadTime(tok.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if times.len() != n {
        return Err(IoError::JobCount {
            expected: n,
            found: times.len(),
        });
    }
    Ok(Instance::new(m, times)?)
}

pub fn format_instance(instance: &Instance) -> String {
    let mut out = format!("{} {}\n", instance.n(), instance.machines());
    let times: Vec<String> = instance.times().iter().map(Time::to_string).collect();
    let _ = writeln!(out, "{}", times.join(" "));
    out
}

pub fn load(path: impl AsRef<Path>) -> Result<Instance, IoError> {
    parse_instance(&fs::read_to_string(path)?)
}

pub fn store(path: impl AsRef<Path>, instance: &Instance) -> Result<(), IoError> {
    fs::write(path, format_instance(instance))?;
    Ok(())
}

/// One generated instance as listed in a suite manifest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    /// File name relative to the suite directory.
    pub file: String,
    pub class: InstanceClass,
    pub a: Time,
    pub b: Time,
    pub m: usize,
    pub n: usize,
    pub seed: u64,
    pub instance_id: usize,
    pub rng: String,
}

pub fn write_manifest(path: impl AsRef<Path>, entries: &[ManifestEntry]) -> Result<(), IoError> {
    let mut w = csv::Writer::from_path(path)?;
    for e in entries {
        w.serialize(e)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_manifest(path: impl AsRef<Path>) -> Result<Vec<ManifestEntry>, IoError> {
    let mut r = csv::Reader::from_path(path)?;
    let entries = r.deserialize().collect::<Result<Vec<ManifestEntry>, _>>()?;
    Ok(entries)
}
