use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use pcmax_core::generate::{generate, GenSpec, RNG_ID};
use pcmax_core::io::{load, read_manifest, store, write_manifest, ManifestEntry, MANIFEST_FILE};
use pcmax_core::Instance;

pub fn file_name(spec: &GenSpec, n: usize, id: usize) -> String {
    format!("{}_b{}_m{}_n{n}_{id}.txt", spec.class, spec.b, spec.m)
}

/// Generates every instance of `specs` with its manifest entry.
pub fn build_suite(specs: &[GenSpec]) -> Result<Vec<(ManifestEntry, Instance)>> {
    let mut suite = Vec::new();
    for spec in specs {
        for (id, x) in generate(spec)?.into_iter().enumerate() {
            let entry = ManifestEntry {
                file: file_name(spec, x.n(), id),
                class: spec.class,
                a: spec.a,
                b: spec.b,
                m: spec.m,
                n: x.n(),
                seed: spec.seed,
                instance_id: id,
                rng: RNG_ID.to_string(),
            };
            suite.push((entry, x));
        }
    }
    Ok(suite)
}

/// Writes every instance of `specs` into `dir` plus a manifest, returning
/// the manifest entries.
pub fn write_suite(dir: &Path, specs: &[GenSpec]) -> Result<Vec<ManifestEntry>> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let suite = build_suite(specs)?;
    for (e, x) in &suite {
        store(dir.join(&e.file), x)?;
    }
    let entries: Vec<ManifestEntry> = suite.into_iter().map(|(e, _)| e).collect();
    write_manifest(dir.join(MANIFEST_FILE), &entries)?;
    Ok(entries)
}

/// Reads the manifest of `dir` and loads the listed instances in order.
pub fn read_suite(dir: &Path) -> Result<Vec<(ManifestEntry, Instance)>> {
    let manifest = dir.join(MANIFEST_FILE);
    let entries =
        read_manifest(&manifest).with_context(|| format!("reading {}", manifest.display()))?;
    entries
        .into_iter()
        .map(|e| {
            let x = load(dir.join(&e.file)).with_context(|| format!("loading {}", e.file))?;
            Ok((e, x))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use pcmax_core::generate::InstanceClass;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let spec = GenSpec {
            class: InstanceClass::Uniform,
            a: 1,
            b: 50,
            m: 3,
            n: 7,
            seed: 9,
            count: 4,
        };
        let written = write_suite(dir.path(), std::slice::from_ref(&spec)).unwrap();
        assert_eq!(written[2].file, "uniform_b50_m3_n7_2.txt");
        let read = read_suite(dir.path()).unwrap();
        let generated = generate(&spec).unwrap();
        assert_eq!(read.len(), 4);
        for ((e, x), (w, g)) in read.iter().zip(written.iter().zip(&generated)) {
            assert_eq!(e, w);
            assert_eq!(x.times(), g.times());
        }
    }
}
