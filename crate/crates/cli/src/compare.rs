use std::collections::BTreeMap;
use std::io::Write;

use anyhow::Result;
use num_traits::ToPrimitive;
use pcmax_core::io::ManifestEntry;
use pcmax_core::model::rational_of;
use pcmax_core::{lower_bounds, Instance, Time};
use rayon::prelude::*;

use crate::algo::{run, Algorithm, RunOptions};

/// One algorithm run on one suite instance.
#[derive(Debug, Clone)]
pub struct Record {
    pub entry: ManifestEntry,
    pub algo: Algorithm,
    pub makespan: Time,
    pub lb_best: String,
    pub ratio_bound_applicable: String,
    pub elapsed_us: u128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Win,
    Draw,
    Loss,
}

/// Head-to-head on one instance, from the point of view of the first algorithm.
#[derive(Debug, Clone)]
pub struct Duel {
    pub outcome: Outcome,
    pub a: Record,
    pub b: Record,
}

fn record(entry: &ManifestEntry, x: &Instance, algo: Algorithm, opts: RunOptions) -> Record {
    let r = run(algo, x, opts);
    Record {
        entry: entry.clone(),
        algo,
        makespan: r.schedule.makespan(),
        lb_best: lower_bounds(x).lb_best.to_string(),
        ratio_bound_applicable: r.ceiling.map(|c| c.to_string()).unwrap_or_default(),
        elapsed_us: r.elapsed.as_micros(),
    }
}

/// Runs both algorithms on every instance. Output order follows `suite`.
pub fn duel(
    suite: &[(ManifestEntry, Instance)],
    a: Algorithm,
    b: Algorithm,
    opts: RunOptions,
) -> Vec<Duel> {
    suite
        .par_iter()
        .map(|(e, x)| {
            let (ra, rb) = (record(e, x, a, opts), record(e, x, b, opts));
            let outcome = match ra.makespan.cmp(&rb.makespan) {
                std::cmp::Ordering::Less => Outcome::Win,
                std::cmp::Ordering::Equal => Outcome::Draw,
                std::cmp::Ordering::Greater => Outcome::Loss,
            };
            Duel {
                outcome,
                a: ra,
                b: rb,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub class: String,
    pub a: Time,
    pub b: Time,
    pub m: usize,
    pub instances: usize,
    pub wins: usize,
    pub draws: usize,
    pub losses: usize,
    /// Mean of `makespan_a / makespan_b`.
    pub mean_ratio: f64,
}

impl Row {
    pub fn pct(&self, count: usize) -> f64 {
        100.0 * count as f64 / self.instances as f64
    }
}

/// Aggregates duels per (class, a, b, m).
pub fn table(duels: &[Duel]) -> Vec<Row> {
    let mut groups: BTreeMap<(&str, Time, Time, usize), Vec<&Duel>> = BTreeMap::new();
    for d in duels {
        let e = &d.a.entry;
        groups
            .entry((e.class.as_str(), e.a, e.b, e.m))
            .or_default()
            .push(d);
    }
    groups
        .into_iter()
        .map(|((class, a, b, m), ds)| {
            let count = |o| ds.iter().filter(|d| d.outcome == o).count();
            let ratio_sum: f64 = ds
                .iter()
                .map(|d| {
                    (rational_of(d.a.makespan) / rational_of(d.b.makespan))
                        .to_f64()
                        .unwrap_or(f64::NAN)
                })
                .sum();
            Row {
                class: class.to_string(),
                a,
                b,
                m,
                instances: ds.len(),
                wins: count(Outcome::Win),
                draws: count(Outcome::Draw),
                losses: count(Outcome::Loss),
                mean_ratio: ratio_sum / ds.len() as f64,
            }
        })
        .collect()
}

pub fn write_table(out: &mut impl Write, rows: &[Row], a: Algorithm, b: Algorithm) -> Result<()> {
    writeln!(out, "{a} vs {b}")?;
    writeln!(
        out,
        "{:<12} {:>5} {:>6} {:>3} {:>4} {:>13} {:>13} {:>13} {:>9}",
        "class", "a", "b", "m", "inst", "wins", "draws", "losses", "mean a/b"
    )?;
    for r in rows {
        let cell = |c: usize| format!("{c} ({:.0}%)", r.pct(c));
        writeln!(
            out,
            "{:<12} {:>5} {:>6} {:>3} {:>4} {:>13} {:>13} {:>13} {:>9.5}",
            r.class,
            r.a,
            r.b,
            r.m,
            r.instances,
            cell(r.wins),
            cell(r.draws),
            cell(r.losses),
            r.mean_ratio
        )?;
    }
    Ok(())
}

pub fn write_csv(out: impl Write, duels: &[Duel], timing: bool) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "class",
        "a",
        "b",
        "m",
        "n",
        "instance_id",
        "algo",
        "makespan",
        "lb_best",
        "ratio_bound_applicable",
        "elapsed_us",
    ])?;
    for r in duels.iter().flat_map(|d| [&d.a, &d.b]) {
        let e = &r.entry;
        w.write_record([
            e.class.as_str().to_string(),
            e.a.to_string(),
            e.b.to_string(),
            e.m.to_string(),
            e.n.to_string(),
            e.instance_id.to_string(),
            r.algo.to_string(),
            r.makespan.to_string(),
            r.lb_best.clone(),
            r.ratio_bound_applicable.clone(),
            if timing {
                r.elapsed_us.to_string()
            } else {
                String::new()
            },
        ])?;
    }
    w.flush()?;
    Ok(())
}
