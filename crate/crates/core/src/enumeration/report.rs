use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::{EnumerationError, Shard};

/// Counters accumulated over (a shard of) the ordered pairs `NC(n)²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub n: usize,
    /// Pairs visited; `C_n²` for a complete run.
    pub total_pairs: u64,
    /// `m^{(1)}_n`: pairs whose meandric system is a single curve.
    pub meanders: u64,
    /// `m^{(irr)}_n`.
    pub irreducible: u64,
    /// `histogram[k-1] = m^{(k)}_n`, pairs with exactly `k` components.
    pub histogram: Vec<u64>,
    pub strictly_noncrossing: u64,
    /// `b*_{n,2}`: pairs with `π ∧ ρ = 0_n`.
    pub b2: u64,
    /// `None` for a complete run.
    pub shard: Option<Shard>,
    pub elapsed: Duration,
    pub worker_count: usize,
}

impl CountReport {
    /// Checks the structural invariants that hold for any shard.
    pub fn check_invariants(&self) -> Result<(), String> {
        let sum: u64 = self.histogram.iter().sum();
        if sum != self.total_pairs {
            return Err(format!(
                "histogram sums to {sum}, expected {}",
                self.total_pairs
            ));
        }
        if self.histogram.first().copied().unwrap_or(0) != self.meanders {
            return Err("histogram[1] differs from the meander count".into());
        }
        if self.irreducible < self.meanders {
            return Err("fewer irreducible systems than meanders".into());
        }
        if self.strictly_noncrossing < self.meanders {
            return Err("fewer strictly non-crossing systems than meanders".into());
        }
        Ok(())
    }

    /// Combines the shards `0..k` of one run into the complete report.
    pub fn merge(parts: &[CountReport]) -> Result<CountReport, EnumerationError> {
        let first = parts.first().ok_or(EnumerationError::EmptyMerge)?;
        let total = match first.shard {
            Some(s) => s.total,
            None if parts.len() == 1 => return Ok(first.clone()),
            None => return Err(EnumerationError::IncompleteMerge),
        };
        let mut seen = vec![false; total];
        let mut merged = CountReport {
            n: first.n,
            total_pairs: 0,
            meanders: 0,
            irreducible: 0,
            histogram: vec![0; first.n],
            strictly_noncrossing: 0,
            b2: 0,
            shard: None,
            elapsed: Duration::ZERO,
            worker_count: 0,
        };
        for part in parts {
            let shard = part.shard.ok_or(EnumerationError::IncompleteMerge)?;
            if part.n != first.n || shard.total != total {
                return Err(EnumerationError::IncompleteMerge);
            }
            if std::mem::replace(&mut seen[shard.index], true) {
                return Err(EnumerationError::IncompleteMerge);
            }
            merged.total_pairs += part.total_pairs;
            merged.meanders += part.meanders;
            merged.irreducible += part.irreducible;
            merged.strictly_noncrossing += part.strictly_noncrossing;
            merged.b2 += part.b2;
            for (a, b) in merged.histogram.iter_mut().zip(&part.histogram) {
                *a += b;
            }
            merged.elapsed += part.elapsed;
            merged.worker_count = merged.worker_count.max(part.worker_count);
        }
        if seen.iter().all(|&s| s) {
            Ok(merged)
        } else {
            Err(EnumerationError::IncompleteMerge)
        }
    }

    /// JSON with every integer as a decimal string. Run metadata (elapsed
    /// time, workers) is only written when `with_metadata` is set, so reports
    /// of identical runs are byte-identical by default.
    pub fn to_json(&self, with_metadata: bool) -> String {
        let wire = ReportWire {
            n: self.n.to_string(),
            total_pairs: self.total_pairs.to_string(),
            meanders: self.meanders.to_string(),
            irreducible: self.irreducible.to_string(),
            histogram: self.histogram.iter().map(u64::to_string).collect(),
            strictly_noncrossing: self.strictly_noncrossing.to_string(),
            b2: self.b2.to_string(),
            shard: self.shard.map(|s| s.to_string()),
            metadata: with_metadata.then(|| MetadataWire {
                elapsed_ms: self.elapsed.as_millis().to_string(),
                worker_count: self.worker_count.to_string(),
            }),
        };
        serde_json::to_string(&wire).expect("plain struct serialises")
    }

    pub fn from_json(s: &str) -> Result<CountReport, EnumerationError> {
        let wire: ReportWire =
            serde_json::from_str(s).map_err(|e| EnumerationError::Format(e.to_string()))?;
        let num = |v: &str| -> Result<u64, EnumerationError> {
            v.parse()
                .map_err(|_| EnumerationError::Format(format!("not an integer: {v:?}")))
        };
        let shard = wire.shard.as_deref().map(str::parse).transpose()?;
        let (elapsed, worker_count) = match &wire.metadata {
            Some(m) => (
                Duration::from_millis(num(&m.elapsed_ms)?),
                num(&m.worker_count)? as usize,
            ),
            None => (Duration::ZERO, 0),
        };
        Ok(CountReport {
            n: num(&wire.n)? as usize,
            total_pairs: num(&wire.total_pairs)?,
            meanders: num(&wire.meanders)?,
            irreducible: num(&wire.irreducible)?,
            histogram: wire
                .histogram
                .iter()
                .map(|h| num(h))
                .collect::<Result<_, _>>()?,
            strictly_noncrossing: num(&wire.strictly_noncrossing)?,
            b2: num(&wire.b2)?,
            shard,
            elapsed,
            worker_count,
        })
    }

    pub const CSV_HEADER: &'static str =
        "n,total_pairs,meanders,irreducible,strictly_noncrossing,b2,histogram";

    /// One CSV row matching [`CSV_HEADER`](Self::CSV_HEADER); the histogram
    /// is `;`-separated.
    pub fn to_csv_row(&self) -> String {
        let hist: Vec<String> = self.histogram.iter().map(u64::to_string).collect();
        format!(
            "{},{},{},{},{},{},{}",
            self.n,
            self.total_pairs,
            self.meanders,
            self.irreducible,
            self.strictly_noncrossing,
            self.b2,
            hist.join(";")
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n = {}", self.n);
        if let Some(s) = self.shard {
            out.push_str(&format!(" (shard {s})"));
        }
        out.push('\n');
        out.push_str(&format!("pairs:                 {}\n", self.total_pairs));
        out.push_str(&format!("meanders:              {}\n", self.meanders));
        out.push_str(&format!("irreducible:           {}\n", self.irreducible));
        out.push_str(&format!(
            "strictly non-crossing: {}\n",
            self.strictly_noncrossing
        ));
        out.push_str(&format!("meet-zero pairs (b2):  {}\n", self.b2));
        for (k, h) in self.histogram.iter().enumerate() {
            out.push_str(&format!("  {:>2} components: {}\n", k + 1, h));
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct ReportWire {
    n: String,
    total_pairs: String,
    meanders: String,
    irreducible: String,
    histogram: Vec<String>,
    strictly_noncrossing: String,
    b2: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    shard: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metadata: Option<MetadataWire>,
}

#[derive(Serialize, Deserialize)]
struct MetadataWire {
    elapsed_ms: String,
    worker_count: String,
}
