//! Check results shared by every verification routine.

use std::time::Duration;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Sampled,
}

/// Outcome of one named check: how many cases ran, how many failed, and the
/// first counterexample (in a deterministic order).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub anchor: String,
    pub mode: Mode,
    pub cases: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip)]
    pub elapsed: Option<Duration>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>, mode: Mode) -> Self {
        CheckReport {
            name: name.into(),
            anchor: anchor.into(),
            mode,
            cases: 0,
            failures: 0,
            counterexample: None,
            note: None,
            elapsed: None,
        }
    }

    /// Records one case; the counterexample text is only built for the first failure.
    pub fn record(&mut self, ok: bool, counterexample: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(counterexample());
            }
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Merges a report over a disjoint range of cases. The earlier range's
    /// counterexample wins, so merging in range order is deterministic.
    pub fn merge(&mut self, other: CheckReport) {
        self.cases += other.cases;
        self.failures += other.failures;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
    }
}

/// Independent random stream for sample `stream` under `seed`, so sampled
/// checks give the same cases regardless of how work is split across threads.
pub fn sample_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
