//! IO companion to `hamdec-core`: the edge-list text format, cycle files,
//! JSON reports and a wall clock for stage timings.

pub mod format;
pub mod report;

use std::time::Instant;

use hamdec_core::Clock;

/// Wall clock measuring microseconds since its creation.
#[derive(Debug, Clone)]
pub struct WallClock {
    start: Instant,
}

impl WallClock {
    pub fn new() -> Self {
        WallClock {
            start: Instant::now(),
        }
    }
}

impl Default for WallClock {
    fn default() -> Self {
        WallClock::new()
    }
}

impl Clock for WallClock {
    fn now_micros(&self) -> u64 {
        self.start.elapsed().as_micros() as u64
    }
}
