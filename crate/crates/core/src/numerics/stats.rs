//! Process-wide high-water mark of integer sizes seen while canonicalizing
//! radicands. Only the benchmark reads it.

use std::sync::atomic::{AtomicU64, Ordering};

static PEAK_BITS: AtomicU64 = AtomicU64::new(0);

pub(crate) fn note_bits(bits: u64) {
    PEAK_BITS.fetch_max(bits, Ordering::Relaxed);
}

/// Returns the peak bit length since the last call and resets it.
pub fn take_peak_bits() -> u64 {
    PEAK_BITS.swap(0, Ordering::Relaxed)
}
