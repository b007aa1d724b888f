//! Shared inputs for the benchmarks.

use nagumo_atlas::Word;

/// Words whose boundaries the region benchmarks trace.
pub fn region_words() -> Vec<Word> {
    ["01", "0a", "011", "0a11", "0a1a1"]
        .iter()
        .map(|s| s.parse().expect("valid word"))
        .collect()
}

/// A coarse symmetric detuning grid.
pub fn coarse_grid() -> Vec<f64> {
    nagumo_atlas::regions::uniform_grid(0.05, 0.95, 19)
}
