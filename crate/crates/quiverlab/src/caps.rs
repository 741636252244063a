//! Desk-scale size caps. `QUIVERLAB_MAX_DIM` overrides both defaults.

use std::sync::OnceLock;

const DEFAULT_SERIES_CAP: usize = 10;
const DEFAULT_FLAG_CAP: usize = 8;

fn env_override() -> Option<usize> {
    static CACHE: OnceLock<Option<usize>> = OnceLock::new();
    *CACHE.get_or_init(|| {
        std::env::var("QUIVERLAB_MAX_DIM").ok().and_then(|v| v.trim().parse().ok())
    })
}

/// Maximum truncation degree for the power-series operations.
pub fn series_cap() -> usize {
    env_override().unwrap_or(DEFAULT_SERIES_CAP)
}

/// Maximum total dimension for exhaustive flag enumeration.
pub fn flag_cap() -> usize {
    env_override().unwrap_or(DEFAULT_FLAG_CAP)
}
