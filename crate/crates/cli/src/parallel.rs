//! Threaded search: one scoped thread per shard, merged in `d` order.

use std::thread;

use pellrep_core::search::{merge, recheck, scan_range, SearchConfig, SearchReport};
use pellrep_core::Result;

/// Same report as [`pellrep_core::search::search`], with shards run
/// concurrently.
pub fn search_threaded(config: &SearchConfig) -> Result<SearchReport> {
    config.validate()?;
    let ranges = config.shard_ranges();
    let parts = thread::scope(|s| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| s.spawn(move || scan_range(config, lo, hi)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .collect::<Result<Vec<_>>>()
    })?;
    let report = merge(config, parts);
    recheck(&report)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use pellrep_core::search::search;

    #[test]
    fn matches_sequential() {
        for shards in [1, 2, 5, 8] {
            let cfg = SearchConfig { shards, ..SearchConfig::new(10, 150, 7) };
            assert_eq!(search_threaded(&cfg).unwrap(), search(&cfg).unwrap());
        }
    }
}
