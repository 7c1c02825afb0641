//! Multithreaded versions of the exhaustive computations.
//!
//! Every function here returns the same result for any number of threads.

use brauer_core::decomposition::{atoms, decompose};
use brauer_core::diagram::enumerate_all_with_limit;
use brauer_core::geodesics::GeodesicTable;
use brauer_core::BrauerDiagram;
use rayon::prelude::*;

use crate::Result;

/// Runs `f` on a pool of `threads` workers, or on the global pool.
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(k) => Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()?
            .install(f)),
    }
}

/// All diagrams of rank `n`, in no particular order.
pub fn par_diagrams(n: usize, limit: usize) -> Result<impl ParallelIterator<Item = BrauerDiagram>> {
    let total = enumerate_all_with_limit(n, limit)?.len() as u64;
    Ok((0..total)
        .into_par_iter()
        .map(move |r| BrauerDiagram::unrank(n, r).expect("rank in range")))
}

/// Level-synchronous breadth-first search from the atoms by right
/// multiplication. Each level is expanded in parallel and merged in rank
/// order, so the table does not depend on scheduling.
pub fn bfs_lengths(n: usize, limit: usize) -> Result<GeodesicTable> {
    if n < 2 {
        return Err(brauer_core::Error::InvalidRank(n).into());
    }
    let total = enumerate_all_with_limit(n, limit)?.len();
    let gens: Vec<BrauerDiagram> = atoms(n)
        .into_iter()
        .map(|q| q.atom(n))
        .collect::<Result<_, _>>()?;
    let mut dist = vec![0u8; total];
    let mut frontier = gens.clone();
    for g in &gens {
        dist[g.rank_index() as usize] = 1;
    }
    let mut level = 1u8;
    while !frontier.is_empty() {
        level += 1;
        let seen = &dist;
        let mut found: Vec<(u64, BrauerDiagram)> = frontier
            .par_iter()
            .flat_map_iter(|x| {
                gens.iter().filter_map(move |g| {
                    let y = *x * *g;
                    let r = y.rank_index();
                    (seen[r as usize] == 0).then_some((r, y))
                })
            })
            .collect();
        found.par_sort_unstable_by_key(|&(r, _)| r);
        found.dedup_by_key(|&mut (r, _)| r);
        for &(r, _) in &found {
            dist[r as usize] = level;
        }
        frontier = found.into_iter().map(|(_, y)| y).collect();
    }
    Ok(GeodesicTable::from_distances(n, dist)?)
}

/// Checks `φ(decompose(π)) = π` on every singular `π`; returns the number
/// checked and the failures in rank order.
pub fn decompose_round_trip(n: usize, limit: usize) -> Result<(u64, Vec<BrauerDiagram>)> {
    let checked = par_diagrams(n, limit)?
        .filter(|pi| !pi.is_invertible())
        .count() as u64;
    let mut failures: Vec<BrauerDiagram> = par_diagrams(n, limit)?
        .filter(|pi| !pi.is_invertible())
        .filter(|pi| decompose(pi).map(|w| w.phi() != *pi).unwrap_or(true))
        .collect();
    failures.sort_by_key(|d| d.rank_index());
    Ok((checked, failures))
}

/// Number of diagrams with `k` left brackets, for each `k`.
pub fn corank_census(n: usize, limit: usize) -> Result<Vec<u64>> {
    Ok(par_diagrams(n, limit)?
        .fold(
            || vec![0u64; n / 2 + 1],
            |mut acc, pi| {
                acc[pi.corank() / 2] += 1;
                acc
            },
        )
        .reduce(
            || vec![0u64; n / 2 + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use brauer_core::combinatorics::corank_class_size;
    use brauer_core::geodesics;

    #[test]
    fn parallel_search_matches_sequential() {
        for n in 2..=6 {
            let seq = geodesics::bfs_lengths(n).unwrap();
            for threads in [1, 3] {
                let par = with_threads(Some(threads), || bfs_lengths(n, 7))
                    .unwrap()
                    .unwrap();
                assert_eq!(par, seq, "n = {n}, threads = {threads}");
            }
        }
    }

    #[test]
    fn round_trip_and_census() {
        for n in 1..=5 {
            let (checked, failures) = decompose_round_trip(n, 8).unwrap();
            assert_eq!(checked, brauer_core::combinatorics::singular_part_order(n));
            assert!(failures.is_empty());
            let census = corank_census(n, 8).unwrap();
            assert!(census
                .iter()
                .enumerate()
                .all(|(k, &c)| c == corank_class_size(n, k)));
        }
    }

    #[test]
    fn limits_apply() {
        assert!(bfs_lengths(8, 7).is_err());
        assert!(par_diagrams(9, 8).is_err());
    }
}
