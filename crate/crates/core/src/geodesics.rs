//! Minimal atom lengths `ls(π)` on the singular part, and the cyclic
//! decomposition of the `H`-class of `σ_{1,2}`.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::decomposition::{atoms, cycle_word, formula_cycles};
use crate::diagram::{enumerate_all_with_limit, BrauerDiagram};
use crate::presentation::{atom_unchecked, Word};
use crate::{Error, Result};

/// Largest rank [`bfs_lengths`] accepts without an explicit limit.
pub const DEFAULT_BFS_LIMIT: usize = 7;

/// `ls` for every diagram of one rank, indexed by [`BrauerDiagram::rank_index`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicTable {
    n: usize,
    // 0 marks the invertible diagrams, where ls is undefined
    dist: Vec<u8>,
}

impl GeodesicTable {
    /// Wraps a distance vector produced elsewhere (a cache or a parallel
    /// search). Entries must be zero exactly on invertible diagrams.
    pub fn from_distances(n: usize, dist: Vec<u8>) -> Result<Self> {
        let total = enumerate_all_with_limit(n, crate::MAX_RANK)?.len();
        if dist.len() != total {
            return Err(Error::BlockCount {
                expected: total,
                found: dist.len(),
            });
        }
        for (pi, &d) in enumerate_all_with_limit(n, crate::MAX_RANK)?.zip(&dist) {
            if (d == 0) != pi.is_invertible() {
                return Err(Error::Precondition(
                    "distance table does not match the singular part",
                ));
            }
        }
        Ok(GeodesicTable { n, dist })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `ls(π)`, or `None` for invertible `π` or a rank mismatch.
    pub fn get(&self, pi: &BrauerDiagram) -> Option<usize> {
        if pi.rank() != self.n {
            return None;
        }
        match self.dist[pi.rank_index() as usize] {
            0 => None,
            d => Some(d as usize),
        }
    }

    /// Raw distances in rank order; zero for invertible diagrams.
    pub fn distances(&self) -> &[u8] {
        &self.dist
    }

    /// Singular diagrams with their lengths, in rank order.
    pub fn iter(&self) -> impl Iterator<Item = (BrauerDiagram, usize)> + '_ {
        self.dist
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(r, &d)| {
                (
                    BrauerDiagram::unrank_unchecked(self.n, r as u64),
                    d as usize,
                )
            })
    }

    pub fn max(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0) as usize
    }

    /// The maximal length and, among the diagrams attaining it, the one with
    /// the smallest text serialization.
    pub fn longest(&self) -> (usize, BrauerDiagram) {
        let max = self.max();
        let witness = self
            .iter()
            .filter(|&(_, d)| d == max)
            .map(|(pi, _)| (pi.to_string(), pi))
            .min()
            .map(|(_, pi)| pi)
            .expect("the singular part is nonempty for n ≥ 2");
        (max, witness)
    }

    /// Number of diagrams at each length; entry 0 counts the invertible ones.
    pub fn histogram(&self) -> Vec<u64> {
        let mut h = vec![0u64; self.max() + 1];
        for &d in &self.dist {
            h[d as usize] += 1;
        }
        h
    }
}

/// Multiplication side for the breadth-first search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

/// Exact `ls` on `𝔅ₙ∖𝒮ₙ` by breadth-first search from the atoms.
pub fn bfs_lengths(n: usize) -> Result<GeodesicTable> {
    bfs_lengths_with(n, DEFAULT_BFS_LIMIT, Side::Right)
}

pub fn bfs_lengths_with(n: usize, limit: usize, side: Side) -> Result<GeodesicTable> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    let total = enumerate_all_with_limit(n, limit)?.len();
    let gens: Vec<BrauerDiagram> = atoms(n).into_iter().map(|q| atom_unchecked(n, q)).collect();
    let mut dist = vec![0u8; total];
    let mut frontier = Vec::new();
    for g in &gens {
        dist[g.rank_index() as usize] = 1;
        frontier.push(*g);
    }
    let mut level = 1u8;
    while !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for x in &frontier {
            for g in &gens {
                let y = match side {
                    Side::Right => *x * *g,
                    Side::Left => *g * *x,
                };
                let slot = &mut dist[y.rank_index() as usize];
                if *slot == 0 {
                    *slot = level;
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    Ok(GeodesicTable { n, dist })
}

/// `max ls` over `𝔅ₙ∖𝒮ₙ` with its witness; see [`GeodesicTable::longest`].
pub fn max_length(n: usize) -> Result<(usize, BrauerDiagram)> {
    Ok(bfs_lengths(n)?.longest())
}

/// The cycle structure of an element `{{1,2},{1',2'},{k,θ(k)'}}` of the
/// `H`-class of `σ_{1,2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicDecomposition {
    pub n: usize,
    /// Nontrivial cycles in the order their letters appear in the word:
    /// each starts at its smallest point and follows `θ⁻¹`.
    pub cycles: Vec<Vec<u8>>,
    /// Fixed points of `θ`.
    pub trivial_count: usize,
    pub nontrivial_count: usize,
}

impl CyclicDecomposition {
    /// `τ_{1,2} τ_{1,c₁} … τ_{1,c_p} τ_{1,2} …`, one block per cycle.
    pub fn word(&self) -> Word {
        cycle_word(self.n, 1, 2, &self.cycles)
    }

    /// `(n-2) - s + c + 1`.
    pub fn len(&self) -> usize {
        self.n - 2 - self.trivial_count + self.nontrivial_count + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

pub fn cyclic_decomposition(pi: &BrauerDiagram) -> Result<CyclicDecomposition> {
    let n = pi.rank();
    let in_h1 = n >= 2
        && pi.corank() == 2
        && pi.left_brackets().next() == Some((1, 2))
        && pi.right_brackets().next() == Some((1, 2));
    if !in_h1 {
        return Err(Error::Precondition(
            "expected an element of the H-class of σ_{1,2}",
        ));
    }
    let mut table = [0u8; crate::MAX_RANK];
    for (i, j) in pi.lines() {
        table[i as usize - 1] = j;
    }
    let cycles = formula_cycles(&table, 3..=n as u8);
    let moved: usize = cycles.iter().map(Vec::len).sum();
    Ok(CyclicDecomposition {
        n,
        trivial_count: n - 2 - moved,
        nontrivial_count: cycles.len(),
        cycles,
    })
}

/// `ls(π) = (n-2) - s + c + 1` on the `H`-class of `σ_{1,2}`.
pub fn ls_via_cycles(pi: &BrauerDiagram) -> Result<usize> {
    Ok(cyclic_decomposition(pi)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{factorial, max_atom_length};
    use crate::diagram::enumerate_all;
    use crate::presentation::Word;

    fn d(s: &str) -> BrauerDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn atoms_have_length_one() {
        for n in 2..=5 {
            let t = bfs_lengths(n).unwrap();
            for (pi, len) in t.iter() {
                let is_atom = pi.corank() == 2
                    && pi.left_brackets().eq(pi.right_brackets())
                    && pi.lines().all(|(i, j)| i == j);
                assert_eq!(len == 1, is_atom, "{pi}");
            }
        }
    }

    #[test]
    fn small_lengths() {
        let t = bfs_lengths(3).unwrap();
        let x = Word::from_pairs(3, &[(1, 2), (2, 3)]).unwrap().phi();
        assert_eq!(t.get(&x), Some(2));
        assert_eq!(t.get(&BrauerDiagram::identity(3).unwrap()), None);
        assert_eq!(t.get(&BrauerDiagram::atom(4, 1, 2).unwrap()), None);
    }

    #[test]
    fn maximal_lengths() {
        for n in 2..=6 {
            let (max, witness) = max_length(n).unwrap();
            assert_eq!(max as u64, max_atom_length(n), "n = {n}");
            assert_eq!(bfs_lengths(n).unwrap().get(&witness), Some(max));
        }
        assert_eq!(max_length(1), Err(Error::InvalidRank(1)));
        assert!(max_length(8).is_err());
    }

    #[test]
    fn histogram_counts_everything() {
        let t = bfs_lengths(4).unwrap();
        let h = t.histogram();
        assert_eq!(h[0], 24);
        assert_eq!(h[1], 6);
        assert_eq!(h.iter().sum::<u64>(), 105);
    }

    #[test]
    fn left_and_right_searches_agree() {
        for n in 2..=5 {
            assert_eq!(
                bfs_lengths_with(n, 7, Side::Left).unwrap(),
                bfs_lengths_with(n, 7, Side::Right).unwrap()
            );
        }
    }

    #[test]
    fn distances_are_minimal_word_lengths() {
        // every length is realized by a word and nothing shorter evaluates there
        let n = 4;
        let t = bfs_lengths(n).unwrap();
        let mut seen = alloc::collections::BTreeMap::new();
        let gens = atoms(n);
        let mut layer: Vec<Vec<crate::presentation::Quark>> =
            gens.iter().map(|&q| vec![q]).collect();
        for len in 1..=t.max() {
            for w in &layer {
                let pi = Word::new(n, w.clone()).unwrap().phi();
                seen.entry(pi).or_insert(len);
            }
            layer = layer
                .iter()
                .flat_map(|w| {
                    gens.iter().map(move |&q| {
                        let mut v = w.clone();
                        v.push(q);
                        v
                    })
                })
                .collect();
        }
        assert_eq!(seen.len(), 81);
        for (pi, len) in seen {
            assert_eq!(t.get(&pi), Some(len));
        }
    }

    #[test]
    fn sanity_bounds_and_symmetry() {
        for n in 2..=5 {
            let t = bfs_lengths(n).unwrap();
            for (pi, len) in t.iter() {
                assert!(len >= pi.corank() / 2);
                assert_eq!(t.get(&pi.transpose()), Some(len));
            }
        }
    }

    #[test]
    fn cyclic_examples() {
        let a = BrauerDiagram::atom(6, 1, 2).unwrap();
        let c = cyclic_decomposition(&a).unwrap();
        assert_eq!((c.cycles.len(), c.trivial_count), (0, 4));
        assert_eq!(c.word(), Word::from_pairs(6, &[(1, 2)]).unwrap());
        assert_eq!(ls_via_cycles(&a), Ok(1));

        let x = d("n=4;{1,2}{1',2'}{3,4'}{4,3'}");
        let c = cyclic_decomposition(&x).unwrap();
        assert_eq!(c.cycles, [vec![3, 4]]);
        assert_eq!(c.len(), 4);
        assert_eq!(c.word().len(), 4);
        assert_eq!(c.word().phi(), x);
        assert_eq!(bfs_lengths(4).unwrap().get(&x), Some(4));

        let y = d("n=5;{1,2}{1',2'}{3,4'}{4,5'}{5,3'}");
        assert_eq!(ls_via_cycles(&y), Ok(5));

        let z = d("n=6;{1,2}{1',2'}{3,4'}{4,3'}{5,6'}{6,5'}");
        let c = cyclic_decomposition(&z).unwrap();
        assert_eq!(c.word().len(), 7);
        assert_eq!(c.word().phi(), z);

        assert!(cyclic_decomposition(&BrauerDiagram::atom(4, 1, 3).unwrap()).is_err());
        assert!(ls_via_cycles(&BrauerDiagram::identity(4).unwrap()).is_err());
    }

    #[test]
    fn cycle_formula_matches_search() {
        for n in 2..=6 {
            let t = bfs_lengths(n).unwrap();
            let mut h1 = 0;
            for pi in enumerate_all(n).unwrap() {
                if let Ok(c) = cyclic_decomposition(&pi) {
                    h1 += 1;
                    assert_eq!(c.word().phi(), pi);
                    assert_eq!(c.word().len(), c.len());
                    assert_eq!(t.get(&pi), Some(c.len()), "{pi}");
                }
            }
            assert_eq!(h1, factorial(n - 2));
        }
    }

    #[test]
    fn table_from_distances() {
        let t = bfs_lengths(3).unwrap();
        assert_eq!(
            GeodesicTable::from_distances(3, t.distances().to_vec()).unwrap(),
            t
        );
        let mut bad = t.distances().to_vec();
        bad[0] = 0;
        bad[1] = 0;
        assert!(GeodesicTable::from_distances(3, bad).is_err());
        assert!(GeodesicTable::from_distances(3, vec![1; 3]).is_err());
    }
}
