//! The semigroup `T` on quark generators `τ_{i,j}` and its evaluation into
//! the singular part of the Brauer monoid.
//!
//! Equality in `T` is decided through the evaluation map [`Word::phi`],
//! which is injective on `T`. The defining relations are available as
//! explicit single-step rewrites in [`relations`].

mod normal_form;
pub mod relations;

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::diagram::BrauerDiagram;
use crate::{Error, Result, MAX_RANK};

pub use normal_form::{is_normal_form, normal_form_split, normalize};
pub use relations::{
    applicable_sites, apply_relation, check_all_relations, Direction, Relation, RelationSite,
};

/// An unordered pair `{i, j}` of distinct points, stored with `i < j`.
///
/// As a generator it is the quark `τ_{i,j}`; its image is the atom `σ_{i,j}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quark {
    i: u8,
    j: u8,
}

impl Quark {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == j || i == 0 || j == 0 || i > MAX_RANK || j > MAX_RANK {
            return Err(Error::InvalidPair { i, j, n: MAX_RANK });
        }
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        Ok(Quark {
            i: i as u8,
            j: j as u8,
        })
    }

    pub(crate) fn of(i: u8, j: u8) -> Self {
        debug_assert!(i != j);
        if i < j {
            Quark { i, j }
        } else {
            Quark { i: j, j: i }
        }
    }

    pub fn low(self) -> usize {
        self.i as usize
    }

    pub fn high(self) -> usize {
        self.j as usize
    }

    pub fn contains(self, x: usize) -> bool {
        self.i as usize == x || self.j as usize == x
    }

    /// Whether the two pairs intersect.
    pub fn meets(self, other: Quark) -> bool {
        other.contains(self.low()) || other.contains(self.high())
    }

    /// The endpoint other than `x`, if `x` is an endpoint.
    pub fn other(self, x: usize) -> Option<usize> {
        if self.i as usize == x {
            Some(self.high())
        } else if self.j as usize == x {
            Some(self.low())
        } else {
            None
        }
    }

    /// The image `σ_{i,j}` in `𝔅ₙ`.
    pub fn atom(self, n: usize) -> Result<BrauerDiagram> {
        BrauerDiagram::atom(n, self.low(), self.high())
    }

    fn bits(self) -> u32 {
        (1 << self.i) | (1 << self.j)
    }
}

impl fmt::Display for Quark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// A nonempty word over the quarks of rank `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    n: u8,
    quarks: Vec<Quark>,
}

impl Word {
    pub fn new(n: usize, quarks: Vec<Quark>) -> Result<Self> {
        if n == 0 || n > MAX_RANK {
            return Err(Error::InvalidRank(n));
        }
        if quarks.is_empty() {
            return Err(Error::EmptyWord);
        }
        if let Some(q) = quarks.iter().find(|q| q.high() > n) {
            return Err(Error::InvalidPair {
                i: q.low(),
                j: q.high(),
                n,
            });
        }
        Ok(Word { n: n as u8, quarks })
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let quarks = pairs
            .iter()
            .map(|&(i, j)| Quark::new(i, j).map_err(|_| Error::InvalidPair { i, j, n }))
            .collect::<Result<Vec<_>>>()?;
        Word::new(n, quarks)
    }

    pub fn single(n: usize, q: Quark) -> Result<Self> {
        Word::new(n, alloc::vec![q])
    }

    pub(crate) fn from_parts(n: usize, quarks: Vec<Quark>) -> Self {
        debug_assert!(!quarks.is_empty());
        Word { n: n as u8, quarks }
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    pub fn quarks(&self) -> &[Quark] {
        &self.quarks
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.quarks.len()
    }

    pub fn first(&self) -> Quark {
        self.quarks[0]
    }

    pub fn last(&self) -> Quark {
        self.quarks[self.quarks.len() - 1]
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.n != other.n {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        let mut quarks = self.quarks.clone();
        quarks.extend_from_slice(&other.quarks);
        Ok(Word { n: self.n, quarks })
    }

    /// The evaluation `φ(w)`: the product of the atoms of the letters, left
    /// to right.
    pub fn phi(&self) -> BrauerDiagram {
        let n = self.rank();
        let mut acc = atom_unchecked(n, self.quarks[0]);
        for &q in &self.quarks[1..] {
            acc = acc * atom_unchecked(n, q);
        }
        acc
    }

    /// The anti-involution fixing every quark: the reversed word.
    pub fn star(&self) -> Word {
        let mut quarks = self.quarks.clone();
        quarks.reverse();
        Word { n: self.n, quarks }
    }

    /// Whether consecutive letters always share an index.
    pub fn is_connected(&self) -> bool {
        connected_break(&self.quarks).is_none()
    }

    /// Equality in `T`, decided by comparing `φ`-images.
    pub fn equal_in_t(&self, other: &Word) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(self.phi() == other.phi())
    }
}

pub(crate) fn atom_unchecked(n: usize, q: Quark) -> BrauerDiagram {
    BrauerDiagram::atom(n, q.low(), q.high()).expect("quark within rank")
}

/// Index `p` of the first pair of letters `p, p+1` that do not intersect.
pub(crate) fn connected_break(quarks: &[Quark]) -> Option<usize> {
    quarks.windows(2).position(|w| !w[0].meets(w[1]))
}

pub(crate) fn pairwise_disjoint(quarks: &[Quark]) -> bool {
    let mut used = 0u32;
    for q in quarks {
        if used & q.bits() != 0 {
            return false;
        }
        used |= q.bits();
    }
    true
}

/// The standard idempotent `τ_{i₁,j₁}…τ_{i_k,j_k}` for pairwise disjoint pairs.
pub fn standard_idempotent(n: usize, pairs: &[Quark]) -> Result<Word> {
    if !pairwise_disjoint(pairs) {
        return Err(Error::OverlappingPairs);
    }
    let mut sorted = pairs.to_vec();
    sorted.sort();
    Word::new(n, sorted)
}

/// The unique standard idempotent `L`-related to `x`: its pairs are the
/// right brackets of `x`. `None` for invertible `x`.
pub fn standard_idempotent_for(x: &BrauerDiagram) -> Option<Word> {
    let pairs: Vec<Quark> = x.right_brackets().map(|(i, j)| Quark::of(i, j)).collect();
    if pairs.is_empty() {
        return None;
    }
    Some(Word::from_parts(x.rank(), pairs))
}

/// `γ_{i,j} = τ_{1,2} τ_{1,i} τ_{1,j} τ_{1,2}` for distinct `i, j ∈ {3..n}`.
pub fn gamma_pair(n: usize, i: usize, j: usize) -> Result<Word> {
    if n < 4 || i == j || i < 3 || j < 3 || i > n || j > n {
        return Err(Error::InvalidPair { i, j, n });
    }
    Word::from_pairs(n, &[(1, 2), (1, i), (1, j), (1, 2)])
}

/// `γ_i = γ_{i,i+1}` for `3 ≤ i ≤ n-1`.
pub fn gamma(n: usize, i: usize) -> Result<Word> {
    if n < 4 || i < 3 || i + 1 > n {
        return Err(Error::InvalidPair { i, j: i + 1, n });
    }
    gamma_pair(n, i, i + 1)
}

/// Parses a quark list `(1,2)(2,3)` (whitespace ignored).
pub(crate) fn parse_pair_list(body: &str) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut rest = body.trim();
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(alloc::format!("expected `(` at {rest:?}")))?;
        let (pair, tail) = inner
            .split_once(')')
            .ok_or_else(|| Error::Parse("unterminated pair".into()))?;
        let (a, b) = pair
            .split_once(',')
            .ok_or_else(|| Error::Parse(alloc::format!("pair ({pair}) needs two indices")))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(alloc::format!("bad index {:?}", s.trim())))
        };
        out.push((parse(a)?, parse(b)?));
        rest = tail.trim_start();
    }
    Ok(out)
}

impl fmt::Display for Word {
    /// `n=5: (1,2)(2,3)(1,2)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}: ", self.n)?;
        for q in &self.quarks {
            write!(f, "{q}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, body) = crate::diagram::parse_rank_prefix(s, ':')?;
        Word::from_pairs(n, &parse_pair_list(body)?)
    }
}
