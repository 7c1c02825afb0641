//! Brauer diagrams: perfect matchings on `{1..n} ∪ {1'..n'}`.
//!
//! Internally every point is an index into a flat array of `2n` partner
//! slots: unprimed `i` is slot `i-1` and primed `i'` is slot `n+i-1`. The
//! public API speaks 1-based [`Point`]s.

mod enumerate;
mod text;

use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::{Error, Result, MAX_RANK};

pub use enumerate::{
    enumerate_all, enumerate_all_with_limit, Enumeration, DEFAULT_ENUMERATION_LIMIT,
};
pub(crate) use text::parse_rank_prefix;

/// A point of `{1..n} ∪ {1'..n'}`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    /// A left pin `i`.
    Unprimed(u8),
    /// A right pin `i'`.
    Primed(u8),
}

impl Point {
    pub fn label(self) -> u8 {
        match self {
            Point::Unprimed(i) | Point::Primed(i) => i,
        }
    }

    pub fn is_primed(self) -> bool {
        matches!(self, Point::Primed(_))
    }

    fn slot(self, n: usize) -> Result<usize> {
        let i = self.label() as usize;
        if i == 0 || i > n {
            return Err(Error::PointOutOfRange { point: self, n });
        }
        Ok(match self {
            Point::Unprimed(_) => i - 1,
            Point::Primed(_) => n + i - 1,
        })
    }

    fn from_slot(slot: usize, n: usize) -> Point {
        if slot < n {
            Point::Unprimed(slot as u8 + 1)
        } else {
            Point::Primed((slot - n) as u8 + 1)
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Unprimed(i) => write!(f, "{i}"),
            Point::Primed(i) => write!(f, "{i}'"),
        }
    }
}

/// The four Green's relations of the Brauer monoid (`J` coincides with `D`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GreenRelation {
    R,
    L,
    H,
    D,
}

impl fmt::Display for GreenRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GreenRelation::R => "R",
            GreenRelation::L => "L",
            GreenRelation::H => "H",
            GreenRelation::D => "D",
        })
    }
}

impl core::str::FromStr for GreenRelation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "R" | "r" => Ok(GreenRelation::R),
            "L" | "l" => Ok(GreenRelation::L),
            "H" | "h" => Ok(GreenRelation::H),
            "D" | "d" | "J" | "j" => Ok(GreenRelation::D),
            other => Err(Error::Parse(alloc::format!(
                "unknown Green relation {other:?}"
            ))),
        }
    }
}

/// An element of the Brauer monoid `𝔅ₙ`.
///
/// Equality, hashing and ordering are structural; two diagrams with the same
/// blocks are equal and serialize identically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BrauerDiagram {
    n: u8,
    // partner[s] is the slot joined to slot s; entries past 2n stay zero
    partner: [u8; 2 * MAX_RANK],
}

fn check_rank(n: usize) -> Result<()> {
    if n == 0 || n > MAX_RANK {
        Err(Error::InvalidRank(n))
    } else {
        Ok(())
    }
}

impl BrauerDiagram {
    /// Builds a diagram from its blocks, in any order.
    pub fn new(n: usize, blocks: &[(Point, Point)]) -> Result<Self> {
        check_rank(n)?;
        if blocks.len() != n {
            return Err(Error::BlockCount {
                expected: n,
                found: blocks.len(),
            });
        }
        const FREE: u8 = u8::MAX;
        let mut partner = [FREE; 2 * MAX_RANK];
        for &(p, q) in blocks {
            let (s, t) = (p.slot(n)?, q.slot(n)?);
            if s == t {
                return Err(Error::DegenerateBlock(p));
            }
            for (slot, point) in [(s, p), (t, q)] {
                if partner[slot] != FREE {
                    return Err(Error::RepeatedPoint(point));
                }
            }
            partner[s] = t as u8;
            partner[t] = s as u8;
        }
        // n distinct blocks of two distinct unused points cover all 2n points
        debug_assert!(partner[..2 * n].iter().all(|&p| p != FREE));
        partner[2 * n..].fill(0);
        Ok(BrauerDiagram {
            n: n as u8,
            partner,
        })
    }

    /// Builds a diagram from a partner table over slots `0..2n`.
    pub fn from_partner_slots(n: usize, slots: &[usize]) -> Result<Self> {
        check_rank(n)?;
        if slots.len() != 2 * n {
            return Err(Error::BlockCount {
                expected: 2 * n,
                found: slots.len(),
            });
        }
        let mut partner = [0u8; 2 * MAX_RANK];
        for (s, &t) in slots.iter().enumerate() {
            let point = Point::from_slot(s, n);
            if t >= 2 * n {
                return Err(Error::Parse(alloc::format!(
                    "partner slot {t} out of range"
                )));
            }
            if t == s {
                return Err(Error::DegenerateBlock(point));
            }
            if slots[t] != s {
                return Err(Error::RepeatedPoint(Point::from_slot(t, n)));
            }
            partner[s] = t as u8;
        }
        Ok(BrauerDiagram {
            n: n as u8,
            partner,
        })
    }

    pub(crate) fn from_raw(n: usize, partner: [u8; 2 * MAX_RANK]) -> Self {
        BrauerDiagram {
            n: n as u8,
            partner,
        }
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_rank(n)?;
        let mut partner = [0u8; 2 * MAX_RANK];
        for i in 0..n {
            partner[i] = (n + i) as u8;
            partner[n + i] = i as u8;
        }
        Ok(BrauerDiagram {
            n: n as u8,
            partner,
        })
    }

    /// The atom `σ_{i,j} = {{i,j},{i',j'},{k,k'}_{k≠i,j}}`.
    pub fn atom(n: usize, i: usize, j: usize) -> Result<Self> {
        check_rank(n)?;
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return Err(Error::InvalidPair { i, j, n });
        }
        let mut d = Self::identity(n)?;
        let (a, b) = (i - 1, j - 1);
        d.partner[a] = b as u8;
        d.partner[b] = a as u8;
        d.partner[n + a] = (n + b) as u8;
        d.partner[n + b] = (n + a) as u8;
        Ok(d)
    }

    /// Embeds a permutation, given as the image list `perm[k-1] = π(k)`, as
    /// the diagram `{{k, π(k)'}}`.
    ///
    /// With the product convention of [`BrauerDiagram::multiply`],
    /// `from_permutation(p) · from_permutation(q) = from_permutation(q ∘ p)`:
    /// composition reads left to right.
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        check_rank(n)?;
        let mut seen = [false; MAX_RANK];
        let mut partner = [0u8; 2 * MAX_RANK];
        for (k, &image) in perm.iter().enumerate() {
            if image == 0 || image > n || seen[image - 1] {
                return Err(Error::NotABijection);
            }
            seen[image - 1] = true;
            partner[k] = (n + image - 1) as u8;
            partner[n + image - 1] = k as u8;
        }
        Ok(BrauerDiagram {
            n: n as u8,
            partner,
        })
    }

    /// The permutation `k ↦ π(k)` of an invertible diagram.
    pub fn to_permutation(&self) -> Option<Vec<usize>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                let p = self.partner[i] as usize;
                (p >= n).then(|| p - n + 1)
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    /// The partner table over slots `0..2n`: point `i` is slot `i-1`, point
    /// `i'` is slot `n+i-1`. Inverse of [`from_partner_slots`](Self::from_partner_slots).
    #[inline]
    pub fn partner_slots(&self) -> &[u8] {
        &self.partner[..2 * self.rank()]
    }

    /// The point joined to `p`.
    pub fn partner(&self, p: Point) -> Result<Point> {
        let n = self.rank();
        Ok(Point::from_slot(self.partner[p.slot(n)?] as usize, n))
    }

    /// Blocks in canonical order: left brackets, then lines (by their
    /// unprimed end), then right brackets; each block smaller point first.
    pub fn blocks(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.left_brackets()
            .map(|(i, j)| (Point::Unprimed(i), Point::Unprimed(j)))
            .chain(
                self.lines()
                    .map(|(i, j)| (Point::Unprimed(i), Point::Primed(j))),
            )
            .chain(
                self.right_brackets()
                    .map(|(i, j)| (Point::Primed(i), Point::Primed(j))),
            )
    }

    /// Left brackets `{i, j}` with `i < j`, sorted.
    pub fn left_brackets(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        let n = self.rank();
        (0..n).filter_map(move |s| {
            let t = self.partner[s] as usize;
            (t < n && s < t).then(|| (s as u8 + 1, t as u8 + 1))
        })
    }

    /// Right brackets `{i', j'}` as label pairs `(i, j)` with `i < j`, sorted.
    pub fn right_brackets(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        let n = self.rank();
        (n..2 * n).filter_map(move |s| {
            let t = self.partner[s] as usize;
            (t >= n && s < t).then(|| ((s - n) as u8 + 1, (t - n) as u8 + 1))
        })
    }

    /// Lines `{i, j'}` as label pairs `(i, j)`, sorted by `i`.
    pub fn lines(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        let n = self.rank();
        (0..n).filter_map(move |s| {
            let t = self.partner[s] as usize;
            (t >= n).then(|| (s as u8 + 1, (t - n) as u8 + 1))
        })
    }

    /// Twice the number of left brackets.
    pub fn corank(&self) -> usize {
        2 * self.left_brackets().count()
    }

    pub fn is_invertible(&self) -> bool {
        self.corank() == 0
    }

    pub fn same_left_brackets(&self, other: &Self) -> bool {
        let n = self.rank();
        n == other.rank()
            && (0..n).all(|s| {
                let (a, b) = (self.partner[s], other.partner[s]);
                ((a as usize) < n) == ((b as usize) < n) && (a as usize >= n || a == b)
            })
    }

    pub fn same_right_brackets(&self, other: &Self) -> bool {
        let n = self.rank();
        n == other.rank()
            && (n..2 * n).all(|s| {
                let (a, b) = (self.partner[s], other.partner[s]);
                ((a as usize) >= n) == ((b as usize) >= n) && ((a as usize) < n || a == b)
            })
    }

    /// Decides Green's relation `rel` using the bracket characterization:
    /// `R` same left brackets, `L` same right brackets, `H` both, `D` equal corank.
    pub fn green_related(&self, other: &Self, rel: GreenRelation) -> Result<bool> {
        self.check_same_rank(other)?;
        Ok(match rel {
            GreenRelation::R => self.same_left_brackets(other),
            GreenRelation::L => self.same_right_brackets(other),
            GreenRelation::H => self.same_left_brackets(other) && self.same_right_brackets(other),
            GreenRelation::D => self.corank() == other.corank(),
        })
    }

    /// Mirror image swapping primed and unprimed points; realizes the
    /// anti-involution (`(ab)ᵀ = bᵀaᵀ`).
    pub fn transpose(&self) -> Self {
        let n = self.rank();
        let mut partner = [0u8; 2 * MAX_RANK];
        let flip = |s: usize| if s < n { s + n } else { s - n };
        for s in 0..2 * n {
            partner[flip(s)] = flip(self.partner[s] as usize) as u8;
        }
        BrauerDiagram { n: self.n, partner }
    }

    fn check_same_rank(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            })
        } else {
            Ok(())
        }
    }

    /// Product `self · other`: the right pins of `self` are glued to the left
    /// pins of `other` and maximal chains through the middle layer become the
    /// blocks of the result. Closed loops in the middle are dropped.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_rank(other)?;
        Ok(self.compose(other).0)
    }

    /// Like [`multiply`](Self::multiply), also returning the number of closed
    /// middle loops discarded by the monoid product.
    pub fn multiply_with_loops(&self, other: &Self) -> Result<(Self, usize)> {
        self.check_same_rank(other)?;
        let (d, visited) = self.compose(other);
        Ok((d, self.count_loops(other, visited)))
    }

    /// Chain composition; returns the product and the bitmask of middle
    /// points lying on open chains.
    #[inline]
    pub(crate) fn compose(&self, other: &Self) -> (Self, u32) {
        let n = self.rank();
        let a = &self.partner;
        let b = &other.partner;
        let mut out = [0u8; 2 * MAX_RANK];
        let mut done = 0u32;
        let mut middle = 0u32;

        // chains starting at a left pin of `self`
        for x in 0..n {
            if done & (1 << x) != 0 {
                continue;
            }
            let mut y = a[x] as usize;
            let end = loop {
                if y < n {
                    break y;
                }
                let m = y - n;
                middle |= 1 << m;
                let z = b[m] as usize;
                if z >= n {
                    break z;
                }
                middle |= 1 << z;
                y = a[n + z] as usize;
            };
            out[x] = end as u8;
            out[end] = x as u8;
            done |= (1 << x) | (1 << end);
        }

        // chains that start and end on right pins of `other`
        for x in n..2 * n {
            if done & (1 << x) != 0 {
                continue;
            }
            let mut y = b[x] as usize;
            let end = loop {
                if y >= n {
                    break y;
                }
                middle |= 1 << y;
                let z = a[n + y] as usize;
                debug_assert!(z >= n, "a chain reaching a left pin was traced from it");
                let m = z - n;
                middle |= 1 << m;
                y = b[m] as usize;
            };
            out[x] = end as u8;
            out[end] = x as u8;
            done |= (1 << x) | (1 << end);
        }

        (
            BrauerDiagram {
                n: self.n,
                partner: out,
            },
            middle,
        )
    }

    fn count_loops(&self, other: &Self, mut visited: u32) -> usize {
        let n = self.rank();
        let mut loops = 0;
        for start in 0..n {
            if visited & (1 << start) != 0 {
                continue;
            }
            loops += 1;
            let mut cur = start;
            loop {
                visited |= 1 << cur;
                let across = self.partner[n + cur] as usize - n;
                visited |= 1 << across;
                cur = other.partner[across] as usize;
                if cur == start {
                    break;
                }
            }
        }
        loops
    }
}

impl Mul for BrauerDiagram {
    type Output = BrauerDiagram;

    /// Panics on rank mismatch; use [`BrauerDiagram::multiply`] to get an error.
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.n, rhs.n, "rank mismatch in Brauer product");
        self.compose(&rhs).0
    }
}

impl<'a> Mul<&'a BrauerDiagram> for &'a BrauerDiagram {
    type Output = BrauerDiagram;

    fn mul(self, rhs: &'a BrauerDiagram) -> BrauerDiagram {
        *self * *rhs
    }
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests;
