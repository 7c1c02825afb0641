//! The seven defining relations of `T`, as auditable single-step rewrites.
//!
//! In every relation the indices `i, j, k, l` are pairwise different:
//!
//! | # | left side | right side |
//! |---|-----------|------------|
//! | 1 | `τ_{i,j}` | `τ_{j,i}` |
//! | 2 | `τ_{i,j} τ_{i,j}` | `τ_{i,j}` |
//! | 3 | `τ_{i,j} τ_{j,k} τ_{k,l}` | `τ_{i,j} τ_{i,l} τ_{k,l}` |
//! | 4 | `τ_{i,j} τ_{i,k} τ_{j,k}` | `τ_{i,j} τ_{j,k}` |
//! | 5 | `τ_{i,j} τ_{j,k} τ_{i,j}` | `τ_{i,j}` |
//! | 6 | `τ_{i,j} τ_{k,l} τ_{i,k}` | `τ_{i,j} τ_{j,l} τ_{i,k}` |
//! | 7 | `τ_{i,j} τ_{k,l}` | `τ_{k,l} τ_{i,j}` |

use alloc::vec::Vec;
use core::fmt;

use super::{Quark, Word};
use crate::diagram::BrauerDiagram;
use crate::{Error, Result};

/// One of the seven defining relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    Symmetry,
    Idempotence,
    Shift,
    Absorption,
    Sandwich,
    Exchange,
    Commutation,
}

type Pattern = &'static [(usize, usize)];

impl Relation {
    pub const ALL: [Relation; 7] = [
        Relation::Symmetry,
        Relation::Idempotence,
        Relation::Shift,
        Relation::Absorption,
        Relation::Sandwich,
        Relation::Exchange,
        Relation::Commutation,
    ];

    /// The relation's number, 1 through 7.
    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_number(k: u8) -> Option<Relation> {
        Relation::ALL.get((k as usize).checked_sub(1)?).copied()
    }

    /// How many distinct indices the relation involves.
    pub fn arity(self) -> usize {
        match self {
            Relation::Symmetry | Relation::Idempotence => 2,
            Relation::Absorption | Relation::Sandwich => 3,
            Relation::Shift | Relation::Exchange | Relation::Commutation => 4,
        }
    }

    // variables 0..4 stand for i, j, k, l
    fn patterns(self) -> (Pattern, Pattern) {
        match self {
            Relation::Symmetry => (&[(0, 1)], &[(1, 0)]),
            Relation::Idempotence => (&[(0, 1), (0, 1)], &[(0, 1)]),
            Relation::Shift => (&[(0, 1), (1, 2), (2, 3)], &[(0, 1), (0, 3), (2, 3)]),
            Relation::Absorption => (&[(0, 1), (0, 2), (1, 2)], &[(0, 1), (1, 2)]),
            Relation::Sandwich => (&[(0, 1), (1, 2), (0, 1)], &[(0, 1)]),
            Relation::Exchange => (&[(0, 1), (2, 3), (0, 2)], &[(0, 1), (1, 3), (0, 2)]),
            Relation::Commutation => (&[(0, 1), (2, 3)], &[(2, 3), (0, 1)]),
        }
    }

    /// Both sides instantiated at the index tuple `(i, j, k, l)`.
    pub fn sides(self, indices: &[u8]) -> (Vec<Quark>, Vec<Quark>) {
        let (lhs, rhs) = self.patterns();
        (instantiate(lhs, indices), instantiate(rhs, indices))
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.number())
    }
}

fn instantiate(pattern: Pattern, indices: &[u8]) -> Vec<Quark> {
    pattern
        .iter()
        .map(|&(a, b)| Quark::of(indices[a], indices[b]))
        .collect()
}

/// Left side to right side, or back.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

/// A relation applied at a word position under an explicit index binding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RelationSite {
    pub relation: Relation,
    pub direction: Direction,
    /// Position of the first letter of the matched side.
    pub position: usize,
    /// The binding `(i, j, k, l)`; only the first `arity` entries are read.
    pub indices: [u8; 4],
}

impl RelationSite {
    pub fn new(
        relation: Relation,
        direction: Direction,
        position: usize,
        indices: &[usize],
    ) -> Self {
        let mut idx = [0u8; 4];
        for (slot, &v) in idx.iter_mut().zip(indices) {
            *slot = v as u8;
        }
        RelationSite {
            relation,
            direction,
            position,
            indices: idx,
        }
    }

    fn source_and_target(&self) -> (Vec<Quark>, Vec<Quark>) {
        let (lhs, rhs) = self.relation.sides(&self.indices);
        match self.direction {
            Direction::Forward => (lhs, rhs),
            Direction::Backward => (rhs, lhs),
        }
    }
}

fn distinct_in_range(indices: &[u8], n: usize) -> bool {
    indices.iter().all(|&x| x >= 1 && x as usize <= n)
        && indices
            .iter()
            .enumerate()
            .all(|(a, x)| !indices[..a].contains(x))
}

/// Rewrites one occurrence of a relation side inside `w`.
pub fn apply_relation(w: &Word, site: &RelationSite) -> Result<Word> {
    let arity = site.relation.arity();
    if !distinct_in_range(&site.indices[..arity], w.rank()) {
        return Err(Error::IndicesNotDistinct);
    }
    let (source, target) = site.source_and_target();
    let end = site.position + source.len();
    if end > w.len() || w.quarks()[site.position..end] != source[..] {
        return Err(Error::PatternMismatch {
            position: site.position,
        });
    }
    let mut quarks = Vec::with_capacity(w.len() + target.len() - source.len());
    quarks.extend_from_slice(&w.quarks()[..site.position]);
    quarks.extend_from_slice(&target);
    quarks.extend_from_slice(&w.quarks()[end..]);
    Ok(Word::from_parts(w.rank(), quarks))
}

/// Every site at which some relation, in either direction, applies to `w`.
///
/// Indices that the matched side leaves unbound (the `k` of relation 5 read
/// backwards) range over all admissible values.
pub fn applicable_sites(w: &Word) -> Vec<RelationSite> {
    let n = w.rank();
    let mut out = Vec::new();
    for relation in Relation::ALL {
        let (lhs, rhs) = relation.patterns();
        for (direction, pattern) in [(Direction::Forward, lhs), (Direction::Backward, rhs)] {
            for position in 0..w.len() {
                let window = &w.quarks()[position..];
                if window.len() < pattern.len() {
                    break;
                }
                let mut binding = [0u8; 4];
                bind(pattern, &window[..pattern.len()], &mut binding, &mut |b| {
                    complete(b, relation.arity(), n, &mut |full| {
                        out.push(RelationSite {
                            relation,
                            direction,
                            position,
                            indices: *full,
                        });
                    })
                });
            }
        }
    }
    out.sort_by_key(|s| {
        (
            s.position,
            s.relation,
            s.direction == Direction::Backward,
            s.indices,
        )
    });
    out.dedup();
    out
}

// matches pattern letters against quarks, trying both orientations
fn bind(pattern: Pattern, quarks: &[Quark], binding: &mut [u8; 4], emit: &mut dyn FnMut(&[u8; 4])) {
    let Some((&(a, b), rest)) = pattern.split_first() else {
        emit(binding);
        return;
    };
    let q = quarks[0];
    for (x, y) in [(q.i, q.j), (q.j, q.i)] {
        let (old_a, old_b) = (binding[a], binding[b]);
        if (old_a == 0 || old_a == x) && (old_b == 0 || old_b == y) {
            binding[a] = x;
            binding[b] = y;
            bind(rest, &quarks[1..], binding, emit);
            binding[a] = old_a;
            binding[b] = old_b;
        }
    }
}

// fills unbound variables with every admissible value, then checks distinctness
fn complete(binding: &[u8; 4], arity: usize, n: usize, emit: &mut dyn FnMut(&[u8; 4])) {
    match binding[..arity].iter().position(|&v| v == 0) {
        None => {
            if distinct_in_range(&binding[..arity], n) {
                emit(binding);
            }
        }
        Some(slot) => {
            for v in 1..=n as u8 {
                if !binding[..arity].contains(&v) {
                    let mut next = *binding;
                    next[slot] = v;
                    complete(&next, arity, n, emit);
                }
            }
        }
    }
}

/// A relation instance whose two sides evaluate to different diagrams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub indices: Vec<u8>,
    pub lhs: BrauerDiagram,
    pub rhs: BrauerDiagram,
}

/// Outcome of checking one relation over all admissible index tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: Relation,
    /// Number of index tuples checked; zero when the rank is below the arity.
    pub instances: u64,
    pub violations: Vec<Violation>,
}

impl RelationCheck {
    pub fn applicable(&self) -> bool {
        self.instances > 0
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluates both sides of every relation under `φ` for every tuple of
/// pairwise-distinct indices in `{1..n}`.
pub fn check_all_relations(n: usize) -> Result<Vec<RelationCheck>> {
    if !(2..=crate::MAX_RANK).contains(&n) {
        return Err(Error::InvalidRank(n));
    }
    let mut report = Vec::new();
    for relation in Relation::ALL {
        let mut check = RelationCheck {
            relation,
            instances: 0,
            violations: Vec::new(),
        };
        for_each_injection(n, relation.arity(), &mut |indices| {
            check.instances += 1;
            let (lhs, rhs) = relation.sides(indices);
            let (l, r) = (
                Word::from_parts(n, lhs).phi(),
                Word::from_parts(n, rhs).phi(),
            );
            if l != r {
                check.violations.push(Violation {
                    indices: indices.to_vec(),
                    lhs: l,
                    rhs: r,
                });
            }
        });
        report.push(check);
    }
    Ok(report)
}

fn for_each_injection(n: usize, arity: usize, f: &mut dyn FnMut(&[u8])) {
    fn go(n: usize, arity: usize, prefix: &mut Vec<u8>, f: &mut dyn FnMut(&[u8])) {
        if prefix.len() == arity {
            f(prefix);
            return;
        }
        for v in 1..=n as u8 {
            if !prefix.contains(&v) {
                prefix.push(v);
                go(n, arity, prefix, f);
                prefix.pop();
            }
        }
    }
    go(n, arity, &mut Vec::with_capacity(arity), f);
}
