//! Connected sequences of 2-subsets, their equivalence, and the graph `Γₙ`.
//!
//! Two connected sequences are equivalent exactly when the corresponding
//! products of atoms agree, so equivalence is decided through
//! [`seq_canonical`]. The four local operations are still available as
//! single-step rewrites for testing.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use crate::diagram::{enumerate_all_with_limit, BrauerDiagram, DEFAULT_ENUMERATION_LIMIT};
use crate::presentation::{connected_break, parse_pair_list, Quark, Word};
use crate::{Error, Result, MAX_RANK};

/// A nonempty sequence of 2-subsets of `{1..n}` in which neighbours intersect.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConnectedSequence {
    n: u8,
    items: Vec<Quark>,
}

impl ConnectedSequence {
    pub fn new(n: usize, items: Vec<Quark>) -> Result<Self> {
        let word = Word::new(n, items)?;
        Self::from_word(&word)
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::from_word(&Word::from_pairs(n, pairs)?)
    }

    pub fn from_word(word: &Word) -> Result<Self> {
        if let Some(p) = connected_break(word.quarks()) {
            return Err(Error::NotConnected { position: p });
        }
        Ok(ConnectedSequence {
            n: word.rank() as u8,
            items: word.quarks().to_vec(),
        })
    }

    /// Parses the pair list `(1,2)(2,3)(3,4)`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        Self::from_pairs(n, &parse_pair_list(s)?)
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    pub fn items(&self) -> &[Quark] {
        &self.items
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn to_word(&self) -> Word {
        Word::from_parts(self.rank(), self.items.clone())
    }
}

impl fmt::Display for ConnectedSequence {
    /// `(1,2)(2,3)`; the rank is not part of the text.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in &self.items {
            write!(f, "{q}")?;
        }
        Ok(())
    }
}

/// The corank-2 diagram `σ_{i₁,j₁} … σ_{i_m,j_m}` naming the class of `s`.
pub fn seq_canonical(s: &ConnectedSequence) -> BrauerDiagram {
    s.to_word().phi()
}

pub fn seq_equivalent(a: &ConnectedSequence, b: &ConnectedSequence) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::RankMismatch {
            left: a.rank(),
            right: b.rank(),
        });
    }
    Ok(seq_canonical(a) == seq_canonical(b))
}

/// The four local operations on connected sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SequenceOperation {
    /// `{i,j},{i,j}` ↔ `{i,j}`
    Duplicate,
    /// `{i,j},{j,k},{k,l}` ↔ `{i,j},{i,l},{k,l}` for `i ≠ l`
    Shift,
    /// `{i,j},{j,k},{k,i}` ↔ `{i,j},{k,i}`
    Triangle,
    /// `{i,j},{j,k},{i,j}` ↔ `{i,j}`
    Sandwich,
}

type Pattern = &'static [(usize, usize)];

impl SequenceOperation {
    pub const ALL: [SequenceOperation; 4] = [
        SequenceOperation::Duplicate,
        SequenceOperation::Shift,
        SequenceOperation::Triangle,
        SequenceOperation::Sandwich,
    ];

    fn patterns(self) -> (Pattern, Pattern) {
        match self {
            SequenceOperation::Duplicate => (&[(0, 1), (0, 1)], &[(0, 1)]),
            SequenceOperation::Shift => (&[(0, 1), (1, 2), (2, 3)], &[(0, 1), (0, 3), (2, 3)]),
            SequenceOperation::Triangle => (&[(0, 1), (1, 2), (2, 0)], &[(0, 1), (2, 0)]),
            SequenceOperation::Sandwich => (&[(0, 1), (1, 2), (0, 1)], &[(0, 1)]),
        }
    }

    fn variables(self) -> usize {
        match self {
            SequenceOperation::Duplicate => 2,
            SequenceOperation::Shift => 4,
            SequenceOperation::Triangle | SequenceOperation::Sandwich => 3,
        }
    }

    // every instantiated item must be a 2-subset; (II) also needs i ≠ l
    fn admissible(self, v: &[u8; 4], n: usize) -> bool {
        let in_range = v[..self.variables()]
            .iter()
            .all(|&x| x >= 1 && x as usize <= n);
        let (lhs, rhs) = self.patterns();
        let pairs_ok = lhs.iter().chain(rhs).all(|&(a, b)| v[a] != v[b]);
        in_range && pairs_ok && (self != SequenceOperation::Shift || v[0] != v[3])
    }
}

/// Which side of an operation is replaced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// The longer-or-first listed side is replaced by the other.
    Forward,
    Backward,
}

/// An operation at a position under an explicit binding of `i, j, k, l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SequenceRewrite {
    pub operation: SequenceOperation,
    pub orientation: Orientation,
    pub position: usize,
    pub indices: [u8; 4],
}

impl SequenceRewrite {
    fn source_and_target(&self) -> (Vec<Quark>, Vec<Quark>) {
        let (lhs, rhs) = self.operation.patterns();
        let inst = |p: Pattern| {
            p.iter()
                .map(|&(a, b)| Quark::of(self.indices[a], self.indices[b]))
                .collect()
        };
        match self.orientation {
            Orientation::Forward => (inst(lhs), inst(rhs)),
            Orientation::Backward => (inst(rhs), inst(lhs)),
        }
    }
}

pub fn apply_operation(s: &ConnectedSequence, r: &SequenceRewrite) -> Result<ConnectedSequence> {
    if !r.operation.admissible(&r.indices, s.rank()) {
        return Err(Error::IndicesNotDistinct);
    }
    let (source, target) = r.source_and_target();
    let end = r.position + source.len();
    if end > s.len() || s.items[r.position..end] != source[..] {
        return Err(Error::PatternMismatch {
            position: r.position,
        });
    }
    let mut items = s.items[..r.position].to_vec();
    items.extend(target);
    items.extend_from_slice(&s.items[end..]);
    // a valid rewrite keeps the sequence connected
    ConnectedSequence::new(s.rank(), items)
}

/// Every rewrite applicable to `s`, unbound indices ranging over `{1..n}`.
pub fn applicable_operations(s: &ConnectedSequence) -> Vec<SequenceRewrite> {
    let n = s.rank();
    let mut out = Vec::new();
    for operation in SequenceOperation::ALL {
        let (lhs, rhs) = operation.patterns();
        for (orientation, pattern) in [(Orientation::Forward, lhs), (Orientation::Backward, rhs)] {
            for position in 0..s.len() {
                let Some(window) = s.items.get(position..position + pattern.len()) else {
                    break;
                };
                for binding in bindings(pattern, window, operation.variables(), n) {
                    if operation.admissible(&binding, n) {
                        out.push(SequenceRewrite {
                            operation,
                            orientation,
                            position,
                            indices: binding,
                        });
                    }
                }
            }
        }
    }
    out.sort_by_key(|r| {
        (
            r.position,
            r.operation,
            r.orientation == Orientation::Backward,
            r.indices,
        )
    });
    out.dedup();
    out
}

fn bindings(pattern: Pattern, window: &[Quark], vars: usize, n: usize) -> Vec<[u8; 4]> {
    let mut partial = vec![[0u8; 4]];
    for (&(a, b), q) in pattern.iter().zip(window) {
        let mut next = Vec::new();
        for v in &partial {
            for (x, y) in [
                (q.low() as u8, q.high() as u8),
                (q.high() as u8, q.low() as u8),
            ] {
                if (v[a] == 0 || v[a] == x) && (v[b] == 0 || v[b] == y) {
                    let mut w = *v;
                    w[a] = x;
                    w[b] = y;
                    next.push(w);
                }
            }
        }
        partial = next;
    }
    // variables absent from the matched side
    for slot in 0..vars {
        partial = partial
            .into_iter()
            .flat_map(|v| {
                let choices: Vec<u8> = if v[slot] == 0 {
                    (1..=n as u8).collect()
                } else {
                    vec![v[slot]]
                };
                choices.into_iter().map(move |x| {
                    let mut w = v;
                    w[slot] = x;
                    w
                })
            })
            .collect();
    }
    partial
}

/// Number of equivalence classes of connected sequences, counted as the
/// corank-2 diagrams of `𝔅ₙ`.
pub fn count_classes(n: usize) -> Result<u64> {
    count_classes_with_limit(n, DEFAULT_ENUMERATION_LIMIT)
}

pub fn count_classes_with_limit(n: usize, limit: usize) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    Ok(enumerate_all_with_limit(n, limit)?
        .filter(|pi| pi.corank() == 2)
        .count() as u64)
}

/// Number of classes of connected sequences from `from` to `to`: the
/// corank-2 diagrams with left bracket `from` and right bracket `to`.
pub fn count_paths(n: usize, from: Quark, to: Quark) -> Result<u64> {
    count_paths_with_limit(n, from, to, DEFAULT_ENUMERATION_LIMIT)
}

pub fn count_paths_with_limit(n: usize, from: Quark, to: Quark, limit: usize) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    for q in [from, to] {
        if q.high() > n {
            return Err(Error::InvalidPair {
                i: q.low(),
                j: q.high(),
                n,
            });
        }
    }
    let key = |(i, j): (u8, u8)| Quark::of(i, j);
    Ok(enumerate_all_with_limit(n, limit)?
        .filter(|pi| {
            pi.corank() == 2
                && pi.left_brackets().next().map(key) == Some(from)
                && pi.right_brackets().next().map(key) == Some(to)
        })
        .count() as u64)
}

/// Path-class counts for every pair of endpoints at once, indexed
/// `[colex(from)][colex(to)]`.
pub fn count_paths_all(n: usize, limit: usize) -> Result<Vec<Vec<u64>>> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    let m = n * (n - 1) / 2;
    let mut table = vec![vec![0u64; m]; m];
    for pi in enumerate_all_with_limit(n, limit)?.filter(|pi| pi.corank() == 2) {
        let (a, b) = pi.left_brackets().next().expect("corank 2");
        let (c, d) = pi.right_brackets().next().expect("corank 2");
        table[pair_index(Quark::of(a, b))][pair_index(Quark::of(c, d))] += 1;
    }
    Ok(table)
}

/// Colex rank of `{i, j}`, `i < j`: `C(j-1, 2) + i - 1`.
pub fn pair_index(q: Quark) -> usize {
    let (i, j) = (q.low(), q.high());
    (j - 1) * (j - 2) / 2 + i - 1
}

fn pair_from_index(index: usize) -> Quark {
    let mut j = 2;
    while j * (j - 1) / 2 <= index {
        j += 1;
    }
    Quark::of((index - (j - 1) * (j - 2) / 2 + 1) as u8, j as u8)
}

/// The graph on 2-subsets of `{1..n}` joining intersecting subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaGraph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
}

pub fn gamma_graph(n: usize) -> Result<GammaGraph> {
    if !(2..=MAX_RANK).contains(&n) {
        return Err(Error::InvalidRank(n));
    }
    let m = n * (n - 1) / 2;
    let adjacency = (0..m)
        .map(|a| {
            let p = pair_from_index(a);
            (0..m)
                .filter(|&b| b != a && p.meets(pair_from_index(b)))
                .collect()
        })
        .collect();
    Ok(GammaGraph { n, adjacency })
}

impl GammaGraph {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Vertex `index` as a pair.
    pub fn vertex(&self, index: usize) -> Option<Quark> {
        (index < self.vertex_count()).then(|| pair_from_index(index))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Quark> + '_ {
        (0..self.vertex_count()).map(pair_from_index)
    }

    pub fn index_of(&self, q: Quark) -> Option<usize> {
        (q.high() <= self.n).then(|| pair_index(q))
    }

    pub fn neighbors(&self, index: usize) -> &[usize] {
        &self.adjacency[index]
    }

    pub fn degree(&self, index: usize) -> usize {
        self.adjacency[index].len()
    }

    pub fn is_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency
            .get(a)
            .is_some_and(|adj| adj.binary_search(&b).is_ok())
    }

    /// Reads a vertex path as a connected sequence. Consecutive vertices
    /// must be adjacent or equal; a repeated vertex is the trivial step.
    pub fn path_to_sequence(&self, path: &[usize]) -> Result<ConnectedSequence> {
        let items = path
            .iter()
            .map(|&v| {
                self.vertex(v)
                    .ok_or(Error::Precondition("vertex out of range"))
            })
            .collect::<Result<Vec<_>>>()?;
        ConnectedSequence::new(self.n, items)
    }

    pub fn sequence_to_path(&self, s: &ConnectedSequence) -> Result<Vec<usize>> {
        if s.rank() != self.n {
            return Err(Error::RankMismatch {
                left: self.n,
                right: s.rank(),
            });
        }
        Ok(s.items().iter().map(|&q| pair_index(q)).collect())
    }

    /// Graphviz text for the graph.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph gamma_{} {{", self.n);
        for v in self.vertices() {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for (a, adj) in self.adjacency.iter().enumerate() {
            for &b in adj.iter().filter(|&&b| b > a) {
                let _ = writeln!(
                    out,
                    "  \"{}\" -- \"{}\";",
                    pair_from_index(a),
                    pair_from_index(b)
                );
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;
    use std::string::ToString;

    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::combinatorics::{binomial, connected_class_count, factorial};

    fn seq(n: usize, s: &str) -> ConnectedSequence {
        ConnectedSequence::parse(n, s).unwrap()
    }

    fn random_sequence(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> ConnectedSequence {
        let m = n * (n - 1) / 2;
        let mut items = vec![pair_from_index(rng.gen_range(0..m))];
        for _ in 1..rng.gen_range(1..=max_len) {
            let last = items[items.len() - 1];
            let options: Vec<Quark> = (0..m)
                .map(pair_from_index)
                .filter(|q| q.meets(last))
                .collect();
            items.push(options[rng.gen_range(0..options.len())]);
        }
        ConnectedSequence::new(n, items).unwrap()
    }

    #[test]
    fn construction_and_text() {
        let s = seq(4, "(1,2)(2,3) (4,3)");
        assert_eq!(s.to_string(), "(1,2)(2,3)(3,4)");
        assert_eq!(s.len(), 3);
        assert_eq!(
            ConnectedSequence::parse(4, "(1,2)(3,4)"),
            Err(Error::NotConnected { position: 0 })
        );
        assert!(ConnectedSequence::parse(4, "").is_err());
        assert!(ConnectedSequence::parse(3, "(1,4)").is_err());
    }

    #[test]
    fn canonical_examples() {
        let a = BrauerDiagram::atom(4, 1, 2).unwrap();
        assert_eq!(seq_canonical(&seq(4, "(1,2)")), a);
        assert_eq!(seq_canonical(&seq(4, "(1,2)(2,3)(1,2)")), a);
        assert_eq!(
            seq_canonical(&seq(4, "(1,2)(2,3)(3,4)")),
            seq_canonical(&seq(4, "(1,2)(1,4)(3,4)"))
        );
    }

    #[test]
    fn equivalence_examples() {
        let s = seq(3, "(1,2)(2,3)");
        assert!(seq_equivalent(&s, &s).unwrap());
        assert!(seq_equivalent(&seq(3, "(1,2)(2,3)(3,1)"), &seq(3, "(1,2)(3,1)")).unwrap());
        assert!(!seq_equivalent(&seq(3, "(1,2)"), &seq(3, "(1,3)")).unwrap());
        assert!(seq_equivalent(&seq(3, "(1,2)"), &seq(4, "(1,2)")).is_err());
    }

    #[test]
    fn canonical_images_have_corank_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..2000 {
            let n = rng.gen_range(2..=8);
            assert_eq!(seq_canonical(&random_sequence(&mut rng, n, 10)).corank(), 2);
        }
    }

    #[test]
    fn operation_examples() {
        let r = |operation, orientation, position, idx: [u8; 4]| SequenceRewrite {
            operation,
            orientation,
            position,
            indices: idx,
        };
        let s = seq(4, "(1,2)(2,3)(3,4)");
        let t = apply_operation(
            &s,
            &r(
                SequenceOperation::Shift,
                Orientation::Forward,
                0,
                [1, 2, 3, 4],
            ),
        )
        .unwrap();
        assert_eq!(t, seq(4, "(1,2)(1,4)(3,4)"));
        let u = apply_operation(
            &seq(3, "(1,2)(2,3)(3,1)"),
            &r(
                SequenceOperation::Triangle,
                Orientation::Forward,
                0,
                [1, 2, 3, 0],
            ),
        )
        .unwrap();
        assert_eq!(u, seq(3, "(1,2)(1,3)"));
        assert_eq!(
            apply_operation(
                &s,
                &r(
                    SequenceOperation::Sandwich,
                    Orientation::Forward,
                    0,
                    [1, 2, 3, 0]
                )
            ),
            Err(Error::PatternMismatch { position: 0 })
        );
        // (II) needs i ≠ l
        assert_eq!(
            apply_operation(
                &seq(3, "(1,2)(2,3)(3,1)"),
                &r(
                    SequenceOperation::Shift,
                    Orientation::Forward,
                    0,
                    [1, 2, 3, 1]
                )
            ),
            Err(Error::IndicesNotDistinct)
        );
    }

    #[test]
    fn operations_preserve_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let mut rewrites = 0;
        while rewrites < 10_000 {
            let n = rng.gen_range(2..=6);
            let s = random_sequence(&mut rng, n, 8);
            let ops = applicable_operations(&s);
            let Some(op) = ops.get(rng.gen_range(0..ops.len().max(1))) else {
                continue;
            };
            let t = apply_operation(&s, op).unwrap();
            assert_eq!(seq_canonical(&t), seq_canonical(&s), "{s} via {op:?}");
            rewrites += 1;
        }
    }

    #[test]
    fn class_counts() {
        for (n, expected) in [(2, 1), (3, 9), (4, 72), (5, 600), (6, 5400)] {
            assert_eq!(count_classes(n).unwrap(), expected);
            assert_eq!(expected, connected_class_count(n));
        }
        assert!(count_classes(1).is_err());
        assert!(count_classes(9).is_err());
    }

    #[test]
    fn sampled_classes_stay_within_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for n in 2..=4 {
            let mut images = BTreeSet::new();
            for _ in 0..20_000 {
                images.insert(seq_canonical(&random_sequence(&mut rng, n, 12)));
            }
            assert!(images.len() as u64 <= connected_class_count(n));
            // small ranks are saturated by sampling
            assert_eq!(images.len() as u64, connected_class_count(n), "n = {n}");
        }
    }

    #[test]
    fn path_counts() {
        let q = |i, j| Quark::new(i, j).unwrap();
        assert_eq!(count_paths(4, q(1, 2), q(3, 4)).unwrap(), 2);
        assert_eq!(count_paths(3, q(1, 2), q(1, 2)).unwrap(), 1);
        assert_eq!(count_paths(6, q(2, 5), q(1, 6)).unwrap(), 24);
        assert!(count_paths(3, q(1, 2), q(1, 4)).is_err());
        for n in 2..=6 {
            let table = count_paths_all(n, 8).unwrap();
            let total: u64 = table.iter().flatten().sum();
            assert!(table.iter().flatten().all(|&c| c == factorial(n - 2)));
            assert_eq!(total, binomial(n, 2).pow(2) * factorial(n - 2));
            assert_eq!(total, connected_class_count(n));
            // loops at every vertex
            assert!((0..table.len()).all(|v| table[v][v] == factorial(n - 2)));
        }
    }

    #[test]
    fn pair_indexing() {
        for idx in 0..120 {
            assert_eq!(pair_index(pair_from_index(idx)), idx);
        }
        assert_eq!(pair_from_index(0), Quark::of(1, 2));
        assert_eq!(pair_from_index(1), Quark::of(1, 3));
        assert_eq!(pair_from_index(2), Quark::of(2, 3));
    }

    #[test]
    fn gamma_graph_shape() {
        let g2 = gamma_graph(2).unwrap();
        assert_eq!((g2.vertex_count(), g2.edge_count()), (1, 0));
        let g4 = gamma_graph(4).unwrap();
        assert_eq!(g4.vertex_count(), 6);
        assert!((0..6).all(|v| g4.degree(v) == 4));
        // {1,2} and {3,4} are the only non-neighbours of each other
        let (a, b) = (
            g4.index_of(Quark::of(1, 2)).unwrap(),
            g4.index_of(Quark::of(3, 4)).unwrap(),
        );
        assert!(!g4.is_edge(a, b));
        assert_eq!(g4.edge_count(), 12);
        for n in 2..=7 {
            let g = gamma_graph(n).unwrap();
            assert_eq!(g.vertex_count() as u64, binomial(n, 2));
            assert!((0..g.vertex_count()).all(|v| g.degree(v) == 2 * (n - 2)));
        }
        assert!(gamma_graph(1).is_err());
    }

    #[test]
    fn paths_round_trip() {
        let g = gamma_graph(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..500 {
            let s = random_sequence(&mut rng, 5, 10);
            let path = g.sequence_to_path(&s).unwrap();
            assert!(path
                .windows(2)
                .all(|w| w[0] == w[1] || g.is_edge(w[0], w[1])));
            assert_eq!(g.path_to_sequence(&path).unwrap(), s);
        }
        assert!(g.path_to_sequence(&[0, 9]).is_err());
        assert!(g.path_to_sequence(&[10]).is_err());
    }

    #[test]
    fn dot_export() {
        let dot = gamma_graph(3).unwrap().to_dot();
        assert!(dot.starts_with("graph gamma_3 {"));
        assert_eq!(dot.matches(" -- ").count(), 3);
    }
}
