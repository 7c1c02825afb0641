//! Factorization of singular diagrams into atoms.
//!
//! Elements of corank 2 in the `H`-class of an atom are written through the
//! cycles of their permutation part. Any other corank-2 element is moved into
//! such an `H`-class by a two-atom bridge, and higher coranks peel off their
//! left brackets as a prefix of atoms. The factorizations are not minimal;
//! see [`crate::geodesics`] for exact lengths.

use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{enumerate_all_with_limit, BrauerDiagram, Point};
use crate::presentation::{atom_unchecked, Quark, Word};
use crate::{Error, Result};

/// A diagram together with a word of atoms evaluating to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomFactorization {
    pub target: BrauerDiagram,
    pub factors: Word,
}

impl AtomFactorization {
    pub fn new(target: BrauerDiagram) -> Result<Self> {
        Ok(AtomFactorization {
            target,
            factors: decompose(&target)?,
        })
    }

    /// Re-evaluates the factors and compares with the target.
    pub fn verify(&self) -> bool {
        self.factors.phi() == self.target
    }
}

// lines[i-1] = j for a line {i, j'}, 0 otherwise
fn line_table(pi: &BrauerDiagram) -> [u8; crate::MAX_RANK] {
    let mut table = [0u8; crate::MAX_RANK];
    for (i, j) in pi.lines() {
        table[i as usize - 1] = j;
    }
    table
}

/// Nontrivial cycles of the permutation `θ` given by `table` on `points`,
/// listed in the order used by the cycle formula.
///
/// The word `σ_{u,c₁} σ_{u,c₂} … σ_{u,c_p}` between two copies of `σ_{u,v}`
/// joins `c_{a+1}` to `c_a'` and `c₁` to `c_p'`, so a cycle of `θ` is read
/// against the direction of `θ`: `c, θ⁻¹(c), θ⁻²(c), …`, starting from its
/// smallest element. Cycles come sorted by smallest element.
pub(crate) fn formula_cycles(table: &[u8], points: impl Iterator<Item = u8>) -> Vec<Vec<u8>> {
    let mut inverse = [0u8; crate::MAX_RANK + 1];
    let mut members = Vec::new();
    for p in points {
        inverse[table[p as usize - 1] as usize] = p;
        members.push(p);
    }
    members.sort_unstable();
    let mut seen = [false; crate::MAX_RANK + 1];
    let mut cycles = Vec::new();
    for &start in &members {
        if seen[start as usize] || table[start as usize - 1] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut c = start;
        while !seen[c as usize] {
            seen[c as usize] = true;
            cycle.push(c);
            c = inverse[c as usize];
        }
        cycles.push(cycle);
    }
    cycles
}

/// The cycle-formula word for an element sharing its left and right
/// bracket `{u, v}` (`u < v`) with the atom `σ_{u,v}`.
pub fn decompose_group_corank2(pi: &BrauerDiagram) -> Result<Word> {
    let (u, v) = group_bracket(pi).ok_or(Error::Precondition(
        "expected corank 2 with equal left and right brackets",
    ))?;
    let table = line_table(pi);
    let cycles = formula_cycles(&table, (1..=pi.rank() as u8).filter(|&k| k != u && k != v));
    Ok(cycle_word(pi.rank(), u, v, &cycles))
}

pub(crate) fn cycle_word(n: usize, u: u8, v: u8, cycles: &[Vec<u8>]) -> Word {
    let base = Quark::of(u, v);
    let mut quarks = vec![base];
    for cycle in cycles {
        quarks.extend(cycle.iter().map(|&c| Quark::of(u, c)));
        quarks.push(base);
    }
    Word::from_parts(n, quarks)
}

fn group_bracket(pi: &BrauerDiagram) -> Option<(u8, u8)> {
    if pi.corank() != 2 {
        return None;
    }
    let left = pi.left_brackets().next()?;
    (pi.right_brackets().next()? == left).then_some(left)
}

/// An atom factorization of a corank-2 element whose first letter is its
/// left bracket.
pub fn decompose_corank2(pi: &BrauerDiagram) -> Result<Word> {
    if pi.corank() != 2 {
        return Err(Error::Precondition("expected corank 2"));
    }
    if group_bracket(pi).is_some() {
        return decompose_group_corank2(pi);
    }
    let n = pi.rank();
    let (a, b) = pi.left_brackets().next().expect("corank 2");
    let (c, d) = pi.right_brackets().next().expect("corank 2");
    // orientations of the left bracket {u, v} and right bracket {f, g}
    let (u, v, f, g) = [(a, b), (b, a)]
        .into_iter()
        .flat_map(|(u, v)| [(u, v, c, d), (u, v, d, c)])
        .filter(|&(_, v, f, _)| v != f)
        .min_by_key(|&(_, v, f, g)| (v, f, g))
        .expect("two distinct points cannot both equal v");
    // π = ξ·τ with τ = σ_{v,f} σ_{f,g} and ξ in the H-class of σ_{u,v};
    // then π σ_{f,g} σ_{v,f} σ_{u,v} = ξ σ_{v,f} σ_{u,v} = ξ σ_{u,v} σ_{v,f} σ_{u,v} = ξ
    let xi = *pi
        * atom_unchecked(n, Quark::of(f, g))
        * atom_unchecked(n, Quark::of(v, f))
        * atom_unchecked(n, Quark::of(u, v));
    let mut quarks = decompose_group_corank2(&xi)?.quarks().to_vec();
    quarks.push(Quark::of(v, f));
    if v != g {
        quarks.push(Quark::of(f, g));
    }
    Ok(Word::from_parts(n, quarks))
}

/// An atom factorization of any singular element: its left brackets as a
/// prefix of atoms, followed by a factorization of a corank-2 remainder.
pub fn decompose(pi: &BrauerDiagram) -> Result<Word> {
    let corank = pi.corank();
    if corank == 0 {
        return Err(Error::Precondition(
            "invertible diagrams are not products of atoms",
        ));
    }
    if corank == 2 {
        return decompose_corank2(pi);
    }
    let n = pi.rank();
    // both lists are sorted; the first left bracket has the smallest minimum
    let left: Vec<(u8, u8)> = pi.left_brackets().collect();
    let right: Vec<(u8, u8)> = pi.right_brackets().collect();
    let mut blocks: Vec<(Point, Point)> = pi
        .lines()
        .map(|(i, j)| (Point::Unprimed(i), Point::Primed(j)))
        .collect();
    blocks.push((Point::Unprimed(left[0].0), Point::Unprimed(left[0].1)));
    blocks.push((Point::Primed(right[0].0), Point::Primed(right[0].1)));
    for (&(u, v), &(f, g)) in left[1..].iter().zip(&right[1..]) {
        blocks.push((Point::Unprimed(u), Point::Primed(f)));
        blocks.push((Point::Unprimed(v), Point::Primed(g)));
    }
    let tau = BrauerDiagram::new(n, &blocks)?;
    let mut quarks: Vec<Quark> = left.iter().map(|&(u, v)| Quark::of(u, v)).collect();
    quarks.extend_from_slice(decompose_corank2(&tau)?.quarks());
    Ok(Word::from_parts(n, quarks))
}

/// Upper bound on `decompose(π).len()` for rank `n` and the given corank.
///
/// The cycle formula uses at most `⌊3(n-2)/2⌋ + 1` letters, the bridge adds
/// two and the peeled prefix adds one letter per left bracket.
pub fn decomposition_length_bound(n: usize, corank: usize) -> usize {
    let group = 3 * n.saturating_sub(2) / 2 + 1;
    match corank / 2 {
        0 => 0,
        1 => group + 2,
        k => k + group + 2,
    }
}

/// Outcome of testing each atom against the closure of the others.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibilityReport {
    pub n: usize,
    /// Each atom with whether it lies outside the closure of the other atoms.
    pub atoms: Vec<(Quark, bool)>,
}

impl IrreducibilityReport {
    pub fn all_irreducible(&self) -> bool {
        self.atoms.iter().all(|&(_, ok)| ok)
    }
}

/// Default largest rank for the closure computations below.
pub const CLOSURE_LIMIT: usize = 6;

/// All atoms of rank `n`, ordered by pair.
pub fn atoms(n: usize) -> Vec<Quark> {
    let mut out = Vec::new();
    for i in 1..=n as u8 {
        for j in i + 1..=n as u8 {
            out.push(Quark::of(i, j));
        }
    }
    out
}

/// The subsemigroup generated by `generators`, as a membership table
/// indexed by [`BrauerDiagram::rank_index`].
pub fn closure(n: usize, generators: &[Quark], limit: usize) -> Result<Vec<bool>> {
    let total = enumerate_all_with_limit(n, limit)?.len();
    let gens: Vec<BrauerDiagram> = generators
        .iter()
        .map(|&q| q.atom(n))
        .collect::<Result<_>>()?;
    let mut member = vec![false; total];
    let mut frontier = Vec::new();
    for g in &gens {
        if !core::mem::replace(&mut member[g.rank_index() as usize], true) {
            frontier.push(*g);
        }
    }
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = x * *g;
            if !core::mem::replace(&mut member[y.rank_index() as usize], true) {
                frontier.push(y);
            }
        }
    }
    Ok(member)
}

/// Checks for every atom that it is not a product of the other atoms.
pub fn is_irreducible_generator_check(n: usize) -> Result<IrreducibilityReport> {
    is_irreducible_generator_check_with_limit(n, CLOSURE_LIMIT)
}

pub fn is_irreducible_generator_check_with_limit(
    n: usize,
    limit: usize,
) -> Result<IrreducibilityReport> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    let all = atoms(n);
    let mut report = IrreducibilityReport {
        n,
        atoms: Vec::new(),
    };
    for &q in &all {
        let others: Vec<Quark> = all.iter().copied().filter(|&p| p != q).collect();
        let reachable = if others.is_empty() {
            false
        } else {
            closure(n, &others, limit)?[q.atom(n)?.rank_index() as usize]
        };
        report.atoms.push((q, !reachable));
    }
    Ok(report)
}
