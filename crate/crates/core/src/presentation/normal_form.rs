//! Rewriting any word to the shape `u·τ_{i₁,j₁}·τ_{i₂,j₂}…τ_{i_k,j_k}` where
//! `u·τ_{i₁,j₁}` is connected and the pairs `{i_s, j_s}` are pairwise
//! disjoint.
//!
//! Letters are appended one at a time to a word already in this shape. The
//! new letter `τ_{i,j}` is classified by where its endpoints sit relative to
//! the head pair `t₁ = {i₁, j₁}` and the tail pairs `t₂, …, t_k`:
//!
//! 1. disjoint from every pair: it joins the tail;
//! 2. meets only `t₁`: it commutes past the tail and extends the connected part;
//! 3. one endpoint in `t₁`, the other in a tail pair;
//! 4. one endpoint in a tail pair, the other unused;
//! 5. both endpoints in tail pairs.
//!
//! Cases 3 to 5 splice a short connected detour onto the prefix and swap
//! pairs in the tail. Normal forms are not unique and the output may be
//! longer than the input.

use alloc::vec::Vec;

use super::{connected_break, pairwise_disjoint, Quark, Word};

struct Builder {
    // nonempty; its last letter is the head pair t₁
    connected: Vec<Quark>,
    tail: Vec<Quark>,
}

impl Builder {
    fn head(&self) -> Quark {
        self.connected[self.connected.len() - 1]
    }

    fn tail_index_containing(&self, x: usize) -> Option<usize> {
        self.tail.iter().position(|t| t.contains(x))
    }

    fn push(&mut self, q: Quark) {
        let head = self.head();
        let (a, b) = (q.low(), q.high());
        match (self.tail_index_containing(a), self.tail_index_containing(b)) {
            (None, None) => {
                if !q.meets(head) {
                    // case 1
                    self.tail.push(q);
                } else if q != head {
                    // case 2; when q equals the head, relation (2) absorbs it
                    self.connected.push(q);
                }
            }
            (Some(s), None) => self.one_endpoint_in_tail(s, a, b),
            (None, Some(s)) => self.one_endpoint_in_tail(s, b, a),
            (Some(s), Some(t)) if s == t => {
                // q is itself a tail pair: (7) brings it next to its copy, (2) absorbs it
            }
            (Some(s), Some(t)) => self.both_endpoints_in_tail(s, t, a, b),
        }
    }

    /// `i` lies in tail pair `s`; `j` is either in the head or unused.
    fn one_endpoint_in_tail(&mut self, s: usize, i: usize, j: usize) {
        let head = self.head();
        let pair = self.tail[s];
        let j2 = pair.other(i).expect("tail pair contains i");
        if let Some(j1) = head.other(j) {
            // case 3: head = {j, j1}, pair = {i, j2}; by (7) then (6)
            //   τ_{j,j1} τ_{i,j2} τ_{i,j} = τ_{j,j1} τ_{j1,j2} τ_{i,j}
            let new_head = Quark::of(j2 as u8, j1 as u8);
            self.connected.push(new_head);
            self.tail.remove(s);
            self.tail.push(Quark::of(i as u8, j as u8));
        } else {
            // case 4: head = {i1, j1}, pair = {i, j2}, j unused
            //   τ_{i1,j1} τ_{i,j2} τ_{i,j} = τ_{i1,j1} τ_{i1,j2} τ_{i1,j} τ_{i1,j1} τ_{i,j}
            let (i1, j1) = (head.low(), head.high());
            self.connected.extend([
                Quark::of(i1 as u8, j2 as u8),
                Quark::of(i1 as u8, j as u8),
                Quark::of(i1 as u8, j1 as u8),
            ]);
            self.tail.remove(s);
            self.tail.push(Quark::of(i as u8, j as u8));
        }
    }

    /// case 5: `i` lies in tail pair `s` = {i, j2}, `j` in tail pair `t` = {i3, j}.
    ///   τ_{i1,j1} τ_{i,j2} τ_{i3,j} τ_{i,j}
    ///     = τ_{i1,j1} τ_{i1,i3} τ_{i,i1} τ_{i1,j1} τ_{i3,j2} τ_{i,j}
    fn both_endpoints_in_tail(&mut self, s: usize, t: usize, i: usize, j: usize) {
        let head = self.head();
        let (i1, j1) = (head.low(), head.high());
        let j2 = self.tail[s].other(i).expect("tail pair contains i");
        let i3 = self.tail[t].other(j).expect("tail pair contains j");
        self.connected.extend([
            Quark::of(i1 as u8, i3 as u8),
            Quark::of(i as u8, i1 as u8),
            Quark::of(i1 as u8, j1 as u8),
        ]);
        let (first, second) = if s > t { (s, t) } else { (t, s) };
        self.tail.remove(first);
        self.tail.remove(second);
        self.tail.push(Quark::of(i3 as u8, j2 as u8));
        self.tail.push(Quark::of(i as u8, j as u8));
    }
}

/// Rewrites `w` into an equal word satisfying [`is_normal_form`].
pub fn normalize(w: &Word) -> Word {
    let mut builder = Builder {
        connected: alloc::vec![w.first()],
        tail: Vec::new(),
    };
    for &q in &w.quarks()[1..] {
        builder.push(q);
    }
    let mut quarks = builder.connected;
    quarks.extend(builder.tail);
    Word::from_parts(w.rank(), quarks)
}

/// The position of the head letter `τ_{i₁,j₁}` of a normal-form split, or
/// `None` if `w` has no such split. The latest valid split is returned.
pub fn normal_form_split(w: &Word) -> Option<usize> {
    let quarks = w.quarks();
    // the longest connected prefix ends at `reach`
    let reach = connected_break(quarks).unwrap_or(quarks.len() - 1);
    (0..=reach).rev().find(|&h| pairwise_disjoint(&quarks[h..]))
}

pub fn is_normal_form(w: &Word) -> bool {
    normal_form_split(w).is_some()
}
