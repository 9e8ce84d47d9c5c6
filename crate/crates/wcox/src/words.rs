//! The rank-3 word problem and combinatorial structure: normal forms, length,
//! descent sets, parabolic factorization, longest elements, Bruhat order and
//! ball enumeration.
//!
//! Normal forms are ShortLex-minimal reduced words under `r < s < t`,
//! computed by Tits rewriting: a word is reduced iff no sequence of braid
//! moves produces an adjacent repeated letter, and two reduced words are
//! equal in the group iff they are braid-connected. The engine works by
//! one-letter extension of an already-canonical word, memoized in a shared
//! table; each cold extension runs one breadth-first search over the braid
//! class of the extended word. `ShortLex` prefixes of normal forms are
//! themselves normal forms, which lets a successful search warm the cache
//! for the whole prefix chain at once.

use std::collections::VecDeque;
use std::hash::{BuildHasherDefault, Hasher};

use dashmap::DashMap;

use crate::element::{Element, Gen, GenSet, Word, MAX_WORD_LEN};
use crate::error::Error;
use crate::system::CoxeterSystem;

/// Which side a multiplication or descent acts on.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// Hard cap on one braid-class search; reaching it aborts loudly rather than
/// looping on a pathological input.
const BRAID_CLASS_CAP: usize = 4_000_000;

/// Default cap on ball enumeration.
pub const DEFAULT_BALL_CAP: usize = 2_000_000;

#[derive(Default)]
pub struct FastHasher(u64);

impl Hasher for FastHasher {
    #[inline]
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.write_u8(b);
        }
    }

    #[inline]
    fn write_u8(&mut self, v: u8) {
        self.write_u64(v as u64);
    }

    #[inline]
    fn write_u64(&mut self, v: u64) {
        self.0 = (self.0 ^ v)
            .wrapping_mul(0x9e37_79b9_7f4a_7c15)
            .rotate_left(23);
    }

    #[inline]
    fn write_u128(&mut self, v: u128) {
        self.write_u64(v as u64);
        self.write_u64((v >> 64) as u64);
    }
}

type FastState = BuildHasherDefault<FastHasher>;
type FastSet = std::collections::HashSet<u128, FastState>;

/// Shared memo tables. Concurrent readers, serialized writers; every stored
/// value is a pure function of the system configuration.
#[derive(Default)]
pub struct WordCaches {
    ext: DashMap<(u128, u8), u128, FastState>,
    inv: DashMap<u128, u128, FastState>,
}

impl WordCaches {
    pub fn ext_entries(&self) -> usize {
        self.ext.len()
    }
}

impl CoxeterSystem {
    /// Canonical form of `x * a`.
    pub fn right_ext(&self, x: Element, a: Gen) -> Element {
        let key = (x.word().raw(), a.index() as u8);
        if let Some(v) = self.caches.ext.get(&key) {
            return Element::from_canonical(raw_word(*v));
        }
        let result = self.compute_right_ext(x, a);
        self.caches.ext.insert(key, result.word().raw());
        // Generators are involutions, so the reverse extension is free.
        self.caches
            .ext
            .insert((result.word().raw(), a.index() as u8), x.word().raw());
        result
    }

    fn compute_right_ext(&self, x: Element, a: Gen) -> Element {
        if x.is_identity() {
            return Element::from_canonical(Word::EMPTY.push(a));
        }
        if x.last() == Some(a) {
            return Element::from_canonical(x.word().pop());
        }
        self.braid_normalize(x.word().push(a))
    }

    /// BFS over the braid class of `w` (one letter beyond a normal form).
    /// Finding an adjacent repeated letter reduces; otherwise the class is
    /// exhausted and its lex-min word is the normal form.
    fn braid_normalize(&self, w: Word) -> Element {
        let n = w.len();
        let mut visited = FastSet::default();
        visited.insert(w.raw());
        let mut queue = VecDeque::new();
        queue.push_back(w);
        let mut best = w;
        while let Some(u) = queue.pop_front() {
            for i in 0..n - 1 {
                if u.letter(i) == u.letter(i + 1) {
                    return self.intern_word(u.remove_pair(i));
                }
            }
            if u < best {
                best = u;
            }
            for i in 0..n - 1 {
                let a = u.letter(i);
                let b = u.letter(i + 1);
                let m = self.bond(a, b) as usize;
                if m == 0 || m > n - i {
                    continue;
                }
                let mut alternating = true;
                for k in 2..m {
                    if u.letter(i + k) != (if k % 2 == 0 { a } else { b }) {
                        alternating = false;
                        break;
                    }
                }
                if !alternating {
                    continue;
                }
                let mut v = u;
                for k in 0..m {
                    v = v.set_letter(i + k, if k % 2 == 0 { b } else { a });
                }
                if visited.insert(v.raw()) {
                    assert!(
                        visited.len() <= BRAID_CLASS_CAP,
                        "braid-class cap ({BRAID_CLASS_CAP}) exceeded at word length {n}"
                    );
                    queue.push_back(v);
                }
            }
        }
        let nf = Element::from_canonical(best);
        self.cache_prefix_chain(best);
        nf
    }

    /// Prefixes of a ShortLex normal form are normal forms; record the whole
    /// extension chain.
    fn cache_prefix_chain(&self, nf: Word) {
        let mut p = Word::EMPTY;
        for g in nf.letters() {
            let q = p.push(g);
            self.caches.ext.insert((p.raw(), g.index() as u8), q.raw());
            self.caches.ext.insert((q.raw(), g.index() as u8), p.raw());
            p = q;
        }
    }

    /// Folds an arbitrary word into its canonical element.
    pub(crate) fn intern_word(&self, w: Word) -> Element {
        let mut cur = Element::IDENTITY;
        for g in w.letters() {
            cur = self.right_ext(cur, g);
        }
        cur
    }

    /// Canonical form of `a * x`.
    pub fn left_ext(&self, x: Element, a: Gen) -> Element {
        self.inverse(self.right_ext(self.inverse(x), a))
    }

    pub fn ext(&self, x: Element, a: Gen, side: Side) -> Element {
        match side {
            Side::Right => self.right_ext(x, a),
            Side::Left => self.left_ext(x, a),
        }
    }

    pub fn inverse(&self, x: Element) -> Element {
        if x.len() <= 1 {
            return x;
        }
        if let Some(v) = self.caches.inv.get(&x.word().raw()) {
            return Element::from_canonical(raw_word(*v));
        }
        let inv = self.intern_word(x.word().reversed());
        self.caches.inv.insert(x.word().raw(), inv.word().raw());
        self.caches.inv.insert(inv.word().raw(), x.word().raw());
        inv
    }

    /// Normal form of an arbitrary generator word.
    pub fn normal_form(&self, text: &str) -> Result<Element, Error> {
        let w = Word::parse(text).map_err(Error::UnknownGenerator)?;
        Ok(self.intern_word(w))
    }

    /// Group product. Panics when the concatenated length exceeds the word
    /// cap; validated entry points check first.
    pub fn mult(&self, x: Element, y: Element) -> Element {
        assert!(
            x.len() + y.len() <= MAX_WORD_LEN,
            "product length {} exceeds the word cap ({MAX_WORD_LEN})",
            x.len() + y.len()
        );
        let mut cur = x;
        for g in y.letters() {
            cur = self.right_ext(cur, g);
        }
        cur
    }

    /// Folds a sequence of factors left to right.
    pub fn mult_all(&self, factors: &[Element]) -> Element {
        factors
            .iter()
            .fold(Element::IDENTITY, |acc, &f| self.mult(acc, f))
    }

    pub fn is_descent(&self, x: Element, a: Gen, side: Side) -> bool {
        match side {
            // The last letter of the normal form is always a right descent.
            Side::Right if x.last() == Some(a) => true,
            Side::Left if x.first() == Some(a) => true,
            _ => self.ext(x, a, side).len() < x.len(),
        }
    }

    pub fn descents(&self, x: Element, side: Side) -> GenSet {
        Gen::ALL
            .into_iter()
            .filter(|&a| self.is_descent(x, a, side))
            .fold(GenSet::EMPTY, |acc, a| acc.with(a))
    }

    /// Weight `L(x)` (sum of generator weights along a reduced word).
    pub fn weight_of(&self, x: Element) -> i64 {
        x.letters().map(|g| self.weight(g) as i64).sum()
    }

    /// Unique factorization `x = w1 * w2` (length-additive) with `w2` in
    /// `W_J` and no right descent of `w1` in `J`; mirrored for `Side::Left`.
    pub fn parabolic_factorize(&self, x: Element, j: GenSet, side: Side) -> (Element, Element) {
        let mut outer = x;
        let mut inner = Element::IDENTITY;
        loop {
            let d = self.descents(outer, side).intersect(j);
            let Some(a) = d.iter().next() else { break };
            outer = self.ext(outer, a, side);
            // Stripping a descent always lengthens the parabolic part.
            let grown = self.ext(inner, a, flip(side));
            debug_assert_eq!(grown.len(), inner.len() + 1);
            inner = grown;
        }
        debug_assert_eq!(outer.len() + inner.len(), x.len());
        match side {
            Side::Right => (outer, inner),
            Side::Left => (inner, outer),
        }
    }

    /// Longest element of the parabolic subgroup `W_J` and its weight, or
    /// `None` when `W_J` is infinite.
    pub fn longest_element(&self, j: GenSet) -> Option<(Element, i64)> {
        let gens: Vec<Gen> = j.iter().collect();
        let elt = match gens.len() {
            0 => Element::IDENTITY,
            1 => self.right_ext(Element::IDENTITY, gens[0]),
            2 => {
                let m = self.bond(gens[0], gens[1]);
                if m == 0 {
                    return None;
                }
                let mut w = Word::EMPTY;
                for k in 0..m as usize {
                    w = w.push(gens[k % 2]);
                }
                self.intern_word(w)
            }
            _ => {
                if !self.is_finite() {
                    return None;
                }
                let all = self
                    .ball(usize::MAX, DEFAULT_BALL_CAP)
                    .expect("finite rank-3 group within ball cap");
                *all.last().expect("nonempty group")
            }
        };
        let weight = self.weight_of(elt);
        Some((elt, weight))
    }

    /// Bruhat order, by the descent recursion backed by the exchange
    /// property: strip the minimal left descent of `y` (its first normal-form
    /// letter) and recurse.
    pub fn bruhat_leq(&self, x: Element, y: Element) -> bool {
        if x.len() > y.len() {
            return false;
        }
        if x == y || x.is_identity() {
            return true;
        }
        let a = y.first().expect("y nonempty here");
        let ay = self.left_ext(y, a);
        if self.is_descent(x, a, Side::Left) {
            self.bruhat_leq(self.left_ext(x, a), ay)
        } else {
            self.bruhat_leq(x, ay)
        }
    }

    /// All elements of length <= `max_len`, sorted by (length, lex), each
    /// exactly once. BFS by right multiplication with normal-form dedup.
    pub fn ball(&self, max_len: usize, cap: usize) -> Result<Vec<Element>, Error> {
        let mut all: Vec<Element> = vec![Element::IDENTITY];
        let mut level: Vec<Element> = vec![Element::IDENTITY];
        let mut len = 0usize;
        while !level.is_empty() && len < max_len {
            len += 1;
            let mut next: Vec<Element> = Vec::new();
            for &x in &level {
                for a in Gen::ALL {
                    let y = self.right_ext(x, a);
                    if y.len() == x.len() + 1 {
                        next.push(y);
                    }
                }
            }
            next.sort_unstable();
            next.dedup();
            if all.len() + next.len() > cap {
                return Err(Error::BallCapExceeded { cap });
            }
            all.extend_from_slice(&next);
            level = next;
        }
        Ok(all)
    }

    pub fn ball_default(&self, max_len: usize) -> Result<Vec<Element>, Error> {
        self.ball(max_len, DEFAULT_BALL_CAP)
    }
}

fn flip(side: Side) -> Side {
    match side {
        Side::Left => Side::Right,
        Side::Right => Side::Left,
    }
}

/// A ball together with its normal-form prefix tree, for scans that fold a
/// partial product down the tree instead of recomputing it per element.
pub struct BallIndex {
    elements: Vec<Element>,
    /// `children[i]` = (appended letter, child index); edges follow normal-form
    /// prefixes, so each element is reached exactly once.
    children: Vec<Vec<(Gen, u32)>>,
    raw_set: FastSet,
}

impl BallIndex {
    /// `ball` must be prefix-closed and sorted, as produced by
    /// [`CoxeterSystem::ball`].
    pub fn new(ball: Vec<Element>) -> BallIndex {
        let mut index = std::collections::HashMap::<u128, u32, FastState>::default();
        for (i, x) in ball.iter().enumerate() {
            index.insert(x.word().raw(), i as u32);
        }
        let mut children = vec![Vec::new(); ball.len()];
        let mut raw_set = FastSet::default();
        for (i, x) in ball.iter().enumerate() {
            raw_set.insert(x.word().raw());
            if let Some(g) = x.last() {
                let parent = index[&x.word().pop().raw()];
                children[parent as usize].push((g, i as u32));
            }
        }
        BallIndex {
            elements: ball,
            children,
            raw_set,
        }
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: Element) -> bool {
        self.raw_set.contains(&x.word().raw())
    }

    /// Depth-first walk from the identity. `state` is threaded down the tree:
    /// `step(parent_state, letter, child)` produces the child's state and
    /// `visit` sees every (element, state) pair exactly once.
    pub fn walk<S>(
        &self,
        root: S,
        step: impl Fn(&S, Gen, Element) -> S,
        mut visit: impl FnMut(Element, &S),
    ) {
        if self.elements.is_empty() {
            return;
        }
        let mut stack: Vec<(u32, S)> = vec![(0, root)];
        while let Some((i, state)) = stack.pop() {
            visit(self.elements[i as usize], &state);
            for &(g, child) in &self.children[i as usize] {
                let next = step(&state, g, self.elements[child as usize]);
                stack.push((child, next));
            }
        }
    }
}

fn raw_word(raw: u128) -> Word {
    // Raw values in the caches always came from valid words.
    let mut w = Word::EMPTY;
    let len = (raw >> 120) as usize;
    for i in 0..len {
        w = w.push(Gen::from_index(((raw >> (118 - 2 * i)) & 0b11) as usize));
    }
    debug_assert_eq!(w.raw(), raw);
    w
}
