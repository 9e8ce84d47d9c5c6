//! Independent word-problem oracle used by tests.
//!
//! Reduces an arbitrary word by computing the full rewrite closure under
//! braid moves from scratch at every stage: if any word in the closure has
//! an adjacent repeated letter, delete that pair and start over; otherwise
//! the closure is the complete set of reduced expressions and the lex-min
//! word is the ShortLex normal form. No memoization, no incremental
//! extension, no prefix reasoning: deliberately disjoint from the
//! production engine it cross-checks.

use std::collections::BTreeSet;

use crate::element::{Gen, Word};
use crate::system::CoxeterSystem;

/// All words reachable from `w` by braid moves (length is preserved).
pub fn braid_closure(sys: &CoxeterSystem, w: Word) -> BTreeSet<Word> {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut queue = vec![w];
    seen.insert(w);
    while let Some(u) = queue.pop() {
        let n = u.len();
        for i in 0..n.saturating_sub(1) {
            let a = u.letter(i);
            let b = u.letter(i + 1);
            if a == b {
                continue;
            }
            let m = sys.bond(a, b) as usize;
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
            if seen.insert(v) {
                queue.push(v);
            }
        }
    }
    seen
}

/// ShortLex normal form by full rewrite-closure reduction.
pub fn normal_form(sys: &CoxeterSystem, mut w: Word) -> Word {
    'reduce: loop {
        let closure = braid_closure(sys, w);
        for &u in &closure {
            for i in 0..u.len().saturating_sub(1) {
                if u.letter(i) == u.letter(i + 1) {
                    w = u.remove_pair(i);
                    continue 'reduce;
                }
            }
        }
        return *closure.iter().next().expect("closure contains w");
    }
}

/// All reduced expressions of the element represented by `w`.
pub fn reduced_expressions(sys: &CoxeterSystem, w: Word) -> BTreeSet<Word> {
    braid_closure(sys, normal_form(sys, w))
}

/// Bruhat order by the subword property: `x <= y` iff some reduced
/// expression of `y` contains some reduced expression of `x` as a
/// subsequence.
pub fn bruhat_leq_subword(sys: &CoxeterSystem, x: Word, y: Word) -> bool {
    let x_exprs = reduced_expressions(sys, x);
    for expr in reduced_expressions(sys, y) {
        for xe in &x_exprs {
            let mut need = 0usize;
            for i in 0..expr.len() {
                if need < xe.len() && expr.letter(i) == xe.letter(need) {
                    need += 1;
                }
            }
            if need == xe.len() {
                return true;
            }
        }
    }
    false
}

/// The dihedral group on `{a, b}` enumerated directly: all alternating
/// words, deduplicated through the oracle normal form.
pub fn dihedral_elements(sys: &CoxeterSystem, a: Gen, b: Gen) -> Option<BTreeSet<Word>> {
    let m = sys.bond(a, b) as usize;
    if m == 0 {
        return None;
    }
    let mut out = BTreeSet::new();
    for len in 0..=m {
        for start in [a, b] {
            let mut w = Word::EMPTY;
            for k in 0..len {
                w = w.push(if k % 2 == 0 {
                    start
                } else if start == a {
                    b
                } else {
                    a
                });
            }
            out.insert(normal_form(sys, w));
        }
    }
    Some(out)
}
