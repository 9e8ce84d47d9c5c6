//! Packed words over the generators `r < s < t` and canonical group elements.
//!
//! A [`Word`] is an arbitrary (possibly unreduced) sequence of generators,
//! packed two bits per letter into a `u128` with the length in the top byte.
//! Letters sit in the high bits left-aligned, so for words of equal length
//! the raw integer order is exactly lexicographic order, and because the
//! length occupies the most significant byte the derived `Ord` on the raw
//! value is (length, lex) — the ShortLex order used everywhere.
//!
//! An [`Element`] wraps a `Word` that is the ShortLex-minimal reduced word of
//! a group element. Only the word engine constructs them.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

/// Number of generators. The engine is specific to rank 3.
pub const RANK: usize = 3;

/// Longest storable word. Products in the verification suites stay well
/// below this; exceeding it is reported as a resource-cap error.
pub const MAX_WORD_LEN: usize = 60;

/// A generator, identified by its index in the fixed order `r < s < t`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Gen(u8);

impl Gen {
    pub const R: Gen = Gen(0);
    pub const S: Gen = Gen(1);
    pub const T: Gen = Gen(2);
    pub const ALL: [Gen; RANK] = [Gen::R, Gen::S, Gen::T];

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Gen {
        assert!(i < RANK, "generator index out of range");
        Gen(i as u8)
    }

    pub fn name(self) -> char {
        match self.0 {
            0 => 'r',
            1 => 's',
            _ => 't',
        }
    }

    pub fn from_char(c: char) -> Option<Gen> {
        match c {
            'r' => Some(Gen::R),
            's' => Some(Gen::S),
            't' => Some(Gen::T),
            _ => None,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A set of generators, as a 3-bit mask.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct GenSet(u8);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);
    pub const FULL: GenSet = GenSet(0b111);

    pub fn singleton(g: Gen) -> GenSet {
        GenSet(1 << g.0)
    }

    pub fn from_gens(gens: &[Gen]) -> GenSet {
        gens.iter().fold(GenSet::EMPTY, |acc, &g| acc.with(g))
    }

    #[inline]
    pub fn with(self, g: Gen) -> GenSet {
        GenSet(self.0 | (1 << g.0))
    }

    #[inline]
    pub fn contains(self, g: Gen) -> bool {
        self.0 & (1 << g.0) != 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn intersect(self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = Gen> {
        Gen::ALL.into_iter().filter(move |g| self.contains(*g))
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in self.iter() {
            write!(f, "{}", g.name())?;
        }
        Ok(())
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self)
    }
}

impl Serialize for GenSet {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

const LEN_SHIFT: u32 = 120;
const LETTER_BITS: u128 = (1u128 << LEN_SHIFT) - 1;

#[inline]
fn letter_shift(i: usize) -> u32 {
    LEN_SHIFT - 2 - 2 * i as u32
}

/// A packed word over `{r,s,t}`; not necessarily reduced.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(u128);

impl Word {
    pub const EMPTY: Word = Word(0);

    #[inline]
    pub fn len(&self) -> usize {
        (self.0 >> LEN_SHIFT) as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn raw(&self) -> u128 {
        self.0
    }

    #[inline]
    pub fn letter(&self, i: usize) -> Gen {
        debug_assert!(i < self.len());
        Gen(((self.0 >> letter_shift(i)) & 0b11) as u8)
    }

    #[inline]
    pub fn last(&self) -> Option<Gen> {
        let n = self.len();
        if n == 0 {
            None
        } else {
            Some(self.letter(n - 1))
        }
    }

    #[inline]
    pub fn first(&self) -> Option<Gen> {
        if self.is_empty() {
            None
        } else {
            Some(self.letter(0))
        }
    }

    /// Appends a letter. Panics if the word is at capacity; callers that take
    /// user input go through [`Word::push_checked`].
    #[inline]
    pub fn push(&self, g: Gen) -> Word {
        let n = self.len();
        assert!(
            n < MAX_WORD_LEN,
            "word length cap ({MAX_WORD_LEN}) exceeded"
        );
        Word(self.0 + (1u128 << LEN_SHIFT) + ((g.0 as u128) << letter_shift(n)))
    }

    pub fn push_checked(&self, g: Gen) -> Option<Word> {
        if self.len() < MAX_WORD_LEN {
            Some(self.push(g))
        } else {
            None
        }
    }

    /// Drops the last letter; the empty word is returned unchanged.
    #[inline]
    pub fn pop(&self) -> Word {
        let n = self.len();
        if n == 0 {
            return *self;
        }
        let letters = (self.0 & LETTER_BITS) & !(0b11u128 << letter_shift(n - 1));
        Word((((n - 1) as u128) << LEN_SHIFT) | letters)
    }

    /// Replaces letter `i`.
    #[inline]
    pub fn set_letter(&self, i: usize, g: Gen) -> Word {
        let sh = letter_shift(i);
        Word((self.0 & !(0b11u128 << sh)) | ((g.0 as u128) << sh))
    }

    /// Removes the two letters at positions `i`, `i+1`.
    pub fn remove_pair(&self, i: usize) -> Word {
        let n = self.len();
        debug_assert!(i + 1 < n);
        let mut out = Word::EMPTY;
        for j in 0..n {
            if j != i && j != i + 1 {
                out = out.push(self.letter(j));
            }
        }
        out
    }

    pub fn letters(&self) -> impl Iterator<Item = Gen> + '_ {
        (0..self.len()).map(move |i| self.letter(i))
    }

    pub fn from_gens(gens: &[Gen]) -> Word {
        gens.iter().fold(Word::EMPTY, |w, &g| w.push(g))
    }

    /// Concatenation; `None` when the result would exceed the cap.
    pub fn concat(&self, other: &Word) -> Option<Word> {
        if self.len() + other.len() > MAX_WORD_LEN {
            return None;
        }
        let mut out = *self;
        for g in other.letters() {
            out = out.push(g);
        }
        Some(out)
    }

    pub fn reversed(&self) -> Word {
        let mut out = Word::EMPTY;
        for i in (0..self.len()).rev() {
            out = out.push(self.letter(i));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Word, char> {
        let mut w = Word::EMPTY;
        for c in text.chars() {
            let g = Gen::from_char(c).ok_or(c)?;
            w = w.push(g);
        }
        Ok(w)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in self.letters() {
            write!(f, "{}", g.name())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self)
    }
}

/// A group element, represented by its ShortLex-minimal reduced word.
///
/// Constructed only by the word engine (`CoxeterSystem`), which guarantees
/// canonicality; `Ord` is ShortLex (length, then lex under `r < s < t`).
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Element(Word);

impl Element {
    pub const IDENTITY: Element = Element(Word::EMPTY);

    /// Wraps a word the caller knows to be a ShortLex normal form.
    pub(crate) fn from_canonical(w: Word) -> Element {
        Element(w)
    }

    #[inline]
    pub fn word(&self) -> Word {
        self.0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Same as [`Element::is_identity`] (the identity has the empty word).
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn last(&self) -> Option<Gen> {
        self.0.last()
    }

    #[inline]
    pub fn first(&self) -> Option<Gen> {
        self.0.first()
    }

    pub fn letters(&self) -> impl Iterator<Item = Gen> + '_ {
        self.0.letters()
    }

    /// The generators occurring in the normal form (hence in every reduced word).
    pub fn support(&self) -> GenSet {
        self.letters().fold(GenSet::EMPTY, |acc, g| acc.with(g))
    }
}

impl fmt::Display for Element {
    /// Serializes as the word string, `""` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            write!(f, "e")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Element {
    /// Deserializes a word string **without** normalizing; only canonical
    /// strings written by this crate round-trip into valid elements.
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let text = String::deserialize(de)?;
        let w = Word::parse(&text)
            .map_err(|c| serde::de::Error::custom(format!("unknown generator {c:?}")))?;
        Ok(Element(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_pop_letters() {
        let w = Word::parse("rst").unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.letter(0), Gen::R);
        assert_eq!(w.letter(2), Gen::T);
        assert_eq!(w.pop().to_string(), "rs");
        assert_eq!(w.push(Gen::S).to_string(), "rsts");
        assert_eq!(Word::EMPTY.pop(), Word::EMPTY);
    }

    #[test]
    fn shortlex_order() {
        let parse = |s| Word::parse(s).unwrap();
        assert!(parse("t") < parse("rr"));
        assert!(parse("rs") < parse("rt"));
        assert!(parse("rt") < parse("tr"));
        assert!(parse("") < parse("r"));
        assert!(parse("sts") < parse("tst"));
    }

    #[test]
    fn remove_pair_and_set() {
        let w = Word::parse("rsst").unwrap();
        assert_eq!(w.remove_pair(1).to_string(), "rt");
        assert_eq!(w.set_letter(0, Gen::T).to_string(), "tsst");
    }

    #[test]
    fn genset_basics() {
        let j = GenSet::from_gens(&[Gen::T, Gen::S]);
        assert!(j.contains(Gen::S));
        assert!(!j.contains(Gen::R));
        assert_eq!(j.to_string(), "st");
        assert_eq!(GenSet::EMPTY.to_string(), "");
        assert!(GenSet::singleton(Gen::R).is_subset_of(GenSet::FULL));
    }

    #[test]
    fn word_cap() {
        let mut w = Word::EMPTY;
        for _ in 0..MAX_WORD_LEN {
            w = w.push(Gen::R);
        }
        assert!(w.push_checked(Gen::S).is_none());
    }
}
