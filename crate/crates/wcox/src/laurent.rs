//! Exact sparse Laurent polynomials over the integers in one indeterminate `v`.
//!
//! Coefficients are 128-bit integers with checked arithmetic: any overflow
//! aborts loudly instead of wrapping, so a completed verification run never
//! contains a silently corrupted coefficient.

use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

#[inline]
fn cadd(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("laurent coefficient overflow")
}

#[inline]
fn cmul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("laurent coefficient overflow")
}

/// Sparse Laurent polynomial: terms sorted by ascending exponent, no zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    terms: Vec<(i32, i128)>,
}

impl Laurent {
    pub fn zero() -> Laurent {
        Laurent { terms: Vec::new() }
    }

    pub fn one() -> Laurent {
        Laurent::term(1, 0)
    }

    /// `c * v^n`.
    pub fn term(c: i128, n: i32) -> Laurent {
        if c == 0 {
            Laurent::zero()
        } else {
            Laurent {
                terms: vec![(n, c)],
            }
        }
    }

    /// `v^n`.
    pub fn v_pow(n: i32) -> Laurent {
        Laurent::term(1, n)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms == [(0, 1)]
    }

    /// Degree; `None` encodes deg 0 = -infinity.
    pub fn deg(&self) -> Option<i32> {
        self.terms.last().map(|&(n, _)| n)
    }

    pub fn min_deg(&self) -> Option<i32> {
        self.terms.first().map(|&(n, _)| n)
    }

    pub fn coeff_at(&self, n: i32) -> i128 {
        match self.terms.binary_search_by_key(&n, |&(e, _)| e) {
            Ok(i) => self.terms[i].1,
            Err(_) => 0,
        }
    }

    pub fn leading_coeff(&self) -> i128 {
        self.terms.last().map_or(0, |&(_, c)| c)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i128)> + '_ {
        self.terms.iter().copied()
    }

    pub fn add(&self, rhs: &Laurent) -> Laurent {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ea, ca) = self.terms[i];
            let (eb, cb) = rhs.terms[j];
            match ea.cmp(&eb) {
                std::cmp::Ordering::Less => {
                    out.push((ea, ca));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((eb, cb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = cadd(ca, cb);
                    if c != 0 {
                        out.push((ea, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        Laurent { terms: out }
    }

    /// `self += c * v^n`, in place.
    pub fn add_term(&mut self, c: i128, n: i32) {
        if c == 0 {
            return;
        }
        match self.terms.binary_search_by_key(&n, |&(e, _)| e) {
            Ok(i) => {
                let nc = cadd(self.terms[i].1, c);
                if nc == 0 {
                    self.terms.remove(i);
                } else {
                    self.terms[i].1 = nc;
                }
            }
            Err(i) => self.terms.insert(i, (n, c)),
        }
    }

    /// `self += k * rhs`, in place.
    pub fn add_scaled(&mut self, rhs: &Laurent, k: i128) {
        if k == 0 {
            return;
        }
        for &(n, c) in &rhs.terms {
            self.add_term(cmul(c, k), n);
        }
    }

    pub fn sub(&self, rhs: &Laurent) -> Laurent {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|&(n, c)| (n, -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for &(ea, ca) in &self.terms {
            for &(eb, cb) in &rhs.terms {
                out.add_term(cmul(ca, cb), ea.checked_add(eb).expect("exponent overflow"));
            }
        }
        out
    }

    /// `self * c * v^n`.
    pub fn mul_term(&self, c: i128, n: i32) -> Laurent {
        if c == 0 {
            return Laurent::zero();
        }
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|&(e, a)| (e.checked_add(n).expect("exponent overflow"), cmul(a, c)))
                .collect(),
        }
    }

    /// The bar involution `v -> v^{-1}`.
    pub fn bar(&self) -> Laurent {
        let mut terms: Vec<(i32, i128)> = self.terms.iter().map(|&(n, c)| (-n, c)).collect();
        terms.reverse();
        Laurent { terms }
    }

    /// Membership in `Z[v^{-1}]`: every exponent <= 0.
    pub fn in_z_vinv(&self) -> bool {
        self.deg().is_none_or(|d| d <= 0)
    }

    /// Membership in `v^{-1} Z[v^{-1}]`: every exponent <= -1.
    pub fn in_v_inv_z_vinv(&self) -> bool {
        self.deg().is_none_or(|d| d <= -1)
    }

    /// The part with strictly negative exponents.
    pub fn negative_part(&self) -> Laurent {
        Laurent {
            terms: self
                .terms
                .iter()
                .filter(|&&(n, _)| n < 0)
                .copied()
                .collect(),
        }
    }
}

impl fmt::Display for Laurent {
    /// Descending-exponent terms `c*v^e` joined by ` + `; `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, &(n, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*v^{}", c, n)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Laurent {
    type Err = String;

    fn from_str(text: &str) -> Result<Laurent, String> {
        let text = text.trim();
        if text == "0" {
            return Ok(Laurent::zero());
        }
        let mut out = Laurent::zero();
        for part in text.split(" + ") {
            let (c, n) = part
                .split_once("*v^")
                .ok_or_else(|| format!("malformed laurent term {part:?}"))?;
            let c: i128 = c
                .trim()
                .parse()
                .map_err(|e| format!("bad coefficient {c:?}: {e}"))?;
            let n: i32 = n
                .trim()
                .parse()
                .map_err(|e| format!("bad exponent {n:?}: {e}"))?;
            if c == 0 {
                return Err(format!("zero coefficient term {part:?}"));
            }
            out.add_term(c, n);
        }
        Ok(out)
    }
}

impl Serialize for Laurent {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Laurent {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let text = String::deserialize(de)?;
        text.parse().map_err(de::Error::custom)
    }
}
