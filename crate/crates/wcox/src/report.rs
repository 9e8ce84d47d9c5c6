//! Small shared report building blocks.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::element::Element;
use crate::laurent::Laurent;
use crate::par::Merge;

/// Keeps the `cap` smallest items under `Ord`; merging is a capped set
/// union, so accumulation order never shows in the output.
#[derive(Clone, Debug, Serialize)]
#[serde(transparent)]
pub struct Bounded<T: Ord> {
    items: BTreeSet<T>,
    #[serde(skip)]
    cap: usize,
}

pub const WITNESS_CAP: usize = 8;

impl<T: Ord> Bounded<T> {
    pub fn new(cap: usize) -> Bounded<T> {
        Bounded {
            items: BTreeSet::new(),
            cap,
        }
    }

    pub fn push(&mut self, item: T) {
        self.items.insert(item);
        while self.items.len() > self.cap {
            self.items.pop_last();
        }
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.items.iter()
    }
}

impl<T: Ord> Merge for Bounded<T> {
    fn merge(mut self, other: Self) -> Self {
        for item in other.items {
            self.push(item);
        }
        self
    }
}

/// A structure-constant witness: `f_{x,y,z}` with its degree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Triple {
    pub x: Element,
    pub y: Element,
    pub z: Element,
    pub degree: i64,
}

/// A fact-violation record carrying the offending coefficient.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct CoeffWitness {
    pub x: Element,
    pub y: Element,
    pub z: Element,
    pub coeff: String,
}

impl CoeffWitness {
    pub fn new(x: Element, y: Element, z: Element, p: &Laurent) -> CoeffWitness {
        CoeffWitness {
            x,
            y,
            z,
            coeff: p.to_string(),
        }
    }
}

/// Running maximum of (degree, witnesses); ties pool their witness sets.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeMax {
    pub degree: i64,
    pub witnesses: Bounded<Triple>,
}

impl DegreeMax {
    pub fn new() -> DegreeMax {
        DegreeMax {
            degree: i64::MIN,
            witnesses: Bounded::new(WITNESS_CAP),
        }
    }

    pub fn observe(&mut self, degree: i64, wit: Triple) {
        if degree > self.degree {
            self.degree = degree;
            self.witnesses = Bounded::new(WITNESS_CAP);
        }
        if degree == self.degree {
            self.witnesses.push(wit);
        }
    }
}

impl Default for DegreeMax {
    fn default() -> Self {
        Self::new()
    }
}

impl Merge for DegreeMax {
    fn merge(mut self, other: Self) -> Self {
        use std::cmp::Ordering;
        match self.degree.cmp(&other.degree) {
            Ordering::Less => other,
            Ordering::Greater => self,
            Ordering::Equal => {
                self.witnesses = self.witnesses.merge(other.witnesses);
                self
            }
        }
    }
}
