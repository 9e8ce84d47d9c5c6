//! Weighted Coxeter systems of rank 3: configuration, validation, and the
//! bond-triple case classification.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::element::{Gen, GenSet, RANK};
use crate::error::Error;
use crate::words::WordCaches;

/// Bond orders `m_ab`; `0` stands for infinity (0 is never a legal order).
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Bonds {
    pub m_sr: u32,
    pub m_st: u32,
    pub m_rt: u32,
}

/// Weight-function values on the generators.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Weights {
    pub r: u32,
    pub s: u32,
    pub t: u32,
}

/// Plain configuration of a weighted rank-3 Coxeter system.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SystemConfig {
    pub bonds: Bonds,
    pub weights: Weights,
}

impl SystemConfig {
    pub fn new(m_rt: u32, m_sr: u32, m_st: u32, w_r: u32, w_s: u32, w_t: u32) -> SystemConfig {
        SystemConfig {
            bonds: Bonds { m_sr, m_st, m_rt },
            weights: Weights {
                r: w_r,
                s: w_s,
                t: w_t,
            },
        }
    }
}

const WEIGHT_CAP: u32 = 1_000_000;
const BOND_CAP: u32 = 30;

/// A validated weighted Coxeter system plus the word-engine caches.
///
/// All multiplication goes through this type; caches are concurrency-safe
/// (concurrent readers, serialized writers) and every cached value is a pure
/// function of the configuration, so results never depend on interleaving.
pub struct CoxeterSystem {
    cfg: SystemConfig,
    bonds: [[u32; RANK]; RANK],
    weights: [u32; RANK],
    pub(crate) caches: WordCaches,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterSystem({:?})", self.cfg)
    }
}

impl CoxeterSystem {
    pub fn new(cfg: SystemConfig) -> Result<CoxeterSystem, Error> {
        let b = cfg.bonds;
        for (name, m) in [("m_sr", b.m_sr), ("m_st", b.m_st), ("m_rt", b.m_rt)] {
            if m == 1 {
                return Err(Error::InvalidConfig(format!(
                    "bond {name}={m} violates m_ab >= 2 for a != b (0 encodes infinity)"
                )));
            }
            if m > BOND_CAP {
                return Err(Error::InvalidConfig(format!(
                    "bond {name}={m} exceeds the supported cap {BOND_CAP} \
                     (longest parabolic words must fit the packed-word budget)"
                )));
            }
        }
        let w = cfg.weights;
        for (name, v) in [("L(r)", w.r), ("L(s)", w.s), ("L(t)", w.t)] {
            if v == 0 {
                return Err(Error::InvalidConfig(format!(
                    "weight {name}=0 violates positivity (L(a) >= 1)"
                )));
            }
            if v > WEIGHT_CAP {
                return Err(Error::InvalidConfig(format!(
                    "weight {name}={v} exceeds the cap {WEIGHT_CAP}"
                )));
            }
        }
        // Odd finite bonds conjugate the two generators, forcing equal weights.
        let odd_checks = [
            ("m_sr", b.m_sr, "L(s)", w.s, "L(r)", w.r),
            ("m_st", b.m_st, "L(s)", w.s, "L(t)", w.t),
            ("m_rt", b.m_rt, "L(r)", w.r, "L(t)", w.t),
        ];
        for (bond, m, na, va, nb, vb) in odd_checks {
            if m != 0 && m % 2 == 1 && m > 1 && va != vb {
                return Err(Error::InvalidConfig(format!(
                    "odd bond {bond}={m} requires {na}={nb} for the weight function \
                     to be well-defined (got {na}={va}, {nb}={vb})"
                )));
            }
        }
        let mut bonds = [[1u32; RANK]; RANK];
        let pairs = [
            (Gen::S, Gen::R, b.m_sr),
            (Gen::S, Gen::T, b.m_st),
            (Gen::R, Gen::T, b.m_rt),
        ];
        for (a, c, m) in pairs {
            bonds[a.index()][c.index()] = m;
            bonds[c.index()][a.index()] = m;
        }
        Ok(CoxeterSystem {
            cfg,
            bonds,
            weights: [w.r, w.s, w.t],
            caches: WordCaches::default(),
        })
    }

    pub fn from_parts(
        m_rt: u32,
        m_sr: u32,
        m_st: u32,
        w: (u32, u32, u32),
    ) -> Result<CoxeterSystem, Error> {
        CoxeterSystem::new(SystemConfig::new(m_rt, m_sr, m_st, w.0, w.1, w.2))
    }

    pub fn config(&self) -> SystemConfig {
        self.cfg
    }

    /// Bond order `m_ab`, `0` for infinity; `1` on the diagonal.
    #[inline]
    pub fn bond(&self, a: Gen, b: Gen) -> u32 {
        self.bonds[a.index()][b.index()]
    }

    #[inline]
    pub fn weight(&self, g: Gen) -> u32 {
        self.weights[g.index()]
    }

    /// Whether the whole group is finite (spherical triangle criterion).
    pub fn is_finite(&self) -> bool {
        let b = self.cfg.bonds;
        if b.m_sr == 0 || b.m_st == 0 || b.m_rt == 0 {
            return false;
        }
        // 1/m_sr + 1/m_st + 1/m_rt > 1, in integer arithmetic.
        let (x, y, z) = (b.m_sr as u64, b.m_st as u64, b.m_rt as u64);
        y * z + x * z + x * y > x * y * z
    }

    /// The classified case shape with the relabeling to the normal form.
    pub fn classify(&self) -> CaseShape {
        classify(self.cfg)
    }

    /// The same system with generators permuted: normalized generator `i`
    /// plays the role of original generator `perm[i]`.
    pub fn relabel(&self, perm: [Gen; 3]) -> CoxeterSystem {
        let m = |a: Gen, b: Gen| self.bond(perm[a.index()], perm[b.index()]);
        let w = |a: Gen| self.weight(perm[a.index()]);
        CoxeterSystem::new(SystemConfig::new(
            m(Gen::R, Gen::T),
            m(Gen::S, Gen::R),
            m(Gen::S, Gen::T),
            w(Gen::R),
            w(Gen::S),
            w(Gen::T),
        ))
        .expect("relabeling preserves validity")
    }
}

/// Case tags following the five-shape reduction of infinite rank-3 systems.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CaseKind {
    /// The whole group is finite.
    Finite,
    /// `m_sr = inf`, `m_st = 2` (after relabeling).
    Case1,
    /// `m_sr = m_st = inf`.
    Case2,
    /// `m_sr = inf`, `3 <= m_st < inf`.
    Case3,
    /// `inf > m_sr >= m_st >= 4`, excluding (4,4).
    Case4,
    /// `inf > m_sr >= m_st = 3` with `m_sr >= 8`.
    Case5,
    /// Shapes the case analysis excludes by reference: affine B2/G2 and the
    /// equal-weight (m_sr = 7, m_st = 3) reduction.
    AffineSpecial,
    /// Infinite with complete Coxeter graph (no commuting pair); outside the
    /// five-case reduction.
    CompleteGraph,
}

impl CaseKind {
    pub fn tag(self) -> &'static str {
        match self {
            CaseKind::Finite => "FINITE",
            CaseKind::Case1 => "CASE1",
            CaseKind::Case2 => "CASE2",
            CaseKind::Case3 => "CASE3",
            CaseKind::Case4 => "CASE4",
            CaseKind::Case5 => "CASE5",
            CaseKind::AffineSpecial => "AFFINE_SPECIAL",
            CaseKind::CompleteGraph => "COMPLETE_GRAPH",
        }
    }
}

/// Result of classification: the kind, the generator relabeling reaching the
/// normal form (`m_rt = 2`, `m_sr >= m_st`), and a human-readable detail for
/// the excluded shapes.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CaseShape {
    pub kind: CaseKind,
    /// `relabeling[i]` = original generator playing normalized role `i`.
    pub relabeling: [Gen; 3],
    pub detail: Option<String>,
}

impl CaseShape {
    fn plain(kind: CaseKind) -> CaseShape {
        CaseShape {
            kind,
            relabeling: Gen::ALL,
            detail: None,
        }
    }

    pub fn is_identity_relabeling(&self) -> bool {
        self.relabeling == Gen::ALL
    }
}

impl Serialize for Gen {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Gen {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let text = String::deserialize(de)?;
        let mut chars = text.chars();
        match (chars.next().and_then(Gen::from_char), chars.next()) {
            (Some(g), None) => Ok(g),
            _ => Err(serde::de::Error::custom(format!(
                "unknown generator {text:?}"
            ))),
        }
    }
}

fn classify(cfg: SystemConfig) -> CaseShape {
    let sys_bond = |a: Gen, b: Gen| -> u32 {
        match GenSet::singleton(a).with(b) {
            j if j == GenSet::from_gens(&[Gen::S, Gen::R]) => cfg.bonds.m_sr,
            j if j == GenSet::from_gens(&[Gen::S, Gen::T]) => cfg.bonds.m_st,
            _ => cfg.bonds.m_rt,
        }
    };
    let finite = {
        let b = cfg.bonds;
        b.m_sr != 0
            && b.m_st != 0
            && b.m_rt != 0
            && (b.m_st as u64 * b.m_rt as u64
                + b.m_sr as u64 * b.m_rt as u64
                + b.m_sr as u64 * b.m_st as u64)
                > b.m_sr as u64 * b.m_st as u64 * b.m_rt as u64
    };
    if finite {
        return CaseShape::plain(CaseKind::Finite);
    }
    // Infinite. Complete graph (no commuting pair) is outside the reduction.
    let has_two = [cfg.bonds.m_sr, cfg.bonds.m_st, cfg.bonds.m_rt].contains(&2);
    if !has_two {
        return CaseShape {
            detail: Some("infinite with complete Coxeter graph".into()),
            ..CaseShape::plain(CaseKind::CompleteGraph)
        };
    }
    // Pick the lexicographically smallest permutation that reaches the
    // normal form m_rt = 2, m_sr >= m_st (with infinity as 0 ranked largest).
    let rank = |m: u32| if m == 0 { u64::MAX } else { m as u64 };
    let mut chosen: Option<[Gen; 3]> = None;
    for perm in permutations() {
        let m = |a: Gen, b: Gen| sys_bond(perm[a.index()], perm[b.index()]);
        if m(Gen::R, Gen::T) == 2 && rank(m(Gen::S, Gen::R)) >= rank(m(Gen::S, Gen::T)) {
            chosen = Some(perm);
            break;
        }
    }
    let perm = chosen.expect("a commuting pair admits a normal-form relabeling");
    let m = |a: Gen, b: Gen| sys_bond(perm[a.index()], perm[b.index()]);
    let (m_sr, m_st) = (m(Gen::S, Gen::R), m(Gen::S, Gen::T));
    let shape = |kind: CaseKind, detail: Option<String>| CaseShape {
        kind,
        relabeling: perm,
        detail,
    };
    match (m_sr, m_st) {
        (0, 2) => shape(CaseKind::Case1, None),
        (0, 0) => shape(CaseKind::Case2, None),
        (0, _) => shape(CaseKind::Case3, None),
        (4, 4) => shape(
            CaseKind::AffineSpecial,
            Some("affine Weyl group of type B~2 (m_sr = m_st = 4)".into()),
        ),
        (6, 3) => shape(
            CaseKind::AffineSpecial,
            Some("affine Weyl group of type G~2 (m_sr = 6, m_st = 3)".into()),
        ),
        (7, 3) => shape(
            CaseKind::AffineSpecial,
            Some("m_sr = 7 forces equal weights (reduces to the L = nl case)".into()),
        ),
        (_, 3) => shape(CaseKind::Case5, None),
        (_, _) => shape(CaseKind::Case4, None),
    }
}

fn permutations() -> [[Gen; 3]; 6] {
    let (r, s, t) = (Gen::R, Gen::S, Gen::T);
    [
        [r, s, t],
        [r, t, s],
        [s, r, t],
        [s, t, r],
        [t, r, s],
        [t, s, r],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(m_rt: u32, m_sr: u32, m_st: u32, w: (u32, u32, u32)) -> SystemConfig {
        SystemConfig::new(m_rt, m_sr, m_st, w.0, w.1, w.2)
    }

    #[test]
    fn rejects_odd_bond_weight_mismatch() {
        let err = CoxeterSystem::new(cfg(2, 5, 4, (1, 2, 3))).unwrap_err();
        assert!(err.to_string().contains("m_sr=5"), "{err}");
        assert!(CoxeterSystem::new(cfg(2, 5, 4, (2, 2, 3))).is_ok());
    }

    #[test]
    fn rejects_zero_weight_and_bad_bond() {
        assert!(CoxeterSystem::new(cfg(2, 0, 0, (0, 1, 1))).is_err());
        assert!(CoxeterSystem::new(cfg(1, 0, 0, (1, 1, 1))).is_err());
        let err = CoxeterSystem::new(cfg(2, 31, 4, (1, 1, 1))).unwrap_err();
        assert!(err.to_string().contains("m_sr=31"), "{err}");
    }

    #[test]
    fn classification_examples() {
        let kind = |m_rt, m_sr, m_st| classify(cfg(m_rt, m_sr, m_st, (1, 1, 1))).kind;
        assert_eq!(kind(2, 0, 2), CaseKind::Case1);
        assert_eq!(kind(2, 0, 0), CaseKind::Case2);
        assert_eq!(kind(2, 0, 4), CaseKind::Case3);
        assert_eq!(kind(2, 5, 4), CaseKind::Case4);
        assert_eq!(kind(2, 8, 3), CaseKind::Case5);
        assert_eq!(kind(2, 3, 3), CaseKind::Finite);
        assert_eq!(kind(2, 4, 3), CaseKind::Finite);
        assert_eq!(kind(2, 5, 3), CaseKind::Finite);
        assert_eq!(kind(2, 2, 5), CaseKind::Finite); // I2(5) x A1
        assert_eq!(kind(2, 6, 3), CaseKind::AffineSpecial);
        assert_eq!(kind(2, 7, 3), CaseKind::AffineSpecial);
        assert_eq!(kind(2, 4, 4), CaseKind::AffineSpecial);
        assert_eq!(kind(3, 3, 3), CaseKind::CompleteGraph);
        assert_eq!(kind(3, 4, 5), CaseKind::CompleteGraph);
    }

    #[test]
    fn relabeling_reaches_normal_form() {
        // m_rt = 4 infinite elsewhere: the commuting pair is (s, t).
        let shape = classify(cfg(4, 2, 0, (1, 1, 1)));
        assert_eq!(shape.kind, CaseKind::Case3);
        assert!(!shape.is_identity_relabeling());
        let sys = CoxeterSystem::new(cfg(4, 2, 0, (1, 1, 1))).unwrap();
        let relabeled = sys.relabel(shape.relabeling);
        let c = relabeled.config();
        assert_eq!(c.bonds.m_rt, 2);
        assert_eq!(c.bonds.m_sr, 0);
        assert_eq!(c.bonds.m_st, 4);
    }

    #[test]
    fn battery_configs_classify_as_expected() {
        assert_eq!(classify(cfg(2, 0, 2, (1, 3, 2))).kind, CaseKind::Case1);
        assert_eq!(classify(cfg(2, 0, 0, (1, 5, 2))).kind, CaseKind::Case2);
        assert_eq!(classify(cfg(2, 0, 4, (1, 2, 3))).kind, CaseKind::Case3);
        assert_eq!(classify(cfg(2, 5, 4, (2, 2, 1))).kind, CaseKind::Case4);
        assert_eq!(classify(cfg(2, 8, 3, (2, 1, 1))).kind, CaseKind::Case5);
        assert_eq!(classify(cfg(2, 3, 3, (1, 1, 1))).kind, CaseKind::Finite);
    }
}
