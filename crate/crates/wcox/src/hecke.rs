//! The Hecke algebra in the T-basis: products, structure constants
//! `f_{x,y,z}`, the lattice `H_{<=0}`, the parabolic bound `N`, and the
//! ball-scan boundedness verifier.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::element::{Element, Gen, GenSet};
use crate::error::Error;
use crate::laurent::Laurent;
use crate::par::{self, Merge};
use crate::report::{Bounded, CoeffWitness, DegreeMax, Triple, WITNESS_CAP};
use crate::system::{CoxeterSystem, SystemConfig};
use crate::words::{BallIndex, Side, DEFAULT_BALL_CAP};
use crate::MAX_WORD_LEN;

/// A vector in the T-basis: finite map from canonical elements to nonzero
/// Laurent coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HeckeElement {
    terms: BTreeMap<Element, Laurent>,
}

impl serde::Serialize for HeckeElement {
    /// Sorted array of `{ "w": word, "coeff": laurent }` records.
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = ser.serialize_seq(Some(self.terms.len()))?;
        #[derive(serde::Serialize)]
        struct Term<'a> {
            w: &'a Element,
            coeff: &'a Laurent,
        }
        for (w, coeff) in &self.terms {
            seq.serialize_element(&Term { w, coeff })?;
        }
        seq.end()
    }
}

impl std::fmt::Display for HeckeElement {
    /// Human form: `(coeff)*T_w + ...` in ShortLex order, `0` when empty.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, p)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if w.is_identity() {
                write!(f, "({p})*T_e")?;
            } else {
                write!(f, "({p})*T_{w}")?;
            }
        }
        Ok(())
    }
}

impl HeckeElement {
    pub fn zero() -> HeckeElement {
        HeckeElement::default()
    }

    /// The basis vector `T_w`.
    pub fn unit(w: Element) -> HeckeElement {
        let mut terms = BTreeMap::new();
        terms.insert(w, Laurent::one());
        HeckeElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Element, &Laurent)> {
        self.terms.iter().map(|(&w, p)| (w, p))
    }

    /// Coefficient of `T_z` (zero polynomial when absent).
    pub fn coeff(&self, z: Element) -> Laurent {
        self.terms.get(&z).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, z: Element) -> Option<&Laurent> {
        self.terms.get(&z)
    }

    /// The longest (ShortLex-largest) support element.
    pub fn top_term(&self) -> Option<(Element, &Laurent)> {
        self.terms.iter().next_back().map(|(&w, p)| (w, p))
    }

    pub fn add_term(&mut self, w: Element, p: &Laurent) {
        if p.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_default();
        *entry = entry.add(p);
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    /// `self += k * h`.
    pub fn add_scaled(&mut self, h: &HeckeElement, k: &Laurent) {
        if k.is_zero() {
            return;
        }
        for (w, p) in h.terms() {
            self.add_term(w, &p.mul(k));
        }
    }

    pub fn sub(&self, h: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (w, p) in h.terms() {
            out.add_term(w, &p.neg());
        }
        out
    }

    /// Multiplication by `T_a` on the given side: ascending terms move to
    /// `T_{wa}`, descending terms contribute `(v_a - v_a^{-1}) T_w + T_{wa}`.
    pub fn mul_gen(&self, sys: &CoxeterSystem, a: Gen, side: Side) -> HeckeElement {
        let la = sys.weight(a) as i32;
        let quad = Laurent::v_pow(la).sub(&Laurent::v_pow(-la));
        let mut out = HeckeElement::zero();
        for (w, p) in self.terms() {
            let wa = sys.ext(w, a, side);
            out.add_term(wa, p);
            if wa.len() < w.len() {
                out.add_term(w, &p.mul(&quad));
            }
        }
        out
    }

    /// Multiplication by `T_y` on the given side, folding one generator at a
    /// time through the reduced word of `y`.
    pub fn mul_elem(&self, sys: &CoxeterSystem, y: Element, side: Side) -> HeckeElement {
        let mut h = self.clone();
        match side {
            Side::Right => {
                for a in y.letters() {
                    h = h.mul_gen(sys, a, Side::Right);
                }
            }
            Side::Left => {
                let w = y.word();
                for i in (0..w.len()).rev() {
                    h = h.mul_gen(sys, w.letter(i), Side::Left);
                }
            }
        }
        h
    }

    /// Full Hecke product, folding the right factor term by term.
    pub fn mul_hecke(&self, sys: &CoxeterSystem, rhs: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (v, q) in rhs.terms() {
            let part = self.mul_elem(sys, v, Side::Right);
            out.add_scaled(&part, q);
        }
        out
    }

    /// Every coefficient in `Z[v^{-1}]`.
    pub fn in_h_leq0(&self) -> bool {
        self.in_h_leq0_shifted(0)
    }

    /// `v^{-k} * self` in `H_{<=0}`: every coefficient degree <= `k`.
    pub fn in_h_leq0_shifted(&self, k: i64) -> bool {
        self.terms
            .values()
            .all(|p| p.deg().is_none_or(|d| (d as i64) <= k))
    }

    /// Every coefficient in `v^{-1} Z[v^{-1}]`.
    pub fn in_h_lt0(&self) -> bool {
        self.terms.values().all(|p| p.in_v_inv_z_vinv())
    }

    pub fn max_coeff_degree(&self) -> Option<i64> {
        self.terms
            .values()
            .filter_map(|p| p.deg())
            .map(|d| d as i64)
            .max()
    }
}

/// `T_x * T_y` in the T-basis. Length-additive pairs give exactly `T_{xy}`.
pub fn t_mult(sys: &CoxeterSystem, x: Element, y: Element) -> HeckeElement {
    assert!(
        x.len() + y.len() <= MAX_WORD_LEN,
        "product support length {} exceeds the word cap ({MAX_WORD_LEN})",
        x.len() + y.len()
    );
    HeckeElement::unit(x).mul_elem(sys, y, Side::Right)
}

/// Structure constant: the coefficient of `T_z` in `T_x T_y`.
pub fn f_coeff(sys: &CoxeterSystem, x: Element, y: Element, z: Element) -> Laurent {
    t_mult(sys, x, y).coeff(z)
}

/// One parabolic subgroup's contribution to the bound.
#[derive(Clone, Debug, Serialize)]
pub struct BoundEntry {
    pub j: GenSet,
    pub longest: Element,
    pub weight: i64,
    pub attains: bool,
}

/// The bound `N` with its per-parabolic breakdown and the argmax set `M`.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub n: i64,
    pub finite_parabolics: Vec<BoundEntry>,
    /// Longest elements of the finite parabolic subgroups attaining `N`.
    pub m_set: Vec<Element>,
}

/// `N = max { L(w_J) : J subset of S, W_J finite }`, over all eight subsets.
pub fn compute_bound(sys: &CoxeterSystem) -> BoundReport {
    let mut entries: Vec<BoundEntry> = Vec::new();
    for mask in 0u8..8 {
        let j = Gen::ALL
            .into_iter()
            .filter(|g| mask & (1 << g.index()) != 0)
            .fold(GenSet::EMPTY, |acc, g| acc.with(g));
        if let Some((longest, weight)) = sys.longest_element(j) {
            entries.push(BoundEntry {
                j,
                longest,
                weight,
                attains: false,
            });
        }
    }
    entries.sort_by_key(|e| (e.j.len(), e.j));
    let n = entries.iter().map(|e| e.weight).max().unwrap_or(0);
    for e in &mut entries {
        e.attains = e.weight == n;
    }
    let mut m_set: Vec<Element> = entries
        .iter()
        .filter(|e| e.attains && !e.longest.is_identity())
        .map(|e| e.longest)
        .collect();
    m_set.sort_unstable();
    m_set.dedup();
    BoundReport {
        n,
        finite_parabolics: entries,
        m_set,
    }
}

/// Options for [`verify_bound`].
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub x_max_len: usize,
    pub y_max_len: usize,
    pub ball_cap: usize,
    /// Test hook: pretend the bound is this value instead of computing it.
    #[doc(hidden)]
    pub bound_override: Option<i64>,
}

impl VerifyOptions {
    pub fn new(x_max_len: usize, y_max_len: usize) -> VerifyOptions {
        VerifyOptions {
            x_max_len,
            y_max_len,
            ball_cap: DEFAULT_BALL_CAP,
            bound_override: None,
        }
    }
}

/// Where the sharpness degree came from.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SharpnessSource {
    /// The scan itself attained `N`.
    Scan,
    /// `w_J` lies outside the scanned ball; `f_{w_J,w_J,w_J}` was computed
    /// directly as the witness product.
    WitnessProduct,
}

#[derive(Clone, Debug, Serialize)]
pub struct Sharpness {
    pub degree: i64,
    pub source: SharpnessSource,
    pub witness: Triple,
    pub ok: bool,
}

/// Boundedness verification report over `ball(x_max_len) x ball(y_max_len)`.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    pub config: SystemConfig,
    pub n: i64,
    pub bound: BoundReport,
    pub x_max_len: usize,
    pub y_max_len: usize,
    pub pairs_checked: u64,
    pub max_degree: i64,
    pub max_witnesses: Vec<Triple>,
    pub sharpness: Sharpness,
    /// Triples with `deg f_{x,y,z} > N` (must be empty).
    pub bound_violations: Vec<Triple>,
    /// Violations of `f_{x,y,e} = delta_{x,y^{-1}}` (must be empty).
    pub fact_a_violations: Vec<CoeffWitness>,
    /// Violations of `deg f_{x,y,z} <= min(L(x),L(y),L(z))` (must be empty).
    pub fact_b_violations: Vec<CoeffWitness>,
    pub pass: bool,
}

#[derive(Clone)]
struct ScanAcc {
    pairs: u64,
    max: DegreeMax,
    bound_viol: Bounded<Triple>,
    fact_a_viol: Bounded<CoeffWitness>,
    fact_b_viol: Bounded<CoeffWitness>,
}

impl ScanAcc {
    fn new() -> ScanAcc {
        ScanAcc {
            pairs: 0,
            max: DegreeMax::new(),
            bound_viol: Bounded::new(WITNESS_CAP),
            fact_a_viol: Bounded::new(WITNESS_CAP),
            fact_b_viol: Bounded::new(WITNESS_CAP),
        }
    }
}

impl Merge for ScanAcc {
    fn merge(self, other: Self) -> Self {
        ScanAcc {
            pairs: self.pairs + other.pairs,
            max: self.max.merge(other.max),
            bound_viol: self.bound_viol.merge(other.bound_viol),
            fact_a_viol: self.fact_a_viol.merge(other.fact_a_viol),
            fact_b_viol: self.fact_b_viol.merge(other.fact_b_viol),
        }
    }
}

/// Scans every pair `(x, y)` in the given balls, checking
/// `deg f_{x,y,z} <= N` for every `z`, fact (a) `f_{x,y,e} = delta_{x,y^{-1}}`
/// and fact (b) `v^{-min(L)} f in Z[v^{-1}]`, then settles sharpness.
///
/// Streams pairs; only scalar maxima and bounded witness lists are retained.
pub fn verify_bound(sys: &CoxeterSystem, opts: &VerifyOptions) -> Result<VerifyReport, Error> {
    let bound = compute_bound(sys);
    let n = opts.bound_override.unwrap_or(bound.n);
    let xs = sys.ball(opts.x_max_len, opts.ball_cap)?;
    let ys = BallIndex::new(sys.ball(opts.y_max_len, opts.ball_cap)?);

    let acc = par::map_reduce(xs.len(), ScanAcc::new, |i| {
        let x = xs[i];
        let lx = sys.weight_of(x);
        let x_inv = sys.inverse(x);
        let mut acc = ScanAcc::new();
        ys.walk(
            HeckeElement::unit(x),
            |h, a, _| h.mul_gen(sys, a, Side::Right),
            |y, h| {
                acc.pairs += 1;
                let min_xy = lx.min(sys.weight_of(y));
                for (z, p) in h.terms() {
                    let deg = p.deg().expect("stored coefficients are nonzero") as i64;
                    acc.max.observe(
                        deg,
                        Triple {
                            x,
                            y,
                            z,
                            degree: deg,
                        },
                    );
                    if deg > n {
                        acc.bound_viol.push(Triple {
                            x,
                            y,
                            z,
                            degree: deg,
                        });
                    }
                    if deg > min_xy.min(sys.weight_of(z)) {
                        acc.fact_b_viol.push(CoeffWitness::new(x, y, z, p));
                    }
                }
                let at_e = h.coeff(Element::IDENTITY);
                let expected_one = y == x_inv;
                if (expected_one && !at_e.is_one()) || (!expected_one && !at_e.is_zero()) {
                    acc.fact_a_viol
                        .push(CoeffWitness::new(x, y, Element::IDENTITY, &at_e));
                }
            },
        );
        acc
    });

    let sharpness = settle_sharpness(sys, &bound, n, &acc.max);
    let pass = acc.bound_viol.is_empty()
        && acc.fact_a_viol.is_empty()
        && acc.fact_b_viol.is_empty()
        && sharpness.ok;
    Ok(VerifyReport {
        schema: "wcox/verify/1",
        config: sys.config(),
        n,
        bound,
        x_max_len: opts.x_max_len,
        y_max_len: opts.y_max_len,
        pairs_checked: acc.pairs,
        max_degree: acc.max.degree,
        max_witnesses: acc.max.witnesses.iter().cloned().collect(),
        sharpness,
        bound_violations: acc.bound_viol.iter().cloned().collect(),
        fact_a_violations: acc.fact_a_viol.iter().cloned().collect(),
        fact_b_violations: acc.fact_b_viol.iter().cloned().collect(),
        pass,
    })
}

fn settle_sharpness(
    sys: &CoxeterSystem,
    bound: &BoundReport,
    n: i64,
    max: &DegreeMax,
) -> Sharpness {
    if max.degree == n {
        let witness = max
            .witnesses
            .iter()
            .next()
            .cloned()
            .expect("max degree always has a witness");
        return Sharpness {
            degree: max.degree,
            source: SharpnessSource::Scan,
            witness,
            ok: true,
        };
    }
    // The ball missed w_J; the witness product f_{w_J,w_J,w_J} has degree
    // L(w_J) = N exactly.
    let u = bound.m_set.first().copied().unwrap_or(Element::IDENTITY);
    let p = f_coeff(sys, u, u, u);
    let degree = p.deg().map_or(i64::MIN, |d| d as i64);
    Sharpness {
        degree,
        source: SharpnessSource::WitnessProduct,
        witness: Triple {
            x: u,
            y: u,
            z: u,
            degree,
        },
        ok: degree == n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::SystemConfig;

    fn sys(m_rt: u32, m_sr: u32, m_st: u32, w: (u32, u32, u32)) -> CoxeterSystem {
        CoxeterSystem::new(SystemConfig::new(m_rt, m_sr, m_st, w.0, w.1, w.2)).unwrap()
    }

    fn case2() -> CoxeterSystem {
        sys(2, 0, 0, (1, 5, 2))
    }

    fn el(s: &CoxeterSystem, text: &str) -> Element {
        s.normal_form(text).unwrap()
    }

    fn vs(n: i32) -> Laurent {
        Laurent::v_pow(n)
    }

    #[test]
    fn quadratic_relation() {
        let c2 = case2();
        let s = el(&c2, "s");
        // T_s * T_s = (v_s - v_s^{-1}) T_s + T_e, with L(s) = 5
        let h = t_mult(&c2, s, s);
        assert_eq!(h.coeff(s), vs(5).sub(&vs(-5)));
        assert_eq!(h.coeff(Element::IDENTITY), Laurent::one());
        assert_eq!(h.support_len(), 2);
    }

    #[test]
    fn mul_gen_examples() {
        let c2 = case2();
        // T_e * T_s = T_s
        let h = HeckeElement::unit(Element::IDENTITY).mul_gen(&c2, Gen::S, Side::Right);
        assert_eq!(h, HeckeElement::unit(el(&c2, "s")));
        // T_{rt} * T_r = (v_r - v_r^{-1}) T_{rt} + T_t   (m_rt = 2, L(r) = 1)
        let rt = el(&c2, "rt");
        let h = HeckeElement::unit(rt).mul_gen(&c2, Gen::R, Side::Right);
        assert_eq!(h.coeff(rt), vs(1).sub(&vs(-1)));
        assert_eq!(h.coeff(el(&c2, "t")), Laurent::one());
        assert_eq!(h.support_len(), 2);
    }

    #[test]
    fn length_additive_products_are_units() {
        let c4 = sys(2, 5, 4, (2, 2, 1));
        let x = el(&c4, "tsr");
        let y = el(&c4, "tst");
        let xy = c4.mult(x, y);
        if xy.len() == x.len() + y.len() {
            assert_eq!(t_mult(&c4, x, y), HeckeElement::unit(xy));
        }
        // e is always length-additive
        assert_eq!(t_mult(&c4, Element::IDENTITY, y), HeckeElement::unit(y));
    }

    #[test]
    fn case2_recursion_identity() {
        // T_{x's} T_{sy'} = (v_s - v_s^{-1}) T_{x'sy'} + T_{x'} T_{y'} for x'=r, y'=t
        let c2 = case2();
        let (r, t) = (el(&c2, "r"), el(&c2, "t"));
        let lhs = t_mult(&c2, el(&c2, "rs"), el(&c2, "st"));
        let mut rhs = t_mult(&c2, r, t);
        let quad = vs(5).sub(&vs(-5));
        rhs.add_scaled(&HeckeElement::unit(el(&c2, "rst")), &quad);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn f_coeff_facts() {
        let c2 = case2();
        let ball = c2.ball_default(3).unwrap();
        for &x in &ball {
            for &y in &ball {
                let at_e = f_coeff(&c2, x, y, Element::IDENTITY);
                if x == c2.inverse(y) {
                    assert!(at_e.is_one());
                } else {
                    assert!(at_e.is_zero());
                }
            }
        }
        let s = el(&c2, "s");
        assert_eq!(f_coeff(&c2, s, s, s), vs(5).sub(&vs(-5)));
    }

    #[test]
    fn dihedral_top_degree() {
        // deg f_{w_st, w_st, w_st} = L(w_st) in the finite dihedral
        for (s, expect) in [
            (sys(2, 0, 4, (1, 2, 3)), 10),
            (sys(2, 5, 4, (2, 2, 1)), 6),
            (sys(2, 8, 3, (2, 1, 1)), 3),
        ] {
            let (wst, weight) = s
                .longest_element(GenSet::from_gens(&[Gen::S, Gen::T]))
                .unwrap();
            assert_eq!(weight, expect);
            let p = f_coeff(&s, wst, wst, wst);
            assert_eq!(p.deg(), Some(expect as i32));
        }
    }

    #[test]
    fn associativity_on_ball() {
        let c5 = sys(2, 8, 3, (2, 1, 1));
        let ball = c5.ball_default(3).unwrap();
        // deterministic sample of triples
        for (i, &x) in ball.iter().enumerate().step_by(3) {
            for (j, &y) in ball.iter().enumerate().step_by(4) {
                for &z in ball.iter().skip((i + j) % 5).step_by(7) {
                    let xy_z = t_mult(&c5, x, y).mul_elem(&c5, z, Side::Right);
                    let x_yz = t_mult(&c5, y, z).mul_elem(&c5, x, Side::Left);
                    assert_eq!(xy_z, x_yz, "assoc failed at {x:?},{y:?},{z:?}");
                }
            }
        }
    }

    #[test]
    fn antiautomorphism_symmetry() {
        // f_{x,y,z} = f_{y^{-1},x^{-1},z^{-1}}
        let c4 = sys(2, 5, 4, (2, 2, 1));
        let ball = c4.ball_default(3).unwrap();
        for (i, &x) in ball.iter().enumerate().step_by(2) {
            for &y in ball.iter().skip(i % 3).step_by(3) {
                let h = t_mult(&c4, x, y);
                let h_rev = t_mult(&c4, c4.inverse(y), c4.inverse(x));
                for (z, p) in h.terms() {
                    assert_eq!(&h_rev.coeff(c4.inverse(z)), p);
                }
                assert_eq!(h.support_len(), h_rev.support_len());
            }
        }
    }

    #[test]
    fn h_leq0_predicates() {
        let c2 = case2();
        let s = el(&c2, "s");
        assert!(HeckeElement::unit(s).in_h_leq0());
        let h = t_mult(&c2, s, s);
        assert!(!h.in_h_leq0());
        assert!(h.in_h_leq0_shifted(5));
        assert!(!HeckeElement::unit(s).in_h_lt0());
    }

    #[test]
    fn bound_examples() {
        // CASE2 (inf, inf), weights (1,5,2): N = max(L(rt), L(s)) = 5
        assert_eq!(compute_bound(&case2()).n, 5);
        // CASE3 (inf, 4), weights (1,2,3): N = max(L(rt), L(w_st)) = 10
        assert_eq!(compute_bound(&sys(2, 0, 4, (1, 2, 3))).n, 10);
        // CASE5 (8, 3), weights (2,1,1): N = L(w_sr) = 12
        assert_eq!(compute_bound(&sys(2, 8, 3, (2, 1, 1))).n, 12);
        // CASE4 (5, 4), weights (2,2,1): N = max(10, 6) = 10
        assert_eq!(compute_bound(&sys(2, 5, 4, (2, 2, 1))).n, 10);
        // finite A3, equal weights: N = L(w_0) = 6
        assert_eq!(compute_bound(&sys(2, 3, 3, (1, 1, 1))).n, 6);
    }

    #[test]
    fn m_set_examples() {
        let b = compute_bound(&case2());
        assert_eq!(b.m_set, vec![el(&case2(), "s")]);
        let c5 = sys(2, 8, 3, (2, 1, 1));
        let b = compute_bound(&c5);
        let (wsr, _) = c5
            .longest_element(GenSet::from_gens(&[Gen::S, Gen::R]))
            .unwrap();
        assert_eq!(b.m_set, vec![wsr]);
    }

    #[test]
    fn verify_tiny_ball_max_is_generator_weight() {
        // at radius 1 only quadratic relations fire: max degree = max L(a)
        for s in [case2(), sys(2, 5, 4, (2, 2, 1))] {
            let report = verify_bound(&s, &VerifyOptions::new(1, 1)).unwrap();
            let expect = Gen::ALL
                .into_iter()
                .map(|g| s.weight(g) as i64)
                .max()
                .unwrap();
            assert_eq!(report.max_degree, expect);
            assert!(report.bound_violations.is_empty());
            assert_eq!(report.pairs_checked, 16);
        }
    }

    #[test]
    fn verify_small_ball_passes() {
        let report = verify_bound(&case2(), &VerifyOptions::new(4, 4)).unwrap();
        assert!(report.pass);
        assert_eq!(report.max_degree, 5);
        assert!(matches!(report.sharpness.source, SharpnessSource::Scan));
    }

    #[test]
    fn corrupted_bound_fails_with_witness() {
        let mut opts = VerifyOptions::new(3, 3);
        opts.bound_override = Some(compute_bound(&case2()).n - 1);
        let report = verify_bound(&case2(), &opts).unwrap();
        assert!(!report.pass);
        assert!(!report.bound_violations.is_empty());
    }

    #[test]
    fn sharpness_by_witness_product_when_wj_outside_ball() {
        // CASE5: w_sr has length 8, outside a radius-2 scan
        let c5 = sys(2, 8, 3, (2, 1, 1));
        let report = verify_bound(&c5, &VerifyOptions::new(2, 2)).unwrap();
        assert!(report.max_degree < 12);
        assert!(matches!(
            report.sharpness.source,
            SharpnessSource::WitnessProduct
        ));
        assert_eq!(report.sharpness.degree, 12);
        assert!(report.pass);
    }
}
