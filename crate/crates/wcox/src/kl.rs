//! Kazhdan-Lusztig machinery: the bar involution, the canonical basis
//! `c_w`, the mutually inverse `p`/`q` coefficient tables, structure
//! constants `h_{x,y,z}`, the truncated a-function and the leading
//! coefficients beta/gamma.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::element::Element;
use crate::error::Error;
use crate::hecke::{f_coeff, HeckeElement};
use crate::laurent::Laurent;
use crate::system::CoxeterSystem;
use crate::words::Side;

/// Cached triangular tables. Columns grow monotonically on demand up to
/// `max_scope`; completed entries are never mutated, so the contract is
/// single-writer extension with pure queries against a fixed state.
pub struct KlTables {
    max_scope: usize,
    c: BTreeMap<Element, HeckeElement>,
    bar_t: HashMap<Element, HeckeElement>,
    q_cols: BTreeMap<Element, Vec<(Element, Laurent)>>,
}

impl KlTables {
    /// `max_scope` caps the length of any element a computation may touch;
    /// exceeding it reports [`Error::ScopeExceeded`] instead of silently
    /// blowing up the tables.
    pub fn new(max_scope: usize) -> KlTables {
        KlTables {
            max_scope,
            c: BTreeMap::new(),
            bar_t: HashMap::new(),
            q_cols: BTreeMap::new(),
        }
    }

    pub fn max_scope(&self) -> usize {
        self.max_scope
    }

    /// `bar(T_w)`: the homomorphic image, i.e. the ordered product of
    /// `T_a^{-1} = T_a - (v_a - v_a^{-1}) T_e` along the reduced word of `w`.
    pub fn bar_t(&mut self, sys: &CoxeterSystem, w: Element) -> HeckeElement {
        if let Some(h) = self.bar_t.get(&w) {
            return h.clone();
        }
        let result = match w.last() {
            None => HeckeElement::unit(Element::IDENTITY),
            Some(a) => {
                let prefix = Element::from_canonical(w.word().pop());
                let la = sys.weight(a) as i32;
                let quad = Laurent::v_pow(la).sub(&Laurent::v_pow(-la));
                let h = self.bar_t(sys, prefix);
                let mut out = h.mul_gen(sys, a, Side::Right);
                out.add_scaled(&h, &quad.neg());
                out
            }
        };
        self.bar_t.insert(w, result.clone());
        result
    }

    /// The bar involution extended to arbitrary T-basis vectors:
    /// `bar(sum a_w T_w) = sum bar(a_w) bar(T_w)`.
    pub fn bar_hecke(&mut self, sys: &CoxeterSystem, h: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero();
        for (w, p) in h.terms() {
            let bar_tw = self.bar_t(sys, w);
            out.add_scaled(&bar_tw, &p.bar());
        }
        out
    }

    /// The canonical basis element `c_w = T_w + sum_{y<w} p_{y,w} T_y`: the
    /// unique bar-invariant element congruent to `T_w` mod `H_{<0}`.
    ///
    /// Triangular solve: repeatedly take the ShortLex-largest term of the
    /// defect `bar(c) - c` (decreasing length, lex tie-break) and cancel it
    /// with the unique `p in v^{-1}Z[v^{-1}]` with `p - bar(p) = defect`.
    /// A defect with nonzero constant term cannot be canceled and signals an
    /// implementation bug, reported as [`Error::DefectResolution`].
    pub fn c(&mut self, sys: &CoxeterSystem, w: Element) -> Result<HeckeElement, Error> {
        if let Some(h) = self.c.get(&w) {
            return Ok(h.clone());
        }
        if w.len() > self.max_scope {
            return Err(Error::ScopeExceeded {
                needed: w.len(),
                scope: self.max_scope,
            });
        }
        let mut c = HeckeElement::unit(w);
        let mut defect = self.bar_t(sys, w).sub(&c);
        debug_assert!(defect.coeff(w).is_zero());
        while let Some((z, delta)) = defect.top_term() {
            let delta = delta.clone();
            if delta.coeff_at(0) != 0 || delta.bar() != delta.neg() {
                return Err(Error::DefectResolution {
                    element: w.to_string(),
                    term: delta.to_string(),
                });
            }
            let p = delta.negative_part();
            c.add_term(z, &p);
            let bar_tz = self.bar_t(sys, z);
            defect.add_scaled(&bar_tz, &p.bar());
            defect.add_term(z, &p.neg());
            debug_assert!(defect.coeff(z).is_zero());
        }
        self.c.insert(w, c.clone());
        Ok(c)
    }

    /// `p_{y,w}`: the coefficient of `T_y` in `c_w`.
    pub fn p(&mut self, sys: &CoxeterSystem, y: Element, w: Element) -> Result<Laurent, Error> {
        Ok(self.c(sys, w)?.coeff(y))
    }

    /// The column `q_{.,w}` of `T_w = sum_y q_{y,w} c_y`.
    pub fn q_col(
        &mut self,
        sys: &CoxeterSystem,
        w: Element,
    ) -> Result<Vec<(Element, Laurent)>, Error> {
        if let Some(col) = self.q_cols.get(&w) {
            return Ok(col.clone());
        }
        let col = self.expand_in_c(sys, HeckeElement::unit(w))?;
        self.q_cols.insert(w, col.clone());
        Ok(col)
    }

    /// Expands a T-basis vector in the canonical basis by repeatedly
    /// stripping the ShortLex-largest remaining support element.
    pub fn expand_in_c(
        &mut self,
        sys: &CoxeterSystem,
        h: HeckeElement,
    ) -> Result<Vec<(Element, Laurent)>, Error> {
        let mut residual = h;
        let mut out: Vec<(Element, Laurent)> = Vec::new();
        while let Some((z, top)) = residual.top_term() {
            let coeff = top.clone();
            let cz = self.c(sys, z)?;
            residual.add_scaled(&cz, &coeff.neg());
            debug_assert!(residual.coeff(z).is_zero());
            out.push((z, coeff));
        }
        out.reverse();
        Ok(out)
    }

    /// `c_x c_y` in the T-basis.
    pub fn c_product(
        &mut self,
        sys: &CoxeterSystem,
        x: Element,
        y: Element,
    ) -> Result<HeckeElement, Error> {
        let cx = self.c(sys, x)?;
        let cy = self.c(sys, y)?;
        Ok(cx.mul_hecke(sys, &cy))
    }

    /// `c_x c_y` expanded in the canonical basis: the column of `h_{x,y,.}`.
    pub fn c_product_expansion(
        &mut self,
        sys: &CoxeterSystem,
        x: Element,
        y: Element,
    ) -> Result<Vec<(Element, Laurent)>, Error> {
        let product = self.c_product(sys, x, y)?;
        self.expand_in_c(sys, product)
    }

    /// Structure constant `h_{x,y,z}` in `c_x c_y = sum h_{x,y,z} c_z`.
    pub fn h_coeff(
        &mut self,
        sys: &CoxeterSystem,
        x: Element,
        y: Element,
        z: Element,
    ) -> Result<Laurent, Error> {
        let expansion = self.c_product_expansion(sys, x, y)?;
        Ok(expansion
            .into_iter()
            .find(|(w, _)| *w == z)
            .map(|(_, p)| p)
            .unwrap_or_default())
    }

    /// Truncated a-function: `max deg h_{x,y,w}` over `x, y` in the ball of
    /// the given radius. A lower bound for the true `a(w)`, and never more
    /// than the bound `N` on any verified input.
    pub fn a_truncated(
        &mut self,
        sys: &CoxeterSystem,
        w: Element,
        search_ball: usize,
    ) -> Result<i64, Error> {
        let ball = sys.ball_default(search_ball)?;
        let mut max = i64::MIN;
        for &x in &ball {
            for &y in &ball {
                let expansion = self.c_product_expansion(sys, x, y)?;
                if let Some((_, p)) = expansion.iter().find(|(z, _)| *z == w) {
                    if let Some(d) = p.deg() {
                        max = max.max(d as i64);
                    }
                }
            }
        }
        Ok(max)
    }
}

/// Leading coefficients at the bound and at the truncated a-value.
#[derive(Clone, Debug, Serialize)]
pub struct BetaGamma {
    pub beta: i128,
    pub gamma: i128,
    pub a_z: i64,
    /// Whether beta agrees across the three cyclic rotations of (x, y, z).
    pub beta_cyclic_ok: bool,
}

/// `beta` = coefficient of `v^N` in `f_{x,y,z^{-1}}`; `gamma` = coefficient
/// of `v^{a(z)}` in `h_{x,y,z^{-1}}`, with `a` truncated at `search_ball`.
pub fn beta_gamma(
    sys: &CoxeterSystem,
    tables: &mut KlTables,
    x: Element,
    y: Element,
    z: Element,
    n: i64,
    search_ball: usize,
) -> Result<BetaGamma, Error> {
    let beta = f_coeff(sys, x, y, sys.inverse(z)).coeff_at(n as i32);
    let beta2 = f_coeff(sys, y, z, sys.inverse(x)).coeff_at(n as i32);
    let beta3 = f_coeff(sys, z, x, sys.inverse(y)).coeff_at(n as i32);
    let a_z = tables.a_truncated(sys, z, search_ball)?;
    let gamma = tables
        .h_coeff(sys, x, y, sys.inverse(z))?
        .coeff_at(a_z as i32);
    Ok(BetaGamma {
        beta,
        gamma,
        a_z,
        beta_cyclic_ok: beta == beta2 && beta == beta3,
    })
}
