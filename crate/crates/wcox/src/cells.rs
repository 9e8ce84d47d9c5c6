//! Lowest two-sided-cell structure: the sets `M` and `Lambda`, witness
//! checks for the a-function characterization of `Lambda` and for the cell
//! statements about `x * w_J`, and ball-truncated cell preorder graphs.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::element::{Element, Gen, GenSet};
use crate::error::Error;
use crate::hecke::{compute_bound, f_coeff, BoundReport, HeckeElement};
use crate::kl::KlTables;
use crate::par::{self, Merge};
use crate::report::{Bounded, Triple, WITNESS_CAP};
use crate::system::CoxeterSystem;
use crate::words::{BallIndex, Side};

/// `M` and the ball part of `Lambda = W . M . W` (length-additive closure),
/// with one witnessed factorization `w = x * u * y` per Lambda element.
pub struct CellSets {
    pub m_set: Vec<Element>,
    pub lambda: Vec<Element>,
    factorizations: BTreeMap<Element, (Element, Element, Element)>,
}

impl CellSets {
    pub fn contains(&self, w: Element) -> bool {
        self.factorizations.contains_key(&w)
    }

    pub fn factorization(&self, w: Element) -> Option<(Element, Element, Element)> {
        self.factorizations.get(&w).copied()
    }
}

/// Computes `M` from the bound's argmax set and `Lambda` inside the ball by
/// closing `M` under length-increasing multiplication on either side.
pub fn lowest_cell_sets(sys: &CoxeterSystem, ball_len: usize) -> CellSets {
    let bound = compute_bound(sys);
    let mut fact: BTreeMap<Element, (Element, Element, Element)> = BTreeMap::new();
    let mut queue: Vec<Element> = Vec::new();
    for &u in &bound.m_set {
        if u.len() <= ball_len {
            fact.insert(u, (Element::IDENTITY, u, Element::IDENTITY));
            queue.push(u);
        }
    }
    while let Some(w) = queue.pop() {
        let (x, u, y) = fact[&w];
        for a in Gen::ALL {
            let right = sys.right_ext(w, a);
            if right.len() == w.len() + 1 && right.len() <= ball_len && !fact.contains_key(&right) {
                // growth of w forces growth of the outer factor
                fact.insert(right, (x, u, sys.right_ext(y, a)));
                queue.push(right);
            }
            let left = sys.left_ext(w, a);
            if left.len() == w.len() + 1 && left.len() <= ball_len && !fact.contains_key(&left) {
                fact.insert(left, (sys.left_ext(x, a), u, y));
                queue.push(left);
            }
        }
    }
    let lambda: Vec<Element> = fact.keys().copied().collect();
    CellSets {
        m_set: bound.m_set,
        lambda,
        factorizations: fact,
    }
}

/// Report for the Lambda = { a = N } verification.
#[derive(Clone, Debug, Serialize)]
pub struct Prop74Report {
    pub schema: &'static str,
    pub n: i64,
    pub lambda_ball: usize,
    pub witness_ball: usize,
    pub lambda_size: usize,
    pub pairs_checked: u64,
    /// Constructive witnesses `deg f_{u x^{-1}, x u y, u y} = N` that failed.
    pub witness_failures: Vec<Triple>,
    /// Lambda elements no scanned pair certified at degree N. A nonempty
    /// list falsifies the implementation or the truncation radius, not the
    /// theorem.
    pub truncation_misses: Vec<Element>,
    /// Elements outside Lambda that some pair certified at degree N.
    pub unexpected_attainers: Vec<Element>,
    /// Scan triples exceeding N (independent boundedness regression).
    pub scan_bound_violations: Vec<Triple>,
    pub pass: bool,
}

#[derive(Clone)]
struct AttainAcc {
    pairs: u64,
    attained: BTreeSet<Element>,
    viol: Bounded<Triple>,
}

impl AttainAcc {
    fn new() -> AttainAcc {
        AttainAcc {
            pairs: 0,
            attained: BTreeSet::new(),
            viol: Bounded::new(WITNESS_CAP),
        }
    }
}

impl Merge for AttainAcc {
    fn merge(mut self, other: Self) -> Self {
        self.pairs += other.pairs;
        self.attained.extend(other.attained);
        AttainAcc {
            pairs: self.pairs,
            attained: self.attained,
            viol: self.viol.merge(other.viol),
        }
    }
}

/// Verifies both inclusions of `Lambda = { w : a(w) = N }` on the ball.
///
/// `a(w)` attains `N` within the scan radius iff some pair has
/// `deg f_{x,y,w} = N`: the canonical-basis corrections to the T-coefficient
/// of `c_x c_y` all live in strictly lower degree (the off-diagonal `p` are
/// in `v^{-1}Z[v^{-1}]` and every `deg f <= N` on the scanned support), so
/// degree-N terms of `h_{x,y,w}` and of `f_{x,y,w}` coincide. Each Lambda
/// element is first certified by the constructive witness from its stored
/// factorization, then the full pair scan settles both inclusions.
pub fn check_prop_7_4(
    sys: &CoxeterSystem,
    lambda_ball: usize,
    witness_ball: usize,
    ball_cap: usize,
) -> Result<Prop74Report, Error> {
    let n = compute_bound(sys).n;
    let sets = lowest_cell_sets(sys, lambda_ball);

    let mut witness_failures = Vec::new();
    for &w in &sets.lambda {
        let (x, u, y) = sets
            .factorization(w)
            .expect("lambda elements carry factorizations");
        let a = sys.inverse(sys.mult(x, u));
        let c = sys.mult(u, y);
        let deg = f_coeff(sys, a, w, c).deg().map_or(i64::MIN, |d| d as i64);
        if deg != n {
            witness_failures.push(Triple {
                x: a,
                y: w,
                z: c,
                degree: deg,
            });
        }
    }

    let xs = sys.ball(witness_ball, ball_cap)?;
    let ys = BallIndex::new(sys.ball(witness_ball, ball_cap)?);
    let acc = par::map_reduce(xs.len(), AttainAcc::new, |i| {
        let x = xs[i];
        let mut acc = AttainAcc::new();
        ys.walk(
            HeckeElement::unit(x),
            |h, a, _| h.mul_gen(sys, a, Side::Right),
            |y, h| {
                acc.pairs += 1;
                for (z, p) in h.terms() {
                    let deg = p.deg().expect("nonzero coefficient") as i64;
                    if deg > n {
                        acc.viol.push(Triple {
                            x,
                            y,
                            z,
                            degree: deg,
                        });
                    }
                    if deg == n && z.len() <= lambda_ball {
                        acc.attained.insert(z);
                    }
                }
            },
        );
        acc
    });

    let lambda_set: BTreeSet<Element> = sets.lambda.iter().copied().collect();
    let truncation_misses: Vec<Element> = lambda_set.difference(&acc.attained).copied().collect();
    let unexpected_attainers: Vec<Element> =
        acc.attained.difference(&lambda_set).copied().collect();
    let pass = witness_failures.is_empty()
        && truncation_misses.is_empty()
        && unexpected_attainers.is_empty()
        && acc.viol.is_empty();
    Ok(Prop74Report {
        schema: "wcox/prop74/1",
        n,
        lambda_ball,
        witness_ball,
        lambda_size: sets.lambda.len(),
        pairs_checked: acc.pairs,
        witness_failures,
        truncation_misses,
        unexpected_attainers,
        scan_bound_violations: acc.viol.iter().cloned().collect(),
        pass,
    })
}

/// Per-parabolic results for the lowest-cell witness checks.
#[derive(Clone, Debug, Serialize)]
pub struct ParabolicCellCheck {
    pub w_j: Element,
    pub j: GenSet,
    /// Pairs `(w_J y^{-1}, y w_J)` checked at degree exactly N.
    pub cell_witnesses_checked: u64,
    pub cell_witness_failures: Vec<Triple>,
    /// Products `x * w_J` checked via `deg f_{x w_J, w_J, x w_J} = N`.
    pub coset_witnesses_checked: u64,
    pub coset_witness_failures: Vec<Triple>,
    /// Shell used for the set comparison: lengths <= ball - l(w_J).
    pub shell_len: usize,
    pub set_equal: bool,
    pub missing_from_descent_side: Vec<Element>,
    pub missing_from_coset_side: Vec<Element>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellWitnessReport {
    pub schema: &'static str,
    pub n: i64,
    pub ball: usize,
    pub checks: Vec<ParabolicCellCheck>,
    pub pass: bool,
}

#[derive(Clone)]
struct WitnessAcc {
    checked: u64,
    failures: Bounded<Triple>,
}

impl WitnessAcc {
    fn new() -> WitnessAcc {
        WitnessAcc {
            checked: 0,
            failures: Bounded::new(WITNESS_CAP),
        }
    }
}

impl Merge for WitnessAcc {
    fn merge(self, other: Self) -> Self {
        WitnessAcc {
            checked: self.checked + other.checked,
            failures: self.failures.merge(other.failures),
        }
    }
}

/// For each `w_J` in `M`: every `y` in the ball with `R(y) cap J` empty must
/// give `deg f_{w_J y^{-1}, y w_J, w_J} = N`; every length-additive product
/// `x * w_J` in the ball must give `deg f_{x w_J, w_J, x w_J} = N`; and on
/// the safe shell the coset `{x * w_J}` must equal `{z : R(z) = J}`.
pub fn check_thm_7_5_and_prop_7_6(
    sys: &CoxeterSystem,
    ball_len: usize,
    ball_cap: usize,
) -> Result<CellWitnessReport, Error> {
    let bound: BoundReport = compute_bound(sys);
    let n = bound.n;
    let ball = sys.ball(ball_len, ball_cap)?;
    let mut checks = Vec::new();
    for entry in bound
        .finite_parabolics
        .iter()
        .filter(|e| e.attains && !e.longest.is_identity())
    {
        let w_j = entry.longest;
        let j = entry.j;

        let cell_ys: Vec<Element> = ball
            .iter()
            .copied()
            .filter(|&y| sys.descents(y, Side::Right).intersect(j).is_empty())
            .collect();
        let cell = par::map_reduce(cell_ys.len(), WitnessAcc::new, |i| {
            let y = cell_ys[i];
            let mut acc = WitnessAcc::new();
            let left = sys.mult(w_j, sys.inverse(y));
            let right = sys.mult(y, w_j);
            let deg = f_coeff(sys, left, right, w_j)
                .deg()
                .map_or(i64::MIN, |d| d as i64);
            acc.checked += 1;
            if deg != n {
                acc.failures.push(Triple {
                    x: left,
                    y: right,
                    z: w_j,
                    degree: deg,
                });
            }
            acc
        });

        let coset_xs: Vec<Element> = ball
            .iter()
            .copied()
            .filter(|&x| x.len() + w_j.len() <= ball_len)
            .collect();
        let mut coset_products: BTreeSet<Element> = BTreeSet::new();
        for &x in &coset_xs {
            let z = sys.mult(x, w_j);
            if z.len() == x.len() + w_j.len() {
                coset_products.insert(z);
            }
        }
        let products: Vec<Element> = coset_products.iter().copied().collect();
        let coset = par::map_reduce(products.len(), WitnessAcc::new, |i| {
            let z = products[i];
            let mut acc = WitnessAcc::new();
            let deg = f_coeff(sys, z, w_j, z).deg().map_or(i64::MIN, |d| d as i64);
            acc.checked += 1;
            if deg != n {
                acc.failures.push(Triple {
                    x: z,
                    y: w_j,
                    z,
                    degree: deg,
                });
            }
            acc
        });

        let shell_len = ball_len.saturating_sub(w_j.len());
        let coset_shell: BTreeSet<Element> = coset_products
            .iter()
            .copied()
            .filter(|z| z.len() <= shell_len)
            .collect();
        let descent_shell: BTreeSet<Element> = ball
            .iter()
            .copied()
            .filter(|&z| z.len() <= shell_len && sys.descents(z, Side::Right) == j)
            .collect();
        let missing_from_descent_side: Vec<Element> =
            coset_shell.difference(&descent_shell).copied().collect();
        let missing_from_coset_side: Vec<Element> =
            descent_shell.difference(&coset_shell).copied().collect();

        checks.push(ParabolicCellCheck {
            w_j,
            j,
            cell_witnesses_checked: cell.checked,
            cell_witness_failures: cell.failures.iter().cloned().collect(),
            coset_witnesses_checked: coset.checked,
            coset_witness_failures: coset.failures.iter().cloned().collect(),
            shell_len,
            set_equal: missing_from_descent_side.is_empty() && missing_from_coset_side.is_empty(),
            missing_from_descent_side,
            missing_from_coset_side,
        });
    }
    let pass = checks.iter().all(|c| {
        c.cell_witness_failures.is_empty() && c.coset_witness_failures.is_empty() && c.set_equal
    });
    Ok(CellWitnessReport {
        schema: "wcox/cells75-76/1",
        n,
        ball: ball_len,
        checks,
        pass,
    })
}

/// A strongly connected component of a cell preorder graph.
#[derive(Clone, Debug, Serialize)]
pub struct Scc {
    pub elements: Vec<Element>,
    /// Touches the ball boundary (or a product escaped the ball): the true
    /// cell may be larger.
    pub incomplete: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum EdgeKind {
    L,
    R,
    Lr,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellEdge {
    pub from: Element,
    pub to: Element,
    pub kind: EdgeKind,
}

/// Experimental comparison of the ball-truncated two-sided component of
/// `w_J` against `Lambda`; no claim either way is made.
#[derive(Clone, Debug, Serialize)]
pub struct Remark77Scan {
    pub w_j: Element,
    pub shell_len: usize,
    pub scc_in_shell: Vec<Element>,
    pub lambda_in_shell: Vec<Element>,
    /// Shell elements two-sided-connected to `w_J` in the ball graph but not
    /// in `Lambda`: candidate counterexamples, pending deeper scans.
    pub candidates: Vec<Element>,
    pub note: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellGraph {
    pub schema: &'static str,
    pub ball: usize,
    pub note: &'static str,
    pub edges: Vec<CellEdge>,
    pub left_sccs: Vec<Scc>,
    pub right_sccs: Vec<Scc>,
    pub two_sided_sccs: Vec<Scc>,
    /// Sources whose products left the ball; their components are flagged.
    pub truncated_sources: Vec<Element>,
    pub experimental_remark_7_7: Option<Remark77Scan>,
}

impl CellGraph {
    /// Plain edge list, one `from to L|R|LR` line per edge; the identity is
    /// written as `e`.
    pub fn edge_list_text(&self) -> String {
        let name = |x: Element| {
            if x.is_identity() {
                "e".to_string()
            } else {
                x.to_string()
            }
        };
        let mut out = String::new();
        for e in &self.edges {
            let kind = match e.kind {
                EdgeKind::L => "L",
                EdgeKind::R => "R",
                EdgeKind::Lr => "LR",
            };
            out.push_str(&format!("{} {} {}\n", name(e.from), name(e.to), kind));
        }
        out
    }
}

/// Edges `w -> z` whenever `c_z` appears in `c_a c_w` (left) or `c_w c_a`
/// (right); SCCs of the edge-generated preorders approximate cells from
/// below on the ball.
pub fn cell_graph(
    sys: &CoxeterSystem,
    tables: &mut KlTables,
    ball_len: usize,
    ball_cap: usize,
) -> Result<CellGraph, Error> {
    let ball = sys.ball(ball_len, ball_cap)?;
    let index: BTreeMap<Element, usize> = ball.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let n = ball.len();
    let mut left_adj = vec![Vec::new(); n];
    let mut right_adj = vec![Vec::new(); n];
    let mut edge_kinds: BTreeMap<(Element, Element), (bool, bool)> = BTreeMap::new();
    let mut truncated: BTreeSet<Element> = BTreeSet::new();

    for (wi, &w) in ball.iter().enumerate() {
        for a in Gen::ALL {
            let ga = sys.right_ext(Element::IDENTITY, a);
            for (side_left, expansion) in [
                (true, tables.c_product_expansion(sys, ga, w)?),
                (false, tables.c_product_expansion(sys, w, ga)?),
            ] {
                for (z, h) in expansion {
                    if h.is_zero() || z == w {
                        continue;
                    }
                    match index.get(&z) {
                        Some(&zi) => {
                            let entry = edge_kinds.entry((w, z)).or_insert((false, false));
                            if side_left {
                                entry.0 = true;
                                left_adj[wi].push(zi);
                            } else {
                                entry.1 = true;
                                right_adj[wi].push(zi);
                            }
                        }
                        None => {
                            truncated.insert(w);
                        }
                    }
                }
            }
        }
    }

    let mut both_adj = vec![Vec::new(); n];
    for i in 0..n {
        both_adj[i].extend(left_adj[i].iter().copied());
        both_adj[i].extend(right_adj[i].iter().copied());
    }
    let make_sccs = |adj: &Vec<Vec<usize>>| -> Vec<Scc> {
        let comps = strongly_connected(n, adj);
        let mut out: Vec<Scc> = comps
            .into_iter()
            .map(|comp| {
                let elements: Vec<Element> = {
                    let mut v: Vec<Element> = comp.iter().map(|&i| ball[i]).collect();
                    v.sort_unstable();
                    v
                };
                let incomplete = elements
                    .iter()
                    .any(|x| x.len() == ball_len || truncated.contains(x));
                Scc {
                    elements,
                    incomplete,
                }
            })
            .collect();
        out.sort_by_key(|c| c.elements[0]);
        out
    };
    let left_sccs = make_sccs(&left_adj);
    let right_sccs = make_sccs(&right_adj);
    let two_sided_sccs = make_sccs(&both_adj);

    let edges: Vec<CellEdge> = edge_kinds
        .into_iter()
        .map(|((from, to), (l, r))| CellEdge {
            from,
            to,
            kind: match (l, r) {
                (true, true) => EdgeKind::Lr,
                (true, false) => EdgeKind::L,
                _ => EdgeKind::R,
            },
        })
        .collect();

    let experimental = compute_bound(sys)
        .m_set
        .first()
        .copied()
        .filter(|wj| wj.len() <= ball_len)
        .map(|wj| {
            let shell_len = ball_len.saturating_sub(1);
            let scc = two_sided_sccs
                .iter()
                .find(|c| c.elements.contains(&wj))
                .expect("w_J is a ball vertex");
            let scc_in_shell: Vec<Element> = scc
                .elements
                .iter()
                .copied()
                .filter(|x| x.len() <= shell_len)
                .collect();
            let lambda: BTreeSet<Element> =
                lowest_cell_sets(sys, ball_len).lambda.into_iter().collect();
            let lambda_in_shell: Vec<Element> = lambda
                .iter()
                .copied()
                .filter(|x| x.len() <= shell_len)
                .collect();
            let candidates: Vec<Element> = scc_in_shell
                .iter()
                .copied()
                .filter(|x| !lambda.contains(x))
                .collect();
            Remark77Scan {
                w_j: wj,
                shell_len,
                scc_in_shell,
                lambda_in_shell,
                candidates,
                note: "ball-truncated evidence only; equality of Lambda with the lowest \
                       two-sided cell is conjectural and is not claimed here",
            }
        });

    Ok(CellGraph {
        schema: "wcox/cellgraph/1",
        ball: ball_len,
        note: "ball-truncated under-approximation",
        edges,
        left_sccs,
        right_sccs,
        two_sided_sccs,
        truncated_sources: truncated.into_iter().collect(),
        experimental_remark_7_7: experimental,
    })
}

/// Iterative Tarjan strongly-connected components, deterministic order.
fn strongly_connected(n: usize, adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    #[derive(Clone, Copy)]
    struct Frame {
        v: usize,
        edge: usize,
    }
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0usize;
    let mut comps: Vec<Vec<usize>> = Vec::new();

    for start in 0..n {
        if index[start] != usize::MAX {
            continue;
        }
        let mut call: Vec<Frame> = vec![Frame { v: start, edge: 0 }];
        index[start] = next_index;
        low[start] = next_index;
        next_index += 1;
        stack.push(start);
        on_stack[start] = true;
        while let Some(frame) = call.last_mut() {
            let v = frame.v;
            if frame.edge < adj[v].len() {
                let w = adj[v][frame.edge];
                frame.edge += 1;
                if index[w] == usize::MAX {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push(Frame { v: w, edge: 0 });
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
                let done = *frame;
                call.pop();
                if let Some(parent) = call.last() {
                    low[parent.v] = low[parent.v].min(low[done.v]);
                }
            }
        }
    }
    comps
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

    #[test]
    fn lambda_case2_is_words_containing_s() {
        // M = {s} (N = 5); Lambda on the ball = every normal form containing s
        let c2 = case2();
        let sets = lowest_cell_sets(&c2, 5);
        assert_eq!(sets.m_set, vec![c2.normal_form("s").unwrap()]);
        assert!(!sets.contains(Element::IDENTITY));
        let expect: Vec<Element> = c2
            .ball_default(5)
            .unwrap()
            .into_iter()
            .filter(|w| w.support().contains(Gen::S))
            .collect();
        assert_eq!(sets.lambda, expect);
        // every Lambda element factors through M
        for &w in &sets.lambda {
            let (x, u, y) = sets.factorization(w).unwrap();
            assert_eq!(c2.mult(c2.mult(x, u), y), w);
            assert_eq!(x.len() + u.len() + y.len(), w.len());
            assert!(sets.m_set.contains(&u));
        }
    }

    #[test]
    fn lambda_contains_m() {
        let c5 = sys(2, 8, 3, (2, 1, 1));
        let sets = lowest_cell_sets(&c5, 9);
        for &u in &sets.m_set {
            assert!(sets.contains(u));
        }
        // e is never in Lambda
        assert!(!sets.contains(Element::IDENTITY));
    }

    #[test]
    fn prop_7_4_small_scan() {
        let c2 = case2();
        let report = check_prop_7_4(&c2, 3, 5, 100_000).unwrap();
        assert!(report.pass, "{report:?}");
        assert!(report.witness_failures.is_empty());
        assert!(report.truncation_misses.is_empty());
        assert!(report.unexpected_attainers.is_empty());
    }

    #[test]
    fn thm_7_5_and_prop_7_6_small() {
        let c2 = case2();
        let report = check_thm_7_5_and_prop_7_6(&c2, 5, 100_000).unwrap();
        assert!(report.pass, "{report:?}");
        let check = &report.checks[0];
        assert!(check.cell_witnesses_checked > 0);
        assert!(check.coset_witnesses_checked > 0);
        assert!(check.set_equal);
    }

    #[test]
    fn cell_graph_finite_group() {
        // A3 with equal weights: the two-sided component of w_0 is {w_0},
        // and e sits alone
        let a3 = sys(2, 3, 3, (1, 1, 1));
        let mut kl = KlTables::new(8);
        let graph = cell_graph(&a3, &mut kl, 6, 100_000).unwrap();
        let (w0, _) = a3.longest_element(GenSet::FULL).unwrap();
        let w0_scc = graph
            .two_sided_sccs
            .iter()
            .find(|c| c.elements.contains(&w0))
            .unwrap();
        assert_eq!(w0_scc.elements, vec![w0]);
        let e_scc = graph
            .two_sided_sccs
            .iter()
            .find(|c| c.elements.contains(&Element::IDENTITY))
            .unwrap();
        assert_eq!(e_scc.elements, vec![Element::IDENTITY]);
        // the full group is enumerated, nothing is truncated
        assert!(graph.truncated_sources.is_empty());
    }

    #[test]
    fn cell_graph_coset_left_cell() {
        // all x * w_J in the safe shell share the left component of w_J
        let c2 = case2();
        let mut kl = KlTables::new(7);
        let graph = cell_graph(&c2, &mut kl, 4, 100_000).unwrap();
        let s = c2.normal_form("s").unwrap();
        let left_of_s = graph
            .left_sccs
            .iter()
            .find(|c| c.elements.contains(&s))
            .unwrap();
        for x in c2.ball_default(2).unwrap() {
            let z = c2.mult(x, s);
            if z.len() == x.len() + 1 && z.len() <= 3 {
                assert!(
                    left_of_s.elements.contains(&z),
                    "{z:?} not in left component of s: {left_of_s:?}"
                );
            }
        }
    }

    #[test]
    fn edge_list_format() {
        let a3 = sys(2, 3, 3, (1, 1, 1));
        let mut kl = KlTables::new(4);
        let graph = cell_graph(&a3, &mut kl, 2, 100_000).unwrap();
        let text = graph.edge_list_text();
        for line in text.lines() {
            let parts: Vec<&str> = line.split(' ').collect();
            assert_eq!(parts.len(), 3);
            assert!(["L", "R", "LR"].contains(&parts[2]));
        }
        assert!(text.contains("e "), "identity rendered as e");
    }

    #[test]
    fn tarjan_matches_small_example() {
        // cycle 0 -> 1 -> 2 -> 0 plus tail 3 -> 0
        let adj = vec![vec![1], vec![2], vec![0], vec![0]];
        let comps = strongly_connected(4, &adj);
        assert!(comps.contains(&vec![0, 1, 2]));
        assert!(comps.contains(&vec![3]));
    }
}
