//! Independent models of the group layer: a permutation representation for
//! the finite symmetric-group case, and the v = 1 specialization of the
//! Hecke algebra, which must collapse to plain group multiplication.

use std::collections::BTreeMap;

use wcox::{f_coeff, t_mult, CoxeterSystem, Element, Gen, GenSet, Side, SystemConfig};

fn sys(m_rt: u32, m_sr: u32, m_st: u32, w: (u32, u32, u32)) -> CoxeterSystem {
    CoxeterSystem::new(SystemConfig::new(m_rt, m_sr, m_st, w.0, w.1, w.2)).unwrap()
}

/// Permutations of {0,1,2,3} composed left-to-right.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Perm([u8; 4]);

impl Perm {
    const ID: Perm = Perm([0, 1, 2, 3]);

    fn transposition(i: usize) -> Perm {
        let mut p = [0u8, 1, 2, 3];
        p.swap(i, i + 1);
        Perm(p)
    }

    fn compose(self, rhs: Perm) -> Perm {
        // (self * rhs)(i) = rhs(self(i)): apply self first
        Perm([
            rhs.0[self.0[0] as usize],
            rhs.0[self.0[1] as usize],
            rhs.0[self.0[2] as usize],
            rhs.0[self.0[3] as usize],
        ])
    }

    fn inversions(self) -> usize {
        let mut count = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.0[i] > self.0[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

fn gen_perm(g: Gen) -> Perm {
    // bonds (m_rt, m_sr, m_st) = (2, 3, 3) realize the adjacent
    // transpositions as s = (1 2), r = (0 1), t = (2 3)
    match g {
        Gen::R => Perm::transposition(0),
        Gen::S => Perm::transposition(1),
        Gen::T => Perm::transposition(2),
        _ => unreachable!(),
    }
}

fn to_perm(x: Element) -> Perm {
    x.letters().fold(Perm::ID, |p, g| p.compose(gen_perm(g)))
}

/// The whole word engine against the permutation model of S4: bijectivity,
/// lengths, products, inverses and descent sets.
#[test]
fn a3_matches_symmetric_group() {
    let a3 = sys(2, 3, 3, (1, 1, 1));
    let ball = a3.ball_default(10).unwrap();
    assert_eq!(ball.len(), 24);

    let mut model: BTreeMap<Perm, Element> = BTreeMap::new();
    for &x in &ball {
        let p = to_perm(x);
        assert_eq!(
            x.len(),
            p.inversions(),
            "length != inversion count at {x:?}"
        );
        assert!(
            model.insert(p, x).is_none(),
            "two elements map to one permutation"
        );
        assert_eq!(to_perm(a3.inverse(x)).compose(p), Perm::ID);
    }

    for &x in &ball {
        for &y in &ball {
            let engine = a3.mult(x, y);
            let reference = to_perm(x).compose(to_perm(y));
            assert_eq!(
                model[&reference], engine,
                "product mismatch at {x:?} * {y:?}"
            );
        }
        // right descents are positions where appending the transposition
        // removes an inversion
        let p = to_perm(x);
        for g in Gen::ALL {
            let expected = p.compose(gen_perm(g)).inversions() < p.inversions();
            assert_eq!(a3.is_descent(x, g, Side::Right), expected);
        }
    }
}

/// H3 sanity: bonds (2, 5, 3) give the 120-element group with a longest
/// element of length 15.
#[test]
fn h3_order_and_longest() {
    let h3 = sys(2, 5, 3, (1, 1, 1));
    assert!(h3.is_finite());
    let all = h3.ball_default(100).unwrap();
    assert_eq!(all.len(), 120);
    let (w0, weight) = h3.longest_element(GenSet::FULL).unwrap();
    assert_eq!(w0.len(), 15);
    assert_eq!(weight, 15);
}

/// Setting v = 1 turns the quadratic relation into an involution, so the
/// T-basis specializes to the group algebra: f_{x,y,z}(1) = [z = xy].
#[test]
fn hecke_specializes_to_group_algebra_at_v_equals_1() {
    let eval_at_one = |p: &wcox::Laurent| -> i128 { p.terms().map(|(_, c)| c).sum() };
    for s in [
        sys(2, 3, 3, (1, 1, 1)),
        sys(2, 0, 0, (1, 5, 2)),
        sys(2, 5, 4, (2, 2, 1)),
        sys(2, 8, 3, (2, 1, 1)),
    ] {
        let ball = s.ball_default(4).unwrap();
        for &x in &ball {
            for &y in &ball {
                let xy = s.mult(x, y);
                let product = t_mult(&s, x, y);
                for (z, p) in product.terms() {
                    let expect = if z == xy { 1 } else { 0 };
                    assert_eq!(eval_at_one(p), expect, "f_{{{x:?},{y:?},{z:?}}}(1)");
                }
                // and the group product itself always carries coefficient 1
                assert_eq!(eval_at_one(&f_coeff(&s, x, y, xy)), 1);
            }
        }
    }
}
