//! Cross-checks the incremental word engine against the independent
//! rewrite-closure oracle.

use wcox::oracle;
use wcox::{CoxeterSystem, Gen, SystemConfig, Word};

fn sys(m_rt: u32, m_sr: u32, m_st: u32, w: (u32, u32, u32)) -> CoxeterSystem {
    CoxeterSystem::new(SystemConfig::new(m_rt, m_sr, m_st, w.0, w.1, w.2)).unwrap()
}

/// Every element of the ball and every one-letter extension must agree with
/// the oracle's from-scratch reduction.
fn agree_on_ball(s: &CoxeterSystem, radius: usize) {
    let ball = s.ball_default(radius).unwrap();
    for &x in &ball {
        assert_eq!(
            oracle::normal_form(s, x.word()),
            x.word(),
            "oracle disagrees that {x:?} is canonical"
        );
        if x.len() < radius {
            for a in Gen::ALL {
                let engine = s.right_ext(x, a);
                let oracle_nf = oracle::normal_form(s, x.word().push(a));
                assert_eq!(engine.word(), oracle_nf, "mismatch at {x:?} * {a}");
            }
        }
    }
}

#[test]
fn engine_matches_oracle_case2() {
    agree_on_ball(&sys(2, 0, 0, (1, 5, 2)), 6);
}

#[test]
fn engine_matches_oracle_case4() {
    agree_on_ball(&sys(2, 5, 4, (2, 2, 1)), 6);
}

#[test]
fn engine_matches_oracle_case5() {
    agree_on_ball(&sys(2, 8, 3, (2, 1, 1)), 6);
}

#[test]
fn engine_matches_oracle_on_unreduced_words() {
    let s = sys(2, 5, 4, (2, 2, 1));
    let words = [
        "ss", "tst", "ststs", "srsrs", "rsrsr", "ttrr", "strst", "rstsrts", "srsrsrs",
    ];
    for text in words {
        let w = Word::parse(text).unwrap();
        assert_eq!(
            s.normal_form(text).unwrap().word(),
            oracle::normal_form(&s, w),
            "mismatch on {text}"
        );
    }
}

#[test]
fn bruhat_matches_subword_oracle() {
    let s = sys(2, 8, 3, (2, 1, 1));
    let ball = s.ball_default(4).unwrap();
    for &x in &ball {
        for &y in &ball {
            assert_eq!(
                s.bruhat_leq(x, y),
                oracle::bruhat_leq_subword(&s, x.word(), y.word()),
                "bruhat mismatch at {x:?} <= {y:?}"
            );
        }
    }
}

#[test]
fn dihedral_enumeration_matches() {
    let s = sys(2, 8, 3, (2, 1, 1));
    let dihedral = oracle::dihedral_elements(&s, Gen::S, Gen::R).unwrap();
    assert_eq!(dihedral.len(), 16); // |I2(8)|
    for w in &dihedral {
        assert_eq!(s.normal_form(&w.to_string()).unwrap().word(), *w);
    }
}
