//! Exact workbench for weighted Coxeter groups of rank 3.
//!
//! Solves the rank-3 word problem exactly (ShortLex normal forms via Tits
//! rewriting), implements the Hecke algebra with unequal parameters in the
//! T-basis and the Kazhdan-Lusztig basis, computes the parabolic bound `N`,
//! and verifies boundedness together with the supporting word/length/Hecke
//! lemma families and the lowest two-sided-cell structure over
//! length-bounded balls.

pub mod cells;
pub mod element;
pub mod error;
pub mod harness;
pub mod hecke;
pub mod kl;
pub mod laurent;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod par;
pub mod report;
pub mod system;
pub mod words;

pub use cells::{cell_graph, check_prop_7_4, check_thm_7_5_and_prop_7_6, lowest_cell_sets};
pub use element::{Element, Gen, GenSet, Word, MAX_WORD_LEN, RANK};
pub use error::Error;
pub use harness::{
    default_battery, hecke_lemma_suites, length_lemma_suites, run_campaign, word_lemma_suites,
    CampaignEntry, Radii, SuiteReport, SuiteStatus,
};
pub use hecke::{compute_bound, f_coeff, t_mult, verify_bound, HeckeElement, VerifyOptions};
pub use kl::KlTables;
pub use laurent::Laurent;
pub use system::{Bonds, CaseKind, CaseShape, CoxeterSystem, SystemConfig, Weights};
pub use words::{BallIndex, Side, DEFAULT_BALL_CAP};
