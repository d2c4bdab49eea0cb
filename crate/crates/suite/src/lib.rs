//! Structure-law verification suite for finite commutative rings.
//!
//! Each check encodes one law about the (weakly) 1-absorbing prime hierarchy
//! as an executable scan over a single ring: hypotheses are enumerated
//! exhaustively, conclusions are asserted instance by instance, and every
//! failure carries a concrete witness that the classifier can re-certify.
//! The runner applies every in-scope check to every ring of a corpus and
//! aggregates the verdicts into a deterministic report, distinguishing laws
//! that were actually exercised from laws whose hypotheses never fired.

pub mod checks;
pub mod context;
pub mod corpus;
pub mod report;
pub mod runner;
pub mod search;
pub mod verdict;

pub use checks::{
    check_min_primes_construction, run_check, CheckDef, Scope, CHECKS, MIN_PRIMES_ID,
};
pub use context::RingContext;
pub use corpus::{default_corpus, parse_corpus, Corpus, CorpusEntry};
pub use report::{CheckTally, CorpusRow, SuiteConfig, SuiteReport, SuiteSummary};
pub use runner::{recertify, run_suite, RunOptions};
pub use search::{search_open_question, OpenQuestionHit, OpenQuestionReport};
pub use verdict::{CheckBody, Outcome, TheoremVerdict, Witness};
