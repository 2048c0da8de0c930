//! Deep-research agent runtime.
//!
//! The crate is organized around a single loop: a policy model researches a
//! question through web tools, answers, audits its own answer, and either
//! stops or keeps digging. Around that loop sit the pieces needed to train
//! and evaluate such an agent offline:
//!
//! - [`transcript`] — the tag protocol every model turn must follow
//! - [`workflow`] — the research/verification state machine for one thread
//! - [`toolbox`] — web search and page reading, fixture-backed or live
//! - [`modelio`] — model provider contract, judge, and thread summarizer
//! - [`metrics`] — F1 / exact-match / AI-judge scoring and the tiered reward
//! - [`rloo`] — leave-one-out policy-gradient math on toy softmax policies
//! - [`rts`] — research-threads synthesis (n threads, summarize, combine)
//! - [`harness`] — benchmark loading, mean@k evaluation, report rendering
//!
//! Everything runs deterministically against scripted model doubles and
//! fixture tools; live HTTP backends are behind the `live` feature.

pub mod config;
pub mod harness;
pub mod metrics;
pub mod modelio;
pub mod prompt;
pub mod rloo;
pub mod rts;
pub mod toolbox;
pub mod transcript;
pub mod workflow;

pub use harness::{evaluate, load_benchmark, render_report, Agent, EvalConfig, EvalReport};
pub use modelio::{ModelError, ModelProvider, ScriptedProvider};
pub use toolbox::{FixtureToolbox, Toolbox};
pub use workflow::{run_thread, Mode, ResearchThread, ThreadBudget, ThreadOutcome};
