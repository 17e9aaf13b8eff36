//! Assumption-based argumentation with preferences (ABA⁺).
//!
//! Frameworks are parsed from a line-oriented text format, deductions are
//! indexed by exact assumption supports, and extensions are enumerated
//! exactly over closed assumption sets. Both the plain attack relation and
//! the preference-aware one (with attack reversal) are available, together
//! with axiom/principle checkers and comparison views against PAFs, p_ABA
//! and argument-level preference lifting.
//!
//! ```
//! use abaplus::{parse_framework, Limits, Mode, Reasoner, SemanticsName};
//!
//! let f = parse_framework(
//!     "assumption alpha\nassumption beta\ncontrary alpha stay\ncontrary beta leave\n\
//!      rule leave <- alpha\nrule stay <- beta\npref alpha < beta\n",
//! )?;
//! let r = Reasoner::new(&f, Limits::default())?;
//! let report = r.extensions(SemanticsName::Preferred, Mode::PreferenceAware)?;
//! assert_eq!(report.extensions, vec![f.set(&["beta"])?]);
//! # Ok::<(), abaplus::Error>(())
//! ```

pub mod aa;
pub mod attacks;
pub mod compliance;
pub mod deduction;
mod error;
pub mod framework;
pub mod generate;
pub mod parse;
pub mod related;
pub mod semantics;

pub use aa::{aa_extensions, AAGraph, NodeSet};
pub use attacks::{aba_attacks, attack_edge, plus_attacks, AttackEdge, AttackFlags, AttackIndex, Mode};
pub use compliance::{Complement, Principle, Status, Verdict, Witness};
pub use deduction::{
    assumption_conclusions, closure, conclusions, derivation_oracle, support_families,
    tainted_derivable, SupportFamily,
};
pub use error::{Error, Result};
pub use framework::{AssumptionSet, Framework, FrameworkBuilder, Limits, Preorder, Rule, SentenceId};
pub use parse::{parse_document, parse_framework, render, render_document};
pub use related::{ArgumentPrinciple, LanguagePreference, Paf, StructuredArgument};
pub use semantics::{ExtensionReport, Reasoner, SemanticsName};
