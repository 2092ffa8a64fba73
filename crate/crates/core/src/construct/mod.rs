//! Step-by-step construction of multiple structures with certificates,
//! coordinate-change verification and normal-form recognition.

pub mod chain;
pub mod examples;
pub mod coords;
pub mod recognize;

pub use chain::{run_construction, Branch, ChainResult, ConstructionPlan, StepCertificate};
pub use examples::{all_examples, examples_report, line_in_p4, lines_in_p3, plane_in_p6, CertifiedExample};
pub use coords::{step3_change, stepk_change, stepk_ideals, verify_coordinate_change};
pub use recognize::{recognize_normal_form, NormalForm, Recognition};
