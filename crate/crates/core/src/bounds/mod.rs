//! Instance-level checks of the bounds on line graphs, of the two extremal
//! characterizations, and of the complement (sum and product) results.

pub mod extremal;
pub mod line;
pub mod nordhaus;
pub mod shapes;

pub use extremal::{check_extremal, ExtremalRecord};
pub use line::{
    applicable_forms, certify, certify_all, evaluate, BoundCertificate, ChiMode, Form, LineContext, Shape, Target,
    Verdict,
};
pub use nordhaus::{check_pair, ng_scan, NgRecord, ScanReport, Violation};
