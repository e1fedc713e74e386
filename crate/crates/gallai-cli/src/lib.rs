//! Library side of the `gallai` binary: frozen reference data, the
//! verification suite, and output rendering. Kept as a library so the
//! integration tests can drive the suite and reuse the golden tables
//! without shelling out.

pub mod checks;
pub mod golden;
pub mod report;
