//! Example families, random generation, and the verification harness.

mod explore;
mod named;
mod random;
mod table;
mod verify;

pub use explore::{explore_family, explore_questions, ExplorationRecord, ExplorationRun, ExploreConfig};
pub use named::{gen_named, s3_element, NamedFamily, NamedParams};
pub use random::{
    gen_random, generate, sample_family, trial_rng, GenConfig, RandomConfig, Stratum, SweepConfig, MAX_RANDOM_ELEMENTS,
};
pub use table::{compute_row, reproduce_table, Cell, CellValue, TableReport, TableRow, COLUMNS, ROWS};
pub use verify::{
    family_digest, haussler_holds, verify_bouquet_pipeline, verify_density, verify_family, verify_shift_step,
    BouquetPipeline, DensityReport, PropertyCheck, PropertyReport, VerifyReport,
};
