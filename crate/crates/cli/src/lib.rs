//! Library half of the `sumset-forge` binary: instance files, per-instance
//! verification, campaigns, report rendering and kernel timing.

pub mod bench;
pub mod campaign;
pub mod instance;
pub mod report;
pub mod span;
pub mod verify;

pub use campaign::{run_campaign, CampaignParams, CampaignReport, Counts, Mode, Space};
pub use instance::{load_instance, parse_instance, InstanceDocument, InstanceError, LayerDocument};
pub use span::Span;
pub use verify::{verify, CheckRecord, Status};

/// Worker count override for campaigns.
pub const THREADS_ENV: &str = "SUMSET_FORGE_THREADS";
