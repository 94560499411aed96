//! The teleportation experiment itself: register layout, ideal and noisy
//! runs, Haar analytics, OTOC cross-checks, state teleportation, and
//! mutual-information diagnostics.

mod channel;
mod entropies;
mod haar;
mod layout;
mod otoc;
mod record;
mod run;
mod teleport;
mod types;

pub use channel::{run_hp_channel_exact, CHANNEL_QUBIT_BOUND};
pub use entropies::{scrambling_entropies, ScramblingEntropies};
pub use haar::{haar_baselines, HaarBaselines};
pub use layout::{make_layout, Placement, ProtocolLayout};
pub use otoc::averaged_otoc_mc;
pub use record::{HpRecord, Model};
pub use run::{run_hp_ideal, run_hp_trajectories, Evolution};
pub use teleport::run_state_teleportation;
pub use types::{Diagnostics, HpResult, NoiseScope, NoiseSpec};
