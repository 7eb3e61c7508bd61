//! Link analysis for direct satellite-to-handset mmWave access.
//!
//! The crate models the full chain needed to judge whether a dense VLEO
//! constellation can serve 5G NR user equipment in FR2:
//!
//! - [`geometry`] — circular-orbit Walker constellations, slant range,
//!   scan/nadir angles and global coverage verification.
//! - [`regulatory`] — ITU Article-21 power-flux-density masks and the
//!   PFD ↔ EIRP conversions they imply.
//! - [`antenna`] — direct-radiating-array and UE panel models: gain,
//!   beamwidth, scan broadening, element spacing and EIRP composition.
//! - [`channel`] — free-space loss, pluggable atmospheric attenuation,
//!   lognormal shadow margins and receiver noise chains.
//! - [`linkbudget`] — downlink/uplink ledgers, MCS selection, capacity
//!   rollups and parameter sweeps.
//!
//! All angles are degrees at the API boundary and radians internally.
//! dB arithmetic uses `10*log10` without truncation; rounding happens
//! only at report emission.

// validation guards are written `!(x > 0.0)` so NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod antenna;
pub mod channel;
mod error;
pub mod geometry;
pub mod linkbudget;
pub mod regulatory;
pub mod units;

pub use error::{Error, Result};
pub use geometry::{ConstellationConfig, EarthModel, GroundPoint, SatelliteState};
pub use linkbudget::{LinkLedger, McsTable, SatellitePayload, UeTerminal};
pub use regulatory::{PfdValue, RegulatoryMask};
