//! Walker-delta constellation generation on circular orbits.

use crate::error::Result;
use crate::units::EARTH_MU_KM3_S2;

use super::{ConstellationConfig, EarthModel, SatelliteState};

/// Generate all satellite states of a Walker constellation at `epoch_s`
/// seconds past the reference epoch.
///
/// Plane k has ascending node `k·(raan_spread/p)`; slot j of plane k sits
/// at argument of latitude `j·(360/(t/p)) + k·f·(360/t)` plus the mean
/// motion accumulated over the epoch. All orbits are circular at radius
/// `Re + h`, so argument of latitude and anomaly coincide.
pub fn walker_delta(
    config: &ConstellationConfig,
    epoch_s: f64,
    earth: &EarthModel,
) -> Result<Vec<SatelliteState>> {
    config.validate()?;
    earth.validate()?;

    let slots = config.slots_per_plane();
    let radius = earth.radius_km + config.altitude_km;
    let mean_motion = (EARTH_MU_KM3_S2 / radius.powi(3)).sqrt(); // rad/s
    let inc = config.inclination_deg.to_radians();
    let (sin_i, cos_i) = (inc.sin(), inc.cos());

    let mut states = Vec::with_capacity(config.total_satellites as usize);
    for plane in 0..config.planes {
        let raan = (plane as f64 * config.raan_spread_deg / config.planes as f64).to_radians();
        let (sin_o, cos_o) = (raan.sin(), raan.cos());
        let plane_phase =
            plane as f64 * config.phasing as f64 * 360.0 / config.total_satellites as f64;
        for slot in 0..slots {
            let u = (slot as f64 * 360.0 / slots as f64 + plane_phase).to_radians()
                + mean_motion * epoch_s;
            let (sin_u, cos_u) = (u.sin(), u.cos());
            states.push(SatelliteState {
                position_km: [
                    radius * (cos_u * cos_o - sin_u * cos_i * sin_o),
                    radius * (cos_u * sin_o + sin_u * cos_i * cos_o),
                    radius * sin_u * sin_i,
                ],
                plane_index: plane,
                slot_index: slot,
                epoch_offset_s: epoch_s,
            });
        }
    }
    Ok(states)
}

/// Orbital period in seconds for a circular orbit at the given altitude.
pub fn orbital_period_s(altitude_km: f64, earth: &EarthModel) -> f64 {
    let radius = earth.radius_km + altitude_km;
    2.0 * std::f64::consts::PI * (radius.powi(3) / EARTH_MU_KM3_S2).sqrt()
}
