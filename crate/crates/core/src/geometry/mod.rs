//! Constellation geometry: circular-orbit Walker shells and all
//! Earth–satellite visibility relations (slant range, scan angle,
//! Earth-view angle, elevation, coverage verification).
//!
//! The Earth is a non-rotating sphere. Rotation is irrelevant for
//! snapshot coverage of a symmetric shell and is recorded as an ignored
//! flag on [`EarthModel`].

mod coverage;
mod walker;

pub use coverage::{
    coverage_check, coverage_check_states, phasing_scan, CoverageGrid, CoverageReport,
    PhasingScanResult,
};
pub use walker::{orbital_period_s, walker_delta};

use crate::error::{Error, Result};
use crate::units::EARTH_RADIUS_KM;

/// Spherical Earth model used throughout the geometry chain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EarthModel {
    /// Sphere radius in km.
    pub radius_km: f64,
    /// Earth rotation is not modelled; the flag records the choice.
    pub rotation_ignored: bool,
}

impl Default for EarthModel {
    fn default() -> Self {
        EarthModel {
            radius_km: EARTH_RADIUS_KM,
            rotation_ignored: true,
        }
    }
}

impl EarthModel {
    pub fn validate(&self) -> Result<()> {
        if !(self.radius_km > 0.0) {
            return Err(Error::config(format!(
                "earth radius must be positive, got {}",
                self.radius_km
            )));
        }
        Ok(())
    }
}

/// A point on (or above) the spherical Earth surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroundPoint {
    /// Geocentric latitude in degrees, in [−90, 90].
    pub latitude_deg: f64,
    /// Longitude in degrees, in [−180, 180).
    pub longitude_deg: f64,
    /// Height above the sphere in km.
    pub altitude_km: f64,
}

impl GroundPoint {
    pub fn new(latitude_deg: f64, longitude_deg: f64) -> Result<Self> {
        let p = GroundPoint {
            latitude_deg,
            longitude_deg,
            altitude_km: 0.0,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(-90.0..=90.0).contains(&self.latitude_deg) {
            return Err(Error::config(format!(
                "latitude {} outside [-90, 90]",
                self.latitude_deg
            )));
        }
        if !(-180.0..180.0).contains(&self.longitude_deg) {
            return Err(Error::config(format!(
                "longitude {} outside [-180, 180)",
                self.longitude_deg
            )));
        }
        Ok(())
    }

    /// Earth-centred Cartesian position in km.
    pub fn position_km(&self, earth: &EarthModel) -> [f64; 3] {
        let r = earth.radius_km + self.altitude_km;
        let lat = self.latitude_deg.to_radians();
        let lon = self.longitude_deg.to_radians();
        [
            r * lat.cos() * lon.cos(),
            r * lat.cos() * lon.sin(),
            r * lat.sin(),
        ]
    }

    /// Unit outward normal (local vertical on a sphere).
    pub fn local_vertical(&self) -> [f64; 3] {
        let lat = self.latitude_deg.to_radians();
        let lon = self.longitude_deg.to_radians();
        [lat.cos() * lon.cos(), lat.cos() * lon.sin(), lat.sin()]
    }
}

/// One satellite of a generated constellation at a fixed epoch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SatelliteState {
    /// Earth-centred Cartesian position in km.
    pub position_km: [f64; 3],
    /// Orbital plane index, 0-based.
    pub plane_index: u32,
    /// Slot within the plane, 0-based.
    pub slot_index: u32,
    /// Seconds past the constellation reference epoch.
    pub epoch_offset_s: f64,
}

impl SatelliteState {
    pub fn radius_km(&self) -> f64 {
        let [x, y, z] = self.position_km;
        (x * x + y * y + z * z).sqrt()
    }

    /// A state must sit on or above the surface.
    pub fn validate(&self, earth: &EarthModel) -> Result<()> {
        if self.radius_km() < earth.radius_km - 1e-9 {
            return Err(Error::config(format!(
                "satellite radius {} km is below the {} km surface",
                self.radius_km(),
                earth.radius_km
            )));
        }
        Ok(())
    }
}

/// Walker-delta constellation parameters (t/p/f notation).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstellationConfig {
    /// Total satellite count t.
    pub total_satellites: u32,
    /// Number of equally spaced orbital planes p.
    pub planes: u32,
    /// Inter-plane phasing factor f, in [0, p−1].
    pub phasing: u32,
    /// Orbital inclination in degrees.
    pub inclination_deg: f64,
    /// Circular orbit altitude in km.
    pub altitude_km: f64,
    /// Ascending-node spread in degrees: 360 (delta) or 180 (star).
    pub raan_spread_deg: f64,
    /// Minimum service elevation in degrees.
    pub min_elevation_deg: f64,
}

impl ConstellationConfig {
    pub fn validate(&self) -> Result<()> {
        if self.total_satellites == 0 || self.planes == 0 {
            return Err(Error::config("satellite and plane counts must be nonzero"));
        }
        if !self.total_satellites.is_multiple_of(self.planes) {
            return Err(Error::config(format!(
                "total satellites {} not divisible by planes {}",
                self.total_satellites, self.planes
            )));
        }
        if self.phasing >= self.planes {
            return Err(Error::config(format!(
                "phasing {} outside [0, {}]",
                self.phasing,
                self.planes - 1
            )));
        }
        if !(self.altitude_km > 0.0) {
            return Err(Error::config(format!(
                "altitude must be positive, got {}",
                self.altitude_km
            )));
        }
        if self.raan_spread_deg != 360.0 && self.raan_spread_deg != 180.0 {
            return Err(Error::config(format!(
                "raan spread must be 180 or 360 degrees, got {}",
                self.raan_spread_deg
            )));
        }
        if !(0.0..90.0).contains(&self.min_elevation_deg) {
            return Err(Error::config(format!(
                "min elevation {} outside [0, 90)",
                self.min_elevation_deg
            )));
        }
        Ok(())
    }

    /// Satellites per plane (t/p).
    pub fn slots_per_plane(&self) -> u32 {
        self.total_satellites / self.planes
    }
}

fn check_elevation_domain(elevation_deg: f64) -> Result<()> {
    if !(0.0..=90.0).contains(&elevation_deg) {
        return Err(Error::domain(format!(
            "elevation {} outside [0, 90]",
            elevation_deg
        )));
    }
    Ok(())
}

/// Line-of-sight distance in km from a ground observer at the given
/// elevation to a satellite at the given altitude.
///
/// `d = sqrt((Re+h)² − Re²·cos²ε) − Re·sin ε`
pub fn slant_range(altitude_km: f64, elevation_deg: f64, earth: &EarthModel) -> Result<f64> {
    check_elevation_domain(elevation_deg)?;
    assert!(altitude_km > 0.0, "altitude must be positive");
    let re = earth.radius_km;
    let r = re + altitude_km;
    let e = elevation_deg.to_radians();
    Ok((r * r - (re * e.cos()).powi(2)).sqrt() - re * e.sin())
}

/// Angle at the satellite between nadir and the observer direction.
///
/// `α = asin(Re·cos ε / (Re+h))`
pub fn nadir_scan_angle(altitude_km: f64, elevation_deg: f64, earth: &EarthModel) -> Result<f64> {
    check_elevation_domain(elevation_deg)?;
    assert!(altitude_km > 0.0, "altitude must be positive");
    let re = earth.radius_km;
    let ratio = re * elevation_deg.to_radians().cos() / (re + altitude_km);
    Ok(ratio.asin().to_degrees())
}

/// Half-cone angle subtending the visible Earth disc from altitude h.
///
/// `asin(Re/(Re+h))`; equals the nadir scan angle at zero elevation.
pub fn earth_view_half_angle(altitude_km: f64, earth: &EarthModel) -> f64 {
    assert!(altitude_km > 0.0, "altitude must be positive");
    let re = earth.radius_km;
    (re / (re + altitude_km)).asin().to_degrees()
}

/// Earth-central angle from the sub-satellite point to the edge of the
/// region that sees the satellite at or above `min_elevation_deg`.
///
/// `ψ = 90° − ε − α(h, ε)`
pub fn coverage_central_angle(
    altitude_km: f64,
    min_elevation_deg: f64,
    earth: &EarthModel,
) -> Result<f64> {
    Ok(90.0 - min_elevation_deg - nadir_scan_angle(altitude_km, min_elevation_deg, earth)?)
}

/// Geometric elevation of a satellite above the point's local
/// horizontal, in degrees. Negative below the horizon.
pub fn elevation_to(point: &GroundPoint, sat: &SatelliteState, earth: &EarthModel) -> f64 {
    let p = point.position_km(earth);
    let up = point.local_vertical();
    let rho = [
        sat.position_km[0] - p[0],
        sat.position_km[1] - p[1],
        sat.position_km[2] - p[2],
    ];
    let norm = (rho[0] * rho[0] + rho[1] * rho[1] + rho[2] * rho[2]).sqrt();
    let dot = rho[0] * up[0] + rho[1] * up[1] + rho[2] * up[2];
    (dot / norm).clamp(-1.0, 1.0).asin().to_degrees()
}

/// Elevation of a satellite on a shell of radius `r` seen from sea level
/// at Earth-central angle `theta` from the sub-satellite point.
///
/// Shared by the coverage fast path and the visibility round-trip tests;
/// strictly decreasing in `theta`, which is what lets the coverage
/// checker rank satellites by central angle alone.
pub(crate) fn elevation_from_central_angle(r_km: f64, cos_theta: f64, re_km: f64) -> f64 {
    let d = (r_km * r_km + re_km * re_km - 2.0 * r_km * re_km * cos_theta).sqrt();
    let sin_el = (r_km * cos_theta - re_km) / d;
    sin_el.clamp(-1.0, 1.0).asin().to_degrees()
}
