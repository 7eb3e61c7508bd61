//! Physical constants and dB-domain helpers shared across modules.

/// Speed of light in m/s.
pub const SPEED_OF_LIGHT_M_S: f64 = 2.997_924_58e8;

/// Boltzmann constant in dBW/K/Hz. The round −228.6 is the value every
/// dB-domain noise identity in this crate is anchored to.
pub const BOLTZMANN_DBW_K_HZ: f64 = -228.6;

/// Thermal noise floor in dBm/Hz at the reference temperature.
pub const THERMAL_FLOOR_DBM_HZ: f64 = -174.0;

/// Earth gravitational parameter in km³/s².
pub const EARTH_MU_KM3_S2: f64 = 398_600.441_8;

/// Mean Earth radius in km.
pub const EARTH_RADIUS_KM: f64 = 6371.0;

/// Power ratio to decibels.
#[inline]
pub fn db(ratio: f64) -> f64 {
    10.0 * ratio.log10()
}

/// Decibels to power ratio.
#[inline]
pub fn from_db(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// Wavelength in metres for a carrier in GHz.
#[inline]
pub fn wavelength_m(frequency_ghz: f64) -> f64 {
    SPEED_OF_LIGHT_M_S / (frequency_ghz * 1e9)
}

#[inline]
pub fn dbw_to_dbm(dbw: f64) -> f64 {
    dbw + 30.0
}

#[inline]
pub fn dbm_to_dbw(dbm: f64) -> f64 {
    dbm - 30.0
}
