//! Propagation impairments and receiver noise: free-space loss,
//! pluggable atmospheric attenuation, lognormal shadow margins and the
//! noise-chain quantities a budget needs.

use crate::error::{Error, Result};
use crate::units::{db, BOLTZMANN_DBW_K_HZ, SPEED_OF_LIGHT_M_S, THERMAL_FLOOR_DBM_HZ};

/// Elevation-dependent atmospheric attenuation.
///
/// The flat and cosecant kinds are analytic; the table kind carries
/// sampled total-attenuation data (for example exported from a
/// propagation prediction run) and interpolates linearly in elevation.
#[derive(Debug, Clone, PartialEq)]
pub enum AttenuationModel {
    /// Constant margin at any elevation.
    Flat(f64),
    /// Linear interpolation over `(elevation_deg, loss_db)` knots.
    Table(AttenuationTable),
    /// `zenith_loss / sin(elevation)` slant scaling.
    Cosecant { zenith_db: f64 },
}

impl AttenuationModel {
    /// Margins are loss magnitudes; negative values are rejected.
    pub fn validate(&self) -> Result<()> {
        match self {
            AttenuationModel::Flat(value) if *value < 0.0 => Err(Error::config(format!(
                "flat attenuation {value} dB must be non-negative"
            ))),
            AttenuationModel::Cosecant { zenith_db } if *zenith_db < 0.0 => Err(Error::config(
                format!("zenith attenuation {zenith_db} dB must be non-negative"),
            )),
            // tables check their own knots on construction
            _ => Ok(()),
        }
    }
}

/// Sampled attenuation-versus-elevation table.
#[derive(Debug, Clone, PartialEq)]
pub struct AttenuationTable {
    knots: Vec<(f64, f64)>,
}

impl AttenuationTable {
    /// Knots must be strictly ascending in elevation, span at least
    /// [5°, 90°], and carry non-negative losses.
    pub fn new(knots: Vec<(f64, f64)>) -> Result<Self> {
        if knots.len() < 2 {
            return Err(Error::config("attenuation table needs at least two knots"));
        }
        for pair in knots.windows(2) {
            if !(pair[0].0 < pair[1].0) {
                return Err(Error::config(format!(
                    "attenuation table elevations not strictly increasing at {}",
                    pair[1].0
                )));
            }
        }
        if knots.first().unwrap().0 > 5.0 || knots.last().unwrap().0 < 90.0 {
            return Err(Error::config(
                "attenuation table must span at least [5, 90] degrees",
            ));
        }
        if knots.iter().any(|k| k.1 < 0.0) {
            return Err(Error::config("attenuation losses must be non-negative"));
        }
        Ok(AttenuationTable { knots })
    }

    /// Parse the two-column CSV format `elevation_deg,loss_db` with a
    /// mandatory header row.
    pub fn from_csv_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, header)) if header.trim().eq_ignore_ascii_case("elevation_deg,loss_db") => {}
            _ => {
                return Err(Error::config(
                    "attenuation CSV must start with header 'elevation_deg,loss_db'",
                ))
            }
        }
        let mut knots = Vec::new();
        for (idx, line) in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut cols = line.split(',');
            let parse = |field: Option<&str>| -> Result<f64> {
                field
                    .map(str::trim)
                    .and_then(|s| s.parse::<f64>().ok())
                    .ok_or_else(|| {
                        Error::config(format!(
                            "attenuation CSV line {}: bad row '{line}'",
                            idx + 1
                        ))
                    })
            };
            let elevation = parse(cols.next())?;
            let loss = parse(cols.next())?;
            if cols.next().is_some() {
                return Err(Error::config(format!(
                    "attenuation CSV line {}: expected two columns",
                    idx + 1
                )));
            }
            knots.push((elevation, loss));
        }
        AttenuationTable::new(knots)
    }

    pub fn knots(&self) -> &[(f64, f64)] {
        &self.knots
    }

    fn interpolate(&self, elevation_deg: f64) -> f64 {
        let knots = &self.knots;
        let pos = knots.partition_point(|k| k.0 < elevation_deg);
        if pos == 0 {
            return knots[0].1;
        }
        if pos == knots.len() {
            return knots[knots.len() - 1].1;
        }
        let (e0, l0) = knots[pos - 1];
        let (e1, l1) = knots[pos];
        l0 + (l1 - l0) * (elevation_deg - e0) / (e1 - e0)
    }
}

/// Receiver front-end noise description.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseChain {
    pub noise_figure_db: f64,
    pub antenna_temperature_k: f64,
    pub input_loss_db: f64,
    pub reference_temperature_k: f64,
}

impl NoiseChain {
    pub fn validate(&self) -> Result<()> {
        if self.noise_figure_db < 0.0 || self.input_loss_db < 0.0 {
            return Err(Error::config("noise figure and input loss must be >= 0"));
        }
        if !(self.antenna_temperature_k > 0.0) || !(self.reference_temperature_k > 0.0) {
            return Err(Error::config("temperatures must be positive"));
        }
        Ok(())
    }
}

/// Free-space spreading loss `20·log10(4π·d·f/c)` in dB.
pub fn free_space_loss(frequency_ghz: f64, distance_km: f64) -> f64 {
    assert!(
        frequency_ghz > 0.0 && distance_km > 0.0,
        "frequency and distance must be positive"
    );
    20.0 * (4.0 * std::f64::consts::PI * (distance_km * 1000.0) * (frequency_ghz * 1e9)
        / SPEED_OF_LIGHT_M_S)
        .log10()
}

/// Atmospheric loss at an elevation, per the chosen model.
///
/// Table and cosecant kinds are defined on [5°, 90°]; the flat kind
/// accepts any elevation.
pub fn atmospheric_loss(model: &AttenuationModel, elevation_deg: f64) -> Result<f64> {
    match model {
        AttenuationModel::Flat(value) => Ok(*value),
        AttenuationModel::Table(table) => {
            check_slant_domain(elevation_deg)?;
            Ok(table.interpolate(elevation_deg))
        }
        AttenuationModel::Cosecant { zenith_db } => {
            check_slant_domain(elevation_deg)?;
            Ok(zenith_db / elevation_deg.to_radians().sin())
        }
    }
}

fn check_slant_domain(elevation_deg: f64) -> Result<()> {
    if !(5.0..=90.0).contains(&elevation_deg) {
        return Err(Error::domain(format!(
            "elevation {elevation_deg} outside the model domain [5, 90]"
        )));
    }
    Ok(())
}

/// Lognormal shadow margin: `σ·Φ⁻¹(availability)`, floored at zero for
/// availability at or below the median.
pub fn shadow_margin(sigma_db: f64, availability: f64) -> Result<f64> {
    assert!(sigma_db >= 0.0, "sigma must be non-negative");
    if !(availability > 0.0 && availability < 1.0) {
        return Err(Error::domain(format!(
            "availability {availability} outside (0, 1)"
        )));
    }
    if availability <= 0.5 {
        return Ok(0.0);
    }
    Ok(sigma_db * normal_quantile(availability))
}

/// Standard normal quantile Φ⁻¹(p) by rational approximation
/// (Acklam's algorithm, relative error below 1.15e-9).
pub fn normal_quantile(p: f64) -> f64 {
    assert!(p > 0.0 && p < 1.0, "p must be in (0, 1)");
    const A: [f64; 6] = [
        -3.969683028665376e+01,
        2.209460984245205e+02,
        -2.759285104469687e+02,
        1.38357751867269e+02,
        -3.066479806614716e+01,
        2.506628277459239e+00,
    ];
    const B: [f64; 5] = [
        -5.447609879822406e+01,
        1.615858368580409e+02,
        -1.556989798598866e+02,
        6.680131188771972e+01,
        -1.328068155288572e+01,
    ];
    const C: [f64; 6] = [
        -7.784894002430293e-03,
        -3.223964580411365e-01,
        -2.400758277161838e+00,
        -2.549732539343734e+00,
        4.374664141464968e+00,
        2.938163982698783e+00,
    ];
    const D: [f64; 4] = [
        7.784695709041462e-03,
        3.224671290700398e-01,
        2.445134137142996e+00,
        3.754408661907416e+00,
    ];
    const P_LOW: f64 = 0.02425;

    if p < P_LOW {
        let q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else if p <= 1.0 - P_LOW {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        let q = (-2.0 * (1.0 - p).ln()).sqrt();
        -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    }
}

/// Receiver noise power spectral density: `−174 dBm/Hz + NF`.
pub fn noise_psd(noise_figure_db: f64) -> f64 {
    assert!(noise_figure_db >= 0.0, "noise figure must be >= 0");
    THERMAL_FLOOR_DBM_HZ + noise_figure_db
}

/// Integrated noise power in dBm over a carrier bandwidth in MHz.
pub fn noise_power(noise_psd_dbm_hz: f64, bandwidth_mhz: f64) -> f64 {
    assert!(bandwidth_mhz > 0.0, "bandwidth must be positive");
    noise_psd_dbm_hz + db(bandwidth_mhz * 1e6)
}

/// Receiver noise temperature in dBK consistent with the −174 dBm/Hz
/// floor and Boltzmann at −228.6 dBW/K/Hz.
pub fn receiver_noise_temperature_dbk(noise_figure_db: f64) -> f64 {
    noise_psd(noise_figure_db) - 30.0 - BOLTZMANN_DBW_K_HZ
}

/// System noise temperature referred to the antenna port:
/// `T_ant + T_ref·(10^((NF+L)/10) − 1)`.
pub fn system_noise_temperature(chain: &NoiseChain) -> f64 {
    chain.antenna_temperature_k
        + chain.reference_temperature_k
            * (10f64.powf((chain.noise_figure_db + chain.input_loss_db) / 10.0) - 1.0)
}

/// Figure of merit `G − 10·log10(T)` in dB/K.
pub fn g_over_t(gain_dbi: f64, system_temperature_k: f64) -> f64 {
    assert!(system_temperature_k > 0.0, "temperature must be positive");
    gain_dbi - db(system_temperature_k)
}
