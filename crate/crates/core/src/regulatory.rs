//! Power-flux-density masks protecting terrestrial services in shared
//! bands, and the PFD ↔ EIRP conversions a satellite downlink is sized
//! against.
//!
//! A mask is a piecewise function of the arrival angle above the
//! horizontal plane, in dBW/m² per reference bandwidth. The satellite at
//! elevation ε is taken to produce an arrival angle δ = ε at the victim
//! receiver.

use crate::error::{Error, Result};
use crate::units::db;

/// Limit of one mask segment: either a constant or an affine ramp
/// `base + slope·(δ − hinge)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SegmentLimit {
    Constant(f64),
    Affine {
        base: f64,
        slope_per_deg: f64,
        hinge_deg: f64,
    },
}

impl SegmentLimit {
    fn evaluate(&self, angle_deg: f64) -> f64 {
        match *self {
            SegmentLimit::Constant(v) => v,
            SegmentLimit::Affine {
                base,
                slope_per_deg,
                hinge_deg,
            } => base + slope_per_deg * (angle_deg - hinge_deg),
        }
    }
}

/// One arrival-angle segment of a mask, over `[from_deg, to_deg]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaskSegment {
    pub from_deg: f64,
    pub to_deg: f64,
    pub limit: SegmentLimit,
}

/// Piecewise PFD limit for one band and service.
#[derive(Debug, Clone, PartialEq)]
pub struct RegulatoryMask {
    pub band_label: String,
    pub segments: Vec<MaskSegment>,
    pub reference_bandwidth_mhz: f64,
}

/// A power flux density over a stated reference bandwidth.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PfdValue {
    /// dBW/m² per reference bandwidth.
    pub dbw_m2: f64,
    pub reference_bandwidth_mhz: f64,
}

impl RegulatoryMask {
    /// Segments must partition [0°, 90°] in order, without gaps, and the
    /// limit must be continuous at every internal boundary.
    pub fn validate(&self) -> Result<()> {
        if self.segments.is_empty() {
            return Err(Error::config(format!(
                "mask '{}' has no segments",
                self.band_label
            )));
        }
        if !(self.reference_bandwidth_mhz > 0.0) {
            return Err(Error::config(format!(
                "mask '{}' reference bandwidth must be positive",
                self.band_label
            )));
        }
        let first = self.segments.first().unwrap();
        let last = self.segments.last().unwrap();
        if first.from_deg != 0.0 || last.to_deg != 90.0 {
            return Err(Error::config(format!(
                "mask '{}' segments must span [0, 90]",
                self.band_label
            )));
        }
        for seg in &self.segments {
            if !(seg.from_deg < seg.to_deg) {
                return Err(Error::config(format!(
                    "mask '{}' has an empty segment [{}, {}]",
                    self.band_label, seg.from_deg, seg.to_deg
                )));
            }
        }
        for pair in self.segments.windows(2) {
            if pair[0].to_deg != pair[1].from_deg {
                return Err(Error::config(format!(
                    "mask '{}' segments not contiguous at {}",
                    self.band_label, pair[0].to_deg
                )));
            }
            let left = pair[0].limit.evaluate(pair[0].to_deg);
            let right = pair[1].limit.evaluate(pair[1].from_deg);
            if (left - right).abs() > 1e-9 {
                return Err(Error::config(format!(
                    "mask '{}' discontinuous at {} deg: {} vs {}",
                    self.band_label, pair[0].to_deg, left, right
                )));
            }
        }
        Ok(())
    }
}

/// The four built-in Article-21 masks for the shared bands of interest:
/// two Ka downlink rows and the NGSO/GSO rows at 37.5–40 GHz.
pub fn builtin_masks() -> Vec<RegulatoryMask> {
    let ka_segments = vec![
        MaskSegment {
            from_deg: 0.0,
            to_deg: 5.0,
            limit: SegmentLimit::Constant(-115.0),
        },
        MaskSegment {
            from_deg: 5.0,
            to_deg: 25.0,
            limit: SegmentLimit::Affine {
                base: -115.0,
                slope_per_deg: 0.5,
                hinge_deg: 5.0,
            },
        },
        MaskSegment {
            from_deg: 25.0,
            to_deg: 90.0,
            limit: SegmentLimit::Constant(-105.0),
        },
    ];
    vec![
        RegulatoryMask {
            band_label: "17.7-19.3".into(),
            segments: ka_segments.clone(),
            reference_bandwidth_mhz: 1.0,
        },
        RegulatoryMask {
            band_label: "19.3-19.7".into(),
            segments: ka_segments,
            reference_bandwidth_mhz: 1.0,
        },
        RegulatoryMask {
            band_label: "37.5-40-ngso".into(),
            segments: vec![
                MaskSegment {
                    from_deg: 0.0,
                    to_deg: 5.0,
                    limit: SegmentLimit::Constant(-120.0),
                },
                MaskSegment {
                    from_deg: 5.0,
                    to_deg: 25.0,
                    limit: SegmentLimit::Affine {
                        base: -120.0,
                        slope_per_deg: 0.75,
                        hinge_deg: 5.0,
                    },
                },
                MaskSegment {
                    from_deg: 25.0,
                    to_deg: 90.0,
                    limit: SegmentLimit::Constant(-105.0),
                },
            ],
            reference_bandwidth_mhz: 1.0,
        },
        RegulatoryMask {
            band_label: "37.5-40-gso".into(),
            segments: vec![
                MaskSegment {
                    from_deg: 0.0,
                    to_deg: 5.0,
                    limit: SegmentLimit::Constant(-127.0),
                },
                MaskSegment {
                    from_deg: 5.0,
                    to_deg: 20.0,
                    limit: SegmentLimit::Affine {
                        base: -127.0,
                        slope_per_deg: 4.0 / 3.0,
                        hinge_deg: 5.0,
                    },
                },
                MaskSegment {
                    from_deg: 20.0,
                    to_deg: 25.0,
                    limit: SegmentLimit::Affine {
                        base: -107.0,
                        slope_per_deg: 0.4,
                        hinge_deg: 20.0,
                    },
                },
                MaskSegment {
                    from_deg: 25.0,
                    to_deg: 90.0,
                    limit: SegmentLimit::Constant(-105.0),
                },
            ],
            reference_bandwidth_mhz: 1.0,
        },
    ]
}

/// Evaluate a mask at an arrival angle.
pub fn pfd_limit(mask: &RegulatoryMask, arrival_angle_deg: f64) -> Result<PfdValue> {
    if !(0.0..=90.0).contains(&arrival_angle_deg) {
        return Err(Error::domain(format!(
            "arrival angle {arrival_angle_deg} outside [0, 90]"
        )));
    }
    // closed on the right so the last segment owns 90 deg; boundary
    // angles are continuous either way by the mask invariant
    let seg = mask
        .segments
        .iter()
        .find(|s| arrival_angle_deg < s.to_deg || s.to_deg == 90.0)
        .expect("validated masks span [0, 90]");
    Ok(PfdValue {
        dbw_m2: seg.limit.evaluate(arrival_angle_deg),
        reference_bandwidth_mhz: mask.reference_bandwidth_mhz,
    })
}

/// Spherical spreading term `10·log10(4π·d²)` with d in metres.
fn spreading_db(distance_km: f64) -> f64 {
    db(4.0 * std::f64::consts::PI * (distance_km * 1000.0).powi(2))
}

/// Highest EIRP a carrier of the given bandwidth may radiate from the
/// given distance without exceeding the PFD limit on the ground.
pub fn max_eirp_from_pfd(
    pfd: &PfdValue,
    distance_km: f64,
    carrier_bandwidth_mhz: f64,
) -> Result<f64> {
    if !(distance_km > 0.0) || !(carrier_bandwidth_mhz > 0.0) {
        return Err(Error::domain(
            "distance and bandwidth must be positive".to_string(),
        ));
    }
    if !(pfd.reference_bandwidth_mhz > 0.0) {
        return Err(Error::domain(
            "reference bandwidth must be positive".to_string(),
        ));
    }
    Ok(pfd.dbw_m2
        + db(carrier_bandwidth_mhz / pfd.reference_bandwidth_mhz)
        + spreading_db(distance_km))
}

/// Ground PFD per MHz produced by an EIRP density (dBW/Hz) radiated from
/// the given distance. Exact inverse of [`max_eirp_from_pfd`] modulo the
/// bandwidth normalisation.
pub fn pfd_from_eirp(eirp_density_dbw_hz: f64, distance_km: f64) -> Result<PfdValue> {
    if !(distance_km > 0.0) {
        return Err(Error::domain("distance must be positive".to_string()));
    }
    Ok(PfdValue {
        dbw_m2: eirp_density_dbw_hz + 60.0 - spreading_db(distance_km),
        reference_bandwidth_mhz: 1.0,
    })
}
