//! Global coverage verification over a lat/lon grid and one or more
//! epoch snapshots.
//!
//! For every grid point and time the checker finds the best (highest)
//! satellite elevation, then reports the global minimum of that best —
//! the worst spot on Earth at the worst sampled moment. Coverage is
//! continuous when even that worst point still sees one satellite at or
//! above the configured minimum elevation.

use rayon::prelude::*;
use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

use super::{
    elevation_from_central_angle, elevation_to, walker_delta, ConstellationConfig, EarthModel,
    GroundPoint, SatelliteState,
};

/// Equiangular latitude/longitude grid, poles included once.
///
/// Points are ordered by ascending latitude, then ascending longitude;
/// that ordering is what makes the worst-point tie-break deterministic.
#[derive(Debug, Clone)]
pub struct CoverageGrid {
    step_deg: f64,
    points: Vec<GroundPoint>,
}

impl CoverageGrid {
    pub fn equiangular(step_deg: f64) -> Result<Self> {
        if !(step_deg > 0.0) || step_deg > 90.0 {
            return Err(Error::config(format!(
                "grid step {step_deg} outside (0, 90]"
            )));
        }
        let mut points = vec![GroundPoint {
            latitude_deg: -90.0,
            longitude_deg: 0.0,
            altitude_km: 0.0,
        }];
        let mut i = 1;
        loop {
            let lat = -90.0 + i as f64 * step_deg;
            if lat >= 90.0 {
                break;
            }
            let mut j = 0;
            loop {
                let lon = -180.0 + j as f64 * step_deg;
                if lon >= 180.0 {
                    break;
                }
                points.push(GroundPoint {
                    latitude_deg: lat,
                    longitude_deg: lon,
                    altitude_km: 0.0,
                });
                j += 1;
            }
            i += 1;
        }
        points.push(GroundPoint {
            latitude_deg: 90.0,
            longitude_deg: 0.0,
            altitude_km: 0.0,
        });
        Ok(CoverageGrid { step_deg, points })
    }

    pub fn step_deg(&self) -> f64 {
        self.step_deg
    }

    pub fn points(&self) -> &[GroundPoint] {
        &self.points
    }
}

/// Result of a coverage check.
#[derive(Debug, Clone, Copy)]
pub struct CoverageReport {
    /// Minimum over grid and time of the best per-point elevation.
    pub worst_best_elevation_deg: f64,
    /// Grid point where the minimum occurs (lowest latitude, then
    /// longitude on ties).
    pub worst_point: GroundPoint,
    /// Earliest sampled time at which the worst point attains it.
    pub worst_time_s: f64,
    /// Elevation target the report was judged against.
    pub min_elevation_deg: f64,
    /// True iff `worst_best_elevation_deg >= min_elevation_deg`.
    pub continuous: bool,
}

/// One epoch snapshot prepared for repeated point queries.
struct Snapshot {
    time_s: f64,
    states: Vec<SatelliteState>,
    shell: Option<Shell>,
}

/// Equal-radius fast path: satellites sorted by their z unit component
/// so a latitude band can be sliced out by binary search. On a common
/// shell the highest-elevation satellite is exactly the one with the
/// smallest central angle, so the max dot product decides.
struct Shell {
    radius_km: f64,
    z_sorted: Vec<f64>,
    units: Vec<[f64; 3]>,
}

impl Snapshot {
    fn prepare(time_s: f64, states: Vec<SatelliteState>, earth: &EarthModel) -> Result<Self> {
        if states.is_empty() {
            return Err(Error::config("empty constellation"));
        }
        for state in &states {
            state.validate(earth)?;
        }
        let radii: Vec<f64> = states.iter().map(|s| s.radius_km()).collect();
        let r_min = radii.iter().cloned().fold(f64::INFINITY, f64::min);
        let r_max = radii.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let shell = if r_max - r_min < 1e-3 {
            let radius = 0.5 * (r_min + r_max);
            let mut order: Vec<usize> = (0..states.len()).collect();
            order.sort_by(|&a, &b| {
                let za = states[a].position_km[2];
                let zb = states[b].position_km[2];
                za.partial_cmp(&zb).unwrap()
            });
            let mut z_sorted = Vec::with_capacity(states.len());
            let mut units = Vec::with_capacity(states.len());
            for &i in &order {
                let p = states[i].position_km;
                let r = radii[i];
                units.push([p[0] / r, p[1] / r, p[2] / r]);
                z_sorted.push(p[2] / r);
            }
            Some(Shell {
                radius_km: radius,
                z_sorted,
                units,
            })
        } else {
            None
        };
        Ok(Snapshot {
            time_s,
            states,
            shell,
        })
    }

    fn best_elevation(&self, point: &GroundPoint, earth: &EarthModel) -> f64 {
        match &self.shell {
            Some(shell) if point.altitude_km == 0.0 => shell.best_elevation(point, earth),
            _ => self
                .states
                .iter()
                .map(|s| elevation_to(point, s, earth))
                .fold(f64::NEG_INFINITY, f64::max),
        }
    }
}

impl Shell {
    fn best_elevation(&self, point: &GroundPoint, earth: &EarthModel) -> f64 {
        let up = point.local_vertical();
        let lat = up[2].clamp(-1.0, 1.0).asin();
        // Any satellite within central angle <= cap lies inside the
        // latitude band [lat-cap, lat+cap]; if the best in the band is
        // within the cap it is the global best, otherwise widen.
        let mut cap = 20f64.to_radians();
        loop {
            let lo = (lat - cap).max(-FRAC_PI_2).sin();
            let hi = (lat + cap).min(FRAC_PI_2).sin();
            let i0 = self.z_sorted.partition_point(|&z| z < lo);
            let i1 = self.z_sorted.partition_point(|&z| z <= hi);
            let mut best = -1.0f64;
            for u in &self.units[i0..i1] {
                let dot = u[0] * up[0] + u[1] * up[1] + u[2] * up[2];
                if dot > best {
                    best = dot;
                }
            }
            if best >= cap.cos() || cap >= std::f64::consts::PI {
                return elevation_from_central_angle(self.radius_km, best, earth.radius_km);
            }
            cap = (cap * 2.0).min(std::f64::consts::PI);
        }
    }
}

/// Check coverage of a Walker constellation over a grid and a set of
/// epoch samples.
pub fn coverage_check(
    config: &ConstellationConfig,
    grid_step_deg: f64,
    time_samples_s: &[f64],
    earth: &EarthModel,
) -> Result<CoverageReport> {
    config.validate()?;
    let grid = CoverageGrid::equiangular(grid_step_deg)?;
    let snapshots: Result<Vec<(f64, Vec<SatelliteState>)>> = time_samples_s
        .iter()
        .map(|&t| Ok((t, walker_delta(config, t, earth)?)))
        .collect();
    coverage_check_states(&snapshots?, &grid, config.min_elevation_deg, earth)
}

/// Coverage check over explicit per-time satellite states. Lets callers
/// thin a constellation or supply non-Walker geometries.
pub fn coverage_check_states(
    states_per_time: &[(f64, Vec<SatelliteState>)],
    grid: &CoverageGrid,
    min_elevation_deg: f64,
    earth: &EarthModel,
) -> Result<CoverageReport> {
    if states_per_time.is_empty() {
        return Err(Error::config("at least one time sample required"));
    }
    earth.validate()?;
    let snapshots: Result<Vec<Snapshot>> = states_per_time
        .iter()
        .map(|(t, s)| Snapshot::prepare(*t, s.clone(), earth))
        .collect();
    let snapshots = snapshots?;

    // min over times of the best elevation, earliest time on ties
    let per_point: Vec<(f64, f64)> = grid
        .points()
        .par_iter()
        .map(|point| {
            let mut worst = f64::INFINITY;
            let mut when = snapshots[0].time_s;
            for snap in &snapshots {
                let best = snap.best_elevation(point, earth);
                if best < worst {
                    worst = best;
                    when = snap.time_s;
                }
            }
            (worst, when)
        })
        .collect();

    // grid order is (lat asc, lon asc); strict < keeps the first, which
    // realises the lowest-latitude / lowest-longitude tie-break
    let mut idx = 0;
    for (i, cand) in per_point.iter().enumerate() {
        if cand.0 < per_point[idx].0 {
            idx = i;
        }
    }
    let (worst, when) = per_point[idx];
    Ok(CoverageReport {
        worst_best_elevation_deg: worst,
        worst_point: grid.points()[idx],
        worst_time_s: when,
        min_elevation_deg,
        continuous: worst >= min_elevation_deg,
    })
}

/// Outcome of scanning the Walker phasing factor.
#[derive(Debug, Clone)]
pub struct PhasingScanResult {
    /// Worst-best elevation per scanned phasing, in scan order.
    pub per_phasing: Vec<(u32, CoverageReport)>,
    /// Phasing with the highest worst-best elevation (lowest f on ties).
    pub best_phasing: u32,
    pub best: CoverageReport,
}

/// Run a coverage check for every phasing factor in `0..planes` and
/// report the best one.
pub fn phasing_scan(
    config: &ConstellationConfig,
    grid_step_deg: f64,
    time_samples_s: &[f64],
    earth: &EarthModel,
) -> Result<PhasingScanResult> {
    config.validate()?;
    let mut per_phasing = Vec::with_capacity(config.planes as usize);
    let mut best_phasing = 0;
    let mut best: Option<CoverageReport> = None;
    for f in 0..config.planes {
        let candidate = ConstellationConfig {
            phasing: f,
            ..*config
        };
        let report = coverage_check(&candidate, grid_step_deg, time_samples_s, earth)?;
        if best
            .map(|b| report.worst_best_elevation_deg > b.worst_best_elevation_deg)
            .unwrap_or(true)
        {
            best_phasing = f;
            best = Some(report);
        }
        per_phasing.push((f, report));
    }
    Ok(PhasingScanResult {
        per_phasing,
        best_phasing,
        best: best.expect("planes >= 1"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn earth() -> EarthModel {
        EarthModel::default()
    }

    #[test]
    fn grid_orders_and_includes_poles_once() {
        let grid = CoverageGrid::equiangular(30.0).unwrap();
        let pts = grid.points();
        assert_eq!(pts[0].latitude_deg, -90.0);
        assert_eq!(pts[pts.len() - 1].latitude_deg, 90.0);
        let poles = pts.iter().filter(|p| p.latitude_deg.abs() == 90.0).count();
        assert_eq!(poles, 2);
        // 5 interior latitudes x 12 longitudes + 2 poles
        assert_eq!(pts.len(), 5 * 12 + 2);
        for w in pts.windows(2) {
            assert!(
                w[0].latitude_deg < w[1].latitude_deg
                    || (w[0].latitude_deg == w[1].latitude_deg
                        && w[0].longitude_deg < w[1].longitude_deg)
            );
        }
    }

    #[test]
    fn single_satellite_zenith_at_subsatellite_point() {
        let sat = SatelliteState {
            position_km: [6711.0, 0.0, 0.0],
            plane_index: 0,
            slot_index: 0,
            epoch_offset_s: 0.0,
        };
        let grid = CoverageGrid {
            step_deg: 1.0,
            points: vec![GroundPoint {
                latitude_deg: 0.0,
                longitude_deg: 0.0,
                altitude_km: 0.0,
            }],
        };
        let report = coverage_check_states(&[(0.0, vec![sat])], &grid, 40.0, &earth()).unwrap();
        assert!((report.worst_best_elevation_deg - 90.0).abs() < 1e-9);
        assert!(report.continuous);
    }

    #[test]
    fn single_satellite_global_grid_sees_far_side() {
        let config = ConstellationConfig {
            total_satellites: 1,
            planes: 1,
            phasing: 0,
            inclination_deg: 0.0,
            altitude_km: 340.0,
            raan_spread_deg: 360.0,
            min_elevation_deg: 40.0,
        };
        let report = coverage_check(&config, 15.0, &[0.0], &earth()).unwrap();
        assert!(report.worst_best_elevation_deg < 0.0);
        assert!(!report.continuous);
    }

    #[test]
    fn fast_path_matches_direct_evaluation() {
        let config = ConstellationConfig {
            total_satellites: 60,
            planes: 6,
            phasing: 2,
            inclination_deg: 60.0,
            altitude_km: 1000.0,
            raan_spread_deg: 360.0,
            min_elevation_deg: 10.0,
        };
        let e = earth();
        let states = walker_delta(&config, 500.0, &e).unwrap();
        let grid = CoverageGrid::equiangular(10.0).unwrap();
        for point in grid.points() {
            let direct = states
                .iter()
                .map(|s| elevation_to(point, s, &e))
                .fold(f64::NEG_INFINITY, f64::max);
            let snap = Snapshot::prepare(500.0, states.clone(), &e).unwrap();
            assert!(snap.shell.is_some());
            let fast = snap.best_elevation(point, &e);
            assert!(
                (fast - direct).abs() < 1e-9,
                "fast {fast} vs direct {direct} at {point:?}"
            );
        }
    }

    #[test]
    fn fast_path_band_widening_on_sparse_shell() {
        // three satellites bunched near one pole leave most latitude
        // bands empty, forcing the search cap to widen repeatedly
        let e = earth();
        let r = e.radius_km + 800.0;
        let states: Vec<SatelliteState> = [80.0f64, 85.0, 88.0]
            .iter()
            .enumerate()
            .map(|(i, lat)| SatelliteState {
                position_km: [r * lat.to_radians().cos(), 0.0, r * lat.to_radians().sin()],
                plane_index: 0,
                slot_index: i as u32,
                epoch_offset_s: 0.0,
            })
            .collect();
        let snap = Snapshot::prepare(0.0, states.clone(), &e).unwrap();
        assert!(snap.shell.is_some());
        let grid = CoverageGrid::equiangular(20.0).unwrap();
        for point in grid.points() {
            let direct = states
                .iter()
                .map(|s| elevation_to(point, s, &e))
                .fold(f64::NEG_INFINITY, f64::max);
            let fast = snap.best_elevation(point, &e);
            assert!(
                (fast - direct).abs() < 1e-9,
                "fast {fast} vs direct {direct} at {point:?}"
            );
        }
    }

    #[test]
    fn empty_constellation_rejected() {
        let grid = CoverageGrid::equiangular(30.0).unwrap();
        let res = coverage_check_states(&[(0.0, vec![])], &grid, 40.0, &earth());
        assert!(res.is_err());
    }

    #[test]
    fn subsurface_satellite_rejected() {
        let grid = CoverageGrid::equiangular(30.0).unwrap();
        let buried = SatelliteState {
            position_km: [1000.0, 0.0, 0.0],
            plane_index: 0,
            slot_index: 0,
            epoch_offset_s: 0.0,
        };
        let res = coverage_check_states(&[(0.0, vec![buried])], &grid, 40.0, &earth());
        assert!(res.is_err());
    }
}
