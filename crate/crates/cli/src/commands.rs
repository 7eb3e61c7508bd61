//! The five subcommands, each producing a [`Report`] and an exit code.

use ntnlink::antenna;
use ntnlink::geometry;
use ntnlink::linkbudget::{
    capacity_rollup, downlink_budget, sweep, uplink_budget, LinkDirection, LinkLedger,
    SweepVariable,
};
use ntnlink::regulatory;

use crate::report::{Cell, Report, ReportKind};
use crate::scenario::Scenario;
use crate::CliError;

/// Exit status the command layer hands back to `main`.
pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 2;

pub fn cmd_budget(
    scenario: &Scenario,
    direction: LinkDirection,
) -> Result<(Report, i32), CliError> {
    let inputs = &scenario.inputs;
    let ledger = match direction {
        LinkDirection::Downlink => downlink_budget(
            &inputs.payload,
            &inputs.ue,
            &inputs.mask,
            &inputs.downlink,
            &inputs.channel,
            &inputs.mcs,
            &inputs.earth,
        ),
        LinkDirection::Uplink => uplink_budget(
            &inputs.ue,
            &inputs.payload,
            &inputs.uplink,
            &inputs.channel,
            &inputs.mcs,
            &inputs.earth,
        ),
    }
    .map_err(|e| CliError::Validation(e.to_string()))?;

    let mut report = Report::new(
        ReportKind::Ledger,
        &scenario.digest,
        vec!["line", "value", "unit"],
    );
    for line in &ledger.lines {
        report.push_row(vec![line.name.into(), line.value.into(), line.unit.into()]);
    }
    summarise_ledger(&mut report, &ledger, direction, scenario);
    let exit = if ledger.feasible {
        EXIT_OK
    } else {
        EXIT_INFEASIBLE
    };
    Ok((report, exit))
}

fn summarise_ledger(
    report: &mut Report,
    ledger: &LinkLedger,
    direction: LinkDirection,
    scenario: &Scenario,
) {
    if !ledger.feasible {
        report.note("infeasible: no MCS row closes at this CNR");
        return;
    }
    // constellation-level rollup for context (one carrier per beam)
    let rollup = capacity_rollup(
        ledger.data_rate_mbps,
        1,
        scenario.inputs.payload.tx_chain.beams,
        scenario.constellation.total_satellites,
    );
    let what = match direction {
        LinkDirection::Downlink => "downlink",
        LinkDirection::Uplink => "uplink",
    };
    report.note(format!(
        "{what} closes at {:.2} dB CNR: {:.4} Gbps per satellite, {:.4} Tbps across {} satellites",
        ledger.cnr_db,
        rollup.per_satellite_gbps,
        rollup.constellation_tbps,
        scenario.constellation.total_satellites
    ));
}

pub fn cmd_sweep(
    scenario: &Scenario,
    direction: LinkDirection,
    variable_name: &str,
    range_spec: &str,
) -> Result<(Report, i32), CliError> {
    let variable = SweepVariable::parse(variable_name).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown sweep variable '{variable_name}'; valid: elevation, n_elements, bandwidth, eirp"
        ))
    })?;
    let values = parse_range(range_spec)?;
    let rows = sweep(direction, &scenario.inputs, variable, &values)
        .map_err(|e| CliError::Validation(e.to_string()))?;

    let mut report = Report::new(
        ReportKind::Sweep,
        &scenario.digest,
        vec![
            variable.name(),
            "cnr_db",
            "spectral_efficiency",
            "rate_mbps",
            "feasible",
        ],
    );
    for row in &rows {
        report.push_row(vec![
            row.value.into(),
            row.cnr_db.into(),
            row.spectral_efficiency.into(),
            row.data_rate_mbps.into(),
            row.feasible.into(),
        ]);
    }
    Ok((report, EXIT_OK))
}

/// `start:stop:step` (inclusive of stop) or a comma-separated list.
fn parse_range(spec: &str) -> Result<Vec<f64>, CliError> {
    let bad = |msg: String| CliError::Usage(msg);
    let values = if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(bad(format!("range '{spec}' must be start:stop:step")));
        }
        let parse = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| bad(format!("range '{spec}': '{s}' is not a number")))
        };
        let (start, stop, step) = (parse(parts[0])?, parse(parts[1])?, parse(parts[2])?);
        if step <= 0.0 || stop < start {
            return Err(bad(format!(
                "range '{spec}' needs stop >= start and step > 0"
            )));
        }
        let count = ((stop - start) / step + 1.5).floor() as usize;
        (0..count).map(|i| start + step * i as f64).collect()
    } else {
        spec.split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| bad(format!("'{s}' is not a number")))
            })
            .collect::<Result<Vec<f64>, CliError>>()?
    };
    if values.is_empty() {
        return Err(bad(format!("range '{spec}' produced no values")));
    }
    Ok(values)
}

pub fn cmd_coverage(
    scenario: &Scenario,
    grid_step_deg: f64,
    time_samples: usize,
    phasing_scan: bool,
) -> Result<(Report, i32), CliError> {
    if time_samples == 0 {
        return Err(CliError::Usage("time samples must be at least 1".into()));
    }
    let config = scenario.constellation;
    let earth = scenario.inputs.earth;
    let period = geometry::orbital_period_s(config.altitude_km, &earth);
    let times: Vec<f64> = (0..time_samples)
        .map(|i| i as f64 * period / time_samples as f64)
        .collect();

    if phasing_scan {
        let scan = geometry::phasing_scan(&config, grid_step_deg, &times, &earth)
            .map_err(|e| CliError::Validation(e.to_string()))?;
        let mut report = Report::new(
            ReportKind::Coverage,
            &scenario.digest,
            vec![
                "phasing",
                "worst_best_elevation_deg",
                "worst_lat_deg",
                "worst_lon_deg",
                "worst_time_s",
                "continuous",
            ],
        );
        for (f, r) in &scan.per_phasing {
            report.push_row(coverage_row(Some(*f as f64), r));
        }
        let best = &scan.best;
        if best.continuous {
            report.note(format!(
                "best phasing {} keeps worst-best elevation at {:.2} deg (target {:.0})",
                scan.best_phasing, best.worst_best_elevation_deg, best.min_elevation_deg
            ));
        } else {
            report.note(format!(
                "shortfall: best phasing {} only reaches {:.2} deg (target {:.0})",
                scan.best_phasing, best.worst_best_elevation_deg, best.min_elevation_deg
            ));
        }
        let exit = if best.continuous {
            EXIT_OK
        } else {
            EXIT_INFEASIBLE
        };
        return Ok((report, exit));
    }

    let result = geometry::coverage_check(&config, grid_step_deg, &times, &earth)
        .map_err(|e| CliError::Validation(e.to_string()))?;
    let mut report = Report::new(
        ReportKind::Coverage,
        &scenario.digest,
        vec![
            "worst_best_elevation_deg",
            "worst_lat_deg",
            "worst_lon_deg",
            "worst_time_s",
            "continuous",
        ],
    );
    report.push_row(coverage_row(None, &result)[1..].to_vec());
    report.note(if result.continuous {
        format!(
            "continuous coverage at >= {:.0} deg elevation",
            result.min_elevation_deg
        )
    } else {
        format!(
            "coverage hole: worst point sees only {:.2} deg (target {:.0})",
            result.worst_best_elevation_deg, result.min_elevation_deg
        )
    });
    let exit = if result.continuous {
        EXIT_OK
    } else {
        EXIT_INFEASIBLE
    };
    Ok((report, exit))
}

fn coverage_row(phasing: Option<f64>, r: &geometry::CoverageReport) -> Vec<Cell> {
    vec![
        phasing.into(),
        r.worst_best_elevation_deg.into(),
        r.worst_point.latitude_deg.into(),
        r.worst_point.longitude_deg.into(),
        r.worst_time_s.into(),
        r.continuous.into(),
    ]
}

pub fn cmd_mask(
    scenario: &Scenario,
    band_label: &str,
    angles_spec: &str,
) -> Result<(Report, i32), CliError> {
    let mask = scenario
        .masks
        .iter()
        .find(|m| m.band_label == band_label)
        .ok_or_else(|| {
            CliError::Usage(format!(
                "unknown band '{band_label}'; available: {}",
                scenario.mask_labels()
            ))
        })?;
    let angles = parse_range(angles_spec)?;
    let mut report = Report::new(
        ReportKind::Mask,
        &scenario.digest,
        vec!["angle_deg", "pfd_dbw_m2_mhz"],
    );
    for angle in angles {
        let limit =
            regulatory::pfd_limit(mask, angle).map_err(|e| CliError::Validation(e.to_string()))?;
        report.push_row(vec![angle.into(), limit.dbw_m2.into()]);
    }
    Ok((report, EXIT_OK))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum AntennaSide {
    Tx,
    Rx,
    Ue,
}

pub fn cmd_antenna(scenario: &Scenario, which: AntennaSide) -> Result<(Report, i32), CliError> {
    let inputs = &scenario.inputs;
    let mut report = Report::new(
        ReportKind::Antenna,
        &scenario.digest,
        vec!["parameter", "value", "unit"],
    );
    let mut row = |name: &str, value: f64, unit: &str| {
        report.push_row(vec![
            name.to_string().into(),
            value.into(),
            unit.to_string().into(),
        ]);
    };

    match which {
        AntennaSide::Tx | AntennaSide::Rx => {
            let payload = &inputs.payload;
            let (array, label) = match which {
                AntennaSide::Tx => (&payload.tx_array, "tx"),
                _ => (&payload.rx_array, "rx"),
            };
            let earth = &inputs.earth;
            let min_elevation = scenario.constellation.min_elevation_deg;
            let earth_view = geometry::earth_view_half_angle(payload.altitude_km, earth);
            let scan_angle = geometry::nadir_scan_angle(payload.altitude_km, min_elevation, earth)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            let boresight = antenna::beamwidth_3db(array);
            // beams steered to the Earth limb broaden the most
            let scanned = antenna::scanned_beamwidth(boresight, earth_view)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            let grating = antenna::max_grating_free_spacing(scan_angle, array.lattice);
            let gain = antenna::aperture_gain(array);

            row("diameter", array.diameter_m, "m");
            row("frequency", array.frequency_ghz, "GHz");
            row("altitude", payload.altitude_km, "km");
            row("min_elevation", min_elevation, "deg");
            row("earth_view_angle", earth_view, "deg");
            row("scan_angle", scan_angle, "deg");
            row("gain", gain, "dBi");
            row("beamwidth_3db", boresight, "deg");
            row("scanned_beamwidth", scanned, "deg");
            row(
                "element_spacing",
                array.element_spacing_wavelengths,
                "wavelengths",
            );
            row(
                "element_spacing_cm",
                antenna::spacing_to_length(array.element_spacing_wavelengths, array.frequency_ghz),
                "cm",
            );
            row("grating_free_spacing", grating, "wavelengths");
            let spacing_m =
                antenna::spacing_to_length(array.element_spacing_wavelengths, array.frequency_ghz)
                    / 100.0;
            let enumerated = antenna::hex_array_element_count(array.diameter_m, spacing_m)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            row(
                "elements",
                array.element_count.unwrap_or(enumerated as u32) as f64,
                "count",
            );
            row("elements_enumerated", enumerated as f64, "count");
            match which {
                AntennaSide::Tx => {
                    row("total_rf_power", payload.tx_chain.total_rf_power_w(), "W");
                    row(
                        "eirp_total",
                        antenna::eirp_total(&payload.tx_chain, gain),
                        "dBW",
                    );
                    row(
                        "eirp_density",
                        antenna::eirp_density(&payload.tx_chain, gain),
                        "dBW/Hz",
                    );
                    row("beams", payload.tx_chain.beams as f64, "count");
                    row(
                        "bandwidth_per_beam",
                        payload.tx_chain.bandwidth_per_beam_ghz,
                        "GHz",
                    );
                }
                _ => {
                    let t_sys = ntnlink::channel::system_noise_temperature(&payload.rx_noise);
                    row("system_noise_temperature", t_sys, "K");
                    row("g_over_t", payload.g_over_t_db(), "dB/K");
                }
            }
            report.note(format!("{label} direct-radiating array"));
        }
        AntennaSide::Ue => {
            let ue = &inputs.ue;
            let lambda_m = ntnlink::units::wavelength_m(inputs.downlink.frequency_ghz);
            row("elements", ue.panel.total_elements() as f64, "count");
            row("element_gain", ue.panel.element_gain_dbi, "dBi");
            row("gain", ue.panel.gain_dbi(), "dBi");
            row(
                "panel_dimension",
                (ue.panel.total_elements() as f64).sqrt() * lambda_m / 2.0 * 100.0,
                "cm",
            );
            row("noise_figure", ue.noise_figure_db, "dB");
            row("implementation_loss", ue.implementation_loss_db, "dB");
            row("peak_eirp", ue.peak_eirp_dbm, "dBm");
            row("fcc_eirp_cap", ue.fcc_eirp_cap_dbm, "dBm");
            row(
                "g_over_t",
                ue.panel.gain_dbi()
                    - ntnlink::channel::receiver_noise_temperature_dbk(ue.noise_figure_db),
                "dB/K",
            );
            report.note("terminal panel".to_string());
        }
    }
    Ok((report, EXIT_OK))
}
