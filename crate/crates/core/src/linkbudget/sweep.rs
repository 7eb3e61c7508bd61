//! One-variable sensitivity sweeps over a base budget configuration.

use crate::channel::AttenuationModel;
use crate::error::{Error, Result};
use crate::geometry::EarthModel;
use crate::regulatory::RegulatoryMask;

use super::{
    downlink_budget, uplink_budget, DownlinkParams, McsTable, SatellitePayload, UeTerminal,
    UplinkParams,
};

/// Which ledger a sweep or report refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkDirection {
    Downlink,
    Uplink,
}

/// The swept quantity. Everything else stays at the base configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVariable {
    /// Link elevation in degrees.
    Elevation,
    /// Terminal element count (panel reshaped to the given total).
    NElements,
    /// Carrier bandwidth in MHz (NR channelisation check bypassed).
    Bandwidth,
    /// Transmit EIRP: dBW per carrier on the downlink (replacing the
    /// PFD-derived value), dBm at the terminal on the uplink.
    Eirp,
}

impl SweepVariable {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "elevation" => Some(SweepVariable::Elevation),
            "n_elements" => Some(SweepVariable::NElements),
            "bandwidth" => Some(SweepVariable::Bandwidth),
            "eirp" => Some(SweepVariable::Eirp),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SweepVariable::Elevation => "elevation",
            SweepVariable::NElements => "n_elements",
            SweepVariable::Bandwidth => "bandwidth",
            SweepVariable::Eirp => "eirp",
        }
    }
}

/// One sweep output row. A row whose budget could not be evaluated at
/// all carries empty results and `feasible = false`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub value: f64,
    pub cnr_db: Option<f64>,
    pub spectral_efficiency: Option<f64>,
    pub data_rate_mbps: Option<f64>,
    pub feasible: bool,
}

/// Everything a budget evaluation needs, bundled for sweeping.
#[derive(Debug, Clone)]
pub struct BudgetInputs {
    pub payload: SatellitePayload,
    pub ue: UeTerminal,
    pub mask: RegulatoryMask,
    pub channel: AttenuationModel,
    pub mcs: McsTable,
    pub earth: EarthModel,
    pub downlink: DownlinkParams,
    pub uplink: UplinkParams,
}

impl BudgetInputs {
    fn evaluate(&self, direction: LinkDirection) -> Result<super::LinkLedger> {
        match direction {
            LinkDirection::Downlink => downlink_budget(
                &self.payload,
                &self.ue,
                &self.mask,
                &self.downlink,
                &self.channel,
                &self.mcs,
                &self.earth,
            ),
            LinkDirection::Uplink => uplink_budget(
                &self.ue,
                &self.payload,
                &self.uplink,
                &self.channel,
                &self.mcs,
                &self.earth,
            ),
        }
    }
}

/// Evaluate the budget once per value, in input order. Per-row failures
/// become infeasible rows; the sweep itself never aborts.
pub fn sweep(
    direction: LinkDirection,
    base: &BudgetInputs,
    variable: SweepVariable,
    values: &[f64],
) -> Result<Vec<SweepRow>> {
    if values.is_empty() {
        return Err(Error::config("sweep requires at least one value"));
    }
    let rows = values
        .iter()
        .map(|&value| {
            let mut inputs = base.clone();
            // sweeps explore off-grid bandwidths freely
            inputs.downlink.nr_bandwidths = false;
            match apply(&mut inputs, direction, variable, value) {
                Ok(()) => match inputs.evaluate(direction) {
                    Ok(ledger) => SweepRow {
                        value,
                        cnr_db: Some(ledger.cnr_db),
                        spectral_efficiency: Some(ledger.spectral_efficiency),
                        data_rate_mbps: Some(ledger.data_rate_mbps),
                        feasible: ledger.feasible,
                    },
                    Err(_) => infeasible_row(value),
                },
                Err(_) => infeasible_row(value),
            }
        })
        .collect();
    Ok(rows)
}

fn infeasible_row(value: f64) -> SweepRow {
    SweepRow {
        value,
        cnr_db: None,
        spectral_efficiency: None,
        data_rate_mbps: None,
        feasible: false,
    }
}

fn apply(
    inputs: &mut BudgetInputs,
    direction: LinkDirection,
    variable: SweepVariable,
    value: f64,
) -> Result<()> {
    match variable {
        SweepVariable::Elevation => {
            inputs.downlink.elevation_deg = value;
            inputs.uplink.elevation_deg = value;
        }
        SweepVariable::NElements => {
            if !(value >= 1.0) || value.fract() != 0.0 || value > u32::MAX as f64 {
                return Err(Error::domain(format!(
                    "element count {value} must be a positive integer"
                )));
            }
            // reshape to a single row; only the total feeds the gain
            inputs.ue.panel.m = value as u32;
            inputs.ue.panel.n = 1;
            inputs.ue.panel.mg = 1;
            inputs.ue.panel.ng = 1;
        }
        SweepVariable::Bandwidth => {
            inputs.downlink.bandwidth_mhz = value;
            inputs.uplink.bandwidth_mhz = value;
        }
        SweepVariable::Eirp => match direction {
            LinkDirection::Downlink => inputs.downlink.eirp_override_dbw = Some(value),
            LinkDirection::Uplink => inputs.uplink.eirp_override_dbm = Some(value),
        },
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::{payload, qv_ngso_mask, vehicular_ue};
    use super::*;

    fn base() -> BudgetInputs {
        let mut sat = payload();
        sat.g_over_t_override_db = Some(13.5);
        BudgetInputs {
            payload: sat,
            ue: vehicular_ue(),
            mask: qv_ngso_mask(),
            channel: AttenuationModel::Flat(5.0),
            mcs: McsTable::default(),
            earth: EarthModel::default(),
            downlink: DownlinkParams::default(),
            uplink: UplinkParams::default(),
        }
    }

    #[test]
    fn downlink_elevation_sweep_is_monotone() {
        let values: Vec<f64> = (0..11).map(|i| 40.0 + 5.0 * i as f64).collect();
        let rows = sweep(
            LinkDirection::Downlink,
            &base(),
            SweepVariable::Elevation,
            &values,
        )
        .unwrap();
        assert_eq!(rows.len(), 11);
        for pair in rows.windows(2) {
            assert!(pair[1].cnr_db.unwrap() >= pair[0].cnr_db.unwrap() - 1e-12);
        }
    }

    #[test]
    fn element_count_sweep_steps_by_panel_gain() {
        let rows = sweep(
            LinkDirection::Downlink,
            &base(),
            SweepVariable::NElements,
            &[64.0, 256.0],
        )
        .unwrap();
        let delta = rows[1].cnr_db.unwrap() - rows[0].cnr_db.unwrap();
        assert!((delta - 6.0206).abs() < 1e-4, "delta {delta}");
    }

    #[test]
    fn uplink_bandwidth_sweep_follows_noise_law() {
        let rows = sweep(
            LinkDirection::Uplink,
            &base(),
            SweepVariable::Bandwidth,
            &[1.0, 10.0, 100.0],
        )
        .unwrap();
        let d1 = rows[0].cnr_db.unwrap() - rows[1].cnr_db.unwrap();
        let d2 = rows[1].cnr_db.unwrap() - rows[2].cnr_db.unwrap();
        assert!((d1 - 10.0).abs() < 1e-9, "d1 {d1}");
        assert!((d2 - 10.0).abs() < 1e-9, "d2 {d2}");
    }

    #[test]
    fn failed_rows_are_flagged_not_fatal() {
        let rows = sweep(
            LinkDirection::Uplink,
            &base(),
            SweepVariable::Elevation,
            &[40.0, 95.0],
        )
        .unwrap();
        assert!(rows[0].feasible);
        assert!(!rows[1].feasible);
        assert!(rows[1].cnr_db.is_none());
    }

    #[test]
    fn empty_sweep_rejected() {
        assert!(sweep(LinkDirection::Uplink, &base(), SweepVariable::Eirp, &[]).is_err());
    }

    #[test]
    fn uplink_eirp_sweep_shifts_linearly() {
        let rows = sweep(
            LinkDirection::Uplink,
            &base(),
            SweepVariable::Eirp,
            &[25.0, 29.0, 43.0],
        )
        .unwrap();
        let base_cnr = rows[1].cnr_db.unwrap();
        assert!((rows[0].cnr_db.unwrap() - (base_cnr - 4.0)).abs() < 1e-9);
        assert!((rows[2].cnr_db.unwrap() - (base_cnr + 14.0)).abs() < 1e-9);
    }
}
