//! Shared fixtures for the benchmark targets.

use ntnlink::antenna::{ApertureArray, Lattice, TxRfChain, UePanel};
use ntnlink::channel::{AttenuationModel, NoiseChain};
use ntnlink::geometry::ConstellationConfig;
use ntnlink::linkbudget::{
    BudgetInputs, DownlinkParams, McsTable, SatellitePayload, UeTerminal, UplinkParams,
};
use ntnlink::regulatory::builtin_masks;
use ntnlink::EarthModel;

/// The reference VLEO payload and vehicular terminal.
pub fn reference_inputs() -> BudgetInputs {
    BudgetInputs {
        payload: SatellitePayload {
            tx_array: ApertureArray {
                diameter_m: 0.20,
                frequency_ghz: 40.0,
                aperture_efficiency: 0.916,
                lattice: Lattice::Triangular,
                element_spacing_wavelengths: 0.69,
                element_count: Some(997),
            },
            tx_chain: TxRfChain {
                per_element_power_w: 0.10,
                element_count: 997,
                output_losses_db: 1.0,
                beam_rolloff_db: 1.0,
                beams: 8,
                bandwidth_per_beam_ghz: 0.5,
            },
            rx_array: ApertureArray {
                diameter_m: 0.40,
                frequency_ghz: 28.0,
                aperture_efficiency: 0.90,
                lattice: Lattice::Triangular,
                element_spacing_wavelengths: 0.69,
                element_count: Some(1915),
            },
            rx_noise: NoiseChain {
                noise_figure_db: 2.0,
                antenna_temperature_k: 300.0,
                input_loss_db: 0.5,
                reference_temperature_k: 300.0,
            },
            altitude_km: 340.0,
            g_over_t_override_db: Some(13.5),
        },
        ue: UeTerminal {
            panel: UePanel {
                m: 8,
                n: 8,
                polarizations: 2,
                mg: 2,
                ng: 2,
                element_gain_dbi: 8.0,
            },
            noise_figure_db: 7.0,
            implementation_loss_db: 7.0,
            peak_eirp_dbm: 29.0,
            fcc_eirp_cap_dbm: 43.0,
        },
        mask: builtin_masks()
            .into_iter()
            .find(|m| m.band_label == "37.5-40-ngso")
            .unwrap(),
        channel: AttenuationModel::Flat(5.0),
        mcs: McsTable::default(),
        earth: EarthModel::default(),
        downlink: DownlinkParams::default(),
        uplink: UplinkParams::default(),
    }
}

/// The 2592-satellite star shell.
pub fn reference_shell() -> ConstellationConfig {
    ConstellationConfig {
        total_satellites: 2592,
        planes: 36,
        phasing: 18,
        inclination_deg: 90.0,
        altitude_km: 340.0,
        raan_spread_deg: 180.0,
        min_elevation_deg: 40.0,
    }
}
