//! Scenario files: a TOML document with nested sections and key=value
//! leaves. `[satellite]`, `[ue]` and `[link]` are required; every other
//! section and every field inside a section defaults to the reference
//! VLEO design (the values the test suite pins).
//!
//! `--set section.key=value` overrides apply to the parsed document
//! before validation, so an override is checked exactly like a file
//! value. Unknown keys are rejected with the list of valid ones.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use ntnlink::antenna::{ApertureArray, Lattice, TxRfChain, UePanel};
use ntnlink::channel::{AttenuationModel, AttenuationTable, NoiseChain};
use ntnlink::geometry::{ConstellationConfig, EarthModel};
use ntnlink::linkbudget::{
    BudgetInputs, DownlinkParams, McsRow, McsTable, SatellitePayload, ShadowSpec, UeTerminal,
    UplinkParams,
};
use ntnlink::regulatory::{builtin_masks, MaskSegment, RegulatoryMask, SegmentLimit};

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    #[serde(default)]
    pub defaults: DefaultsSection,
    pub satellite: SatelliteSection,
    pub ue: UeSection,
    pub link: LinkSection,
    #[serde(default)]
    pub constellation: ConstellationSection,
    #[serde(default)]
    pub channel: ChannelSection,
    #[serde(default)]
    pub shadow: ShadowSection,
    #[serde(default)]
    pub mcs: McsSection,
    #[serde(default)]
    pub masks: Vec<MaskSection>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DefaultsSection {
    #[serde(default = "d_earth_radius")]
    pub earth_radius_km: f64,
}

impl Default for DefaultsSection {
    fn default() -> Self {
        DefaultsSection {
            earth_radius_km: d_earth_radius(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SatelliteSection {
    #[serde(default = "d_altitude")]
    pub altitude_km: f64,
    /// Measured receive figure of merit; overrides the derived value.
    #[serde(default)]
    pub g_over_t_db: Option<f64>,
    #[serde(default)]
    pub tx: TxSection,
    #[serde(default)]
    pub rx: RxSection,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TxSection {
    #[serde(default = "d_tx_array")]
    pub array: ArraySection,
    #[serde(default)]
    pub rf: RfSection,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RxSection {
    #[serde(default = "d_rx_array")]
    pub array: ArraySection,
    #[serde(default)]
    pub noise: NoiseSection,
}

impl Default for RxSection {
    fn default() -> Self {
        RxSection {
            array: d_rx_array(),
            noise: NoiseSection::default(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArraySection {
    pub diameter_m: f64,
    pub frequency_ghz: f64,
    pub aperture_efficiency: f64,
    pub lattice: String,
    pub element_spacing_wavelengths: f64,
    #[serde(default)]
    pub element_count: Option<u32>,
}

impl Default for ArraySection {
    fn default() -> Self {
        d_tx_array()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RfSection {
    #[serde(default = "d_sspa_power")]
    pub per_element_power_w: f64,
    #[serde(default = "d_tx_elements")]
    pub element_count: u32,
    #[serde(default = "d_one")]
    pub output_losses_db: f64,
    #[serde(default = "d_one")]
    pub beam_rolloff_db: f64,
    #[serde(default = "d_beams")]
    pub beams: u32,
    #[serde(default = "d_beam_bw")]
    pub bandwidth_per_beam_ghz: f64,
}

impl Default for RfSection {
    fn default() -> Self {
        RfSection {
            per_element_power_w: d_sspa_power(),
            element_count: d_tx_elements(),
            output_losses_db: 1.0,
            beam_rolloff_db: 1.0,
            beams: d_beams(),
            bandwidth_per_beam_ghz: d_beam_bw(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NoiseSection {
    #[serde(default = "d_sat_nf")]
    pub noise_figure_db: f64,
    #[serde(default = "d_antenna_temp")]
    pub antenna_temperature_k: f64,
    #[serde(default = "d_input_loss")]
    pub input_loss_db: f64,
    #[serde(default = "d_antenna_temp")]
    pub reference_temperature_k: f64,
}

impl Default for NoiseSection {
    fn default() -> Self {
        NoiseSection {
            noise_figure_db: d_sat_nf(),
            antenna_temperature_k: d_antenna_temp(),
            input_loss_db: d_input_loss(),
            reference_temperature_k: d_antenna_temp(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UeSection {
    #[serde(default = "d_ue_nf")]
    pub noise_figure_db: f64,
    #[serde(default = "d_ue_il")]
    pub implementation_loss_db: f64,
    #[serde(default = "d_ue_eirp")]
    pub peak_eirp_dbm: f64,
    #[serde(default = "d_fcc_cap")]
    pub fcc_eirp_cap_dbm: f64,
    #[serde(default)]
    pub panel: PanelSection,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PanelSection {
    pub m: u32,
    pub n: u32,
    pub p: u32,
    pub mg: u32,
    pub ng: u32,
    pub element_gain_dbi: f64,
}

impl Default for PanelSection {
    fn default() -> Self {
        // 256 combinable elements: the vehicular-class panel
        PanelSection {
            m: 8,
            n: 8,
            p: 2,
            mg: 2,
            ng: 2,
            element_gain_dbi: 8.0,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkSection {
    #[serde(default = "d_mask_label")]
    pub mask: String,
    #[serde(default = "d_elevation")]
    pub elevation_deg: f64,
    #[serde(default)]
    pub downlink: DownlinkSection,
    #[serde(default)]
    pub uplink: UplinkSection,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DownlinkSection {
    #[serde(default = "d_dl_freq")]
    pub frequency_ghz: f64,
    #[serde(default = "d_dl_bw")]
    pub bandwidth_mhz: f64,
    #[serde(default = "d_true")]
    pub nr_bandwidths: bool,
}

impl Default for DownlinkSection {
    fn default() -> Self {
        DownlinkSection {
            frequency_ghz: d_dl_freq(),
            bandwidth_mhz: d_dl_bw(),
            nr_bandwidths: true,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UplinkSection {
    #[serde(default = "d_ul_freq")]
    pub frequency_ghz: f64,
    #[serde(default = "d_one")]
    pub bandwidth_mhz: f64,
    #[serde(default = "d_one")]
    pub min_bandwidth_mhz: f64,
    #[serde(default)]
    pub implementation_loss_db: f64,
}

impl Default for UplinkSection {
    fn default() -> Self {
        UplinkSection {
            frequency_ghz: d_ul_freq(),
            bandwidth_mhz: 1.0,
            min_bandwidth_mhz: 1.0,
            implementation_loss_db: 0.0,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstellationSection {
    #[serde(default = "d_total_sats")]
    pub total_satellites: u32,
    #[serde(default = "d_planes")]
    pub planes: u32,
    #[serde(default)]
    pub phasing: u32,
    #[serde(default = "d_inclination")]
    pub inclination_deg: f64,
    #[serde(default = "d_altitude")]
    pub altitude_km: f64,
    #[serde(default = "d_raan_spread")]
    pub raan_spread_deg: f64,
    #[serde(default = "d_elevation")]
    pub min_elevation_deg: f64,
}

impl Default for ConstellationSection {
    fn default() -> Self {
        ConstellationSection {
            total_satellites: d_total_sats(),
            planes: d_planes(),
            phasing: 0,
            inclination_deg: d_inclination(),
            altitude_km: d_altitude(),
            raan_spread_deg: d_raan_spread(),
            min_elevation_deg: d_elevation(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelSection {
    #[serde(default = "d_channel_kind")]
    pub kind: String,
    #[serde(default = "d_flat_margin")]
    pub flat_db: f64,
    #[serde(default)]
    pub table_path: Option<String>,
    #[serde(default = "d_zenith")]
    pub zenith_db: f64,
}

impl Default for ChannelSection {
    fn default() -> Self {
        ChannelSection {
            kind: d_channel_kind(),
            flat_db: d_flat_margin(),
            table_path: None,
            zenith_db: d_zenith(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShadowSection {
    #[serde(default)]
    pub sigma_db: f64,
    #[serde(default = "d_availability")]
    pub availability: f64,
}

impl Default for ShadowSection {
    fn default() -> Self {
        ShadowSection {
            sigma_db: 0.0,
            availability: d_availability(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct McsSection {
    /// `[required_cnr_db, spectral_efficiency]` pairs, ascending.
    #[serde(default = "d_mcs_rows")]
    pub rows: Vec<[f64; 2]>,
}

impl Default for McsSection {
    fn default() -> Self {
        McsSection { rows: d_mcs_rows() }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaskSection {
    pub band_label: String,
    #[serde(default = "d_one")]
    pub reference_bandwidth_mhz: f64,
    pub segments: Vec<SegmentSection>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentSection {
    pub from_deg: f64,
    pub to_deg: f64,
    #[serde(default)]
    pub constant: Option<f64>,
    #[serde(default)]
    pub base: Option<f64>,
    #[serde(default)]
    pub slope_per_deg: Option<f64>,
    #[serde(default)]
    pub hinge_deg: Option<f64>,
}

fn d_earth_radius() -> f64 {
    6371.0
}
fn d_altitude() -> f64 {
    340.0
}
fn d_tx_array() -> ArraySection {
    ArraySection {
        diameter_m: 0.20,
        frequency_ghz: 40.0,
        aperture_efficiency: 0.916,
        lattice: "triangular".into(),
        element_spacing_wavelengths: 0.69,
        element_count: Some(997),
    }
}
fn d_rx_array() -> ArraySection {
    ArraySection {
        diameter_m: 0.40,
        frequency_ghz: 28.0,
        aperture_efficiency: 0.90,
        lattice: "triangular".into(),
        element_spacing_wavelengths: 0.69,
        element_count: Some(1915),
    }
}
fn d_sspa_power() -> f64 {
    0.10
}
fn d_tx_elements() -> u32 {
    997
}
fn d_one() -> f64 {
    1.0
}
fn d_true() -> bool {
    true
}
fn d_beams() -> u32 {
    8
}
fn d_beam_bw() -> f64 {
    0.5
}
fn d_sat_nf() -> f64 {
    2.0
}
fn d_antenna_temp() -> f64 {
    300.0
}
fn d_input_loss() -> f64 {
    0.5
}
fn d_ue_nf() -> f64 {
    7.0
}
fn d_ue_il() -> f64 {
    7.0
}
fn d_ue_eirp() -> f64 {
    29.0
}
fn d_fcc_cap() -> f64 {
    43.0
}
fn d_mask_label() -> String {
    "37.5-40-ngso".into()
}
fn d_elevation() -> f64 {
    40.0
}
fn d_dl_freq() -> f64 {
    39.0
}
fn d_dl_bw() -> f64 {
    400.0
}
fn d_ul_freq() -> f64 {
    28.0
}
fn d_total_sats() -> u32 {
    2592
}
fn d_planes() -> u32 {
    36
}
fn d_inclination() -> f64 {
    90.0
}
fn d_raan_spread() -> f64 {
    360.0
}
fn d_channel_kind() -> String {
    "flat".into()
}
fn d_flat_margin() -> f64 {
    5.0
}
fn d_zenith() -> f64 {
    2.0
}
fn d_availability() -> f64 {
    0.95
}
fn d_mcs_rows() -> Vec<[f64; 2]> {
    vec![[-1.2, 0.5], [0.5, 0.66]]
}

/// A loaded, validated scenario with its semantic digest.
#[derive(Debug)]
pub struct Scenario {
    pub digest: String,
    pub inputs: BudgetInputs,
    pub constellation: ConstellationConfig,
    pub masks: Vec<RegulatoryMask>,
    pub warnings: Vec<String>,
}

impl Scenario {
    /// Load a scenario file, apply `--set` overrides, validate, and
    /// build the core objects.
    pub fn load(path: &Path, overrides: &[String]) -> Result<Scenario, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::Validation(format!("cannot read scenario {}: {e}", path.display()))
        })?;
        if text.trim().is_empty() {
            return Err(CliError::Validation(format!(
                "{}: missing required section `satellite` (empty scenario)",
                path.display()
            )));
        }
        let mut doc: toml::Value = toml::from_str(&text)
            .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
        for entry in overrides {
            apply_override(&mut doc, entry)?;
        }
        let file: ScenarioFile = doc.try_into().map_err(|e| {
            let msg = e.to_string();
            if msg.contains("missing field") {
                CliError::Validation(format!(
                    "{}: missing required section: {msg}",
                    path.display()
                ))
            } else {
                CliError::Usage(format!("{}: {msg}", path.display()))
            }
        })?;
        Scenario::build(file, path)
    }

    fn build(file: ScenarioFile, path: &Path) -> Result<Scenario, CliError> {
        let digest = digest_of(&file)?;

        let earth = EarthModel {
            radius_km: file.defaults.earth_radius_km,
            rotation_ignored: true,
        };
        let payload = SatellitePayload {
            tx_array: array_from(&file.satellite.tx.array)?,
            tx_chain: TxRfChain {
                per_element_power_w: file.satellite.tx.rf.per_element_power_w,
                element_count: file.satellite.tx.rf.element_count,
                output_losses_db: file.satellite.tx.rf.output_losses_db,
                beam_rolloff_db: file.satellite.tx.rf.beam_rolloff_db,
                beams: file.satellite.tx.rf.beams,
                bandwidth_per_beam_ghz: file.satellite.tx.rf.bandwidth_per_beam_ghz,
            },
            rx_array: array_from(&file.satellite.rx.array)?,
            rx_noise: NoiseChain {
                noise_figure_db: file.satellite.rx.noise.noise_figure_db,
                antenna_temperature_k: file.satellite.rx.noise.antenna_temperature_k,
                input_loss_db: file.satellite.rx.noise.input_loss_db,
                reference_temperature_k: file.satellite.rx.noise.reference_temperature_k,
            },
            altitude_km: file.satellite.altitude_km,
            g_over_t_override_db: file.satellite.g_over_t_db,
        };
        let ue = UeTerminal {
            panel: UePanel {
                m: file.ue.panel.m,
                n: file.ue.panel.n,
                polarizations: file.ue.panel.p,
                mg: file.ue.panel.mg,
                ng: file.ue.panel.ng,
                element_gain_dbi: file.ue.panel.element_gain_dbi,
            },
            noise_figure_db: file.ue.noise_figure_db,
            implementation_loss_db: file.ue.implementation_loss_db,
            peak_eirp_dbm: file.ue.peak_eirp_dbm,
            fcc_eirp_cap_dbm: file.ue.fcc_eirp_cap_dbm,
        };
        let constellation = ConstellationConfig {
            total_satellites: file.constellation.total_satellites,
            planes: file.constellation.planes,
            phasing: file.constellation.phasing,
            inclination_deg: file.constellation.inclination_deg,
            altitude_km: file.constellation.altitude_km,
            raan_spread_deg: file.constellation.raan_spread_deg,
            min_elevation_deg: file.constellation.min_elevation_deg,
        };

        let mut masks = builtin_masks();
        for custom in &file.masks {
            masks.push(mask_from(custom)?);
        }
        let mask = masks
            .iter()
            .find(|m| m.band_label == file.link.mask)
            .cloned()
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown mask '{}'; available: {}",
                    file.link.mask,
                    mask_labels(&masks)
                ))
            })?;

        let channel = channel_from(&file.channel, path)?;
        let mcs = McsTable {
            rows: file
                .mcs
                .rows
                .iter()
                .map(|r| McsRow {
                    required_cnr_db: r[0],
                    spectral_efficiency: r[1],
                })
                .collect(),
        };
        let shadow = ShadowSpec {
            sigma_db: file.shadow.sigma_db,
            availability: file.shadow.availability,
        };
        let downlink = DownlinkParams {
            frequency_ghz: file.link.downlink.frequency_ghz,
            elevation_deg: file.link.elevation_deg,
            bandwidth_mhz: file.link.downlink.bandwidth_mhz,
            shadow,
            nr_bandwidths: file.link.downlink.nr_bandwidths,
            eirp_override_dbw: None,
        };
        let uplink = UplinkParams {
            frequency_ghz: file.link.uplink.frequency_ghz,
            elevation_deg: file.link.elevation_deg,
            bandwidth_mhz: file.link.uplink.bandwidth_mhz,
            min_bandwidth_mhz: file.link.uplink.min_bandwidth_mhz,
            shadow,
            implementation_loss_db: file.link.uplink.implementation_loss_db,
            eirp_override_dbm: None,
        };

        // validate every component now so commands can assume soundness
        earth.validate().map_err(validation)?;
        channel.validate().map_err(validation)?;
        payload.validate().map_err(validation)?;
        ue.validate().map_err(validation)?;
        constellation.validate().map_err(validation)?;
        mcs.validate().map_err(validation)?;
        for m in &masks {
            m.validate().map_err(validation)?;
        }

        let warnings = ue.warnings();
        let inputs = BudgetInputs {
            payload,
            ue,
            mask,
            channel,
            mcs,
            earth,
            downlink,
            uplink,
        };
        Ok(Scenario {
            digest,
            inputs,
            constellation,
            masks,
            warnings,
        })
    }

    pub fn mask_labels(&self) -> String {
        mask_labels(&self.masks)
    }
}

fn validation(e: ntnlink::Error) -> CliError {
    CliError::Validation(e.to_string())
}

fn mask_labels(masks: &[RegulatoryMask]) -> String {
    let mut s = String::new();
    for (i, m) in masks.iter().enumerate() {
        if i > 0 {
            let _ = write!(s, ", ");
        }
        let _ = write!(s, "{}", m.band_label);
    }
    s
}

fn array_from(section: &ArraySection) -> Result<ApertureArray, CliError> {
    let lattice = match section.lattice.as_str() {
        "triangular" => Lattice::Triangular,
        "rectangular" => Lattice::Rectangular,
        other => {
            return Err(CliError::Validation(format!(
                "lattice '{other}' must be 'triangular' or 'rectangular'"
            )))
        }
    };
    Ok(ApertureArray {
        diameter_m: section.diameter_m,
        frequency_ghz: section.frequency_ghz,
        aperture_efficiency: section.aperture_efficiency,
        lattice,
        element_spacing_wavelengths: section.element_spacing_wavelengths,
        element_count: section.element_count,
    })
}

fn channel_from(
    section: &ChannelSection,
    scenario_path: &Path,
) -> Result<AttenuationModel, CliError> {
    match section.kind.as_str() {
        "flat" => Ok(AttenuationModel::Flat(section.flat_db)),
        "cosecant" => Ok(AttenuationModel::Cosecant {
            zenith_db: section.zenith_db,
        }),
        "table" => {
            let rel = section.table_path.as_ref().ok_or_else(|| {
                CliError::Validation("channel.kind 'table' requires channel.table_path".into())
            })?;
            let path = resolve_relative(scenario_path, rel);
            let text = std::fs::read_to_string(&path).map_err(|e| {
                CliError::Validation(format!(
                    "attenuation table {} not readable: {e}",
                    path.display()
                ))
            })?;
            let table = AttenuationTable::from_csv_str(&text).map_err(validation)?;
            Ok(AttenuationModel::Table(table))
        }
        other => Err(CliError::Validation(format!(
            "channel.kind '{other}' must be 'flat', 'table' or 'cosecant'"
        ))),
    }
}

fn resolve_relative(scenario_path: &Path, relative: &str) -> PathBuf {
    let candidate = PathBuf::from(relative);
    if candidate.is_absolute() {
        candidate
    } else {
        scenario_path
            .parent()
            .unwrap_or_else(|| Path::new("."))
            .join(candidate)
    }
}

fn mask_from(section: &MaskSection) -> Result<RegulatoryMask, CliError> {
    let mut segments = Vec::with_capacity(section.segments.len());
    for seg in &section.segments {
        let limit = match (seg.constant, seg.base, seg.slope_per_deg) {
            (Some(v), None, None) => SegmentLimit::Constant(v),
            (None, Some(base), Some(slope)) => SegmentLimit::Affine {
                base,
                slope_per_deg: slope,
                hinge_deg: seg.hinge_deg.unwrap_or(seg.from_deg),
            },
            _ => {
                return Err(CliError::Validation(format!(
                "mask '{}' segment [{}, {}] needs either 'constant' or 'base' + 'slope_per_deg'",
                section.band_label, seg.from_deg, seg.to_deg
            )))
            }
        };
        segments.push(MaskSegment {
            from_deg: seg.from_deg,
            to_deg: seg.to_deg,
            limit,
        });
    }
    Ok(RegulatoryMask {
        band_label: section.band_label.clone(),
        segments,
        reference_bandwidth_mhz: section.reference_bandwidth_mhz,
    })
}

fn digest_of(file: &ScenarioFile) -> Result<String, CliError> {
    let canonical = serde_json::to_vec(file)
        .map_err(|e| CliError::Validation(format!("cannot canonicalise scenario: {e}")))?;
    let hash = Sha256::digest(&canonical);
    let mut hex = String::with_capacity(64);
    for byte in hash {
        let _ = write!(hex, "{byte:02x}");
    }
    Ok(hex)
}

/// Apply one `section.key=value` override into the TOML document.
fn apply_override(doc: &mut toml::Value, entry: &str) -> Result<(), CliError> {
    let (key_path, raw) = entry.split_once('=').ok_or_else(|| {
        CliError::Usage(format!(
            "override '{entry}' must look like section.key=value"
        ))
    })?;
    let parts: Vec<&str> = key_path.split('.').collect();
    if parts.iter().any(|p| p.is_empty()) {
        return Err(CliError::Usage(format!(
            "override key '{key_path}' is malformed"
        )));
    }
    let mut node = doc;
    for part in &parts[..parts.len() - 1] {
        let table = node.as_table_mut().ok_or_else(|| {
            CliError::Usage(format!(
                "override key '{key_path}': '{part}' is not a section"
            ))
        })?;
        node = table
            .entry(part.to_string())
            .or_insert_with(|| toml::Value::Table(Default::default()));
    }
    let table = node.as_table_mut().ok_or_else(|| {
        CliError::Usage(format!(
            "override key '{key_path}' does not address a section"
        ))
    })?;
    table.insert(parts[parts.len() - 1].to_string(), parse_literal(raw));
    Ok(())
}

/// Interpret an override value as a TOML literal, falling back to a
/// bare string (so `lattice=rectangular` works without quotes).
fn parse_literal(raw: &str) -> toml::Value {
    let probe = format!("v = {raw}");
    match toml::from_str::<toml::Value>(&probe) {
        Ok(value) => value
            .as_table()
            .and_then(|t| t.get("v"))
            .cloned()
            .unwrap_or_else(|| toml::Value::String(raw.to_string())),
        Err(_) => toml::Value::String(raw.to_string()),
    }
}
