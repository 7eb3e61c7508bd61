//! Downlink and uplink budget ledgers, MCS selection, capacity rollups
//! and parameter sweeps.
//!
//! A ledger is an ordered list of named lines in the units the numbers
//! are conventionally quoted in. Lines that enter the CNR carry a sign;
//! the stored CNR is that signed sum, so recomputing it from the lines
//! is exact by construction. Everything else is informational context
//! (inputs, derived intermediate values).

mod sweep;

pub use sweep::{sweep, BudgetInputs, LinkDirection, SweepRow, SweepVariable};

use crate::antenna::{self, ApertureArray, TxRfChain, UePanel};
use crate::channel::{self, AttenuationModel, NoiseChain};
use crate::error::{Error, Result};
use crate::geometry::{self, EarthModel};
use crate::regulatory::{self, RegulatoryMask};
use crate::units::{db, dbw_to_dbm, wavelength_m, BOLTZMANN_DBW_K_HZ};

/// User terminal: panel, receiver quality and transmit capability.
#[derive(Debug, Clone, PartialEq)]
pub struct UeTerminal {
    pub panel: UePanel,
    pub noise_figure_db: f64,
    pub implementation_loss_db: f64,
    pub peak_eirp_dbm: f64,
    /// Regulatory EIRP ceiling; the hard invariant `peak <= cap`.
    pub fcc_eirp_cap_dbm: f64,
}

impl UeTerminal {
    pub fn validate(&self) -> Result<()> {
        self.panel.validate()?;
        if self.noise_figure_db < 0.0 || self.implementation_loss_db < 0.0 {
            return Err(Error::config(
                "noise figure and implementation loss must be >= 0",
            ));
        }
        if self.peak_eirp_dbm > self.fcc_eirp_cap_dbm {
            return Err(Error::config(format!(
                "peak EIRP {} dBm exceeds the {} dBm regulatory cap",
                self.peak_eirp_dbm, self.fcc_eirp_cap_dbm
            )));
        }
        Ok(())
    }

    /// Soft range checks against typical FR2 terminal characteristics.
    pub fn warnings(&self) -> Vec<String> {
        let mut warnings = self.panel.warnings();
        if !(5.0..=10.0).contains(&self.noise_figure_db) {
            warnings.push(format!(
                "noise figure {} dB outside the typical range [5, 10]",
                self.noise_figure_db
            ));
        }
        if self.implementation_loss_db > 12.0 {
            warnings.push(format!(
                "implementation loss {} dB above the typical maximum 12",
                self.implementation_loss_db
            ));
        }
        warnings
    }
}

/// One satellite's transmit and receive sections.
#[derive(Debug, Clone, PartialEq)]
pub struct SatellitePayload {
    pub tx_array: ApertureArray,
    pub tx_chain: TxRfChain,
    pub rx_array: ApertureArray,
    pub rx_noise: NoiseChain,
    pub altitude_km: f64,
    /// Measured receive figure of merit, taking precedence over the
    /// value derived from the array and noise chain when present.
    pub g_over_t_override_db: Option<f64>,
}

impl SatellitePayload {
    pub fn validate(&self) -> Result<()> {
        self.tx_array.validate()?;
        self.tx_chain.validate()?;
        self.rx_array.validate()?;
        self.rx_noise.validate()?;
        if !(self.altitude_km > 0.0) {
            return Err(Error::config("payload altitude must be positive"));
        }
        Ok(())
    }

    pub fn tx_gain_dbi(&self) -> f64 {
        antenna::aperture_gain(&self.tx_array)
    }

    /// EIRP available to a single carrier when the total EIRP is split
    /// evenly across the beams (one carrier per beam).
    pub fn per_carrier_eirp_cap_dbw(&self) -> f64 {
        antenna::eirp_total(&self.tx_chain, self.tx_gain_dbi()) - db(self.tx_chain.beams as f64)
    }

    pub fn g_over_t_db(&self) -> f64 {
        self.g_over_t_override_db.unwrap_or_else(|| {
            channel::g_over_t(
                antenna::aperture_gain(&self.rx_array),
                channel::system_noise_temperature(&self.rx_noise),
            )
        })
    }
}

/// One row of the modulation-and-coding table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McsRow {
    pub required_cnr_db: f64,
    pub spectral_efficiency: f64,
}

/// CNR-to-spectral-efficiency step table, ascending in required CNR.
#[derive(Debug, Clone, PartialEq)]
pub struct McsTable {
    pub rows: Vec<McsRow>,
}

impl Default for McsTable {
    /// The two anchor operating points the reference budgets close at.
    /// Scenario files may extend the table with additional rows.
    fn default() -> Self {
        McsTable {
            rows: vec![
                McsRow {
                    required_cnr_db: -1.2,
                    spectral_efficiency: 0.5,
                },
                McsRow {
                    required_cnr_db: 0.5,
                    spectral_efficiency: 0.66,
                },
            ],
        }
    }
}

impl McsTable {
    pub fn validate(&self) -> Result<()> {
        if self.rows.is_empty() {
            return Err(Error::config("MCS table must not be empty"));
        }
        for pair in self.rows.windows(2) {
            if !(pair[0].required_cnr_db < pair[1].required_cnr_db) {
                return Err(Error::config(
                    "MCS rows must be strictly ascending in required CNR",
                ));
            }
            if !(pair[0].spectral_efficiency < pair[1].spectral_efficiency) {
                return Err(Error::config(
                    "MCS spectral efficiency must strictly increase with required CNR",
                ));
            }
        }
        Ok(())
    }
}

/// Pick the highest spectral efficiency whose required CNR is met.
/// Returns `(0.0, false)` when no row is satisfiable.
pub fn select_mcs(cnr_db: f64, table: &McsTable) -> (f64, bool) {
    let idx = table
        .rows
        .partition_point(|row| row.required_cnr_db <= cnr_db);
    if idx == 0 {
        (0.0, false)
    } else {
        (table.rows[idx - 1].spectral_efficiency, true)
    }
}

/// How a ledger line enters the CNR combination.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Contribution {
    Plus,
    Minus,
    /// Context only; not part of the CNR sum.
    Info,
}

/// One named budget line.
#[derive(Debug, Clone, PartialEq)]
pub struct LedgerLine {
    pub name: &'static str,
    pub value: f64,
    pub unit: &'static str,
    pub contribution: Contribution,
}

/// Ordered budget ledger with its terminal results.
#[derive(Debug, Clone, PartialEq)]
pub struct LinkLedger {
    pub lines: Vec<LedgerLine>,
    pub cnr_db: f64,
    pub spectral_efficiency: f64,
    pub data_rate_mbps: f64,
    pub feasible: bool,
}

impl LinkLedger {
    /// Signed dB sum of the contributing lines. Equals `cnr_db` exactly.
    pub fn cnr_from_lines(&self) -> f64 {
        self.lines
            .iter()
            .map(|l| match l.contribution {
                Contribution::Plus => l.value,
                Contribution::Minus => -l.value,
                Contribution::Info => 0.0,
            })
            .sum()
    }

    /// Value of a line by name, if present.
    pub fn line(&self, name: &str) -> Option<f64> {
        self.lines.iter().find(|l| l.name == name).map(|l| l.value)
    }
}

/// Shadow-fading margin specification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShadowSpec {
    pub sigma_db: f64,
    pub availability: f64,
}

impl Default for ShadowSpec {
    fn default() -> Self {
        ShadowSpec {
            sigma_db: 0.0,
            availability: 0.95,
        }
    }
}

impl ShadowSpec {
    fn margin_db(&self) -> Result<f64> {
        if self.sigma_db == 0.0 {
            return Ok(0.0);
        }
        channel::shadow_margin(self.sigma_db, self.availability)
    }
}

/// NR FR2 carrier bandwidths in MHz.
pub const NR_BANDWIDTHS_MHZ: [f64; 4] = [50.0, 100.0, 200.0, 400.0];

/// Downlink budget knobs beyond the payload/terminal descriptions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DownlinkParams {
    pub frequency_ghz: f64,
    pub elevation_deg: f64,
    pub bandwidth_mhz: f64,
    pub shadow: ShadowSpec,
    /// Restrict the carrier to the NR channelisation set. Sweeps and
    /// what-if studies may disable this.
    pub nr_bandwidths: bool,
    /// Replace the PFD-derived EIRP with an explicit value (what-if
    /// studies; the regulatory check is bypassed).
    pub eirp_override_dbw: Option<f64>,
}

impl Default for DownlinkParams {
    fn default() -> Self {
        DownlinkParams {
            frequency_ghz: 39.0,
            elevation_deg: 40.0,
            bandwidth_mhz: 400.0,
            shadow: ShadowSpec::default(),
            nr_bandwidths: true,
            eirp_override_dbw: None,
        }
    }
}

/// Uplink budget knobs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UplinkParams {
    pub frequency_ghz: f64,
    pub elevation_deg: f64,
    pub bandwidth_mhz: f64,
    /// Narrowest allowed carrier; one resource block rounded up.
    pub min_bandwidth_mhz: f64,
    pub shadow: ShadowSpec,
    pub implementation_loss_db: f64,
    /// Replace the terminal's peak EIRP (still capped by regulation).
    pub eirp_override_dbm: Option<f64>,
}

impl Default for UplinkParams {
    fn default() -> Self {
        UplinkParams {
            frequency_ghz: 28.0,
            elevation_deg: 40.0,
            bandwidth_mhz: 1.0,
            min_bandwidth_mhz: 1.0,
            shadow: ShadowSpec::default(),
            implementation_loss_db: 0.0,
            eirp_override_dbm: None,
        }
    }
}

/// Compute the downlink ledger: the satellite radiates up to the ground
/// PFD limit (and its own EIRP capability), and the terminal's panel,
/// noise figure and implementation loss decide whether an MCS closes.
pub fn downlink_budget(
    payload: &SatellitePayload,
    ue: &UeTerminal,
    mask: &RegulatoryMask,
    params: &DownlinkParams,
    channel_model: &AttenuationModel,
    mcs: &McsTable,
    earth: &EarthModel,
) -> Result<LinkLedger> {
    payload.validate()?;
    ue.validate()?;
    mask.validate()?;
    mcs.validate()?;
    channel_model.validate()?;
    if params.nr_bandwidths && !NR_BANDWIDTHS_MHZ.contains(&params.bandwidth_mhz) {
        return Err(Error::config(format!(
            "bandwidth {} MHz not in the NR set {:?}",
            params.bandwidth_mhz, NR_BANDWIDTHS_MHZ
        )));
    }
    if !(params.bandwidth_mhz > 0.0) {
        return Err(Error::config("bandwidth must be positive"));
    }

    let distance_km = geometry::slant_range(payload.altitude_km, params.elevation_deg, earth)?;
    let limit = regulatory::pfd_limit(mask, params.elevation_deg)?;
    let pfd_over_bw = limit.dbw_m2 + db(params.bandwidth_mhz / limit.reference_bandwidth_mhz);
    let pfd_eirp = regulatory::max_eirp_from_pfd(&limit, distance_km, params.bandwidth_mhz)?;
    let eirp_dbw = match params.eirp_override_dbw {
        Some(v) => v,
        None => pfd_eirp.min(payload.per_carrier_eirp_cap_dbw()),
    };
    let eirp_density = eirp_dbw - db(params.bandwidth_mhz * 1e6);
    let fsl = channel::free_space_loss(params.frequency_ghz, distance_km);
    let atmospheric = channel::atmospheric_loss(channel_model, params.elevation_deg)?;
    let shadow = params.shadow.margin_db()?;
    let rx_gain = ue.panel.gain_dbi();
    let psd = channel::noise_psd(ue.noise_figure_db);
    let noise = channel::noise_power(psd, params.bandwidth_mhz);
    let noise_temp_dbk = channel::receiver_noise_temperature_dbk(ue.noise_figure_db);
    let lambda = wavelength_m(params.frequency_ghz);
    let panel_dim_cm = (ue.panel.total_elements() as f64).sqrt() * lambda / 2.0 * 100.0;
    let received = dbw_to_dbm(eirp_dbw) - fsl - atmospheric - shadow + rx_gain;

    let mut lines = vec![
        info("frequency", params.frequency_ghz, "GHz"),
        info("wavelength", lambda, "m"),
        info("elevation", params.elevation_deg, "deg"),
        info("max_pfd", limit.dbw_m2, "dBW/m2/MHz"),
        info("bandwidth", params.bandwidth_mhz, "MHz"),
        info("max_pfd_over_bandwidth", pfd_over_bw, "dBW/m2"),
        info("satellite_altitude", payload.altitude_km, "km"),
        info("link_distance", distance_km, "km"),
        info("max_eirp_per_carrier", eirp_dbw, "dBW"),
        line(
            "eirp_per_carrier",
            dbw_to_dbm(eirp_dbw),
            "dBm",
            Contribution::Plus,
        ),
        info("eirp_density", eirp_density, "dBW/Hz"),
        line("fsl", fsl, "dB", Contribution::Minus),
        info("noise_figure", ue.noise_figure_db, "dB"),
        info("noise_psd", psd, "dBm/Hz"),
        line("total_noise_power", noise, "dBm", Contribution::Minus),
        line("atmospheric_loss", atmospheric, "dB", Contribution::Minus),
        line("shadow_margin", shadow, "dB", Contribution::Minus),
        info(
            "terminal_elements",
            ue.panel.total_elements() as f64,
            "count",
        ),
        info("panel_dimension", panel_dim_cm, "cm"),
        info("element_gain", ue.panel.element_gain_dbi, "dBi"),
        line("rx_antenna_gain", rx_gain, "dBi", Contribution::Plus),
        info("receiver_noise_temp", noise_temp_dbk, "dBK"),
        info("g_over_t", rx_gain - noise_temp_dbk, "dB/K"),
        info("received_carrier_power", received, "dBm"),
        line(
            "implementation_loss",
            ue.implementation_loss_db,
            "dB",
            Contribution::Minus,
        ),
    ];
    Ok(finish_ledger(&mut lines, params.bandwidth_mhz, mcs))
}

/// Compute the uplink ledger: the terminal radiates its (capped) peak
/// EIRP toward the satellite's receive figure of merit.
pub fn uplink_budget(
    ue: &UeTerminal,
    payload: &SatellitePayload,
    params: &UplinkParams,
    channel_model: &AttenuationModel,
    mcs: &McsTable,
    earth: &EarthModel,
) -> Result<LinkLedger> {
    ue.validate()?;
    payload.validate()?;
    mcs.validate()?;
    channel_model.validate()?;
    if params.bandwidth_mhz < params.min_bandwidth_mhz {
        return Err(Error::config(format!(
            "bandwidth {} MHz below the {} MHz floor",
            params.bandwidth_mhz, params.min_bandwidth_mhz
        )));
    }
    let eirp_dbm = params.eirp_override_dbm.unwrap_or(ue.peak_eirp_dbm);
    if eirp_dbm > ue.fcc_eirp_cap_dbm {
        return Err(Error::config(format!(
            "EIRP {} dBm exceeds the {} dBm regulatory cap",
            eirp_dbm, ue.fcc_eirp_cap_dbm
        )));
    }

    let distance_km = geometry::slant_range(payload.altitude_km, params.elevation_deg, earth)?;
    let fsl = channel::free_space_loss(params.frequency_ghz, distance_km);
    let atmospheric = channel::atmospheric_loss(channel_model, params.elevation_deg)?;
    let shadow = params.shadow.margin_db()?;
    let g_over_t = payload.g_over_t_db();
    let noise_bw = db(params.bandwidth_mhz * 1e6);

    let mut lines = vec![
        info("frequency", params.frequency_ghz, "GHz"),
        info("wavelength", wavelength_m(params.frequency_ghz), "m"),
        info("elevation", params.elevation_deg, "deg"),
        info("bandwidth", params.bandwidth_mhz, "MHz"),
        info("satellite_altitude", payload.altitude_km, "km"),
        info("max_eirp_per_carrier", eirp_dbm, "dBm"),
        line(
            "eirp_per_carrier",
            eirp_dbm - 30.0,
            "dBW",
            Contribution::Plus,
        ),
        info("link_distance", distance_km, "km"),
        line("fsl", fsl, "dB", Contribution::Minus),
        line("atmospheric_loss", atmospheric, "dB", Contribution::Minus),
        line("shadow_margin", shadow, "dB", Contribution::Minus),
        line("g_over_t", g_over_t, "dB/K", Contribution::Plus),
        line(
            "boltzmann",
            BOLTZMANN_DBW_K_HZ,
            "dBW/K/Hz",
            Contribution::Minus,
        ),
        line("noise_bandwidth", noise_bw, "dBHz", Contribution::Minus),
        line(
            "implementation_loss",
            params.implementation_loss_db,
            "dB",
            Contribution::Minus,
        ),
    ];
    Ok(finish_ledger(&mut lines, params.bandwidth_mhz, mcs))
}

fn info(name: &'static str, value: f64, unit: &'static str) -> LedgerLine {
    LedgerLine {
        name,
        value,
        unit,
        contribution: Contribution::Info,
    }
}

fn line(
    name: &'static str,
    value: f64,
    unit: &'static str,
    contribution: Contribution,
) -> LedgerLine {
    LedgerLine {
        name,
        value,
        unit,
        contribution,
    }
}

fn finish_ledger(lines: &mut Vec<LedgerLine>, bandwidth_mhz: f64, mcs: &McsTable) -> LinkLedger {
    let cnr: f64 = lines
        .iter()
        .map(|l| match l.contribution {
            Contribution::Plus => l.value,
            Contribution::Minus => -l.value,
            Contribution::Info => 0.0,
        })
        .sum();
    let (se, feasible) = select_mcs(cnr, mcs);
    let rate = se * bandwidth_mhz;
    lines.push(info("cnr", cnr, "dB"));
    lines.push(info("spectral_efficiency", se, "bps/Hz"));
    lines.push(info("data_rate", rate, "Mbps"));
    LinkLedger {
        lines: std::mem::take(lines),
        cnr_db: cnr,
        spectral_efficiency: se,
        data_rate_mbps: rate,
        feasible,
    }
}

/// Per-satellite and whole-constellation throughput.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityRollup {
    pub per_satellite_gbps: f64,
    pub constellation_tbps: f64,
}

/// Multiply a per-carrier rate up to satellite and constellation totals.
pub fn capacity_rollup(
    rate_per_carrier_mbps: f64,
    carriers_per_beam: u32,
    beams: u32,
    satellites: u32,
) -> CapacityRollup {
    assert!(
        carriers_per_beam >= 1 && beams >= 1 && satellites >= 1,
        "counts must be positive"
    );
    let per_satellite_gbps = rate_per_carrier_mbps * carriers_per_beam as f64 * beams as f64 / 1e3;
    CapacityRollup {
        per_satellite_gbps,
        constellation_tbps: per_satellite_gbps * satellites as f64 / 1e3,
    }
}
