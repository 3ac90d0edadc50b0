#pragma once

#include <array>
#include <string_view>

namespace bandsim {

/// Downlink options available to the base station in each slot. NoTx means
/// the slot is left idle: zero bandwidth, zero UE RF power.
enum class BandId : int { NoTx = 0, Sub6 = 1, MmWave = 2, Thz = 3 };

inline constexpr int kBandCount = 4;
inline constexpr std::array<BandId, 4> kAllBands = {BandId::NoTx, BandId::Sub6,
                                                    BandId::MmWave, BandId::Thz};
inline constexpr std::array<BandId, 3> kTxBands = {BandId::Sub6, BandId::MmWave,
                                                   BandId::Thz};

/// Boltzmann constant [J/K].
inline constexpr double kBoltzmann = 1.380649e-23;

const char* band_name(BandId band);
BandId band_from_name(std::string_view name);

/// Index of a transmit band into per-band arrays (Sub6 -> 0, MmWave -> 1,
/// Thz -> 2). Throws for NoTx.
int tx_band_index(BandId band);
BandId tx_band_from_index(int idx);

/// Per-component UE RF chain power draw in mW. Components missing from a
/// chain (phase shifter / combiner at Sub-6) are zero.
struct RfComponents {
  double bpf_mw = 0.0;
  double lna_mw = 0.0;
  double lo_mw = 0.0;
  double ps_mw = 0.0;
  double combiner_mw = 0.0;
  double mixer_mw = 0.0;
  double lpf_mw = 0.0;
  double bba_mw = 0.0;
  double adc_mw = 0.0;
};

/// Physical and RF-chain parameters of one band.
struct BandConfig {
  BandId band = BandId::NoTx;
  double carrier_hz = 0.0;
  double bandwidth_hz = 0.0;
  int n_rx = 0;
  double tx_power_w = 1.0;
  double noise_figure_db = 7.0;
  double temperature_k = 300.0;
  /// Canonical per-band UE RF power. This value, not the component
  /// recomputation, is what the assignment policies charge per slot.
  double rf_power_mw = 0.0;
  RfComponents rf_components;
};

using BandConfigs = std::array<BandConfig, kBandCount>;

/// Defaults: Sub-6 3.5 GHz / 10 MHz / 1 antenna, mmWave 28 GHz / 100 MHz /
/// 8 antennas, THz 140 GHz / 1 GHz / 64 antennas; 1 W transmit power,
/// 7 dB noise figure, 300 K.
BandConfig default_band_config(BandId band);
BandConfigs default_band_configs();

/// Thermal noise power k_B * T * B * 10^(NF/10) [W]. Throws for NoTx
/// (no receive chain) or non-positive bandwidth.
double noise_variance_w(const BandConfig& cfg);

/// Received SNR Ptx / sigma^2 * N_rx * |h|^2 (dimensionless).
double snr(const BandConfig& cfg, double gain);

/// log2(1 + snr) [bits/s/Hz].
double spectral_efficiency(const BandConfig& cfg, double gain);

/// bandwidth * log2(1 + snr) [bits/s]; identically 0 for NoTx.
double rate_bps(const BandConfig& cfg, double gain);

/// Recompute the RF chain total from the component table:
/// N_rx*(BPF+LNA+PS) + Combiner + LO + 2*(Mixer+LPF+BBA+ADC).
/// The factor 2 covers the I and Q branches.
double rf_power_from_components_mw(const BandConfig& cfg);

/// Canonical per-band totals used throughout the policy evaluation:
/// NoTx 0, Sub-6 85.60 mW, mmWave 254.90 mW, THz 3893.58 mW.
double rf_power_mw(BandId band);

}  // namespace bandsim
