#include "bandsim/linkbudget.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bandsim/textio.hpp"

namespace bandsim {

const char* band_name(BandId band) {
  switch (band) {
    case BandId::NoTx:
      return "notx";
    case BandId::Sub6:
      return "sub6";
    case BandId::MmWave:
      return "mmwave";
    case BandId::Thz:
      return "thz";
  }
  throw std::invalid_argument("invalid BandId");
}

BandId band_from_name(std::string_view name) {
  const std::string n = lower(trim(name));
  if (n == "notx" || n == "no-tx" || n == "none") return BandId::NoTx;
  if (n == "sub6" || n == "sub-6") return BandId::Sub6;
  if (n == "mmwave") return BandId::MmWave;
  if (n == "thz") return BandId::Thz;
  throw std::invalid_argument("unknown band name '" + std::string(name) + "'");
}

int tx_band_index(BandId band) {
  switch (band) {
    case BandId::Sub6:
      return 0;
    case BandId::MmWave:
      return 1;
    case BandId::Thz:
      return 2;
    default:
      throw std::invalid_argument("band has no transmit index: NoTx");
  }
}

BandId tx_band_from_index(int idx) {
  switch (idx) {
    case 0:
      return BandId::Sub6;
    case 1:
      return BandId::MmWave;
    case 2:
      return BandId::Thz;
    default:
      throw std::invalid_argument("transmit band index out of range: " +
                                  std::to_string(idx));
  }
}

BandConfig default_band_config(BandId band) {
  BandConfig cfg;
  cfg.band = band;
  switch (band) {
    case BandId::NoTx:
      cfg.carrier_hz = 0.0;
      cfg.bandwidth_hz = 0.0;
      cfg.n_rx = 0;
      cfg.rf_power_mw = 0.0;
      cfg.rf_components = {};
      break;
    case BandId::Sub6:
      cfg.carrier_hz = 3.5e9;
      cfg.bandwidth_hz = 10e6;
      cfg.n_rx = 1;
      cfg.rf_power_mw = 85.60;
      cfg.rf_components = {5.0, 10.0, 5.0, 0.0, 0.0, 15.0, 10.0, 5.0, 7.8};
      break;
    case BandId::MmWave:
      cfg.carrier_hz = 28e9;
      cfg.bandwidth_hz = 100e6;
      cfg.n_rx = 8;
      cfg.rf_power_mw = 254.90;
      cfg.rf_components = {5.0, 11.13, 5.0, 1.5, 19.5, 16.8, 14.0, 5.0, 8.2};
      break;
    case BandId::Thz:
      cfg.carrier_hz = 140e9;
      cfg.bandwidth_hz = 1e9;
      cfg.n_rx = 64;
      cfg.rf_power_mw = 3893.58;
      cfg.rf_components = {5.0, 50.89, 5.0, 1.5, 19.5, 49.0, 11.36, 5.0, 32.7};
      break;
  }
  return cfg;
}

BandConfigs default_band_configs() {
  return {default_band_config(BandId::NoTx), default_band_config(BandId::Sub6),
          default_band_config(BandId::MmWave), default_band_config(BandId::Thz)};
}

double noise_variance_w(const BandConfig& cfg) {
  if (cfg.band == BandId::NoTx)
    throw std::invalid_argument("noise_variance_w: NoTx has no receive chain");
  if (!(cfg.bandwidth_hz > 0.0))
    throw std::invalid_argument("noise_variance_w: bandwidth must be positive");
  return kBoltzmann * cfg.temperature_k * cfg.bandwidth_hz *
         std::pow(10.0, cfg.noise_figure_db / 10.0);
}

double snr(const BandConfig& cfg, double gain) {
  if (gain < 0.0 || !std::isfinite(gain))
    throw std::invalid_argument("snr: gain must be finite and nonnegative");
  if (cfg.band == BandId::NoTx) return 0.0;
  return cfg.tx_power_w / noise_variance_w(cfg) * static_cast<double>(cfg.n_rx) *
         gain;
}

double spectral_efficiency(const BandConfig& cfg, double gain) {
  if (cfg.band == BandId::NoTx) return 0.0;
  return std::log2(1.0 + snr(cfg, gain));
}

double rate_bps(const BandConfig& cfg, double gain) {
  if (cfg.band == BandId::NoTx) return 0.0;
  return cfg.bandwidth_hz * spectral_efficiency(cfg, gain);
}

double rf_power_from_components_mw(const BandConfig& cfg) {
  const RfComponents& c = cfg.rf_components;
  for (double v : {c.bpf_mw, c.lna_mw, c.lo_mw, c.ps_mw, c.combiner_mw,
                   c.mixer_mw, c.lpf_mw, c.bba_mw, c.adc_mw}) {
    if (v < 0.0)
      throw std::invalid_argument(
          "rf_power_from_components_mw: negative component power");
  }
  return static_cast<double>(cfg.n_rx) * (c.bpf_mw + c.lna_mw + c.ps_mw) +
         c.combiner_mw + c.lo_mw +
         2.0 * (c.mixer_mw + c.lpf_mw + c.bba_mw + c.adc_mw);
}

double rf_power_mw(BandId band) {
  switch (band) {
    case BandId::NoTx:
      return 0.0;
    case BandId::Sub6:
      return 85.60;
    case BandId::MmWave:
      return 254.90;
    case BandId::Thz:
      return 3893.58;
  }
  throw std::invalid_argument("invalid BandId");
}

}  // namespace bandsim
