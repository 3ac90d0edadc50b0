#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bandsim/linkbudget.hpp"

namespace bandsim {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

double distance(const Vec3& a, const Vec3& b);

/// Straight-line mobility scenario for the synthetic trace generator.
///
/// UEs drive along the segment ue_start -> ue_end sampled every
/// row_spacing_m meters; trailing UEs start ue_spacing_m behind the one in
/// front. Per slot and band the channel gain is
///   free-space path loss * correlated lognormal shadowing
///     * |sum of ray components|^2 * blockage attenuation,
/// where blockage only affects mmWave/THz by default.
struct SyntheticScenario {
  Vec3 bs_position{235.50, 489.50, 6.0};
  Vec3 ue_start{242.42, 297.17, 2.0};
  Vec3 ue_end{242.42, 847.17, 2.0};
  double ue_speed_mps = 10.0;
  int ue_count = 3;
  double ue_spacing_m = 3.0;
  /// Spatial sample spacing along the trajectory; together with the speed it
  /// fixes the slot duration (0.2 m at 10 m/s -> 20 ms slots).
  double row_spacing_m = 0.2;
  int paths_per_band = 3;
  double shadowing_std_db = 3.0;
  double shadowing_corr_m = 30.0;
  /// Blockage event arrival rate per meter travelled, per transmit band
  /// (Sub6, MmWave, Thz).
  std::array<double, 3> blockage_rate_per_m{0.0, 0.015, 0.04};
  double blockage_atten_db = 20.0;
  double blockage_mean_len_m = 1.5;
  /// Per-band fading decorrelation distance: secondary-ray phases drift by a
  /// full turn over roughly this many meters. Shorter means choppier fading.
  std::array<double, 3> fading_decorr_m{30.0, 10.0, 4.0};
  std::uint64_t seed = 1;

  /// Number of trajectory samples (slots) per UE.
  int slots_per_ue() const;
  double slot_duration_s() const;
};

/// Per-slot effective channel gain |h|^2 for each UE and transmit band.
struct ChannelTrace {
  int ue_count = 0;
  int slots_per_ue = 0;
  double slot_duration_s = 0.0;
  /// Laid out (ue, band, slot), band in transmit order Sub6/MmWave/Thz.
  std::vector<double> gains;

  double gain(int ue, BandId band, int slot) const;
  void set_gain(int ue, BandId band, int slot, double g);
  std::size_t index(int ue, BandId band, int slot) const;

  /// Enforces the structural invariants (size, nonnegative finite gains,
  /// positive slot duration). Throws std::invalid_argument on violation.
  void validate() const;
};

/// Deterministic synthetic trace for the given scenario and seed. Carrier
/// frequencies come from the band configs.
ChannelTrace generate_trace(const SyntheticScenario& scenario,
                            const BandConfigs& bands = default_band_configs());

/// Trace CSV round-trip. Format: header "ue,band,slot,gain"; band is one of
/// sub6/mmwave/thz; gains are linear scale, written so they parse back to
/// the exact same double.
ChannelTrace load_trace_csv(const std::string& path);
void save_trace_csv(const ChannelTrace& trace, const std::string& path);

/// Which physical quantity a series/forecaster works on: spectral efficiency
/// log2(1+snr) ("rate" in the loose sense) or the raw channel gain |h|^2.
enum class SeriesQuantity { Rate, Channel };

SeriesQuantity series_quantity_from_name(std::string_view name);
const char* series_quantity_name(SeriesQuantity q);

/// Stacks the per-UE series into one temporal sequence ordered UE3, UE2,
/// UE1 (highest index first). Rate mode converts gains to spectral
/// efficiency with the supplied band config; channel mode returns raw gains.
/// The 3-UE ordering is the canonical construction; pass
/// require_three_ues=false to allow other UE counts (still highest index
/// first).
std::vector<double> concatenate_ue_series(const ChannelTrace& trace, BandId band,
                                          SeriesQuantity quantity,
                                          const BandConfig& cfg,
                                          bool require_three_ues = true);

}  // namespace bandsim
