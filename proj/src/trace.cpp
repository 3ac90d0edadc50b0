#include "bandsim/trace.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <stdexcept>

#include "bandsim/rng.hpp"
#include "bandsim/textio.hpp"

namespace bandsim {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSpeedOfLight = 299792458.0;

Vec3 lerp(const Vec3& a, const Vec3& b, double t) {
  return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t, a.z + (b.z - a.z) * t};
}
}  // namespace

double distance(const Vec3& a, const Vec3& b) {
  const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

int SyntheticScenario::slots_per_ue() const {
  const double len = distance(ue_start, ue_end);
  return static_cast<int>(std::llround(len / row_spacing_m)) + 1;
}

double SyntheticScenario::slot_duration_s() const {
  return row_spacing_m / ue_speed_mps;
}

std::size_t ChannelTrace::index(int ue, BandId band, int slot) const {
  return (static_cast<std::size_t>(ue) * 3 + tx_band_index(band)) *
             static_cast<std::size_t>(slots_per_ue) +
         static_cast<std::size_t>(slot);
}

double ChannelTrace::gain(int ue, BandId band, int slot) const {
  return gains.at(index(ue, band, slot));
}

void ChannelTrace::set_gain(int ue, BandId band, int slot, double g) {
  gains.at(index(ue, band, slot)) = g;
}

void ChannelTrace::validate() const {
  if (ue_count < 1) throw std::invalid_argument("trace: ue_count < 1");
  if (slots_per_ue < 1) throw std::invalid_argument("trace: slots_per_ue < 1");
  if (!(slot_duration_s > 0.0))
    throw std::invalid_argument("trace: slot_duration must be positive");
  const std::size_t expected = static_cast<std::size_t>(ue_count) * 3 *
                               static_cast<std::size_t>(slots_per_ue);
  if (gains.size() != expected)
    throw std::invalid_argument("trace: gain array has " +
                                std::to_string(gains.size()) +
                                " entries, expected " + std::to_string(expected));
  for (double g : gains) {
    if (!(g >= 0.0) || !std::isfinite(g))
      throw std::invalid_argument("trace: gains must be finite and >= 0");
  }
}

ChannelTrace generate_trace(const SyntheticScenario& sc, const BandConfigs& bands) {
  if (sc.ue_count < 1) throw std::invalid_argument("scenario: ue_count < 1");
  if (!(sc.ue_speed_mps > 0.0))
    throw std::invalid_argument("scenario: ue_speed must be positive");
  if (!(sc.row_spacing_m > 0.0))
    throw std::invalid_argument("scenario: row_spacing must be positive");
  if (sc.paths_per_band < 1)
    throw std::invalid_argument("scenario: paths_per_band < 1");
  if (sc.shadowing_std_db < 0.0)
    throw std::invalid_argument("scenario: shadowing_std_db < 0");
  for (double r : sc.blockage_rate_per_m)
    if (r < 0.0) throw std::invalid_argument("scenario: negative blockage rate");

  const int slots = sc.slots_per_ue();
  ChannelTrace trace;
  trace.ue_count = sc.ue_count;
  trace.slots_per_ue = slots;
  trace.slot_duration_s = sc.slot_duration_s();
  trace.gains.assign(static_cast<std::size_t>(sc.ue_count) * 3 *
                         static_cast<std::size_t>(slots),
                     0.0);

  const double seg_len = distance(sc.ue_start, sc.ue_end);
  const Vec3 dir = {(sc.ue_end.x - sc.ue_start.x) / seg_len,
                    (sc.ue_end.y - sc.ue_start.y) / seg_len,
                    (sc.ue_end.z - sc.ue_start.z) / seg_len};
  const double step = sc.row_spacing_m;
  const double shadow_rho =
      sc.shadowing_corr_m > 0.0 ? std::exp(-step / sc.shadowing_corr_m) : 0.0;

  // Normalized ray power profile, 6 dB decay per extra path, so that the
  // small-scale fading multiplies the path loss by ~1 on average.
  std::vector<double> ray_amp(static_cast<std::size_t>(sc.paths_per_band));
  {
    double total = 0.0;
    for (int p = 0; p < sc.paths_per_band; ++p) total += std::pow(10.0, -0.6 * p);
    for (int p = 0; p < sc.paths_per_band; ++p)
      ray_amp[static_cast<std::size_t>(p)] =
          std::sqrt(std::pow(10.0, -0.6 * p) / total);
  }

  for (int ue = 0; ue < sc.ue_count; ++ue) {
    // Trailing UEs start behind the lead one along the same segment.
    const Vec3 start = {sc.ue_start.x - dir.x * sc.ue_spacing_m * ue,
                        sc.ue_start.y - dir.y * sc.ue_spacing_m * ue,
                        sc.ue_start.z - dir.z * sc.ue_spacing_m * ue};
    for (int bi = 0; bi < 3; ++bi) {
      const BandId band = tx_band_from_index(bi);
      const BandConfig& cfg = bands[static_cast<std::size_t>(band)];
      if (!(cfg.carrier_hz > 0.0))
        throw std::invalid_argument("generate_trace: band config without carrier");
      const double lambda = kSpeedOfLight / cfg.carrier_hz;

      Rng rng(Rng::mix(sc.seed, {0xD1CEu, static_cast<std::uint64_t>(ue),
                                 static_cast<std::uint64_t>(bi)}));

      // Secondary-ray phase drifts: one full turn over ~fading_decorr_m.
      const double decorr = sc.fading_decorr_m[static_cast<std::size_t>(bi)];
      std::vector<double> phase(ray_amp.size(), 0.0);
      std::vector<double> drift(ray_amp.size(), 0.0);
      for (std::size_t p = 1; p < ray_amp.size(); ++p) {
        phase[p] = rng.uniform(0.0, 2.0 * kPi);
        drift[p] = 2.0 * kPi * step / decorr * rng.uniform(0.5, 1.5) *
                   (rng.bernoulli(0.5) ? 1.0 : -1.0);
      }

      double shadow_db = sc.shadowing_std_db > 0.0
                             ? rng.normal(0.0, sc.shadowing_std_db)
                             : 0.0;
      const double blk_rate = sc.blockage_rate_per_m[static_cast<std::size_t>(bi)];
      const double blk_atten = std::pow(10.0, -sc.blockage_atten_db / 10.0);
      int blocked_slots_left = 0;

      for (int t = 0; t < slots; ++t) {
        const Vec3 pos = lerp(start,
                              {start.x + dir.x * seg_len, start.y + dir.y * seg_len,
                               start.z + dir.z * seg_len},
                              static_cast<double>(t) * step / seg_len);
        const double d = std::max(distance(pos, sc.bs_position), 1.0);
        const double fspl = std::pow(lambda / (4.0 * kPi * d), 2.0);

        if (t > 0 && sc.shadowing_std_db > 0.0) {
          shadow_db = shadow_rho * shadow_db +
                      std::sqrt(1.0 - shadow_rho * shadow_rho) *
                          rng.normal(0.0, sc.shadowing_std_db);
        }
        const double shadow = std::pow(10.0, shadow_db / 10.0);

        std::complex<double> h(0.0, 0.0);
        for (std::size_t p = 0; p < ray_amp.size(); ++p) {
          if (t > 0 && p > 0) {
            phase[p] += drift[p] + 0.1 * std::abs(drift[p]) * rng.normal();
          }
          h += ray_amp[p] * std::complex<double>(std::cos(phase[p]),
                                                 std::sin(phase[p]));
        }
        const double fading = std::norm(h);

        if (blk_rate > 0.0) {
          if (blocked_slots_left > 0) {
            --blocked_slots_left;
          } else if (rng.bernoulli(std::min(1.0, blk_rate * step))) {
            // Event length in slots, exponential with the configured mean.
            const double len_m =
                -sc.blockage_mean_len_m * std::log(1.0 - rng.uniform());
            blocked_slots_left =
                std::max(1, static_cast<int>(std::llround(len_m / step)));
          }
        }
        const double blockage = blocked_slots_left > 0 ? blk_atten : 1.0;

        trace.set_gain(ue, band, t, fspl * shadow * fading * blockage);
      }
    }
  }
  trace.validate();
  return trace;
}

void save_trace_csv(const ChannelTrace& trace, const std::string& path) {
  trace.validate();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << "ue,band,slot,gain\n";
  for (int ue = 0; ue < trace.ue_count; ++ue)
    for (int bi = 0; bi < 3; ++bi)
      for (int t = 0; t < trace.slots_per_ue; ++t)
        out << ue << ',' << band_name(tx_band_from_index(bi)) << ',' << t << ','
            << format_double(trace.gain(ue, tx_band_from_index(bi), t)) << '\n';
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

ChannelTrace load_trace_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open trace file '" + path + "'");

  std::string line;
  int lineno = 0;
  if (!std::getline(in, line))
    throw std::runtime_error(path + ": empty trace file");
  ++lineno;
  if (lower(trim(line)) != "ue,band,slot,gain")
    throw std::runtime_error(path + ":1: expected header 'ue,band,slot,gain'");

  struct Row {
    int ue, band, slot;
    double gain;
  };
  std::vector<Row> rows;
  int max_ue = -1, max_slot = -1;
  while (std::getline(in, line)) {
    ++lineno;
    const auto where = path + ":" + std::to_string(lineno);
    if (trim(line).empty()) continue;
    const auto fields = split(trim(line), ',');
    if (fields.size() != 4)
      throw std::runtime_error(where + ": expected 4 columns, got " +
                               std::to_string(fields.size()));
    Row r;
    r.ue = static_cast<int>(parse_int(fields[0], where));
    r.band = tx_band_index(band_from_name(fields[1]));
    r.slot = static_cast<int>(parse_int(fields[2], where));
    r.gain = parse_double(fields[3], where);
    if (r.ue < 0) throw std::runtime_error(where + ": negative ue index");
    if (r.slot < 0) throw std::runtime_error(where + ": negative slot index");
    if (!(r.gain >= 0.0) || !std::isfinite(r.gain))
      throw std::runtime_error(where + ": gain must be finite and >= 0");
    max_ue = std::max(max_ue, r.ue);
    max_slot = std::max(max_slot, r.slot);
    rows.push_back(r);
  }
  if (rows.empty()) throw std::runtime_error(path + ": no data rows");

  ChannelTrace trace;
  trace.ue_count = max_ue + 1;
  trace.slots_per_ue = max_slot + 1;
  // The CSV does not carry the slot duration; the canonical sampling is
  // 0.2 m rows at 10 m/s.
  trace.slot_duration_s = 0.02;
  trace.gains.assign(static_cast<std::size_t>(trace.ue_count) * 3 *
                         static_cast<std::size_t>(trace.slots_per_ue),
                     -1.0);
  for (const Row& r : rows) {
    trace.gains[(static_cast<std::size_t>(r.ue) * 3 +
                 static_cast<std::size_t>(r.band)) *
                    static_cast<std::size_t>(trace.slots_per_ue) +
                static_cast<std::size_t>(r.slot)] = r.gain;
  }
  for (std::size_t i = 0; i < trace.gains.size(); ++i) {
    if (trace.gains[i] < 0.0)
      throw std::runtime_error(path + ": missing (ue,band,slot) entries");
  }
  trace.validate();
  return trace;
}

SeriesQuantity series_quantity_from_name(std::string_view name) {
  const std::string n = lower(trim(name));
  if (n == "rate") return SeriesQuantity::Rate;
  if (n == "channel") return SeriesQuantity::Channel;
  throw std::invalid_argument("unknown series quantity '" + std::string(name) +
                              "' (expected rate|channel)");
}

const char* series_quantity_name(SeriesQuantity q) {
  return q == SeriesQuantity::Rate ? "rate" : "channel";
}

std::vector<double> concatenate_ue_series(const ChannelTrace& trace, BandId band,
                                          SeriesQuantity quantity,
                                          const BandConfig& cfg,
                                          bool require_three_ues) {
  trace.validate();
  tx_band_index(band);  // rejects NoTx
  if (require_three_ues && trace.ue_count != 3)
    throw std::invalid_argument(
        "concatenate_ue_series: canonical construction needs exactly 3 UEs, got " +
        std::to_string(trace.ue_count));

  std::vector<double> series;
  series.reserve(static_cast<std::size_t>(trace.ue_count) *
                 static_cast<std::size_t>(trace.slots_per_ue));
  for (int ue = trace.ue_count - 1; ue >= 0; --ue) {
    for (int t = 0; t < trace.slots_per_ue; ++t) {
      const double g = trace.gain(ue, band, t);
      series.push_back(quantity == SeriesQuantity::Channel
                           ? g
                           : spectral_efficiency(cfg, g));
    }
  }
  return series;
}

}  // namespace bandsim
