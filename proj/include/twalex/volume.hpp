#pragma once

// Ratios A_n(1) = Delta_n(1) / Delta_{2 or 3}(1) and the volume estimates
// v_n = 4 pi log|A_n(1)| / n^2.

#include <cmath>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twalex/bigfloat.hpp"
#include "twalex/error.hpp"
#include "twalex/invariant.hpp"

namespace twalex {

struct VolumeRow {
  int n = 0;
  NFElement ratio;
  BigFloat ratio_abs;
  BigFloat estimate;
  std::optional<BigFloat> gap;  // |estimate - reference|
};

struct VolumeReport {
  std::vector<VolumeRow> rows;  // sorted by n, n >= 4
  std::optional<BigFloat> reference;
  mpfr_prec_t precision = kDefaultPrecision;
};

/// Invariants and their values at one for a range of n.
struct InvariantSweep {
  std::map<int, TwistedAlexander> invariants;
  std::map<int, NFElement> at_one;
};

/// Smallest n for which A_n is defined.
inline constexpr int kFirstVolumeRow = 4;

/// Computes the invariants for n in [n_min, n_max]; when `with_bases` is set,
/// n = 2 and 3 are added as needed so that every A_n in range can be formed.
/// Each n is independent; `parallel` runs them concurrently.
inline InvariantSweep invariant_sweep(const TwistConfig& base, int n_min, int n_max, bool with_bases,
                                      bool parallel = false) {
  if (n_min < 1) throw Error("invariant", "n must be >= 1");
  if (n_max < n_min) throw Error("invariant", "empty n range");
  std::vector<int> ns;
  for (int n = n_min; n <= n_max; ++n) ns.push_back(n);
  if (with_bases && n_max >= kFirstVolumeRow) {
    if (n_min > 2) ns.push_back(2);
    if (n_min > 3 && n_max >= 5) ns.push_back(3);
  }
  auto run = [&base](int n) {
    TwistConfig cfg = base;
    cfg.n = n;
    return twisted_alexander(cfg);
  };
  InvariantSweep out;
  if (parallel) {
    std::vector<std::future<TwistedAlexander>> futures;
    for (int n : ns) futures.push_back(std::async(std::launch::async, run, n));
    for (std::size_t i = 0; i < ns.size(); ++i) out.invariants.emplace(ns[i], futures[i].get());
  } else {
    for (int n : ns) out.invariants.emplace(n, run(n));
  }
  for (const auto& [n, delta] : out.invariants) {
    // n = 1 has a pole at t = 1 for knots; only the volume bases need finite values there.
    if (n == 1) continue;
    out.at_one.emplace(n, value_at_one(delta));
  }
  return out;
}

/// A_n(1): ratio against Delta_2(1) for even n, against the n = 3 cofactor for odd n.
inline NFElement a_ratio(int n, const std::map<int, NFElement>& at_one) {
  if (n < kFirstVolumeRow) throw Error("volume", "A_n is defined for n >= 4 only");
  const int base = n % 2 == 0 ? 2 : 3;
  auto num = at_one.find(n);
  auto den = at_one.find(base);
  if (num == at_one.end() || den == at_one.end())
    throw Error("volume", "missing value at one for n = " + std::to_string(num == at_one.end() ? n : base));
  if (is_zero(den->second))
    throw Error("volume", "base value at one vanishes for n = " + std::to_string(base));
  return num->second / den->second;
}

inline VolumeRow volume_estimate(int n, const NFElement& ratio, mpfr_prec_t prec) {
  if (is_zero(ratio)) throw Error("volume", "A_n(1) is zero for n = " + std::to_string(n));
  const mpfr_prec_t work = prec + 16;
  BigFloat modulus = abs(ratio.embed(work));
  if (modulus.is_zero()) throw Error("internal", "nonzero ratio embeds to zero at the working precision");
  BigFloat v = BigFloat(4L, work) * BigFloat::pi(work) * log(modulus) / BigFloat(static_cast<long>(n) * n, work);
  auto round = [prec](const BigFloat& x) {
    BigFloat r(prec);
    mpfr_set(r.get(), x.get(), MPFR_RNDN);
    return r;
  };
  return VolumeRow{n, ratio, round(modulus), round(v), std::nullopt};
}

/// Rows for every n in [max(n_min, 4), n_max] from precomputed values at one.
inline VolumeReport volume_report(const std::map<int, NFElement>& at_one, int n_min, int n_max, mpfr_prec_t prec,
                                  const std::optional<std::string>& reference = {}) {
  VolumeReport report;
  report.precision = prec;
  if (reference) {
    try {
      report.reference = BigFloat(*reference, prec);
    } catch (const std::invalid_argument& e) {
      throw Error("parse", e.what());
    }
  }
  for (int n = std::max(n_min, kFirstVolumeRow); n <= n_max; ++n) {
    VolumeRow row = volume_estimate(n, a_ratio(n, at_one), prec);
    if (report.reference) row.gap = abs(row.estimate - *report.reference);
    report.rows.push_back(std::move(row));
  }
  return report;
}

inline VolumeReport volume_table(const TwistConfig& cfg, int n_min, int n_max, mpfr_prec_t prec = kDefaultPrecision,
                                 const std::optional<std::string>& reference = {}, bool parallel = false) {
  if (n_max < n_min) throw Error("volume", "n_max must be >= n_min");
  if (n_max < kFirstVolumeRow) return VolumeReport{{}, std::nullopt, prec};
  const int lo = std::max(n_min, kFirstVolumeRow);
  const InvariantSweep sweep = invariant_sweep(cfg, lo, n_max, true, parallel);
  return volume_report(sweep.at_one, lo, n_max, prec, reference);
}

/// EXPERIMENTAL: least-squares fit of v_n ~ V - c log(n)/n over the rows.
/// Nothing guarantees this model; it is a heuristic for eyeballing the trend.
struct ExperimentalFit {
  double limit = 0;
  double slope = 0;
};

inline std::optional<ExperimentalFit> experimental_fit(const VolumeReport& report) {
  if (report.rows.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(report.rows.size());
  for (const auto& row : report.rows) {
    const double x = std::log(static_cast<double>(row.n)) / row.n;
    const double y = row.estimate.to_double();
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double det = m * sxx - sx * sx;
  if (det == 0) return std::nullopt;
  const double b = (m * sxy - sx * sy) / det;  // coefficient of log(n)/n
  return ExperimentalFit{(sy - b * sx) / m, -b};
}

}  // namespace twalex
