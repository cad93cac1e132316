#pragma once

#include "ditc/core/patchwork.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ditc {

/// What the numeric testers need from a d-space model.
template <class S>
concept SampledDSpace = requires(const S& s, const typename S::Point& p, const typename S::Path& path,
                                 std::mt19937_64& rng, double v) {
  { s.in_gamma(p, p) } -> std::convertible_to<bool>;
  { s.sample(rng) } -> std::convertible_to<typename S::Point>;
  { s.perturb(p, v, rng) } -> std::convertible_to<typename S::Point>;
  { s.lerp(p, p, v) } -> std::convertible_to<typename S::Point>;
  { s.same_point(p, p) } -> std::convertible_to<bool>;
  { s.distance(p, p) } -> std::convertible_to<double>;
  { s.start(path) } -> std::convertible_to<typename S::Point>;
  { s.end(path) } -> std::convertible_to<typename S::Point>;
  { s.evaluate(path, v) } -> std::convertible_to<typename S::Point>;
  { s.check_path(path) } -> std::convertible_to<std::optional<std::string>>;
  { s.encode(p) } -> std::convertible_to<std::string>;
};

struct Violation {
  std::string kind;
  std::string x;
  std::string y;
  std::string detail;
};

inline nlohmann::json to_json(const Violation& v) {
  return {{"kind", v.kind}, {"x", v.x}, {"y", v.y}, {"detail", v.detail}};
}

struct SectionReport {
  int samples = 0;
  int partition_violations = 0;
  int endpoint_violations = 0;
  int path_violations = 0;
  std::vector<Violation> offending;  // first few, for diagnostics

  int total_violations() const { return partition_violations + endpoint_violations + path_violations; }
  bool ok() const { return samples > 0 && total_violations() == 0; }

  nlohmann::json to_json() const {
    nlohmann::json bad = nlohmann::json::array();
    for (const auto& v : offending) bad.push_back(ditc::to_json(v));
    return {{"samples", samples},
            {"partition_violations", partition_violations},
            {"endpoint_violations", endpoint_violations},
            {"path_violations", path_violations},
            {"violations", total_violations()},
            {"offending", bad}};
  }
};

struct ContinuityReport {
  std::string patch;
  int tested = 0;
  int skipped = 0;
  int violations = 0;
  double lipschitz_bound = 0.0;
  double max_ratio = 0.0;
  std::vector<Violation> offending;

  bool ok() const { return violations == 0; }

  nlohmann::json to_json() const {
    nlohmann::json bad = nlohmann::json::array();
    for (const auto& v : offending) bad.push_back(ditc::to_json(v));
    return {{"patch", patch},         {"tested", tested},          {"skipped", skipped},
            {"violations", violations}, {"lipschitz_bound", lipschitz_bound}, {"max_ratio", max_ratio},
            {"offending", bad}};
  }
};

inline constexpr std::size_t kMaxOffending = 16;
inline constexpr int kSupSamples = 64;

/// Max over evenly spaced fractions of the pointwise distance between two paths.
template <SampledDSpace S>
double sup_distance(const S& space, const typename S::Path& p, const typename S::Path& q, int samples = kSupSamples) {
  double worst = 0.0;
  const int n = std::max(samples, 2);
  for (int k = 0; k < n; ++k) {
    const double s = static_cast<double>(k) / (n - 1);
    worst = std::max(worst, space.distance(space.evaluate(p, s), space.evaluate(q, s)));
  }
  return worst;
}

/// Rejection-sample a pair of Γ; nullopt when the attempt budget runs out.
template <SampledDSpace S>
std::optional<std::pair<typename S::Point, typename S::Point>> sample_gamma_pair(const S& space, std::mt19937_64& rng,
                                                                                 int attempts = 100000) {
  for (int i = 0; i < attempts; ++i) {
    auto x = space.sample(rng);
    auto y = space.sample(rng);
    if (space.in_gamma(x, y)) return std::make_pair(std::move(x), std::move(y));
  }
  return std::nullopt;
}

/// Draws `samples` pairs of Γ and checks the partition property, exact
/// endpoints of the section, and the path invariants.
template <SampledDSpace S>
SectionReport check_section(const Patchwork<typename S::Point, typename S::Path>& planner, const S& space, int samples,
                            std::uint64_t seed) {
  SectionReport report;
  std::mt19937_64 rng(seed);
  auto note = [&](std::string kind, const auto& x, const auto& y, std::string detail) {
    if (report.offending.size() < kMaxOffending)
      report.offending.push_back({std::move(kind), space.encode(x), space.encode(y), std::move(detail)});
  };
  for (int i = 0; i < samples; ++i) {
    auto pair = sample_gamma_pair(space, rng);
    if (!pair) break;
    const auto& [x, y] = *pair;
    ++report.samples;
    const auto owners = planner.claimants(x, y);
    if (owners.size() != 1) {
      ++report.partition_violations;
      note("partition", x, y, std::to_string(owners.size()) + " patches claim the pair");
      if (owners.empty()) continue;
    }
    const auto path = planner.patches[owners.front()].section(x, y);
    if (auto broken = space.check_path(path)) {
      ++report.path_violations;
      note("path", x, y, *broken);
      continue;
    }
    if (!space.same_point(space.start(path), x) || !space.same_point(space.end(path), y)) {
      ++report.endpoint_violations;
      note("endpoint", x, y, "section runs from " + space.encode(space.start(path)) + " to " + space.encode(space.end(path)));
    }
  }
  return report;
}

/// Sampled Lipschitz certificate for one patch: pairs are perturbed by at most
/// `epsilon` along a segment that stays inside the patch, and the sup distance
/// between the two sections must not exceed L times the endpoint displacement.
template <SampledDSpace S>
ContinuityReport check_patch_continuity(const Patchwork<typename S::Point, typename S::Path>& planner, const S& space,
                                        const std::string& patch_id, int pair_samples, double epsilon,
                                        std::uint64_t seed) {
  const auto& patch = planner.patches[planner.index_of(patch_id)];
  ContinuityReport report;
  report.patch = patch_id;
  report.lipschitz_bound = patch.lipschitz_bound;
  std::mt19937_64 rng(seed);
  constexpr int kSegmentChecks = 8;
  constexpr int kAttempts = 200000;

  int attempts = 0;
  while (report.tested < pair_samples && attempts < kAttempts) {
    ++attempts;
    auto pair = sample_gamma_pair(space, rng, 1000);
    if (!pair) break;
    const auto& [x, y] = *pair;
    if (!patch.contains(x, y)) continue;
    const auto x2 = space.perturb(x, epsilon, rng);
    const auto y2 = space.perturb(y, epsilon, rng);
    bool inside = true;
    // a crossing of the diagonal happens at a single parameter, invisible to
    // the spot checks below, so spaces that can detect it exactly do so
    if constexpr (requires { space.meets_diagonal(x, y, x2, y2); }) inside = !space.meets_diagonal(x, y, x2, y2);
    for (int k = 1; k <= kSegmentChecks && inside; ++k) {
      const double lam = static_cast<double>(k) / kSegmentChecks;
      const auto xs = space.lerp(x, x2, lam);
      const auto ys = space.lerp(y, y2, lam);
      inside = space.in_gamma(xs, ys) && patch.contains(xs, ys);
    }
    if (!inside) {
      ++report.skipped;
      continue;
    }
    const double moved = space.distance(x, x2) + space.distance(y, y2);
    if (moved <= 1e-12) {
      ++report.skipped;
      continue;
    }
    ++report.tested;
    const double gap = sup_distance(space, patch.section(x, y), patch.section(x2, y2));
    report.max_ratio = std::max(report.max_ratio, gap / moved);
    if (gap > patch.lipschitz_bound * moved + 1e-6) {
      ++report.violations;
      if (report.offending.size() < kMaxOffending)
        report.offending.push_back({"lipschitz", space.encode(x), space.encode(y),
                                    "perturbed to " + space.encode(x2) + ", " + space.encode(y2) +
                                        " moved sections by " + std::to_string(gap)});
    }
  }
  return report;
}

}  // namespace ditc
