#include "ditc/product/product.hpp"

#include "ditc/core/error.hpp"
#include "ditc/graph/builtins.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <sstream>

namespace ditc {

namespace {

void require_dimension(std::size_t expected, std::size_t got) {
  if (expected != got)
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(expected) + " coordinates, got " + std::to_string(got));
}

}  // namespace

ProductGamma::ProductGamma(const std::vector<ProductFactor>& factors) {
  if (factors.empty()) throw Error(ErrorCode::InvalidInput, "product needs at least one factor");
  for (const auto& f : factors) oracles_.emplace_back(f.graph);
}

bool ProductGamma::contains(const ProductPoint& x, const ProductPoint& y) const {
  require_dimension(oracles_.size(), x.size());
  require_dimension(oracles_.size(), y.size());
  for (std::size_t i = 0; i < oracles_.size(); ++i)
    if (!oracles_[i].contains(x[i], y[i])) return false;
  return true;
}

ProductGamma product_gamma(const std::vector<ProductFactor>& factors) { return ProductGamma(factors); }

ProductPatchwork product_planner(const std::vector<ProductFactor>& factors) {
  if (factors.empty()) throw Error(ErrorCode::InvalidInput, "product needs at least one factor");
  std::size_t top = 0;
  double bound = 0.0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& pw = factors[i].planner;
    if (!pw.ordered_regular) throw Error(ErrorCode::NotRegular, "factor " + std::to_string(i) + " is not flagged regular");
    if (pw.size() == 0) throw Error(ErrorCode::InvalidInput, "factor " + std::to_string(i) + " has no patches");
    top += pw.size() - 1;
    for (const auto& p : pw.patches) bound = std::max(bound, p.lipschitz_bound);
  }
  auto shared = std::make_shared<const std::vector<ProductFactor>>(factors);
  auto gamma = std::make_shared<const ProductGamma>(factors);

  // index tuple of the factor patches, or nullopt outside Γ
  auto indices = [shared, gamma](const ProductPoint& x, const ProductPoint& y) -> std::optional<std::vector<std::size_t>> {
    if (!gamma->contains(x, y)) return std::nullopt;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < shared->size(); ++i) {
      const auto owners = (*shared)[i].planner.claimants(x[i], y[i]);
      if (owners.empty()) return std::nullopt;
      out.push_back(owners.front());
    }
    return out;
  };

  ProductPatchwork pw;
  pw.ordered_regular = true;
  for (std::size_t j = 0; j <= top; ++j) {
    ProductPatchwork::PatchType patch;
    patch.id = "G" + std::to_string(j);
    patch.lipschitz_bound = bound;
    patch.contains = [indices, j](const ProductPoint& x, const ProductPoint& y) {
      const auto idx = indices(x, y);
      return idx && std::accumulate(idx->begin(), idx->end(), std::size_t{0}) == j;
    };
    patch.section = [indices, shared, j](const ProductPoint& x, const ProductPoint& y) {
      const auto idx = indices(x, y);
      if (!idx || std::accumulate(idx->begin(), idx->end(), std::size_t{0}) != j)
        throw Error(ErrorCode::Unreachable, "pair is not in this patch");
      ProductPath out;
      for (std::size_t i = 0; i < shared->size(); ++i)
        out.push_back((*shared)[i].planner.patches[(*idx)[i]].section(x[i], y[i]));
      return out;
    };
    pw.patches.push_back(std::move(patch));
  }
  return pw;
}

ProductSpace::ProductSpace(const std::vector<ProductFactor>& factors) {
  if (factors.empty()) throw Error(ErrorCode::InvalidInput, "product needs at least one factor");
  for (const auto& f : factors) spaces_.emplace_back(f.graph);
}

bool ProductSpace::in_gamma(const Point& x, const Point& y) const {
  for (std::size_t i = 0; i < spaces_.size(); ++i)
    if (!spaces_[i].in_gamma(x[i], y[i])) return false;
  return true;
}

ProductPoint ProductSpace::sample(std::mt19937_64& rng) const {
  Point p;
  for (const auto& s : spaces_) p.push_back(s.sample(rng));
  return p;
}

ProductPoint ProductSpace::perturb(const Point& p, double eps, std::mt19937_64& rng) const {
  Point out;
  for (std::size_t i = 0; i < spaces_.size(); ++i) out.push_back(spaces_[i].perturb(p[i], eps, rng));
  return out;
}

ProductPoint ProductSpace::lerp(const Point& a, const Point& b, double lam) const {
  Point out;
  for (std::size_t i = 0; i < spaces_.size(); ++i) out.push_back(spaces_[i].lerp(a[i], b[i], lam));
  return out;
}

bool ProductSpace::same_point(const Point& a, const Point& b) const {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!spaces_[i].same_point(a[i], b[i])) return false;
  return true;
}

bool ProductSpace::meets_diagonal(const Point& x, const Point& y, const Point& x2, const Point& y2) const {
  for (std::size_t i = 0; i < spaces_.size(); ++i)
    if (spaces_[i].meets_diagonal(x[i], y[i], x2[i], y2[i])) return true;
  return false;
}

double ProductSpace::distance(const Point& a, const Point& b) const {
  double d = 0.0;
  for (std::size_t i = 0; i < spaces_.size(); ++i) d += spaces_[i].distance(a[i], b[i]);
  return d;
}

ProductPoint ProductSpace::start(const Path& p) const {
  Point out;
  for (std::size_t i = 0; i < spaces_.size(); ++i) out.push_back(spaces_[i].start(p[i]));
  return out;
}

ProductPoint ProductSpace::end(const Path& p) const {
  Point out;
  for (std::size_t i = 0; i < spaces_.size(); ++i) out.push_back(spaces_[i].end(p[i]));
  return out;
}

ProductPoint ProductSpace::evaluate(const Path& p, double s) const {
  Point out;
  for (std::size_t i = 0; i < spaces_.size(); ++i) out.push_back(spaces_[i].evaluate(p[i], s));
  return out;
}

std::optional<std::string> ProductSpace::check_path(const Path& p) const {
  if (p.size() != spaces_.size()) return "path has " + std::to_string(p.size()) + " coordinates";
  for (std::size_t i = 0; i < spaces_.size(); ++i)
    if (auto broken = spaces_[i].check_path(p[i])) return "coordinate " + std::to_string(i) + ": " + *broken;
  return std::nullopt;
}

std::string ProductSpace::encode(const Point& p) const {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += spaces_[i].encode(p[i]);
  }
  return out + ")";
}

TorusPlanner torus_planner(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "torus dimension must be at least 1");
  TorusPlanner out;
  for (int i = 0; i < n; ++i) {
    BuiltinGraph loop = directed_loop();
    out.factors.push_back({std::move(loop.graph), std::move(loop.planner)});
  }
  out.planner = product_planner(out.factors);
  // upper from the product bound, lower from TC((S^1)^n) = n+1 <= diTC
  out.report.lower = n + 1;
  out.report.upper = n + 1;
  out.report.exact = true;
  out.report.reason = DiTCReason::KnownBuiltin;
  return out;
}

ProductPoint parse_torus_point(int n, const std::string& text) {
  ProductPoint out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double turns = 0.0;
    try {
      turns = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !std::isfinite(turns))
      throw Error(ErrorCode::InvalidInput, "bad angle '" + item + "'");
    double theta = turns - std::floor(turns);
    if (theta >= 1.0 - kParamTol) theta = 0.0;
    out.push_back(theta <= kParamTol ? GraphPoint::vertex(0) : GraphPoint::interior(0, theta));
  }
  require_dimension(static_cast<std::size_t>(n), out.size());
  return out;
}

std::string format_torus_point(const ProductPoint& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += p[i].is_vertex() ? "0" : format_double(p[i].t);
  }
  return out;
}

}  // namespace ditc
