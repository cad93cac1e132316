#pragma once

#include "ditc/core/error.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace ditc {

/// One piece of a partition of the reachability relation together with the
/// motion-planning section used on it.
template <class Point, class Path>
struct Patch {
  std::string id;
  std::function<bool(const Point&, const Point&)> contains;
  std::function<Path(const Point&, const Point&)> section;
  double lipschitz_bound = 1.0;
};

/// Ordered list of patches. The order records the regularity ordering (every
/// prefix union closed); `ordered_regular` is set only by constructions whose
/// regularity is known analytically, it is never inferred.
template <class Point, class Path>
struct Patchwork {
  using PatchType = Patch<Point, Path>;

  std::vector<PatchType> patches;
  bool ordered_regular = false;

  std::size_t size() const { return patches.size(); }

  std::size_t index_of(const std::string& id) const {
    for (std::size_t i = 0; i < patches.size(); ++i)
      if (patches[i].id == id) return i;
    throw Error(ErrorCode::PatchNotFound, "no patch named '" + id + "'");
  }

  std::vector<std::size_t> claimants(const Point& x, const Point& y) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < patches.size(); ++i)
      if (patches[i].contains(x, y)) out.push_back(i);
    return out;
  }

  /// Section value at (x,y) and the index of the patch that produced it.
  std::pair<std::size_t, Path> plan(const Point& x, const Point& y) const {
    for (std::size_t i = 0; i < patches.size(); ++i)
      if (patches[i].contains(x, y)) return {i, patches[i].section(x, y)};
    throw Error(ErrorCode::Unreachable, "no patch contains the requested pair");
  }

  std::vector<std::string> ids() const {
    std::vector<std::string> out;
    for (const auto& p : patches) out.push_back(p.id);
    return out;
  }
};

}  // namespace ditc
