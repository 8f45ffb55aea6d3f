#include "grid.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "cohq/errors.hpp"

namespace cohq::cli {

namespace {

constexpr double kTieTol = 1e-12;

std::size_t parse_index(std::string_view text) {
  std::size_t i = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), i);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || i > 4) {
    throw PreconditionError("lambda index must be 0..4, got '" + std::string(text) + "'");
  }
  return i;
}

}  // namespace

std::pair<std::size_t, double> parse_fix(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw PreconditionError("expected i=value, got '" + std::string(text) + "'");
  const auto value_text = text.substr(eq + 1);
  double v = 0.0;
  const auto res = std::from_chars(value_text.data(), value_text.data() + value_text.size(), v);
  if (res.ec != std::errc() || res.ptr != value_text.data() + value_text.size() || !(v >= 0.0 && v <= 1.0)) {
    throw PreconditionError("pinned amplitude must be in [0, 1], got '" + std::string(value_text) + "'");
  }
  return {parse_index(text.substr(0, eq)), v};
}

std::pair<std::size_t, std::size_t> parse_equal(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw PreconditionError("expected i,j, got '" + std::string(text) + "'");
  return {parse_index(text.substr(0, comma)), parse_index(text.substr(comma + 1))};
}

std::vector<CanonicalThreeQubit> simplex_grid(std::size_t resolution, const GridConstraints& c) {
  if (resolution < 2) throw PreconditionError("grid resolution must be at least 2");

  double pinned = 0.0;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < 5; ++i) {
    if (c.fixed[i]) {
      pinned += *c.fixed[i] * *c.fixed[i];
    } else {
      free.push_back(i);
    }
  }
  const double mass = 1.0 - pinned;
  if (mass < -kTieTol) return {};

  std::vector<CanonicalThreeQubit> points;
  auto admit = [&](const std::array<std::size_t, 5>& k) {
    CanonicalThreeQubit p;
    for (std::size_t i = 0; i < 5; ++i) {
      p.lambda[i] = c.fixed[i] ? *c.fixed[i]
                               : std::sqrt(static_cast<double>(k[i]) / static_cast<double>(resolution) *
                                           std::max(mass, 0.0));
    }
    for (const auto& [i, j] : c.equal) {
      const bool both_free = !c.fixed[i] && !c.fixed[j];
      if (both_free ? k[i] != k[j] : std::abs(p.lambda[i] - p.lambda[j]) > kTieTol) return;
    }
    if (p.norm_deviation() > canonical_norm_tol) return;
    points.push_back(p);
  };

  std::array<std::size_t, 5> k{};
  if (free.empty() || mass <= kTieTol) {
    // Nothing left to distribute: the free amplitudes are all zero.
    admit(k);
    return points;
  }

  // Compositions of resolution into free.size() parts, lexicographic.
  auto recurse = [&](auto&& self, std::size_t slot, std::size_t left) -> void {
    if (slot + 1 == free.size()) {
      k[free[slot]] = left;
      admit(k);
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      k[free[slot]] = v;
      self(self, slot + 1, left - v);
    }
  };
  recurse(recurse, 0, resolution);
  return points;
}

}  // namespace cohq::cli
