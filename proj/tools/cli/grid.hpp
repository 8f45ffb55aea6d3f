#pragma once

// Deterministic grid over the squared-amplitude simplex of the theta = 0
// canonical family, with optional pinned and tied amplitudes.

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "cohq/states.hpp"

namespace cohq::cli {

struct GridConstraints {
  std::array<std::optional<double>, 5> fixed{};  // pinned amplitude lambda_i
  std::vector<std::pair<std::size_t, std::size_t>> equal;
};

/// Parses "i=v" (pin) and "i,j" (tie); throws PreconditionError on bad input.
std::pair<std::size_t, double> parse_fix(std::string_view text);
std::pair<std::size_t, std::size_t> parse_equal(std::string_view text);

/// Free squared amplitudes take the values (k / resolution) * m, where m is
/// the mass left by the pinned ones and the k sum to resolution. Points are
/// emitted in lexicographic order of the k vector. An empty result means the
/// constraints admit no grid point.
std::vector<CanonicalThreeQubit> simplex_grid(std::size_t resolution, const GridConstraints& c);

}  // namespace cohq::cli
