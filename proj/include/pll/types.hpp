#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace pll {

using VertexId = std::uint32_t;
using Rank = std::uint32_t;
using Weight = std::uint32_t;

// Query results are widened so that sums of two stored distances never wrap.
using Distance = std::uint64_t;
inline constexpr Distance kInfinity = std::numeric_limits<Distance>::max();

// Stored label distances. Hop counts use 8 bits with 255 reserved as infinity;
// weighted distances use 32 bits with the maximum value reserved.
template <typename D>
inline constexpr D kInfOf = std::numeric_limits<D>::max();

using HopDistance = std::uint8_t;
using WeightedDistance = std::uint32_t;

inline constexpr HopDistance kInf8 = kInfOf<HopDistance>;

enum class Direction : std::uint8_t { kForward, kReverse };

// A finite distance does not fit in the label distance type.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pll
