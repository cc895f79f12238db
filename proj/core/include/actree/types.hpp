#ifndef ACTREE_TYPES_HPP_
#define ACTREE_TYPES_HPP_

#include <cstdint>
#include <limits>

namespace actree {

using NodeId = std::uint32_t;
using Weight = double;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::infinity();
inline constexpr Weight kDefaultWeight = 1.0;

}  // namespace actree

#endif  // ACTREE_TYPES_HPP_
