#pragma once

#include <string>

#include "oramsey/colored_graph.hpp"

namespace oramsey {

/// Opaque byte sequence identifying a colored graph up to color-preserving
/// isomorphism: equal keys <=> isomorphic boards (colors fixed, vertices
/// relabeled freely). Isolated vertices beyond the first are dropped before
/// keying, since fresh board vertices are indistinguishable.
using CanonicalKey = std::string;

inline constexpr int kDefaultCanonicalCap = 16;

/// Minimum adjacency-matrix encoding over all vertex labelings, searched via
/// color-degree partition refinement with individualization. Exact (no hash
/// collisions): the key encodes the full colored adjacency matrix.
/// Throws TooLargeError when the keyed vertex count exceeds `cap`.
CanonicalKey canonical_key(const ColoredGraph& g, int cap = kDefaultCanonicalCap);

}  // namespace oramsey
