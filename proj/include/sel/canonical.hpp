#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "sel/graph.hpp"

namespace sel {

// Isomorphism-class keys are supported up to this order; the permutation
// search is exact, not a nauty-style refinement.
inline constexpr int kCanonicalCap = 10;

// Lexicographically minimal upper-triangle adjacency bit-string over all
// vertex relabelings. Bit (q,p), q < p, lives at index p(p-1)/2 + q, the
// column order graph6 uses.
struct CanonicalKey {
  int n = 0;
  std::uint64_t bits = 0;
  auto operator<=>(const CanonicalKey&) const = default;
};

CanonicalKey canonical_form(const Graph& g);

// Decode a key back into its representative labeled graph.
Graph graph_from_key(const CanonicalKey& key);

// "NN:hex" with the bit-string zero-padded to a fixed width for the order.
std::string key_to_hex(const CanonicalKey& key);

// True iff g's own adjacency bit-string is the maximum over relabelings.
// Deleting the highest-index edge of such a graph leaves another one, which
// is what makes edge-by-edge orderly generation visit every class once.
bool is_max_canonical(const Graph& g);

}  // namespace sel
