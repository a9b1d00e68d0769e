#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "thln/errors.hpp"

namespace thln {

// Vertices are plain integers; the owning graph knows the bit width n.
using VertexId = std::uint32_t;

inline int bit_of(VertexId v, int k) { return (v >> k) & 1u; }

// Delete bit k; bits above k shift down by one.
inline VertexId remove_bit(VertexId v, int k) {
  VertexId low = v & ((VertexId{1} << k) - 1);
  return ((v >> (k + 1)) << k) | low;
}

// Insert bit value b at position k; bits at and above k shift up by one.
inline VertexId insert_bit(VertexId v, int k, int b) {
  VertexId low = v & ((VertexId{1} << k) - 1);
  return ((v >> k) << (k + 1)) | (VertexId(b) << k) | low;
}

// XOR of bits [0, k).
inline int parity_of_low_bits(VertexId v, int k) {
  return __builtin_popcount(v & ((VertexId{1} << k) - 1)) & 1;
}

std::string format_label(VertexId v, int n);

// Accepts exactly n binary digits, most significant first.
VertexId parse_label(std::string_view s, int n);

}  // namespace thln
