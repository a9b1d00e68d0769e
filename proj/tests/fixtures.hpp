#pragma once

// Labeled edge sets of the small reference topologies, transcribed from the
// published drawings, plus the canonical weak-pair configuration on the 4-D
// graph. Tests compare generator output against these lists verbatim.

#include <string>
#include <utility>
#include <vector>

#include "thln/graphs.hpp"

namespace fixtures {

using LabelEdge = std::pair<const char*, const char*>;

inline const std::vector<LabelEdge>& cq3() {
  static const std::vector<LabelEdge> e = {
      {"010", "011"}, {"011", "101"}, {"001", "011"}, {"000", "010"},
      {"010", "110"}, {"110", "111"}, {"100", "110"}, {"101", "111"},
      {"001", "111"}, {"000", "001"}, {"000", "100"}, {"100", "101"}};
  return e;
}

inline const std::vector<LabelEdge>& cq4() {
  static const std::vector<LabelEdge> e = {
      // left subcube
      {"0011", "0010"}, {"0101", "0011"}, {"0001", "0011"}, {"0000", "0010"},
      {"0110", "0010"}, {"0110", "0111"}, {"0110", "0100"}, {"0101", "0111"},
      {"0001", "0111"}, {"0001", "0000"}, {"0100", "0000"}, {"0100", "0101"},
      // right subcube
      {"1110", "1010"}, {"1111", "1110"}, {"1100", "1110"}, {"1000", "1010"},
      {"1011", "1010"}, {"1011", "1101"}, {"1011", "1001"}, {"1111", "1101"},
      {"1100", "1101"}, {"1100", "1000"}, {"1001", "1000"}, {"1001", "1111"},
      // matching
      {"0010", "1010"}, {"0110", "1110"}, {"0111", "1101"}, {"0001", "1011"},
      {"0000", "1000"}, {"0100", "1100"}, {"0101", "1111"}, {"0011", "1001"}};
  return e;
}

inline const std::vector<LabelEdge>& ltq3() {
  static const std::vector<LabelEdge> e = {
      {"001", "000"}, {"111", "001"}, {"011", "001"}, {"010", "000"},
      {"100", "000"}, {"100", "101"}, {"100", "110"}, {"111", "101"},
      {"011", "101"}, {"011", "010"}, {"110", "010"}, {"110", "111"}};
  return e;
}

inline const std::vector<LabelEdge>& ltq4() {
  static const std::vector<LabelEdge> e = {
      {"0001", "0000"}, {"0111", "0001"}, {"0011", "0001"}, {"0010", "0000"},
      {"0100", "0000"}, {"0100", "0101"}, {"0100", "0110"}, {"0111", "0101"},
      {"0011", "0101"}, {"0011", "0010"}, {"0110", "0010"}, {"0110", "0111"},
      {"1100", "1000"}, {"1101", "1100"}, {"1110", "1100"}, {"1010", "1000"},
      {"1001", "1000"}, {"1001", "1111"}, {"1001", "1011"}, {"1101", "1111"},
      {"1110", "1111"}, {"1110", "1010"}, {"1011", "1010"}, {"1011", "1101"},
      {"0000", "1000"}, {"0100", "1100"}, {"0101", "1001"}, {"0011", "1111"},
      {"0010", "1010"}, {"0110", "1110"}, {"0111", "1011"}, {"0001", "1101"}};
  return e;
}

inline const std::vector<LabelEdge>& mq0_3() {
  static const std::vector<LabelEdge> e = {
      {"000", "010"}, {"100", "000"}, {"001", "000"}, {"011", "010"},
      {"110", "010"}, {"110", "101"}, {"110", "111"}, {"100", "101"},
      {"001", "101"}, {"001", "011"}, {"111", "011"}, {"111", "100"}};
  return e;
}

// The 3-D 1-kind Mobius cube as drawn inside the right subcube of the 4-D
// figures (the standalone 3-D drawing in the source repeats the 0-kind one).
inline const std::vector<LabelEdge>& mq1_3() {
  static const std::vector<LabelEdge> e = {
      {"101", "010"}, {"110", "101"}, {"100", "101"}, {"011", "010"},
      {"000", "010"}, {"000", "111"}, {"000", "001"}, {"110", "111"},
      {"100", "111"}, {"100", "011"}, {"001", "011"}, {"001", "110"}};
  return e;
}

inline const std::vector<LabelEdge>& mq0_4() {
  static const std::vector<LabelEdge> e = {
      {"0000", "0010"}, {"0100", "0000"}, {"0001", "0000"}, {"0011", "0010"},
      {"0110", "0010"}, {"0110", "0101"}, {"0110", "0111"}, {"0100", "0101"},
      {"0001", "0101"}, {"0001", "0011"}, {"0111", "0011"}, {"0111", "0100"},
      {"1101", "1010"}, {"1110", "1101"}, {"1100", "1101"}, {"1011", "1010"},
      {"1000", "1010"}, {"1000", "1111"}, {"1000", "1001"}, {"1110", "1111"},
      {"1100", "1111"}, {"1100", "1011"}, {"1001", "1011"}, {"1001", "1110"},
      {"0010", "1010"}, {"0110", "1110"}, {"0101", "1101"}, {"0001", "1001"},
      {"0011", "1011"}, {"0111", "1111"}, {"0100", "1100"}, {"0000", "1000"}};
  return e;
}

inline const std::vector<LabelEdge>& mq1_4() {
  static const std::vector<LabelEdge> e = {
      {"0000", "0010"}, {"0100", "0000"}, {"0001", "0000"}, {"0011", "0010"},
      {"0110", "0010"}, {"0110", "0101"}, {"0110", "0111"}, {"0100", "0101"},
      {"0001", "0101"}, {"0001", "0011"}, {"0111", "0011"}, {"0111", "0100"},
      {"1101", "1010"}, {"1110", "1101"}, {"1100", "1101"}, {"1011", "1010"},
      {"1000", "1010"}, {"1000", "1111"}, {"1000", "1001"}, {"1110", "1111"},
      {"1100", "1111"}, {"1100", "1011"}, {"1001", "1011"}, {"1001", "1110"},
      {"0010", "1101"}, {"0110", "1001"}, {"0101", "1010"}, {"0001", "1110"},
      {"0011", "1100"}, {"0111", "1000"}, {"0100", "1011"}, {"0000", "1111"}};
  return e;
}

inline const std::vector<LabelEdge>& tq3() {
  static const std::vector<LabelEdge> e = {
      {"101", "100"}, {"111", "101"}, {"001", "101"}, {"000", "100"},
      {"010", "100"}, {"010", "011"}, {"010", "110"}, {"111", "011"},
      {"001", "011"}, {"001", "000"}, {"110", "000"}, {"110", "111"}};
  return e;
}

inline const std::vector<LabelEdge>& tq5() {
  static const std::vector<LabelEdge> e = {
      // 00-prefixed block
      {"00101", "00100"}, {"00111", "00101"}, {"00001", "00101"}, {"00000", "00100"},
      {"00010", "00100"}, {"00010", "00011"}, {"00010", "00110"}, {"00111", "00011"},
      {"00001", "00011"}, {"00001", "00000"}, {"00110", "00000"}, {"00110", "00111"},
      // 10-prefixed block
      {"10101", "10100"}, {"10111", "10101"}, {"10001", "10101"}, {"10000", "10100"},
      {"10010", "10100"}, {"10010", "10011"}, {"10010", "10110"}, {"10111", "10011"},
      {"10001", "10011"}, {"10001", "10000"}, {"10110", "10000"}, {"10110", "10111"},
      // 01-prefixed block
      {"01101", "01100"}, {"01111", "01101"}, {"01001", "01101"}, {"01000", "01100"},
      {"01010", "01100"}, {"01010", "01011"}, {"01010", "01110"}, {"01111", "01011"},
      {"01001", "01011"}, {"01001", "01000"}, {"01110", "01000"}, {"01110", "01111"},
      // 11-prefixed block
      {"11101", "11100"}, {"11111", "11101"}, {"11001", "11101"}, {"11000", "11100"},
      {"11010", "11100"}, {"11010", "11011"}, {"11010", "11110"}, {"11111", "11011"},
      {"11001", "11011"}, {"11001", "11000"}, {"11110", "11000"}, {"11110", "11111"},
      // top-bit matching, within each second-bit side
      {"00100", "10100"}, {"00000", "10000"}, {"00101", "10101"}, {"00110", "10110"},
      {"00010", "10010"}, {"00001", "10001"}, {"00111", "10111"}, {"00011", "10011"},
      {"01100", "11100"}, {"01000", "11000"}, {"01101", "11101"}, {"01110", "11110"},
      {"01010", "11010"}, {"01001", "11001"}, {"01111", "11111"}, {"01011", "11011"},
      // second-bit matching
      {"00111", "01111"}, {"10111", "11111"}, {"00101", "11101"}, {"00011", "11011"},
      {"00000", "11000"}, {"00110", "11110"}, {"10101", "01101"}, {"10110", "01110"},
      {"10011", "01011"}, {"10000", "01000"}, {"00100", "01100"}, {"00001", "01001"},
      {"00010", "01010"}, {"10100", "11100"}, {"10001", "11001"}, {"10010", "11010"}};
  return e;
}

// Matching drawn in the unlabeled 4-D composition figure, read off against the
// canonical 3-bit labels (it coincides with the 4-D crossed-cube matching).
inline std::vector<thln::VertexId> fig1b_phi() {
  std::vector<thln::VertexId> phi(8);
  const char* pairs[8][2] = {{"010", "010"}, {"110", "110"}, {"111", "101"}, {"001", "011"},
                             {"000", "000"}, {"100", "100"}, {"101", "111"}, {"011", "001"}};
  for (auto& p : pairs) phi[thln::parse_label(p[0], 3)] = thln::parse_label(p[1], 3);
  return phi;
}

// Two vertex faults on the 4-D graph under which vertex 0010 keeps exactly
// the two survivor neighbors 0011 and 0110.
struct WeakPairConfig {
  const char* fault_a = "0000";
  const char* fault_b = "1010";
  const char* w = "0010";
  const char* w1 = "0011";
  const char* w2 = "0110";
};

inline std::vector<thln::Edge> parse_edges(const std::vector<LabelEdge>& labels, int n) {
  std::vector<thln::Edge> out;
  out.reserve(labels.size());
  for (const auto& [a, b] : labels)
    out.emplace_back(thln::parse_label(a, n), thln::parse_label(b, n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fixtures
