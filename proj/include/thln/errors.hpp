#pragma once

#include <stdexcept>
#include <string>

namespace thln {

enum class Errc {
  dimension_too_small,
  dimension_mismatch,
  not_a_bijection,
  even_dimension,
  faulty_query_vertex,
  empty_survivor,
  overlay_conflict,
  budget_exceeded,
  invalid_length,
  no_path_found,
  weak_pair_requested,
  enumeration_too_large,
  bad_input,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::dimension_too_small: return "DimensionTooSmall";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::not_a_bijection: return "NotABijection";
    case Errc::even_dimension: return "EvenDimension";
    case Errc::faulty_query_vertex: return "FaultyQueryVertex";
    case Errc::empty_survivor: return "EmptySurvivor";
    case Errc::overlay_conflict: return "OverlayConflict";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::invalid_length: return "InvalidLength";
    case Errc::no_path_found: return "NoPathFound";
    case Errc::weak_pair_requested: return "WeakPairRequested";
    case Errc::enumeration_too_large: return "EnumerationTooLarge";
    case Errc::bad_input: return "BadInput";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace thln
