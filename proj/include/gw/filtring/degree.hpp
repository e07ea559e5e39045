#pragma once

#include <string>

namespace gw::filtring {

// Value of a filtration degree function: a finite level, minus infinity, or "at most `value`"
// when the computation ran out of levels before the degree stopped decreasing.
struct FiltDegree {
  enum class Kind { Finite, MinusInfinity, BelowBound };
  Kind kind = Kind::Finite;
  int value = 0;

  static FiltDegree finite(int v) { return {Kind::Finite, v}; }
  static FiltDegree minus_infinity() { return {Kind::MinusInfinity, 0}; }
  static FiltDegree below(int v) { return {Kind::BelowBound, v}; }

  bool is_finite() const { return kind == Kind::Finite; }
  bool is_minus_infinity() const { return kind == Kind::MinusInfinity; }
  bool is_below_bound() const { return kind == Kind::BelowBound; }

  // Certainly <= d.
  bool at_most(int d) const { return kind == Kind::MinusInfinity || value <= d; }

  bool operator==(const FiltDegree& o) const {
    return kind == o.kind && (kind == Kind::MinusInfinity || value == o.value);
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Finite: return std::to_string(value);
      case Kind::MinusInfinity: return "-inf";
      case Kind::BelowBound: return "<=" + std::to_string(value);
    }
    return "?";
  }
};

}  // namespace gw::filtring
