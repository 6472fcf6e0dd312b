#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "gdt/errors.hpp"

namespace gdt {

// Resource parameter attached to each tree node. Carries an exact variant
// for the three limit operators instead of relying on IEEE infinities, so
// max/min/expectation nodes are handled by exact case analysis rather than
// overflow behaviour.
//
// Total order: NegInf < Finite(<0) < Zero < Finite(>0) < PosInf.
class InverseTemperature {
 public:
  enum class Kind { NegInf, Finite, Zero, PosInf };

  InverseTemperature() : kind_(Kind::Zero), value_(0.0) {}

  static InverseTemperature finite(double v) {
    if (!std::isfinite(v)) throw ValidationError("finite inverse temperature must be a finite number");
    if (v == 0.0) throw ValidationError("finite inverse temperature must be nonzero; use the zero variant");
    return InverseTemperature(Kind::Finite, v);
  }
  static InverseTemperature zero() { return InverseTemperature(Kind::Zero, 0.0); }
  static InverseTemperature pos_inf() { return InverseTemperature(Kind::PosInf, 0.0); }
  static InverseTemperature neg_inf() { return InverseTemperature(Kind::NegInf, 0.0); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_infinite() const { return kind_ == Kind::PosInf || kind_ == Kind::NegInf; }

  // Finite value; programming error to call on other variants.
  double value() const {
    if (kind_ != Kind::Finite) throw std::logic_error("value() on non-finite inverse temperature");
    return value_;
  }

  // 1/beta with the 1/(+-inf) = 0 convention. Undefined for the zero
  // variant, which callers must reject up front.
  double inverse_value() const {
    switch (kind_) {
      case Kind::Finite: return 1.0 / value_;
      case Kind::PosInf:
      case Kind::NegInf: return 0.0;
      default: throw ValidationError("1/beta is undefined for zero inverse temperature");
    }
  }

  std::string str() const {
    switch (kind_) {
      case Kind::NegInf: return "-inf";
      case Kind::PosInf: return "inf";
      case Kind::Zero: return "0";
      default: return std::to_string(value_);
    }
  }

  friend bool operator==(const InverseTemperature& a, const InverseTemperature& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  friend bool operator!=(const InverseTemperature& a, const InverseTemperature& b) { return !(a == b); }
  friend bool operator<(const InverseTemperature& a, const InverseTemperature& b) {
    int ra = a.rank(), rb = b.rank();
    if (ra != rb) return ra < rb;
    return a.kind_ == Kind::Finite && a.value_ < b.value_;
  }
  friend bool operator<=(const InverseTemperature& a, const InverseTemperature& b) { return a < b || a == b; }

 private:
  InverseTemperature(Kind k, double v) : kind_(k), value_(v) {}

  int rank() const {
    switch (kind_) {
      case Kind::NegInf: return 0;
      case Kind::Finite: return value_ < 0.0 ? 1 : 3;
      case Kind::Zero: return 2;
      default: return 4;
    }
  }

  Kind kind_;
  double value_;
};

}  // namespace gdt
