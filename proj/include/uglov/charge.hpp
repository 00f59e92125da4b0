#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace uglov {

// Pair of integer charges (s0, s1) attached to the two components.
struct Charge {
  int s0 = 0;
  int s1 = 0;

  int component(int c) const {
    if (c != 0 && c != 1) throw std::invalid_argument("charge component must be 0 or 1");
    return c == 0 ? s0 : s1;
  }
  Charge shifted(int t, int e) const { return Charge{s0 + t * e, s1 + t * e}; }

  auto operator<=>(const Charge&) const = default;
};

// Residue modulus: a finite value >= 2, or infinity.  The infinite modulus
// leaves contents unreduced; every node function accepts either, so the
// sl_infinity setting reuses the whole machinery with no second code path.
class Modulus {
public:
  static Modulus finite(int e) {
    if (e < 2) throw std::invalid_argument("modulus must be >= 2");
    return Modulus(e);
  }
  static Modulus infinity() { return Modulus(0); }

  bool is_finite() const { return v_ != 0; }
  int value() const {
    if (!is_finite()) throw std::logic_error("infinite modulus has no value");
    return v_;
  }
  std::string to_text() const { return is_finite() ? std::to_string(v_) : "infinity"; }

  friend bool operator==(const Modulus&, const Modulus&) = default;

private:
  explicit Modulus(int v) : v_(v) {}
  int v_; // 0 encodes infinity
};

// Residue class of a content.  For a finite modulus the value is reduced to
// [0, e); for the infinite one it is the raw content.
struct Residue {
  long long value = 0;
  Modulus mod = Modulus::infinity();

  friend bool operator==(const Residue&, const Residue&) = default;
};

inline Residue reduce_residue(long long raw, Modulus e) {
  if (!e.is_finite()) return Residue{raw, e};
  long long m = e.value();
  long long v = raw % m;
  if (v < 0) v += m;
  return Residue{v, e};
}

} // namespace uglov
