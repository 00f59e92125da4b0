#pragma once

#include <vector>

#include "json.hpp"
#include "uglov/charge.hpp"

namespace uglov {

// Charge parameters for the canonical basic set of the Hecke algebra whose
// two generators carry eigenvalue exponents a (conjugate pair) and b, taken
// as powers of a primitive l-th root of unity:
//   e      order of the first eigenvalue ratio, l / gcd(l, a); must be >= 2
//   d      least nonnegative solution of a·d = b - l/2 (mod l); l must be
//          even and gcd(a, l) must divide b - l/2
//   d_all  every solution in [0, l); they differ by multiples of e, so the
//          emitted charge is the same for each
//   p      the unique integer with d + p·e < b/a < d + (p+1)·e (exact
//          cross-multiplied comparison, never floating point)
//   charge (d + p·e, 0)
struct BasicSet {
  int a = 0, b = 0, l = 0;
  int e = 0;
  int d = 0;
  std::vector<int> d_all;
  long long p = 0;
  Charge charge;
};

BasicSet basic_set_charge(int a, int b, int l);

nlohmann::json to_json(const BasicSet& bs);

} // namespace uglov
