#include "uglov/hecke.hpp"

#include <numeric>

#include "uglov/error.hpp"

namespace uglov {

BasicSet basic_set_charge(int a, int b, int l) {
  if (a < 1 || b < 1 || l < 2)
    throw std::invalid_argument("basic_set_charge needs a, b >= 1 and l >= 2");
  if (l % 2 != 0) throw error("no solution: l must be even (the -1 factor needs l/2)");

  BasicSet bs;
  bs.a = a;
  bs.b = b;
  bs.l = l;
  int g = std::gcd(a, l);
  bs.e = l / g;
  if (bs.e < 2) throw error("degenerate parameters: first eigenvalue ratio has order 1");

  // a·d = b - l/2 (mod l): solvable iff gcd(a, l) divides the right side.
  long long rhs = ((static_cast<long long>(b) - l / 2) % l + l) % l;
  if (rhs % g != 0) throw error("no solution: gcd(a, l) does not divide b - l/2");
  for (int d = 0; d < l; ++d)
    if ((static_cast<long long>(a) * d - rhs) % l == 0) bs.d_all.push_back(d);
  bs.d = bs.d_all.front();

  // d + p·e < b/a < d + (p+1)·e, compared exactly: p = floor((b - a·d) / (a·e))
  // unless b/a lands on the lattice d + eZ.
  long long num = static_cast<long long>(b) - static_cast<long long>(a) * bs.d;
  long long den = static_cast<long long>(a) * bs.e;
  if (num % den == 0)
    throw error("p is not pinned: b/a lies on the lattice d + eZ");
  long long q = num / den;
  if (num % den != 0 && (num < 0) != (den < 0)) --q;
  bs.p = q;
  bs.charge = Charge{static_cast<int>(bs.d + bs.p * bs.e), 0};

  // Every solution d' = d + k·e gives the same charge; keep that honest.
  for (int d2 : bs.d_all) {
    long long num2 = static_cast<long long>(b) - static_cast<long long>(a) * d2;
    long long q2 = num2 / den;
    if (num2 % den != 0 && (num2 < 0) != (den < 0)) --q2;
    if (d2 + q2 * bs.e != bs.charge.s0)
      throw std::logic_error("basic_set_charge: charge differs across d solutions");
  }
  return bs;
}

nlohmann::json to_json(const BasicSet& bs) {
  return nlohmann::json{{"a", bs.a},       {"b", bs.b}, {"l", bs.l},
                        {"e", bs.e},       {"d", bs.d}, {"d_all", bs.d_all},
                        {"p", bs.p},       {"charge", {bs.charge.s0, bs.charge.s1}}};
}

} // namespace uglov
