#include "uglov/symbol.hpp"

#include <algorithm>

#include "uglov/error.hpp"

namespace uglov {

namespace {

void check_charge(Charge charge) {
  if (!(0 <= charge.s0 && charge.s0 <= charge.s1))
    throw error("symbols need 0 <= s0 <= s1");
}

std::vector<int> encode_row(const Partition& p, int s, int m) {
  std::vector<int> row(static_cast<std::size_t>(m) + s);
  for (int j = 1; j <= m + s; ++j)
    row[static_cast<std::size_t>(j) - 1] = p.part(j) - j + s + m;
  return row;
}

Partition decode_row(const std::vector<int>& row, int s, int m) {
  std::vector<int> parts(row.size());
  for (int j = 1; j <= static_cast<int>(row.size()); ++j) {
    int v = row[static_cast<std::size_t>(j) - 1] + j - s - m;
    if (v < 0) throw error("symbol row decodes to a negative part");
    parts[static_cast<std::size_t>(j) - 1] = v;
  }
  return Partition(std::move(parts)); // rejects increasing part sequences
}

} // namespace

Symbol::Symbol(std::vector<int> top, std::vector<int> bottom, Charge charge, int m)
    : top_(std::move(top)), bottom_(std::move(bottom)), charge_(charge), m_(m) {
  check_charge(charge_);
  if (m_ < 0) throw error("symbol padding must be nonnegative");
  if (static_cast<int>(top_.size()) != m_ + charge_.s1 ||
      static_cast<int>(bottom_.size()) != m_ + charge_.s0)
    throw error("symbol row lengths must be m+s1 and m+s0");
  for (const auto* row : {&top_, &bottom_}) {
    for (std::size_t i = 0; i < row->size(); ++i) {
      if ((*row)[i] < 0) throw error("symbol entries must be nonnegative");
      if (i > 0 && (*row)[i - 1] <= (*row)[i])
        throw error("symbol rows must be strictly decreasing");
    }
  }
}

bool Symbol::standard() const {
  // k-th smallest top vs k-th smallest bottom
  for (std::size_t k = 1; k <= bottom_.size(); ++k) {
    if (top_[top_.size() - k] > bottom_[bottom_.size() - k]) return false;
  }
  return true;
}

int canonical_padding(const Bipartition& bp, Charge charge) {
  check_charge(charge);
  return std::max({1, bp.component(0).rows() - charge.s0 + 1,
                   bp.component(1).rows() - charge.s1 + 1});
}

Symbol to_symbol(const Bipartition& bp, Charge charge, std::optional<int> m) {
  check_charge(charge);
  int mm = m ? *m : canonical_padding(bp, charge);
  if (mm <= std::max(bp.component(0).rows() - charge.s0,
                     bp.component(1).rows() - charge.s1) ||
      mm < 0)
    throw error("symbol padding too small for this bipartition");
  return Symbol(encode_row(bp.component(1), charge.s1, mm),
                encode_row(bp.component(0), charge.s0, mm), charge, mm);
}

Bipartition from_symbol(const Symbol& s) {
  return Bipartition(decode_row(s.bottom(), s.charge().s0, s.padding()),
                     decode_row(s.top(), s.charge().s1, s.padding()));
}

std::vector<std::pair<int, int>> Pairing::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (auto [b, t] : matches)
    if (b != t) out.emplace_back(b, t);
  return out;
}

Pairing down_pairing(const Symbol& s) {
  if (!s.standard()) throw error("downward pairing needs a standard symbol");
  std::vector<int> avail = s.top(); // descending
  Pairing out;
  // bottom entries smallest first
  for (auto it = s.bottom().rbegin(); it != s.bottom().rend(); ++it) {
    int x = *it;
    // largest available top entry <= x: first from the front that fits
    auto hit = std::find_if(avail.begin(), avail.end(), [&](int t) { return t <= x; });
    if (hit == avail.end()) throw error("downward pairing failed"); // unreachable if standard
    out.matches.emplace_back(x, *hit);
    avail.erase(hit);
  }
  std::reverse(out.matches.begin(), out.matches.end()); // bottom descending
  return out;
}

Pairing up_pairing(const Symbol& s) {
  std::vector<int> avail = s.top();
  Pairing out;
  // bottom entries largest first
  for (int x : s.bottom()) {
    // smallest available top entry >= x: last one that fits
    auto hit = avail.rend();
    for (auto it = avail.rbegin(); it != avail.rend(); ++it) {
      if (*it >= x) { hit = it; break; }
    }
    if (hit == avail.rend())
      throw error("upward pairing failed: symbol is not in the pair-swap image");
    out.matches.emplace_back(x, *hit);
    avail.erase(std::next(hit).base());
  }
  return out;
}

namespace {

Bipartition apply_swap(const Symbol& s, const Pairing& p) {
  std::vector<int> top = s.top(), bottom = s.bottom();
  for (auto [b, t] : p.pairs()) {
    *std::find(bottom.begin(), bottom.end(), b) = t;
    *std::find(top.begin(), top.end(), t) = b;
  }
  std::sort(top.rbegin(), top.rend());
  std::sort(bottom.rbegin(), bottom.rend());
  return from_symbol(Symbol(std::move(top), std::move(bottom), s.charge(), s.padding()));
}

} // namespace

Bipartition pair_swap(const Bipartition& bp, Charge charge, std::optional<int> m) {
  Symbol s = to_symbol(bp, charge, m);
  return apply_swap(s, down_pairing(s));
}

Bipartition pair_swap_inverse(const Bipartition& bp, Charge charge, std::optional<int> m) {
  Symbol s = to_symbol(bp, charge, m);
  return apply_swap(s, up_pairing(s));
}

std::string to_text(const Symbol& s) {
  auto line = [](const std::vector<int>& row) {
    std::string out;
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
      if (!out.empty()) out += ' ';
      out += std::to_string(*it);
    }
    return out;
  };
  return line(s.top()) + "\n" + line(s.bottom());
}

nlohmann::json to_json(const Symbol& s) {
  auto ascending = [](const std::vector<int>& row) {
    return std::vector<int>(row.rbegin(), row.rend());
  };
  return nlohmann::json{{"charge", {s.charge().s0, s.charge().s1}},
                        {"m", s.padding()},
                        {"top", ascending(s.top())},
                        {"bottom", ascending(s.bottom())}};
}

} // namespace uglov
