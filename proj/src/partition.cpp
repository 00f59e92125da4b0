#include "uglov/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace uglov {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0)
      throw std::invalid_argument("partition part must be nonnegative");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::part(int row) const {
  if (row < 1) throw std::invalid_argument("partition rows are 1-based");
  if (row > rows()) return 0;
  return parts_[static_cast<std::size_t>(row) - 1];
}

int Partition::rank() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

const Partition& Bipartition::component(int c) const {
  if (c != 0 && c != 1)
    throw std::invalid_argument("bipartition component must be 0 or 1");
  return comp_[c];
}

std::string to_text(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  for (int i = 0; i < p.rows(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::string to_text(const Bipartition& bp) {
  return "[" + to_text(bp.component(0)) + "|" + to_text(bp.component(1)) + "]";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view tok) {
  tok = trim(tok);
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw std::invalid_argument("bad integer in partition: '" + std::string(tok) + "'");
  return value;
}

} // namespace

Partition parse_partition(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "-") return Partition();
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok =
        comma == std::string_view::npos ? text.substr(pos) : text.substr(pos, comma - pos);
    parts.push_back(parse_int(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts)); // rejects ascents / negatives
}

Bipartition parse_bipartition(std::string_view text) {
  text = trim(text);
  if (text.size() < 3 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("bipartition must look like [a,b,...|c,d,...]");
  std::string_view inner = text.substr(1, text.size() - 2);
  std::size_t bar = inner.find('|');
  if (bar == std::string_view::npos || inner.find('|', bar + 1) != std::string_view::npos)
    throw std::invalid_argument("bipartition needs exactly one '|' separator");
  return Bipartition(parse_partition(inner.substr(0, bar)),
                     parse_partition(inner.substr(bar + 1)));
}

namespace {

void emit_partitions(int remaining, int cap, std::vector<int>& acc,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int next = std::min(cap, remaining); next >= 1; --next) {
    acc.push_back(next);
    emit_partitions(remaining - next, next, acc, out);
    acc.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative rank");
  std::vector<Partition> out;
  std::vector<int> acc;
  emit_partitions(n, n, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Bipartition> all_bipartitions(int n) {
  std::vector<Bipartition> out;
  for (int k = 0; k <= n; ++k) {
    for (const Partition& a : partitions_of(k))
      for (const Partition& b : partitions_of(n - k)) out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace uglov
