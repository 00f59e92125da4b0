#pragma once

#include <stdexcept>
#include <string>

namespace uglov {

// Domain-level failure: the inputs are well-formed but the requested
// object does not exist (non-member bipartition, non-invertible symbol,
// unsolvable parameter congruence, ...).
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A verification run tried to visit more bipartitions than its budget allows.
class budget_exceeded : public error {
public:
  explicit budget_exceeded(long long limit)
      : error("verification budget exceeded (" + std::to_string(limit) +
              " bipartition visits)") {}
};

} // namespace uglov
