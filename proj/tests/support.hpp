#pragma once

#include "charbasis/partition.hpp"
#include "oracles/brute.hpp"

#include <vector>

namespace testing {

inline charbasis::Partition from_parts(const oracle::Parts& p) { return charbasis::Partition(p); }
inline oracle::Parts to_parts(const charbasis::Partition& p) { return p.parts(); }

inline std::vector<charbasis::Partition> from_parts(const std::vector<oracle::Parts>& ps) {
  std::vector<charbasis::Partition> out;
  for (const auto& p : ps) out.emplace_back(p);
  return out;
}

}  // namespace testing
