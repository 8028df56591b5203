#pragma once

#include <functional>
#include <vector>

#include "pnc/keyseq.hpp"

namespace pnc {

struct EnumBounds {
  long long max_entry = 10;  // |omega_i| <= max_entry, omega_0 >= 1
  int max_length = 4;        // n + 2 <= max_length
};

struct EnumFilters {
  bool primitive = false;
  bool algebraic = false;
  bool non_algebraic = false;
  bool normal = false;
  bool essential = false;
  bool gorenstein = false;
  bool rational = false;  // k_X < 0 (implies primitive evaluation)
};

// Exhaustively emits the valid key sequences within bounds, lexicographically,
// pruning on properties that are prefix-stable.  Documented desk-scale limits:
// max_entry <= 10^4, max_length <= 8.
void enumerate_key_sequences(const EnumBounds& bounds, const EnumFilters& filters,
                             const std::function<void(const KeySequence&)>& emit);

// Collecting variant; jobs > 1 shards the omega_0 strata across threads and
// merges in lexicographic order.
std::vector<KeySequence> enumerate_collect(const EnumBounds& bounds,
                                           const EnumFilters& filters,
                                           int jobs = 1);

}  // namespace pnc
