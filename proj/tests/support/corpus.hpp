#pragma once

#include <functional>
#include <string>

#include "subcode/search.hpp"

namespace corpus {

struct Entry {
  std::string source;  // "direct_sum", "counterexample" or "search"
  int q = 2;
  const subcode::SubspaceCode& code;
};

struct Options {
  int max_direct_sum_n = 4;
  std::vector<int> direct_sum_q{2, 3};
  int max_search_n = 2;
  std::vector<int> search_q{2, 3};
};

// Streams the linear-code corpus: every direct-sum code of independent
// blocks, the GF(2) counterexample in dimension 3, and every code found by
// exhaustive search. Returns the number of codes visited.
std::size_t for_each_code(const Options& options, const std::function<void(const Entry&)>& visit);

}  // namespace corpus
