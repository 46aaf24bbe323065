#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "model.hpp"

namespace warrow {

// Gauss-code valued invariant functional; values are integer vectors so the
// alternating-sum identity is checked coordinate-wise.
using InvariantFn = std::function<std::vector<long long>(const GaussCode&)>;

// Deletes the chosen classical crossings (virtualization in the detour
// quotient) and re-densifies the passage lists.
GaussCode virtualize(const GaussCode& g, const std::set<int>& crossings);

// sum over subsets S' of S of (-1)^|S'| v(g with S' virtualized)
std::vector<long long> alternating_sum(const InvariantFn& v, const GaussCode& g,
                                       const std::set<int>& subset, int subset_limit = 12);

// Built-in invariant functionals by name:
//   alphaK   (K = 2..8)  - alpha_K of a one-open-strand code
//   mu-SEQ                - welded Milnor invariant of a string-link code
InvariantFn lookup_invariant(const std::string& name);
std::vector<std::string> invariant_names();

}  // namespace warrow
