#pragma once

#include <map>
#include <string>
#include <vector>

#include "group.hpp"
#include "milnor.hpp"
#include "model.hpp"

namespace warrow {

// Long-knot generator with a single degree-k tree; its normalized Alexander
// polynomial is 1 + (1-t)^k, or 1 - (1-t)^k for the inverted variant.
Presentation make_Lk(int k, bool inverted);

// String-link generator on the trivial n-component diagram: a single tree
// whose only nonzero length-|seq| invariant is +1 at seq (-1 when inverted).
Presentation make_TI(const std::vector<int>& seq, int n, bool inverted);

// Concatenation product: strand i of q is appended after strand i of p.
// Defined for presentations with matching open-strand diagrams.
Presentation concat(const Presentation& p, const Presentation& q);

struct LongKnotNormalForm {
  int k = 0;
  std::vector<long long> exponents;  // x_2..x_k
  Presentation representative;
};

LongKnotNormalForm wk_normal_form(const Presentation& p, int k);

struct WkDecision {
  bool equal = false;
  int witness = 0;  // first differing alpha index when distinct
};
// Compares alpha_i over 2 <= i <= k; include_top=false drops i = k.
WkDecision decide_wk(const Presentation& p, const Presentation& q, int k,
                     bool include_top = true);

// Deletes every repeated tree (two endpoints on one component).
Presentation homotopy_reduce(const Presentation& p);

struct StringLinkNormalForm {
  int n = 0;
  std::map<std::string, long long> exponents;  // keyed by sequence strings
  Presentation representative;
};

StringLinkNormalForm homotopy_normal_form(const Presentation& p);

struct HomotopyDecision {
  bool equal = false;
  std::string witness;  // first differing sequence when distinct
};
HomotopyDecision decide_homotopy(const Presentation& p, const Presentation& q);

}  // namespace warrow
