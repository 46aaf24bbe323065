#pragma once

#include <map>

#include "model.hpp"

namespace warrow {

struct ExpandResult {
  Presentation presentation;
  // old dense site -> new dense site (the replaced head maps to the first
  // new head position)
  std::map<Site, Site> site_relabeling;
};

// One application of the expansion move to the selected tree, which must have
// degree >= 2. The root vertex with subtrees A, B is replaced by four trees
// whose heads land consecutively at the old head position, spelling the
// bracket word [A,B] = A B' A' B along the strand (primes are terminal
// twists); a twisted terminal edge yields the inverse word.
ExpandResult expand_once(const Presentation& p, int tree_index);

// Iterated expansion until only w-arrows remain.
Presentation full_expand(const Presentation& p);

// Full expansion remembering, for every output arrow, which original tree and
// which of its tails (planar leaf ordinal) the arrow descends from.
struct TrackedExpansion {
  Presentation presentation;                     // arrows only
  std::vector<std::pair<int, int>> arrow_origin;  // (tree, leaf ordinal)
};
TrackedExpansion full_expand_tracked(const Presentation& p);

// Surgery: full expansion, then one classical crossing per arrow (over at the
// tail site, under at the head site).
GaussCode surgery(const Presentation& p);

// Removes from the expansion every arrow descending from the chosen tail.
Presentation delete_tail_group(const Presentation& p, int tree_index, int tail_index);

}  // namespace warrow
