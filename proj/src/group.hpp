#pragma once

#include <map>
#include <string>
#include <vector>

#include "freeword.hpp"
#include "laurent.hpp"
#include "model.hpp"

namespace warrow {

// Wirtinger-style presentation read off a w-tree presentation. Heads split the
// strands into arcs; one generator per arc, one relator per tree.
struct GroupPresentation {
  struct Generator {
    int strand = 0;
    int arc = 0;  // arc index along the strand
  };
  std::vector<Generator> generators;
  std::vector<FreeWord> relators;
  // Per open strand id: generator ids of the lower and upper meridian.
  std::map<int, std::pair<int, int>> meridians;
  // Per strand id: generator id of the arc containing each position.
  std::map<int, std::vector<int>> arc_of_pos;
  // Relator i belongs to tree i; the conjugating word u with m_out = u^-1 m_in u.
  std::vector<FreeWord> head_conjugators;
  std::vector<int> head_in_gen, head_out_gen;
};

// Word of a tree in the free group on the given leaf labels: a leaf reads its
// generator (inverted by its twist), a vertex reads [A,B] = A B^-1 A^-1 B, a
// twisted edge inverts the word below it.
FreeWord wtree_word(const WTree& t, const std::map<Site, FreeWord>& labels);
// As above, labels taken from an arc-generator assignment.
FreeWord wtree_word_gen(const WTree& t, const std::map<Site, int>& labels);

// The head side folded in: the conjugating word u with m_out = u^-1 m_in u.
FreeWord effective_head_word(const WTree& t, const std::map<Site, int>& labels);

GroupPresentation wirtinger(const Presentation& p);

// phi(d w / d g): the Fox derivative in g followed by the ring map sending
// every generator to t.
LaurentPoly fox_phi(const FreeWord& w, int gen);

struct AlexanderResult {
  LaurentPoly poly;
  bool degenerate = false;  // zero gcd; reported as-is
};

// Normalized Alexander polynomial of a welded long knot presentation: gcd of
// the (m-1)-minors of the Fox Jacobian, unit-normalized so D(1) = 1 and
// D'(1) = 0.
AlexanderResult alexander_normalized(const GroupPresentation& gp);
AlexanderResult alexander_normalized(const Presentation& p);

// Coefficients a_2..a_kmax of the expansion 1 + sum a_k (1-t)^k.
std::vector<long long> alpha_coeffs(const LaurentPoly& normalized, int kmax);

}  // namespace warrow
