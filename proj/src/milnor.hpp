#pragma once

#include <map>
#include <vector>

#include "group.hpp"
#include "magnus.hpp"
#include "model.hpp"

namespace warrow {

// Combinatorial longitudes of an n-string-link presentation, valid modulo the
// k-th lower central series term. Strand i's upper meridian is the conjugate
// lambda_i^-1 m_i lambda_i of its lower meridian.
struct LongitudeSet {
  int n = 0;
  int k = 0;
  std::vector<FreeWord> lambda;  // in meridian generators 0..n-1, strand order
};

LongitudeSet longitudes(const Presentation& p, int k);

// Magnus image of the longitudes, computed directly in the truncated series
// algebra (no intermediate word blowup).
std::vector<TruncatedSeries> longitude_series(const Presentation& p, int k);

// Welded Milnor invariant for an index sequence (1-based strand numbers).
long long milnor_mu(const Presentation& p, const std::vector<int>& seq);

// All invariants with non-repeated index sequences of length 2..maxlen, keyed
// by the digit string of the sequence.
std::map<std::string, long long> milnor_all_nonrepeated(const Presentation& p, int maxlen);

std::string sequence_key(const std::vector<int>& seq);
std::vector<int> parse_sequence(const std::string& text);

}  // namespace warrow
