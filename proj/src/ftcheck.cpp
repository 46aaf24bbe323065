#include "ftcheck.hpp"

#include <algorithm>

#include "group.hpp"
#include "milnor.hpp"

namespace warrow {

GaussCode virtualize(const GaussCode& g, const std::set<int>& crossings) {
  auto ids = g.crossing_ids();
  for (int c : crossings)
    if (std::find(ids.begin(), ids.end(), c) == ids.end())
      throw CalcError(ErrorKind::Usage, "unknown crossing id " + std::to_string(c));
  GaussCode out;
  out.strands = g.strands;
  for (const auto& strand : g.passages) {
    std::vector<Passage> v;
    for (const auto& pa : strand)
      if (!crossings.count(pa.crossing)) v.push_back(pa);
    out.passages.push_back(std::move(v));
  }
  return out;
}

std::vector<long long> alternating_sum(const InvariantFn& v, const GaussCode& g,
                                       const std::set<int>& subset, int subset_limit) {
  if (static_cast<int>(subset.size()) > subset_limit)
    throw CalcError(ErrorKind::Usage, "subset larger than the configured limit of " +
                                          std::to_string(subset_limit));
  std::vector<int> ids(subset.begin(), subset.end());
  std::vector<long long> acc;
  const size_t count = size_t{1} << ids.size();
  for (size_t mask = 0; mask < count; ++mask) {
    std::set<int> chosen;
    for (size_t b = 0; b < ids.size(); ++b)
      if (mask & (size_t{1} << b)) chosen.insert(ids[b]);
    std::vector<long long> val = v(virtualize(g, chosen));
    long long sign = chosen.size() % 2 ? -1 : 1;
    if (acc.empty()) acc.assign(val.size(), 0);
    if (val.size() != acc.size())
      throw CalcError(ErrorKind::Domain, "invariant changed its value dimension");
    for (size_t i = 0; i < val.size(); ++i) acc[i] += sign * val[i];
  }
  return acc;
}

InvariantFn lookup_invariant(const std::string& name) {
  if (name.rfind("alpha", 0) == 0 && name.size() > 5) {
    int k = std::stoi(name.substr(5));
    if (k < 2 || k > 8) throw CalcError(ErrorKind::Usage, "alpha index must be 2..8");
    return [k](const GaussCode& g) {
      AlexanderResult a = alexander_normalized(canonical_arrow_presentation(g));
      if (a.degenerate) throw CalcError(ErrorKind::Domain, "degenerate polynomial");
      return std::vector<long long>{alpha_coeffs(a.poly, k).back()};
    };
  }
  if (name.rfind("mu-", 0) == 0) {
    std::vector<int> seq = parse_sequence(name.substr(3));
    return [seq](const GaussCode& g) {
      return std::vector<long long>{milnor_mu(canonical_arrow_presentation(g), seq)};
    };
  }
  throw CalcError(ErrorKind::Usage, "unknown invariant '" + name + "'");
}

std::vector<std::string> invariant_names() {
  return {"alpha2", "alpha3", "alpha4", "alpha5", "alpha6", "alpha7", "alpha8",
          "mu-SEQ (e.g. mu-12)"};
}

}  // namespace warrow
