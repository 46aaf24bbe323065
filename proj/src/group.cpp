#include "group.hpp"

#include <algorithm>

namespace warrow {

namespace {

FreeWord node_word(const WTree& t, int n, const std::map<Site, FreeWord>& labels) {
  const WTreeNode& node = t.nodes[n];
  FreeWord w;
  if (node.is_leaf()) {
    auto it = labels.find(node.site);
    if (it == labels.end())
      throw CalcError(ErrorKind::Domain, "unlabeled leaf at strand " +
                                             std::to_string(node.site.strand) + " pos " +
                                             std::to_string(node.site.pos));
    w = it->second;
  } else {
    w = FreeWord::commutator(node_word(t, node.first, labels),
                             node_word(t, node.second, labels));
  }
  return node.twist ? w.inverse() : w;
}

}  // namespace

FreeWord wtree_word(const WTree& t, const std::map<Site, FreeWord>& labels) {
  return node_word(t, t.root, labels);
}

FreeWord wtree_word_gen(const WTree& t, const std::map<Site, int>& labels) {
  std::map<Site, FreeWord> words;
  for (const auto& [site, gen] : labels) words[site] = FreeWord::generator(gen);
  return wtree_word(t, words);
}

FreeWord effective_head_word(const WTree& t, const std::map<Site, int>& labels) {
  FreeWord w = wtree_word_gen(t, labels);
  return t.side == HeadSide::Left ? w.inverse() : w;
}

GroupPresentation wirtinger(const Presentation& p) {
  require_valid(p);
  GroupPresentation gp;

  // Heads per strand, sorted by position.
  std::map<int, std::vector<std::pair<int, int>>> heads;  // strand -> (pos, tree)
  for (size_t t = 0; t < p.trees.size(); ++t)
    heads[p.trees[t].head.strand].push_back({p.trees[t].head.pos, static_cast<int>(t)});
  for (auto& [sid, v] : heads) std::sort(v.begin(), v.end());

  // Arc generators. An open strand with h heads carries h+1 arcs; a closed one
  // carries max(h, 1) arcs, cyclically, with the basepoint inside arc h-1.
  std::map<int, int> strand_sites;
  for (const auto& t : p.trees)
    for (Site s : t.endpoint_sites()) strand_sites[s.strand]++;
  auto arc_index = [&](const StrandInfo& s, int pos) {
    int before = 0;
    for (const auto& [hpos, tree] : heads[s.id])
      if (hpos <= pos) ++before;
    if (s.kind == StrandKind::Open) return before;
    int h = static_cast<int>(heads[s.id].size());
    return h == 0 ? 0 : before % h;
  };
  std::map<int, int> first_gen;  // strand -> generator id of arc 0
  for (const auto& s : p.diagram.strands) {
    int h = static_cast<int>(heads[s.id].size());
    int arcs = s.kind == StrandKind::Open ? h + 1 : std::max(h, 1);
    first_gen[s.id] = static_cast<int>(gp.generators.size());
    for (int a = 0; a < arcs; ++a) gp.generators.push_back({s.id, a});
    if (s.kind == StrandKind::Open)
      gp.meridians[s.id] = {first_gen[s.id], first_gen[s.id] + h};
    int m = strand_sites.count(s.id) ? strand_sites[s.id] : 0;
    auto& per_pos = gp.arc_of_pos[s.id];
    for (int pos = 0; pos < m; ++pos)
      per_pos.push_back(first_gen[s.id] + arc_index(s, pos));
  }

  // Tail labels read off the arc table.
  std::map<Site, int> labels;
  for (const auto& t : p.trees)
    for (int n : t.leaf_nodes()) {
      Site site = t.nodes[n].site;
      labels[site] = gp.arc_of_pos.at(site.strand).at(site.pos);
    }

  // One relator per tree: u^-1 m_in u m_out^-1.
  gp.relators.resize(p.trees.size());
  gp.head_conjugators.resize(p.trees.size());
  gp.head_in_gen.resize(p.trees.size());
  gp.head_out_gen.resize(p.trees.size());
  for (const auto& [sid, v] : heads) {
    const StrandInfo& s = p.diagram.strands[p.diagram.index_of(sid)];
    int h = static_cast<int>(v.size());
    for (int j = 0; j < h; ++j) {
      int tree = v[j].second;
      int in_arc, out_arc;
      if (s.kind == StrandKind::Open) {
        in_arc = j;
        out_arc = j + 1;
      } else {
        in_arc = j;
        out_arc = (j + 1) % h;
      }
      FreeWord u = effective_head_word(p.trees[tree], labels);
      int m_in = first_gen[sid] + in_arc;
      int m_out = first_gen[sid] + out_arc;
      FreeWord rel = u.conjugate_of(FreeWord::generator(m_in));
      rel.push(m_out, -1);
      gp.relators[tree] = rel;
      gp.head_conjugators[tree] = u;
      gp.head_in_gen[tree] = m_in;
      gp.head_out_gen[tree] = m_out;
    }
  }
  return gp;
}

LaurentPoly fox_phi(const FreeWord& w, int gen) {
  LaurentPoly out;
  int e = 0;  // exponent of phi(prefix)
  for (const Letter& l : w.letters()) {
    if (l.sign > 0) {
      if (l.gen == gen) out.set(e, out.coeff(e) + BigInt(1));
      ++e;
    } else {
      --e;
      if (l.gen == gen) out.set(e, out.coeff(e) - BigInt(1));
    }
  }
  return out;
}

AlexanderResult alexander_normalized(const GroupPresentation& gp) {
  const int m = static_cast<int>(gp.generators.size());
  const int r = static_cast<int>(gp.relators.size());
  if (r != m - 1)
    throw CalcError(ErrorKind::Domain,
                    "not a long-knot presentation: expected one open strand");

  std::vector<std::vector<LaurentPoly>> jac(r, std::vector<LaurentPoly>(m));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m; ++j) jac[i][j] = fox_phi(gp.relators[i], j);

  // The Fox identity makes the Jacobian columns sum to zero once every
  // generator is sent to t, so the delete-one-column minors agree up to sign
  // and the gcd is any nonzero one of them.
  LaurentPoly g;
  for (int drop = 0; drop < m && g.is_zero(); ++drop) {
    std::vector<std::vector<LaurentPoly>> minor(r, std::vector<LaurentPoly>(r));
    for (int i = 0; i < r; ++i) {
      int cc = 0;
      for (int j = 0; j < m; ++j) {
        if (j == drop) continue;
        minor[i][cc++] = jac[i][j];
      }
    }
    g = laurent_det(std::move(minor));
  }

  AlexanderResult out;
  if (g.is_zero()) {
    out.degenerate = true;
    return out;
  }
  BigInt at_one = g.eval_at_one();
  if (at_one == BigInt(-1)) {
    g = -g;
    at_one = BigInt(1);
  }
  if (!(at_one == BigInt(1)))
    throw CalcError(ErrorKind::Domain,
                    "not a long-knot presentation: polynomial value at t=1 is " +
                        at_one.to_string());
  long long d1 = g.derivative_at_one().to_int64();
  out.poly = g.shifted(static_cast<int>(-d1));
  return out;
}

AlexanderResult alexander_normalized(const Presentation& p) {
  if (p.diagram.strands.size() != 1 || p.diagram.strands[0].kind != StrandKind::Open)
    throw CalcError(ErrorKind::Domain,
                    "not a long-knot presentation: expected one open strand");
  return alexander_normalized(wirtinger(p));
}

std::vector<long long> alpha_coeffs(const LaurentPoly& normalized, int kmax) {
  if (kmax < 2) throw CalcError(ErrorKind::Usage, "alpha coefficients need kmax >= 2");
  // substitute t = 1-u, truncate at u^kmax
  std::vector<BigInt> acc(kmax + 1);
  std::vector<BigInt> one_minus_u{BigInt(1), BigInt(-1)};       // 1-u
  std::vector<BigInt> inv(kmax + 1, BigInt(1));                 // (1-u)^-1 = sum u^i
  auto mul = [&](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> out(kmax + 1);
    for (int i = 0; i <= kmax && i < static_cast<int>(a.size()); ++i)
      for (int j = 0; j + i <= kmax && j < static_cast<int>(b.size()); ++j)
        out[i + j] += a[i] * b[j];
    return out;
  };
  for (const auto& [e, c] : normalized.terms()) {
    std::vector<BigInt> pw(kmax + 1);
    pw[0] = BigInt(1);
    const std::vector<BigInt>& base = e >= 0 ? one_minus_u : inv;
    for (int i = 0; i < std::abs(e); ++i) pw = mul(pw, base);
    for (int i = 0; i <= kmax; ++i) acc[i] += c * pw[i];
  }
  if (!(acc[0] == BigInt(1)) || !acc[1].is_zero())
    throw CalcError(ErrorKind::Domain, "polynomial is not normalized");
  std::vector<long long> out;
  for (int k = 2; k <= kmax; ++k) out.push_back(acc[k].to_int64());
  return out;
}

}  // namespace warrow
