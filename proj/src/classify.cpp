#include "classify.hpp"

#include <algorithm>
#include <functional>

namespace warrow {

Presentation make_Lk(int k, bool inverted) {
  if (k < 2) throw CalcError(ErrorKind::Usage, "generator needs k >= 2");
  Presentation p;
  p.diagram = StrandDiagram::string_link(1);
  // Left comb [[..[x, y']..], y'] on one strand: the plain leaf before the
  // head, the k-1 twisted leaves after it. The terminal twist selects the
  // variant with polynomial 1 + (1-t)^k.
  WTree t;
  t.head = {0, 1};
  t.side = HeadSide::Right;
  WTreeNode first_leaf;
  first_leaf.site = {0, 0};
  t.nodes.push_back(first_leaf);
  int acc = 0;
  for (int j = 1; j < k; ++j) {
    WTreeNode leaf;
    leaf.site = {0, j + 1};
    leaf.twist = true;
    t.nodes.push_back(leaf);
    int leaf_idx = static_cast<int>(t.nodes.size()) - 1;
    WTreeNode v;
    v.first = acc;
    v.second = leaf_idx;
    t.nodes.push_back(v);
    acc = static_cast<int>(t.nodes.size()) - 1;
  }
  t.root = acc;
  t.nodes[t.root].twist = !inverted;
  p.trees.push_back(std::move(t));
  return p;
}

Presentation make_TI(const std::vector<int>& seq, int n, bool inverted) {
  const int m = static_cast<int>(seq.size());
  if (m < 2) throw CalcError(ErrorKind::Usage, "sequence needs length >= 2");
  std::vector<bool> used(n + 1, false);
  for (int i : seq) {
    if (i < 1 || i > n) throw CalcError(ErrorKind::Usage, "index out of range in sequence");
    if (used[i]) throw CalcError(ErrorKind::Usage, "repeated index in sequence");
    used[i] = true;
  }
  Presentation p;
  p.diagram = StrandDiagram::string_link(n);
  WTree t;
  t.head = {seq[m - 1] - 1, 0};
  t.side = HeadSide::Right;
  if (m == 2) {
    WTreeNode leaf;
    leaf.site = {seq[0] - 1, 0};
    leaf.twist = inverted;
    t.nodes.push_back(leaf);
    t.root = 0;
    p.trees.push_back(std::move(t));
    return p;
  }
  // Right comb realizing [i1, [i2, ... [i_{m-2}, i_{m-1}^-1]^-1 ...]^-1].
  WTreeNode last;
  last.site = {seq[m - 2] - 1, 0};
  last.twist = true;
  t.nodes.push_back(last);
  int acc = 0;
  for (int j = m - 3; j >= 0; --j) {
    if (j < m - 3) t.nodes[acc].twist = !t.nodes[acc].twist;  // invert the inner bracket
    WTreeNode leaf;
    leaf.site = {seq[j] - 1, 0};
    t.nodes.push_back(leaf);
    int leaf_idx = static_cast<int>(t.nodes.size()) - 1;
    WTreeNode v;
    v.first = leaf_idx;
    v.second = acc;
    t.nodes.push_back(v);
    acc = static_cast<int>(t.nodes.size()) - 1;
  }
  t.root = acc;
  t.nodes[t.root].twist = inverted;
  p.trees.push_back(std::move(t));
  return p;
}

Presentation concat(const Presentation& p, const Presentation& q) {
  if (p.diagram.strands.size() != q.diagram.strands.size())
    throw CalcError(ErrorKind::Domain, "concatenation needs equal component counts");
  if (!p.diagram.is_string_link() || !q.diagram.is_string_link())
    throw CalcError(ErrorKind::Domain, "concatenation needs open strands");
  std::map<int, int> shift;
  for (size_t i = 0; i < p.diagram.strands.size(); ++i) {
    int sid = p.diagram.strands[i].id;
    if (q.diagram.strands[i].id != sid)
      throw CalcError(ErrorKind::Domain, "concatenation needs matching strand ids");
    int m = 0;
    for (const auto& t : p.trees)
      for (Site s : t.endpoint_sites())
        if (s.strand == sid) ++m;
    shift[sid] = m;
  }
  Presentation out = p;
  for (WTree t : q.trees) {
    t.head.pos += shift[t.head.strand];
    for (auto& n : t.nodes)
      if (n.is_leaf()) n.site.pos += shift[n.site.strand];
    out.trees.push_back(std::move(t));
  }
  return out;
}

namespace {

Presentation trivial_link(int strands) {
  Presentation p;
  p.diagram = StrandDiagram::string_link(strands);
  return p;
}

Presentation lk_power(int k, long long e) {
  Presentation acc = trivial_link(1);
  for (long long i = 0; i < std::llabs(e); ++i) acc = concat(acc, make_Lk(k, e < 0));
  return acc;
}

}  // namespace

LongKnotNormalForm wk_normal_form(const Presentation& p, int k) {
  if (k < 2) throw CalcError(ErrorKind::Usage, "normal form needs k >= 2");
  AlexanderResult alex = alexander_normalized(p);
  if (alex.degenerate)
    throw CalcError(ErrorKind::Domain, "degenerate Alexander polynomial");
  std::vector<long long> alpha = alpha_coeffs(alex.poly, k);

  LongKnotNormalForm out;
  out.k = k;
  // Exact polynomial of the accumulated product of generators.
  LaurentPoly prod(1);
  LaurentPoly one_minus_t = LaurentPoly(1) - LaurentPoly::term(1, 1);
  for (int i = 2; i <= k; ++i) {
    long long xi = alpha[i - 2] - alpha_coeffs(prod, k)[i - 2];
    out.exponents.push_back(xi);
    LaurentPoly gen = xi >= 0 ? LaurentPoly(1) + one_minus_t.pow(i)
                              : LaurentPoly(1) - one_minus_t.pow(i);
    for (long long j = 0; j < std::llabs(xi); ++j) prod *= gen;
  }
  Presentation rep = trivial_link(1);
  for (int i = 2; i <= k; ++i) rep = concat(rep, lk_power(i, out.exponents[i - 2]));
  out.representative = std::move(rep);
  return out;
}

WkDecision decide_wk(const Presentation& p, const Presentation& q, int k, bool include_top) {
  if (k < 2) throw CalcError(ErrorKind::Usage, "comparison needs k >= 2");
  int top = include_top ? k : k - 1;
  WkDecision out;
  out.equal = true;
  if (top < 2) return out;
  AlexanderResult ap = alexander_normalized(p);
  AlexanderResult aq = alexander_normalized(q);
  if (ap.degenerate || aq.degenerate)
    throw CalcError(ErrorKind::Domain, "degenerate Alexander polynomial");
  std::vector<long long> a = alpha_coeffs(ap.poly, top);
  std::vector<long long> b = alpha_coeffs(aq.poly, top);
  for (int i = 2; i <= top; ++i) {
    if (a[i - 2] != b[i - 2]) {
      out.equal = false;
      out.witness = i;
      return out;
    }
  }
  return out;
}

Presentation homotopy_reduce(const Presentation& p) {
  require_valid(p);
  Presentation out;
  out.diagram = p.diagram;
  for (const WTree& t : p.trees) {
    std::map<int, int> per_strand;
    for (Site s : t.endpoint_sites()) per_strand[s.strand]++;
    bool repeated = false;
    for (auto& [sid, cnt] : per_strand)
      if (cnt >= 2) repeated = true;
    if (!repeated) out.trees.push_back(t);
  }
  scale_positions(out);
  renumber_sites(out);
  return out;
}

namespace {

// Sequences of `len` distinct indices from 1..n avoiding `i`, whose last entry
// is the maximum, in lexicographic order.
std::vector<std::vector<int>> index_sequences(int n, int i, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> seq;
  std::vector<bool> used(n + 1, false);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(seq.size()) == len) {
      for (int j = 0; j + 1 < len; ++j)
        if (seq[j] > seq[len - 1]) return;
      out.push_back(seq);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (v == i || used[v]) continue;
      used[v] = true;
      seq.push_back(v);
      rec();
      seq.pop_back();
      used[v] = false;
    }
  };
  rec();
  return out;
}

}  // namespace

StringLinkNormalForm homotopy_normal_form(const Presentation& p) {
  require_valid(p);
  if (!p.diagram.is_string_link())
    throw CalcError(ErrorKind::Domain, "homotopy normal form needs a string link");
  const int n = static_cast<int>(p.diagram.strands.size());
  StringLinkNormalForm out;
  out.n = n;
  Presentation rep = trivial_link(n);
  for (int len = 1; len <= n - 1; ++len) {
    // layer len: generators indexed by sequences I i with |I| = len
    Presentation layer = trivial_link(n);
    for (int i = 1; i <= n; ++i) {
      for (const auto& I : index_sequences(n, i, len)) {
        std::vector<int> full = I;
        full.push_back(i);
        long long x = milnor_mu(p, full);
        if (len > 1) x -= milnor_mu(rep, full);
        out.exponents[sequence_key(full)] = x;
        for (long long j = 0; j < std::llabs(x); ++j)
          layer = concat(layer, make_TI(full, n, x < 0));
      }
    }
    rep = concat(rep, layer);
  }
  out.representative = std::move(rep);
  return out;
}

HomotopyDecision decide_homotopy(const Presentation& p, const Presentation& q) {
  if (p.diagram.strands.size() != q.diagram.strands.size())
    throw CalcError(ErrorKind::Domain, "component counts differ");
  const int n = static_cast<int>(p.diagram.strands.size());
  auto mp = milnor_all_nonrepeated(p, n);
  auto mq = milnor_all_nonrepeated(q, n);
  HomotopyDecision out;
  out.equal = true;
  for (const auto& [key, v] : mp) {
    auto it = mq.find(key);
    long long w = it == mq.end() ? 0 : it->second;
    if (v != w) {
      out.equal = false;
      out.witness = key;
      return out;
    }
  }
  return out;
}

}  // namespace warrow
