#include "model.hpp"

#include <algorithm>
#include <set>

namespace warrow {

int StrandDiagram::index_of(int strand_id) const {
  for (size_t i = 0; i < strands.size(); ++i)
    if (strands[i].id == strand_id) return static_cast<int>(i);
  return -1;
}

bool StrandDiagram::is_string_link() const {
  for (const auto& s : strands)
    if (s.kind != StrandKind::Open) return false;
  return !strands.empty();
}

StrandDiagram StrandDiagram::string_link(int n) {
  StrandDiagram d;
  for (int i = 0; i < n; ++i) d.strands.push_back({i, StrandKind::Open});
  return d;
}

StrandDiagram StrandDiagram::closed_knot() {
  StrandDiagram d;
  d.strands.push_back({0, StrandKind::Closed});
  return d;
}

WTree WTree::arrow(Site tail, Site head, bool twist, HeadSide side) {
  WTree t;
  t.head = head;
  t.side = side;
  WTreeNode leaf;
  leaf.site = tail;
  leaf.twist = twist;
  t.nodes.push_back(leaf);
  t.root = 0;
  return t;
}

int WTree::degree() const { return static_cast<int>(leaf_nodes().size()); }

std::vector<int> WTree::leaf_nodes() const {
  std::vector<int> out;
  std::vector<int> stack{root};
  // explicit stack, planar order: first subtree fully before second
  while (!stack.empty()) {
    int n = stack.back();
    stack.pop_back();
    const WTreeNode& node = nodes[n];
    if (node.is_leaf()) {
      out.push_back(n);
    } else {
      stack.push_back(node.second);
      stack.push_back(node.first);
    }
  }
  return out;
}

std::vector<Site> WTree::endpoint_sites() const {
  std::vector<Site> out;
  for (int n : leaf_nodes()) out.push_back(nodes[n].site);
  out.push_back(head);
  return out;
}

int WTree::node_at_path(const std::string& path) const {
  int n = root;
  for (char c : path) {
    const WTreeNode& node = nodes[n];
    if (node.is_leaf()) throw CalcError(ErrorKind::Usage, "node path descends into a leaf");
    if (c == 'L')
      n = node.first;
    else if (c == 'R')
      n = node.second;
    else
      throw CalcError(ErrorKind::Usage, "node path must use characters L and R");
  }
  return n;
}

std::string WTree::path_of(int target) const {
  std::string out;
  std::vector<std::pair<int, std::string>> stack{{root, ""}};
  while (!stack.empty()) {
    auto [n, path] = stack.back();
    stack.pop_back();
    if (n == target) return path;
    const WTreeNode& node = nodes[n];
    if (!node.is_leaf()) {
      stack.push_back({node.first, path + "L"});
      stack.push_back({node.second, path + "R"});
    }
  }
  throw CalcError(ErrorKind::Usage, "node not present in tree");
}

namespace {
bool parallel_nodes(const WTree& a, int na, const WTree& b, int nb, bool flip_here) {
  const WTreeNode& x = a.nodes[na];
  const WTreeNode& y = b.nodes[nb];
  if (x.is_leaf() != y.is_leaf()) return false;
  bool twist_ok = flip_here ? x.twist != y.twist : x.twist == y.twist;
  if (!twist_ok) return false;
  if (x.is_leaf()) return true;
  return parallel_nodes(a, x.first, b, y.first, false) &&
         parallel_nodes(a, x.second, b, y.second, false);
}
}  // namespace

bool WTree::parallel_to(const WTree& other, bool root_parity_flipped) const {
  bool flip_here = root_parity_flipped;
  if (side != other.side) flip_here = !flip_here;  // a side change is one twist
  return parallel_nodes(*this, root, other, other.root, flip_here);
}

int GaussCode::crossing_count() const { return static_cast<int>(crossing_ids().size()); }

std::vector<int> GaussCode::crossing_ids() const {
  std::set<int> ids;
  for (const auto& strand : passages)
    for (const auto& p : strand) ids.insert(p.crossing);
  return {ids.begin(), ids.end()};
}

EndpointOrder endpoint_order(const Presentation& p) {
  EndpointOrder out;
  for (const auto& s : p.diagram.strands) out[s.id];
  for (size_t t = 0; t < p.trees.size(); ++t) {
    const WTree& tree = p.trees[t];
    out[tree.head.strand].push_back({tree.head.pos, {static_cast<int>(t), -1}});
    for (int n : tree.leaf_nodes())
      out[tree.nodes[n].site.strand].push_back(
          {tree.nodes[n].site.pos, {static_cast<int>(t), n}});
  }
  for (auto& [sid, v] : out)
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

const Site& site_of(const Presentation& p, const EndpointRef& ref) {
  const WTree& t = p.trees.at(ref.tree);
  return ref.is_head() ? t.head : t.nodes.at(ref.node).site;
}

Site& site_of(Presentation& p, EndpointRef ref) {
  WTree& t = p.trees.at(ref.tree);
  return ref.is_head() ? t.head : t.nodes.at(ref.node).site;
}

std::vector<std::string> validate(const Presentation& p) {
  std::vector<std::string> out;
  std::set<int> ids;
  for (const auto& s : p.diagram.strands) {
    if (!ids.insert(s.id).second)
      out.push_back("duplicate strand id " + std::to_string(s.id));
  }
  for (size_t t = 0; t < p.trees.size(); ++t) {
    const WTree& tree = p.trees[t];
    if (tree.nodes.empty()) {
      out.push_back("tree " + std::to_string(t) + ": empty node pool");
      continue;
    }
    if (tree.root < 0 || tree.root >= static_cast<int>(tree.nodes.size())) {
      out.push_back("tree " + std::to_string(t) + ": root out of range");
      continue;
    }
    for (Site s : tree.endpoint_sites()) {
      if (ids.find(s.strand) == ids.end())
        out.push_back("tree " + std::to_string(t) + ": site on unknown strand " +
                      std::to_string(s.strand));
    }
  }
  // site collisions and density
  std::map<int, std::vector<int>> positions;
  for (size_t t = 0; t < p.trees.size(); ++t)
    for (Site s : p.trees[t].endpoint_sites())
      if (ids.count(s.strand)) positions[s.strand].push_back(s.pos);
  for (auto& [sid, v] : positions) {
    std::sort(v.begin(), v.end());
    for (size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] == v[i + 1]) {
        out.push_back("site collision at strand " + std::to_string(sid) + " pos " +
                      std::to_string(v[i]));
        return out;  // density report would only repeat the problem
      }
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != static_cast<int>(i)) {
        out.push_back("strand " + std::to_string(sid) +
                      ": site positions not dense 0.." + std::to_string(v.size() - 1));
        break;
      }
  }
  return out;
}

std::vector<std::string> validate(const GaussCode& g) {
  std::vector<std::string> out;
  if (g.strands.size() != g.passages.size()) {
    out.push_back("strand/passage list size mismatch");
    return out;
  }
  std::set<int> ids;
  for (const auto& s : g.strands)
    if (!ids.insert(s.id).second)
      out.push_back("duplicate strand id " + std::to_string(s.id));
  std::map<int, std::vector<Passage>> seen;
  for (const auto& strand : g.passages)
    for (const auto& pa : strand) {
      if (pa.sign != 1 && pa.sign != -1)
        out.push_back("crossing " + std::to_string(pa.crossing) + ": sign must be +1 or -1");
      seen[pa.crossing].push_back(pa);
    }
  for (const auto& [id, v] : seen) {
    if (v.size() != 2) {
      out.push_back("crossing " + std::to_string(id) + ": appears " +
                    std::to_string(v.size()) + " times, expected 2");
      continue;
    }
    if (v[0].over == v[1].over)
      out.push_back("crossing " + std::to_string(id) + ": needs one over and one under passage");
    if (v[0].sign != v[1].sign)
      out.push_back("crossing " + std::to_string(id) + ": passage signs disagree");
  }
  return out;
}

void require_valid(const Presentation& p) {
  auto v = validate(p);
  if (!v.empty()) throw CalcError(ErrorKind::Domain, "invalid presentation: " + v.front());
}

void require_valid(const GaussCode& g) {
  auto v = validate(g);
  if (!v.empty()) throw CalcError(ErrorKind::Domain, "invalid Gauss code: " + v.front());
}

Presentation canonical_arrow_presentation(const GaussCode& g) {
  require_valid(g);
  Presentation out;
  out.diagram.strands = g.strands;
  std::map<int, Site> over_site, under_site;
  std::map<int, int> sign;
  for (size_t si = 0; si < g.passages.size(); ++si) {
    const int sid = g.strands[si].id;
    for (size_t k = 0; k < g.passages[si].size(); ++k) {
      const Passage& pa = g.passages[si][k];
      Site site{sid, static_cast<int>(k)};
      (pa.over ? over_site : under_site)[pa.crossing] = site;
      sign[pa.crossing] = pa.sign;
    }
  }
  for (const auto& [id, tail] : over_site) {
    auto it = under_site.find(id);
    if (it == under_site.end())
      throw CalcError(ErrorKind::Domain, "crossing " + std::to_string(id) + " unpaired");
    out.trees.push_back(WTree::arrow(tail, it->second, sign[id] < 0, HeadSide::Right));
  }
  return out;
}

int arrow_sign(const WTree& arrow) {
  if (arrow.degree() != 1)
    throw CalcError(ErrorKind::Domain, "expand first: tree of degree >= 2 present");
  bool minus = arrow.nodes[arrow.root].twist;
  if (arrow.side == HeadSide::Left) minus = !minus;
  return minus ? -1 : 1;
}

std::vector<SignedArrow> to_signed_arrows(const Presentation& p) {
  std::vector<SignedArrow> out;
  for (const WTree& t : p.trees) {
    if (t.degree() != 1)
      throw CalcError(ErrorKind::Domain, "expand first: tree of degree >= 2 present");
    out.push_back({t.nodes[t.root].site, t.head, arrow_sign(t)});
  }
  std::sort(out.begin(), out.end(),
            [](const SignedArrow& a, const SignedArrow& b) { return a.head < b.head; });
  return out;
}

Presentation normalize_sides(const Presentation& p) {
  Presentation out = p;
  for (WTree& t : out.trees) {
    if (t.side == HeadSide::Left) {
      t.side = HeadSide::Right;
      t.nodes[t.root].twist = !t.nodes[t.root].twist;
    }
  }
  return out;
}

Presentation rotate_basepoint(const Presentation& p, int strand_id, int delta) {
  int idx = p.diagram.index_of(strand_id);
  if (idx < 0) throw CalcError(ErrorKind::Usage, "unknown strand " + std::to_string(strand_id));
  if (p.diagram.strands[idx].kind != StrandKind::Closed)
    throw CalcError(ErrorKind::Usage, "basepoint rotation applies to closed strands");
  Presentation out = p;
  int m = 0;
  for (const auto& t : p.trees)
    for (Site s : t.endpoint_sites())
      if (s.strand == strand_id) ++m;
  if (m == 0) return out;
  auto rot = [&](Site& s) {
    if (s.strand == strand_id) s.pos = ((s.pos - delta) % m + m) % m;
  };
  for (WTree& t : out.trees) {
    rot(t.head);
    for (auto& n : t.nodes)
      if (n.is_leaf()) rot(n.site);
  }
  return out;
}

void scale_positions(Presentation& p, int factor) {
  for (WTree& t : p.trees) {
    t.head.pos *= factor;
    for (auto& n : t.nodes)
      if (n.is_leaf()) n.site.pos *= factor;
  }
}

std::map<Site, int> renumber_sites(Presentation& p) {
  std::map<Site, int> relabel;
  EndpointOrder order = endpoint_order(p);
  for (auto& [sid, v] : order) {
    for (size_t i = 0; i < v.size(); ++i) {
      relabel[{sid, v[i].first}] = static_cast<int>(i);
      site_of(p, v[i].second).pos = static_cast<int>(i);
    }
  }
  return relabel;
}

}  // namespace warrow
