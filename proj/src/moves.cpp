#include "moves.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace warrow {

bool move_kind_is_exact(MoveKind k) {
  switch (k) {
    case MoveKind::TwistPastVertex:
    case MoveKind::IHX:
    case MoveKind::SelfArrowDelete:
    case MoveKind::RepeatedTreeDelete:
      return false;
    case MoveKind::HeadTailExchange:
      return true;  // exact for a w-arrow tail; truncated otherwise
    default:
      return true;
  }
}

std::string move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::TailsExchange: return "TailsExchange";
    case MoveKind::IsolatedArrow: return "IsolatedArrow";
    case MoveKind::InversePairDelete: return "InversePairDelete";
    case MoveKind::InversePairInsert: return "InversePairInsert";
    case MoveKind::Slide: return "Slide";
    case MoveKind::HeadTraversal: return "HeadTraversal";
    case MoveKind::HeadsExchange: return "HeadsExchange";
    case MoveKind::HeadTailExchange: return "HeadTailExchange";
    case MoveKind::Antisymmetry: return "Antisymmetry";
    case MoveKind::Fork: return "Fork";
    case MoveKind::TwistPastVertex: return "TwistPastVertex";
    case MoveKind::IHX: return "IHX";
    case MoveKind::SelfArrowDelete: return "SelfArrowDelete";
    case MoveKind::RepeatedTreeDelete: return "RepeatedTreeDelete";
  }
  return "?";
}

MoveKind move_kind_from_name(const std::string& name) {
  static const std::vector<MoveKind> all = {
      MoveKind::TailsExchange,   MoveKind::IsolatedArrow,  MoveKind::InversePairDelete,
      MoveKind::InversePairInsert, MoveKind::Slide,        MoveKind::HeadTraversal,
      MoveKind::HeadsExchange,   MoveKind::HeadTailExchange, MoveKind::Antisymmetry,
      MoveKind::Fork,            MoveKind::TwistPastVertex, MoveKind::IHX,
      MoveKind::SelfArrowDelete, MoveKind::RepeatedTreeDelete};
  for (MoveKind k : all)
    if (move_kind_name(k) == name) return k;
  throw CalcError(ErrorKind::Usage, "unknown move kind '" + name + "'");
}

Json MoveSpec::to_json() const {
  Json j;
  j["kind"] = move_kind_name(kind);
  if (strand >= 0) j["strand"] = strand;
  if (pos >= 0) j["pos"] = pos;
  if (tree >= 0) j["tree"] = tree;
  if (tree2 >= 0) j["tree2"] = tree2;
  if (!path.empty() || kind == MoveKind::Antisymmetry || kind == MoveKind::Fork ||
      kind == MoveKind::TwistPastVertex || kind == MoveKind::IHX)
    j["path"] = path;
  if (kind == MoveKind::HeadTraversal) j["direction"] = direction;
  if (truncation_degree) j["truncation_degree"] = *truncation_degree;
  if (payload) {
    Presentation tmp;
    tmp.trees.push_back(*payload);
    j["payload"] = presentation_to_json(tmp)["trees"][0];
  }
  return j;
}

MoveSpec MoveSpec::from_json(const Json& j) {
  MoveSpec m;
  m.kind = move_kind_from_name(j.value("kind", ""));
  m.strand = j.value("strand", -1);
  m.pos = j.value("pos", -1);
  m.tree = j.value("tree", -1);
  m.tree2 = j.value("tree2", -1);
  m.path = j.value("path", "");
  m.direction = j.value("direction", 1);
  if (j.contains("truncation_degree")) m.truncation_degree = j["truncation_degree"].get<int>();
  if (j.contains("payload")) {
    Json wrap;
    wrap["type"] = "presentation";
    wrap["strands"] = Json::array();
    wrap["trees"] = Json::array({j["payload"]});
    m.payload = presentation_from_json(wrap).trees.at(0);
  }
  return m;
}

namespace {

struct Ctx {
  const Presentation& p;
  EndpointOrder order;
};

std::optional<EndpointRef> ref_at(const Ctx& c, int strand, int pos) {
  auto it = c.order.find(strand);
  if (it == c.order.end()) return std::nullopt;
  for (const auto& [q, ref] : it->second)
    if (q == pos) return ref;
  return std::nullopt;
}

bool adjacent_sites(const Site& a, const Site& b) {
  return a.strand == b.strand && std::abs(a.pos - b.pos) == 1;
}

Applicability no(const std::string& reason) { return {false, reason}; }
Applicability yes() { return {true, ""}; }

Applicability check_tree_index(const Presentation& p, int t) {
  if (t < 0 || t >= static_cast<int>(p.trees.size())) return no("tree index out of range");
  return yes();
}

// Pairwise adjacency of corresponding leaves plus adjacent heads.
Applicability check_parallel_pair(const Presentation& p, int t1, int t2,
                                  bool require_flip, bool allow_same_parity) {
  auto a = check_tree_index(p, t1);
  if (!a.ok) return a;
  a = check_tree_index(p, t2);
  if (!a.ok) return a;
  if (t1 == t2) return no("needs two distinct trees");
  const WTree& x = p.trees[t1];
  const WTree& y = p.trees[t2];
  bool flipped = x.parallel_to(y, true);
  bool same = x.parallel_to(y, false);
  if (require_flip && !flipped) return no("trees do not differ by a terminal twist");
  if (!require_flip && !flipped && !(allow_same_parity && same))
    return no("trees are not parallel");
  if (!adjacent_sites(x.head, y.head)) return no("heads not adjacent");
  auto lx = x.leaf_nodes();
  auto ly = y.leaf_nodes();
  if (lx.size() != ly.size()) return no("trees are not parallel");
  for (size_t i = 0; i < lx.size(); ++i)
    if (!adjacent_sites(x.nodes[lx[i]].site, y.nodes[ly[i]].site))
      return no("tail pair not adjacent");
  return yes();
}

// Copies the subtree under src_node into dst; leaf sites shifted by `offset`
// working units; extra_root_twist flips the copied root's bit.
int copy_core(const WTree& src, int src_node, WTree& dst, int offset, bool extra_root_twist) {
  const WTreeNode& n = src.nodes[src_node];
  WTreeNode copy;
  copy.twist = n.twist;
  if (n.is_leaf()) {
    copy.site = n.site;
    copy.site.pos += offset;
  } else {
    copy.first = copy_core(src, n.first, dst, offset, false);
    copy.second = copy_core(src, n.second, dst, offset, false);
  }
  if (extra_root_twist) copy.twist = !copy.twist;
  dst.nodes.push_back(copy);
  return static_cast<int>(dst.nodes.size()) - 1;
}

// Core copy realizing the effective head word u of `src` (side folded in).
int copy_core_u(const WTree& src, WTree& dst, int offset, bool inverted) {
  bool flip = src.side == HeadSide::Left ? !inverted : inverted;
  return copy_core(src, src.root, dst, offset, flip);
}

// Deletes trees by index and re-densifies.
Presentation drop_trees(const Presentation& p, std::set<int> victims) {
  Presentation out;
  out.diagram = p.diagram;
  for (int i = 0; i < static_cast<int>(p.trees.size()); ++i)
    if (!victims.count(i)) out.trees.push_back(p.trees[i]);
  scale_positions(out);
  renumber_sites(out);
  return out;
}

int tree_index_of_head_at(const Ctx& c, int strand, int pos, const char* what) {
  auto ref = ref_at(c, strand, pos);
  if (!ref || !ref->is_head())
    throw CalcError(ErrorKind::Domain, std::string(what) + ": expected a head");
  return ref->tree;
}

Applicability applicable_impl(const Presentation& p, const MoveSpec& m, const Ctx& c) {
  if (m.truncation_degree && m.kind != MoveKind::TwistPastVertex &&
      m.kind != MoveKind::IHX && m.kind != MoveKind::HeadTailExchange)
    return no("exact move kinds take no truncation_degree");
  switch (m.kind) {
    case MoveKind::TailsExchange: {
      auto a = ref_at(c, m.strand, m.pos);
      auto b = ref_at(c, m.strand, m.pos + 1);
      if (!a || !b) return no("no endpoint pair at that position");
      if (a->is_head() || b->is_head()) return no("both endpoints must be tails");
      return yes();
    }
    case MoveKind::IsolatedArrow: {
      auto chk = check_tree_index(p, m.tree);
      if (!chk.ok) return chk;
      const WTree& t = p.trees[m.tree];
      if (t.degree() != 1) return no("not a w-arrow");
      if (!adjacent_sites(t.head, t.nodes[t.root].site)) return no("endpoints not adjacent");
      return yes();
    }
    case MoveKind::InversePairDelete:
      return check_parallel_pair(p, m.tree, m.tree2, true, false);
    case MoveKind::InversePairInsert: {
      if (!m.payload) return no("missing payload tree");
      const WTree& t = *m.payload;
      std::map<int, int> limit;
      for (const auto& s : p.diagram.strands) limit[s.id] = 0;
      for (const auto& tr : p.trees)
        for (Site s : tr.endpoint_sites()) limit[s.strand]++;
      for (Site s : t.endpoint_sites()) {
        auto it = limit.find(s.strand);
        if (it == limit.end()) return no("payload site on unknown strand");
        if (s.pos < 0 || s.pos > it->second) return no("payload slot out of range");
      }
      return yes();
    }
    case MoveKind::Slide:
      return check_parallel_pair(p, m.tree, m.tree2, false, true);
    case MoveKind::HeadTraversal: {
      auto chk = check_tree_index(p, m.tree);
      if (!chk.ok) return chk;
      if (m.direction != 1 && m.direction != -1) return no("direction must be +1 or -1");
      const WTree& t = p.trees[m.tree];
      const int s = t.head.strand;
      const int start = t.head.pos + m.direction;
      if (!ref_at(c, s, start)) return no("no block adjacent to the head");
      // close the interval under whole-tree membership
      int lo = start, hi = start;
      for (;;) {
        bool grew = false;
        std::set<int> members;
        for (const auto& [q, ref] : c.order.at(s))
          if (q >= lo && q <= hi) members.insert(ref.tree);
        for (int bt : members) {
          if (bt == m.tree) return no("block touches the moving tree");
          for (Site site : p.trees[bt].endpoint_sites()) {
            if (site.strand != s) return no("block not isolated: endpoint on another strand");
            if (site.pos < lo) {
              lo = site.pos;
              grew = true;
            }
            if (site.pos > hi) {
              hi = site.pos;
              grew = true;
            }
          }
        }
        if (lo <= t.head.pos && t.head.pos <= hi) return no("block surrounds the head");
        if (!grew) break;
      }
      return yes();
    }
    case MoveKind::HeadsExchange: {
      auto a = ref_at(c, m.strand, m.pos);
      auto b = ref_at(c, m.strand, m.pos + 1);
      if (!a || !b) return no("no endpoint pair at that position");
      if (!a->is_head() || !b->is_head()) return no("both endpoints must be heads");
      if (a->tree == b->tree) return no("heads belong to one tree");
      return yes();
    }
    case MoveKind::HeadTailExchange: {
      auto a = ref_at(c, m.strand, m.pos);
      auto b = ref_at(c, m.strand, m.pos + 1);
      if (!a || !b) return no("no endpoint pair at that position");
      if (a->is_head() == b->is_head()) return no("needs one head and one tail");
      const EndpointRef& head = a->is_head() ? *a : *b;
      const EndpointRef& tail = a->is_head() ? *b : *a;
      if (head.tree == tail.tree) return no("endpoints belong to one tree");
      int kw = p.trees[head.tree].degree();
      int kw2 = p.trees[tail.tree].degree();
      if (kw2 >= 2) {
        if (!m.truncation_degree)
          return no("tail of a tree of degree >= 2 needs truncation_degree");
        if (*m.truncation_degree < 1 || *m.truncation_degree > kw + kw2)
          return no("truncation_degree exceeds the natural bound " +
                    std::to_string(kw + kw2));
      }
      return yes();
    }
    case MoveKind::Antisymmetry: {
      auto chk = check_tree_index(p, m.tree);
      if (!chk.ok) return chk;
      int n = p.trees[m.tree].node_at_path(m.path);
      if (p.trees[m.tree].nodes[n].is_leaf()) return no("path must address a vertex");
      return yes();
    }
    case MoveKind::Fork: {
      auto chk = check_tree_index(p, m.tree);
      if (!chk.ok) return chk;
      const WTree& t = p.trees[m.tree];
      int n = t.node_at_path(m.path);
      const WTreeNode& node = t.nodes[n];
      if (node.is_leaf()) return no("path must address a vertex");
      const WTreeNode& f = t.nodes[node.first];
      const WTreeNode& s = t.nodes[node.second];
      if (!f.is_leaf() || !s.is_leaf()) return no("fork needs two leaf children");
      if (!adjacent_sites(f.site, s.site)) return no("not adjacent");
      return yes();
    }
    case MoveKind::TwistPastVertex: {
      auto chk = check_tree_index(p, m.tree);
      if (!chk.ok) return chk;
      if (m.path.empty()) return no("path must address a non-root edge");
      if (!m.truncation_degree) return no("needs truncation_degree");
      int deg = p.trees[m.tree].degree();
      if (*m.truncation_degree < 1 || *m.truncation_degree > deg)
        return no("truncation_degree exceeds the tree degree " + std::to_string(deg));
      p.trees[m.tree].node_at_path(m.path);  // throws on a bad path
      return yes();
    }
    case MoveKind::IHX: {
      auto chk = check_tree_index(p, m.tree);
      if (!chk.ok) return chk;
      const WTree& t = p.trees[m.tree];
      int n = t.node_at_path(m.path);
      const WTreeNode& node = t.nodes[n];
      if (node.is_leaf()) return no("path must address a vertex");
      const WTreeNode& s = t.nodes[node.second];
      if (s.is_leaf()) return no("second subtree must be a vertex");
      if (s.twist) return no("second edge carries a twist; move it across first");
      if (!m.truncation_degree) return no("needs truncation_degree");
      int deg = t.degree();
      if (*m.truncation_degree < 1 || *m.truncation_degree > deg)
        return no("truncation_degree exceeds the tree degree " + std::to_string(deg));
      return yes();
    }
    case MoveKind::SelfArrowDelete: {
      auto chk = check_tree_index(p, m.tree);
      if (!chk.ok) return chk;
      const WTree& t = p.trees[m.tree];
      if (t.degree() != 1) return no("not a w-arrow");
      if (t.head.strand != t.nodes[t.root].site.strand)
        return no("endpoints on distinct components");
      return yes();
    }
    case MoveKind::RepeatedTreeDelete: {
      auto chk = check_tree_index(p, m.tree);
      if (!chk.ok) return chk;
      std::map<int, int> per_strand;
      for (Site s : p.trees[m.tree].endpoint_sites()) per_strand[s.strand]++;
      for (auto& [sid, cnt] : per_strand)
        if (cnt >= 2) return yes();
      return no("tree is not repeated");
    }
  }
  return no("unhandled move kind");
}

// --- apply helpers -------------------------------------------------------

MoveOutcome apply_tails_exchange(const Presentation& p, const MoveSpec& m, const Ctx& c) {
  MoveOutcome out{p, {}};
  EndpointRef a = *ref_at(c, m.strand, m.pos);
  EndpointRef b = *ref_at(c, m.strand, m.pos + 1);
  std::swap(site_of(out.presentation, a).pos, site_of(out.presentation, b).pos);
  return out;
}

MoveOutcome apply_insert_pair(const Presentation& p, const MoveSpec& m) {
  MoveOutcome out;
  Presentation work = p;
  scale_positions(work);
  const WTree& payload = *m.payload;
  // slot s maps just before the endpoint currently at position s; endpoint
  // index keeps multiple insertions at one slot distinct and ordered
  int total = static_cast<int>(payload.endpoint_sites().size());
  WTree first = payload;
  WTree second = payload;
  second.nodes[second.root].twist = !second.nodes[second.root].twist;
  int e = 0;
  auto place = [&](Site& s_first, Site& s_second) {
    int base = s_first.pos * kSlotScale - 4 * (total - e) - 4;
    s_first.pos = base;
    s_second.pos = base + 1;
    ++e;
  };
  auto lf = first.leaf_nodes();
  auto ls = second.leaf_nodes();
  for (size_t i = 0; i < lf.size(); ++i)
    place(first.nodes[lf[i]].site, second.nodes[ls[i]].site);
  place(first.head, second.head);
  work.trees.push_back(first);
  work.trees.push_back(second);
  renumber_sites(work);
  out.presentation = std::move(work);
  out.notes.push_back("inserted trees " + std::to_string(out.presentation.trees.size() - 2) +
                      "," + std::to_string(out.presentation.trees.size() - 1));
  return out;
}

MoveOutcome apply_slide(const Presentation& p, const MoveSpec& m) {
  MoveOutcome out{p, {}};
  WTree& a = out.presentation.trees[m.tree];
  WTree& b = out.presentation.trees[m.tree2];
  std::swap(a.head.pos, b.head.pos);
  return out;
}

MoveOutcome apply_head_traversal(const Presentation& p, const MoveSpec& m, const Ctx& c) {
  MoveOutcome out;
  const WTree& t = p.trees[m.tree];
  const int s = t.head.strand;
  int lo = t.head.pos + m.direction, hi = lo;
  for (;;) {
    bool grew = false;
    std::set<int> members;
    for (const auto& [q, ref] : c.order.at(s))
      if (q >= lo && q <= hi) members.insert(ref.tree);
    for (int bt : members)
      for (Site site : p.trees[bt].endpoint_sites()) {
        if (site.pos < lo) lo = site.pos, grew = true;
        if (site.pos > hi) hi = site.pos, grew = true;
      }
    if (!grew) break;
  }
  Presentation work = p;
  scale_positions(work);
  work.trees[m.tree].head.pos = m.direction > 0 ? hi * kSlotScale + 1
                                                : lo * kSlotScale - 1;
  renumber_sites(work);
  out.presentation = std::move(work);
  return out;
}

MoveOutcome apply_heads_exchange(const Presentation& p, const MoveSpec& m, const Ctx& c) {
  int ta = tree_index_of_head_at(c, m.strand, m.pos, "HeadsExchange");
  int tb = tree_index_of_head_at(c, m.strand, m.pos + 1, "HeadsExchange");
  Presentation work = p;
  scale_positions(work);
  const WTree& a = work.trees[ta];
  const WTree& b = work.trees[tb];

  // compensator realizing [u_B^-1, u_A^-1]
  WTree n;
  n.side = HeadSide::Right;
  n.head = {m.strand, m.pos * kSlotScale + 1};
  WTreeNode root;
  root.first = copy_core_u(b, n, 1, true);
  root.second = copy_core_u(a, n, 1, true);
  root.twist = false;
  n.nodes.push_back(root);
  n.root = static_cast<int>(n.nodes.size()) - 1;

  work.trees[ta].head.pos = (m.pos + 1) * kSlotScale;
  work.trees[tb].head.pos = m.pos * kSlotScale;
  work.trees.push_back(n);
  renumber_sites(work);
  MoveOutcome out;
  out.presentation = std::move(work);
  out.notes.push_back("inserted commutator tree " +
                      std::to_string(out.presentation.trees.size() - 1));
  return out;
}

MoveOutcome apply_head_tail_exchange(const Presentation& p, const MoveSpec& m, const Ctx& c) {
  EndpointRef a = *ref_at(c, m.strand, m.pos);
  EndpointRef b = *ref_at(c, m.strand, m.pos + 1);
  const bool tail_first = !a.is_head();
  const EndpointRef head_ref = tail_first ? b : a;
  const EndpointRef tail_ref = tail_first ? a : b;

  Presentation work = p;
  scale_positions(work);
  WTree& w = work.trees[head_ref.tree];        // the tree whose head moves
  WTree& w2 = work.trees[tail_ref.tree];       // the tree owning the tail
  const int kw = w.degree();
  const int kw2 = w2.degree();

  // The copied leaf must keep the reading the compensator word refers to: the
  // arc just before the moved head (tail first) or the arc holding the moved
  // tail (head first).
  const Site copy_site{m.strand,
                       tail_first ? m.pos * kSlotScale - 1 : m.pos * kSlotScale + 1};

  WTree comp;
  comp.head = {w2.head.strand, w2.head.pos - 1};  // just before the owner's head
  if (kw2 == 1) {
    // exact: compensator word [x^e, u_W] (tail first) or [u_W^-1, x^-e]
    const int eps = arrow_sign(w2);
    comp.side = HeadSide::Right;
    WTreeNode root;
    root.twist = false;
    if (tail_first) {
      WTreeNode lc;
      lc.site = copy_site;
      lc.twist = eps < 0;
      comp.nodes.push_back(lc);
      root.first = static_cast<int>(comp.nodes.size()) - 1;
      root.second = copy_core_u(w, comp, 1, false);
    } else {
      root.first = copy_core_u(w, comp, 1, true);
      WTreeNode lc;
      lc.site = copy_site;
      lc.twist = eps > 0;
      comp.nodes.push_back(lc);
      root.second = static_cast<int>(comp.nodes.size()) - 1;
    }
    comp.nodes.push_back(root);
    comp.root = static_cast<int>(comp.nodes.size()) - 1;
  } else {
    // truncated: copy of the owner with the exchanged leaf grafted into a
    // vertex against a core copy of the moving tree
    comp.side = w2.side;
    std::function<int(int)> build = [&](int src) -> int {
      const WTreeNode& nn = w2.nodes[src];
      WTreeNode copy;
      copy.twist = nn.twist;
      if (src == tail_ref.node) {
        WTreeNode inner_leaf;
        inner_leaf.site = copy_site;
        inner_leaf.twist = false;
        WTreeNode graft;
        graft.twist = nn.twist;
        if (tail_first) {
          comp.nodes.push_back(inner_leaf);
          graft.first = static_cast<int>(comp.nodes.size()) - 1;
          graft.second = copy_core_u(w, comp, 1, false);
        } else {
          graft.first = copy_core_u(w, comp, 1, false);
          comp.nodes.push_back(inner_leaf);
          graft.second = static_cast<int>(comp.nodes.size()) - 1;
        }
        comp.nodes.push_back(graft);
        return static_cast<int>(comp.nodes.size()) - 1;
      }
      if (nn.is_leaf()) {
        copy.site = nn.site;
        copy.site.pos += 1;
        comp.nodes.push_back(copy);
        return static_cast<int>(comp.nodes.size()) - 1;
      }
      copy.first = build(nn.first);
      copy.second = build(nn.second);
      comp.nodes.push_back(copy);
      return static_cast<int>(comp.nodes.size()) - 1;
    };
    comp.root = build(w2.root);
    comp.nodes[comp.root].twist = w2.nodes[w2.root].twist;
  }

  // swap the two endpoint positions
  Site& hs = w.head;
  Site& ts = w2.nodes[tail_ref.node].site;
  std::swap(hs.pos, ts.pos);
  work.trees.push_back(comp);
  renumber_sites(work);

  MoveOutcome out;
  out.presentation = std::move(work);
  out.notes.push_back("inserted compensator tree " +
                      std::to_string(out.presentation.trees.size() - 1));
  if (kw2 >= 2)
    out.notes.push_back("discarded residue of degree > " + std::to_string(kw + kw2));
  return out;
}

MoveOutcome apply_antisymmetry(const Presentation& p, const MoveSpec& m) {
  MoveOutcome out{p, {}};
  WTree& t = out.presentation.trees[m.tree];
  int n = t.node_at_path(m.path);
  WTreeNode& node = t.nodes[n];
  std::swap(node.first, node.second);
  node.twist = !node.twist;
  t.nodes[node.first].twist = !t.nodes[node.first].twist;
  t.nodes[node.second].twist = !t.nodes[node.second].twist;
  return out;
}

MoveOutcome apply_twist_past_vertex(const Presentation& p, const MoveSpec& m) {
  MoveOutcome out{p, {}};
  WTree& t = out.presentation.trees[m.tree];
  int child = t.node_at_path(m.path);
  int parent = t.node_at_path(m.path.substr(0, m.path.size() - 1));
  t.nodes[child].twist = !t.nodes[child].twist;
  t.nodes[parent].twist = !t.nodes[parent].twist;
  out.notes.push_back("discarded residue of degree > " +
                      std::to_string(out.presentation.trees[m.tree].degree()));
  return out;
}

MoveOutcome apply_ihx(const Presentation& p, const MoveSpec& m) {
  Presentation work = p;
  scale_positions(work);
  const WTree& t = work.trees[m.tree];
  const int v = t.node_at_path(m.path);

  // Context copies: the first replacement reuses the original sites, the
  // second sits at adjacent fresh sites; heads in strand order first, second.
  auto build = [&](bool second_variant, int offset, int head_offset) {
    WTree out_tree;
    out_tree.side = t.side;
    out_tree.head = {t.head.strand, t.head.pos + head_offset};
    std::function<int(int)> rec = [&](int src) -> int {
      const WTreeNode& nn = t.nodes[src];
      if (src == v) {
        // [A,[B,C]] -> [[A,B],C] or [[A,C],B']
        int a_node = rec(nn.first);
        const WTreeNode& inner = t.nodes[nn.second];
        int b_node = rec(inner.first);
        int c_node = rec(inner.second);
        if (second_variant) {
          WTreeNode& bn = out_tree.nodes[b_node];
          bn.twist = !bn.twist;
          WTreeNode pairv;
          pairv.first = a_node;
          pairv.second = c_node;
          pairv.twist = false;
          out_tree.nodes.push_back(pairv);
          int pv = static_cast<int>(out_tree.nodes.size()) - 1;
          WTreeNode top;
          top.first = pv;
          top.second = b_node;
          top.twist = nn.twist;
          out_tree.nodes.push_back(top);
          return static_cast<int>(out_tree.nodes.size()) - 1;
        }
        WTreeNode pairv;
        pairv.first = a_node;
        pairv.second = b_node;
        pairv.twist = false;
        out_tree.nodes.push_back(pairv);
        int pv = static_cast<int>(out_tree.nodes.size()) - 1;
        WTreeNode top;
        top.first = pv;
        top.second = c_node;
        top.twist = nn.twist;
        out_tree.nodes.push_back(top);
        return static_cast<int>(out_tree.nodes.size()) - 1;
      }
      WTreeNode copy;
      copy.twist = nn.twist;
      if (nn.is_leaf()) {
        copy.site = nn.site;
        copy.site.pos += offset;
        out_tree.nodes.push_back(copy);
        return static_cast<int>(out_tree.nodes.size()) - 1;
      }
      copy.first = rec(nn.first);
      copy.second = rec(nn.second);
      out_tree.nodes.push_back(copy);
      return static_cast<int>(out_tree.nodes.size()) - 1;
    };
    out_tree.root = rec(t.root);
    return out_tree;
  };

  WTree h_tree = build(false, 0, 0);
  WTree x_tree = build(true, 1, 1);
  Presentation next;
  next.diagram = work.diagram;
  for (int i = 0; i < static_cast<int>(work.trees.size()); ++i) {
    if (i == m.tree) {
      next.trees.push_back(h_tree);
      next.trees.push_back(x_tree);
    } else {
      next.trees.push_back(work.trees[i]);
    }
  }
  renumber_sites(next);
  MoveOutcome out;
  out.presentation = std::move(next);
  out.notes.push_back("discarded residue of degree > " + std::to_string(t.degree()));
  return out;
}

}  // namespace

Applicability applicable(const Presentation& p, const MoveSpec& m) {
  require_valid(p);
  Ctx c{p, endpoint_order(p)};
  try {
    return applicable_impl(p, m, c);
  } catch (const CalcError& e) {
    return {false, e.what()};
  }
}

MoveOutcome apply_move(const Presentation& p, const MoveSpec& m) {
  Applicability a = applicable(p, m);
  if (!a.ok)
    throw CalcError(ErrorKind::Domain,
                    "move " + move_kind_name(m.kind) + " not applicable: " + a.reason);
  Ctx c{p, endpoint_order(p)};
  switch (m.kind) {
    case MoveKind::TailsExchange:
      return apply_tails_exchange(p, m, c);
    case MoveKind::IsolatedArrow:
    case MoveKind::SelfArrowDelete:
      return {drop_trees(p, {m.tree}), {}};
    case MoveKind::RepeatedTreeDelete:
      return {drop_trees(p, {m.tree}), {}};
    case MoveKind::InversePairDelete:
      return {drop_trees(p, {m.tree, m.tree2}), {}};
    case MoveKind::InversePairInsert:
      return apply_insert_pair(p, m);
    case MoveKind::Slide:
      return apply_slide(p, m);
    case MoveKind::HeadTraversal:
      return apply_head_traversal(p, m, c);
    case MoveKind::HeadsExchange:
      return apply_heads_exchange(p, m, c);
    case MoveKind::HeadTailExchange:
      return apply_head_tail_exchange(p, m, c);
    case MoveKind::Antisymmetry:
      return apply_antisymmetry(p, m);
    case MoveKind::Fork:
      return {drop_trees(p, {m.tree}), {}};
    case MoveKind::TwistPastVertex:
      return apply_twist_past_vertex(p, m);
    case MoveKind::IHX:
      return apply_ihx(p, m);
  }
  throw CalcError(ErrorKind::Usage, "unhandled move kind");
}

Presentation apply(const Presentation& p, const MoveSpec& m) {
  return apply_move(p, m).presentation;
}

TraceResult trace(const Presentation& p, const std::vector<MoveSpec>& moves) {
  TraceResult out;
  out.presentation = p;
  for (size_t i = 0; i < moves.size(); ++i) {
    Applicability a = applicable(out.presentation, moves[i]);
    if (!a.ok)
      throw CalcError(ErrorKind::Domain, "move " + std::to_string(i) + " (" +
                                             move_kind_name(moves[i].kind) +
                                             ") not applicable: " + a.reason);
    MoveOutcome step = apply_move(out.presentation, moves[i]);
    Json entry;
    entry["index"] = i;
    entry["move"] = moves[i].to_json();
    entry["notes"] = step.notes;
    out.log.push_back(entry);
    out.presentation = std::move(step.presentation);
  }
  return out;
}

}  // namespace warrow
