#include "expand.hpp"

#include <algorithm>

namespace warrow {

namespace {

// Copies the subtree rooted at src_node into dst; leaf positions are shifted
// by `offset` working units and recorded leaf origins are appended in planar
// order.
int copy_subtree(const WTree& src, int src_node, WTree& dst, int offset,
                 const std::vector<int>& src_leaf_origins, int& leaf_cursor,
                 std::vector<int>& dst_leaf_origins) {
  const WTreeNode& n = src.nodes[src_node];
  WTreeNode copy;
  copy.twist = n.twist;
  if (n.is_leaf()) {
    copy.site = n.site;
    copy.site.pos += offset;
    dst_leaf_origins.push_back(src_leaf_origins[leaf_cursor++]);
    dst.nodes.push_back(copy);
    return static_cast<int>(dst.nodes.size()) - 1;
  }
  copy.first = copy_subtree(src, n.first, dst, offset, src_leaf_origins, leaf_cursor,
                            dst_leaf_origins);
  copy.second = copy_subtree(src, n.second, dst, offset, src_leaf_origins, leaf_cursor,
                             dst_leaf_origins);
  dst.nodes.push_back(copy);
  return static_cast<int>(dst.nodes.size()) - 1;
}

struct Piece {
  WTree tree;
  std::vector<int> leaf_origins;
};

// Builds one replacement tree from a subtree of the expanded vertex.
Piece make_piece(const WTree& src, int sub_root, bool flip_root, int offset, Site head,
                 const std::vector<int>& leaf_origins_for_subtree) {
  Piece out;
  out.tree.head = head;
  out.tree.side = HeadSide::Right;
  int cursor = 0;
  out.tree.root = copy_subtree(src, sub_root, out.tree, offset, leaf_origins_for_subtree,
                               cursor, out.leaf_origins);
  if (flip_root) {
    WTreeNode& r = out.tree.nodes[out.tree.root];
    r.twist = !r.twist;
  }
  return out;
}

// Expansion with origin bookkeeping. `origins` is parallel to p.trees and
// holds, per tree, the origin tag of each leaf in planar order.
Presentation expand_once_impl(const Presentation& p, int tree_index,
                              std::vector<std::vector<int>>* origins,
                              std::vector<int>* tree_tags,
                              std::map<Site, Site>* relabel_out) {
  if (tree_index < 0 || tree_index >= static_cast<int>(p.trees.size()))
    throw CalcError(ErrorKind::Usage, "tree index out of range");
  if (p.trees[tree_index].degree() < 2)
    throw CalcError(ErrorKind::Domain, "expansion needs a tree of degree >= 2");

  // Only the selected tree is touched; a left-sided head is first reversed
  // so the replacement word composes on one side.
  Presentation work = p;
  if (work.trees[tree_index].side == HeadSide::Left) {
    WTree& t = work.trees[tree_index];
    t.side = HeadSide::Right;
    t.nodes[t.root].twist = !t.nodes[t.root].twist;
  }
  scale_positions(work);
  const WTree& t = work.trees[tree_index];
  const WTreeNode& root = t.nodes[t.root];
  const bool inverted = root.twist;

  // Planar leaf split between the two subtrees.
  std::vector<int> all_origins =
      origins ? (*origins)[tree_index]
              : std::vector<int>(static_cast<size_t>(t.degree()), 0);
  int first_leaves = 0;
  {
    WTree probe = t;
    probe.root = root.first;
    first_leaves = probe.degree();
  }
  std::vector<int> orig_a(all_origins.begin(), all_origins.begin() + first_leaves);
  std::vector<int> orig_b(all_origins.begin() + first_leaves, all_origins.end());

  // Strand-order head layout: plain terminal edge spells A B' A' B; a twisted
  // one spells the reversed, twist-flipped sequence (the inverse word).
  struct Slot {
    int sub;      // root.first or root.second
    bool flip;    // extra twist on the copied root
    bool copy;    // second occurrence of this subtree, tails at offset +1
  };
  std::vector<Slot> slots;
  if (!inverted) {
    slots = {{root.first, false, false},
             {root.second, true, false},
             {root.first, true, true},
             {root.second, false, true}};
  } else {
    slots = {{root.second, true, false},
             {root.first, false, false},
             {root.second, false, true},
             {root.first, true, true}};
  }

  std::vector<Piece> pieces;
  for (size_t i = 0; i < slots.size(); ++i) {
    const Slot& s = slots[i];
    Site head{t.head.strand, t.head.pos + static_cast<int>(i)};
    const auto& sub_origins = s.sub == root.first ? orig_a : orig_b;
    pieces.push_back(
        make_piece(t, s.sub, s.flip, s.copy ? 1 : 0, head, sub_origins));
  }

  Presentation out;
  out.diagram = work.diagram;
  std::vector<std::vector<int>> new_origins;
  std::vector<int> new_tags;
  for (int i = 0; i < static_cast<int>(work.trees.size()); ++i) {
    if (i == tree_index) {
      for (auto& piece : pieces) {
        out.trees.push_back(piece.tree);
        new_origins.push_back(piece.leaf_origins);
        new_tags.push_back(tree_tags ? (*tree_tags)[i] : 0);
      }
    } else {
      out.trees.push_back(work.trees[i]);
      new_origins.push_back(origins ? (*origins)[i]
                                    : std::vector<int>(
                                          static_cast<size_t>(work.trees[i].degree()), 0));
      new_tags.push_back(tree_tags ? (*tree_tags)[i] : 0);
    }
  }

  auto relabel = renumber_sites(out);
  if (relabel_out) {
    relabel_out->clear();
    for (const auto& [scaled, fresh] : relabel) {
      if (scaled.pos % kSlotScale == 0)
        (*relabel_out)[{scaled.strand, scaled.pos / kSlotScale}] = {scaled.strand, fresh};
    }
  }
  if (origins) *origins = std::move(new_origins);
  if (tree_tags) *tree_tags = std::move(new_tags);
  return out;
}

}  // namespace

ExpandResult expand_once(const Presentation& p, int tree_index) {
  ExpandResult out;
  out.presentation = expand_once_impl(p, tree_index, nullptr, nullptr, &out.site_relabeling);
  return out;
}

Presentation full_expand(const Presentation& p) {
  Presentation cur = p;
  for (;;) {
    int idx = -1;
    for (size_t i = 0; i < cur.trees.size(); ++i)
      if (cur.trees[i].degree() >= 2) {
        idx = static_cast<int>(i);
        break;
      }
    if (idx < 0) return cur;
    cur = expand_once_impl(cur, idx, nullptr, nullptr, nullptr);
  }
}

TrackedExpansion full_expand_tracked(const Presentation& p) {
  Presentation cur = p;
  std::vector<std::vector<int>> origins;
  std::vector<int> tags;
  for (size_t i = 0; i < p.trees.size(); ++i) {
    std::vector<int> leaves;
    for (int j = 0; j < p.trees[i].degree(); ++j) leaves.push_back(j);
    origins.push_back(leaves);
    tags.push_back(static_cast<int>(i));
  }
  for (;;) {
    int idx = -1;
    for (size_t i = 0; i < cur.trees.size(); ++i)
      if (cur.trees[i].degree() >= 2) {
        idx = static_cast<int>(i);
        break;
      }
    if (idx < 0) break;
    cur = expand_once_impl(cur, idx, &origins, &tags, nullptr);
  }
  TrackedExpansion out;
  out.presentation = std::move(cur);
  for (size_t i = 0; i < out.presentation.trees.size(); ++i)
    out.arrow_origin.push_back({tags[i], origins[i].at(0)});
  return out;
}

GaussCode surgery(const Presentation& p) {
  require_valid(p);
  Presentation arrows = full_expand(p);
  auto signed_arrows = to_signed_arrows(arrows);

  GaussCode g;
  g.strands = arrows.diagram.strands;
  std::map<int, std::map<int, Passage>> per_strand;  // strand id -> pos -> passage
  for (size_t i = 0; i < signed_arrows.size(); ++i) {
    const SignedArrow& a = signed_arrows[i];
    int id = static_cast<int>(i) + 1;
    per_strand[a.tail.strand][a.tail.pos] = {id, true, a.sign};
    per_strand[a.head.strand][a.head.pos] = {id, false, a.sign};
  }
  for (const auto& s : g.strands) {
    std::vector<Passage> v;
    for (const auto& [pos, pa] : per_strand[s.id]) v.push_back(pa);
    g.passages.push_back(std::move(v));
  }
  return g;
}

Presentation delete_tail_group(const Presentation& p, int tree_index, int tail_index) {
  if (tree_index < 0 || tree_index >= static_cast<int>(p.trees.size()))
    throw CalcError(ErrorKind::Usage, "tree index out of range");
  if (tail_index < 0 || tail_index >= p.trees[tree_index].degree())
    throw CalcError(ErrorKind::Usage, "tail index out of range");
  TrackedExpansion ex = full_expand_tracked(p);
  Presentation out;
  out.diagram = ex.presentation.diagram;
  for (size_t i = 0; i < ex.presentation.trees.size(); ++i) {
    if (ex.arrow_origin[i] == std::make_pair(tree_index, tail_index)) continue;
    out.trees.push_back(ex.presentation.trees[i]);
  }
  scale_positions(out);
  renumber_sites(out);
  return out;
}

}  // namespace warrow
