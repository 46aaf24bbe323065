#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace warrow {

enum class ErrorKind { Domain = 1, Usage = 2 };

// Error raised by calculus operations; kind separates bad data from bad input.
class CalcError : public std::runtime_error {
 public:
  CalcError(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

enum class StrandKind { Open, Closed };

struct StrandInfo {
  int id = 0;
  StrandKind kind = StrandKind::Open;
  friend bool operator==(const StrandInfo& a, const StrandInfo& b) {
    return a.id == b.id && a.kind == b.kind;
  }
};

// Crossingless base diagram: an ordered list of strands. For string links the
// list order is the component order.
struct StrandDiagram {
  std::vector<StrandInfo> strands;

  int index_of(int strand_id) const;  // -1 when absent
  bool is_string_link() const;        // all strands open
  static StrandDiagram string_link(int n);
  static StrandDiagram closed_knot();
};

// Position of a tree endpoint: a strand id and an index along the strand in
// orientation order. Closed strands are read linearly from their basepoint.
struct Site {
  int strand = 0;
  int pos = 0;
  friend bool operator==(const Site& a, const Site& b) {
    return a.strand == b.strand && a.pos == b.pos;
  }
  friend bool operator<(const Site& a, const Site& b) {
    return a.strand != b.strand ? a.strand < b.strand : a.pos < b.pos;
  }
};

enum class HeadSide { Left, Right };

// Node of a w-tree. A node is a leaf (tail site) or a trivalent vertex with
// an ordered pair of children; `twist` is the parity of twist marks on the
// edge from this node toward the head, so the root's bit is the terminal
// edge parity.
struct WTreeNode {
  int first = -1;
  int second = -1;
  Site site;
  bool twist = false;
  bool is_leaf() const { return first < 0; }
  friend bool operator==(const WTreeNode& a, const WTreeNode& b) {
    return a.first == b.first && a.second == b.second && a.site == b.site &&
           a.twist == b.twist;
  }
};

// Rooted w-tree: a sided head site plus the node pool of its tail structure.
struct WTree {
  Site head;
  HeadSide side = HeadSide::Right;
  std::vector<WTreeNode> nodes;
  int root = 0;

  static WTree arrow(Site tail, Site head, bool twist = false,
                     HeadSide side = HeadSide::Right);

  int degree() const;
  // Leaf node ids in planar order (first subtree before second).
  std::vector<int> leaf_nodes() const;
  std::vector<Site> endpoint_sites() const;  // all leaf sites plus the head
  // Path addressing from the root, e.g. "" or "LRL".
  int node_at_path(const std::string& path) const;  // throws CalcError on bad path
  std::string path_of(int node) const;

  // Shape, twists and side equal; sites ignored. Root twist parity may be
  // required to differ instead of match.
  bool parallel_to(const WTree& other, bool root_parity_flipped) const;
};

// A w-tree presentation: crossingless diagram plus attached trees.
struct Presentation {
  StrandDiagram diagram;
  std::vector<WTree> trees;
};

struct Passage {
  int crossing = 0;
  bool over = false;
  int sign = 1;
  friend bool operator==(const Passage& a, const Passage& b) {
    return a.crossing == b.crossing && a.over == b.over && a.sign == b.sign;
  }
};

// Signed over/under crossing sequences per strand; virtual crossings are not
// recorded (detour quotient).
struct GaussCode {
  std::vector<StrandInfo> strands;
  std::vector<std::vector<Passage>> passages;  // parallel to strands

  int crossing_count() const;
  std::vector<int> crossing_ids() const;  // sorted, unique
};

struct SignedArrow {
  Site tail;
  Site head;
  int sign = 1;
  friend bool operator==(const SignedArrow& a, const SignedArrow& b) {
    return a.tail == b.tail && a.head == b.head && a.sign == b.sign;
  }
  friend bool operator<(const SignedArrow& a, const SignedArrow& b) {
    if (!(a.head == b.head)) return a.head < b.head;
    if (!(a.tail == b.tail)) return a.tail < b.tail;
    return a.sign < b.sign;
  }
};

// Reference to one tree endpoint: node < 0 denotes the head.
struct EndpointRef {
  int tree = 0;
  int node = -1;
  bool is_head() const { return node < 0; }
  friend bool operator==(const EndpointRef& a, const EndpointRef& b) {
    return a.tree == b.tree && a.node == b.node;
  }
};

// Per-strand endpoint order: (pos, ref) sorted by position.
using EndpointOrder = std::map<int, std::vector<std::pair<int, EndpointRef>>>;
EndpointOrder endpoint_order(const Presentation& p);

const Site& site_of(const Presentation& p, const EndpointRef& ref);
Site& site_of(Presentation& p, EndpointRef ref);

// Invariant checks; returns human-readable violations, empty when valid.
std::vector<std::string> validate(const Presentation& p);
std::vector<std::string> validate(const GaussCode& g);
void require_valid(const Presentation& p);
void require_valid(const GaussCode& g);

// One w-arrow per classical crossing: tail at the over passage, head at the
// under passage, sign carried by the twist parity.
Presentation canonical_arrow_presentation(const GaussCode& g);

// Arrow-only presentations reduce to signed arrow lists, ordered by head site.
std::vector<SignedArrow> to_signed_arrows(const Presentation& p);
int arrow_sign(const WTree& arrow);

// Head reversal applied until every head side is Right.
Presentation normalize_sides(const Presentation& p);

// Moves the basepoint of a closed strand forward by delta positions.
Presentation rotate_basepoint(const Presentation& p, int strand_id, int delta);

// Site renumbering support: operations that insert or remove endpoints work
// with scaled intermediate positions, then re-densify deterministically.
constexpr int kSlotScale = 1 << 14;
void scale_positions(Presentation& p, int factor = kSlotScale);
// Sorts endpoints per strand by current position and assigns 0..m-1; the map
// records (strand, old working position) -> new position.
std::map<Site, int> renumber_sites(Presentation& p);

}  // namespace warrow
