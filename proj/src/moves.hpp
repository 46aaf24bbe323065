#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "model.hpp"

namespace warrow {

enum class MoveKind {
  TailsExchange,
  IsolatedArrow,
  InversePairDelete,
  InversePairInsert,
  Slide,
  HeadTraversal,
  HeadsExchange,
  HeadTailExchange,
  Antisymmetry,
  Fork,
  TwistPastVertex,
  IHX,
  SelfArrowDelete,
  RepeatedTreeDelete,
};

bool move_kind_is_exact(MoveKind k);
std::string move_kind_name(MoveKind k);
MoveKind move_kind_from_name(const std::string& name);

// Location parameters; which fields are read depends on the kind.
struct MoveSpec {
  MoveKind kind = MoveKind::TailsExchange;
  int strand = -1;
  int pos = -1;
  int tree = -1;
  int tree2 = -1;
  std::string path;
  int direction = 1;
  std::optional<int> truncation_degree;
  std::optional<WTree> payload;  // InversePairInsert; sites are insertion slots

  Json to_json() const;
  static MoveSpec from_json(const Json& j);
};

struct Applicability {
  bool ok = false;
  std::string reason;  // set when not applicable
};

Applicability applicable(const Presentation& p, const MoveSpec& m);

struct MoveOutcome {
  Presentation presentation;
  std::vector<std::string> notes;  // discarded residue records and the like
};

MoveOutcome apply_move(const Presentation& p, const MoveSpec& m);
Presentation apply(const Presentation& p, const MoveSpec& m);

struct TraceResult {
  Presentation presentation;
  std::vector<Json> log;  // one entry per applied move
};

TraceResult trace(const Presentation& p, const std::vector<MoveSpec>& moves);

}  // namespace warrow
