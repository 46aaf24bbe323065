#include "json_io.hpp"

#include <cctype>
#include <sstream>

namespace warrow {

namespace {

Json site_to_json(const Site& s) { return Json::array({s.strand, s.pos}); }

Site site_from_json(const Json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw CalcError(ErrorKind::Usage, std::string(where) + ": site must be [strand, pos]");
  return {j[0].get<int>(), j[1].get<int>()};
}

Json node_to_json(const WTree& t, int n) {
  const WTreeNode& node = t.nodes[n];
  Json j;
  if (node.is_leaf()) {
    j["kind"] = "leaf";
    j["twist"] = node.twist ? 1 : 0;
    j["site"] = site_to_json(node.site);
  } else {
    j["kind"] = "vertex";
    j["twist"] = node.twist ? 1 : 0;
    j["first"] = node_to_json(t, node.first);
    j["second"] = node_to_json(t, node.second);
  }
  return j;
}

int node_from_json(const Json& j, WTree& t) {
  if (!j.is_object()) throw CalcError(ErrorKind::Usage, "tree node must be an object");
  std::string kind = j.value("kind", "");
  if (!j.contains("twist") || !j["twist"].is_number_integer())
    throw CalcError(ErrorKind::Usage, "node field 'twist' must be an integer");
  int tw = j["twist"].get<int>();
  if (tw != 0 && tw != 1)
    throw CalcError(ErrorKind::Usage, "node field 'twist' must be 0 or 1");
  WTreeNode node;
  node.twist = tw == 1;
  if (kind == "leaf") {
    if (!j.contains("site")) throw CalcError(ErrorKind::Usage, "leaf node missing 'site'");
    node.site = site_from_json(j["site"], "leaf");
    t.nodes.push_back(node);
    return static_cast<int>(t.nodes.size()) - 1;
  }
  if (kind == "vertex") {
    if (!j.contains("first") || !j.contains("second"))
      throw CalcError(ErrorKind::Usage, "vertex node missing 'first' or 'second'");
    node.first = node_from_json(j["first"], t);
    node.second = node_from_json(j["second"], t);
    t.nodes.push_back(node);
    return static_cast<int>(t.nodes.size()) - 1;
  }
  throw CalcError(ErrorKind::Usage, "node field 'kind' must be 'leaf' or 'vertex'");
}

Json strands_to_json(const std::vector<StrandInfo>& strands) {
  Json arr = Json::array();
  for (const auto& s : strands) {
    Json e;
    e["id"] = s.id;
    e["kind"] = s.kind == StrandKind::Open ? "open" : "closed";
    arr.push_back(e);
  }
  return arr;
}

std::vector<StrandInfo> strands_from_json(const Json& j) {
  if (!j.is_array()) throw CalcError(ErrorKind::Usage, "'strands' must be an array");
  std::vector<StrandInfo> out;
  for (const auto& e : j) {
    StrandInfo s;
    if (!e.contains("id") || !e["id"].is_number_integer())
      throw CalcError(ErrorKind::Usage, "strand field 'id' must be an integer");
    s.id = e["id"].get<int>();
    std::string kind = e.value("kind", "open");
    if (kind == "open")
      s.kind = StrandKind::Open;
    else if (kind == "closed")
      s.kind = StrandKind::Closed;
    else
      throw CalcError(ErrorKind::Usage, "strand field 'kind' must be 'open' or 'closed'");
    out.push_back(s);
  }
  return out;
}

}  // namespace

Json presentation_to_json(const Presentation& p) {
  Json j;
  j["type"] = "presentation";
  j["strands"] = strands_to_json(p.diagram.strands);
  Json trees = Json::array();
  for (const WTree& t : p.trees) {
    Json e;
    e["head"] = site_to_json(t.head);
    e["side"] = t.side == HeadSide::Right ? "right" : "left";
    e["root"] = node_to_json(t, t.root);
    trees.push_back(e);
  }
  j["trees"] = trees;
  return j;
}

Presentation presentation_from_json(const Json& j) {
  if (!j.is_object() || j.value("type", "") != "presentation")
    throw CalcError(ErrorKind::Usage, "expected object with type 'presentation'");
  Presentation p;
  p.diagram.strands = strands_from_json(j.value("strands", Json::array()));
  for (const auto& e : j.value("trees", Json::array())) {
    WTree t;
    if (!e.contains("head")) throw CalcError(ErrorKind::Usage, "tree missing 'head'");
    t.head = site_from_json(e["head"], "head");
    std::string side = e.value("side", "right");
    if (side == "right")
      t.side = HeadSide::Right;
    else if (side == "left")
      t.side = HeadSide::Left;
    else
      throw CalcError(ErrorKind::Usage, "tree field 'side' must be 'left' or 'right'");
    if (!e.contains("root")) throw CalcError(ErrorKind::Usage, "tree missing 'root'");
    t.root = node_from_json(e["root"], t);
    p.trees.push_back(std::move(t));
  }
  return p;
}

Json gauss_to_json(const GaussCode& g) {
  Json j;
  j["type"] = "gauss_code";
  j["strands"] = strands_to_json(g.strands);
  Json all = Json::array();
  for (const auto& strand : g.passages) {
    Json arr = Json::array();
    for (const auto& pa : strand) {
      Json e;
      e["crossing"] = pa.crossing;
      e["role"] = pa.over ? "over" : "under";
      e["sign"] = pa.sign;
      arr.push_back(e);
    }
    all.push_back(arr);
  }
  j["passages"] = all;
  return j;
}

GaussCode gauss_from_json(const Json& j) {
  if (!j.is_object() || j.value("type", "") != "gauss_code")
    throw CalcError(ErrorKind::Usage, "expected object with type 'gauss_code'");
  GaussCode g;
  g.strands = strands_from_json(j.value("strands", Json::array()));
  for (const auto& strand : j.value("passages", Json::array())) {
    std::vector<Passage> v;
    if (!strand.is_array()) throw CalcError(ErrorKind::Usage, "'passages' must hold arrays");
    for (const auto& e : strand) {
      Passage pa;
      if (!e.contains("crossing") || !e["crossing"].is_number_integer())
        throw CalcError(ErrorKind::Usage, "passage field 'crossing' must be an integer");
      pa.crossing = e["crossing"].get<int>();
      std::string role = e.value("role", "");
      if (role == "over")
        pa.over = true;
      else if (role == "under")
        pa.over = false;
      else
        throw CalcError(ErrorKind::Usage, "passage field 'role' must be 'over' or 'under'");
      if (!e.contains("sign") || !e["sign"].is_number_integer())
        throw CalcError(ErrorKind::Usage, "passage field 'sign' must be 1 or -1");
      pa.sign = e["sign"].get<int>();
      if (pa.sign != 1 && pa.sign != -1)
        throw CalcError(ErrorKind::Usage, "passage field 'sign' must be 1 or -1");
      v.push_back(pa);
    }
    g.passages.push_back(std::move(v));
  }
  if (g.passages.size() != g.strands.size())
    throw CalcError(ErrorKind::Usage, "'passages' and 'strands' lengths differ");
  return g;
}

std::string gauss_to_text(const GaussCode& g) {
  std::string out;
  for (size_t i = 0; i < g.strands.size(); ++i) {
    if (i) out += "\n";
    out += g.strands[i].kind == StrandKind::Open ? "open: " : "closed: ";
    for (const auto& pa : g.passages[i]) {
      out += pa.over ? "O" : "U";
      out += std::to_string(pa.crossing);
      out += pa.sign > 0 ? "+" : "-";
    }
  }
  return out;
}

GaussCode gauss_from_text(const std::string& text) {
  GaussCode g;
  std::istringstream in(text);
  std::string line;
  int next_id = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    std::string s = line.substr(a, b - a + 1);
    StrandKind kind = StrandKind::Closed;
    if (s.rfind("open:", 0) == 0) {
      kind = StrandKind::Open;
      s = s.substr(5);
    } else if (s.rfind("closed:", 0) == 0) {
      s = s.substr(7);
    }
    std::vector<Passage> v;
    size_t i = 0;
    auto fail = [&](const std::string& what) {
      throw CalcError(ErrorKind::Usage, "Gauss string line " + std::to_string(lineno) + ": " +
                                            what);
    };
    while (i < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
        continue;
      }
      Passage pa;
      if (s[i] == 'O' || s[i] == 'o')
        pa.over = true;
      else if (s[i] == 'U' || s[i] == 'u')
        pa.over = false;
      else
        fail(std::string("expected O or U, found '") + s[i] + "'");
      ++i;
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (start == i) fail("expected crossing number");
      pa.crossing = std::stoi(s.substr(start, i - start));
      if (i >= s.size() || (s[i] != '+' && s[i] != '-')) fail("expected sign + or -");
      pa.sign = s[i] == '+' ? 1 : -1;
      ++i;
      v.push_back(pa);
    }
    g.strands.push_back({next_id++, kind});
    g.passages.push_back(std::move(v));
  }
  if (g.strands.empty()) throw CalcError(ErrorKind::Usage, "empty Gauss code input");
  auto issues = validate(g);
  if (!issues.empty()) throw CalcError(ErrorKind::Usage, issues.front());
  return g;
}

ParsedInput parse_input(const std::string& text) {
  ParsedInput out;
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos) throw CalcError(ErrorKind::Usage, "empty input");
  if (text[i] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw CalcError(ErrorKind::Usage, std::string("JSON parse error: ") + e.what());
    }
    std::string type = j.value("type", "");
    if (type == "presentation") {
      out.presentation = presentation_from_json(j);
      auto issues = validate(*out.presentation);
      if (!issues.empty()) throw CalcError(ErrorKind::Domain, issues.front());
    } else if (type == "gauss_code") {
      out.gauss = gauss_from_json(j);
      auto issues = validate(*out.gauss);
      if (!issues.empty()) throw CalcError(ErrorKind::Domain, issues.front());
    } else {
      throw CalcError(ErrorKind::Usage,
                      "field 'type' must be 'presentation' or 'gauss_code'");
    }
    return out;
  }
  out.gauss = gauss_from_text(text);
  return out;
}

std::string dump_json(const Json& j) { return j.dump(); }

}  // namespace warrow
