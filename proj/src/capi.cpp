#include "warrow.h"

#include <cstring>
#include <string>
#include <variant>

#include "classify.hpp"
#include "expand.hpp"
#include "ftcheck.hpp"
#include "group.hpp"
#include "json_io.hpp"
#include "milnor.hpp"
#include "model.hpp"
#include "moves.hpp"

struct warrow_handle {
  std::variant<warrow::Presentation, warrow::GaussCode> value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
warrow_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const warrow::CalcError& e) {
    g_last_error = e.what();
    return e.kind() == warrow::ErrorKind::Usage ? WARROW_ERR_USAGE : WARROW_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WARROW_ERR_DOMAIN;
  }
}

const warrow::Presentation& as_presentation(const warrow_handle* h) {
  if (!h || !std::holds_alternative<warrow::Presentation>(h->value))
    throw warrow::CalcError(warrow::ErrorKind::Usage, "expected a presentation handle");
  return std::get<warrow::Presentation>(h->value);
}

const warrow::GaussCode& as_gauss(const warrow_handle* h) {
  if (!h || !std::holds_alternative<warrow::GaussCode>(h->value))
    throw warrow::CalcError(warrow::ErrorKind::Usage, "expected a Gauss code handle");
  return std::get<warrow::GaussCode>(h->value);
}

warrow_handle* wrap(warrow::Presentation p) {
  return new warrow_handle{std::move(p)};
}
warrow_handle* wrap(warrow::GaussCode g) { return new warrow_handle{std::move(g)}; }

void require_out(void* out) {
  if (!out) throw warrow::CalcError(warrow::ErrorKind::Usage, "null output pointer");
}

warrow::Json parse_json_arg(const char* text, const char* what) {
  if (!text) throw warrow::CalcError(warrow::ErrorKind::Usage, std::string(what) + ": null");
  try {
    return warrow::Json::parse(text);
  } catch (const warrow::Json::parse_error& e) {
    throw warrow::CalcError(warrow::ErrorKind::Usage,
                            std::string(what) + ": " + e.what());
  }
}

}  // namespace

extern "C" {

const char* warrow_version(void) { return "1.0.0"; }

const char* warrow_last_error(void) { return g_last_error.c_str(); }

void warrow_release(warrow_handle* h) { delete h; }

void warrow_string_free(char* s) { std::free(s); }

warrow_status warrow_parse(const char* text, warrow_handle** out) {
  return guarded([&]() {
    require_out(out);
    if (!text) throw warrow::CalcError(warrow::ErrorKind::Usage, "null input");
    warrow::ParsedInput in = warrow::parse_input(text);
    *out = in.presentation ? wrap(std::move(*in.presentation)) : wrap(std::move(*in.gauss));
    return WARROW_OK;
  });
}

int warrow_kind(const warrow_handle* h) {
  if (!h) return 0;
  return std::holds_alternative<warrow::Presentation>(h->value) ? WARROW_KIND_PRESENTATION
                                                                : WARROW_KIND_GAUSS_CODE;
}

warrow_status warrow_to_json(const warrow_handle* h, char** out) {
  return guarded([&]() {
    require_out(out);
    if (warrow_kind(h) == WARROW_KIND_PRESENTATION)
      *out = dup_string(warrow::dump_json(warrow::presentation_to_json(as_presentation(h))));
    else
      *out = dup_string(warrow::dump_json(warrow::gauss_to_json(as_gauss(h))));
    return WARROW_OK;
  });
}

warrow_status warrow_to_text(const warrow_handle* h, char** out) {
  return guarded([&]() {
    require_out(out);
    *out = dup_string(warrow::gauss_to_text(as_gauss(h)));
    return WARROW_OK;
  });
}

warrow_status warrow_validate(const warrow_handle* h, char** report) {
  return guarded([&]() {
    require_out(report);
    std::vector<std::string> issues;
    if (warrow_kind(h) == WARROW_KIND_PRESENTATION)
      issues = warrow::validate(as_presentation(h));
    else
      issues = warrow::validate(as_gauss(h));
    warrow::Json j = warrow::Json::array();
    for (const auto& s : issues) j.push_back(s);
    *report = dup_string(warrow::dump_json(j));
    return WARROW_OK;
  });
}

warrow_status warrow_normalize_sides(const warrow_handle* h, warrow_handle** out) {
  return guarded([&]() {
    require_out(out);
    *out = wrap(warrow::normalize_sides(as_presentation(h)));
    return WARROW_OK;
  });
}

warrow_status warrow_rotate_basepoint(const warrow_handle* h, int strand, int delta,
                                      warrow_handle** out) {
  return guarded([&]() {
    require_out(out);
    *out = wrap(warrow::rotate_basepoint(as_presentation(h), strand, delta));
    return WARROW_OK;
  });
}

warrow_status warrow_canonical_arrows(const warrow_handle* gauss, warrow_handle** out) {
  return guarded([&]() {
    require_out(out);
    *out = wrap(warrow::canonical_arrow_presentation(as_gauss(gauss)));
    return WARROW_OK;
  });
}

warrow_status warrow_signed_arrows(const warrow_handle* h, char** out) {
  return guarded([&]() {
    require_out(out);
    auto arrows = warrow::to_signed_arrows(as_presentation(h));
    warrow::Json j = warrow::Json::array();
    for (const auto& a : arrows) {
      warrow::Json e;
      e["tail"] = warrow::Json::array({a.tail.strand, a.tail.pos});
      e["head"] = warrow::Json::array({a.head.strand, a.head.pos});
      e["sign"] = a.sign;
      j.push_back(e);
    }
    *out = dup_string(warrow::dump_json(j));
    return WARROW_OK;
  });
}

warrow_status warrow_expand_once(const warrow_handle* h, int tree_index,
                                 warrow_handle** out) {
  return guarded([&]() {
    require_out(out);
    *out = wrap(warrow::expand_once(as_presentation(h), tree_index).presentation);
    return WARROW_OK;
  });
}

warrow_status warrow_full_expand(const warrow_handle* h, warrow_handle** out) {
  return guarded([&]() {
    require_out(out);
    *out = wrap(warrow::full_expand(as_presentation(h)));
    return WARROW_OK;
  });
}

warrow_status warrow_surgery(const warrow_handle* h, warrow_handle** out) {
  return guarded([&]() {
    require_out(out);
    *out = wrap(warrow::surgery(as_presentation(h)));
    return WARROW_OK;
  });
}

warrow_status warrow_delete_tail_group(const warrow_handle* h, int tree_index,
                                       int tail_index, warrow_handle** out) {
  return guarded([&]() {
    require_out(out);
    *out = wrap(warrow::delete_tail_group(as_presentation(h), tree_index, tail_index));
    return WARROW_OK;
  });
}

warrow_status warrow_move_applicable(const warrow_handle* h, const char* move,
                                     char** reason) {
  return guarded([&]() {
    require_out(reason);
    *reason = nullptr;
    auto spec = warrow::MoveSpec::from_json(parse_json_arg(move, "move"));
    auto a = warrow::applicable(as_presentation(h), spec);
    if (a.ok) return WARROW_OK;
    *reason = dup_string(a.reason);
    return WARROW_ERR_DOMAIN;
  });
}

warrow_status warrow_move_apply(const warrow_handle* h, const char* move,
                                warrow_handle** out) {
  return guarded([&]() {
    require_out(out);
    auto spec = warrow::MoveSpec::from_json(parse_json_arg(move, "move"));
    *out = wrap(warrow::apply(as_presentation(h), spec));
    return WARROW_OK;
  });
}

warrow_status warrow_moves_trace(const warrow_handle* h, const char* moves,
                                 warrow_handle** out, char** trace) {
  return guarded([&]() {
    require_out(out);
    require_out(trace);
    warrow::Json arr = parse_json_arg(moves, "moves");
    if (!arr.is_array())
      throw warrow::CalcError(warrow::ErrorKind::Usage, "moves must be a JSON array");
    std::vector<warrow::MoveSpec> specs;
    for (const auto& j : arr) specs.push_back(warrow::MoveSpec::from_json(j));
    auto result = warrow::trace(as_presentation(h), specs);
    std::string lines;
    for (const auto& entry : result.log) lines += warrow::dump_json(entry) + "\n";
    *out = wrap(std::move(result.presentation));
    *trace = dup_string(lines);
    return WARROW_OK;
  });
}

warrow_status warrow_wirtinger(const warrow_handle* h, char** out) {
  return guarded([&]() {
    require_out(out);
    auto gp = warrow::wirtinger(as_presentation(h));
    warrow::Json j;
    warrow::Json gens = warrow::Json::array();
    for (const auto& g : gp.generators) {
      warrow::Json e;
      e["strand"] = g.strand;
      e["arc"] = g.arc;
      gens.push_back(e);
    }
    j["generators"] = gens;
    warrow::Json rels = warrow::Json::array();
    for (const auto& r : gp.relators) rels.push_back(r.to_string());
    j["relators"] = rels;
    warrow::Json mer = warrow::Json::object();
    for (const auto& [sid, lu] : gp.meridians)
      mer[std::to_string(sid)] = warrow::Json::array({lu.first, lu.second});
    j["meridians"] = mer;
    *out = dup_string(warrow::dump_json(j));
    return WARROW_OK;
  });
}

warrow_status warrow_alexander(const warrow_handle* h, char** text, char** json) {
  return guarded([&]() {
    auto res = warrow::alexander_normalized(as_presentation(h));
    if (res.degenerate)
      throw warrow::CalcError(warrow::ErrorKind::Domain,
                              "degenerate presentation: zero polynomial");
    if (text) *text = dup_string(res.poly.to_string());
    if (json) {
      warrow::Json j = warrow::Json::array();
      for (const auto& [e, c] : res.poly.terms())
        j.push_back(warrow::Json::array({e, c.to_string()}));
      *json = dup_string(warrow::dump_json(j));
    }
    return WARROW_OK;
  });
}

warrow_status warrow_alpha(const warrow_handle* h, int kmax, int64_t* out) {
  return guarded([&]() {
    require_out(out);
    auto res = warrow::alexander_normalized(as_presentation(h));
    if (res.degenerate)
      throw warrow::CalcError(warrow::ErrorKind::Domain,
                              "degenerate presentation: zero polynomial");
    auto alpha = warrow::alpha_coeffs(res.poly, kmax);
    for (size_t i = 0; i < alpha.size(); ++i) out[i] = alpha[i];
    return WARROW_OK;
  });
}

warrow_status warrow_milnor(const warrow_handle* h, const char* seq, int64_t* out) {
  return guarded([&]() {
    require_out(out);
    *out = warrow::milnor_mu(as_presentation(h), warrow::parse_sequence(seq));
    return WARROW_OK;
  });
}

warrow_status warrow_milnor_all(const warrow_handle* h, int maxlen, char** json) {
  return guarded([&]() {
    require_out(json);
    auto all = warrow::milnor_all_nonrepeated(as_presentation(h), maxlen);
    warrow::Json j = warrow::Json::object();
    for (const auto& [key, v] : all) j[key] = v;
    *json = dup_string(warrow::dump_json(j));
    return WARROW_OK;
  });
}

warrow_status warrow_longitudes(const warrow_handle* h, int k, char** json) {
  return guarded([&]() {
    require_out(json);
    auto ls = warrow::longitudes(as_presentation(h), k);
    warrow::Json j = warrow::Json::array();
    for (const auto& w : ls.lambda) j.push_back(w.to_string());
    *json = dup_string(warrow::dump_json(j));
    return WARROW_OK;
  });
}

warrow_status warrow_invariants(const warrow_handle* h, char** json) {
  return guarded([&]() {
    require_out(json);
    const warrow::Presentation& p = as_presentation(h);
    warrow::Json j;
    const auto& strands = p.diagram.strands;
    bool long_knot = strands.size() == 1 && strands[0].kind == warrow::StrandKind::Open;
    bool closed_knot = strands.size() == 1 && strands[0].kind == warrow::StrandKind::Closed;
    if (long_knot) {
      j["kind"] = "long_knot";
      auto res = warrow::alexander_normalized(p);
      if (res.degenerate) {
        j["alexander"] = nullptr;
        j["degenerate"] = true;
      } else {
        j["alexander"] = res.poly.to_string();
        warrow::Json alpha = warrow::Json::array();
        for (long long a : warrow::alpha_coeffs(res.poly, 8)) alpha.push_back(a);
        j["alpha_2_to_8"] = alpha;
      }
    } else if (closed_knot) {
      j["kind"] = "welded_knot";
      warrow::Presentation reduced = warrow::homotopy_reduce(p);
      j["homotopy_trivial"] = reduced.trees.empty();
    } else {
      j["kind"] = "string_link";
      int n = static_cast<int>(strands.size());
      auto all = warrow::milnor_all_nonrepeated(p, n);
      warrow::Json mu = warrow::Json::object();
      for (const auto& [key, v] : all) mu[key] = v;
      j["milnor_nonrepeated"] = mu;
    }
    *json = dup_string(warrow::dump_json(j));
    return WARROW_OK;
  });
}

warrow_status warrow_make_lk(int k, int inverted, warrow_handle** out) {
  return guarded([&]() {
    require_out(out);
    *out = wrap(warrow::make_Lk(k, inverted != 0));
    return WARROW_OK;
  });
}

warrow_status warrow_make_ti(const char* seq, int n, int inverted, warrow_handle** out) {
  return guarded([&]() {
    require_out(out);
    *out = wrap(warrow::make_TI(warrow::parse_sequence(seq), n, inverted != 0));
    return WARROW_OK;
  });
}

warrow_status warrow_concat(const warrow_handle* a, const warrow_handle* b,
                            warrow_handle** out) {
  return guarded([&]() {
    require_out(out);
    *out = wrap(warrow::concat(as_presentation(a), as_presentation(b)));
    return WARROW_OK;
  });
}

warrow_status warrow_wk_normal_form(const warrow_handle* h, int k, char** json,
                                    warrow_handle** representative) {
  return guarded([&]() {
    auto nf = warrow::wk_normal_form(as_presentation(h), k);
    if (json) {
      warrow::Json j;
      j["k"] = nf.k;
      warrow::Json ex = warrow::Json::object();
      for (size_t i = 0; i < nf.exponents.size(); ++i)
        ex[std::to_string(i + 2)] = nf.exponents[i];
      j["exponents"] = ex;
      *json = dup_string(warrow::dump_json(j));
    }
    if (representative) *representative = wrap(std::move(nf.representative));
    return WARROW_OK;
  });
}

warrow_status warrow_homotopy_reduce(const warrow_handle* h, warrow_handle** out) {
  return guarded([&]() {
    require_out(out);
    *out = wrap(warrow::homotopy_reduce(as_presentation(h)));
    return WARROW_OK;
  });
}

warrow_status warrow_homotopy_normal_form(const warrow_handle* h, char** json,
                                          warrow_handle** representative) {
  return guarded([&]() {
    auto nf = warrow::homotopy_normal_form(as_presentation(h));
    if (json) {
      warrow::Json j;
      j["n"] = nf.n;
      warrow::Json ex = warrow::Json::object();
      for (const auto& [key, v] : nf.exponents) ex[key] = v;
      j["exponents"] = ex;
      *json = dup_string(warrow::dump_json(j));
    }
    if (representative) *representative = wrap(std::move(nf.representative));
    return WARROW_OK;
  });
}

warrow_status warrow_equiv_wk(const warrow_handle* a, const warrow_handle* b, int k,
                              char** witness) {
  return guarded([&]() {
    auto d = warrow::decide_wk(as_presentation(a), as_presentation(b), k);
    if (d.equal) return WARROW_OK;
    if (witness) *witness = dup_string("alpha_" + std::to_string(d.witness));
    return WARROW_DISTINCT;
  });
}

warrow_status warrow_equiv_homotopy(const warrow_handle* a, const warrow_handle* b,
                                    char** witness) {
  return guarded([&]() {
    auto d = warrow::decide_homotopy(as_presentation(a), as_presentation(b));
    if (d.equal) return WARROW_OK;
    if (witness) *witness = dup_string("mu_" + d.witness);
    return WARROW_DISTINCT;
  });
}

warrow_status warrow_virtualize(const warrow_handle* gauss, const int* crossings,
                                int count, warrow_handle** out) {
  return guarded([&]() {
    require_out(out);
    std::set<int> c;
    for (int i = 0; i < count; ++i) c.insert(crossings[i]);
    *out = wrap(warrow::virtualize(as_gauss(gauss), c));
    return WARROW_OK;
  });
}

warrow_status warrow_ft_alternating_sum(const warrow_handle* gauss, const char* invariant,
                                        const int* subset, int count, char** value_json) {
  return guarded([&]() {
    require_out(value_json);
    std::set<int> s;
    for (int i = 0; i < count; ++i) s.insert(subset[i]);
    auto fn = warrow::lookup_invariant(invariant);
    auto v = warrow::alternating_sum(fn, as_gauss(gauss), s);
    warrow::Json j = warrow::Json::array();
    for (long long x : v) j.push_back(x);
    *value_json = dup_string(warrow::dump_json(j));
    return WARROW_OK;
  });
}

}  // extern "C"
