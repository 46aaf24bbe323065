// Command line front end for the w-tree calculus shared library.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "warrow.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDistinct = 3;

int max_degree_cap() {
  const char* env = std::getenv("WARROW_MAX_DEGREE");
  if (!env) return 8;
  int v = std::atoi(env);
  return v >= 2 ? v : 8;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Handle {
  warrow_handle* h = nullptr;
  Handle() = default;
  explicit Handle(warrow_handle* p) : h(p) {}
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  Handle(Handle&& o) noexcept : h(o.h) { o.h = nullptr; }
  ~Handle() { warrow_release(h); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { warrow_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

int status_to_exit(warrow_status st) {
  switch (st) {
    case WARROW_OK: return kExitOk;
    case WARROW_ERR_USAGE: return kExitUsage;
    case WARROW_DISTINCT: return kExitDistinct;
    default: return kExitDomain;
  }
}

[[noreturn]] void fail(warrow_status st) {
  std::cerr << "error: " << warrow_last_error() << "\n";
  std::exit(status_to_exit(st));
}

Handle parse_or_fail(const std::string& text) {
  warrow_handle* h = nullptr;
  warrow_status st = warrow_parse(text.c_str(), &h);
  if (st != WARROW_OK) fail(st);
  return Handle(h);
}

// Presentation view of any input: Gauss codes pass through the canonical
// arrow presentation.
Handle as_presentation(const Handle& in) {
  if (warrow_kind(in.h) == WARROW_KIND_PRESENTATION) {
    OwnedString js;
    warrow_status st = warrow_to_json(in.h, &js.s);
    if (st != WARROW_OK) fail(st);
    return parse_or_fail(js.str());
  }
  warrow_handle* out = nullptr;
  warrow_status st = warrow_canonical_arrows(in.h, &out);
  if (st != WARROW_OK) fail(st);
  return Handle(out);
}

Handle as_gauss(const Handle& in) {
  if (warrow_kind(in.h) == WARROW_KIND_GAUSS_CODE) {
    OwnedString js;
    warrow_status st = warrow_to_json(in.h, &js.s);
    if (st != WARROW_OK) fail(st);
    return parse_or_fail(js.str());
  }
  warrow_handle* out = nullptr;
  warrow_status st = warrow_surgery(in.h, &out);
  if (st != WARROW_OK) fail(st);
  return Handle(out);
}

std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoi(tok));
  }
  return out;
}

// Runs fn over the inputs, optionally in parallel; output order follows the
// input order regardless of scheduling.
int run_batch(const std::vector<std::string>& inputs, int jobs,
              const std::function<int(const std::string&, std::string&)>& fn) {
  std::vector<std::string> texts;
  for (const auto& path : inputs) texts.push_back(read_input(path));
  std::vector<std::string> outputs(texts.size());
  std::vector<int> codes(texts.size(), kExitOk);
  if (jobs <= 1 || texts.size() <= 1) {
    for (size_t i = 0; i < texts.size(); ++i) codes[i] = fn(texts[i], outputs[i]);
  } else {
    std::vector<std::thread> pool;
    std::mutex mu;
    size_t next = 0;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&]() {
        for (;;) {
          size_t i;
          {
            std::lock_guard<std::mutex> lock(mu);
            if (next >= texts.size()) return;
            i = next++;
          }
          codes[i] = fn(texts[i], outputs[i]);
        }
      });
    for (auto& t : pool) t.join();
  }
  int worst = kExitOk;
  for (size_t i = 0; i < texts.size(); ++i) {
    if (inputs.size() > 1) std::cout << "== " << inputs[i] << " ==\n";
    std::cout << outputs[i];
    worst = std::max(worst, codes[i]);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"w-tree calculus: presentations, moves and welded invariants"};
  app.require_subcommand(1);

  std::vector<std::string> inputs{"-"};
  int jobs = 1;
  app.add_option("--input", inputs, "input file(s); '-' reads stdin")
      ->capture_default_str();
  app.add_option("--jobs", jobs, "process batch inputs with this many threads");

  const int cap = max_degree_cap();

  auto* cmd_invariants =
      app.add_subcommand("invariants", "kind-aware invariant summary");

  auto* cmd_alexander =
      app.add_subcommand("alexander", "normalized Alexander polynomial of a long knot");

  int alpha_kmax = 5;
  auto* cmd_alpha = app.add_subcommand("alpha", "normalized coefficient vector");
  cmd_alpha->add_option("--kmax", alpha_kmax, "highest coefficient index")
      ->capture_default_str();

  std::string milnor_seq;
  int milnor_all = 0;
  auto* cmd_milnor = app.add_subcommand("milnor", "welded Milnor invariants");
  cmd_milnor->add_option("--seq", milnor_seq, "index sequence, e.g. 123 or 10,2,3");
  cmd_milnor->add_option("--all-nonrepeated", milnor_all,
                         "all non-repeated sequences up to this length");

  int expand_once_index = -1;
  auto* cmd_expand = app.add_subcommand("expand", "expand w-trees into w-arrows");
  cmd_expand->add_option("--once", expand_once_index, "expand a single tree index");

  auto* cmd_surgery = app.add_subcommand("surgery", "Gauss code of the presented object");
  bool surgery_json = false;
  cmd_surgery->add_flag("--json", surgery_json, "emit JSON instead of the string form");

  std::string moves_file;
  auto* cmd_moves = app.add_subcommand("moves", "apply a move list and print the trace");
  cmd_moves->add_option("--trace", moves_file, "JSON file with the move array")
      ->required();

  std::string normalize_mode = "wk";
  int normalize_k = 4;
  bool emit_representative = false;
  auto* cmd_normalize = app.add_subcommand("normalize", "constructive normal forms");
  cmd_normalize->add_option("--mode", normalize_mode, "wk or homotopy")
      ->check(CLI::IsMember({"wk", "homotopy"}));
  cmd_normalize->add_option("--k", normalize_k, "degree bound for wk mode");
  cmd_normalize->add_flag("--representative", emit_representative,
                          "also print the representative presentation");

  std::string equiv_mode = "wk";
  int equiv_k = 4;
  bool equiv_exclusive = false;
  std::string equiv_other;
  auto* cmd_equiv = app.add_subcommand("equiv", "equivalence decision (exit 0/3)");
  cmd_equiv->add_option("--mode", equiv_mode, "wk or homotopy")
      ->check(CLI::IsMember({"wk", "homotopy"}));
  cmd_equiv->add_option("--k", equiv_k, "degree bound for wk mode");
  cmd_equiv->add_flag("--exclusive", equiv_exclusive,
                      "wk mode: compare indices strictly below k");
  cmd_equiv->add_option("--other", equiv_other, "second input file")->required();

  int gen_lk = 0;
  std::string gen_ti;
  int gen_n = 0;
  bool gen_inv = false;
  auto* cmd_generate = app.add_subcommand("generate", "generator presentations");
  cmd_generate->add_option("--Lk", gen_lk, "long-knot generator of this degree");
  cmd_generate->add_option("--TI", gen_ti, "string-link generator for this sequence");
  cmd_generate->add_option("--n", gen_n, "component count for --TI");
  cmd_generate->add_flag("--inv", gen_inv, "inverted variant");

  std::string ft_invariant = "alpha2";
  std::string ft_subset;
  auto* cmd_ftcheck =
      app.add_subcommand("ftcheck", "alternating sum over crossing subsets");
  cmd_ftcheck->add_option("--invariant", ft_invariant, "e.g. alpha2 or mu-12")
      ->capture_default_str();
  cmd_ftcheck->add_option("--subset", ft_subset, "comma separated crossing ids")
      ->required();

  for (CLI::App* sub :
       {cmd_invariants, cmd_alexander, cmd_alpha, cmd_milnor, cmd_expand, cmd_surgery,
        cmd_moves, cmd_normalize, cmd_equiv, cmd_generate, cmd_ftcheck})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_generate->parsed()) {
      warrow_handle* out = nullptr;
      warrow_status st;
      if (gen_lk > 0) {
        st = warrow_make_lk(gen_lk, gen_inv ? 1 : 0, &out);
      } else if (!gen_ti.empty()) {
        if (gen_n <= 0) {
          std::cerr << "error: --TI needs --n\n";
          return kExitUsage;
        }
        st = warrow_make_ti(gen_ti.c_str(), gen_n, gen_inv ? 1 : 0, &out);
      } else {
        std::cerr << "error: generate needs --Lk or --TI\n";
        return kExitUsage;
      }
      if (st != WARROW_OK) fail(st);
      Handle h(out);
      OwnedString js;
      st = warrow_to_json(h.h, &js.s);
      if (st != WARROW_OK) fail(st);
      std::cout << js.str() << "\n";
      return kExitOk;
    }

    auto worker = [&](const std::string& text, std::string& out_text) -> int {
      std::ostringstream out;
      Handle in = parse_or_fail(text);

      if (cmd_invariants->parsed()) {
        Handle p = as_presentation(in);
        OwnedString js;
        warrow_status st = warrow_invariants(p.h, &js.s);
        if (st != WARROW_OK) fail(st);
        out << js.str() << "\n";
      } else if (cmd_alexander->parsed()) {
        Handle p = as_presentation(in);
        OwnedString text_out;
        warrow_status st = warrow_alexander(p.h, &text_out.s, nullptr);
        if (st != WARROW_OK) fail(st);
        out << text_out.str() << "\n";
      } else if (cmd_alpha->parsed()) {
        if (alpha_kmax < 2 || alpha_kmax > cap) {
          std::cerr << "error: --kmax must lie in 2.." << cap << "\n";
          std::exit(kExitUsage);
        }
        Handle p = as_presentation(in);
        std::vector<int64_t> buf(alpha_kmax - 1);
        warrow_status st = warrow_alpha(p.h, alpha_kmax, buf.data());
        if (st != WARROW_OK) fail(st);
        out << "[";
        for (size_t i = 0; i < buf.size(); ++i) out << (i ? "," : "") << buf[i];
        out << "]\n";
      } else if (cmd_milnor->parsed()) {
        Handle p = as_presentation(in);
        if (!milnor_seq.empty()) {
          size_t commas = std::count(milnor_seq.begin(), milnor_seq.end(), ',');
          size_t indices = commas ? commas + 1 : milnor_seq.size();
          if (static_cast<int>(indices) > cap) {
            std::cerr << "error: sequence longer than the degree cap " << cap << "\n";
            std::exit(kExitUsage);
          }
          int64_t v = 0;
          warrow_status st = warrow_milnor(p.h, milnor_seq.c_str(), &v);
          if (st != WARROW_OK) fail(st);
          out << v << "\n";
        } else {
          int maxlen = milnor_all > 0 ? milnor_all : cap;
          OwnedString js;
          warrow_status st = warrow_milnor_all(p.h, std::min(maxlen, cap), &js.s);
          if (st != WARROW_OK) fail(st);
          out << js.str() << "\n";
        }
      } else if (cmd_expand->parsed()) {
        Handle p = as_presentation(in);
        warrow_handle* e = nullptr;
        warrow_status st = expand_once_index >= 0
                               ? warrow_expand_once(p.h, expand_once_index, &e)
                               : warrow_full_expand(p.h, &e);
        if (st != WARROW_OK) fail(st);
        Handle eh(e);
        OwnedString js;
        st = warrow_to_json(eh.h, &js.s);
        if (st != WARROW_OK) fail(st);
        out << js.str() << "\n";
      } else if (cmd_surgery->parsed()) {
        Handle p = as_presentation(in);
        warrow_handle* g = nullptr;
        warrow_status st = warrow_surgery(p.h, &g);
        if (st != WARROW_OK) fail(st);
        Handle gh(g);
        OwnedString s;
        st = surgery_json ? warrow_to_json(gh.h, &s.s) : warrow_to_text(gh.h, &s.s);
        if (st != WARROW_OK) fail(st);
        out << s.str() << "\n";
      } else if (cmd_moves->parsed()) {
        Handle p = as_presentation(in);
        std::string moves_json = read_input(moves_file);
        warrow_handle* r = nullptr;
        OwnedString trace;
        warrow_status st = warrow_moves_trace(p.h, moves_json.c_str(), &r, &trace.s);
        if (st != WARROW_OK) fail(st);
        Handle rh(r);
        OwnedString js;
        st = warrow_to_json(rh.h, &js.s);
        if (st != WARROW_OK) fail(st);
        out << trace.str() << js.str() << "\n";
      } else if (cmd_normalize->parsed()) {
        Handle p = as_presentation(in);
        OwnedString js;
        warrow_handle* rep = nullptr;
        warrow_status st;
        if (normalize_mode == "wk") {
          if (normalize_k < 2 || normalize_k > cap) {
            std::cerr << "error: --k must lie in 2.." << cap << "\n";
            std::exit(kExitUsage);
          }
          st = warrow_wk_normal_form(p.h, normalize_k, &js.s, &rep);
        } else {
          st = warrow_homotopy_normal_form(p.h, &js.s, &rep);
        }
        if (st != WARROW_OK) fail(st);
        Handle rh(rep);
        out << js.str() << "\n";
        if (emit_representative) {
          OwnedString rjs;
          st = warrow_to_json(rh.h, &rjs.s);
          if (st != WARROW_OK) fail(st);
          out << rjs.str() << "\n";
        }
      } else if (cmd_equiv->parsed()) {
        Handle p = as_presentation(in);
        Handle q_in = parse_or_fail(read_input(equiv_other));
        Handle q = as_presentation(q_in);
        OwnedString witness;
        warrow_status st;
        if (equiv_mode == "wk") {
          // the exclusive bound i < k is the inclusive bound at k-1
          int bound = equiv_exclusive ? equiv_k - 1 : equiv_k;
          if (bound < 2) {
            out << "equal\n";
            out_text = out.str();
            return kExitOk;
          }
          st = warrow_equiv_wk(p.h, q.h, bound, &witness.s);
        } else {
          st = warrow_equiv_homotopy(p.h, q.h, &witness.s);
        }
        if (st == WARROW_OK) {
          out << "equal\n";
        } else if (st == WARROW_DISTINCT) {
          out << "distinct at " << witness.str() << "\n";
          out_text = out.str();
          return kExitDistinct;
        } else {
          fail(st);
        }
      } else if (cmd_ftcheck->parsed()) {
        Handle g = as_gauss(in);
        std::vector<int> subset = parse_id_list(ft_subset);
        OwnedString js;
        warrow_status st = warrow_ft_alternating_sum(
            g.h, ft_invariant.c_str(), subset.data(), static_cast<int>(subset.size()),
            &js.s);
        if (st != WARROW_OK) fail(st);
        out << js.str() << "\n";
      }
      out_text = out.str();
      return kExitOk;
    };

    return run_batch(inputs, jobs, worker);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
