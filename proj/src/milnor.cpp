#include "milnor.hpp"

#include <algorithm>
#include <functional>

namespace warrow {

namespace {

struct StrandData {
  int strand_id = 0;
  std::vector<int> trees;  // trees whose head lies on this strand, position order
};

// Shared head layout; strand order = component order.
struct Layout {
  GroupPresentation gp;
  std::vector<StrandData> strands;
  int n = 0;
  std::map<int, int> strand_component;  // strand id -> 0-based component
};

Layout make_layout(const Presentation& p) {
  if (!p.diagram.is_string_link())
    throw CalcError(ErrorKind::Domain, "Milnor invariants need a string-link presentation");
  Layout lay;
  lay.gp = wirtinger(p);
  lay.n = static_cast<int>(p.diagram.strands.size());
  for (int i = 0; i < lay.n; ++i) {
    StrandData sd;
    sd.strand_id = p.diagram.strands[i].id;
    lay.strand_component[sd.strand_id] = i;
    std::vector<std::pair<int, int>> heads;
    for (size_t t = 0; t < p.trees.size(); ++t)
      if (p.trees[t].head.strand == sd.strand_id)
        heads.push_back({p.trees[t].head.pos, static_cast<int>(t)});
    std::sort(heads.begin(), heads.end());
    for (auto& [pos, t] : heads) sd.trees.push_back(t);
    lay.strands.push_back(sd);
  }
  return lay;
}

}  // namespace

LongitudeSet longitudes(const Presentation& p, int k) {
  if (k < 2) throw CalcError(ErrorKind::Usage, "nilpotency class must be >= 2");
  Layout lay = make_layout(p);

  // value of each arc generator as a word in the meridians 0..n-1
  std::vector<FreeWord> val(lay.gp.generators.size());
  for (size_t g = 0; g < lay.gp.generators.size(); ++g) {
    int comp = lay.strand_component.at(lay.gp.generators[g].strand);
    val[g] = FreeWord::generator(comp);
  }

  constexpr size_t kWordLimit = 1u << 20;
  auto substitute = [&](const FreeWord& u, const std::vector<FreeWord>& env) {
    FreeWord out;
    for (const Letter& l : u.letters()) {
      if (l.sign > 0)
        out.append(env[l.gen]);
      else
        out.append_inverse(env[l.gen]);
      if (out.size() > kWordLimit)
        throw CalcError(ErrorKind::Domain,
                        "longitude words exceed the size limit; use the series route");
    }
    return out;
  };

  LongitudeSet out;
  out.n = lay.n;
  out.k = k;
  out.lambda.assign(lay.n, FreeWord());
  for (int round = 0; round < k; ++round) {
    std::vector<FreeWord> next(val.size());
    for (int i = 0; i < lay.n; ++i) {
      const StrandData& sd = lay.strands[i];
      FreeWord conj;  // accumulated conjugator along the strand
      int arc = lay.gp.meridians.at(sd.strand_id).first;
      next[arc] = FreeWord::generator(i);
      for (int t : sd.trees) {
        FreeWord u = substitute(lay.gp.head_conjugators[t], val);
        conj.append(u);
        int out_arc = lay.gp.head_out_gen[t];
        next[out_arc] = conj.conjugate_of(FreeWord::generator(i));
      }
      out.lambda[i] = conj;
    }
    val = std::move(next);
  }
  return out;
}

std::vector<TruncatedSeries> longitude_series(const Presentation& p, int k) {
  if (k < 2) throw CalcError(ErrorKind::Usage, "nilpotency class must be >= 2");
  Layout lay = make_layout(p);
  const int n = lay.n;

  // Magnus image of each arc value; meridian i starts as 1 + X_{i+1}.
  std::vector<TruncatedSeries> val(lay.gp.generators.size(), TruncatedSeries::one(n, k));
  for (size_t g = 0; g < lay.gp.generators.size(); ++g) {
    int comp = lay.strand_component.at(lay.gp.generators[g].strand);
    val[g] = TruncatedSeries::generator(comp + 1, n, k);
  }

  auto substitute = [&](const FreeWord& u, const std::vector<TruncatedSeries>& env) {
    TruncatedSeries out = TruncatedSeries::one(n, k);
    for (const Letter& l : u.letters())
      out = out * (l.sign > 0 ? env[l.gen] : env[l.gen].inverse());
    return out;
  };

  std::vector<TruncatedSeries> lambda(n, TruncatedSeries::one(n, k));
  for (int round = 0; round < k; ++round) {
    std::vector<TruncatedSeries> next = val;
    for (int i = 0; i < n; ++i) {
      const StrandData& sd = lay.strands[i];
      TruncatedSeries conj = TruncatedSeries::one(n, k);
      int arc = lay.gp.meridians.at(sd.strand_id).first;
      next[arc] = TruncatedSeries::generator(i + 1, n, k);
      for (int t : sd.trees) {
        TruncatedSeries u = substitute(lay.gp.head_conjugators[t], val);
        conj = conj * u;
        int out_arc = lay.gp.head_out_gen[t];
        next[out_arc] = conj.inverse() * TruncatedSeries::generator(i + 1, n, k) * conj;
      }
      lambda[i] = conj;
    }
    val = std::move(next);
  }
  return lambda;
}

long long milnor_mu(const Presentation& p, const std::vector<int>& seq) {
  const int m = static_cast<int>(seq.size());
  if (m < 2) throw CalcError(ErrorKind::Usage, "index sequence needs length >= 2");
  if (!p.diagram.is_string_link())
    throw CalcError(ErrorKind::Domain, "Milnor invariants need a string-link presentation");
  const int n = static_cast<int>(p.diagram.strands.size());
  for (int i : seq)
    if (i < 1 || i > n)
      throw CalcError(ErrorKind::Usage, "index out of range in sequence");
  std::vector<TruncatedSeries> lambda = longitude_series(p, m);
  std::vector<int> word(seq.begin(), seq.end() - 1);
  return lambda[seq.back() - 1].coefficient(word);
}

std::map<std::string, long long> milnor_all_nonrepeated(const Presentation& p, int maxlen) {
  const int n = static_cast<int>(p.diagram.strands.size());
  std::map<std::string, long long> out;
  if (maxlen < 2) return out;
  maxlen = std::min(maxlen, n);
  long long sequences = 0;
  for (int len = 2; len <= maxlen; ++len) {
    long long count = 1;
    for (int i = 0; i < len; ++i) count *= n - i;
    sequences += count;
  }
  if (sequences > 200000)
    throw CalcError(ErrorKind::Usage,
                    "too many index sequences; lower the length bound");
  // one longitude computation per truncation degree
  for (int len = 2; len <= maxlen; ++len) {
    std::vector<TruncatedSeries> lambda = longitude_series(p, len);
    std::vector<int> seq;
    std::vector<bool> used(n + 1, false);
    std::function<void()> rec = [&]() {
      if (static_cast<int>(seq.size()) == len) {
        std::vector<int> word(seq.begin(), seq.end() - 1);
        out[sequence_key(seq)] = lambda[seq.back() - 1].coefficient(word);
        return;
      }
      for (int i = 1; i <= n; ++i) {
        if (used[i]) continue;
        used[i] = true;
        seq.push_back(i);
        rec();
        seq.pop_back();
        used[i] = false;
      }
    };
    rec();
  }
  return out;
}

std::string sequence_key(const std::vector<int>& seq) {
  std::string s;
  bool wide = false;
  for (int i : seq)
    if (i > 9) wide = true;
  for (size_t j = 0; j < seq.size(); ++j) {
    if (wide && j) s += ",";
    s += std::to_string(seq[j]);
  }
  return s;
}

std::vector<int> parse_sequence(const std::string& text) {
  std::vector<int> out;
  if (text.find(',') != std::string::npos) {
    size_t i = 0;
    while (i < text.size()) {
      size_t j = text.find(',', i);
      if (j == std::string::npos) j = text.size();
      std::string tok = text.substr(i, j - i);
      if (tok.empty()) throw CalcError(ErrorKind::Usage, "empty index in sequence");
      out.push_back(std::stoi(tok));
      i = j + 1;
    }
    return out;
  }
  for (char c : text) {
    if (c < '1' || c > '9')
      throw CalcError(ErrorKind::Usage, "sequence must be digits 1-9 or comma separated");
    out.push_back(c - '0');
  }
  return out;
}

}  // namespace warrow
