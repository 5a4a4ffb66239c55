#include "foldcat/operads.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>
#include <sstream>

#include "foldcat/errors.hpp"
#include "foldcat/rng.hpp"

namespace foldcat {

Collection::Collection(std::shared_ptr<const Structure> s, std::vector<BottomObj> objects)
    : s_(std::move(s)), objects_(std::move(objects)) {
  if (!s_) throw ValidationError("collection needs a structure");
  if (objects_.empty()) objects_.push_back(BottomObj::empty());
}

const BottomObj& Collection::at(int j) const {
  if (j < 0 || j > max_arity())
    throw ValidationError("arity " + std::to_string(j) + " outside stored collection");
  return objects_[static_cast<std::size_t>(j)];
}

Collection load_collection(std::istream& in, std::shared_ptr<const Structure> structure) {
  std::string line;
  std::vector<std::pair<int, std::string>> entries;
  std::shared_ptr<const Structure> s = std::move(structure);
  std::shared_ptr<const Structure> directive;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size() || line[i] == '#') continue;
    const std::size_t colon = line.find(':', i);
    if (colon == std::string::npos)
      throw ValidationError("line " + std::to_string(line_no) + ": expected 'j: object'");
    std::string key = line.substr(i, colon - i);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    std::string rest = line.substr(colon + 1);
    const auto first = rest.find_first_not_of(" \t");
    const auto last = rest.find_last_not_of(" \t\r");
    rest = first == std::string::npos ? "" : rest.substr(first, last - first + 1);
    if (key == "structure") {
      directive = make_structure(rest);
      continue;
    }
    int j = -1;
    try {
      std::size_t used = 0;
      j = std::stoi(key, &used);
      if (used != key.size()) j = -1;
    } catch (...) {
      j = -1;
    }
    if (j < 0)
      throw ValidationError("line " + std::to_string(line_no) + ": bad arity '" + key + "'");
    entries.emplace_back(j, rest);
  }
  if (!s) s = directive;
  if (!s) s = make_structure("seq");

  int max_j = 0;
  for (const auto& [j, _] : entries) max_j = std::max(max_j, j);
  std::vector<BottomObj> objects(static_cast<std::size_t>(max_j) + 1, BottomObj::empty());
  for (const auto& [j, text] : entries) {
    objects[static_cast<std::size_t>(j)] =
        text == "empty" ? BottomObj::empty() : BottomObj(s->parse_object(text));
  }
  return Collection(std::move(s), std::move(objects));
}

std::string save_collection(const Collection& c) {
  std::string out = "structure: " + c.structure().name() + "\n";
  for (int j = 0; j <= c.max_arity(); ++j)
    out += std::to_string(j) + ": " + print_bottom(c.structure(), c.at(j)) + "\n";
  return out;
}

BottomObj gamma_value(const Collection& c, int p, int q, int k, std::span<const int> js) {
  const Structure& s = c.structure();
  if (p < 1 || q <= p || q > s.dims())
    throw ValidationError("composition pair out of range");
  if (k < 1 || static_cast<int>(js.size()) != k)
    throw ValidationError("composition needs k >= 1 inner arities");
  const BottomObj& outer = c.at(k);
  if (outer.is_empty()) return BottomObj::empty();
  BottomObj inner = c.at(js[0]);
  for (int t = 1; t < k; ++t) {
    if (inner.is_empty()) return BottomObj::empty();
    inner = bottom_product(s, q, inner, c.at(js[static_cast<std::size_t>(t)]));
  }
  return bottom_product(s, p, outer, inner);
}

bool gamma_exists(const Collection& c, int p, int q, int k, std::span<const int> js) {
  const BottomObj value = gamma_value(c, p, q, k, js);
  if (value.is_empty()) return true;
  int n = 0;
  for (int j : js) n += j;
  return hom_exists(c.structure(), value, c.at(n));
}

std::string witness_text(const OperadWitness& w) {
  std::string out = "(" + std::to_string(w.k) + ";";
  for (std::size_t i = 0; i < w.js.size(); ++i)
    out += (i ? "," : " ") + std::to_string(w.js[i]);
  out += ")";
  return out;
}

namespace {

// Compositions of n into exactly k parts >= 0, lexicographic order.
void for_each_composition(int n, int k, std::vector<int>& js,
                          const std::function<void(const std::vector<int>&)>& fn) {
  if (k == 1) {
    js.push_back(n);
    fn(js);
    js.pop_back();
    return;
  }
  for (int first = 0; first <= n; ++first) {
    js.push_back(first);
    for_each_composition(n - first, k - 1, js, fn);
    js.pop_back();
  }
}

struct AssocInstance {
  int k;
  std::vector<int> js;
  std::vector<int> its;
};

// Seeded associativity instances with every referenced arity <= N.
std::vector<AssocInstance> sample_assoc_instances(int N, const VerifyOptions& options) {
  std::vector<AssocInstance> out;
  SplitMix64 rng(options.seed);
  for (int t = 0; t < options.assoc_samples; ++t) {
    AssocInstance inst;
    inst.k = 1 + static_cast<int>(rng.below(3));
    if (inst.k > N) inst.k = N;
    if (inst.k < 1) break;
    int j = 0;
    for (int i = 0; i < inst.k; ++i) {
      const int cap = std::min(3, N - j);
      const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(cap) + 1));
      inst.js.push_back(v);
      j += v;
    }
    int i_total = 0;
    for (int u = 0; u < j; ++u) {
      const int cap = std::min(2, N - i_total);
      const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(cap) + 1));
      inst.its.push_back(v);
      i_total += v;
    }
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace

bool audit_associativity(const Collection& c, int p, int q, int k,
                         std::span<const int> js, std::span<const int> its,
                         std::string* detail) {
  const Structure& s = c.structure();
  if (k < 1 || static_cast<int>(js.size()) != k)
    throw ValidationError("composition needs k >= 1 inner arities");
  int j = 0;
  for (int v : js) j += v;
  if (static_cast<int>(its.size()) != j)
    throw ValidationError("inner arity row must have one entry per leaf");
  int i_total = 0;
  for (int v : its) i_total += v;

  auto fail = [&](const std::string& why) {
    if (detail) {
      *detail = "associativity (" + std::to_string(k) + "; js=";
      for (std::size_t t = 0; t < js.size(); ++t)
        *detail += (t ? "," : "") + std::to_string(js[t]);
      *detail += "; its=";
      for (std::size_t t = 0; t < its.size(); ++t)
        *detail += (t ? "," : "") + std::to_string(its[t]);
      *detail += "): " + why;
    }
    return false;
  };

  auto q_chain = [&](std::span<const int> arities) {
    BottomObj chain = c.at(arities[0]);
    for (std::size_t t = 1; t < arities.size(); ++t)
      chain = bottom_product(s, q, chain, c.at(arities[t]));
    return chain;
  };

  // Source value C(k) (x)_p (chain of js) (x)_p (chain of its).
  BottomObj source = bottom_product(s, p, c.at(k), q_chain(js));
  if (j > 0) source = bottom_product(s, p, source, q_chain(its));
  if (source.is_empty()) return true;  // both legs are zero maps

  // Top leg: gamma (x) id into C(j) (x)_p (chain its), then gamma into C(i).
  {
    BottomObj mid = c.at(j);
    if (j > 0) mid = bottom_product(s, p, mid, q_chain(its));
    if (!hom_exists(s, source, mid)) return fail("gamma (x) id edge missing");
    if (!hom_exists(s, mid, c.at(i_total))) return fail("outer gamma edge missing");
  }

  // Bottom leg: id (x) eta regrouping, blockwise gammas, final gamma.
  std::vector<int> hs(static_cast<std::size_t>(k), 0);
  BottomObj blocks = BottomObj::empty();
  int offset = 0;
  for (int t = 0; t < k; ++t) {
    const int jb = js[static_cast<std::size_t>(t)];
    BottomObj block = c.at(jb);
    int h = 0;
    if (jb > 0) {
      std::span<const int> slice = its.subspan(static_cast<std::size_t>(offset),
                                               static_cast<std::size_t>(jb));
      for (int v : slice) h += v;
      block = bottom_product(s, p, block, q_chain(slice));
    }
    hs[static_cast<std::size_t>(t)] = h;
    offset += jb;
    blocks = (t == 0) ? block : bottom_product(s, q, blocks, block);
  }
  const BottomObj regrouped = bottom_product(s, p, c.at(k), blocks);
  if (!hom_exists(s, source, regrouped)) return fail("id (x) eta edge missing");

  offset = 0;
  for (int t = 0; t < k; ++t) {
    const int jb = js[static_cast<std::size_t>(t)];
    if (jb > 0) {
      std::span<const int> slice = its.subspan(static_cast<std::size_t>(offset),
                                               static_cast<std::size_t>(jb));
      if (!gamma_exists(c, p, q, jb, slice))
        return fail("blockwise gamma missing at block " + std::to_string(t + 1));
    }
    offset += jb;
  }

  const BottomObj after = bottom_product(s, p, c.at(k), q_chain(hs));
  if (!hom_exists(s, regrouped, after)) return fail("id (x) blockwise gamma edge missing");
  if (!hom_exists(s, after, c.at(i_total))) return fail("final gamma edge missing");
  return true;
}

OperadReport verify_operad(const Collection& c, int p, int q, int N,
                           const VerifyOptions& options) {
  const Structure& s = c.structure();
  if (N > c.max_arity())
    throw ValidationError("arity bound exceeds stored collection");
  OperadReport r;
  r.p = p;
  r.q = q;
  r.max_arity = N;

  // Unit map: I <= C(1), and C(1) may not be the bottom.
  if (c.max_arity() < 1 || c.at(1).is_empty()) {
    r.unit_ok = false;
    r.unit_detail = "C(1) is empty; the unit map has nowhere to land";
  } else if (!leq(s, s.unit(), c.at(1).value())) {
    r.unit_ok = false;
    r.unit_detail = "I <= C(1) fails: C(1) = " + print_bottom(s, c.at(1));
  } else {
    r.unit_ok = true;
    r.unit_detail = "I <= C(1)";
  }

  for (int n = 0; n <= N; ++n) {
    for (int k = 1; k <= N; ++k) {
      std::vector<int> js;
      for_each_composition(n, k, js, [&](const std::vector<int>& comp) {
        ++r.compositions_checked;
        if (gamma_exists(c, p, q, k, comp)) return;
        ++r.witness_count;
        if (static_cast<int>(r.witnesses.size()) >= options.max_witnesses) return;
        OperadWitness w;
        w.k = k;
        w.js = comp;
        w.lhs = print_bottom(s, gamma_value(c, p, q, k, comp));
        w.target = print_bottom(s, c.at(n));
        r.witnesses.push_back(std::move(w));
      });
    }
  }

  for (const auto& inst : sample_assoc_instances(N, options)) {
    ++r.assoc_audits;
    std::string detail;
    if (!audit_associativity(c, p, q, inst.k, inst.js, inst.its, &detail)) {
      const bool seen = std::find(r.assoc_failures.begin(), r.assoc_failures.end(),
                                  detail) != r.assoc_failures.end();
      if (!seen && static_cast<int>(r.assoc_failures.size()) < 16)
        r.assoc_failures.push_back(detail);
    }
  }
  return r;
}

std::string format_report(const OperadReport& r) {
  std::string out = "verify-operad: pair=(" + std::to_string(r.p) + "," +
                    std::to_string(r.q) + ") max-arity=" + std::to_string(r.max_arity) + "\n";
  out += "unit: " + std::string(r.unit_ok ? "ok" : "FAIL") + " (" + r.unit_detail + ")\n";
  out += "gamma: " + std::to_string(r.compositions_checked) + " compositions, " +
         std::to_string(r.witness_count) + " failures\n";
  for (const auto& w : r.witnesses)
    out += "witness: " + witness_text(w) + ": value=" + w.lhs + " target=" + w.target + "\n";
  out += "associativity: " + std::to_string(r.assoc_audits) + " audits, " +
         std::to_string(r.assoc_failures.size()) + " failures\n";
  for (const auto& f : r.assoc_failures) out += "audit-failure: " + f + "\n";
  out += r.valid() ? "verdict: VALID\n" : "verdict: INVALID\n";
  return out;
}

bool demote_check(const Collection& c, int q, int N, const VerifyOptions& options) {
  for (int s = 2; s <= q + 1; ++s)
    for (int p = 1; p < s; ++p)
      if (!verify_operad(c, p, s, N, options).valid()) return false;
  return true;
}

namespace {

void check_prefix(std::span<const std::uint64_t> starts) {
  if (starts.empty() || starts[0] != 0)
    throw ValidationError("starting terms must begin with a_1 = 0");
  const int l = static_cast<int>(starts.size());
  for (int x = 1; x <= l; ++x)
    for (int y = x; x + y <= l; ++y)
      if (starts[static_cast<std::size_t>(x + y - 1)] <
          starts[static_cast<std::size_t>(x - 1)] + starts[static_cast<std::size_t>(y - 1)])
        throw ValidationError("starting terms violate a_{x+y} >= a_x + a_y at x=" +
                              std::to_string(x) + ", y=" + std::to_string(y));
}

}  // namespace

MinimalNatOperad::MinimalNatOperad(std::vector<std::uint64_t> starts)
    : starts_(std::move(starts)) {
  check_prefix(starts_);
  memo_ = starts_;
}

std::uint64_t MinimalNatOperad::term(int n) {
  if (n < 1) throw ValidationError("term index must be >= 1");
  // Binary splits suffice: superadditivity of the already-built prefix folds
  // any longer composition into a two-part one with an equal or larger sum,
  // and the outer arity is dominated by a_{n-1} + a_1.
  while (static_cast<int>(memo_.size()) < n) {
    const int m = static_cast<int>(memo_.size()) + 1;
    std::uint64_t best = 0;
    for (int x = 1; x <= m / 2; ++x)
      best = std::max(best, memo_[static_cast<std::size_t>(x - 1)] +
                                memo_[static_cast<std::size_t>(m - x - 1)]);
    memo_.push_back(best);
  }
  return memo_[static_cast<std::size_t>(n - 1)];
}

std::vector<std::uint64_t> MinimalNatOperad::first_terms(int count) {
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int n = 1; n <= count; ++n) out.push_back(term(n));
  return out;
}

std::uint64_t closed_form_nat(std::span<const std::uint64_t> starts, int n) {
  check_prefix(starts);
  if (n < 1) throw ValidationError("term index must be >= 1");
  const int k = static_cast<int>(starts.size());
  const int pp = n / k;
  const int qq = n % k;
  const std::uint64_t a_q = qq == 0 ? 0 : starts[static_cast<std::size_t>(qq - 1)];
  return a_q + static_cast<std::uint64_t>(pp) * starts[static_cast<std::size_t>(k - 1)];
}

namespace {

// Partitions of n into exactly k parts >= 1, nonincreasing. Order of inner
// arities never changes the value: the inner chain is a commutative sum.
void for_each_partition(int n, int k, int max_part, std::vector<int>& parts,
                        const std::function<void(const std::vector<int>&)>& fn) {
  if (k == 1) {
    if (n >= 1 && n <= max_part) {
      parts.push_back(n);
      fn(parts);
      parts.pop_back();
    }
    return;
  }
  for (int first = std::min(n - (k - 1), max_part); first >= 1; --first) {
    if (static_cast<long long>(first) * k < n) break;
    parts.push_back(first);
    for_each_partition(n - first, k - 1, first, parts, fn);
    parts.pop_back();
  }
}

}  // namespace

Collection generate_minimal_diagram(const Diagram& seed, int N, int p, int q) {
  if (seed.dim() != 1) throw ValidationError("diagram generation works on partitions");
  auto s = make_structure("yd1");
  std::vector<BottomObj> objects;
  objects.reserve(static_cast<std::size_t>(N) + 1);
  objects.push_back(BottomObj::empty());               // C(0)
  if (N >= 1) objects.push_back(BottomObj(Obj(Diagram(1))));  // C(1) = unit
  if (N >= 2) objects.push_back(BottomObj(Obj(seed)));

  std::vector<Diagram> terms;  // terms[n] for n >= 1
  terms.push_back(Diagram(1));
  if (N >= 2) terms.push_back(seed);

  for (int n = 3; n <= N; ++n) {
    Diagram best(1);
    bool have = false;
    for (int k = 2; k <= n - 1; ++k) {
      std::vector<int> parts;
      for_each_partition(n, k, n, parts, [&](const std::vector<int>& comp) {
        Obj inner{terms[static_cast<std::size_t>(comp[0] - 1)]};
        for (std::size_t t = 1; t < comp.size(); ++t)
          inner = s->product(q, inner, Obj(terms[static_cast<std::size_t>(comp[t] - 1)]));
        const Obj value =
            s->product(p, Obj(terms[static_cast<std::size_t>(k - 1)]), inner);
        const Diagram& dv = std::get<Diagram>(value);
        if (!have || lex_cmp_nd(best, dv) < 0) {
          best = dv;
          have = true;
        }
      });
    }
    terms.push_back(best);
    objects.push_back(BottomObj(Obj(best)));
  }
  return Collection(std::move(s), std::move(objects));
}

namespace {

// n / 2^k rounded to the nearest integer, halves toward zero.
std::uint64_t round_half_down(std::uint64_t n, std::uint64_t denom) {
  return (2 * n + denom - 1) / (2 * denom);
}

}  // namespace

Diagram closed_form_single_box(int n) {
  if (n < 1) throw ValidationError("term index must be >= 1");
  std::vector<std::uint64_t> cols;
  std::uint64_t denom = 2;
  while (true) {
    const std::uint64_t v = round_half_down(static_cast<std::uint64_t>(n), denom);
    if (v == 0) break;
    cols.push_back(v);
    denom *= 2;
  }
  return Diagram::partition(std::move(cols));
}

bool canonical_construction_check(int n) {
  if (n < 2) throw ValidationError("canonical construction starts at n = 2");
  const Diagram outer = closed_form_single_box((n + 1) / 2);
  const std::uint64_t twos = static_cast<std::uint64_t>(n / 2);
  // The inner chain is floor(n/2) copies of C(2) = [1] added pointwise,
  // padded with C(1) factors that contribute nothing.
  const Diagram chain = twos == 0 ? Diagram(1) : Diagram::partition({twos});
  const Diagram built = merge_axis(outer, chain, 1);
  return built == closed_form_single_box(n);
}

bool check_superadditive_heights(std::span<const std::uint64_t> f, int N) {
  if (N < 1 || static_cast<int>(f.size()) < N)
    throw ValidationError("height table shorter than requested bound");
  if (f[0] != 0) return false;
  for (int i = 1; i <= N; ++i)
    for (int jj = i; i + jj <= N; ++jj)
      if (f[static_cast<std::size_t>(i + jj - 1)] <=
          f[static_cast<std::size_t>(i - 1)] + f[static_cast<std::size_t>(jj - 1)])
        return false;
  return true;
}

Collection tensor_operads(const Collection& c, const Collection& d, int i, int m) {
  if (c.structure().name() != d.structure().name())
    throw ValidationError("operads live in different structures");
  const Structure& s = c.structure();
  const int product = i + m;
  if (i < 1 || product > s.dims())
    throw ValidationError("tensor index " + std::to_string(i) + " needs product " +
                          std::to_string(product) + " of " + std::to_string(s.dims()));
  const int max_j = std::min(c.max_arity(), d.max_arity());
  std::vector<BottomObj> objects;
  objects.reserve(static_cast<std::size_t>(max_j) + 1);
  for (int j = 0; j <= max_j; ++j)
    objects.push_back(bottom_product(s, product, c.at(j), d.at(j)));
  return Collection(c.structure_ptr(), std::move(objects));
}

AlgebraReport verify_algebra(const Collection& c, const BottomObj& A, int p, int q,
                             int N, const VerifyOptions& options) {
  const Structure& s = c.structure();
  if (N > c.max_arity()) throw ValidationError("arity bound exceeds stored collection");
  AlgebraReport r;
  r.p = p;
  r.q = q;
  r.max_arity = N;

  // Unit square: I (x)_p A = A must factor through C(1) (x)_p A.
  if (A.is_empty()) {
    r.unit_ok = true;
    r.unit_detail = "A is the bottom; every leg is a zero map";
  } else if (c.max_arity() < 1 || c.at(1).is_empty()) {
    r.unit_ok = false;
    r.unit_detail = "C(1) is empty";
  } else if (!leq(s, s.unit(), c.at(1).value())) {
    r.unit_ok = false;
    r.unit_detail = "I <= C(1) fails";
  } else {
    const BottomObj via = bottom_product(s, p, c.at(1), A);
    r.unit_ok = !via.is_empty() && leq(s, A.value(), via.value()) &&
                leq(s, via.value(), A.value());
    r.unit_detail = r.unit_ok ? "C(1) (x)_p A = A"
                              : "C(1) (x)_p A = " + print_bottom(s, via) +
                                    " differs from A = " + print_bottom(s, A);
  }

  auto theta_target = [&](int j) {
    // C(j) (x)_p (A (x)_q ... (x)_q A), j copies; the empty chain is I.
    BottomObj acc = c.at(j);
    if (j > 0) {
      BottomObj chain = A;
      for (int t = 1; t < j; ++t) chain = bottom_product(s, q, chain, A);
      return bottom_product(s, p, acc, chain);
    }
    return bottom_product(s, p, acc, BottomObj(s.unit()));
  };

  for (int j = 0; j <= N; ++j) {
    ++r.actions_checked;
    const BottomObj value = theta_target(j);
    if (!hom_exists(s, value, A)) {
      ++r.failure_count;
      if (static_cast<int>(r.failures.size()) < 16)
        r.failures.push_back("theta at arity " + std::to_string(j) + ": value " +
                             print_bottom(s, value) + " not below A");
    }
  }

  // Associativity: gamma leg vs blockwise theta leg, sampled.
  SplitMix64 rng(options.seed);
  for (int t = 0; t < options.assoc_samples; ++t) {
    const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, std::min(3, N)))));
    std::vector<int> js;
    int j = 0;
    for (int u = 0; u < k; ++u) {
      const int cap = std::min(2, N - j);
      const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(cap) + 1));
      js.push_back(v);
      j += v;
    }
    ++r.assoc_audits;

    BottomObj source = c.at(k);
    BottomObj chain = c.at(js[0]);
    for (int u = 1; u < k; ++u) chain = bottom_product(s, q, chain, c.at(js[static_cast<std::size_t>(u)]));
    source = bottom_product(s, p, source, chain);
    if (j > 0) {
      BottomObj as = A;
      for (int u = 1; u < j; ++u) as = bottom_product(s, q, as, A);
      source = bottom_product(s, p, source, as);
    }
    if (source.is_empty()) continue;

    bool ok = gamma_exists(c, p, q, k, js);
    if (ok) ok = hom_exists(s, theta_target(j), A);
    if (ok) {
      // Regrouped leg: blockwise theta then outer theta.
      BottomObj blocks = BottomObj::empty();
      for (int u = 0; u < k; ++u) {
        BottomObj block = theta_target(js[static_cast<std::size_t>(u)]);
        if (!hom_exists(s, block, A)) {
          ok = false;
          break;
        }
        blocks = (u == 0) ? block : bottom_product(s, q, blocks, block);
      }
      if (ok) {
        BottomObj regrouped = bottom_product(s, p, c.at(k), blocks);
        ok = hom_exists(s, source, regrouped) && hom_exists(s, theta_target(k), A);
      }
    }
    if (!ok) {
      std::string d = "algebra associativity (" + std::to_string(k) + "; js=";
      for (std::size_t u = 0; u < js.size(); ++u) d += (u ? "," : "") + std::to_string(js[u]);
      d += ")";
      const bool seen = std::find(r.assoc_failures.begin(), r.assoc_failures.end(), d) !=
                        r.assoc_failures.end();
      if (!seen && static_cast<int>(r.assoc_failures.size()) < 16)
        r.assoc_failures.push_back(d);
    }
  }
  return r;
}

std::string format_report(const AlgebraReport& r) {
  std::string out = "algebra: pair=(" + std::to_string(r.p) + "," + std::to_string(r.q) +
                    ") max-arity=" + std::to_string(r.max_arity) + "\n";
  out += "unit: " + std::string(r.unit_ok ? "ok" : "FAIL") + " (" + r.unit_detail + ")\n";
  out += "actions: " + std::to_string(r.actions_checked) + " checked, " +
         std::to_string(r.failure_count) + " failures\n";
  for (const auto& f : r.failures) out += "failure: " + f + "\n";
  out += "associativity: " + std::to_string(r.assoc_audits) + " audits, " +
         std::to_string(r.assoc_failures.size()) + " failures\n";
  for (const auto& f : r.assoc_failures) out += "audit-failure: " + f + "\n";
  out += r.valid() ? "verdict: VALID\n" : "verdict: INVALID\n";
  return out;
}

}  // namespace foldcat
