#include "foldcat/structure.hpp"

#include <algorithm>
#include <charconv>

#include "foldcat/errors.hpp"

namespace foldcat {

BottomObj bottom_product(const Structure& s, int i, const BottomObj& a,
                         const BottomObj& b) {
  if (a.is_empty() || b.is_empty()) return BottomObj::empty();
  return BottomObj(s.product(i, a.value(), b.value()));
}

bool hom_exists(const Structure& s, const BottomObj& a, const BottomObj& b) {
  if (a.is_empty()) return true;
  if (b.is_empty()) return false;
  return leq(s, a.value(), b.value());
}

std::string print_bottom(const Structure& s, const BottomObj& a) {
  return a.is_empty() ? "empty" : s.print_object(a.value());
}

bool interchange_holds(const Structure& s, int i, int j, const Obj& a, const Obj& b,
                       const Obj& c, const Obj& d) {
  if (i < 1 || j <= i || j > s.dims()) throw ValidationError("product index out of range");
  const Obj lhs = s.product(i, s.product(j, a, b), s.product(j, c, d));
  const Obj rhs = s.product(j, s.product(i, a, c), s.product(i, b, d));
  return leq(s, lhs, rhs);
}

bool derived_product_monotone(const Structure& s, int p, int q, SplitMix64& rng,
                              const SampleBounds& bounds, int trials) {
  if (p < 1 || q <= p || q > s.dims()) throw ValidationError("product index out of range");
  for (int t = 0; t < trials; ++t) {
    const Obj a = s.sample(rng, bounds);
    const Obj b = s.sample(rng, bounds);
    const Obj low = s.product(p, a, b);
    if (!leq(s, low, s.product(q, a, b))) return false;
    if (!leq(s, low, s.product(q, b, a))) return false;
  }
  return true;
}

namespace {

std::uint64_t parse_nat_text(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
  if (ec != std::errc{}) throw ParseError("expected nonnegative integer", i);
  std::size_t j = static_cast<std::size_t>(p - text.data());
  while (j < text.size() && (text[j] == ' ' || text[j] == '\t')) ++j;
  if (j != text.size()) throw ParseError("trailing characters after integer", j);
  return v;
}

class NatStructure final : public Structure {
 public:
  std::string name() const override { return "nat"; }
  int dims() const override { return 2; }
  Obj unit() const override { return std::uint64_t{0}; }

  Obj product(int i, const Obj& a, const Obj& b) const override {
    const auto x = std::get<std::uint64_t>(a);
    const auto y = std::get<std::uint64_t>(b);
    switch (i) {
      case 1: return std::max(x, y);
      case 2: return x + y;
      default: throw ValidationError("product index out of range for nat");
    }
  }

  std::strong_ordering compare(const Obj& a, const Obj& b) const override {
    return std::get<std::uint64_t>(a) <=> std::get<std::uint64_t>(b);
  }

  Obj parse_object(std::string_view text) const override { return parse_nat_text(text); }
  std::string print_object(const Obj& a) const override {
    return std::to_string(std::get<std::uint64_t>(a));
  }

  Obj sample(SplitMix64& rng, const SampleBounds& b) const override {
    return rng.below(b.max_entry + 1);
  }

  std::string product_name(int i) const override {
    return i == 1 ? "max" : "addition";
  }
  std::string carrier_name() const override { return "nonnegative integers"; }
};

class SeqStructure final : public Structure {
 public:
  std::string name() const override { return "seq"; }
  int dims() const override { return 3; }
  Obj unit() const override { return Seq::zero(); }

  Obj product(int i, const Obj& a, const Obj& b) const override {
    const auto& x = std::get<Seq>(a);
    const auto& y = std::get<Seq>(b);
    switch (i) {
      case 1: return lex_max(x, y);
      case 2: return concat(x, y);
      case 3: return pointwise(x, y);
      default: throw ValidationError("product index out of range for seq");
    }
  }

  std::strong_ordering compare(const Obj& a, const Obj& b) const override {
    return lex_cmp(std::get<Seq>(a), std::get<Seq>(b));
  }

  Obj parse_object(std::string_view text) const override { return parse_seq(text); }
  std::string print_object(const Obj& a) const override {
    return to_text(std::get<Seq>(a));
  }

  Obj sample(SplitMix64& rng, const SampleBounds& b) const override {
    const std::size_t len = rng.below(static_cast<std::uint64_t>(b.max_length) + 1);
    std::vector<std::uint64_t> entries(len);
    for (auto& e : entries) e = rng.below(b.max_entry + 1);
    return Seq(std::move(entries));
  }

  std::string product_name(int i) const override {
    switch (i) {
      case 1: return "lexicographic max";
      case 2: return "concatenation";
      default: return "pointwise addition";
    }
  }
  std::string carrier_name() const override {
    return "finitely supported integer sequences";
  }
};

class DiagramStructure final : public Structure {
 public:
  DiagramStructure(int dim, bool with_max, std::string name)
      : dim_(dim), with_max_(with_max), name_(std::move(name)) {}

  std::string name() const override { return name_; }
  int dims() const override { return dim_ + 1 + (with_max_ ? 1 : 0); }
  Obj unit() const override { return Diagram(dim_); }

  Obj product(int i, const Obj& a, const Obj& b) const override {
    if (i < 1 || i > dims()) throw ValidationError("product index out of range for " + name_);
    const auto& x = std::get<Diagram>(a);
    const auto& y = std::get<Diagram>(b);
    if (with_max_) {
      if (i == 1) return lex_cmp_nd(x, y) < 0 ? y : x;
      --i;
    }
    if (i <= dim_) return merge_axis(x, y, i);
    return pointwise_add(x, y);
  }

  std::strong_ordering compare(const Obj& a, const Obj& b) const override {
    return lex_cmp_nd(std::get<Diagram>(a), std::get<Diagram>(b));
  }

  Obj parse_object(std::string_view text) const override {
    return parse_diagram(text, dim_);
  }
  std::string print_object(const Obj& a) const override {
    return to_text(std::get<Diagram>(a));
  }

  Obj sample(SplitMix64& rng, const SampleBounds& b) const override {
    const int cap = dim_ >= 3 ? std::min(b.max_extent, 3) : b.max_extent;
    std::vector<int> shape(static_cast<std::size_t>(dim_));
    std::size_t total = 1;
    for (auto& e : shape) {
      e = static_cast<int>(rng.below(static_cast<std::uint64_t>(cap) + 1));
      total *= static_cast<std::size_t>(e);
    }
    if (total == 0) return Diagram(dim_);
    std::vector<std::uint64_t> cells(total);
    for (auto& c : cells) c = rng.below(b.max_entry + 1);
    // Sorting every fiber along each axis in turn leaves the array monotone
    // in all axes: later sorts preserve earlier sortedness pairwise.
    Diagram raw = sort_all_axes(shape, std::move(cells));
    return raw;
  }

  std::string product_name(int i) const override {
    if (with_max_) {
      if (i == 1) return "lexicographic max";
      --i;
    }
    if (i <= dim_) return "merge along axis " + std::to_string(i);
    return "pointwise addition";
  }
  std::string carrier_name() const override {
    return std::to_string(dim_) + "-dimensional monotone arrays";
  }

 private:
  static Diagram sort_all_axes(std::vector<int> shape, std::vector<std::uint64_t> cells) {
    const int d = static_cast<int>(shape.size());
    std::vector<std::size_t> st(shape.size(), 1);
    for (int i = d - 2; i >= 0; --i)
      st[static_cast<std::size_t>(i)] =
          st[static_cast<std::size_t>(i) + 1] * static_cast<std::size_t>(shape[static_cast<std::size_t>(i) + 1]);
    for (int ax = 0; ax < d; ++ax) {
      std::vector<int> base_shape = shape;
      base_shape[static_cast<std::size_t>(ax)] = 1;
      std::vector<int> pos(shape.size(), 0);
      std::vector<std::uint64_t> fiber(static_cast<std::size_t>(shape[static_cast<std::size_t>(ax)]));
      bool more = true;
      while (more) {
        std::size_t off = 0;
        for (std::size_t i = 0; i < shape.size(); ++i)
          off += static_cast<std::size_t>(pos[i]) * st[i];
        for (std::size_t t = 0; t < fiber.size(); ++t)
          fiber[t] = cells[off + t * st[static_cast<std::size_t>(ax)]];
        std::stable_sort(fiber.begin(), fiber.end(), std::greater<>());
        for (std::size_t t = 0; t < fiber.size(); ++t)
          cells[off + t * st[static_cast<std::size_t>(ax)]] = fiber[t];
        more = false;
        for (int a = d - 1; a >= 0; --a) {
          if (a == ax) continue;
          if (++pos[static_cast<std::size_t>(a)] < shape[static_cast<std::size_t>(a)]) {
            more = true;
            break;
          }
          pos[static_cast<std::size_t>(a)] = 0;
        }
      }
    }
    return Diagram::from_cells(d, std::move(shape), std::move(cells));
  }

  int dim_;
  bool with_max_;
  std::string name_;
};

int parse_dim_suffix(std::string_view name, std::string_view prefix) {
  std::string_view rest = name.substr(prefix.size());
  int d = 0;
  auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), d);
  if (ec != std::errc{} || p != rest.data() + rest.size() || d < 1 || d > 6)
    throw ValidationError("bad structure name: " + std::string(name));
  return d;
}

}  // namespace

std::shared_ptr<const Structure> make_structure(std::string_view name) {
  if (name == "nat") return std::make_shared<NatStructure>();
  if (name == "seq") return std::make_shared<SeqStructure>();
  if (name == "yd1") return std::make_shared<DiagramStructure>(1, true, "yd1");
  if (name == "yd2") return std::make_shared<DiagramStructure>(2, false, "yd2");
  if (name == "yd3") return std::make_shared<DiagramStructure>(3, false, "yd3");
  if (name.starts_with("ydN:")) {
    const int d = parse_dim_suffix(name, "ydN:");
    return std::make_shared<DiagramStructure>(d, false, std::string(name));
  }
  if (name.starts_with("yd-max:")) {
    const int d = parse_dim_suffix(name, "yd-max:");
    return std::make_shared<DiagramStructure>(d, true, std::string(name));
  }
  throw ValidationError("unknown structure: " + std::string(name));
}

std::vector<std::string> default_structure_names() {
  return {"nat", "seq", "yd1", "yd2", "yd3"};
}

std::string describe(const Structure& s) {
  std::string out = "structure " + s.name() + " (" + std::to_string(s.dims()) +
                    " products, carrier: " + s.carrier_name() + ")\n";
  for (int i = 1; i <= s.dims(); ++i)
    out += "  *" + std::to_string(i) + ": " + s.product_name(i) + "\n";
  out += "  unit: " + s.print_object(s.unit()) + "\n";
  return out;
}

}  // namespace foldcat
