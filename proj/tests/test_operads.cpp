#include <doctest.h>

#include <functional>
#include <sstream>

#include "collections.hpp"
#include "foldcat/errors.hpp"
#include "foldcat/operads.hpp"
#include "support.hpp"

using namespace foldcat;
using testsupport::all_unit_collection;
using testsupport::fibrewise;
using testsupport::initial_collection;
using testsupport::ones_collection;
using testsupport::single_entry_collection;
using testsupport::square_collection;

namespace {

// Reference term: maximum over every composition with k >= 2 parts >= 1,
// excluding the self-referential all-ones split, of max(a_k, sum a_{j_s}).
std::uint64_t slow_minimal_nat_term(std::vector<std::uint64_t> memo, int n) {
  while (static_cast<int>(memo.size()) < n) {
    const int m = static_cast<int>(memo.size()) + 1;
    std::uint64_t best = 0;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
      if (remaining == 0) {
        if (parts.size() < 2) return;
        if (static_cast<int>(parts.size()) == m) return;  // all-ones split
        const int k = static_cast<int>(parts.size());
        std::uint64_t sum = 0;
        for (int j : parts) sum += memo[static_cast<std::size_t>(j - 1)];
        best = std::max(best, std::max(memo[static_cast<std::size_t>(k - 1)], sum));
        return;
      }
      for (int part = std::min(remaining, max_part); part >= 1; --part) {
        parts.push_back(part);
        rec(remaining - part, part);
        parts.pop_back();
      }
    };
    rec(m, m - 1);
    memo.push_back(best);
  }
  return memo[static_cast<std::size_t>(n - 1)];
}

}  // namespace

TEST_CASE("gamma_exists") {
  const Collection bee = ones_collection(8);
  SUBCASE("the failing (concat, add) composition of the all-ones operad") {
    const int js[] = {1, 3, 2};
    CHECK_FALSE(gamma_exists(bee, 2, 3, 3, js));
    const BottomObj v = gamma_value(bee, 2, 3, 3, js);
    CHECK(print_bottom(bee.structure(), v) == "[1,1,2,1]");
  }
  SUBCASE("an empty factor makes the composition vacuous") {
    const int js[] = {1, 0, 2};
    CHECK(gamma_exists(bee, 2, 3, 3, js));
    CHECK(gamma_value(bee, 2, 3, 3, js).is_empty());
  }
  SUBCASE("the square operad composition with target [5,5,5,5,5]") {
    const Collection squares = square_collection(8);
    const int js[] = {1, 3, 2};
    const BottomObj v = gamma_value(squares, 2, 3, 3, js);
    CHECK(print_bottom(squares.structure(), v) == "[3,2,2,2]");
    CHECK(print_bottom(squares.structure(), squares.at(6)) == "[5,5,5,5,5]");
    CHECK(gamma_exists(squares, 2, 3, 3, js));
  }
}

TEST_CASE("verify_operad on the all-ones collection") {
  const Collection bee = ones_collection(8);
  CHECK(verify_operad(bee, 1, 2, 8).valid());

  const OperadReport bad = verify_operad(bee, 2, 3, 6);
  CHECK_FALSE(bad.valid());
  bool found = false;
  for (const auto& w : bad.witnesses)
    if (witness_text(w) == "(3; 1,3,2)") found = true;
  CHECK(found);
}

TEST_CASE("verify_operad on the all-unit collection, every pair") {
  for (const std::string name : {"nat", "seq", "yd1"}) {
    const Collection units = all_unit_collection(name, 6);
    const int dims = units.structure().dims();
    for (int p = 1; p <= dims; ++p)
      for (int q = p + 1; q <= dims; ++q) CHECK(verify_operad(units, p, q, 6).valid());
  }
}

TEST_CASE("demotion") {
  const Collection c = single_entry_collection(8);
  CHECK(verify_operad(c, 2, 3, 8).valid());
  CHECK(verify_operad(c, 1, 3, 8).valid());
  CHECK(verify_operad(c, 1, 2, 8).valid());
  CHECK(demote_check(c, 2, 8));

  // The verdict is decided by the composition sweep; the associativity audit
  // still reports that the (1,2) regrouping edge needs the max/concat
  // interchange, which sequences do not satisfy: this source evaluates to
  // [2] while the regrouped chain starts with the smaller block [1].
  const int js[] = {1, 3};
  const int its[] = {2, 2, 1, 1};
  CHECK_FALSE(audit_associativity(c, 1, 2, 2, js, its));
  CHECK(!verify_operad(c, 1, 2, 8).assoc_failures.empty());

  CHECK(demote_check(all_unit_collection("seq", 6), 2, 6));

  // The converse fails outright: the all-ones collection is a (1,2) operad
  // whose (2,3) compositions overshoot their targets.
  const Collection bee = ones_collection(8);
  CHECK(verify_operad(bee, 1, 2, 8).valid());
  CHECK_FALSE(verify_operad(bee, 2, 3, 6).valid());
}

TEST_CASE("minimal integer operads") {
  MinimalNatOperad a({0, 1});
  CHECK(a.first_terms(7) == std::vector<std::uint64_t>{0, 1, 1, 2, 2, 3, 3});
  MinimalNatOperad b({0, 0, 2});
  CHECK(b.first_terms(11) == std::vector<std::uint64_t>{0, 0, 2, 2, 2, 4, 4, 4, 6, 6, 6});
  MinimalNatOperad c({0, 1, 2, 4, 8});
  CHECK(c.first_terms(15) ==
        std::vector<std::uint64_t>{0, 1, 2, 4, 8, 8, 9, 10, 12, 16, 16, 17, 18, 20, 24});

  CHECK_THROWS_AS(MinimalNatOperad({1, 2}), ValidationError);
  CHECK_THROWS_AS(MinimalNatOperad({0, 1, 0}), ValidationError);  // a_3 < a_1 + a_2
}

TEST_CASE("binary recurrence agrees with full composition enumeration") {
  for (const std::vector<std::uint64_t>& starts :
       {std::vector<std::uint64_t>{0, 1}, {0, 0, 1}, {0, 2}, {0, 0, 2}, {0, 1, 2, 4, 8},
        {0, 3, 5}}) {
    MinimalNatOperad gen(starts);
    for (int n = 1; n <= 20; ++n) CHECK(gen.term(n) == slow_minimal_nat_term(starts, n));
  }
}

TEST_CASE("generated integer terms stay superadditive and match the closed form") {
  for (const std::vector<std::uint64_t>& starts :
       {std::vector<std::uint64_t>{0, 1}, {0, 0, 1}, {0, 2}, {0, 0, 2}, {0, 1, 2, 4, 8}}) {
    MinimalNatOperad gen(starts);
    const auto terms = gen.first_terms(60);
    for (int x = 1; x <= 60; ++x)
      for (int y = x; x + y <= 60; ++y)
        CHECK(terms[static_cast<std::size_t>(x + y - 1)] >=
              terms[static_cast<std::size_t>(x - 1)] + terms[static_cast<std::size_t>(y - 1)]);
    for (int n = 1; n <= 60; ++n) CHECK(gen.term(n) == closed_form_nat(starts, n));
  }
}

TEST_CASE("closed_form_nat") {
  const std::vector<std::uint64_t> s01 = {0, 1};
  CHECK(closed_form_nat(s01, 6) == 3);
  CHECK(closed_form_nat(s01, 1) == 0);
  const std::vector<std::uint64_t> s5 = {0, 1, 2, 4, 8};
  CHECK(closed_form_nat(s5, 13) == 18);
}

TEST_CASE("generate_minimal_diagram single box") {
  const Collection c = generate_minimal_diagram(parse_diagram("[1]", 1), 10);
  const std::vector<std::string> expected = {"empty", "[]",      "[1]",    "[1,1]",
                                             "[2,1]", "[2,1,1]", "[3,1,1]", "[3,2,1]",
                                             "[4,2,1]", "[4,2,1,1]"};
  for (int n = 0; n <= 9; ++n)
    CHECK(print_bottom(c.structure(), c.at(n)) == expected[static_cast<std::size_t>(n)]);

  // Generated terms agree with the closed form.
  for (int n = 1; n <= 10; ++n)
    CHECK(std::get<Diagram>(c.at(n).value()) == closed_form_single_box(n));
}

TEST_CASE("block counts of generated operads") {
  for (const auto& [seed_text, blocks] :
       std::vector<std::pair<std::string, std::uint64_t>>{{"[1]", 1}, {"[2,1]", 3}}) {
    const Collection c = generate_minimal_diagram(parse_diagram(seed_text, 1), 12);
    for (int n = 1; n <= 12; ++n)
      CHECK(std::get<Diagram>(c.at(n).value()).cell_count() ==
            blocks * static_cast<std::uint64_t>(n - 1));
  }
  const Collection c = generate_minimal_diagram(parse_diagram("[2,1]", 1), 10);
  CHECK(std::get<Diagram>(c.at(10).value()).cell_count() == 27);
}

TEST_CASE("generated diagram operads demote cleanly") {
  // The partition carrier's products are monotone, so a valid (2,3) operad
  // there verifies for every demoted pair, audits included.
  for (const std::string seed : {"[1]", "[2,1]"}) {
    const Collection c = generate_minimal_diagram(parse_diagram(seed, 1), 8);
    CHECK(verify_operad(c, 2, 3, 8).valid());
    CHECK(demote_check(c, 2, 8));
    for (const auto& [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}})
      CHECK(verify_operad(c, p, q, 8).assoc_failures.empty());
  }
}

TEST_CASE("closed_form_single_box") {
  CHECK(closed_form_single_box(4) == parse_diagram("[2,1]", 1));
  CHECK(closed_form_single_box(9) == parse_diagram("[4,2,1,1]", 1));
  CHECK(closed_form_single_box(2) == parse_diagram("[1]", 1));
  CHECK(closed_form_single_box(1) == Diagram(1));
}

TEST_CASE("canonical construction of the single-box terms") {
  for (int n = 2; n <= 64; ++n) CHECK(canonical_construction_check(n));
}

TEST_CASE("check_superadditive_heights") {
  // f(n) = n - 1 satisfies the strict inequality: (i+j-1) > (i-1) + (j-1).
  std::vector<std::uint64_t> linear;
  for (int n = 1; n <= 20; ++n) linear.push_back(static_cast<std::uint64_t>(n - 1));
  CHECK(check_superadditive_heights(linear, 20));

  std::vector<std::uint64_t> poly;
  for (std::uint64_t n = 1; n <= 20; ++n) poly.push_back((n - 1) * n);
  CHECK(check_superadditive_heights(poly, 20));

  // f(2) = 0 breaks strictness at i = j = 1.
  const std::vector<std::uint64_t> flat = {0, 0, 1};
  CHECK_FALSE(check_superadditive_heights(flat, 3));

  const std::vector<std::uint64_t> nonzero_start = {1, 2, 3};
  CHECK_FALSE(check_superadditive_heights(nonzero_start, 3));
}

TEST_CASE("tensor of operads") {
  const Collection bee = ones_collection(8);
  const Collection single = single_entry_collection(8);
  const Collection prod = tensor_operads(bee, single, 1, 2);
  const std::vector<std::string> expected = {"empty", "[]", "[2]", "[3,1]", "[4,1,1]",
                                             "[5,1,1,1]"};
  for (int j = 0; j <= 5; ++j)
    CHECK(print_bottom(prod.structure(), prod.at(j)) == expected[static_cast<std::size_t>(j)]);
  CHECK(verify_operad(prod, 1, 2, 8).valid());

  // Tensor with the all-unit operad leaves each fibre unchanged.
  const Collection units = all_unit_collection("seq", 8);
  const Collection same = tensor_operads(bee, units, 1, 2);
  for (int j = 0; j <= 8; ++j) CHECK(same.at(j) == bee.at(j));

  // Out-of-range fibre product: m = 2 already needs product 3 of 3.
  CHECK_THROWS_AS(tensor_operads(bee, single, 2, 2), ValidationError);

  // The concatenation variant is not an operad; verification finds a witness.
  const Collection dvar = fibrewise(bee, single, 2);
  const OperadReport bad = verify_operad(dvar, 1, 2, 8);
  CHECK_FALSE(bad.valid());
  CHECK(bad.witness_count > 0);
}

TEST_CASE("associativity audit instances") {
  const Collection squares = square_collection(16);
  // Outer (2; 3,2), inner blocks (2,2,4) and (5,3), landing in the 15 x 15 square.
  const int js[] = {3, 2};
  const int its[] = {2, 2, 4, 5, 3};
  std::string detail;
  CHECK(audit_associativity(squares, 2, 3, 2, js, its, &detail));

  const Collection bee = ones_collection(8);
  const int bad_js[] = {1, 3, 2};
  const int bad_its[] = {1, 1, 1, 1, 1, 1};
  // The gamma edge itself is missing for the (concat, add) pair.
  CHECK_FALSE(audit_associativity(bee, 2, 3, 3, bad_js, bad_its, &detail));
  CHECK(detail.find("gamma") != std::string::npos);
}

namespace {

// Two-dimensional Young diagrams preordered by height: comparison reads the
// first column only, products are merge and vertical stacking.
class HeightPreStructure final : public Structure {
 public:
  std::string name() const override { return "yd1-hpre"; }
  int dims() const override { return 2; }
  Obj unit() const override { return Diagram(1); }
  Obj product(int i, const Obj& a, const Obj& b) const override {
    const auto& x = std::get<Diagram>(a);
    const auto& y = std::get<Diagram>(b);
    return i == 1 ? merge_axis(x, y, 1) : pointwise_add(x, y);
  }
  std::strong_ordering compare(const Obj& a, const Obj& b) const override {
    return std::get<Diagram>(a).height() <=> std::get<Diagram>(b).height();
  }
  Obj parse_object(std::string_view text) const override { return parse_diagram(text, 1); }
  std::string print_object(const Obj& a) const override {
    return to_text(std::get<Diagram>(a));
  }
  Obj sample(SplitMix64& rng, const SampleBounds& b) const override {
    return Diagram::partition({rng.below(b.max_entry + 1)});
  }
  std::string product_name(int i) const override {
    return i == 1 ? "merge (height max)" : "vertical stacking (height sum)";
  }
  std::string carrier_name() const override { return "height-preordered diagrams"; }
};

}  // namespace

TEST_CASE("verify_algebra") {
  // Every object is an algebra for the initial operad (empty, I, empty, ...):
  // all actions off arity one are zero maps.
  const Collection initial = initial_collection("yd1", 6);
  const BottomObj a{initial.structure().parse_object("[2,1]")};
  CHECK(verify_algebra(initial, a, 2, 3, 6).valid());

  // The all-unit collection only acts on objects absorbed by the products:
  // theta at arity two already needs A (x)_q A <= A.
  const Collection units = all_unit_collection("yd1", 6);
  CHECK_FALSE(verify_algebra(units, a, 2, 3, 6).valid());
  CHECK(verify_algebra(units, BottomObj(units.structure().unit()), 2, 3, 6).valid());

  // The bottom is an algebra of any operad: every leg is a zero map.
  const Collection squares = square_collection(6);
  CHECK(verify_algebra(squares, BottomObj::empty(), 2, 3, 6).valid());

  // The single-entry operad acting on [9,9]: theta values start with j - 1,
  // so everything holds while j - 1 stays below 9 and breaks above it.
  const Collection small = single_entry_collection(6);
  const BottomObj big{small.structure().parse_object("[9,9]")};
  CHECK(verify_algebra(small, big, 2, 3, 6).valid());

  const Collection wide = single_entry_collection(12);
  const AlgebraReport r = verify_algebra(wide, big, 2, 3, 12);
  CHECK_FALSE(r.valid());
  CHECK(r.failure_count > 0);
}

TEST_CASE("height-preordered algebra claim is computed, not assumed") {
  // All-ones diagrams acting on an object in the height preorder: theta at
  // arity j needs max(1, j * h(A)) <= h(A), which already fails at j = 2
  // for any stored object. Only the bottom passes.
  auto s = std::make_shared<HeightPreStructure>();
  std::vector<BottomObj> objs;
  objs.push_back(BottomObj::empty());
  for (int j = 1; j <= 6; ++j)
    objs.push_back(BottomObj(Obj(Diagram::partition(
        std::vector<std::uint64_t>(static_cast<std::size_t>(j - 1), 1)))));
  const Collection bee_diagrams(s, std::move(objs));

  const BottomObj nonzero{Obj(Diagram::partition({1}))};
  const AlgebraReport r = verify_algebra(bee_diagrams, nonzero, 1, 2, 6);
  CHECK_FALSE(r.valid());
  CHECK(r.failure_count > 0);

  CHECK(verify_algebra(bee_diagrams, BottomObj::empty(), 1, 2, 6).valid());
}

TEST_CASE("collection files round-trip") {
  const Collection bee = ones_collection(4);
  const std::string text = save_collection(bee);
  std::istringstream in(text);
  const Collection back = load_collection(in);
  CHECK(back.max_arity() == bee.max_arity());
  for (int j = 0; j <= 4; ++j) CHECK(back.at(j) == bee.at(j));

  std::istringstream custom(
      "# a comment\nstructure: yd1\n0: empty\n1: []\n2: [2,1]\n");
  const Collection parsed = load_collection(custom);
  CHECK(parsed.structure().name() == "yd1");
  CHECK(parsed.max_arity() == 2);
  CHECK(print_bottom(parsed.structure(), parsed.at(2)) == "[2,1]");

  std::istringstream bad("nonsense\n");
  CHECK_THROWS_AS(load_collection(bad), ValidationError);
}
