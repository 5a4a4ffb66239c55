#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "foldcat/bottom.hpp"
#include "foldcat/diagram.hpp"
#include "foldcat/rng.hpp"
#include "foldcat/seq.hpp"

namespace foldcat {

/// Object of a registered carrier.
using Obj = std::variant<std::uint64_t, Seq, Diagram>;

struct SampleBounds {
  std::uint64_t max_entry = 9;
  int max_length = 5;  // sequence lengths
  int max_extent = 4;  // diagram extents per axis (capped lower at high dim)
};

/// A strictly associative family of interchanging products on a totally
/// ordered carrier. Products are 1-based; each is monotone in both arguments
/// and shares the single unit. Hom existence between objects is the order.
class Structure {
 public:
  virtual ~Structure() = default;

  virtual std::string name() const = 0;
  virtual int dims() const = 0;
  virtual Obj unit() const = 0;
  virtual Obj product(int i, const Obj& a, const Obj& b) const = 0;
  virtual std::strong_ordering compare(const Obj& a, const Obj& b) const = 0;

  virtual Obj parse_object(std::string_view text) const = 0;
  virtual std::string print_object(const Obj& a) const = 0;
  virtual Obj sample(SplitMix64& rng, const SampleBounds& bounds) const = 0;

  virtual std::string product_name(int i) const = 0;
  virtual std::string carrier_name() const = 0;
};

inline bool leq(const Structure& s, const Obj& a, const Obj& b) {
  return s.compare(a, b) <= 0;
}
inline bool eq(const Structure& s, const Obj& a, const Obj& b) {
  return s.compare(a, b) == 0;
}

using BottomObj = MaybeEmpty<Obj>;

/// Empty is absorbing for every product.
BottomObj bottom_product(const Structure& s, int i, const BottomObj& a,
                         const BottomObj& b);

/// Posetal hom with the adjoined bottom: true iff a is empty, or both are
/// non-empty and a <= b. Maps into the bottom are zero maps and never count.
bool hom_exists(const Structure& s, const BottomObj& a, const BottomObj& b);

std::string print_bottom(const Structure& s, const BottomObj& a);

/// Existence of eta^{ij} on one tuple:
/// (a (x)_j b) (x)_i (c (x)_j d) <= (a (x)_i c) (x)_j (b (x)_i d), i < j.
bool interchange_holds(const Structure& s, int i, int j, const Obj& a, const Obj& b,
                       const Obj& c, const Obj& d);

/// a (x)_p b <= a (x)_q b and a (x)_p b <= b (x)_q a on sampled pairs, p < q.
bool derived_product_monotone(const Structure& s, int p, int q, SplitMix64& rng,
                              const SampleBounds& bounds, int trials);

/// Registry names: nat, seq, yd1, yd2, yd3, ydN:k, yd-max:k.
/// yd1 carries the lexicographic-max augmentation (products max, merge, add);
/// yd2 and yd3 are the pure merge/add structures on 2- and 3-dimensional
/// arrays. Throws ValidationError for unknown names.
std::shared_ptr<const Structure> make_structure(std::string_view name);

/// The named structures every sweep runs over.
std::vector<std::string> default_structure_names();

/// Product table, unit and carrier summary for a structure.
std::string describe(const Structure& s);

}  // namespace foldcat
