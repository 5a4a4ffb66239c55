#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace foldcat {

/// Object of the free n-fold monoidal category on a set of atoms: a binary
/// expression tree with labeled products and the empty expression as unit.
/// Normalized expressions carry no unit under a product.
class Expr {
 public:
  enum class Kind { Unit, Atom, Prod };

  static Expr unit();
  static Expr atom(std::string name);
  static Expr prod(int index, Expr left, Expr right);

  Kind kind() const;
  const std::string& atom_name() const;   // pre: Atom
  int index() const;                      // pre: Prod
  Expr left() const;                      // pre: Prod
  Expr right() const;                     // pre: Prod

  bool operator==(const Expr& other) const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar: expr := atom | "0" | "(" expr "*"digits expr ")".
/// Product indices run 1..max_index. Throws ParseError with position.
Expr parse_expr(std::string_view text, int max_index = 9);

/// Fully parenthesized canonical text; round-trips through parse_expr.
std::string to_text(const Expr& e);

/// Atoms in occurrence order. Throws ValidationError on duplicates.
std::vector<std::string> atoms_of(const Expr& e);

/// Atoms outside `keep` become the unit, then unit absorption applies.
Expr restrict_expr(const Expr& e, const std::set<std::string>& keep);

struct PairIndex {
  int index;
  bool swapped;  // restriction gave b (x)_i a instead of a (x)_i b
};

/// The unique product joining two atoms of an expression that uses each atom
/// exactly once. Throws ValidationError if either atom is missing.
PairIndex pair_index(const Expr& e, const std::string& a, const std::string& b);

/// Decision procedure for hom existence between expressions over the same
/// atom set: for every pair a,b with a (x)_i b in A, B must contain
/// a (x)_j b with j >= i or b (x)_j a with j > i. With strict_paper_rule the
/// unswapped case also demands j > i, which denies identities.
bool morphism_exists(const Expr& a, const Expr& b, bool strict_paper_rule = false);

/// 1 iff morphism_exists, else 0; homs in this category are unique.
int hom_count(const Expr& a, const Expr& b, bool strict_paper_rule = false);

/// First violating atom pair, for reports. Empty when a morphism exists.
std::string morphism_witness(const Expr& a, const Expr& b, bool strict_paper_rule = false);

}  // namespace foldcat
