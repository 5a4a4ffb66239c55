#include "foldcat/freecat.hpp"

#include <algorithm>

#include "foldcat/errors.hpp"

namespace foldcat {

struct Expr::Node {
  Kind kind;
  std::string name;                  // Atom
  int index = 0;                     // Prod
  std::shared_ptr<const Node> l, r;  // Prod
};

Expr Expr::unit() {
  static const auto node = std::make_shared<const Node>(Node{Kind::Unit, "", 0, nullptr, nullptr});
  return Expr(node);
}

Expr Expr::atom(std::string name) {
  return Expr(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), 0, nullptr, nullptr}));
}

Expr Expr::prod(int index, Expr left, Expr right) {
  return Expr(std::make_shared<const Node>(
      Node{Kind::Prod, "", index, std::move(left.node_), std::move(right.node_)}));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const std::string& Expr::atom_name() const { return node_->name; }
int Expr::index() const { return node_->index; }
Expr Expr::left() const { return Expr(node_->l); }
Expr Expr::right() const { return Expr(node_->r); }

bool Expr::operator==(const Expr& other) const {
  const Node* a = node_.get();
  const Node* b = other.node_.get();
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Unit: return true;
    case Kind::Atom: return a->name == b->name;
    case Kind::Prod:
      return a->index == b->index && Expr(a->l) == Expr(b->l) && Expr(a->r) == Expr(b->r);
  }
  return false;
}

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
}

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

Expr parse_rec(std::string_view s, std::size_t& i, int max_index) {
  skip_ws(s, i);
  if (i >= s.size()) throw ParseError("unexpected end of expression", i);
  if (s[i] == '0') {
    ++i;
    return Expr::unit();
  }
  if (ident_start(s[i])) {
    const std::size_t start = i;
    while (i < s.size() && ident_char(s[i])) ++i;
    return Expr::atom(std::string(s.substr(start, i - start)));
  }
  if (s[i] != '(') throw ParseError("expected atom, '0' or '('", i);
  ++i;
  Expr left = parse_rec(s, i, max_index);
  skip_ws(s, i);
  if (i >= s.size() || s[i] != '*') throw ParseError("expected '*'", i);
  ++i;
  const std::size_t digits = i;
  int index = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
    index = index * 10 + (s[i] - '0');
    ++i;
    if (index > 1000) break;
  }
  if (i == digits) throw ParseError("expected product index after '*'", i);
  if (index < 1 || index > max_index)
    throw ParseError("product index out of range 1.." + std::to_string(max_index), digits);
  Expr right = parse_rec(s, i, max_index);
  skip_ws(s, i);
  if (i >= s.size() || s[i] != ')') throw ParseError("expected ')'", i);
  ++i;
  return Expr::prod(index, std::move(left), std::move(right));
}

void collect_atoms(const Expr& e, std::vector<std::string>& out) {
  switch (e.kind()) {
    case Expr::Kind::Unit: return;
    case Expr::Kind::Atom: out.push_back(e.atom_name()); return;
    case Expr::Kind::Prod:
      collect_atoms(e.left(), out);
      collect_atoms(e.right(), out);
      return;
  }
}

}  // namespace

Expr parse_expr(std::string_view text, int max_index) {
  std::size_t i = 0;
  Expr e = parse_rec(text, i, max_index);
  skip_ws(text, i);
  if (i != text.size()) throw ParseError("trailing characters after expression", i);
  return e;
}

std::string to_text(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Unit: return "0";
    case Expr::Kind::Atom: return e.atom_name();
    case Expr::Kind::Prod:
      return "(" + to_text(e.left()) + " *" + std::to_string(e.index()) + " " +
             to_text(e.right()) + ")";
  }
  return "0";
}

std::vector<std::string> atoms_of(const Expr& e) {
  std::vector<std::string> out;
  collect_atoms(e, out);
  std::vector<std::string> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("expression repeats an atom");
  return out;
}

Expr restrict_expr(const Expr& e, const std::set<std::string>& keep) {
  switch (e.kind()) {
    case Expr::Kind::Unit: return Expr::unit();
    case Expr::Kind::Atom:
      return keep.count(e.atom_name()) ? e : Expr::unit();
    case Expr::Kind::Prod: {
      Expr l = restrict_expr(e.left(), keep);
      Expr r = restrict_expr(e.right(), keep);
      if (l.kind() == Expr::Kind::Unit) return r;
      if (r.kind() == Expr::Kind::Unit) return l;
      return Expr::prod(e.index(), std::move(l), std::move(r));
    }
  }
  return Expr::unit();
}

PairIndex pair_index(const Expr& e, const std::string& a, const std::string& b) {
  if (a == b) throw ValidationError("pair_index needs two distinct atoms");
  const Expr r = restrict_expr(e, {a, b});
  if (r.kind() != Expr::Kind::Prod || r.left().kind() != Expr::Kind::Atom ||
      r.right().kind() != Expr::Kind::Atom)
    throw ValidationError("atom missing from expression: " + a + " or " + b);
  return PairIndex{r.index(), r.left().atom_name() == b};
}

namespace {

// Checks the pair rule for every unordered atom pair; returns the first
// violating pair or the empty string.
std::string find_violation(const Expr& a, const Expr& b, bool strict) {
  std::vector<std::string> sa = atoms_of(a);
  std::vector<std::string> sb = atoms_of(b);
  std::vector<std::string> sorted_a = sa, sorted_b = sb;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) throw ValidationError("expressions use different atom sets");

  for (std::size_t i = 0; i < sa.size(); ++i) {
    for (std::size_t j = i + 1; j < sa.size(); ++j) {
      const PairIndex pa = pair_index(a, sa[i], sa[j]);
      const PairIndex pb = pair_index(b, sa[i], sa[j]);
      const bool ok = (pa.swapped == pb.swapped)
                          ? (strict ? pb.index > pa.index : pb.index >= pa.index)
                          : pb.index > pa.index;
      if (!ok) return "{" + sa[i] + "," + sa[j] + "}";
    }
  }
  return "";
}

}  // namespace

bool morphism_exists(const Expr& a, const Expr& b, bool strict_paper_rule) {
  return find_violation(a, b, strict_paper_rule).empty();
}

int hom_count(const Expr& a, const Expr& b, bool strict_paper_rule) {
  return morphism_exists(a, b, strict_paper_rule) ? 1 : 0;
}

std::string morphism_witness(const Expr& a, const Expr& b, bool strict_paper_rule) {
  return find_violation(a, b, strict_paper_rule);
}

}  // namespace foldcat
