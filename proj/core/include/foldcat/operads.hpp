#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "foldcat/structure.hpp"

namespace foldcat {

/// Arity-indexed family of objects with an adjoined bottom, the data of an
/// operad candidate. Index 0 defaults to empty.
class Collection {
 public:
  Collection(std::shared_ptr<const Structure> s, std::vector<BottomObj> objects);

  const Structure& structure() const { return *s_; }
  std::shared_ptr<const Structure> structure_ptr() const { return s_; }
  int max_arity() const { return static_cast<int>(objects_.size()) - 1; }
  const BottomObj& at(int j) const;

 private:
  std::shared_ptr<const Structure> s_;
  std::vector<BottomObj> objects_;
};

/// File format: one "j: <object-text>" line per arity, "j: empty" for the
/// bottom, "#" comments, optional "structure: <name>" directive. Unlisted
/// arities below the maximum default to empty.
Collection load_collection(std::istream& in,
                           std::shared_ptr<const Structure> structure = nullptr);
std::string save_collection(const Collection& c);

/// Value of C(k) (x)_p (C(j_1) (x)_q ... (x)_q C(j_k)); empty is absorbing.
BottomObj gamma_value(const Collection& c, int p, int q, int k, std::span<const int> js);

/// The composition map exists: the value is empty, or both it and the target
/// C(sum js) are non-empty with value <= target. A non-empty value with an
/// empty target is a zero map and does not count.
bool gamma_exists(const Collection& c, int p, int q, int k, std::span<const int> js);

struct OperadWitness {
  int k = 0;
  std::vector<int> js;
  std::string lhs;
  std::string target;
};
std::string witness_text(const OperadWitness& w);  // "(3; 1,3,2)"

struct OperadReport {
  int p = 0, q = 0, max_arity = 0;
  bool unit_ok = false;
  std::string unit_detail;
  long long compositions_checked = 0;
  long long witness_count = 0;
  std::vector<OperadWitness> witnesses;  // capped
  long long assoc_audits = 0;
  std::vector<std::string> assoc_failures;

  /// The verdict is decided by the unit laws and the composition sweep. In a
  /// posetal carrier composition is associative whenever it exists, so the
  /// associativity audit is reported but carries no veto; it flags gaps in
  /// the ambient interchange structure.
  bool valid() const { return unit_ok && witness_count == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  int assoc_samples = 50;
  int max_witnesses = 100;
};

/// Checks gamma existence for every composition of every n <= N (parts >= 0),
/// the unit laws, and seeded associativity-square audits. In a posetal
/// carrier a square commutes exactly when every edge exists and no leg mixes
/// a zero map with a non-zero one, which is what the audit decides.
OperadReport verify_operad(const Collection& c, int p, int q, int N,
                           const VerifyOptions& options = {});

std::string format_report(const OperadReport& r);

/// One associativity square: outer composition (k; js), inner arities `its`
/// (one block per js entry, sum js entries in total). All five edges of the
/// square must exist. Returns true when the square commutes.
bool audit_associativity(const Collection& c, int p, int q, int k,
                         std::span<const int> js, std::span<const int> its,
                         std::string* detail = nullptr);

/// Valid for (q, q+1) implies valid for every p < s <= q+1.
bool demote_check(const Collection& c, int q, int N, const VerifyOptions& options = {});

/// Minimal extension of a starting prefix in the (max, +) structure:
/// a_n = max over nontrivial splits of sums of earlier terms. Lazily
/// evaluable to any index.
class MinimalNatOperad {
 public:
  /// starts[0] must be 0 and the prefix must satisfy a_{x+y} >= a_x + a_y.
  /// Throws ValidationError otherwise.
  explicit MinimalNatOperad(std::vector<std::uint64_t> starts);

  std::uint64_t term(int n);                 // n >= 1
  std::vector<std::uint64_t> first_terms(int count);
  int start_count() const { return static_cast<int>(starts_.size()); }

 private:
  std::vector<std::uint64_t> starts_;
  std::vector<std::uint64_t> memo_;  // memo_[i] = a_{i+1}
};

/// a_q + p a_k for n = p k + q, 0 <= q < k, with a_0 read as 0;
/// k is the number of starting terms.
std::uint64_t closed_form_nat(std::span<const std::uint64_t> starts, int n);

/// Term-wise lexicographic-maximum extension of C(2) = seed under the
/// merge/add composition pair, on the yd1 structure. C(0) is empty and
/// C(1) is the unit.
Collection generate_minimal_diagram(const Diagram& seed, int N, int p = 2, int q = 3);

/// k-th column height is n / 2^k rounded half toward zero, until zero.
Diagram closed_form_single_box(int n);

/// Evaluates the canonical composite of closed-form terms
/// C(ceil(n/2)) merged with the sum of floor(n/2) copies of C(2)
/// and compares it to closed_form_single_box(n).
bool canonical_construction_check(int n);

/// f[0] = f(1). True iff f(1) = 0 and f(i+j) > f(i) + f(j) whenever
/// i, j >= 1 and i + j <= N.
bool check_superadditive_heights(std::span<const std::uint64_t> f, int N);

/// Fibrewise product (C (x)' D)(j) = C(j) (x)_{i+m} D(j) for m-fold operads.
/// Throws ValidationError when i + m exceeds the structure's products.
Collection tensor_operads(const Collection& c, const Collection& d, int i, int m);

struct AlgebraReport {
  int p = 0, q = 0, max_arity = 0;
  bool unit_ok = false;
  std::string unit_detail;
  long long actions_checked = 0;
  std::vector<std::string> failures;  // capped
  long long failure_count = 0;
  long long assoc_audits = 0;
  std::vector<std::string> assoc_failures;

  /// Same verdict discipline as OperadReport: units and action existence
  /// decide; the audit is informative.
  bool valid() const { return unit_ok && failure_count == 0; }
};

/// Checks C(j) (x)_p ((x)_q^j A) <= A for j <= N, the unit square at A, and
/// seeded associativity audits. The bottom is an admissible algebra object:
/// with it every diagram consists of zero maps.
AlgebraReport verify_algebra(const Collection& c, const BottomObj& a, int p, int q,
                             int N, const VerifyOptions& options = {});

std::string format_report(const AlgebraReport& r);

}  // namespace foldcat
