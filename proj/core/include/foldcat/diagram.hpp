#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace foldcat {

/// Finitely supported array of nonnegative integers of dimension d >= 1,
/// monotone nonincreasing along every axis. Canonical shape carries no
/// trailing all-zero hyperplane; the empty diagram has every extent zero.
/// d = 1 specializes to an integer partition (the column-height sequence of
/// a two-dimensional Young diagram).
class Diagram {
 public:
  explicit Diagram(int dim);

  /// Validates monotonicity and canonicalizes. Throws ValidationError.
  static Diagram from_cells(int dim, std::vector<int> shape,
                            std::vector<std::uint64_t> cells);

  /// d = 1 convenience.
  static Diagram partition(std::vector<std::uint64_t> column_heights);

  int dim() const { return dim_; }
  const std::vector<int>& shape() const { return shape_; }
  bool is_empty() const { return cells_.empty(); }

  /// Zero outside the stored shape.
  std::uint64_t at(std::span<const int> index) const;

  /// Sum of all entries (number of unit boxes).
  std::uint64_t cell_count() const;

  /// First entry in index order; 0 for the empty diagram.
  std::uint64_t height() const;

  const std::vector<std::uint64_t>& cells() const { return cells_; }

  bool operator==(const Diagram&) const = default;

 private:
  Diagram(int dim, std::vector<int> shape, std::vector<std::uint64_t> cells);

  int dim_ = 1;
  std::vector<int> shape_;             // extent per axis, size dim_
  std::vector<std::uint64_t> cells_;   // dense, row-major (axis 1 outermost)
};

/// Lexicographic comparison in index-tuple order, axis 1 outermost, padding
/// with zeros to the union shape. Throws ValidationError on dim mismatch.
std::strong_ordering lex_cmp_nd(const Diagram& a, const Diagram& b);

/// Concatenate along `axis` (1-based), then sort every fiber parallel to that
/// axis nonincreasing. The result is monotone along all axes.
Diagram merge_axis(const Diagram& a, const Diagram& b, int axis);

Diagram pointwise_add(const Diagram& a, const Diagram& b);

/// Transposed partition; d = 1 only. An involution.
Diagram conjugate(const Diagram& a);

/// max_i min(a[sigma[i]], b[tau[i]]) <= min(max a, max b).
/// sigma and tau are 0-based permutations of the common length.
bool minmax_check(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                  std::span<const int> sigma, std::span<const int> tau);

/// Sorting each row descending and then each column gives a result that is
/// lexicographically <= sorting columns first and then rows. Also requires
/// both results to have sorted rows and columns.
bool matrixsort_check(const std::vector<std::vector<std::uint64_t>>& m);

/// The two sort orders themselves, exposed for fixtures and reports.
std::vector<std::vector<std::uint64_t>> sort_rows_then_cols(
    std::vector<std::vector<std::uint64_t>> m);
std::vector<std::vector<std::uint64_t>> sort_cols_then_rows(
    std::vector<std::vector<std::uint64_t>> m);

/// Unit-box rendering; d <= 2. Throws ValidationError above that.
std::string render_ascii(const Diagram& a);

/// Nested bracket lists, depth = dim, trailing zeros trimmed per fiber:
/// [[4,3,1,1],[4,2,1,1],[3,2,1],[1,1,1]]; d = 1 prints [5,3,1].
std::string to_text(const Diagram& a);

/// Ragged input is zero-padded to rectangular before validation.
Diagram parse_diagram(std::string_view text, int dim);

/// Bracket nesting depth of the outermost element; 0 for "[]".
int infer_bracket_depth(std::string_view text);

}  // namespace foldcat
