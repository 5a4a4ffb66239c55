#include "foldcat/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

#include "foldcat/errors.hpp"

namespace foldcat {

namespace {

std::size_t total_cells(const std::vector<int>& shape) {
  std::size_t n = 1;
  for (int e : shape) n *= static_cast<std::size_t>(e);
  return shape.empty() ? 0 : n;
}

std::vector<std::size_t> strides_of(const std::vector<int>& shape) {
  std::vector<std::size_t> st(shape.size(), 1);
  for (int i = static_cast<int>(shape.size()) - 2; i >= 0; --i) {
    st[i] = st[i + 1] * static_cast<std::size_t>(shape[i + 1]);
  }
  return st;
}

// Row-major odometer; returns false after the last position.
bool advance(std::vector<int>& pos, const std::vector<int>& shape) {
  for (int a = static_cast<int>(shape.size()) - 1; a >= 0; --a) {
    if (++pos[a] < shape[a]) return true;
    pos[a] = 0;
  }
  return false;
}

bool is_monotone(const std::vector<int>& shape, const std::vector<std::uint64_t>& cells) {
  if (cells.empty()) return true;
  const auto st = strides_of(shape);
  std::vector<int> pos(shape.size(), 0);
  std::size_t idx = 0;
  do {
    for (std::size_t a = 0; a < shape.size(); ++a) {
      if (pos[a] + 1 < shape[a] && cells[idx] < cells[idx + st[a]]) return false;
    }
    ++idx;
  } while (advance(pos, shape));
  return true;
}

// Axis and position of the first monotonicity violation, for error messages.
std::string violation_detail(const std::vector<int>& shape,
                             const std::vector<std::uint64_t>& cells) {
  const auto st = strides_of(shape);
  std::vector<int> pos(shape.size(), 0);
  std::size_t idx = 0;
  do {
    for (std::size_t a = 0; a < shape.size(); ++a) {
      if (pos[a] + 1 < shape[a] && cells[idx] < cells[idx + st[a]]) {
        std::string loc = "(";
        for (std::size_t i = 0; i < pos.size(); ++i) {
          if (i) loc += ',';
          loc += std::to_string(pos[i] + 1);
        }
        loc += ')';
        return "monotonicity violation along axis " + std::to_string(a + 1) +
               " at index " + loc;
      }
    }
    ++idx;
  } while (advance(pos, shape));
  return "monotonicity violation";
}

}  // namespace

Diagram::Diagram(int dim) : dim_(dim), shape_(static_cast<std::size_t>(dim), 0) {
  if (dim < 1) throw ValidationError("diagram dimension must be >= 1");
}

Diagram::Diagram(int dim, std::vector<int> shape, std::vector<std::uint64_t> cells)
    : dim_(dim), shape_(std::move(shape)), cells_(std::move(cells)) {}

Diagram Diagram::from_cells(int dim, std::vector<int> shape,
                            std::vector<std::uint64_t> cells) {
  if (dim < 1) throw ValidationError("diagram dimension must be >= 1");
  if (static_cast<int>(shape.size()) != dim)
    throw ValidationError("shape rank does not match dimension");
  if (cells.size() != total_cells(shape) && !(shape.empty() && cells.empty()))
    throw ValidationError("cell count does not match shape");
  if (!is_monotone(shape, cells)) throw ValidationError(violation_detail(shape, cells));

  // Canonicalize: tight bounding box of the nonzero support.
  std::vector<int> tight(static_cast<std::size_t>(dim), 0);
  if (!cells.empty()) {
    std::vector<int> pos(shape.size(), 0);
    std::size_t idx = 0;
    do {
      if (cells[idx] != 0) {
        for (std::size_t a = 0; a < shape.size(); ++a)
          tight[a] = std::max(tight[a], pos[a] + 1);
      }
      ++idx;
    } while (advance(pos, shape));
  }
  if (std::find(tight.begin(), tight.end(), 0) != tight.end())
    return Diagram(dim, std::vector<int>(static_cast<std::size_t>(dim), 0), {});
  if (tight == shape) return Diagram(dim, std::move(shape), std::move(cells));

  const auto st = strides_of(shape);
  std::vector<std::uint64_t> packed(total_cells(tight));
  std::vector<int> pos(tight.size(), 0);
  std::size_t out = 0;
  do {
    std::size_t src = 0;
    for (std::size_t a = 0; a < tight.size(); ++a)
      src += static_cast<std::size_t>(pos[a]) * st[a];
    packed[out++] = cells[src];
  } while (advance(pos, tight));
  return Diagram(dim, std::move(tight), std::move(packed));
}

Diagram Diagram::partition(std::vector<std::uint64_t> column_heights) {
  const int n = static_cast<int>(column_heights.size());
  return from_cells(1, {n}, std::move(column_heights));
}

std::uint64_t Diagram::at(std::span<const int> index) const {
  if (cells_.empty()) return 0;
  std::size_t off = 0;
  std::size_t stride = 1;
  for (int a = dim_ - 1; a >= 0; --a) {
    const int i = index[static_cast<std::size_t>(a)];
    if (i >= shape_[static_cast<std::size_t>(a)]) return 0;
    off += static_cast<std::size_t>(i) * stride;
    stride *= static_cast<std::size_t>(shape_[static_cast<std::size_t>(a)]);
  }
  return cells_[off];
}

std::uint64_t Diagram::cell_count() const {
  return std::accumulate(cells_.begin(), cells_.end(), std::uint64_t{0});
}

std::uint64_t Diagram::height() const { return cells_.empty() ? 0 : cells_[0]; }

std::strong_ordering lex_cmp_nd(const Diagram& a, const Diagram& b) {
  if (a.dim() != b.dim()) throw ValidationError("dimension mismatch in comparison");
  std::vector<int> u(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i)
    u[static_cast<std::size_t>(i)] =
        std::max(a.shape()[static_cast<std::size_t>(i)], b.shape()[static_cast<std::size_t>(i)]);
  if (total_cells(u) == 0) return std::strong_ordering::equal;
  std::vector<int> pos(u.size(), 0);
  do {
    const std::uint64_t x = a.at(pos);
    const std::uint64_t y = b.at(pos);
    if (x != y) return x <=> y;
  } while (advance(pos, u));
  return std::strong_ordering::equal;
}

Diagram merge_axis(const Diagram& a, const Diagram& b, int axis) {
  if (a.dim() != b.dim()) throw ValidationError("dimension mismatch in merge");
  if (axis < 1 || axis > a.dim()) throw ValidationError("merge axis out of range");
  const std::size_t ax = static_cast<std::size_t>(axis - 1);

  std::vector<int> shape(static_cast<std::size_t>(a.dim()));
  for (std::size_t i = 0; i < shape.size(); ++i)
    shape[i] = (i == ax) ? a.shape()[i] + b.shape()[i]
                         : std::max(a.shape()[i], b.shape()[i]);
  if (total_cells(shape) == 0) return Diagram(a.dim());

  const auto st = strides_of(shape);
  std::vector<std::uint64_t> cells(total_cells(shape), 0);
  std::vector<int> base(shape.size(), 0);
  std::vector<int> base_shape = shape;
  base_shape[ax] = 1;
  std::vector<std::uint64_t> fiber;
  fiber.reserve(static_cast<std::size_t>(shape[ax]));
  std::vector<int> probe(shape.size());
  do {
    fiber.clear();
    probe.assign(base.begin(), base.end());
    for (int t = 0; t < a.shape()[ax]; ++t) {
      probe[ax] = t;
      fiber.push_back(a.at(probe));
    }
    for (int t = 0; t < b.shape()[ax]; ++t) {
      probe[ax] = t;
      fiber.push_back(b.at(probe));
    }
    std::stable_sort(fiber.begin(), fiber.end(), std::greater<>());
    std::size_t off = 0;
    for (std::size_t i = 0; i < shape.size(); ++i)
      off += static_cast<std::size_t>(base[i]) * st[i];
    for (std::size_t t = 0; t < fiber.size(); ++t) cells[off + t * st[ax]] = fiber[t];
  } while (advance(base, base_shape));

  assert(is_monotone(shape, cells));
  return Diagram::from_cells(a.dim(), std::move(shape), std::move(cells));
}

Diagram pointwise_add(const Diagram& a, const Diagram& b) {
  if (a.dim() != b.dim()) throw ValidationError("dimension mismatch in addition");
  std::vector<int> shape(static_cast<std::size_t>(a.dim()));
  for (std::size_t i = 0; i < shape.size(); ++i)
    shape[i] = std::max(a.shape()[i], b.shape()[i]);
  if (total_cells(shape) == 0) return Diagram(a.dim());
  std::vector<std::uint64_t> cells(total_cells(shape));
  std::vector<int> pos(shape.size(), 0);
  std::size_t idx = 0;
  do {
    cells[idx++] = a.at(pos) + b.at(pos);
  } while (advance(pos, shape));
  return Diagram::from_cells(a.dim(), std::move(shape), std::move(cells));
}

Diagram conjugate(const Diagram& a) {
  if (a.dim() != 1) throw ValidationError("conjugate requires dimension 1");
  if (a.is_empty()) return Diagram(1);
  const auto& c = a.cells();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(c[0]), 0);
  for (std::uint64_t h : c) {
    for (std::uint64_t r = 0; r < h; ++r) ++rows[static_cast<std::size_t>(r)];
  }
  return Diagram::partition(std::move(rows));
}

bool minmax_check(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                  std::span<const int> sigma, std::span<const int> tau) {
  const std::size_t n = a.size();
  if (b.size() != n || sigma.size() != n || tau.size() != n)
    throw ValidationError("length mismatch in minmax check");
  if (n == 0) return true;
  std::uint64_t lhs = 0, amax = 0, bmax = 0;
  for (std::size_t i = 0; i < n; ++i) {
    lhs = std::max(lhs, std::min(a[static_cast<std::size_t>(sigma[i])],
                                 b[static_cast<std::size_t>(tau[i])]));
    amax = std::max(amax, a[i]);
    bmax = std::max(bmax, b[i]);
  }
  return lhs <= std::min(amax, bmax);
}

namespace {

using Matrix = std::vector<std::vector<std::uint64_t>>;

Matrix pad_rect(Matrix m) {
  std::size_t w = 0;
  for (const auto& r : m) w = std::max(w, r.size());
  for (auto& r : m) r.resize(w, 0);
  return m;
}

void sort_rows(Matrix& m) {
  for (auto& r : m) std::stable_sort(r.begin(), r.end(), std::greater<>());
}

void sort_cols(Matrix& m) {
  if (m.empty()) return;
  const std::size_t w = m[0].size();
  std::vector<std::uint64_t> col(m.size());
  for (std::size_t j = 0; j < w; ++j) {
    for (std::size_t i = 0; i < m.size(); ++i) col[i] = m[i][j];
    std::stable_sort(col.begin(), col.end(), std::greater<>());
    for (std::size_t i = 0; i < m.size(); ++i) m[i][j] = col[i];
  }
}

bool rows_sorted(const Matrix& m) {
  for (const auto& r : m)
    if (!std::is_sorted(r.begin(), r.end(), std::greater<>())) return false;
  return true;
}

bool cols_sorted(const Matrix& m) {
  if (m.empty()) return true;
  for (std::size_t j = 0; j < m[0].size(); ++j)
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
      if (m[i][j] < m[i + 1][j]) return false;
  return true;
}

std::strong_ordering lex_cmp_matrix(const Matrix& a, const Matrix& b) {
  const std::size_t rows = std::max(a.size(), b.size());
  std::size_t w = 0;
  for (const auto& r : a) w = std::max(w, r.size());
  for (const auto& r : b) w = std::max(w, r.size());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < w; ++j) {
      const std::uint64_t x = (i < a.size() && j < a[i].size()) ? a[i][j] : 0;
      const std::uint64_t y = (i < b.size() && j < b[i].size()) ? b[i][j] : 0;
      if (x != y) return x <=> y;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace

Matrix sort_rows_then_cols(Matrix m) {
  m = pad_rect(std::move(m));
  sort_rows(m);
  sort_cols(m);
  return m;
}

Matrix sort_cols_then_rows(Matrix m) {
  m = pad_rect(std::move(m));
  sort_cols(m);
  sort_rows(m);
  return m;
}

bool matrixsort_check(const Matrix& m) {
  const Matrix lhs = sort_rows_then_cols(m);
  const Matrix rhs = sort_cols_then_rows(m);
  if (!rows_sorted(lhs) || !cols_sorted(lhs)) return false;
  if (!rows_sorted(rhs) || !cols_sorted(rhs)) return false;
  return lex_cmp_matrix(lhs, rhs) <= 0;
}

std::string render_ascii(const Diagram& a) {
  if (a.dim() > 2) throw ValidationError("rendering supports dimension <= 2 only");
  if (a.is_empty()) return "";
  std::string out;
  if (a.dim() == 1) {
    const Diagram rows = conjugate(a);
    for (std::uint64_t r : rows.cells()) {
      out.append(static_cast<std::size_t>(r), '#');
      out += '\n';
    }
    return out;
  }
  for (int i = 0; i < a.shape()[0]; ++i) {
    std::vector<std::uint64_t> row(static_cast<std::size_t>(a.shape()[1]));
    for (int j = 0; j < a.shape()[1]; ++j) {
      const int idx[2] = {i, j};
      row[static_cast<std::size_t>(j)] = a.at(idx);
    }
    if (i) out += '\n';
    out += "layer " + std::to_string(i + 1) + ":\n";
    out += render_ascii(Diagram::partition(std::move(row)));
  }
  return out;
}

namespace {

// Emits the slice of `d` under the fixed index prefix, trimming trailing
// all-zero sub-slices so printed rows stay ragged like the inputs.
void print_slice(const Diagram& d, std::vector<int>& prefix, std::string& out) {
  const std::size_t level = prefix.size();
  out += '[';
  if (static_cast<int>(level) == d.dim() - 1) {
    int extent = d.shape()[level];
    prefix.push_back(0);
    while (extent > 0) {
      prefix[level] = extent - 1;
      if (d.at(prefix) != 0) break;
      --extent;
    }
    for (int i = 0; i < extent; ++i) {
      prefix[level] = i;
      if (i) out += ',';
      out += std::to_string(d.at(prefix));
    }
    prefix.pop_back();
  } else {
    // Trim trailing sub-slices that are entirely zero.
    int extent = d.shape()[level];
    std::vector<int> probe(static_cast<std::size_t>(d.dim()), 0);
    std::vector<int> rest_shape(d.shape().begin() + static_cast<long>(level) + 1,
                                d.shape().end());
    while (extent > 0) {
      bool nonzero = false;
      std::vector<int> rest(rest_shape.size(), 0);
      if (total_cells(rest_shape) > 0) {
        do {
          for (std::size_t i = 0; i < level; ++i) probe[i] = prefix[i];
          probe[level] = extent - 1;
          for (std::size_t i = 0; i < rest.size(); ++i) probe[level + 1 + i] = rest[i];
          if (d.at(probe) != 0) {
            nonzero = true;
            break;
          }
        } while (advance(rest, rest_shape));
      }
      if (nonzero) break;
      --extent;
    }
    for (int i = 0; i < extent; ++i) {
      if (i) out += ',';
      prefix.push_back(i);
      print_slice(d, prefix, out);
      prefix.pop_back();
    }
  }
  out += ']';
}

}  // namespace

std::string to_text(const Diagram& a) {
  if (a.is_empty()) return "[]";
  std::string out;
  std::vector<int> prefix;
  print_slice(a, prefix, out);
  return out;
}

namespace {

struct RaggedNode {
  bool leaf = false;
  std::uint64_t value = 0;
  std::vector<RaggedNode> kids;
};

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
}

RaggedNode parse_node(std::string_view s, std::size_t& i) {
  skip_ws(s, i);
  if (i >= s.size()) throw ParseError("unexpected end of input", i);
  if (s[i] == '-') throw ParseError("negative entry", i);
  if (s[i] >= '0' && s[i] <= '9') {
    RaggedNode n;
    n.leaf = true;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      n.value = n.value * 10 + static_cast<std::uint64_t>(s[i] - '0');
      ++i;
    }
    return n;
  }
  if (s[i] != '[') throw ParseError("expected '[' or digit", i);
  ++i;
  RaggedNode n;
  skip_ws(s, i);
  if (i < s.size() && s[i] == ']') {
    ++i;
    return n;
  }
  while (true) {
    n.kids.push_back(parse_node(s, i));
    skip_ws(s, i);
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    if (i < s.size() && s[i] == ']') {
      ++i;
      return n;
    }
    throw ParseError("expected ',' or ']'", i);
  }
}

void ragged_extents(const RaggedNode& n, int level, int dim, std::vector<int>& ext,
                    std::size_t err_pos) {
  if (n.leaf) {
    if (level != dim) throw ParseError("number at wrong nesting depth", err_pos);
    return;
  }
  if (level >= dim) throw ParseError("list nested too deeply", err_pos);
  ext[static_cast<std::size_t>(level)] =
      std::max(ext[static_cast<std::size_t>(level)], static_cast<int>(n.kids.size()));
  for (const auto& k : n.kids) ragged_extents(k, level + 1, dim, ext, err_pos);
}

void ragged_fill(const RaggedNode& n, int level, int dim, std::vector<int>& pos,
                 const std::vector<int>& shape, const std::vector<std::size_t>& st,
                 std::vector<std::uint64_t>& cells) {
  if (n.leaf) {
    std::size_t off = 0;
    for (std::size_t a = 0; a < pos.size(); ++a)
      off += static_cast<std::size_t>(pos[a]) * st[a];
    cells[off] = n.value;
    return;
  }
  for (std::size_t i = 0; i < n.kids.size(); ++i) {
    pos[static_cast<std::size_t>(level)] = static_cast<int>(i);
    ragged_fill(n.kids[i], level + 1, dim, pos, shape, st, cells);
  }
  pos[static_cast<std::size_t>(level)] = 0;
}

}  // namespace

Diagram parse_diagram(std::string_view text, int dim) {
  std::size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size() || text[i] != '[') throw ParseError("expected '['", i);
  const RaggedNode root = parse_node(text, i);
  skip_ws(text, i);
  if (i != text.size()) throw ParseError("trailing characters after diagram", i);
  if (root.leaf) throw ParseError("expected a bracketed list", 0);
  if (root.kids.empty()) return Diagram(dim);

  std::vector<int> ext(static_cast<std::size_t>(dim), 0);
  ragged_extents(root, 0, dim, ext, 0);
  if (total_cells(ext) == 0) return Diagram(dim);
  std::vector<std::uint64_t> cells(total_cells(ext), 0);
  const auto st = strides_of(ext);
  std::vector<int> pos(static_cast<std::size_t>(dim), 0);
  ragged_fill(root, 0, dim, pos, ext, st, cells);
  return Diagram::from_cells(dim, std::move(ext), std::move(cells));
}

int infer_bracket_depth(std::string_view text) {
  int depth = 0;
  std::size_t i = 0;
  skip_ws(text, i);
  while (i < text.size() && text[i] == '[') {
    ++depth;
    ++i;
    skip_ws(text, i);
  }
  if (i < text.size() && text[i] == ']') --depth;  // "[]", "[[]]", ...
  return std::max(depth, 0);
}

}  // namespace foldcat
