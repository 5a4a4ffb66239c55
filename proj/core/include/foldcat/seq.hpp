#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace foldcat {

/// Finitely supported sequence over the nonnegative integers, in canonical
/// form: entries beyond the stored prefix are zero and the last stored entry
/// is nonzero. The zero sequence has length 0.
class Seq {
 public:
  Seq() = default;
  explicit Seq(std::vector<std::uint64_t> entries);

  static Seq zero() { return Seq(); }

  std::size_t length() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  /// 0-based; reads as zero beyond the stored length.
  std::uint64_t at(std::size_t i) const { return i < entries_.size() ? entries_[i] : 0; }

  const std::vector<std::uint64_t>& entries() const { return entries_; }

  bool operator==(const Seq&) const = default;

 private:
  std::vector<std::uint64_t> entries_;
};

/// Position-by-position comparison over max(l(a), l(b)) positions, missing
/// entries reading as zero. Total order; the zero sequence is least.
std::strong_ordering lex_cmp(const Seq& a, const Seq& b);

Seq concat(const Seq& a, const Seq& b);
Seq pointwise(const Seq& a, const Seq& b);
Seq sort_desc(const Seq& a);
Seq lex_max(const Seq& a, const Seq& b);

/// sort_desc(a + b) <= sort_desc(a) + sort_desc(b) under lex_cmp.
bool triangle_check(const Seq& a, const Seq& b);

std::string to_text(const Seq& a);              // [1,1,2,1]; zero sequence is []
Seq parse_seq(std::string_view text);           // throws ParseError

}  // namespace foldcat
