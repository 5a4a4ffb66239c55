#include "foldcat/seq.hpp"

#include <algorithm>

#include "foldcat/errors.hpp"

namespace foldcat {

Seq::Seq(std::vector<std::uint64_t> entries) : entries_(std::move(entries)) {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

std::strong_ordering lex_cmp(const Seq& a, const Seq& b) {
  const std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.at(i) != b.at(i)) return a.at(i) <=> b.at(i);
  }
  return std::strong_ordering::equal;
}

Seq concat(const Seq& a, const Seq& b) {
  std::vector<std::uint64_t> out;
  out.reserve(a.length() + b.length());
  out.insert(out.end(), a.entries().begin(), a.entries().end());
  out.insert(out.end(), b.entries().begin(), b.entries().end());
  return Seq(std::move(out));
}

Seq pointwise(const Seq& a, const Seq& b) {
  const std::size_t n = std::max(a.length(), b.length());
  std::vector<std::uint64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a.at(i) + b.at(i);
  return Seq(std::move(out));
}

Seq sort_desc(const Seq& a) {
  std::vector<std::uint64_t> out = a.entries();
  std::stable_sort(out.begin(), out.end(), std::greater<>());
  return Seq(std::move(out));
}

Seq lex_max(const Seq& a, const Seq& b) { return lex_cmp(a, b) < 0 ? b : a; }

bool triangle_check(const Seq& a, const Seq& b) {
  const Seq lhs = sort_desc(pointwise(a, b));
  const Seq rhs = pointwise(sort_desc(a), sort_desc(b));
  return lex_cmp(lhs, rhs) <= 0;
}

std::string to_text(const Seq& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(a.entries()[i]);
  }
  out += ']';
  return out;
}

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}

std::uint64_t parse_u64(std::string_view s, std::size_t& i) {
  skip_ws(s, i);
  if (i >= s.size() || s[i] == '-') throw ParseError("expected nonnegative integer", i);
  if (s[i] < '0' || s[i] > '9') throw ParseError("expected digit", i);
  std::uint64_t v = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
    v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
    ++i;
  }
  return v;
}

}  // namespace

Seq parse_seq(std::string_view text) {
  std::size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size() || text[i] != '[') throw ParseError("expected '['", i);
  ++i;
  std::vector<std::uint64_t> entries;
  skip_ws(text, i);
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      entries.push_back(parse_u64(text, i));
      skip_ws(text, i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or ']'", i);
    }
  }
  skip_ws(text, i);
  if (i != text.size()) throw ParseError("trailing characters after sequence", i);
  return Seq(std::move(entries));
}

}  // namespace foldcat
