#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "foldcat/diagram.hpp"
#include "foldcat/freecat.hpp"
#include "foldcat/rng.hpp"
#include "foldcat/seq.hpp"

namespace foldcat::testsupport {

// Every canonical sequence with length <= max_len and entries <= max_entry.
inline std::vector<Seq> all_seqs(int max_len, std::uint64_t max_entry) {
  std::vector<Seq> out{Seq::zero()};
  std::vector<std::uint64_t> cur;
  std::function<void()> rec = [&] {
    if (!cur.empty() && cur.back() != 0) out.push_back(Seq(cur));
    if (static_cast<int>(cur.size()) == max_len) return;
    for (std::uint64_t v = 0; v <= max_entry; ++v) {
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

// Every partition with at most max_parts parts, each <= max_part.
inline std::vector<Diagram> all_partitions(int max_parts, std::uint64_t max_part) {
  std::vector<Diagram> out{Diagram(1)};
  std::vector<std::uint64_t> cur;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t cap) {
    if (!cur.empty()) out.push_back(Diagram::partition(cur));
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (std::uint64_t v = 1; v <= cap; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(max_part);
  return out;
}

// Every monotone matrix of extents <= 2 x 2 with entries <= max_entry,
// canonical forms deduplicated.
inline std::vector<Diagram> all_small_matrices(std::uint64_t max_entry) {
  std::vector<Diagram> out;
  for (std::uint64_t a = 0; a <= max_entry; ++a)
    for (std::uint64_t b = 0; b <= max_entry; ++b)
      for (std::uint64_t c = 0; c <= max_entry; ++c)
        for (std::uint64_t d = 0; d <= max_entry; ++d) {
          if (b > a || c > a || d > b || d > c) continue;
          const Diagram m = Diagram::from_cells(2, {2, 2}, {a, b, c, d});
          bool seen = false;
          for (const auto& x : out)
            if (x == m) {
              seen = true;
              break;
            }
          if (!seen) out.push_back(m);
        }
  return out;
}

inline Seq random_seq(SplitMix64& rng, int max_len, std::uint64_t max_entry) {
  const std::size_t len = rng.below(static_cast<std::uint64_t>(max_len) + 1);
  std::vector<std::uint64_t> entries(len);
  for (auto& e : entries) e = rng.below(max_entry + 1);
  return Seq(std::move(entries));
}

inline Diagram random_partition(SplitMix64& rng, int max_parts, std::uint64_t max_part) {
  const std::size_t len = rng.below(static_cast<std::uint64_t>(max_parts) + 1);
  std::vector<std::uint64_t> parts(len);
  for (auto& p : parts) p = rng.below(max_part + 1);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Diagram::partition(std::move(parts));
}

// Applies a few order-increasing rewrites: raise a product index, or swap a
// node's children while raising it strictly. Every rewrite has a morphism
// from the original, so chains built this way are composable.
inline Expr mutate_expr(SplitMix64& rng, const Expr& e, int n) {
  std::function<Expr(const Expr&)> step = [&](const Expr& x) -> Expr {
    if (x.kind() != Expr::Kind::Prod) return x;
    Expr l = step(x.left());
    Expr r = step(x.right());
    int index = x.index();
    bool swapped = false;
    if (rng.below(3) == 0 && index < n) {
      ++index;
      swapped = rng.below(2) == 0;
    }
    return swapped ? Expr::prod(index, std::move(r), std::move(l))
                   : Expr::prod(index, std::move(l), std::move(r));
  };
  Expr out = e;
  const int rounds = 1 + static_cast<int>(rng.below(2));
  for (int i = 0; i < rounds; ++i) out = step(out);
  return out;
}

// Random object of M_n over the given atoms: a random binary tree using each
// atom exactly once, with random product labels.
inline Expr random_expr(SplitMix64& rng, const std::vector<std::string>& atoms, int n) {
  std::vector<std::string> shuffled = atoms;
  for (std::size_t i = shuffled.size(); i > 1; --i)
    std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
  std::function<Expr(std::size_t, std::size_t)> build = [&](std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return Expr::atom(shuffled[lo]);
    const std::size_t split = lo + 1 + rng.below(hi - lo - 1);
    const int index = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    return Expr::prod(index, build(lo, split), build(split, hi));
  };
  if (shuffled.empty()) return Expr::unit();
  return build(0, shuffled.size());
}

}  // namespace foldcat::testsupport
