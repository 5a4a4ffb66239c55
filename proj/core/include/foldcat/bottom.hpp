#pragma once

#include <optional>
#include <utility>

namespace foldcat {

/// T with an adjoined absorbing bottom element. The bottom compares strictly
/// below every value, and any product with an empty operand is empty; the
/// structure helpers enforce both rules.
template <class T>
class MaybeEmpty {
 public:
  MaybeEmpty() = default;
  MaybeEmpty(T v) : v_(std::move(v)) {}

  static MaybeEmpty empty() { return MaybeEmpty(); }

  bool is_empty() const { return !v_.has_value(); }
  const T& value() const { return *v_; }

  bool operator==(const MaybeEmpty&) const = default;

 private:
  std::optional<T> v_;
};

}  // namespace foldcat
