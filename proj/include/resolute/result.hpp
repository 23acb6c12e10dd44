// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cassert>
#include <utility>
#include <variant>

namespace resolute {

// Minimal value-or-error carrier. T and E must be distinct types.
template <typename T, typename E>
class Result {
 public:
  Result(T value) : data_(std::in_place_index<0>, std::move(value)) {}
  Result(E error) : data_(std::in_place_index<1>, std::move(error)) {}

  bool has_value() const { return data_.index() == 0; }
  explicit operator bool() const { return has_value(); }

  T& value() {
    assert(has_value());
    return std::get<0>(data_);
  }
  const T& value() const {
    assert(has_value());
    return std::get<0>(data_);
  }
  E& error() {
    assert(!has_value());
    return std::get<1>(data_);
  }
  const E& error() const {
    assert(!has_value());
    return std::get<1>(data_);
  }

  T value_or(T fallback) const {
    return has_value() ? std::get<0>(data_) : std::move(fallback);
  }

 private:
  std::variant<T, E> data_;
};

}  // namespace resolute
