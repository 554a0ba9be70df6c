#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sgp {

using Int = std::int64_t;

// Sorted, duplicate-free set of integers.
class IntSet {
 public:
  using const_iterator = std::vector<Int>::const_iterator;

  IntSet() = default;
  IntSet(std::initializer_list<Int> values) : values_(values) { normalize(); }
  explicit IntSet(std::vector<Int> values) : values_(std::move(values)) {
    normalize();
  }

  // Caller guarantees strictly increasing input.
  static IntSet from_sorted(std::vector<Int> values) {
    IntSet out;
    out.values_ = std::move(values);
    return out;
  }

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  const_iterator begin() const noexcept { return values_.begin(); }
  const_iterator end() const noexcept { return values_.end(); }
  Int front() const { return values_.front(); }
  Int back() const { return values_.back(); }
  Int operator[](std::size_t i) const { return values_[i]; }
  std::span<const Int> values() const noexcept { return values_; }

  bool contains(Int x) const {
    return std::binary_search(values_.begin(), values_.end(), x);
  }

  bool includes(const IntSet& other) const {
    return std::includes(values_.begin(), values_.end(), other.values_.begin(),
                         other.values_.end());
  }

  IntSet shifted(Int delta) const {
    std::vector<Int> out(values_);
    for (Int& v : out) v += delta;
    return from_sorted(std::move(out));
  }

  friend bool operator==(const IntSet&, const IntSet&) = default;

  // "{1,2,4}"
  std::string to_string() const;

 private:
  void normalize() {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  }

  std::vector<Int> values_;
};

}  // namespace sgp
