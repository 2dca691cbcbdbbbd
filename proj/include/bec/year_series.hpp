#pragma once

#include <map>
#include <vector>

#include "bec/error.hpp"

namespace bec {

/// Values keyed by calendar year, iterated in ascending year order.
template <typename T>
class YearSeries {
 public:
  using container = std::map<int, T>;
  using const_iterator = typename container::const_iterator;

  /// Throws DuplicateYear if the year is already present.
  void insert(int year, T value) {
    auto [it, inserted] = values_.emplace(year, std::move(value));
    if (!inserted) {
      throw Error(ErrorCode::kDuplicateYear, "year appears more than once").in_year(year);
    }
  }

  bool contains(int year) const { return values_.count(year) != 0; }
  const T* find(int year) const {
    auto it = values_.find(year);
    return it == values_.end() ? nullptr : &it->second;
  }
  const T& at(int year) const { return values_.at(year); }

  std::vector<int> years() const {
    std::vector<int> out;
    out.reserve(values_.size());
    for (const auto& [year, _] : values_) out.push_back(year);
    return out;
  }

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const_iterator begin() const { return values_.begin(); }
  const_iterator end() const { return values_.end(); }
  const T& front() const { return values_.begin()->second; }
  const T& back() const { return values_.rbegin()->second; }

 private:
  container values_;
};

}  // namespace bec
