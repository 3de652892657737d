#pragma once

#include "lieharm/errors.hpp"
#include "lieharm/scalar.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lieharm {

/// Named scalar parameters, kept in insertion order so that reports and
/// failure sorting are stable.
template <Scalar T>
class ParamSet {
 public:
  ParamSet() = default;
  ParamSet(std::initializer_list<std::pair<std::string, T>> init) : items_(init) {}

  void set(std::string_view name, T value) {
    for (auto& [k, v] : items_)
      if (k == name) {
        v = std::move(value);
        return;
      }
    items_.emplace_back(std::string(name), std::move(value));
  }

  bool has(std::string_view name) const {
    for (const auto& [k, v] : items_)
      if (k == name) return true;
    return false;
  }

  const T& get(std::string_view name) const {
    for (const auto& [k, v] : items_)
      if (k == name) return v;
    throw Error(ErrorKind::Parse, "missing parameter '" + std::string(name) + "'");
  }

  const std::vector<std::pair<std::string, T>>& items() const { return items_; }

  ParamSet<double> to_double() const {
    ParamSet<double> r;
    for (const auto& [k, v] : items_) r.set(k, lieharm::to_double(v));
    return r;
  }

 private:
  std::vector<std::pair<std::string, T>> items_;
};

}  // namespace lieharm
