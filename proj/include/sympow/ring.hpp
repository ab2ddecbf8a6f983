#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sympow/rational.hpp"

namespace sympow {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring k[x_0, ..., x_{n-1}]: ordered variable names plus the
/// coefficient field. Every polynomial and ideal holds a RingPtr.
class Ring {
 public:
  /// Validates names (distinct, nonempty identifiers, none equal to the
  /// reserved `w`) and the variable count limit.
  static RingPtr make(std::vector<std::string> variable_names, FieldKind field);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  FieldKind field() const { return field_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.names_ == b.names_;
  }

  std::string to_string() const;

 private:
  Ring(std::vector<std::string> names, FieldKind field)
      : names_(std::move(names)), field_(field) {}

  std::vector<std::string> names_;
  FieldKind field_;
};

/// Structural ring equality; pointer identity is the fast path.
inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace sympow
