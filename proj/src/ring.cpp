#include "sympow/ring.hpp"

#include <cctype>
#include <set>

#include "sympow/field.hpp"
#include "sympow/monomial.hpp"

namespace sympow {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s.front())) && s.front() != '_') return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

RingPtr Ring::make(std::vector<std::string> variable_names, FieldKind field) {
  if (variable_names.empty()) throw InvalidArgument("ring needs at least one variable");
  if (variable_names.size() > Monomial::kMaxVariables) {
    throw InvalidArgument("ring has more than " + std::to_string(Monomial::kMaxVariables) +
                          " variables");
  }
  std::set<std::string> seen;
  for (const auto& name : variable_names) {
    if (!is_identifier(name)) throw InvalidArgument("invalid variable name '" + name + "'");
    if (name == "w") throw InvalidArgument("'w' is reserved for the cube root of unity");
    if (!seen.insert(name).second) throw InvalidArgument("duplicate variable '" + name + "'");
  }
  return RingPtr(new Ring(std::move(variable_names), field));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::string Ring::to_string() const {
  std::string out = field_name(field_);
  out += "[";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ",";
    out += names_[i];
  }
  return out + "]";
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) {
    throw RingMismatch("ring mismatch: " + (a ? a->to_string() : "<null>") + " vs " +
                       (b ? b->to_string() : "<null>"));
  }
}

}  // namespace sympow
