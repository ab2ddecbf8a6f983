#include "sympow/polynomial.hpp"

namespace sympow {

namespace detail {

void check_ring_field(const RingPtr& ring, FieldKind kind) {
  if (!ring) throw InvalidArgument("polynomial without a ring");
  if (ring->field() != kind) {
    throw RingMismatch(std::string("coefficient type is ") + field_name(kind) + " but ring " +
                       ring->to_string() + " is over " + field_name(ring->field()));
  }
}

void check_order_fits(const RingPtr& ring, TermOrder order) {
  if ((order.kind() == TermOrder::Kind::kElim || order.kind() == TermOrder::Kind::kGradedElim) &&
      order.block() >= ring->size()) {
    throw InvalidArgument("elimination block " + std::to_string(order.block()) +
                          " must be smaller than the variable count " +
                          std::to_string(ring->size()));
  }
}

}  // namespace detail

template class Polynomial<Rational>;
template class Polynomial<CycloElement>;

}  // namespace sympow
