#pragma once

#include <string_view>

#include "kn/cyclotomic.hpp"
#include "kn/diffring.hpp"

namespace kn {

/// Parses the rendering produced by DRingElem::to_string and simple
/// arithmetic on top of it: sums, products, quotients by units, integer
/// powers, rational powers of t ("t^(-1/2)"), "i", "tau", "z8^3".
/// Throws ParseError on malformed text and InvalidArgument when an exponent
/// leaves the ring.
DRingElem parse_ring_elem(std::string_view text, const DRing& ring);

/// Parses a constant, e.g. "1/2 - 3*i" or "z3^2".
CycScalar parse_scalar(std::string_view text);

/// "R" or "laurent" (= laurent(1)), "laurent(m)", "S<m>", "dual",
/// "laurent0(m)" for the zero derivation.
DRing parse_ring(std::string_view text);

}  // namespace kn
