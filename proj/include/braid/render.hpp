#pragma once
// SVG picture of a lamination: the axis as a horizontal line, punctures as
// dots, and every arc as a semicircle over the unit-spaced axis positions.

#include <string>

#include "braid/lamination.hpp"

namespace braid {

std::string render_svg(const Lamination& L);

}  // namespace braid
