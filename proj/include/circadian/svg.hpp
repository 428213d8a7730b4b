#pragma once

#include <string>

#include "circadian/smallgain.hpp"

namespace circadian {

// Minimal self-contained SVG of the spiderweb construction: the mRNA
// characteristic y = ks*k1(u), the (inverted) PER characteristic, and the
// iteration path bouncing between them. No plotting library involved.
std::string render_cobweb_svg(const ModelParams& p, const SpiderwebTrace& trace);

}  // namespace circadian
