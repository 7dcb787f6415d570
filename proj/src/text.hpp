#pragma once

#include <string>

#include "codo/ring.hpp"

namespace codo::detail {

// `c*mono` as a term of a sum: sign pulled out for single-term
// coefficients, anything longer parenthesized.
inline std::string signed_term(const RingElement& c, const std::string& mono, bool first) {
    bool single = c.is_polynomial() && c.num().size() == 1;
    bool neg = single && c.num().lead().c < 0;
    RingElement mag = neg ? -c : c;
    std::string body;
    if (mono.empty())
        body = single ? mag.str() : "(" + mag.str() + ")";
    else if (mag.is_one())
        body = mono;
    else
        body = (single ? mag.str() : "(" + mag.str() + ")") + "*" + mono;
    if (first) return (neg ? "-" : "") + body;
    return (neg ? " - " : " + ") + body;
}

}  // namespace codo::detail
