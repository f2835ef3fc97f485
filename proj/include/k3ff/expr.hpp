#pragma once

// Parser for the catalog expression grammar: integer literals, the base
// parameter s, the fibration coordinate t, the square root generator r of
// the ambient quadratic field, +, -, *, /, ^ and parentheses.

#include "k3ff/tower.hpp"

#include <cstdint>
#include <string>

namespace k3ff {

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// disc is the D of the ambient field Q(sqrt(D)); pass 1 for plain Q, in
// which case any use of r is rejected.
KT parse_expr(const std::string& text, std::int64_t disc = 1);

}  // namespace k3ff
