#pragma once

// Text input and output: the ideal grammar and the renderers used by the nt tool.

#include <string>
#include <string_view>

#include "nt/algebra.hpp"
#include "nt/tree.hpp"
#include "nt/zeta.hpp"

namespace nt {

/// Single polynomial expression over x, y with integer and a/b literals.
BiPoly parse_poly(std::string_view text);

/// `[expr, expr, ...]`; throws ParseError, EmptyIdeal or UnitIdeal.
Ideal parse_ideal(std::string_view text);

enum class Format { Ascii, Json, Dot, Latex };

/// "ascii", "json", "dot" or "latex"; throws UnsupportedFormat.
Format parse_format(std::string_view name);

/// Parser-compatible ideal text.
std::string render(const Ideal& ideal);
/// ascii, json or dot.
std::string render(const NewtonTree& tree, Format format);
/// ascii, json or latex.
std::string render(const ZetaFn& zeta, Format format);

}  // namespace nt
