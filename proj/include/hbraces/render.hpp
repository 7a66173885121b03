#pragma once

#include <string>
#include <string_view>

#include "hbraces/expr.hpp"

namespace hbraces {

enum class Format { text, latex, json };

Format parse_format(std::string_view name);

/// Deterministic renderings; terms appear in canonical word order.
///   text:  "∇(a1 a2) - ∇(a1) a2 - ∇(a2) a1"
///   latex: "\nabla(a_{1} a_{2}) - \nabla(a_{1}) a_{2} - ..."
///   json:  {"flavor": .., "generators": [{"index", "degree"}..],
///           "terms": [{"coeff": "p/q", "word": [atom..]}..]}
///          with atom = {"gen": i} or {"nabla": [atom..]}
std::string render(const Expr& e, Format format);
std::string render_text(const Expr& e);
std::string render_latex(const Expr& e);
std::string render_json(const Expr& e);

/// Inverse of render_json. Throws ParseError on malformed input.
Expr parse_json(std::string_view text);

} // namespace hbraces
