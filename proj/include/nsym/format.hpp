#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "nsym/composition.hpp"
#include "nsym/linear_combination.hpp"
#include "nsym/tableau.hpp"

namespace nsym {

/// Comma-separated positive integers, optionally wrapped in [] or ().
/// "0", "" and "[]" denote the empty composition. Throws InvalidArgument.
Composition parse_composition(std::string_view text);

/// "S:2,4" -> (S, (2,4)).
std::pair<Basis, Composition> parse_basis_element(std::string_view text);

/// Terms in graded-lex order as `c*B[a,b]`, joined by " + " / " - ", with a
/// coefficient of 1 elided; "0" for the empty combination.
std::string render_text(const LinearCombination& f);

/// {"basis": "S", "terms": [{"coefficient": c, "index": [..]}, ...]}
std::string render_json(const LinearCombination& f, int indent = -1);
/// Inverse of render_json. Throws InvalidArgument on malformed input.
LinearCombination parse_json(std::string_view text);

/// One line per row, inner cells drawn as "X", columns right-aligned.
std::string render_tableau_text(const SkewTableau& t);
/// ytableau environment with shaded inner cells.
std::string render_tableau_latex(const SkewTableau& t);
/// {"inner": [..], "rows": [[..], ..]}
std::string render_tableau_json(const SkewTableau& t);

}  // namespace nsym
