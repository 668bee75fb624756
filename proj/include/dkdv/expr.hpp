#pragma once

#include "dkdv/diffpoly.hpp"

#include <string>

namespace dkdv {

/// Parses the expression grammar: variables from the ring (jet suffix "_n"),
/// "ep" for eps, "I" for the imaginary unit, rational literals "p/q",
/// operators + - * ^ and parentheses. Syntax errors carry line/column.
DiffPoly parse_expr(const std::string &text, const RingPtr &ring, int trunc);

/// Canonical form: ascending eps power, canonical monomial order, reduced
/// coefficients. Satisfies parse_expr(print_poly(p)) == p.
std::string print_poly(const DiffPoly &p);

/// Monomial in the grammar, eps factor included ("1" for the empty monomial).
std::string print_monomial(const Monomial &m, const RingDesc &ring, bool with_eps = true);

/// Stable JSON schema: [{"eps_power": n, "terms": [{"monomial": ..., "coeff": ...}]}].
std::string poly_to_json(const DiffPoly &p);

} // namespace dkdv
