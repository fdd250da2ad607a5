#pragma once

#include "jorvar/deformation.hpp"

#include <iosfwd>

namespace jorvar {

// ".jalg" interchange format:
//   dim <n>
//   <i> <j> <k> <p>/<q>     one line per nonzero c_ij^k with i <= j
// '#' starts a comment; tokens are whitespace-separated; indices 1-based.
Algebra parse_jalg(std::istream& in);
Algebra parse_jalg_string(const std::string& text);
Algebra load_jalg(const std::string& path);
std::string to_jalg(const Algebra& a);

// Polynomial matrix files share the .jalg tokenizer:
//   matrix <rows> <cols>
// then rows*cols entries in row-major order. Entries are sparse sums of
// coeff*t^k terms with no interior whitespace, e.g. 0, -1/2, t, 2*t^2, 1+t^2.
PolyMatrix parse_poly_matrix(std::istream& in);
PolyMatrix parse_poly_matrix_string(const std::string& text);
PolyMatrix load_poly_matrix(const std::string& path);
std::string to_poly_matrix_text(const PolyMatrix& m);

UniPoly parse_poly_entry(const std::string& token);
std::string poly_entry_text(const UniPoly& p);

// Constant matrices reuse the same reader; degree > 0 entries are rejected.
RatMatrix to_constant_matrix(const PolyMatrix& m);

// Catalog manifest: one JSON object per entry, stable catalog order.
std::string catalog_manifest_json();

} // namespace jorvar
