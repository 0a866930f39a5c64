#pragma once

#include <string>

#include <json.hpp>

#include "discmat/matrix.hpp"
#include "discmat/multipoly.hpp"

namespace discmat::cli {

/// {"rows", "cols", "nvars", "row_labels", "col_labels", "entries"} where
/// entries is a row-major array of {monomial: "p/q"} maps.
nlohmann::json matrix_to_json(const PolyMatrix& m);
/// Inverse of matrix_to_json. Throws std::invalid_argument on malformed input.
PolyMatrix matrix_from_json(const nlohmann::json& j);

std::string poly_to_latex(const MultiPoly& p);
/// A pmatrix environment, one matrix row per line.
std::string matrix_to_latex(const PolyMatrix& m);
/// Column-aligned text with row labels on the left.
std::string matrix_to_plain(const PolyMatrix& m);
/// Header line of column labels, then one line per row.
std::string matrix_to_csv(const PolyMatrix& m);

std::string csv_escape(const std::string& field);

}  // namespace discmat::cli
