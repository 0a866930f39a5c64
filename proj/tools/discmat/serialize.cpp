#include "serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace discmat::cli {

using nlohmann::json;

json matrix_to_json(const PolyMatrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      json cell = json::object();
      for (const auto& [mono, coeff] : m(r, c).terms()) cell[mono.str()] = coeff.str();
      row.push_back(std::move(cell));
    }
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()},
          {"cols", m.cols()},
          {"nvars", m.nvars()},
          {"row_labels", m.row_labels()},
          {"col_labels", m.col_labels()},
          {"entries", std::move(entries)}};
}

PolyMatrix matrix_from_json(const json& j) {
  try {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const int nvars = j.at("nvars").get<int>();
    const json& entries = j.at("entries");
    if (entries.size() != rows) throw std::invalid_argument("matrix json: row count mismatch");
    std::vector<MultiPoly> cells;
    cells.reserve(rows * cols);
    for (const auto& row : entries) {
      if (row.size() != cols) throw std::invalid_argument("matrix json: column count mismatch");
      for (const auto& cell : row) {
        std::vector<MultiPoly::Term> terms;
        for (const auto& [key, value] : cell.items()) {
          terms.emplace_back(Monomial::parse(key), Rational::parse(value.get<std::string>()));
        }
        cells.push_back(MultiPoly::from_terms(nvars, std::move(terms)));
      }
    }
    return PolyMatrix(rows, cols, nvars, std::move(cells), j.at("row_labels").get<std::vector<Label>>(),
                      j.at("col_labels").get<std::vector<Label>>());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("matrix json: ") + e.what());
  }
}

namespace {

std::string mono_to_latex(const Monomial& m) {
  std::string out;
  auto power = [&](const std::string& base, int e) {
    out += base;
    if (e != 1) out += "^{" + std::to_string(e) + "}";
  };
  for (int i = 0; i < kMaxCoefficientVars; ++i) {
    if (m.exp[static_cast<std::size_t>(i)] != 0) power("a_{" + std::to_string(i) + "}", m.exp[static_cast<std::size_t>(i)]);
  }
  if (m.exp[kSlotX] != 0) power("x", m.exp[kSlotX]);
  if (m.exp[kSlotY] != 0) power("y", m.exp[kSlotY]);
  return out;
}

std::string rational_to_latex(const Rational& r) {
  if (r.is_integer()) return r.numerator().get_str();
  return "\\frac{" + r.numerator().get_str() + "}{" + r.denominator().get_str() + "}";
}

}  // namespace

std::string poly_to_latex(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const Rational mag = c.abs();
    if (c.sign() < 0) out += first ? "-" : " - ";
    else if (!first) out += " + ";
    if (m.is_one()) out += rational_to_latex(mag);
    else {
      if (!mag.is_one()) out += rational_to_latex(mag);
      out += mono_to_latex(m);
    }
    first = false;
  }
  return out;
}

std::string matrix_to_latex(const PolyMatrix& m) {
  std::string out = "\\begin{pmatrix}\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += " & ";
      out += poly_to_latex(m(r, c));
    }
    out += r + 1 < m.rows() ? " \\\\\n" : "\n";
  }
  out += "\\end{pmatrix}\n";
  return out;
}

std::string matrix_to_plain(const PolyMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows() + 1, std::vector<std::string>(m.cols() + 1));
  for (std::size_t c = 0; c < m.cols(); ++c) cells[0][c + 1] = m.col_labels()[c];
  for (std::size_t r = 0; r < m.rows(); ++r) {
    cells[r + 1][0] = m.row_labels()[r];
    for (std::size_t c = 0; c < m.cols(); ++c) cells[r + 1][c + 1] = m(r, c).str();
  }
  std::vector<std::size_t> width(m.cols() + 1, 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += row[c] + std::string(width[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string matrix_to_csv(const PolyMatrix& m) {
  std::string out = "label";
  for (const auto& l : m.col_labels()) out += "," + csv_escape(l);
  out += '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += csv_escape(m.row_labels()[r]);
    for (std::size_t c = 0; c < m.cols(); ++c) out += "," + csv_escape(m(r, c).str());
    out += '\n';
  }
  return out;
}

}  // namespace discmat::cli
