#pragma once

// JSON import/export of matrices, and report rendering. The schema is
//   { "family": str, "spins": [...], "dims": [...],
//     "ring": { "kind": "rational"|"multipoly"|"laurent_q"|"complex",
//               "symbols": [...] },
//     "cleared_denominator_power": int,
//     "basis": [labels],
//     "entries": row-major canonical strings, or [re, im] pairs }
// plus "rows"/"cols" for rectangular safety. Exact entries round-trip
// bit-exactly through the canonical text form; complex entries are written
// with 17 significant digits.

#include <complex>
#include <string>
#include <vector>

#include "yb/harness.hpp"
#include "yb/matrix.hpp"
#include "yb/poly.hpp"

namespace yb {

struct MatrixBundle {
  std::string family;
  std::vector<std::string> spins;
  std::string ring_kind;  // rational | multipoly | laurent_q | complex
  int cleared_denominator_power = 0;
  TablePtr table;  // for multipoly / laurent_q
  Matrix<Poly> poly;
  Matrix<ExactScalar> rational;
  Matrix<std::complex<double>> cplx;

  int rows() const;
  int cols() const;
  bool same_entries(const MatrixBundle& o) const;
};

MatrixBundle bundle_poly(std::string family, std::vector<std::string> spins,
                         const Matrix<Poly>& m, bool laurent, int cleared_power = 0);
MatrixBundle bundle_rational(std::string family, std::vector<std::string> spins,
                             const Matrix<ExactScalar>& m);
MatrixBundle bundle_complex(std::string family, std::vector<std::string> spins,
                            const Matrix<std::complex<double>>& m);

std::string export_matrix(const MatrixBundle& b);                 // JSON text
void export_matrix(const MatrixBundle& b, const std::string& path);
MatrixBundle import_matrix_text(const std::string& json_text);
MatrixBundle import_matrix(const std::string& path);

std::string report_to_json(const Report& r);

}  // namespace yb
