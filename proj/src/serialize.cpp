#include "yb/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace yb {

using nlohmann::json;

int MatrixBundle::rows() const {
  if (ring_kind == "complex") return cplx.rows;
  if (ring_kind == "rational") return rational.rows;
  return poly.rows;
}
int MatrixBundle::cols() const {
  if (ring_kind == "complex") return cplx.cols;
  if (ring_kind == "rational") return rational.cols;
  return poly.cols;
}

bool MatrixBundle::same_entries(const MatrixBundle& o) const {
  if (ring_kind != o.ring_kind) return false;
  if (ring_kind == "complex") return cplx.data == o.cplx.data && cplx.rows == o.cplx.rows;
  if (ring_kind == "rational") return rational == o.rational;
  return poly == o.poly;
}

MatrixBundle bundle_poly(std::string family, std::vector<std::string> spins,
                         const Matrix<Poly>& m, bool laurent, int cleared_power) {
  MatrixBundle b;
  b.family = std::move(family);
  b.spins = std::move(spins);
  b.ring_kind = laurent ? "laurent_q" : "multipoly";
  b.cleared_denominator_power = cleared_power;
  b.poly = m;
  for (const auto& p : m.data)
    if (p.tab) {
      b.table = p.tab;
      break;
    }
  return b;
}

MatrixBundle bundle_rational(std::string family, std::vector<std::string> spins,
                             const Matrix<ExactScalar>& m) {
  MatrixBundle b;
  b.family = std::move(family);
  b.spins = std::move(spins);
  b.ring_kind = "rational";
  b.rational = m;
  return b;
}

MatrixBundle bundle_complex(std::string family, std::vector<std::string> spins,
                            const Matrix<std::complex<double>>& m) {
  MatrixBundle b;
  b.family = std::move(family);
  b.spins = std::move(spins);
  b.ring_kind = "complex";
  b.cplx = m;
  return b;
}

namespace {
json complex_entry(const std::complex<double>& z) {
  return json::array({z.real(), z.imag()});
}

template <class M>
void fill_common(json& j, const MatrixBundle& b, const M& m) {
  j["family"] = b.family;
  j["spins"] = b.spins;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  j["dims"] = m.col_factors;
  j["cleared_denominator_power"] = b.cleared_denominator_power;
  json basis = json::array();
  for (const auto& l : m.col_labels) basis.push_back(l);
  j["basis"] = basis;
}
}  // namespace

std::string export_matrix(const MatrixBundle& b) {
  json j;
  json ring;
  ring["kind"] = b.ring_kind;
  json syms = json::array(), invs = json::array();
  if (b.table)
    for (size_t i = 0; i < b.table->names.size(); ++i) {
      syms.push_back(b.table->names[i]);
      invs.push_back(static_cast<bool>(b.table->invertible[i]));
    }
  ring["symbols"] = syms;
  ring["invertible"] = invs;
  j["ring"] = ring;

  json entries = json::array();
  if (b.ring_kind == "complex") {
    fill_common(j, b, b.cplx);
    for (const auto& z : b.cplx.data) entries.push_back(complex_entry(z));
  } else if (b.ring_kind == "rational") {
    fill_common(j, b, b.rational);
    for (const auto& x : b.rational.data) entries.push_back(x.str());
  } else {
    fill_common(j, b, b.poly);
    for (const auto& p : b.poly.data) entries.push_back(p.str());
  }
  j["entries"] = entries;
  return j.dump(2);
}

void export_matrix(const MatrixBundle& b, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("export_matrix: cannot open " + path);
  f << export_matrix(b) << "\n";
}

MatrixBundle import_matrix_text(const std::string& text) {
  json j = json::parse(text);
  MatrixBundle b;
  b.family = j.at("family").get<std::string>();
  for (const auto& s : j.at("spins")) b.spins.push_back(s.get<std::string>());
  b.ring_kind = j.at("ring").at("kind").get<std::string>();
  b.cleared_denominator_power = j.value("cleared_denominator_power", 0);
  int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
  std::vector<int> dims;
  for (const auto& d : j.at("dims")) dims.push_back(d.get<int>());
  std::vector<std::string> basis;
  for (const auto& l : j.at("basis")) basis.push_back(l.get<std::string>());
  const json& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows * cols)
    throw std::runtime_error("import_matrix: entry count does not match rows*cols");

  if (b.ring_kind == "complex") {
    b.cplx = Matrix<std::complex<double>>(rows, cols);
    if (!dims.empty()) b.cplx.col_factors = b.cplx.row_factors = dims;
    b.cplx.col_labels = basis;
    for (size_t k = 0; k < entries.size(); ++k)
      b.cplx.data[k] = {entries[k].at(0).get<double>(), entries[k].at(1).get<double>()};
    return b;
  }
  if (b.ring_kind == "rational") {
    b.rational = Matrix<ExactScalar>(rows, cols);
    if (!dims.empty()) b.rational.col_factors = b.rational.row_factors = dims;
    b.rational.col_labels = basis;
    for (size_t k = 0; k < entries.size(); ++k)
      b.rational.data[k] = ExactScalar::parse(entries[k].get<std::string>());
    return b;
  }
  std::vector<std::string> names;
  for (const auto& s : j.at("ring").at("symbols")) names.push_back(s.get<std::string>());
  std::vector<bool> inv(names.size(), false);
  if (j.at("ring").contains("invertible")) {
    size_t k = 0;
    for (const auto& f : j.at("ring").at("invertible"))
      if (k < inv.size()) inv[k++] = f.get<bool>();
  }
  b.table = make_table(names, inv);
  b.poly = Matrix<Poly>(rows, cols);
  if (!dims.empty()) b.poly.col_factors = b.poly.row_factors = dims;
  b.poly.col_labels = basis;
  for (size_t k = 0; k < entries.size(); ++k)
    b.poly.data[k] = Poly::parse(entries[k].get<std::string>(), b.table);
  return b;
}

MatrixBundle import_matrix(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("import_matrix: cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return import_matrix_text(ss.str());
}

std::string report_to_json(const Report& r) {
  json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["pass"] = r.all_pass();
  json cases = json::array();
  for (const auto& c : r.cases) {
    json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["exact"] = c.exact;
    cj["residual"] = c.residual;
    cj["tolerance"] = c.tolerance;
    cj["seconds"] = c.seconds;
    if (!c.note.empty()) cj["note"] = c.note;
    cases.push_back(cj);
  }
  j["cases"] = cases;
  return j.dump(2);
}

}  // namespace yb
