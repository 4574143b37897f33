#pragma once

// Matrix (de)serialization. The on-disk format is a JSON object
//   {"n": <dim>, "entries": [[re, im], ...]}
// with n*n entries in row-major order.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sectoria/matrix.hpp"

namespace sectoria {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline nlohmann::json matrix_to_json(const Matrix& a) {
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      entries.push_back({a(i, j).real(), a(i, j).imag()});
    }
  }
  return nlohmann::json{{"n", a.rows()}, {"entries", std::move(entries)}};
}

inline Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    throw IoError("matrix json must be an object with 'n' and 'entries'");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 1) {
    throw IoError("matrix json: 'n' must be a positive integer");
  }
  const long n = j["n"].get<long>();
  const auto& entries = j["entries"];
  if (!entries.is_array() || static_cast<long>(entries.size()) != n * n) {
    throw IoError("matrix json: 'entries' must hold n*n [re, im] pairs");
  }
  Matrix a(n, n);
  long idx = 0;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw IoError("matrix json: each entry must be a [re, im] number pair");
    }
    a(idx / n, idx % n) = Complex(e[0].get<double>(), e[1].get<double>());
    ++idx;
  }
  if (!a.allFinite()) throw IoError("matrix json: entries must be finite");
  return a;
}

inline Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("cannot parse matrix file " + path + ": " + e.what());
  }
  return matrix_from_json(j);
}

inline void write_matrix_file(const std::string& path, const Matrix& a) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file: " + path);
  out << matrix_to_json(a).dump(2) << "\n";
}

}  // namespace sectoria
