#include "freelp/io.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "freelp/error.hpp"

namespace freelp {

namespace {

Json matrix_part(const Matrix& a, bool imag) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      row.push_back(imag ? a(r, c).imag() : a(r, c).real());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorKind::schema, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    fail(ErrorKind::schema, std::string("bad field '") + key + "': " + e.what());
  }
}

void read_part(const Json& rows, int m, Matrix& out, bool imag) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != m) {
    fail(ErrorKind::schema, "coefficient matrix must have m rows");
  }
  for (int r = 0; r < m; ++r) {
    const Json& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != m) {
      fail(ErrorKind::schema, "coefficient matrix must be square m x m");
    }
    for (int c = 0; c < m; ++c) {
      if (!row[c].is_number()) fail(ErrorKind::schema, "matrix entries must be numbers");
      const double v = row[c].get<double>();
      if (imag) {
        out(r, c).imag(v);
      } else {
        out(r, c).real(v);
      }
    }
  }
}

}  // namespace

Json tensor_to_json(const CoeffTensor& t) {
  Json j;
  j["n"] = t.n();
  j["d"] = t.d();
  j["m"] = t.m();
  j["alphabet"] = to_string(t.alphabet());
  Json entries = Json::array();
  for (const auto& [index, value] : t.entries()) {
    Json e;
    Json idx = Json::array();
    for (int i : index) idx.push_back(i + 1);
    e["index"] = std::move(idx);
    e["re"] = matrix_part(value, false);
    if (!value.imag().isZero(0.0)) e["im"] = matrix_part(value, true);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

CoeffTensor tensor_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::schema, "tensor file must hold a JSON object");
  const int n = get_field<int>(j, "n");
  const int d = get_field<int>(j, "d");
  const int m = get_field<int>(j, "m");
  const auto alphabet = parse_alphabet(get_field<std::string>(j, "alphabet"));
  if (n < 1 || d < 0 || m < 1) fail(ErrorKind::schema, "need n >= 1, d >= 0, m >= 1");
  CoeffTensor t(n, d, m, alphabet);
  if (!j.contains("entries") || !j["entries"].is_array()) {
    fail(ErrorKind::schema, "missing 'entries' array");
  }
  std::set<MultiIndex> seen;
  for (const Json& e : j["entries"]) {
    const auto raw = get_field<std::vector<int>>(e, "index");
    if (static_cast<int>(raw.size()) != d) {
      fail(ErrorKind::schema, "entry index length differs from d");
    }
    MultiIndex index;
    for (int i : raw) {
      if (i < 1 || i > t.alphabet_size()) fail(ErrorKind::schema, "entry index out of range");
      index.push_back(i - 1);
    }
    if (!seen.insert(index).second) fail(ErrorKind::schema, "duplicate entry index");
    Matrix a = Matrix::Zero(m, m);
    if (!e.contains("re")) fail(ErrorKind::schema, "entry missing 're'");
    read_part(e["re"], m, a, false);
    if (e.contains("im")) read_part(e["im"], m, a, true);
    t.set(index, std::move(a));
  }
  return t;
}

CoeffTensor load_tensor(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::schema, "cannot open tensor file " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    fail(ErrorKind::schema, std::string("malformed JSON: ") + e.what());
  }
  return tensor_from_json(j);
}

void save_tensor(const CoeffTensor& t, const std::filesystem::path& path) {
  write_text(path, tensor_to_json(t).dump(2) + "\n");
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::invalid_argument, "cannot write " + path.string());
  out << text;
}

}  // namespace freelp
