#include "krein/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace krein {

namespace {

using nlohmann::json;

Scalar parse_entry(const json& j, const std::string& where) {
  if (j.is_number()) return Scalar(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Scalar(j[0].get<double>(), j[1].get<double>());
  fail(Errc::bad_input,
       where + ": entries must be numbers or [re, im] pairs");
}

Matrix parse_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    fail(Errc::bad_input, where + ": expected a nonempty array of rows");
  const size_t rows = j.size();
  size_t cols = 0;
  for (size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array())
      fail(Errc::bad_input, where + ": row " + std::to_string(r + 1) +
                                " is not an array");
    if (r == 0)
      cols = j[r].size();
    else if (j[r].size() != cols)
      fail(Errc::bad_input, where + ": ragged rows");
  }
  if (cols == 0) fail(Errc::bad_input, where + ": empty rows");
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          parse_entry(j[r][c],
                      where + "[" + std::to_string(r + 1) + "]");
  return m;
}

// A list of vectors becomes the columns of a dim x N matrix.
Matrix parse_vector_list(const json& j, Eigen::Index dim,
                         const std::string& where) {
  if (!j.is_array() || j.empty())
    fail(Errc::bad_input, where + ": expected a nonempty list of vectors");
  Matrix m(dim, static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim)
      fail(Errc::bad_input, where + ": vector " + std::to_string(i + 1) +
                                " has wrong length");
    for (Eigen::Index c = 0; c < dim; ++c)
      m(c, static_cast<Eigen::Index>(i)) =
          parse_entry(row[static_cast<size_t>(c)],
                      where + "[" + std::to_string(i + 1) + "]");
  }
  return m;
}

std::vector<int> parse_index_list(const json& j, int count,
                                  const std::string& where) {
  if (!j.is_array()) fail(Errc::bad_input, where + ": expected an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_integer())
      fail(Errc::bad_input, where + ": indices must be integers");
    const long long v = e.get<long long>();
    if (v < 1 || v > count)
      fail(Errc::bad_input, where + ": index " + std::to_string(v) +
                                " out of range 1.." + std::to_string(count));
    out.push_back(static_cast<int>(v) - 1);
  }
  return out;
}

void require_real(const Matrix& m, const std::string& where) {
  if (m.size() > 0 && m.imag().cwiseAbs().maxCoeff() != 0.0)
    fail(Errc::bad_input,
         where + ": complex entries in a file declared \"real\"");
}

json parse_json_text(const std::string& text, const std::string& context) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::bad_input, context + ": " + e.what());
  }
}

}  // namespace

ProblemFile parse_problem(const std::string& json_text,
                          const std::string& context) {
  const json j = parse_json_text(json_text, context);
  if (!j.is_object()) fail(Errc::bad_input, context + ": expected an object");

  ProblemFile p;
  if (j.contains("field")) {
    const auto f = j["field"].get<std::string>();
    if (f == "real")
      p.field = Field::real;
    else if (f == "complex")
      p.field = Field::cplx;
    else
      fail(Errc::bad_input, context + ": field must be \"real\" or \"complex\"");
  }
  if (j.contains("tol")) {
    if (!j["tol"].is_number() || !(j["tol"].get<double>() > 0.0))
      fail(Errc::bad_input, context + ": tol must be a positive number");
    p.tol = j["tol"].get<double>();
  }
  if (!j.contains("gram")) fail(Errc::bad_input, context + ": missing gram");
  p.gram = parse_matrix(j["gram"], context + ": gram");
  if (p.gram.rows() != p.gram.cols())
    fail(Errc::bad_input, context + ": gram must be square");
  const Eigen::Index dim = p.gram.rows();

  if (!j.contains("vectors"))
    fail(Errc::bad_input, context + ": missing vectors");
  p.vectors = parse_vector_list(j["vectors"], dim, context + ": vectors");

  if (j.contains("symmetry"))
    p.symmetry = parse_matrix(j["symmetry"], context + ": symmetry");
  if (p.symmetry && (p.symmetry->rows() != dim || p.symmetry->cols() != dim))
    fail(Errc::bad_input, context + ": symmetry has wrong shape");

  if (j.contains("subspace"))
    p.subspace = parse_vector_list(j["subspace"], dim, context + ": subspace");

  if (j.contains("split")) {
    const json& s = j["split"];
    if (!s.is_array() || s.size() != 2)
      fail(Errc::bad_input, context + ": split must be a pair of index arrays");
    IndexSplit split;
    split.m_indices =
        parse_index_list(s[0], static_cast<int>(p.vectors.cols()),
                         context + ": split[1]");
    split.n_indices =
        parse_index_list(s[1], static_cast<int>(p.vectors.cols()),
                         context + ": split[2]");
    p.split = split;
  }

  if (p.field == Field::real) {
    require_real(p.gram, context + ": gram");
    require_real(p.vectors, context + ": vectors");
    if (p.symmetry) require_real(*p.symmetry, context + ": symmetry");
    if (p.subspace) require_real(*p.subspace, context + ": subspace");
  }
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::bad_input, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::bad_input, "cannot write " + path);
  out << content;
}

std::string content_digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string format_double(double d) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return std::string(buf);
}

void CanonicalWriter::comma() {
  if (!need_comma_.empty()) {
    if (need_comma_.back()) out_ += ',';
    need_comma_.back() = true;
  }
}

void CanonicalWriter::begin_object() {
  comma();
  out_ += '{';
  need_comma_.push_back(false);
}

void CanonicalWriter::end_object() {
  out_ += '}';
  need_comma_.pop_back();
}

void CanonicalWriter::begin_array() {
  comma();
  out_ += '[';
  need_comma_.push_back(false);
}

void CanonicalWriter::end_array() {
  out_ += ']';
  need_comma_.pop_back();
}

void CanonicalWriter::key(const std::string& k) {
  comma();
  out_ += '"';
  out_ += k;
  out_ += "\":";
  // The value completing this key/value item must not emit its own comma.
  need_comma_.back() = false;
}

void CanonicalWriter::value(bool b) {
  comma();
  out_ += b ? "true" : "false";
}

void CanonicalWriter::value(long long i) {
  comma();
  out_ += std::to_string(i);
}

void CanonicalWriter::value(double d) {
  comma();
  if (std::isfinite(d))
    out_ += format_double(d);
  else
    out_ += "null";
}

void CanonicalWriter::value(const std::string& s) {
  comma();
  out_ += '"';
  for (char c : s) {
    switch (c) {
      case '"': out_ += "\\\""; break;
      case '\\': out_ += "\\\\"; break;
      case '\n': out_ += "\\n"; break;
      case '\t': out_ += "\\t"; break;
      default: out_ += c;
    }
  }
  out_ += '"';
}

void CanonicalWriter::null_value() {
  comma();
  out_ += "null";
}

void CanonicalWriter::complex_value(const Scalar& z) {
  begin_array();
  value(z.real());
  value(z.imag());
  end_array();
}

void emit_vector(CanonicalWriter& w, const Vector& v, Field field) {
  w.begin_array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (field == Field::real)
      w.value(v(i).real());
    else
      w.complex_value(v(i));
  }
  w.end_array();
}

void emit_matrix(CanonicalWriter& w, const Matrix& m, Field field) {
  w.begin_array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    w.begin_array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (field == Field::real)
        w.value(m(r, c).real());
      else
        w.complex_value(m(r, c));
    }
    w.end_array();
  }
  w.end_array();
}

std::string fixture_to_json(const ProjectionCounterexample& fx) {
  CanonicalWriter w;
  w.begin_object();
  w.key("field");
  w.value("real");
  w.key("seed");
  w.value(static_cast<long long>(fx.seed));
  w.key("gram");
  emit_matrix(w, fx.gram, Field::real);
  w.key("vectors");
  // Vectors are emitted as a list of columns, matching the problem schema.
  w.begin_array();
  for (Eigen::Index c = 0; c < fx.family1.cols(); ++c)
    emit_vector(w, fx.family1.col(c), Field::real);
  w.end_array();
  w.key("vectors2");
  w.begin_array();
  for (Eigen::Index c = 0; c < fx.family2.cols(); ++c)
    emit_vector(w, fx.family2.col(c), Field::real);
  w.end_array();
  w.key("subspace");
  w.begin_array();
  for (Eigen::Index c = 0; c < fx.subspace_basis.cols(); ++c)
    emit_vector(w, fx.subspace_basis.col(c), Field::real);
  w.end_array();
  w.end_object();
  return w.str() + "\n";
}

ProjectionCounterexample fixture_from_json(const std::string& json_text) {
  const json j = parse_json_text(json_text, "fixture");
  ProjectionCounterexample fx;
  if (!j.contains("gram") || !j.contains("vectors") ||
      !j.contains("vectors2") || !j.contains("subspace"))
    fail(Errc::bad_input, "fixture: missing fields");
  fx.gram = parse_matrix(j["gram"], "fixture: gram");
  const Eigen::Index dim = fx.gram.rows();
  fx.family1 = parse_vector_list(j["vectors"], dim, "fixture: vectors");
  fx.family2 = parse_vector_list(j["vectors2"], dim, "fixture: vectors2");
  fx.subspace_basis =
      parse_vector_list(j["subspace"], dim, "fixture: subspace");
  if (j.contains("seed")) fx.seed = j["seed"].get<std::uint64_t>();
  return fx;
}

}  // namespace krein
