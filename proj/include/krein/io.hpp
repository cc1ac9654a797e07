#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krein/oracle.hpp"
#include "krein/sequences.hpp"

namespace krein {

// One analysis problem as read from a JSON file. Complex entries are [re, im]
// pairs; plain numbers are real. Split indices are 1-based on disk and
// converted to 0-based here.
struct ProblemFile {
  Field field = Field::real;
  Matrix gram;
  std::optional<Matrix> symmetry;
  Matrix vectors;  // dim x N, N >= 1
  std::optional<Matrix> subspace;
  std::optional<IndexSplit> split;
  double tol = kDefaultTol;
};

ProblemFile parse_problem(const std::string& json_text,
                          const std::string& context);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// FNV-1a 64-bit over the raw bytes, as 16 hex digits.
std::string content_digest(const std::string& bytes);

// Canonical JSON emission: insertion-ordered keys, "%.17g" doubles, no
// whitespace variation, so identical reports are identical bytes.
class CanonicalWriter {
 public:
  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(const std::string& k);
  void value(bool b);
  void value(long long i);
  void value(int i) { value(static_cast<long long>(i)); }
  void value(double d);
  void value(const std::string& s);
  void value(const char* s) { value(std::string(s)); }
  void null_value();
  void complex_value(const Scalar& z);

  const std::string& str() const { return out_; }

 private:
  void comma();
  std::string out_;
  std::vector<bool> need_comma_;
};

std::string format_double(double d);

void emit_matrix(CanonicalWriter& w, const Matrix& m, Field field);
void emit_vector(CanonicalWriter& w, const Vector& v, Field field);

// Frozen counterexample fixture (ProblemFile schema plus a second family).
std::string fixture_to_json(const ProjectionCounterexample& fx);
ProjectionCounterexample fixture_from_json(const std::string& json_text);

}  // namespace krein
