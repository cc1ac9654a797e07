#pragma once

#include <stdexcept>
#include <string>

namespace krein {

enum class Errc {
  not_square,
  non_hermitian,
  degenerate,
  dimension_mismatch,
  not_regular,
  not_definite,
  invalid_symmetry,
  bad_signature,
  retries_exhausted,
  empty_side,
  invalid_samples,
  search_budget_exhausted,
  vector_outside_subspace,
  hypothesis_failed,
  bad_partition,
  not_a_j_frame,
  bad_input,
};

const char* errc_name(Errc code);

// All library failures surface as KreinError; the code tells callers whether
// the problem is malformed input, a violated mathematical hypothesis, or an
// exhausted search.
class KreinError : public std::runtime_error {
 public:
  KreinError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace krein
