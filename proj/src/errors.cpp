#include "krein/errors.hpp"

namespace krein {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::not_square: return "not_square";
    case Errc::non_hermitian: return "non_hermitian";
    case Errc::degenerate: return "degenerate";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::not_regular: return "not_regular";
    case Errc::not_definite: return "not_definite";
    case Errc::invalid_symmetry: return "invalid_symmetry";
    case Errc::bad_signature: return "bad_signature";
    case Errc::retries_exhausted: return "retries_exhausted";
    case Errc::empty_side: return "empty_side";
    case Errc::invalid_samples: return "invalid_samples";
    case Errc::search_budget_exhausted: return "search_budget_exhausted";
    case Errc::vector_outside_subspace: return "vector_outside_subspace";
    case Errc::hypothesis_failed: return "hypothesis_failed";
    case Errc::bad_partition: return "bad_partition";
    case Errc::not_a_j_frame: return "not_a_j_frame";
    case Errc::bad_input: return "bad_input";
  }
  return "unknown";
}

void fail(Errc code, const std::string& what) {
  throw KreinError(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace krein
