#include "krein/sequences.hpp"

#include <algorithm>
#include <cmath>

namespace krein {

namespace {

void validate_split(const IndexSplit& split, int n) {
  std::vector<char> seen(static_cast<size_t>(n), 0);
  auto mark = [&](const std::vector<int>& idx) {
    for (int i : idx) {
      if (i < 0 || i >= n)
        fail(Errc::bad_partition, "split index out of range");
      if (seen[static_cast<size_t>(i)])
        fail(Errc::bad_partition, "split blocks overlap");
      seen[static_cast<size_t>(i)] = 1;
    }
  };
  mark(split.m_indices);
  mark(split.n_indices);
  for (char c : seen)
    if (!c) fail(Errc::bad_partition, "split does not cover the index set");
}

// Removing the indices in `drop` (sorted) from 0..n-1.
std::vector<int> complement_indices(const std::vector<int>& drop, int n) {
  std::vector<int> keep;
  keep.reserve(static_cast<size_t>(n) - drop.size());
  size_t j = 0;
  for (int i = 0; i < n; ++i) {
    if (j < drop.size() && drop[j] == i) {
      ++j;
    } else {
      keep.push_back(i);
    }
  }
  return keep;
}

bool is_exact_jframe(const KreinSpace& space, const VectorFamily& family,
                     double tol) {
  if (!jframe_check(space, family, tol).is_j_frame) return false;
  const int n = family.count();
  for (int i = 0; i < n; ++i) {
    const VectorFamily sub = subfamily(family, complement_indices({i}, n));
    if (jframe_check(space, sub, tol).is_j_frame) return false;
  }
  return true;
}

// Visits all size-k index subsets of 0..n-1 in lexicographic order.
template <typename Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    if (fn(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

}  // namespace

VectorFamily subfamily(const VectorFamily& family,
                       const std::vector<int>& indices) {
  Matrix m(family.synthesis.rows(),
           static_cast<Eigen::Index>(indices.size()));
  for (size_t j = 0; j < indices.size(); ++j)
    m.col(static_cast<Eigen::Index>(j)) = family.synthesis.col(indices[j]);
  return VectorFamily{std::move(m)};
}

SequenceReport frame_sequence_check(const KreinSpace& space,
                                    const VectorFamily& family, double tol) {
  const Classification cls = classify_family(space, family, tol);
  SequenceReport rep;
  rep.plus_span = cls.m_plus;
  rep.minus_span = cls.m_minus;
  rep.plus_margin =
      cls.m_plus.definiteness == Definiteness::uniformly_positive
          ? cls.m_plus.margin
          : 0.0;
  rep.minus_margin =
      cls.m_minus.definiteness == Definiteness::uniformly_negative
          ? cls.m_minus.margin
          : 0.0;
  for (int i : cls.i_neutral) {
    if (std::find(cls.zero_indices.begin(), cls.zero_indices.end(), i) ==
        cls.zero_indices.end())
      rep.neutral_offenders.push_back(i);
  }
  rep.is_frame_sequence = rep.neutral_offenders.empty() &&
                          cls.m_plus.is_uniformly_positive() &&
                          cls.m_minus.is_uniformly_negative();
  return rep;
}

SequenceReport frame_sequence_check(const KreinSpace& space,
                                    const VectorFamily& family) {
  return frame_sequence_check(space, family, space.tol);
}

SplitFrameReport subsequence_frame_test(const KreinSpace& space,
                                        const VectorFamily& family,
                                        const IndexSplit& split, double tol) {
  validate_split(split, family.count());
  const VectorFamily m_part = subfamily(family, split.m_indices);
  const VectorFamily n_part = subfamily(family, split.n_indices);

  SplitFrameReport rep;
  rep.m_part_report = jframe_check(space, m_part, tol);
  if (!rep.m_part_report.is_j_frame)
    fail(Errc::hypothesis_failed, "the m-block is not a J-frame");

  rep.n_part_report = jframe_check(space, n_part, tol);

  const Classification& mc = rep.m_part_report.classification;
  const Classification& nc = rep.n_part_report.classification;
  const double span_tol = tol * 1e3;  // residuals are either ~0 or order one
  rep.spans_equal_plus =
      same_span(nc.m_plus.basis, mc.m_plus.basis, span_tol);
  rep.spans_equal_minus =
      same_span(nc.m_minus.basis, mc.m_minus.basis, span_tol);
  rep.spans_equal = rep.spans_equal_plus && rep.spans_equal_minus;
  rep.equivalence_holds = rep.spans_equal == rep.n_part_report.is_j_frame;
  return rep;
}

IntersectionReport intersection_test(const KreinSpace& space,
                                     const VectorFamily& family,
                                     const IndexSplit& split, double tol) {
  validate_split(split, family.count());
  const VectorFamily m_part = subfamily(family, split.m_indices);
  const VectorFamily n_part = subfamily(family, split.n_indices);

  IntersectionReport rep;
  const Matrix a = pivoted_column_basis(m_part.synthesis).basis;
  const Matrix b = pivoted_column_basis(n_part.synthesis).basis;
  if (a.cols() == 0 || b.cols() == 0) {
    rep.intersection = make_subspace(space, Matrix(space.dim, 0), tol);
  } else {
    Matrix stacked(space.dim, a.cols() + b.cols());
    stacked << a, -b;
    const Matrix null = nullspace(stacked);
    const Matrix inter = a * null.topRows(a.cols());
    rep.intersection = make_subspace(space, inter, tol);
  }
  rep.intersection_dim = rep.intersection.k();
  rep.intersection_regular = rep.intersection.is_regular;
  rep.m_part = frame_sequence_check(space, m_part, tol);
  rep.n_part = frame_sequence_check(space, n_part, tol);
  rep.both_parts_pass =
      rep.m_part.is_frame_sequence && rep.n_part.is_frame_sequence;
  return rep;
}

ExactnessReport exactness(const KreinSpace& space, const VectorFamily& family,
                          int depth, double tol) {
  if (depth < 0) fail(Errc::bad_input, "depth must be nonnegative");
  if (!jframe_check(space, family, tol).is_j_frame)
    fail(Errc::not_a_j_frame, "exactness is defined for J-frames only");

  ExactnessReport rep;
  const int n = family.count();
  for (int i = 0; i < n; ++i) {
    const VectorFamily sub = subfamily(family, complement_indices({i}, n));
    if (jframe_check(space, sub, tol).is_j_frame) rep.removable.push_back(i);
  }
  rep.is_exact = rep.removable.empty();

  const int min_needed = space.n_plus + space.n_minus;
  const int max_useful = std::max(0, n - min_needed);
  const int search_depth = std::min(depth, max_useful);
  for (int size = 0; size <= search_depth && !rep.near_exact; ++size) {
    for_each_subset(n, size, [&](const std::vector<int>& drop) {
      const VectorFamily sub = subfamily(family, complement_indices(drop, n));
      if (is_exact_jframe(space, sub, tol)) {
        rep.near_exact = true;
        return true;
      }
      return false;
    });
  }
  rep.proper = rep.near_exact && !rep.is_exact;
  rep.search_depth_hit = !rep.near_exact && depth < max_useful;
  return rep;
}

ExactnessReport exactness(const KreinSpace& space, const VectorFamily& family,
                          int depth) {
  return exactness(space, family, depth, space.tol);
}

}  // namespace krein
