#pragma once

#include "krein/frames.hpp"

namespace krein {

// Frame-sequence verdict: both sign spans uniformly definite, no nonzero
// neutral vectors; maximality is not required.
struct SequenceReport {
  bool is_frame_sequence = false;
  Subspace plus_span, minus_span;
  double plus_margin = 0.0, minus_margin = 0.0;
  std::vector<int> neutral_offenders;  // 0-based indices
};

// Two-block split {m_k} / {n_k} of the index set (0-based, disjoint, covering).
struct IndexSplit {
  std::vector<int> m_indices;
  std::vector<int> n_indices;
};

// The subfamily equivalence: with the m-block a J-frame, the n-block is a
// J-frame iff its positive and negative spans equal those of the m-block.
struct SplitFrameReport {
  bool spans_equal_plus = false;
  bool spans_equal_minus = false;
  bool spans_equal = false;
  JFrameReport m_part_report;
  JFrameReport n_part_report;
  bool equivalence_holds = false;  // spans_equal == n_part is a J-frame
};

struct IntersectionReport {
  Subspace intersection;  // span(m-part) cap span(n-part)
  int intersection_dim = 0;
  bool intersection_regular = false;
  SequenceReport m_part;
  SequenceReport n_part;
  bool both_parts_pass = false;
};

struct ExactnessReport {
  bool is_exact = false;
  std::vector<int> removable;  // 0-based single indices keeping a J-frame
  bool near_exact = false;
  bool proper = false;
  bool search_depth_hit = false;
};

SequenceReport frame_sequence_check(const KreinSpace& space,
                                    const VectorFamily& family, double tol);
SequenceReport frame_sequence_check(const KreinSpace& space,
                                    const VectorFamily& family);

SplitFrameReport subsequence_frame_test(const KreinSpace& space,
                                        const VectorFamily& family,
                                        const IndexSplit& split, double tol);

IntersectionReport intersection_test(const KreinSpace& space,
                                     const VectorFamily& family,
                                     const IndexSplit& split, double tol);

ExactnessReport exactness(const KreinSpace& space, const VectorFamily& family,
                          int depth, double tol);
ExactnessReport exactness(const KreinSpace& space, const VectorFamily& family,
                          int depth = 3);

VectorFamily subfamily(const VectorFamily& family,
                       const std::vector<int>& indices);

}  // namespace krein
