// kframe: command-line analyses for frames in finite-dimensional Krein
// spaces, with canonical (byte-stable) JSON reports.

#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <string>

#include "krein/io.hpp"
#include "krein/oracle.hpp"
#include "krein/sequences.hpp"
#include "krein/transforms.hpp"

using namespace krein;

namespace {

constexpr const char* kToolName = "kframe";
constexpr const char* kToolVersion = "0.1.0";

struct CommonOpts {
  std::string input;
  std::string input2;
  std::string output;
  double tol = -1.0;  // negative: use the file's tolerance
  int depth = 3;
};

void emit_output(const std::string& path, const std::string& content) {
  if (path.empty())
    std::cout << content;
  else
    write_file(path, content);
}

void begin_report(CanonicalWriter& w, const std::string& command,
                  const std::string& digest, const std::string& digest2,
                  double tol) {
  w.begin_object();
  w.key("tool");
  w.begin_object();
  w.key("name");
  w.value(kToolName);
  w.key("version");
  w.value(kToolVersion);
  w.end_object();
  w.key("command");
  w.value(command);
  if (!digest.empty()) {
    w.key("input_digest");
    w.value(digest);
  }
  if (!digest2.empty()) {
    w.key("input2_digest");
    w.value(digest2);
  }
  w.key("tolerance");
  w.value(tol);
}

void emit_indices_1based(CanonicalWriter& w, const std::vector<int>& idx) {
  w.begin_array();
  for (int i : idx) w.value(i + 1);
  w.end_array();
}

void emit_plus_bounds(CanonicalWriter& w,
                      const std::optional<PlusBounds>& b) {
  if (!b) {
    w.null_value();
    return;
  }
  w.begin_object();
  w.key("A1");
  w.value(b->a1);
  w.key("B1");
  w.value(b->b1);
  w.end_object();
}

void emit_minus_bounds(CanonicalWriter& w,
                       const std::optional<MinusBounds>& b) {
  if (!b) {
    w.null_value();
    return;
  }
  w.begin_object();
  w.key("A2");
  w.value(b->a2);
  w.key("B2");
  w.value(b->b2);
  w.end_object();
}

void emit_jframe_report(CanonicalWriter& w, const KreinSpace& space,
                        const JFrameReport& rep) {
  w.begin_object();
  w.key("is_j_frame");
  w.value(rep.is_j_frame);
  w.key("signature");
  w.begin_array();
  w.value(space.n_plus);
  w.value(space.n_minus);
  w.end_array();
  w.key("classification");
  w.begin_object();
  w.key("i_plus");
  emit_indices_1based(w, rep.classification.i_plus);
  w.key("i_minus");
  emit_indices_1based(w, rep.classification.i_minus);
  w.key("i_neutral");
  emit_indices_1based(w, rep.classification.i_neutral);
  w.key("zero");
  emit_indices_1based(w, rep.classification.zero_indices);
  w.end_object();
  w.key("plus");
  w.begin_object();
  w.key("dim");
  w.value(rep.classification.m_plus.k());
  w.key("margin");
  w.value(rep.plus_margin);
  w.key("maximal");
  w.value(rep.plus_maximal);
  w.key("bounds");
  emit_plus_bounds(w, rep.bounds.plus);
  w.end_object();
  w.key("minus");
  w.begin_object();
  w.key("dim");
  w.value(rep.classification.m_minus.k());
  w.key("margin");
  w.value(rep.minus_margin);
  w.key("maximal");
  w.value(rep.minus_maximal);
  w.key("bounds");
  emit_minus_bounds(w, rep.bounds.minus);
  w.end_object();
  w.key("failure_reasons");
  w.begin_array();
  for (FailureReason r : rep.failure_reasons) w.value(failure_reason_name(r));
  w.end_array();
  w.end_object();
}

void emit_subspace_summary(CanonicalWriter& w, const Subspace& m) {
  w.begin_object();
  w.key("dim");
  w.value(m.k());
  w.key("definiteness");
  w.value(definiteness_name(m.definiteness));
  w.key("margin");
  w.value(m.margin);  // null when infinite (trivial subspace)
  w.key("regular");
  w.value(m.is_regular);
  w.key("maximal_definite");
  w.value(m.is_maximal_definite);
  w.end_object();
}

void emit_family(CanonicalWriter& w, const Matrix& synthesis, Field field) {
  w.begin_array();
  for (Eigen::Index c = 0; c < synthesis.cols(); ++c)
    emit_vector(w, synthesis.col(c), field);
  w.end_array();
}

struct LoadedProblem {
  ProblemFile file;
  std::string digest;
  KreinSpace space;
  VectorFamily family;
  double tol = kDefaultTol;
};

LoadedProblem load(const CommonOpts& opts, const std::string& path) {
  LoadedProblem lp;
  const std::string bytes = read_file(path);
  lp.digest = content_digest(bytes);
  lp.file = parse_problem(bytes, path);
  lp.tol = opts.tol > 0.0 ? opts.tol : lp.file.tol;
  lp.space = make_krein_space(lp.file.gram, lp.tol, lp.file.field);
  lp.family = VectorFamily{lp.file.vectors};
  return lp;
}

int run_analyze(const CommonOpts& opts) {
  LoadedProblem lp = load(opts, opts.input);
  const JFrameReport rep = jframe_check(lp.space, lp.family, lp.tol);
  CanonicalWriter w;
  begin_report(w, "analyze", lp.digest, "", lp.tol);
  w.key("report");
  emit_jframe_report(w, lp.space, rep);
  w.end_object();
  emit_output(opts.output, w.str() + "\n");
  return rep.is_j_frame ? 0 : 1;
}

int run_bounds(const CommonOpts& opts) {
  LoadedProblem lp = load(opts, opts.input);
  const OptimalBounds ob = optimal_bounds(lp.space, lp.family, lp.tol);
  CanonicalWriter w;
  begin_report(w, "bounds", lp.digest, "", lp.tol);
  w.key("optimal");
  w.begin_object();
  w.key("plus");
  emit_plus_bounds(w, ob.plus);
  w.key("minus");
  emit_minus_bounds(w, ob.minus);
  w.end_object();
  w.key("metric");
  if (lp.file.symmetry) {
    const SymmetryReport sym =
        validate_symmetry(lp.space, *lp.file.symmetry, lp.tol);
    if (!sym.valid())
      fail(Errc::invalid_symmetry,
           "the supplied symmetry is not a valid fundamental symmetry");
    const MetricFrameBounds mb =
        j_metric_frame_bounds(lp.space, sym, lp.family);
    w.begin_object();
    w.key("lower");
    w.value(mb.lower);
    w.key("upper");
    w.value(mb.upper);
    w.key("spans_space");
    w.value(mb.spans_space);
    w.end_object();
  } else {
    w.null_value();
  }
  w.end_object();
  emit_output(opts.output, w.str() + "\n");
  return 0;
}

int run_project(const CommonOpts& opts) {
  LoadedProblem lp = load(opts, opts.input);
  if (!lp.file.subspace)
    fail(Errc::bad_input, "project requires a subspace in the input file");
  const Subspace m = make_subspace(lp.space, *lp.file.subspace, lp.tol);
  const ProjectedFamilyReport onto =
      project_family(lp.space, m, lp.family, lp.tol);
  const Subspace mc = j_complement(lp.space, m);
  const ProjectedFamilyReport off =
      project_family(lp.space, mc, lp.family, lp.tol);

  CanonicalWriter w;
  begin_report(w, "project", lp.digest, "", lp.tol);
  const auto emit_side = [&](const ProjectedFamilyReport& rep) {
    w.begin_object();
    w.key("subspace");
    emit_subspace_summary(w, rep.subspace);
    w.key("hypothesis_definite");
    w.value(rep.hypothesis_definite);
    w.key("commuting_case");
    w.value(rep.commuting_case);
    w.key("projected");
    emit_family(w, rep.projected.synthesis, lp.space.field);
    w.key("sub_report");
    emit_jframe_report(w, rep.sub_space, rep.sub_report);
    w.end_object();
  };
  w.key("onto");
  emit_side(onto);
  w.key("complement");
  emit_side(off);
  w.end_object();
  emit_output(opts.output, w.str() + "\n");
  return onto.sub_report.is_j_frame && off.sub_report.is_j_frame ? 0 : 1;
}

int run_merge(const CommonOpts& opts) {
  LoadedProblem lp = load(opts, opts.input);
  if (opts.input2.empty()) fail(Errc::bad_input, "merge requires --input2");
  const std::string bytes2 = read_file(opts.input2);
  const std::string digest2 = content_digest(bytes2);
  const ProblemFile p2 = parse_problem(bytes2, opts.input2);
  if ((p2.gram - lp.file.gram).norm() >
      lp.tol * std::max(1.0, lp.file.gram.norm()))
    fail(Errc::bad_input, "the two inputs carry different Gram matrices");
  if (!lp.file.subspace)
    fail(Errc::bad_input, "merge requires a subspace in the first input");

  const Subspace m = make_subspace(lp.space, *lp.file.subspace, lp.tol);
  const UnionReport rep = union_families(lp.space, m, lp.family,
                                         VectorFamily{p2.vectors}, lp.tol);

  CanonicalWriter w;
  begin_report(w, "merge", lp.digest, digest2, lp.tol);
  w.key("union_report");
  emit_jframe_report(w, lp.space, rep.union_report);
  w.key("parts");
  w.begin_object();
  w.key("f");
  w.begin_object();
  w.key("is_j_frame_of_subspace");
  w.value(rep.f_sub_report.is_j_frame);
  w.key("plus");
  emit_plus_bounds(w, rep.f_bounds.plus);
  w.key("minus");
  emit_minus_bounds(w, rep.f_bounds.minus);
  w.end_object();
  w.key("g");
  w.begin_object();
  w.key("is_j_frame_of_subspace");
  w.value(rep.g_sub_report.is_j_frame);
  w.key("plus");
  emit_plus_bounds(w, rep.g_bounds.plus);
  w.key("minus");
  emit_minus_bounds(w, rep.g_bounds.minus);
  w.end_object();
  w.end_object();
  w.key("common_bounds");
  w.begin_object();
  w.key("plus");
  emit_plus_bounds(w, rep.common.plus);
  w.key("minus");
  emit_minus_bounds(w, rep.common.minus);
  w.end_object();
  w.key("enclosure_verified");
  w.value(rep.enclosure_verified);
  w.end_object();
  emit_output(opts.output, w.str() + "\n");
  return rep.union_report.is_j_frame && rep.enclosure_verified ? 0 : 1;
}

int run_sequence(const CommonOpts& opts) {
  LoadedProblem lp = load(opts, opts.input);
  const SequenceReport rep = frame_sequence_check(lp.space, lp.family, lp.tol);

  CanonicalWriter w;
  begin_report(w, "sequence", lp.digest, "", lp.tol);
  w.key("report");
  w.begin_object();
  w.key("is_frame_sequence");
  w.value(rep.is_frame_sequence);
  w.key("plus");
  emit_subspace_summary(w, rep.plus_span);
  w.key("minus");
  emit_subspace_summary(w, rep.minus_span);
  w.key("neutral_offenders");
  emit_indices_1based(w, rep.neutral_offenders);
  w.end_object();

  bool split_ok = true;
  w.key("split_reports");
  if (lp.file.split) {
    const SplitFrameReport sub =
        subsequence_frame_test(lp.space, lp.family, *lp.file.split, lp.tol);
    const IntersectionReport inter =
        intersection_test(lp.space, lp.family, *lp.file.split, lp.tol);
    split_ok = sub.equivalence_holds;
    w.begin_object();
    w.key("subfamily");
    w.begin_object();
    w.key("spans_equal_plus");
    w.value(sub.spans_equal_plus);
    w.key("spans_equal_minus");
    w.value(sub.spans_equal_minus);
    w.key("spans_equal");
    w.value(sub.spans_equal);
    w.key("n_part_is_j_frame");
    w.value(sub.n_part_report.is_j_frame);
    w.key("equivalence_holds");
    w.value(sub.equivalence_holds);
    w.end_object();
    w.key("intersection");
    w.begin_object();
    w.key("dim");
    w.value(inter.intersection_dim);
    w.key("regular");
    w.value(inter.intersection_regular);
    w.key("m_part_pass");
    w.value(inter.m_part.is_frame_sequence);
    w.key("n_part_pass");
    w.value(inter.n_part.is_frame_sequence);
    w.key("both_parts_pass");
    w.value(inter.both_parts_pass);
    w.end_object();
    w.end_object();
  } else {
    w.null_value();
  }
  w.end_object();
  emit_output(opts.output, w.str() + "\n");
  return rep.is_frame_sequence && split_ok ? 0 : 1;
}

int run_exact(const CommonOpts& opts) {
  LoadedProblem lp = load(opts, opts.input);
  const ExactnessReport rep =
      exactness(lp.space, lp.family, opts.depth, lp.tol);
  CanonicalWriter w;
  begin_report(w, "exact", lp.digest, "", lp.tol);
  w.key("depth");
  w.value(opts.depth);
  w.key("report");
  w.begin_object();
  w.key("is_exact");
  w.value(rep.is_exact);
  w.key("removable");
  emit_indices_1based(w, rep.removable);
  w.key("near_exact");
  w.value(rep.near_exact);
  w.key("proper");
  w.value(rep.proper);
  w.key("search_depth_hit");
  w.value(rep.search_depth_hit);
  w.end_object();
  w.end_object();
  emit_output(opts.output, w.str() + "\n");
  return rep.is_exact ? 0 : 1;
}

// ---------------------------------------------------------------------------
// fuzz: seeded property suite over random instances.

struct FuzzOpts {
  int trials = 200;
  int dim = 4;
  int n_plus = 2, n_minus = 2;
  std::uint64_t seed = 1;
  int samples = 4000;
  std::string output;
  double tol = kDefaultTol;
};

struct Violation {
  std::string check;
  int trial;
  std::uint64_t seed;
  std::string detail;
};

class FuzzSuite {
 public:
  explicit FuzzSuite(const FuzzOpts& opts) : opts_(opts) {}

  void expect(const std::string& check, int trial, std::uint64_t seed,
              bool ok, const std::string& detail) {
    ++ran_[check];
    if (!ok) violations_.push_back({check, trial, seed, detail});
  }

  void run_trial(int t) {
    Rng rng = Rng(opts_.seed).fork(static_cast<std::uint64_t>(t));
    GenConfig cfg;
    cfg.dim = opts_.dim;
    cfg.n_plus = opts_.n_plus;
    cfg.n_minus = opts_.n_minus;
    cfg.seed = rng.next_u64();
    const KreinSpace space = random_krein(cfg);
    const VectorFamily family =
        random_jframe(space, opts_.dim + 2, rng.next_u64());
    const std::uint64_t tseed = cfg.seed;

    check_projections(space, family, t, tseed, rng);
    check_union(space, t, tseed, rng);
    check_subfamily(space, t, tseed, rng);
    check_intersection(space, family, t, tseed, rng);
    check_products(space, t, tseed, rng);
    check_sampling(space, family, t, tseed, rng);
  }

  void check_projections(const KreinSpace& space, const VectorFamily& family,
                         int t, std::uint64_t seed, Rng& rng) {
    const int sign = rng.uniform() < 0.5 ? +1 : -1;
    const int kmax = sign > 0 ? space.n_plus : space.n_minus;
    if (kmax == 0) return;
    const Subspace m =
        random_definite_subspace(space, kmax, sign, rng.next_u64());
    const ProjectedFamilyReport onto = project_family(space, m, family);
    const Subspace mc = j_complement(space, m);
    const ProjectedFamilyReport off = project_family(space, mc, family);
    expect("project_definite", t, seed,
           onto.sub_report.is_j_frame && off.sub_report.is_j_frame,
           "projection onto a maximal definite subspace or its complement "
           "lost the frame property");

    // Direct side only, for a non-maximal definite subspace.
    if (kmax > 1) {
      const int k = 1 + static_cast<int>(rng.below(
                            static_cast<std::uint64_t>(kmax - 1)));
      const Subspace small =
          random_definite_subspace(space, k, sign, rng.next_u64());
      expect("project_definite", t, seed,
             project_family(space, small, family).sub_report.is_j_frame,
             "projection onto a definite subspace lost the frame property");
    }

    const UnionReport merged =
        union_families(space, m, onto.projected, off.projected, 1e-7);
    expect("project_then_union", t, seed,
           merged.union_report.is_j_frame && merged.enclosure_verified,
           "splitting and merging did not recover a frame with enclosed "
           "bounds");
  }

  void check_union(const KreinSpace& space, int t, std::uint64_t seed,
                   Rng& rng) {
    const int k =
        1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(space.dim - 1)));
    Subspace m;
    try {
      m = random_subspace(space, k, rng.next_u64());
    } catch (const KreinError&) {
      return;  // no comfortably regular draw at this size
    }
    const Subspace mc = j_complement(space, m);
    const KreinSpace sub_m = make_krein_space(m.restricted_gram, opts_.tol);
    const KreinSpace sub_c = make_krein_space(mc.restricted_gram, opts_.tol);
    const VectorFamily f_sub =
        random_jframe(sub_m, sub_m.dim + 1, rng.next_u64());
    const VectorFamily g_sub =
        random_jframe(sub_c, sub_c.dim + 1, rng.next_u64());
    const VectorFamily f{m.basis * f_sub.synthesis};
    const VectorFamily g{mc.basis * g_sub.synthesis};
    const UnionReport rep = union_families(space, m, f, g, 1e-7);
    expect("union_split", t, seed,
           rep.union_report.is_j_frame && rep.parts_are_frames &&
               rep.enclosure_verified,
           "union of frames across a regular splitting failed");
  }

  void check_subfamily(const KreinSpace& space, int t, std::uint64_t seed,
                       Rng& rng) {
    const int base = space.n_plus + space.n_minus;
    const VectorFamily m_block = random_jframe(space, base + 1, rng.next_u64());
    const JFrameReport m_rep = jframe_check(space, m_block);
    if (!m_rep.is_j_frame) return;

    const bool spanning_branch = rng.uniform() < 0.5;
    Matrix extras;
    if (spanning_branch) {
      const VectorFamily n_sub = random_jframe(space, base, rng.next_u64());
      // Same maximal spans as the m-block only if built inside them.
      Matrix cols(space.dim, base);
      Matrix plus_part = in_span_vectors(m_rep.classification.m_plus,
                                         space.n_plus, rng, space.field);
      Matrix minus_part = in_span_vectors(m_rep.classification.m_minus,
                                          space.n_minus, rng, space.field);
      cols << plus_part, minus_part;
      extras = cols;
      // Resample once if the in-span draws happen to be rank-deficient.
      if (pivoted_column_basis(extras).basis.cols() < base) {
        Matrix p2 = in_span_vectors(m_rep.classification.m_plus,
                                    space.n_plus, rng, space.field);
        Matrix m2 = in_span_vectors(m_rep.classification.m_minus,
                                    space.n_minus, rng, space.field);
        extras << p2, m2;
      }
    } else {
      // Deficient block: strictly fewer vectors than either span needs.
      const int np = std::max(0, space.n_plus - 1);
      const int nm = std::max(0, space.n_minus - 1);
      extras = Matrix(space.dim, np + nm);
      if (np > 0)
        extras.leftCols(np) = in_span_vectors(m_rep.classification.m_plus,
                                              np, rng, space.field);
      if (nm > 0)
        extras.rightCols(nm) = in_span_vectors(m_rep.classification.m_minus,
                                               nm, rng, space.field);
    }
    if (extras.cols() == 0) return;

    Matrix all(space.dim, m_block.count() + extras.cols());
    all << m_block.synthesis, extras;
    IndexSplit split;
    for (int i = 0; i < m_block.count(); ++i) split.m_indices.push_back(i);
    for (int i = 0; i < extras.cols(); ++i)
      split.n_indices.push_back(m_block.count() + i);
    const SplitFrameReport rep =
        subsequence_frame_test(space, VectorFamily{all}, split, opts_.tol);
    expect("subfamily_span_equivalence", t, seed, rep.equivalence_holds,
           "span equality and the direct frame verdict disagreed");
  }

  void check_intersection(const KreinSpace& space, const VectorFamily& family,
                          int t, std::uint64_t seed, Rng& rng) {
    IndexSplit split;
    for (int i = 0; i < family.count(); ++i)
      (rng.uniform() < 0.5 ? split.m_indices : split.n_indices).push_back(i);
    const IntersectionReport rep =
        intersection_test(space, family, split, opts_.tol);
    expect("split_intersection", t, seed, rep.both_parts_pass,
           "a split block of a frame failed the frame-sequence check");
  }

  void check_products(const KreinSpace& space, int t, std::uint64_t seed,
                      Rng& rng) {
    const int k =
        1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(space.dim - 1)));
    Subspace m;
    try {
      m = random_subspace(space, k, rng.next_u64());
    } catch (const KreinError&) {
      return;
    }
    const Matrix p = j_projection(space, m).matrix;
    const Matrix q = q_projection(space, m).matrix;
    const Subspace jm =
        make_subspace(space, Matrix(space.canonical_j * m.basis));
    const Matrix qjm = q_projection(space, jm).matrix;
    const Matrix prod = qjm * q;
    const double scale = std::max(1.0, prod.norm());
    const bool ok = (p * q - q).norm() <= 1e-7 * scale &&
                    (q * p - p).norm() <= 1e-7 * std::max(1.0, p.norm()) &&
                    (j_adjoint(space, prod) - prod).norm() <= 1e-7 * scale;
    expect("projection_products", t, seed, ok,
           "projection product identities failed on a regular subspace");

    // On a symmetry-invariant subspace the metric and oblique projections
    // coincide, and the product collapses to the J-projection.
    const int kp = 1 + static_cast<int>(rng.below(
                           static_cast<std::uint64_t>(space.n_plus)));
    const int km = static_cast<int>(rng.below(
        static_cast<std::uint64_t>(space.n_minus + 1)));
    if (kp + km == 0 || kp > space.n_plus || km > space.n_minus) return;
    const Subspace inv =
        random_invariant_subspace(space, kp, km, rng.next_u64());
    const Matrix pi = j_projection(space, inv).matrix;
    const Matrix qi = q_projection(space, inv).matrix;
    const Subspace jinv =
        make_subspace(space, Matrix(space.canonical_j * inv.basis));
    const Matrix qji = q_projection(space, jinv).matrix;
    expect("projection_products", t, seed,
           (qji * qi - pi).norm() <= 1e-7 * std::max(1.0, pi.norm()),
           "the projection product missed the J-projection on an invariant "
           "subspace");
  }

  void check_sampling(const KreinSpace& space, const VectorFamily& family,
                      int t, std::uint64_t seed, Rng& rng) {
    const OptimalBounds ob = optimal_bounds(space, family);
    const SampledBounds sb =
        sampled_bounds(space, family, opts_.samples, rng.next_u64());
    bool ok = true;
    if (ob.plus && sb.plus)
      ok = ok && sb.plus->a1 >= ob.plus->a1 - 1e-9 * std::abs(ob.plus->a1) &&
           sb.plus->b1 <= ob.plus->b1 + 1e-9 * std::abs(ob.plus->b1);
    if (ob.minus && sb.minus)
      ok = ok && sb.minus->a2 <= ob.minus->a2 + 1e-9 * std::abs(ob.minus->a2) &&
           sb.minus->b2 >= ob.minus->b2 - 1e-9 * std::abs(ob.minus->b2);
    expect("bounds_sampling", t, seed, ok,
           "sampled ratios escaped the optimal interval");
  }

  int report(const FuzzOpts& opts, const std::string& output) {
    CanonicalWriter w;
    w.begin_object();
    w.key("tool");
    w.begin_object();
    w.key("name");
    w.value(kToolName);
    w.key("version");
    w.value(kToolVersion);
    w.end_object();
    w.key("command");
    w.value("fuzz");
    w.key("config");
    w.begin_object();
    w.key("trials");
    w.value(opts.trials);
    w.key("dim");
    w.value(opts.dim);
    w.key("signature");
    w.begin_array();
    w.value(opts.n_plus);
    w.value(opts.n_minus);
    w.end_array();
    w.key("seed");
    w.value(static_cast<long long>(opts.seed));
    w.key("samples");
    w.value(opts.samples);
    w.key("tolerance");
    w.value(opts.tol);
    w.end_object();
    w.key("checks");
    w.begin_object();
    for (const auto& [name, count] : ran_) {
      w.key(name);
      w.begin_object();
      w.key("ran");
      w.value(count);
      int v = 0;
      for (const auto& viol : violations_)
        if (viol.check == name) ++v;
      w.key("violations");
      w.value(v);
      w.end_object();
    }
    w.end_object();
    w.key("violations");
    w.begin_array();
    for (const auto& v : violations_) {
      w.begin_object();
      w.key("check");
      w.value(v.check);
      w.key("trial");
      w.value(v.trial);
      w.key("seed");
      w.value(static_cast<long long>(v.seed));
      w.key("detail");
      w.value(v.detail);
      w.end_object();
    }
    w.end_array();
    w.key("total_violations");
    w.value(static_cast<long long>(violations_.size()));
    w.end_object();
    emit_output(output, w.str() + "\n");
    std::cerr << "fuzz: " << violations_.size() << " violation(s) across "
              << ran_.size() << " checks\n";
    return violations_.empty() ? 0 : 1;
  }

 private:
  FuzzOpts opts_;
  std::map<std::string, int> ran_;
  std::vector<Violation> violations_;
};

int run_fuzz(const FuzzOpts& opts) {
  FuzzSuite suite(opts);
  for (int t = 0; t < opts.trials; ++t) suite.run_trial(t);
  return suite.report(opts, opts.output);
}

struct FixtureOpts {
  std::uint64_t seed = 1;
  int budget = 64;
  std::string output;
};

int run_fixture(const FixtureOpts& opts) {
  const ProjectionCounterexample fx =
      projection_counterexample(opts.seed, opts.budget);
  const CounterexampleVerdict v = verify_projection_counterexample(fx);
  emit_output(opts.output, fixture_to_json(fx));
  std::cerr << "fixture: bounds match = " << (v.original_bounds_match ? 1 : 0)
            << ", projected relative difference = " << v.projected_rel_diff
            << "\n";
  return v.ok ? 0 : 3;
}

int exit_code_for(const KreinError& e) {
  switch (e.code()) {
    case Errc::not_regular:
    case Errc::vector_outside_subspace:
    case Errc::hypothesis_failed:
    case Errc::not_a_j_frame:
    case Errc::not_definite:
    case Errc::empty_side:
      return 1;
    case Errc::retries_exhausted:
    case Errc::search_budget_exhausted:
      return 3;
    default:
      return 2;
  }
}

void emit_error(const std::string& output, const std::string& command,
                const KreinError& e) {
  CanonicalWriter w;
  w.begin_object();
  w.key("tool");
  w.begin_object();
  w.key("name");
  w.value(kToolName);
  w.key("version");
  w.value(kToolVersion);
  w.end_object();
  w.key("command");
  w.value(command);
  w.key("error");
  w.begin_object();
  w.key("code");
  w.value(errc_name(e.code()));
  w.key("message");
  w.value(e.what());
  w.end_object();
  w.end_object();
  emit_output(output, w.str() + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analyses for frames in finite-dimensional Krein spaces"};
  app.require_subcommand(1);

  CommonOpts opts;
  FuzzOpts fuzz;
  FixtureOpts fixture;
  std::string sig = "2,2";

  const auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input)
      cmd->add_option("--input", opts.input, "problem file (JSON)")
          ->required();
    cmd->add_option("--output", opts.output, "report path (default stdout)");
    cmd->add_option("--tol", opts.tol, "tolerance override");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "frame verdict and bounds");
  add_common(analyze, true);
  CLI::App* bounds =
      app.add_subcommand("bounds", "optimal and metric frame bounds");
  add_common(bounds, true);
  CLI::App* project =
      app.add_subcommand("project", "project through a subspace and its complement");
  add_common(project, true);
  CLI::App* merge = app.add_subcommand("merge", "union across a splitting");
  add_common(merge, true);
  merge->add_option("--input2", opts.input2, "second problem file (JSON)")
      ->required();
  CLI::App* sequence =
      app.add_subcommand("sequence", "frame-sequence and split reports");
  add_common(sequence, true);
  CLI::App* exact = app.add_subcommand("exact", "exactness analysis");
  add_common(exact, true);
  exact->add_option("--depth", opts.depth, "removal search depth");

  CLI::App* fuzz_cmd =
      app.add_subcommand("fuzz", "seeded property suite over random instances");
  fuzz_cmd->add_option("--trials", fuzz.trials, "number of trials");
  fuzz_cmd->add_option("--dim", fuzz.dim, "space dimension");
  fuzz_cmd->add_option("--sig", sig, "signature as n+,n-");
  fuzz_cmd->add_option("--seed", fuzz.seed, "base seed");
  fuzz_cmd->add_option("--samples", fuzz.samples, "Monte-Carlo samples");
  fuzz_cmd->add_option("--output", fuzz.output, "report path (default stdout)");
  fuzz_cmd->add_option("--tol", fuzz.tol, "tolerance");

  CLI::App* fixture_cmd = app.add_subcommand(
      "fixture", "regenerate the frozen projection-bounds counterexample");
  fixture_cmd->add_option("--seed", fixture.seed, "search seed");
  fixture_cmd->add_option("--budget", fixture.budget, "search attempts");
  fixture_cmd->add_option("--output", fixture.output,
                          "fixture path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (analyze->parsed()) return run_analyze(opts);
    if (bounds->parsed()) return run_bounds(opts);
    if (project->parsed()) return run_project(opts);
    if (merge->parsed()) return run_merge(opts);
    if (sequence->parsed()) return run_sequence(opts);
    if (exact->parsed()) return run_exact(opts);
    if (fuzz_cmd->parsed()) {
      const auto comma = sig.find(',');
      if (comma == std::string::npos) {
        std::cerr << "kframe: --sig must be n+,n-\n";
        return 2;
      }
      fuzz.n_plus = std::stoi(sig.substr(0, comma));
      fuzz.n_minus = std::stoi(sig.substr(comma + 1));
      if (fuzz.n_plus + fuzz.n_minus != fuzz.dim) {
        std::cerr << "kframe: signature must sum to the dimension\n";
        return 2;
      }
      return run_fuzz(fuzz);
    }
    if (fixture_cmd->parsed()) return run_fixture(fixture);
  } catch (const KreinError& e) {
    const std::string out =
        fuzz_cmd->parsed() ? fuzz.output
                           : (fixture_cmd->parsed() ? fixture.output : opts.output);
    emit_error(out, command, e);
    std::cerr << "kframe: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "kframe: internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
