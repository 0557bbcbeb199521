#include "cylat/smoothing.hpp"

#include <stdexcept>

#include "cylat/cremona.hpp"

namespace cylat {

namespace {

// c_m = 3h + 3 phi_m*(h) + (m-2)k, also meaningful at m = 0 where the
// public build_C contract starts at 1.
LatticeVector center_class(const Int& m) {
  return Int(3) * (LatticeVector::h() + phi_pullback_closed(m)) +
         (m - 2) * canonical_class();
}

std::vector<Int> relation_vector(const SurfaceModel& model) {
  const LatticeVector minus_k = -canonical_class();
  std::vector<Int> rel;
  rel.reserve(LatticeVector::kRank + model.k_T.size());
  for (std::size_t i = 0; i < LatticeVector::kRank; ++i) rel.push_back(minus_k[i]);
  for (const Int& x : model.k_T) rel.push_back(x);
  return rel;
}

void put_s_block(IntegerMatrix& m, std::size_t col, const LatticeVector& v, bool negate) {
  for (std::size_t i = 0; i < LatticeVector::kRank; ++i)
    m.at(i, col) = negate ? Int(-v[i]) : v[i];
}

IntegerMatrix augmented_restriction(const SurfaceModel& model, long long m) {
  return restriction_matrix(model, m)
      .with_appended_column(relation_vector(model));
}

}  // namespace

SurfaceModel SurfaceModel::for_dimension(int n) {
  if (n < 2) throw std::invalid_argument("SurfaceModel: n must be >= 2");
  SurfaceModel model;
  model.n = n;
  if (n == 2) {
    model.rho_T = 10;
    model.k_T = {-3, 1, 1, 1, 1, 1, 1, 1, 1, 1};
  } else {
    model.rho_T = 2;
    model.k_T = {-1, 0};
  }
  return model;
}

PicPresentation pic_X12_presentation(const SurfaceModel& model, const Int& m) {
  if (m < 1) throw std::invalid_argument("pic_X12_presentation: m must be >= 1");
  PicPresentation p;
  p.ambient_rank = LatticeVector::kRank + static_cast<std::size_t>(model.rho_T);
  p.relation = relation_vector(model);
  p.quotient_rank = p.ambient_rank - 1;
  return p;
}

IntegerMatrix restriction_matrix(const SurfaceModel& model, long long m) {
  if (m < 0) throw std::invalid_argument("restriction_matrix: m must be >= 0");
  const std::size_t rho = static_cast<std::size_t>(model.rho_T);
  const std::size_t rows = LatticeVector::kRank + rho;
  const std::size_t mm = static_cast<std::size_t>(m);
  const std::size_t cols = m >= 1 ? mm + 2 * rho + 3 : 2 * rho + 2;
  IntegerMatrix out(rows, cols);

  const LatticeVector fiber = -canonical_class();
  const LatticeVector phi = phi_pullback_closed(make_int(m));

  std::size_t col = 0;
  // X_1 block.
  put_s_block(out, col++, LatticeVector::h(), false);
  for (std::size_t i = 0; i < rho; ++i) out.at(LatticeVector::kRank + i, col++) = 1;
  if (m >= 1) {
    for (std::size_t j = 0; j < mm; ++j) put_s_block(out, col++, fiber, false);
    put_s_block(out, col++, center_class(make_int(m)), false);
  }
  // X_2 block, negated.
  put_s_block(out, col++, phi, true);
  for (std::size_t i = 0; i < rho; ++i) out.at(LatticeVector::kRank + i, col++) = -1;
  return out;
}

long long image_rank_in_quotient(const SurfaceModel& model, long long m) {
  if (m < 0) throw std::invalid_argument("image_rank_in_quotient: m must be >= 0");
  return static_cast<long long>(rank_of(augmented_restriction(model, m))) - 1;
}

long long b2_of_X0(const SurfaceModel& model, long long m) {
  if (m < 1) throw std::invalid_argument("b2_of_X0: m must be >= 1");
  const long long cols = m + 2 * static_cast<long long>(model.rho_T) + 3;
  return cols - image_rank_in_quotient(model, m);
}

long long b2_of_X(const SurfaceModel& model, long long m) {
  return b2_of_X0(model, m) - 1;
}

std::size_t independence_rank(const Int& m) {
  if (m < 0) throw std::invalid_argument("independence_rank: m must be >= 0");
  const LatticeVector rows[3] = {LatticeVector::h(), phi_pullback_closed(m),
                                 canonical_class()};
  IntegerMatrix mat(3, LatticeVector::kRank);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < LatticeVector::kRank; ++c) mat.at(r, c) = rows[r][c];
  return rank_of(mat);
}

DSemistabilityReport d_semistability_check(const Int& m, const LatticeVector& perturbation) {
  if (m < 1) throw std::invalid_argument("d_semistability_check: m must be >= 1");
  const LatticeVector fiber = -canonical_class();
  DSemistabilityReport rep;
  rep.m = m;
  rep.lhs = Int(3) * (LatticeVector::h() + phi_pullback_closed(m)) + Int(2) * fiber;
  rep.rhs = m * fiber + center_class(m) + perturbation;
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

NonprojectivityResult nonprojectivity_kernel(const Int& m, const Int& a, const Int& c,
                                             const Int& a_prime) {
  if (m < 1) throw std::invalid_argument("nonprojectivity_kernel: m must be >= 1");
  if (independence_rank(m) != 3)
    throw std::logic_error("nonprojectivity_kernel: {h, phi_m*(h), k} degenerated");
  NonprojectivityResult res;
  res.consistent = (a_prime == 3 * c) && (a + 3 * c == 0);
  if (res.consistent && a >= 0 && a_prime >= 0) {
    if (a != 0 || a_prime != 0)
      throw std::logic_error("nonprojectivity_kernel: effectivity did not force zero");
    res.forced = std::make_pair(Int(0), Int(0));
  }
  return res;
}

}  // namespace cylat
