#include "affmon/eqsystem.hpp"

#include <set>
#include <stdexcept>

namespace affmon {

namespace {

IntMatrix empty_rows(std::size_t k) { return IntMatrix(0, static_cast<Eigen::Index>(k)); }

void append_row(IntMatrix& m, const IntVector& row) {
  const Eigen::Index r = m.rows();
  m.conservativeResize(r + 1, Eigen::NoChange);
  m.row(r) = row.transpose();
}

bool all_nonnegative(const IntMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) < 0) return false;
  return true;
}

bool row_touches(const IntMatrix& m, Eigen::Index row, const IndexSet& cols) {
  for (auto c : cols)
    if (m(row, static_cast<Eigen::Index>(c)) != 0) return true;
  return false;
}

}  // namespace

EqSystem::EqSystem(std::size_t k)
    : k_(k), congruence_rows_(empty_rows(k)), moduli_(0), lhs_(empty_rows(k)), rhs_(empty_rows(k)) {}

EqSystem::EqSystem(std::size_t k, IntMatrix congruence_rows, IntVector moduli, IntMatrix lhs, IntMatrix rhs)
    : k_(k),
      congruence_rows_(std::move(congruence_rows)),
      moduli_(std::move(moduli)),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {
  if (congruence_rows_.rows() == 0) congruence_rows_.resize(0, static_cast<Eigen::Index>(k));
  if (lhs_.rows() == 0) lhs_.resize(0, static_cast<Eigen::Index>(k));
  if (rhs_.rows() == 0) rhs_.resize(0, static_cast<Eigen::Index>(k));
  validate();
}

void EqSystem::validate() const {
  const auto k = static_cast<Eigen::Index>(k_);
  if (congruence_rows_.cols() != k || lhs_.cols() != k || rhs_.cols() != k)
    throw std::invalid_argument("EqSystem: rows must have k entries");
  if (moduli_.size() != congruence_rows_.rows())
    throw std::invalid_argument("EqSystem: one modulus per congruence row");
  if (lhs_.rows() != rhs_.rows()) throw std::invalid_argument("EqSystem: unpaired equality rows");
  for (Eigen::Index i = 0; i < moduli_.size(); ++i)
    if (moduli_(i) < 2) throw std::invalid_argument("EqSystem: modulus must be at least 2");
  if (!all_nonnegative(congruence_rows_) || !all_nonnegative(lhs_) || !all_nonnegative(rhs_))
    throw std::invalid_argument("EqSystem: coefficients must be nonnegative");
}

void EqSystem::add_congruence(const IntVector& coeffs, const Integer& modulus) {
  require_same_size(k_, static_cast<std::size_t>(coeffs.size()), "add_congruence");
  append_row(congruence_rows_, coeffs);
  moduli_.conservativeResize(moduli_.size() + 1);
  moduli_(moduli_.size() - 1) = modulus;
  validate();
}

void EqSystem::add_equality(const IntVector& lhs, const IntVector& rhs) {
  require_same_size(k_, static_cast<std::size_t>(lhs.size()), "add_equality");
  require_same_size(k_, static_cast<std::size_t>(rhs.size()), "add_equality");
  append_row(lhs_, lhs);
  append_row(rhs_, rhs);
  validate();
}

bool operator==(const EqSystem& a, const EqSystem& b) {
  return a.k_ == b.k_ && a.congruence_rows_ == b.congruence_rows_ && a.moduli_ == b.moduli_ &&
         a.lhs_ == b.lhs_ && a.rhs_ == b.rhs_;
}

std::optional<std::size_t> first_violation(const EqSystem& sys, const DimVector& x) {
  require_same_size(sys.dimension(), x.size(), "member");
  const auto& d = sys.congruence_rows();
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    if (!dot(d.row(i), x).in_multiples_of(sys.moduli()(i))) return static_cast<std::size_t>(i);
  for (Eigen::Index i = 0; i < sys.lhs().rows(); ++i)
    if (dot(sys.lhs().row(i), x) != dot(sys.rhs().row(i), x))
      return sys.congruence_count() + static_cast<std::size_t>(i);
  return std::nullopt;
}

bool member(const EqSystem& sys, const DimVector& x) { return !first_violation(sys, x).has_value(); }

EqSystem intersect(const EqSystem& a, const EqSystem& b) {
  require_same_size(a.dimension(), b.dimension(), "intersect");
  const auto k = static_cast<Eigen::Index>(a.dimension());
  IntMatrix d(a.congruence_rows().rows() + b.congruence_rows().rows(), k);
  d << a.congruence_rows(), b.congruence_rows();
  IntVector m(a.moduli().size() + b.moduli().size());
  m << a.moduli(), b.moduli();
  IntMatrix l(a.lhs().rows() + b.lhs().rows(), k);
  l << a.lhs(), b.lhs();
  IntMatrix r(a.rhs().rows() + b.rhs().rows(), k);
  r << a.rhs(), b.rhs();
  return EqSystem(a.dimension(), std::move(d), std::move(m), std::move(l), std::move(r));
}

EqSystem without_duplicate_rows(const EqSystem& sys) {
  EqSystem out(sys.dimension());
  std::set<std::vector<std::string>> seen;
  auto key = [](const char* tag, const auto& a, const auto& b, const std::string& extra) {
    std::vector<std::string> v{tag, extra};
    for (Eigen::Index j = 0; j < a.size(); ++j) v.push_back(a(j).str());
    for (Eigen::Index j = 0; j < b.size(); ++j) v.push_back(b(j).str());
    return v;
  };
  for (Eigen::Index i = 0; i < sys.congruence_rows().rows(); ++i) {
    const IntVector row = sys.congruence_rows().row(i).transpose();
    if (seen.insert(key("c", row, IntVector(0), sys.moduli()(i).str())).second)
      out.add_congruence(row, sys.moduli()(i));
  }
  for (Eigen::Index i = 0; i < sys.lhs().rows(); ++i) {
    const IntVector l = sys.lhs().row(i).transpose();
    const IntVector r = sys.rhs().row(i).transpose();
    if (seen.insert(key("e", l, r, "")).second) out.add_equality(l, r);
  }
  return out;
}

std::optional<DimVector> SlackEmbedding::operator()(const DimVector& x) const {
  const std::size_t k = x.size();
  require_same_size(static_cast<std::size_t>(congruence_rows.cols()), k, "slack embedding");
  DimVector image(k + static_cast<std::size_t>(congruence_rows.rows()));
  for (std::size_t i = 0; i < k; ++i) image[i] = x[i];
  for (Eigen::Index i = 0; i < congruence_rows.rows(); ++i) {
    const ExtNat v = dot(congruence_rows.row(i), x);
    if (!v.in_multiples_of(moduli(i))) return std::nullopt;
    image[k + static_cast<std::size_t>(i)] = v.is_infinite() ? ExtNat::infinity() : ExtNat(v.value() / moduli(i));
  }
  return image;
}

SlackEmbedding slack_embed(const EqSystem& sys) {
  const auto k = static_cast<Eigen::Index>(sys.dimension());
  const auto n = static_cast<Eigen::Index>(sys.congruence_count());
  const auto l = static_cast<Eigen::Index>(sys.equality_count());
  IntMatrix lhs = IntMatrix::Zero(n + l, k + n);
  IntMatrix rhs = IntMatrix::Zero(n + l, k + n);
  for (Eigen::Index i = 0; i < n; ++i) {
    lhs.row(i).head(k) = sys.congruence_rows().row(i);
    rhs(i, k + i) = sys.moduli()(i);
  }
  for (Eigen::Index i = 0; i < l; ++i) {
    lhs.row(n + i).head(k) = sys.lhs().row(i);
    rhs.row(n + i).head(k) = sys.rhs().row(i);
  }
  EqSystem equalities(static_cast<std::size_t>(k + n), IntMatrix(0, k + n), IntVector(0), std::move(lhs),
                      std::move(rhs));
  return SlackEmbedding{std::move(equalities), sys.congruence_rows(), sys.moduli()};
}

std::vector<IndexSet> infinite_support_patterns(const EqSystem& sys, std::size_t cap) {
  const std::size_t k = sys.dimension();
  if (k > cap || k >= 8 * sizeof(unsigned long))
    throw std::length_error("infinite_support_patterns: k = " + std::to_string(k) + " exceeds the cap of " +
                            std::to_string(cap));
  std::vector<IndexSet> out;
  for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
    IndexSet pattern = index_set_from_mask(mask, k);
    if (member(sys, pattern_vector(k, pattern))) out.push_back(std::move(pattern));
  }
  std::sort(out.begin(), out.end());
  return out;
}

EqSystem subsystem_for_support(const EqSystem& sys, const IndexSet& pattern) {
  const std::size_t k = sys.dimension();
  if (!pattern.empty() && pattern.back() >= k) throw std::invalid_argument("subsystem_for_support: index out of range");
  if (!member(sys, pattern_vector(k, pattern)))
    throw std::invalid_argument("subsystem_for_support: " + to_string(pattern) + " is not a realized pattern");
  EqSystem out(k - pattern.size());
  const auto& d = sys.congruence_rows();
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    if (row_touches(d, i, pattern)) continue;
    out.add_congruence(project_out(IntVector(d.row(i).transpose()), pattern), sys.moduli()(i));
  }
  for (Eigen::Index i = 0; i < sys.lhs().rows(); ++i) {
    if (row_touches(sys.lhs(), i, pattern) || row_touches(sys.rhs(), i, pattern)) continue;
    out.add_equality(project_out(IntVector(sys.lhs().row(i).transpose()), pattern),
                     project_out(IntVector(sys.rhs().row(i).transpose()), pattern));
  }
  return out;
}

EqSystem lift(const EqSystem& sys, const IndexSet& ignored, std::size_t k) {
  require_same_size(k - ignored.size(), sys.dimension(), "lift");
  return EqSystem(k, insert_zero_columns(sys.congruence_rows(), ignored, k), sys.moduli(),
                  insert_zero_columns(sys.lhs(), ignored, k), insert_zero_columns(sys.rhs(), ignored, k));
}

}  // namespace affmon
