#include "arcwave/operators.hpp"

#include <stdexcept>
#include <utility>

namespace arcwave {

BlockMatrix::BlockMatrix(Eigen::MatrixXcd m) : n_(m.rows() / 2), m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() % 2 != 0)
    throw std::invalid_argument("BlockMatrix: matrix must be square with even dimension");
}

Mat2C BlockMatrix::block(std::size_t i, std::size_t j) const {
  Mat2C b;
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) b(a, c) = m_(a * n_ + i, c * n_ + j);
  return b;
}

void BlockMatrix::set_block(std::size_t i, std::size_t j, const Mat2C& b) {
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c) m_(a * n_ + i, c * n_ + j) = b(a, c);
}

Eigen::VectorXcd pack(const std::vector<Vec2C>& f) {
  const std::size_t n = f.size();
  Eigen::VectorXcd v(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    v(j) = f[j](0);
    v(n + j) = f[j](1);
  }
  return v;
}

std::vector<Vec2C> unpack(const Eigen::VectorXcd& v) {
  const std::size_t n = v.size() / 2;
  std::vector<Vec2C> f(n);
  for (std::size_t j = 0; j < n; ++j) f[j] = Vec2C(v(j), v(n + j));
  return f;
}

std::string_view operator_kind_name(OperatorKind k) {
  switch (k) {
    case OperatorKind::Sw: return "Sw";
    case OperatorKind::Nw: return "Nw";
    case OperatorKind::Ntw: return "Ntw";
    case OperatorKind::NwSw: return "NwSw";
    case OperatorKind::NtwSw: return "NtwSw";
    case OperatorKind::S_closed: return "S";
    case OperatorKind::N_closed: return "N";
    case OperatorKind::Ntilde_closed: return "Ntilde";
    case OperatorKind::Kstar_closed: return "Kstar";
    case OperatorKind::NS_closed: return "NS";
    case OperatorKind::NtS_closed: return "NtildeS";
    case OperatorKind::identity: return "identity";
    case OperatorKind::custom: return "custom";
  }
  return "unknown";
}

DiscreteOperator::DiscreteOperator(OperatorKind kind, Eigen::MatrixXcd m)
    : kind_(kind), dim_(m.rows()) {
  if (m.rows() != m.cols()) throw std::invalid_argument("DiscreteOperator: matrix must be square");
  matrix_ = std::make_shared<const Eigen::MatrixXcd>(std::move(m));
}

DiscreteOperator::DiscreteOperator(OperatorKind kind, std::shared_ptr<const Eigen::MatrixXcd> m)
    : kind_(kind), dim_(m ? m->rows() : 0), matrix_(std::move(m)) {
  if (!matrix_ || matrix_->rows() != matrix_->cols())
    throw std::invalid_argument("DiscreteOperator: matrix must be square");
}

DiscreteOperator::DiscreteOperator(OperatorKind kind, const DiscreteOperator& left, const DiscreteOperator& right)
    : kind_(kind), dim_(left.dim()) {
  if (left.dim() != right.dim())
    throw std::invalid_argument("compose: dimension mismatch (" + std::to_string(left.dim()) + " vs " +
                                std::to_string(right.dim()) + ")");
  left_ = std::make_shared<const DiscreteOperator>(left);
  right_ = std::make_shared<const DiscreteOperator>(right);
}

DiscreteOperator DiscreteOperator::identity(std::size_t dim) {
  return DiscreteOperator(OperatorKind::identity, Eigen::MatrixXcd::Identity(dim, dim));
}

Eigen::VectorXcd DiscreteOperator::apply(const Eigen::VectorXcd& x) const {
  if (static_cast<std::size_t>(x.size()) != dim_) throw std::invalid_argument("apply: dimension mismatch");
  if (matrix_) return (*matrix_) * x;
  return left_->apply(right_->apply(x));
}

Eigen::MatrixXcd DiscreteOperator::materialize() const {
  if (matrix_) return *matrix_;
  return left_->materialize() * right_->materialize();
}

const Eigen::MatrixXcd& DiscreteOperator::matrix() const {
  if (!matrix_) throw std::logic_error("matrix: operator is a lazy composition");
  return *matrix_;
}

DiscreteOperator compose(const DiscreteOperator& left, const DiscreteOperator& right, OperatorKind kind) {
  return DiscreteOperator(kind, left, right);
}

Eigen::MatrixXcd unweighted_S(const Eigen::MatrixXcd& sw, const Grid& grid) {
  const std::size_t n = grid.size();
  Eigen::VectorXd w(2 * n);
  for (std::size_t j = 0; j < n; ++j) w(j) = w(n + j) = grid.weight[j];
  return sw * w.asDiagonal();
}

}  // namespace arcwave
