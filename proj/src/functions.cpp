#include "qhal/functions.hpp"

namespace qhal {

PhaseFunction::PhaseFunction(Dimension dim, Eigen::MatrixXcd values) : dim_(dim), values_(std::move(values)) {
  if (values_.rows() != dim_.L() || values_.cols() != dim_.L())
    throw Error(ErrorCode::kDimensionMismatch, "phase function grid must be L x L");
}

LatticeSequence::LatticeSequence(Lattice lattice)
    : lattice_(std::move(lattice)), values_(Eigen::VectorXcd::Zero(lattice_.size())) {}

LatticeSequence::LatticeSequence(Lattice lattice, Eigen::VectorXcd values)
    : lattice_(std::move(lattice)), values_(std::move(values)) {
  if (values_.size() != lattice_.size())
    throw Error(ErrorCode::kDimensionMismatch, "sequence needs one value per lattice point");
}

LatticeSequence LatticeSequence::delta(const Lattice& lattice, PhasePoint at) {
  LatticeSequence c(lattice);
  const int i = lattice.index_of(at);
  if (i < 0) throw Error(ErrorCode::kInvalidArgument, "delta location is not a lattice point");
  c.values_(i) = 1.0;
  return c;
}

LatticeSequence LatticeSequence::constant(const Lattice& lattice, cd value) {
  return LatticeSequence(lattice, Eigen::VectorXcd::Constant(lattice.size(), value));
}

cd LatticeSequence::at(PhasePoint lambda) const {
  const int i = lattice_.index_of(lambda);
  if (i < 0) throw Error(ErrorCode::kInvalidArgument, "point is not on the lattice");
  return values_(i);
}

QuotientFunction::QuotientFunction(QuotientIndex quotient)
    : quotient_(std::move(quotient)), values_(Eigen::VectorXcd::Zero(quotient_.size())) {}

QuotientFunction::QuotientFunction(QuotientIndex quotient, Eigen::VectorXcd values)
    : quotient_(std::move(quotient)), values_(std::move(values)) {
  if (values_.size() != quotient_.size())
    throw Error(ErrorCode::kDimensionMismatch, "quotient function needs one value per coset");
}

PhaseFunction QuotientFunction::lift() const {
  const Dimension& dim = quotient_.lattice().dim();
  PhaseFunction f(dim);
  for (int m = 0; m < dim.L(); ++m)
    for (int n = 0; n < dim.L(); ++n) f.values()(m, n) = at({m, n});
  return f;
}

}  // namespace qhal
