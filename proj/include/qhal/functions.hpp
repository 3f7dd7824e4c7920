#pragma once

// Value containers for functions on phase space, on a lattice, and on a
// quotient of phase space.

#include <complex>

#include <Eigen/Dense>

#include "qhal/phase_space.hpp"

namespace qhal {

using cd = std::complex<double>;
using Signal = Eigen::VectorXcd;

/// A function on all of Z_L x Z_L, values(m, n).
class PhaseFunction {
 public:
  explicit PhaseFunction(Dimension dim) : dim_(dim), values_(Eigen::MatrixXcd::Zero(dim.L(), dim.L())) {}
  PhaseFunction(Dimension dim, Eigen::MatrixXcd values);

  const Dimension& dim() const noexcept { return dim_; }
  int L() const noexcept { return dim_.L(); }
  const Eigen::MatrixXcd& values() const noexcept { return values_; }
  Eigen::MatrixXcd& values() noexcept { return values_; }

  cd at(PhasePoint z) const { return values_(dim_.mod(z.m), dim_.mod(z.n)); }
  cd& at(PhasePoint z) { return values_(dim_.mod(z.m), dim_.mod(z.n)); }

 private:
  Dimension dim_;
  Eigen::MatrixXcd values_;
};

/// One value per lattice point, ordered as lattice().points().
class LatticeSequence {
 public:
  explicit LatticeSequence(Lattice lattice);
  LatticeSequence(Lattice lattice, Eigen::VectorXcd values);

  static LatticeSequence delta(const Lattice& lattice, PhasePoint at = {0, 0});
  static LatticeSequence constant(const Lattice& lattice, cd value);

  const Lattice& lattice() const noexcept { return lattice_; }
  const Eigen::VectorXcd& values() const noexcept { return values_; }
  Eigen::VectorXcd& values() noexcept { return values_; }
  int size() const noexcept { return lattice_.size(); }

  /// Throws InvalidArgument if lambda is not a lattice point.
  cd at(PhasePoint lambda) const;

 private:
  Lattice lattice_;
  Eigen::VectorXcd values_;
};

/// One value per coset of Z_L^2 / quotient().lattice(), ordered as quotient().reps().
class QuotientFunction {
 public:
  explicit QuotientFunction(QuotientIndex quotient);
  QuotientFunction(QuotientIndex quotient, Eigen::VectorXcd values);

  const QuotientIndex& quotient() const noexcept { return quotient_; }
  const Eigen::VectorXcd& values() const noexcept { return values_; }
  Eigen::VectorXcd& values() noexcept { return values_; }
  int size() const noexcept { return quotient_.size(); }

  /// Value on the coset of an arbitrary point z.
  cd at(PhasePoint z) const { return values_(quotient_.coset_of(z)); }

  /// The coset-constant function on Z_L^2.
  PhaseFunction lift() const;

 private:
  QuotientIndex quotient_;
  Eigen::VectorXcd values_;
};

}  // namespace qhal
