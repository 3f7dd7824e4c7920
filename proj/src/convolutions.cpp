#include "qhal/convolutions.hpp"

#include "qhal/transforms.hpp"

namespace qhal {

namespace {

void require_lattice_dim(const Lattice& lattice, const FiniteOperator& S) {
  if (lattice.L() != S.L())
    throw Error(ErrorCode::kDimensionMismatch,
                "lattice L=" + std::to_string(lattice.L()) + " but operator L=" + std::to_string(S.L()));
}

// tr(A B) without forming the product.
cd trace_of_product(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
  return (A.array() * B.transpose().array()).sum();
}

}  // namespace

FiniteOperator seq_op_conv(const LatticeSequence& c, const FiniteOperator& S) {
  const Lattice& lattice = c.lattice();
  require_lattice_dim(lattice, S);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(S.L(), S.L());
  for (int i = 0; i < lattice.size(); ++i) {
    const cd w = c.values()(i);
    if (w == 0.0) continue;
    acc += w * translate(S, lattice.points()[i]).matrix();
  }
  return FiniteOperator(std::move(acc));
}

LatticeSequence op_op_conv(const FiniteOperator& S, const FiniteOperator& T, const Lattice& lattice) {
  require_same_dim(S, T);
  require_lattice_dim(lattice, S);
  const FiniteOperator T_check = parity_check(T);
  LatticeSequence out(lattice);
  for (int i = 0; i < lattice.size(); ++i)
    out.values()(i) = trace_of_product(S.matrix(), translate(T_check, lattice.points()[i]).matrix());
  return out;
}

LatticeSequence seq_seq_conv(const LatticeSequence& c, const LatticeSequence& d) {
  const Lattice& lattice = c.lattice();
  if (!lattice.same_points(d.lattice())) throw Error(ErrorCode::kLatticeMismatch, "sequences live on different lattices");
  const Dimension& dim = lattice.dim();
  LatticeSequence out(lattice);
  for (int i = 0; i < lattice.size(); ++i) {
    cd acc = 0.0;
    for (int j = 0; j < lattice.size(); ++j) {
      const int k = lattice.index_of(sub(lattice.points()[i], lattice.points()[j], dim));
      acc += c.values()(j) * d.values()(k);
    }
    out.values()(i) = acc;
  }
  return out;
}

FiniteOperator gabor_multiplier(const LatticeSequence& mask, const Signal& phi, const Signal& xi) {
  return seq_op_conv(mask, rank_one(xi, phi));
}

Signal apply_gabor_multiplier(const LatticeSequence& mask, const Signal& phi, const Signal& xi, const Signal& psi) {
  const Lattice& lattice = mask.lattice();
  if (phi.size() != lattice.L() || xi.size() != lattice.L() || psi.size() != lattice.L())
    throw Error(ErrorCode::kDimensionMismatch, "signal length differs from lattice L");
  const PhaseFunction V = stft(psi, phi);
  Signal out = Signal::Zero(lattice.L());
  for (int i = 0; i < lattice.size(); ++i) {
    const PhasePoint lambda = lattice.points()[i];
    out += mask.values()(i) * V.at(lambda) * tf_shift_apply(lambda, xi);
  }
  return out;
}

LatticeSequence lower_symbol(const FiniteOperator& S, const Signal& phi1, const Signal& phi2, const Lattice& lattice) {
  require_lattice_dim(lattice, S);
  LatticeSequence out(lattice);
  for (int i = 0; i < lattice.size(); ++i) {
    const PhasePoint lambda = lattice.points()[i];
    out.values()(i) = inner(S.apply(tf_shift_apply(lambda, phi1)), tf_shift_apply(lambda, phi2));
  }
  return out;
}

double associativity_defect(const LatticeSequence& c, const FiniteOperator& S, const FiniteOperator& T) {
  const Lattice& lattice = c.lattice();
  const LatticeSequence lhs = seq_seq_conv(c, op_op_conv(S, T, lattice));
  const LatticeSequence rhs = op_op_conv(seq_op_conv(c, S), T, lattice);
  return (lhs.values() - rhs.values()).cwiseAbs().maxCoeff();
}

double associativity_defect(const LatticeSequence& c, const LatticeSequence& d, const FiniteOperator& T) {
  const FiniteOperator lhs = seq_op_conv(seq_seq_conv(c, d), T);
  const FiniteOperator rhs = seq_op_conv(c, seq_op_conv(d, T));
  return (lhs.matrix() - rhs.matrix()).cwiseAbs().maxCoeff();
}

PhaseFunction fw_of_seq_op_conv(const LatticeSequence& c, const FiniteOperator& S) {
  require_lattice_dim(c.lattice(), S);
  S.dim().require_odd();
  return multiply(symplectic_fourier_series(c).lift(), fourier_wigner(S));
}

QuotientFunction fs_of_op_op_conv(const FiniteOperator& S, const FiniteOperator& T, const Lattice& lattice) {
  require_same_dim(S, T);
  require_lattice_dim(lattice, S);
  S.dim().require_odd();
  return periodize(multiply(fourier_wigner(S), fourier_wigner(T)), adjoint_lattice(lattice));
}

Eigen::VectorXcd vectorize(const FiniteOperator& S) {
  const int L = S.L();
  Eigen::VectorXcd v(static_cast<Eigen::Index>(L) * L);
  for (int t = 0; t < L; ++t)
    for (int u = 0; u < L; ++u) v(t * L + u) = S(t, u);
  return v;
}

SynthesisMap::SynthesisMap(Lattice lattice, FiniteOperator generator)
    : lattice_(std::move(lattice)), generator_(std::move(generator)) {
  require_lattice_dim(lattice_, generator_);
  const int L = generator_.L();
  matrix_.resize(static_cast<Eigen::Index>(L) * L, lattice_.size());
  for (int j = 0; j < lattice_.size(); ++j) matrix_.col(j) = vectorize(translate(generator_, lattice_.points()[j]));
}

FiniteOperator SynthesisMap::apply(const LatticeSequence& c) const {
  if (!c.lattice().same_points(lattice_)) throw Error(ErrorCode::kLatticeMismatch, "sequence lattice differs");
  const Eigen::VectorXcd v = matrix_ * c.values();
  const int L = generator_.L();
  Eigen::MatrixXcd M(L, L);
  for (int t = 0; t < L; ++t)
    for (int u = 0; u < L; ++u) M(t, u) = v(t * L + u);
  return FiniteOperator(std::move(M));
}

}  // namespace qhal
