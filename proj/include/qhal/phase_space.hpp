#pragma once

// The finite phase space Z_L x Z_L: points, the symplectic form, lattice
// subgroups, adjoint lattices and coset transversals.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhal/error.hpp"

namespace qhal {

/// Signal length L >= 2. Operations that need the half-phase e^{2 pi i s mn / L}
/// call require_odd().
class Dimension {
 public:
  explicit Dimension(int L);

  int L() const noexcept { return L_; }
  bool odd() const noexcept { return L_ % 2 == 1; }
  /// Throws EvenDimension when L is even.
  void require_odd() const;
  /// Inverse of 2 mod L, (L+1)/2. Only meaningful for odd L.
  int half() const noexcept { return (L_ + 1) / 2; }

  int mod(long long x) const noexcept {
    long long r = x % L_;
    return static_cast<int>(r < 0 ? r + L_ : r);
  }

  friend bool operator==(const Dimension&, const Dimension&) = default;

 private:
  int L_;
};

struct PhasePoint {
  int m = 0;  // time shift
  int n = 0;  // frequency shift

  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
  friend auto operator<=>(const PhasePoint&, const PhasePoint&) = default;
};

inline PhasePoint reduce(PhasePoint z, const Dimension& dim) {
  return {dim.mod(z.m), dim.mod(z.n)};
}
inline PhasePoint add(PhasePoint a, PhasePoint b, const Dimension& dim) {
  return {dim.mod(a.m + b.m), dim.mod(a.n + b.n)};
}
inline PhasePoint sub(PhasePoint a, PhasePoint b, const Dimension& dim) {
  return {dim.mod(a.m - b.m), dim.mod(a.n - b.n)};
}
inline PhasePoint neg(PhasePoint a, const Dimension& dim) { return {dim.mod(-a.m), dim.mod(-a.n)}; }

/// sigma(z, z') = n m' - m n' (mod L).
int symplectic_form(PhasePoint z, PhasePoint zp, const Dimension& dim);

/// Flat index m*L + n of a reduced point.
inline int flat_index(PhasePoint z, const Dimension& dim) { return z.m * dim.L() + z.n; }

/// A subgroup of Z_L x Z_L with its points enumerated.
class Lattice {
 public:
  /// Saturates the generators into the subgroup they generate.
  Lattice(Dimension dim, std::vector<PhasePoint> generators);

  const Dimension& dim() const noexcept { return dim_; }
  int L() const noexcept { return dim_.L(); }
  const std::vector<PhasePoint>& generators() const noexcept { return generators_; }
  const std::vector<PhasePoint>& points() const noexcept { return points_; }
  int size() const noexcept { return static_cast<int>(points_.size()); }
  /// L^2 / N, the finite stand-in for the lattice covolume.
  double covolume() const noexcept;

  bool contains(PhasePoint z) const;
  /// Position of z in points(), or -1.
  int index_of(PhasePoint z) const;

  /// (a, b) when the lattice equals aZ x bZ with a | L and b | L.
  std::optional<std::pair<int, int>> separable_steps() const;

  /// Same point set (generators may differ).
  bool same_points(const Lattice& other) const;

 private:
  Dimension dim_;
  std::vector<PhasePoint> generators_;
  std::vector<PhasePoint> points_;
  std::vector<int> index_;  // flat index -> position or -1
};

Lattice make_separable_lattice(int a, int b, const Dimension& dim);
Lattice make_general_lattice(const std::vector<PhasePoint>& gens, const Dimension& dim);
Lattice make_full_lattice(const Dimension& dim);

/// { z : sigma(z, lambda) = 0 mod L for every lambda in the lattice }.
Lattice adjoint_lattice(const Lattice& lattice);

/// A transversal of Z_L^2 / sub with a coset lookup table.
class QuotientIndex {
 public:
  explicit QuotientIndex(Lattice sub);

  const Lattice& lattice() const noexcept { return sub_; }
  const std::vector<PhasePoint>& reps() const noexcept { return reps_; }
  int size() const noexcept { return static_cast<int>(reps_.size()); }
  /// Index into reps() of the coset containing z.
  int coset_of(PhasePoint z) const;

 private:
  Lattice sub_;
  std::vector<PhasePoint> reps_;
  std::vector<int> coset_;  // flat index -> coset
};

QuotientIndex quotient_reps(const Lattice& sub);

/// One representative per coset of Z_L^2 / sub for separable sub = alpha Z x beta Z.
/// Centered boxes need odd alpha and beta.
std::vector<PhasePoint> fundamental_domain(const Lattice& sub, bool centered);

/// `LATTICE v1\nL=<int>\ngens=<m,n>;<m,n>;...`
std::string lattice_to_text(const Lattice& lattice);
Lattice lattice_from_text(const std::string& text);

}  // namespace qhal
