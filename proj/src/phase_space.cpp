#include "qhal/phase_space.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace qhal {

Dimension::Dimension(int L) : L_(L) {
  if (L < 2) throw Error(ErrorCode::kInvalidArgument, "dimension L must be >= 2, got " + std::to_string(L));
}

void Dimension::require_odd() const {
  if (!odd())
    throw Error(ErrorCode::kEvenDimension,
                "L=" + std::to_string(L_) + " is even; the symmetric phase needs an inverse of 2 mod L");
}

int symplectic_form(PhasePoint z, PhasePoint zp, const Dimension& dim) {
  return dim.mod(static_cast<long long>(z.n) * zp.m - static_cast<long long>(z.m) * zp.n);
}

Lattice::Lattice(Dimension dim, std::vector<PhasePoint> generators)
    : dim_(dim), generators_(std::move(generators)) {
  if (generators_.empty()) throw Error(ErrorCode::kInvalidArgument, "lattice needs at least one generator");
  for (auto& g : generators_) g = reduce(g, dim_);

  const int L = dim_.L();
  index_.assign(static_cast<std::size_t>(L) * L, -1);
  // Breadth-first saturation from the origin.
  std::deque<PhasePoint> frontier{{0, 0}};
  index_[0] = 0;
  points_.push_back({0, 0});
  while (!frontier.empty()) {
    PhasePoint z = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators_) {
      PhasePoint w = add(z, g, dim_);
      int& slot = index_[flat_index(w, dim_)];
      if (slot < 0) {
        slot = static_cast<int>(points_.size());
        points_.push_back(w);
        frontier.push_back(w);
      }
    }
  }
  // Canonical ordering so equal subgroups enumerate identically.
  std::sort(points_.begin(), points_.end());
  for (std::size_t i = 0; i < points_.size(); ++i) index_[flat_index(points_[i], dim_)] = static_cast<int>(i);
}

double Lattice::covolume() const noexcept {
  return static_cast<double>(L()) * L() / static_cast<double>(size());
}

bool Lattice::contains(PhasePoint z) const { return index_of(z) >= 0; }

int Lattice::index_of(PhasePoint z) const { return index_[flat_index(reduce(z, dim_), dim_)]; }

std::optional<std::pair<int, int>> Lattice::separable_steps() const {
  const int L = this->L();
  int a = L, b = L;
  for (int m = 1; m < L; ++m)
    if (contains({m, 0})) { a = m; break; }
  for (int n = 1; n < L; ++n)
    if (contains({0, n})) { b = n; break; }
  // a and b divide L automatically (smallest positive element of a cyclic subgroup).
  if (static_cast<long long>(L / a) * (L / b) != size()) return std::nullopt;
  return std::make_pair(a, b);
}

bool Lattice::same_points(const Lattice& other) const {
  return dim_ == other.dim_ && points_ == other.points_;
}

Lattice make_separable_lattice(int a, int b, const Dimension& dim) {
  const int L = dim.L();
  if (a <= 0 || b <= 0 || L % a != 0 || L % b != 0)
    throw Error(ErrorCode::kNonDivisor, "separable lattice steps (" + std::to_string(a) + "," +
                                            std::to_string(b) + ") must divide L=" + std::to_string(L));
  return Lattice(dim, {{a, 0}, {0, b}});
}

Lattice make_general_lattice(const std::vector<PhasePoint>& gens, const Dimension& dim) {
  return Lattice(dim, gens);
}

Lattice make_full_lattice(const Dimension& dim) { return make_separable_lattice(1, 1, dim); }

Lattice adjoint_lattice(const Lattice& lattice) {
  const Dimension& dim = lattice.dim();
  const int L = dim.L();
  // Annihilating the generators annihilates the whole subgroup.
  std::vector<PhasePoint> members;
  for (int m = 0; m < L; ++m)
    for (int n = 0; n < L; ++n) {
      PhasePoint z{m, n};
      bool ok = std::all_of(lattice.generators().begin(), lattice.generators().end(),
                            [&](PhasePoint g) { return symplectic_form(z, g, dim) == 0; });
      if (ok) members.push_back(z);
    }
  // Keep the generator list short: add a member only when it leaves the current span.
  Lattice span(dim, {{0, 0}});
  std::vector<PhasePoint> gens;
  for (const auto& z : members) {
    if (span.contains(z)) continue;
    gens.push_back(z);
    span = Lattice(dim, gens);
  }
  if (auto steps = span.separable_steps()) return make_separable_lattice(steps->first, steps->second, dim);
  return span;
}

QuotientIndex::QuotientIndex(Lattice sub) : sub_(std::move(sub)) {
  const Dimension& dim = sub_.dim();
  const int L = dim.L();
  coset_.assign(static_cast<std::size_t>(L) * L, -1);
  // Lexicographic scan; for sub = alpha Z x beta Z this yields the box {0..alpha-1} x {0..beta-1}.
  for (int m = 0; m < L; ++m)
    for (int n = 0; n < L; ++n) {
      PhasePoint z{m, n};
      if (coset_[flat_index(z, dim)] >= 0) continue;
      const int id = static_cast<int>(reps_.size());
      reps_.push_back(z);
      for (const auto& p : sub_.points()) coset_[flat_index(add(z, p, dim), dim)] = id;
    }
}

int QuotientIndex::coset_of(PhasePoint z) const {
  const Dimension& dim = sub_.dim();
  return coset_[flat_index(reduce(z, dim), dim)];
}

QuotientIndex quotient_reps(const Lattice& sub) { return QuotientIndex(sub); }

std::vector<PhasePoint> fundamental_domain(const Lattice& sub, bool centered) {
  auto steps = sub.separable_steps();
  if (!steps) throw Error(ErrorCode::kNotSeparable, "fundamental domains are only built for separable lattices");
  const auto [alpha, beta] = *steps;
  const Dimension& dim = sub.dim();
  std::vector<PhasePoint> out;
  out.reserve(static_cast<std::size_t>(alpha) * beta);
  if (centered) {
    if (alpha % 2 == 0 || beta % 2 == 0)
      throw Error(ErrorCode::kParityError, "centered fundamental domain needs odd steps, got (" +
                                               std::to_string(alpha) + "," + std::to_string(beta) + ")");
    for (int m = -alpha / 2; m <= alpha / 2; ++m)
      for (int n = -beta / 2; n <= beta / 2; ++n) out.push_back(reduce({m, n}, dim));
  } else {
    for (int m = 0; m < alpha; ++m)
      for (int n = 0; n < beta; ++n) out.push_back({m, n});
  }
  return out;
}

std::string lattice_to_text(const Lattice& lattice) {
  std::ostringstream os;
  os << "LATTICE v1\nL=" << lattice.L() << "\ngens=";
  for (std::size_t i = 0; i < lattice.generators().size(); ++i) {
    const auto& g = lattice.generators()[i];
    if (i) os << ';';
    os << g.m << ',' << g.n;
  }
  return os.str();
}

namespace {

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError, "bad integer for " + what + ": '" + s + "'");
  }
}

}  // namespace

Lattice lattice_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string header, lline, gline;
  std::getline(is, header);
  std::getline(is, lline);
  std::getline(is, gline);
  if (trim(header) != "LATTICE v1") throw Error(ErrorCode::kParseError, "expected 'LATTICE v1' header");
  lline = trim(lline);
  gline = trim(gline);
  if (lline.rfind("L=", 0) != 0) throw Error(ErrorCode::kParseError, "expected 'L=<int>' line");
  if (gline.rfind("gens=", 0) != 0) throw Error(ErrorCode::kParseError, "expected 'gens=' line");
  Dimension dim(parse_int(lline.substr(2), "L"));
  std::vector<PhasePoint> gens;
  std::istringstream gs(gline.substr(5));
  std::string item;
  while (std::getline(gs, item, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    auto comma = item.find(',');
    if (comma == std::string::npos) throw Error(ErrorCode::kParseError, "generator '" + item + "' is not m,n");
    gens.push_back({parse_int(trim(item.substr(0, comma)), "m"), parse_int(trim(item.substr(comma + 1)), "n")});
  }
  if (gens.empty()) throw Error(ErrorCode::kParseError, "lattice record has no generators");
  return Lattice(dim, gens);
}

}  // namespace qhal
