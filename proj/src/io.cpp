#include "qhal/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qhal {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string format_cd(cd v) { return format_double(v.real()) + " " + format_double(v.imag()); }

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

// Reads "<tag> L=<int>" and returns L.
int read_tagged_header(std::istream& is, const std::string& tag) {
  std::string line;
  if (!std::getline(is, line)) parse_fail("missing '" + tag + "' header");
  std::istringstream hs(line);
  std::string name, version, lfield;
  hs >> name >> version >> lfield;
  if (name + " " + version != tag) parse_fail("expected '" + tag + "' header, got '" + line + "'");
  if (lfield.rfind("L=", 0) != 0) parse_fail("header lacks L=<int>");
  try {
    return std::stoi(lfield.substr(2));
  } catch (const std::exception&) {
    parse_fail("bad L in header '" + line + "'");
  }
}

cd read_cd(std::istream& is) {
  double re = 0.0, im = 0.0;
  if (!(is >> re >> im)) parse_fail("expected '<re> <im>'");
  return {re, im};
}

PhasePoint read_point(std::istream& is) {
  PhasePoint z;
  if (!(is >> z.m >> z.n)) parse_fail("expected '<m> <n>'");
  return z;
}

Lattice read_lattice_record(std::istream& is) {
  std::string record, line;
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(is, line)) parse_fail("truncated LATTICE record");
    record += line + "\n";
  }
  return lattice_from_text(record);
}

void expect_end(std::istream& is) {
  std::string rest;
  if (is >> rest) parse_fail("trailing data: '" + rest + "'");
}

}  // namespace

std::string operator_to_text(const FiniteOperator& S) {
  std::ostringstream os;
  os << "QHAL-OP v1 L=" << S.L() << "\n";
  for (int t = 0; t < S.L(); ++t)
    for (int u = 0; u < S.L(); ++u) os << format_cd(S(t, u)) << "\n";
  return os.str();
}

FiniteOperator operator_from_text(const std::string& text) {
  std::istringstream is(text);
  const Dimension dim(read_tagged_header(is, "QHAL-OP v1"));
  Eigen::MatrixXcd M(dim.L(), dim.L());
  for (int t = 0; t < dim.L(); ++t)
    for (int u = 0; u < dim.L(); ++u) M(t, u) = read_cd(is);
  expect_end(is);
  return FiniteOperator(std::move(M));
}

std::string signal_to_text(const Signal& psi) {
  std::ostringstream os;
  os << "QHAL-SIG v1 L=" << psi.size() << "\n";
  for (Eigen::Index t = 0; t < psi.size(); ++t) os << format_cd(psi(t)) << "\n";
  return os.str();
}

Signal signal_from_text(const std::string& text) {
  std::istringstream is(text);
  const Dimension dim(read_tagged_header(is, "QHAL-SIG v1"));
  Signal psi(dim.L());
  for (int t = 0; t < dim.L(); ++t) psi(t) = read_cd(is);
  expect_end(is);
  return psi;
}

std::string phase_function_to_text(const PhaseFunction& f) {
  std::ostringstream os;
  os << "QHAL-PF v1 L=" << f.L() << "\n";
  for (int m = 0; m < f.L(); ++m)
    for (int n = 0; n < f.L(); ++n) os << m << " " << n << " " << format_cd(f.values()(m, n)) << "\n";
  return os.str();
}

PhaseFunction phase_function_from_text(const std::string& text) {
  std::istringstream is(text);
  const Dimension dim(read_tagged_header(is, "QHAL-PF v1"));
  PhaseFunction f(dim);
  std::vector<char> seen(static_cast<std::size_t>(dim.L()) * dim.L(), 0);
  for (int k = 0; k < dim.L() * dim.L(); ++k) {
    const PhasePoint z = read_point(is);
    if (z.m < 0 || z.m >= dim.L() || z.n < 0 || z.n >= dim.L()) parse_fail("point out of range");
    char& s = seen[static_cast<std::size_t>(flat_index(z, dim))];
    if (s) parse_fail("duplicate point");
    s = 1;
    f.at(z) = read_cd(is);
  }
  expect_end(is);
  return f;
}

std::string quotient_function_to_text(const QuotientFunction& f) {
  const Lattice& sub = f.quotient().lattice();
  std::ostringstream os;
  os << "QHAL-QF v1 L=" << sub.L() << "\n" << lattice_to_text(sub) << "\n";
  for (int r = 0; r < f.size(); ++r) {
    const PhasePoint z = f.quotient().reps()[static_cast<std::size_t>(r)];
    os << z.m << " " << z.n << " " << format_cd(f.values()(r)) << "\n";
  }
  return os.str();
}

QuotientFunction quotient_function_from_text(const std::string& text) {
  std::istringstream is(text);
  const int L = read_tagged_header(is, "QHAL-QF v1");
  const Lattice sub = read_lattice_record(is);
  if (sub.L() != L) parse_fail("lattice record L differs from header");
  QuotientFunction f{QuotientIndex(sub)};
  std::vector<char> seen(static_cast<std::size_t>(f.size()), 0);
  for (int r = 0; r < f.size(); ++r) {
    const int c = f.quotient().coset_of(read_point(is));
    if (seen[static_cast<std::size_t>(c)]) parse_fail("two entries for one coset");
    seen[static_cast<std::size_t>(c)] = 1;
    f.values()(c) = read_cd(is);
  }
  expect_end(is);
  return f;
}

std::string sequence_to_text(const LatticeSequence& c) {
  std::ostringstream os;
  os << "QHAL-SEQ v1\n" << lattice_to_text(c.lattice()) << "\n";
  for (int i = 0; i < c.size(); ++i) {
    const PhasePoint z = c.lattice().points()[static_cast<std::size_t>(i)];
    os << z.m << " " << z.n << " " << format_cd(c.values()(i)) << "\n";
  }
  return os.str();
}

LatticeSequence sequence_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string header;
  std::getline(is, header);
  if (header != "QHAL-SEQ v1") parse_fail("expected 'QHAL-SEQ v1' header");
  LatticeSequence c(read_lattice_record(is));
  std::vector<char> seen(static_cast<std::size_t>(c.size()), 0);
  for (int k = 0; k < c.size(); ++k) {
    const int i = c.lattice().index_of(read_point(is));
    if (i < 0) parse_fail("point is not on the lattice");
    if (seen[static_cast<std::size_t>(i)]) parse_fail("duplicate lattice point");
    seen[static_cast<std::size_t>(i)] = 1;
    c.values()(i) = read_cd(is);
  }
  expect_end(is);
  return c;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "write to '" + path + "' failed");
}

}  // namespace qhal
