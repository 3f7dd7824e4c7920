// qhal: command-line front end over the C API.
//
// Exit codes: 0 success, 1 bad configuration / parse / io, 2 mathematical
// degeneracy (not Riesz, support or division failure) or a failing suite.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qhal/qhal.h"

namespace {

using json = nlohmann::ordered_json;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(int status) {
  switch (status) {
    case QHAL_NOT_RIESZ:
    case QHAL_FULL_LATTICE:
    case QHAL_SUPPORT_VIOLATION:
    case QHAL_DIVISION_BY_ZERO:
      return 2;
    default:
      return 1;
  }
}

void check(int status) {
  if (status != QHAL_OK) {
    std::string msg = qhal_last_error();
    if (msg.empty()) msg = qhal_status_name(status);
    throw Failure{exit_code_for(status), msg};
  }
}

[[noreturn]] void config_error(const std::string& msg) { throw Failure{1, "config: " + msg}; }

struct LatticeFree {
  void operator()(qhal_lattice* p) const { qhal_lattice_free(p); }
};
struct OperatorFree {
  void operator()(qhal_operator* p) const { qhal_operator_free(p); }
};
struct SequenceFree {
  void operator()(qhal_sequence* p) const { qhal_sequence_free(p); }
};
struct RieszFree {
  void operator()(qhal_riesz* p) const { qhal_riesz_free(p); }
};
struct SuiteFree {
  void operator()(qhal_suite* p) const { qhal_suite_free(p); }
};
using LatticePtr = std::unique_ptr<qhal_lattice, LatticeFree>;
using OperatorPtr = std::unique_ptr<qhal_operator, OperatorFree>;
using SequencePtr = std::unique_ptr<qhal_sequence, SequenceFree>;
using RieszPtr = std::unique_ptr<qhal_riesz, RieszFree>;
using SuitePtr = std::unique_ptr<qhal_suite, SuiteFree>;

// Shared configuration; not every command uses every field.
struct Config {
  int L = 0;
  std::string lattice;
  std::string op;
  std::string target;
  std::string mask;
  std::string window = "gauss";
  std::string kind;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  std::string out;
  std::string json_path;
  std::optional<int> domain;
  std::vector<std::string> cases;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{1, "IoError: cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{1, "IoError: cannot write " + path};
}

std::vector<int> parse_ints(const std::string& text, char sep) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      config_error("not an integer list: '" + text + "'");
    }
  }
  return out;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

LatticePtr make_lattice(const Config& cfg) {
  if (cfg.lattice.empty()) config_error("--lattice is required");
  qhal_lattice* raw = nullptr;
  if (starts_with(cfg.lattice, "file:")) {
    check(qhal_lattice_parse(read_file(cfg.lattice.substr(5)).c_str(), &raw));
    if (qhal_lattice_L(raw) != cfg.L) {
      qhal_lattice_free(raw);
      config_error("lattice file has a different L");
    }
  } else if (starts_with(cfg.lattice, "gens=")) {
    std::vector<int> flat;
    std::stringstream ss(cfg.lattice.substr(5));
    std::string pair;
    while (std::getline(ss, pair, ';')) {
      const auto mn = parse_ints(pair, ',');
      if (mn.size() != 2) config_error("generator '" + pair + "' is not m,n");
      flat.insert(flat.end(), mn.begin(), mn.end());
    }
    if (flat.empty()) config_error("empty generator list");
    check(qhal_lattice_general(cfg.L, flat.data(), flat.size() / 2, &raw));
  } else {
    const auto ab = parse_ints(cfg.lattice, ',');
    if (ab.size() != 2) config_error("--lattice expects a,b or gens=m,n;...");
    check(qhal_lattice_separable(cfg.L, ab[0], ab[1], &raw));
  }
  return LatticePtr(raw);
}

// Interleaved complex signal of length L.
std::vector<double> make_window(const std::string& spec, int L, std::uint64_t seed) {
  std::vector<double> w(2 * static_cast<std::size_t>(L));
  if (starts_with(spec, "file:")) {
    int got = 0;
    check(qhal_signal_load(spec.substr(5).c_str(), w.data(), L, &got));
    if (got != L) config_error("window file has length " + std::to_string(got));
  } else {
    check(qhal_window(L, spec.c_str(), seed, w.data()));
  }
  return w;
}

// Each random piece of one configuration draws from its own seed slot:
// operators use slots 4*role + {0,1,2}, masks and bare windows the last two.
constexpr std::uint64_t kSlots = 16;
constexpr std::uint64_t kOpSeed = 0, kTargetSeed = 1, kMaskSeed = 12, kWindowSeed = 13;

std::uint64_t slot(const Config& cfg, std::uint64_t k) { return cfg.seed * kSlots + k; }

OperatorPtr make_operator(const std::string& spec, const Config& cfg, std::uint64_t offset) {
  if (spec.empty()) config_error("missing operator spec");
  const int L = cfg.L;
  const std::uint64_t seed = slot(cfg, 4 * offset);
  qhal_operator* raw = nullptr;
  if (spec == "identity") {
    check(qhal_operator_identity(L, &raw));
  } else if (spec == "zero") {
    check(qhal_operator_zero(L, &raw));
  } else if (spec == "gaussian-spread") {
    check(qhal_operator_gaussian_spreading(L, &raw));
  } else if (starts_with(spec, "rank1:")) {
    const std::string rest = spec.substr(6);
    const auto comma = rest.find(',');
    const std::string a = rest.substr(0, comma);
    const std::string b = comma == std::string::npos ? a : rest.substr(comma + 1);
    const auto xi = make_window(a, L, seed + 1);
    const auto phi = make_window(b, L, seed + 2);
    check(qhal_operator_rank_one(L, xi.data(), phi.data(), &raw));
  } else if (starts_with(spec, "random:") || spec == "random") {
    const int k = spec == "random" ? 0 : parse_ints(spec.substr(7), ',').at(0);
    check(qhal_operator_random(L, k, seed, &raw));
  } else if (starts_with(spec, "underspread:")) {
    check(qhal_operator_random_underspread(L, parse_ints(spec.substr(12), ',').at(0), seed, &raw));
  } else if (starts_with(spec, "tfshift:")) {
    const auto mn = parse_ints(spec.substr(8), ',');
    if (mn.size() != 2) config_error("tfshift expects m,n");
    check(qhal_operator_tf_shift(L, mn[0], mn[1], &raw));
  } else if (starts_with(spec, "file:")) {
    check(qhal_operator_load(spec.substr(5).c_str(), &raw));
    if (qhal_operator_L(raw) != L) {
      qhal_operator_free(raw);
      config_error("operator file has a different L");
    }
  } else {
    config_error("unknown operator spec '" + spec + "'");
  }
  return OperatorPtr(raw);
}

SequencePtr make_mask(const std::string& spec, const qhal_lattice* lattice, const Config& cfg) {
  qhal_sequence* raw = nullptr;
  if (spec.empty() || spec == "delta") {
    check(qhal_sequence_delta(lattice, 0, 0, &raw));
  } else if (spec == "ones") {
    check(qhal_sequence_constant(lattice, 1.0, 0.0, &raw));
  } else if (spec == "random") {
    check(qhal_sequence_random(lattice, slot(cfg, kMaskSeed), &raw));
  } else if (starts_with(spec, "file:")) {
    check(qhal_sequence_load(spec.substr(5).c_str(), &raw));
    SequencePtr owned(raw);
    qhal_lattice* own_lattice = nullptr;
    check(qhal_sequence_lattice(raw, &own_lattice));
    LatticePtr guard(own_lattice);
    if (qhal_lattice_L(own_lattice) != cfg.L || qhal_lattice_size(own_lattice) != qhal_lattice_size(lattice))
      config_error("mask file lives on a different lattice");
    for (std::size_t i = 0; i < qhal_lattice_size(lattice); ++i) {
      int m1, n1, m2, n2;
      qhal_lattice_point(lattice, i, &m1, &n1);
      qhal_lattice_point(own_lattice, i, &m2, &n2);
      if (m1 != m2 || n1 != n2) config_error("mask file lives on a different lattice");
    }
    return owned;
  } else {
    config_error("unknown mask spec '" + spec + "'");
  }
  return SequencePtr(raw);
}

json lattice_json(const qhal_lattice* lattice) {
  json j;
  j["L"] = qhal_lattice_L(lattice);
  j["size"] = qhal_lattice_size(lattice);
  int a = 0, b = 0;
  if (qhal_lattice_separable_steps(lattice, &a, &b) == QHAL_OK)
    j["steps"] = {a, b};
  else
    j["steps"] = nullptr;
  json gens = json::array();
  for (std::size_t i = 0; i < qhal_lattice_generator_count(lattice); ++i) {
    int m = 0, n = 0;
    qhal_lattice_generator(lattice, i, &m, &n);
    gens.push_back({m, n});
  }
  j["generators"] = gens;
  return j;
}

json complex_array(const std::vector<double>& interleaved) {
  json arr = json::array();
  for (std::size_t i = 0; i + 1 < interleaved.size(); i += 2) arr.push_back({interleaved[i], interleaved[i + 1]});
  return arr;
}

std::vector<double> sequence_values(const qhal_sequence* seq) {
  std::vector<double> v(2 * qhal_sequence_size(seq));
  check(qhal_sequence_values(seq, v.data()));
  return v;
}

json report_header(const std::string& command, const Config& cfg) {
  json j;
  j["qhal_report"] = 1;
  j["command"] = command;
  j["L"] = cfg.L;
  j["seed"] = cfg.seed;
  j["tolerance"] = cfg.tol;
  return j;
}

void emit(const json& report, const Config& cfg, const std::string& summary) {
  const std::string text = report.dump(2) + "\n";
  if (cfg.json_path.empty()) {
    std::cout << text;
  } else {
    write_file(cfg.json_path, text);
    std::cout << summary << "\n";
  }
}

int cmd_riesz(const Config& cfg) {
  LatticePtr lattice = make_lattice(cfg);
  OperatorPtr S = make_operator(cfg.op, cfg, kOpSeed);
  qhal_riesz* raw = nullptr;
  check(qhal_riesz_run(S.get(), lattice.get(), cfg.tol, &raw));
  RieszPtr rep(raw);

  qhal_lattice* adj_raw = nullptr;
  check(qhal_lattice_adjoint(lattice.get(), &adj_raw));
  LatticePtr adj(adj_raw);

  double A = 0, B = 0, imag = 0, mismatch = 0;
  check(qhal_riesz_bounds(rep.get(), &A, &B));
  check(qhal_riesz_residuals(rep.get(), &imag, &mismatch));
  json zeros = json::array();
  for (std::size_t i = 0; i < qhal_riesz_zero_count(rep.get()); ++i) {
    int m = 0, n = 0;
    check(qhal_riesz_zero_coset(rep.get(), i, &m, &n));
    zeros.push_back({m, n});
  }
  std::vector<double> ev(qhal_riesz_eigenvalue_count(rep.get()));
  check(qhal_riesz_eigenvalues(rep.get(), ev.data()));

  json j = report_header("riesz", cfg);
  j["operator"] = cfg.op;
  j["lattice"] = lattice_json(lattice.get());
  j["adjoint"] = lattice_json(adj.get());
  j["A"] = A;
  j["B"] = B;
  j["riesz"] = zeros.empty();
  j["zero_cosets"] = zeros;
  j["gram_eigenvalues"] = ev;
  j["residuals"] = {{"max_imag_residue", imag}, {"spectral_mismatch", mismatch}};
  std::ostringstream summary;
  summary << "A=" << A << " B=" << B << " zero_cosets=" << zeros.size();
  emit(j, cfg, summary.str());
  return zeros.empty() ? 0 : 2;
}

int cmd_approx(const Config& cfg) {
  LatticePtr lattice = make_lattice(cfg);
  OperatorPtr S = make_operator(cfg.op, cfg, kOpSeed);
  OperatorPtr T = make_operator(cfg.target, cfg, kTargetSeed);
  qhal_sequence* mask_raw = nullptr;
  qhal_operator* approx_raw = nullptr;
  double residual = 0, orth = 0, formula = 0;
  check(qhal_best_approximation(T.get(), S.get(), lattice.get(), cfg.tol, &mask_raw, &approx_raw, &residual, &orth,
                                &formula));
  SequencePtr mask(mask_raw);
  OperatorPtr approx(approx_raw);
  if (!cfg.out.empty()) check(qhal_sequence_save(mask.get(), cfg.out.c_str()));

  json j = report_header("approx", cfg);
  j["operator"] = cfg.op;
  j["target"] = cfg.target;
  j["lattice"] = lattice_json(lattice.get());
  j["residual_hs"] = residual;
  j["orthogonality_defect"] = orth;
  j["formula_deviation"] = formula;
  j["mask"] = complex_array(sequence_values(mask.get()));
  std::ostringstream summary;
  summary << "residual_hs=" << residual << " orthogonality_defect=" << orth;
  emit(j, cfg, summary.str());
  return 0;
}

int cmd_recover(const Config& cfg) {
  LatticePtr lattice = make_lattice(cfg);
  OperatorPtr S = make_operator(cfg.op, cfg, kOpSeed);
  OperatorPtr G;
  SequencePtr truth;
  if (!cfg.target.empty()) {
    G = make_operator(cfg.target, cfg, kTargetSeed);
  } else {
    // synthesize G from a known mask so the round trip can be reported
    truth = make_mask(cfg.mask.empty() ? "random" : cfg.mask, lattice.get(), cfg);
    qhal_operator* raw = nullptr;
    check(qhal_seq_op_conv(truth.get(), S.get(), &raw));
    G.reset(raw);
  }
  qhal_sequence* mask_raw = nullptr;
  double residual = 0;
  check(qhal_recover_mask(G.get(), S.get(), lattice.get(), cfg.tol, &mask_raw, &residual));
  SequencePtr mask(mask_raw);
  if (!cfg.out.empty()) check(qhal_sequence_save(mask.get(), cfg.out.c_str()));

  const auto values = sequence_values(mask.get());
  json j = report_header("recover", cfg);
  j["operator"] = cfg.op;
  j["lattice"] = lattice_json(lattice.get());
  j["residual_hs"] = residual;
  if (truth) {
    const auto expect = sequence_values(truth.get());
    double dev = 0.0;
    for (std::size_t i = 0; i + 1 < values.size(); i += 2)
      dev = std::max(dev, std::hypot(values[i] - expect[i], values[i + 1] - expect[i + 1]));
    j["mask_deviation"] = dev;
  }
  j["mask"] = complex_array(values);
  std::ostringstream summary;
  summary << "residual_hs=" << residual;
  emit(j, cfg, summary.str());
  return 0;
}

int cmd_divide(const Config& cfg) {
  LatticePtr lattice = make_lattice(cfg);
  OperatorPtr S = make_operator(cfg.op, cfg, kOpSeed);
  OperatorPtr T = make_operator(cfg.target.empty() ? "gaussian-spread" : cfg.target, cfg, kTargetSeed);

  // centered box: radius from --domain, else the centered fundamental domain of the adjoint
  int rm = 0, rn = 0;
  if (cfg.domain) {
    if (*cfg.domain < 0) config_error("--domain must be nonnegative");
    rm = rn = *cfg.domain;
  } else {
    qhal_lattice* adj_raw = nullptr;
    check(qhal_lattice_adjoint(lattice.get(), &adj_raw));
    LatticePtr adj(adj_raw);
    int a = 0, b = 0;
    if (qhal_lattice_separable_steps(adj.get(), &a, &b) != QHAL_OK || a % 2 == 0 || b % 2 == 0)
      config_error("the adjoint lattice has no centered box domain; pass --domain");
    rm = (a - 1) / 2;
    rn = (b - 1) / 2;
  }
  std::vector<int> domain;
  for (int m = -rm; m <= rm; ++m)
    for (int n = -rn; n <= rn; ++n) {
      domain.push_back(((m % cfg.L) + cfg.L) % cfg.L);
      domain.push_back(((n % cfg.L) + cfg.L) % cfg.L);
    }
  qhal_operator* A_raw = nullptr;
  double err = 0;
  check(qhal_underspread_divide(S.get(), T.get(), lattice.get(), domain.data(), domain.size() / 2, &A_raw, &err));
  OperatorPtr A(A_raw);
  if (!cfg.out.empty()) check(qhal_operator_save(A.get(), cfg.out.c_str()));

  json j = report_header("divide", cfg);
  j["operator"] = cfg.op;
  j["target"] = cfg.target.empty() ? "gaussian-spread" : cfg.target;
  j["lattice"] = lattice_json(lattice.get());
  j["domain_radius"] = {rm, rn};
  j["relative_error"] = err;
  std::ostringstream summary;
  summary << "relative_error=" << err;
  emit(j, cfg, summary.str());
  return 0;
}

int cmd_suite(const Config& cfg) {
  std::vector<int> flat;
  for (const auto& c : cfg.cases) {
    const auto v = parse_ints(c, ',');
    if (v.size() != 3) config_error("--case expects L,a,b");
    flat.insert(flat.end(), v.begin(), v.end());
  }
  qhal_suite* raw = nullptr;
  check(qhal_suite_run(flat.empty() ? nullptr : flat.data(), flat.size() / 3, cfg.seed, &raw));
  SuitePtr suite(raw);

  json rows = json::array();
  bool all = true;
  std::printf("%-16s %-44s %-12s %-10s %s\n", "case", "check", "deviation", "tolerance", "result");
  for (std::size_t i = 0; i < qhal_suite_row_count(suite.get()); ++i) {
    const char* label = nullptr;
    const char* name = nullptr;
    double dev = 0, tol = 0;
    int passed = 0;
    check(qhal_suite_row(suite.get(), i, &label, &name, &dev, &tol, &passed));
    all = all && passed;
    std::printf("%-16s %-44s %-12.3e %-10.1e %s\n", label, name, dev, tol, passed ? "PASS" : "FAIL");
    rows.push_back({{"case", label}, {"check", name}, {"deviation", dev}, {"tolerance", tol}, {"passed", passed != 0}});
  }
  json j;
  j["qhal_report"] = 1;
  j["command"] = "suite";
  j["seed"] = cfg.seed;
  j["passed"] = all;
  j["rows"] = rows;
  if (!cfg.json_path.empty()) write_file(cfg.json_path, j.dump(2) + "\n");
  std::printf("%s: %zu checks\n", all ? "ALL PASS" : "FAILURES", rows.size());
  return all ? 0 : 2;
}

int cmd_gen(const Config& cfg) {
  if (cfg.out.empty()) config_error("gen requires --out");
  if (cfg.kind == "window") {
    const auto w = make_window(cfg.window, cfg.L, slot(cfg, kWindowSeed));
    check(qhal_signal_save(cfg.out.c_str(), cfg.L, w.data()));
  } else if (cfg.kind == "op") {
    check(qhal_operator_save(make_operator(cfg.op, cfg, kOpSeed).get(), cfg.out.c_str()));
  } else if (cfg.kind == "mask") {
    LatticePtr lattice = make_lattice(cfg);
    check(qhal_sequence_save(make_mask(cfg.mask, lattice.get(), cfg).get(), cfg.out.c_str()));
  } else if (cfg.kind == "gabor") {
    LatticePtr lattice = make_lattice(cfg);
    SequencePtr mask = make_mask(cfg.mask, lattice.get(), cfg);
    const auto w = make_window(cfg.window, cfg.L, slot(cfg, kWindowSeed));
    qhal_operator* raw = nullptr;
    check(qhal_gabor_multiplier(mask.get(), w.data(), w.data(), &raw));
    OperatorPtr G(raw);
    check(qhal_operator_save(G.get(), cfg.out.c_str()));
  } else if (cfg.kind == "lattice") {
    LatticePtr lattice = make_lattice(cfg);
    char* text = nullptr;
    check(qhal_lattice_to_text(lattice.get(), &text));
    std::unique_ptr<char, void (*)(char*)> guard(text, qhal_string_free);
    write_file(cfg.out, text);
  } else {
    config_error("--kind must be window, op, mask, gabor or lattice");
  }
  std::cout << "wrote " << cfg.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qhal: quantum harmonic analysis on the finite phase space Z_L x Z_L"};
  app.require_subcommand(1);
  Config cfg;
  if (const char* env = std::getenv("QHAL_TOL")) {
    try {
      cfg.tol = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "error: QHAL_TOL is not a number\n";
      return 1;
    }
  }

  auto add_common = [&](CLI::App* sub, bool needs_lattice) {
    sub->add_option("--L", cfg.L, "dimension")->required()->check(CLI::Range(2, 4096));
    auto* lat = sub->add_option("--lattice", cfg.lattice, "a,b | gens=m,n;m,n | file:path");
    if (needs_lattice) lat->required();
    sub->add_option("--seed", cfg.seed, "seed for random inputs");
    sub->add_option("--tol", cfg.tol, "relative zero tolerance (env QHAL_TOL)");
    sub->add_option("--json", cfg.json_path, "write the JSON report here instead of stdout");
  };

  auto* riesz = app.add_subcommand("riesz", "Riesz bounds and Gram spectrum of lattice translates");
  add_common(riesz, true);
  riesz->add_option("--op", cfg.op, "generator operator spec")->required();

  auto* approx = app.add_subcommand("approx", "best HS approximation of a target by mask * S");
  add_common(approx, true);
  approx->add_option("--op", cfg.op, "generator operator spec")->required();
  approx->add_option("--target", cfg.target, "operator to approximate")->required();
  approx->add_option("--out", cfg.out, "write the mask (QHAL-SEQ v1)");

  auto* recover = app.add_subcommand("recover", "recover a mask from mask * S");
  add_common(recover, true);
  recover->add_option("--op", cfg.op, "generator operator spec")->required();
  recover->add_option("--target", cfg.target, "observed operator; omit to synthesize from --mask");
  recover->add_option("--mask", cfg.mask, "delta | ones | random | file:path");
  recover->add_option("--out", cfg.out, "write the recovered mask");

  auto* divide = app.add_subcommand("divide", "underspread division: S = (S * T) * A");
  add_common(divide, true);
  divide->add_option("--op", cfg.op, "underspread operator S")->required();
  divide->add_option("--target", cfg.target, "admissible T (default gaussian-spread)");
  divide->add_option("--domain", cfg.domain, "centered box radius");
  divide->add_option("--out", cfg.out, "write A (QHAL-OP v1)");

  auto* suite = app.add_subcommand("suite", "run the identity suite");
  suite->add_option("--case", cfg.cases, "L,a,b (repeatable; default 9,3,3 15,3,5 15,5,5)");
  suite->add_option("--seed", cfg.seed, "seed");
  suite->add_option("--json", cfg.json_path, "write the JSON report here");

  auto* gen = app.add_subcommand("gen", "write windows, operators, masks, multipliers or lattices");
  add_common(gen, false);
  gen->add_option("--kind", cfg.kind, "window | op | mask | gabor | lattice")->required();
  gen->add_option("--op", cfg.op, "operator spec");
  gen->add_option("--mask", cfg.mask, "mask spec");
  gen->add_option("--window", cfg.window, "gauss | delta | ones | box<k> | random | file:path");
  gen->add_option("--out", cfg.out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*riesz) return cmd_riesz(cfg);
    if (*approx) return cmd_approx(cfg);
    if (*recover) return cmd_recover(cfg);
    if (*divide) return cmd_divide(cfg);
    if (*suite) return cmd_suite(cfg);
    if (*gen) return cmd_gen(cfg);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
