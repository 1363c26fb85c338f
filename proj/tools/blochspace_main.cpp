// Command-line front end: expose the basis matrices, the Bloch codec, the
// positivity check, trace-power identities, section scans, and a self-check
// suite.  All numeric output goes through the 17-digit emitters in json_io,
// so repeated runs are byte-identical.
//
// Exit codes: 0 success (and verdict Positive for `check`); 1 verdict
// NonPositive or failed self-check; 2 usage error, malformed input, or
// internal failure; 3 verdict Marginal.

#include "blochspace/bloch_codec.hpp"
#include "blochspace/cross_sections.hpp"
#include "blochspace/json_io.hpp"
#include "blochspace/polarization_basis.hpp"
#include "blochspace/positivity.hpp"
#include "blochspace/reference_operators.hpp"
#include "blochspace/validation.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace blochspace;

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

nlohmann::json parse_doc(const std::string& path) {
  return nlohmann::json::parse(read_all(path));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

// --- basis ------------------------------------------------------------------

int cmd_basis(int two_j, int L, int M, bool single, const std::string& out) {
  if (single) {
    PolOpLabel lab{two_j, L, M};
    if (!valid_label(lab))
      throw std::invalid_argument("basis: invalid label (need 0 <= L <= two_j, |M| <= L)");
    emit(matrix_to_json(polarization_operator(lab)) + "\n", out);
    return 0;
  }
  std::string s = "{\"two_j\":" + std::to_string(two_j) + ",\"operators\":[";
  bool first = true;
  for (const PolOpLabel& lab : basis_labels(two_j)) {
    if (!first) s += ",";
    first = false;
    s += "{\"L\":" + std::to_string(lab.L) + ",\"M\":" + std::to_string(lab.M) +
         ",\"matrix\":" + matrix_to_json(polarization_operator(lab)) + "}";
  }
  s += "]}\n";
  emit(s, out);
  return 0;
}

// --- compose / decompose ----------------------------------------------------

int cmd_compose(const std::string& input, const std::string& out) {
  auto state = state_from_json(parse_doc(input));
  if (!std::holds_alternative<BlochVector>(state))
    throw std::invalid_argument("compose: expected a Bloch vector document (two_j/params)");
  emit(matrix_to_json(bloch_to_density(std::get<BlochVector>(state))) + "\n", out);
  return 0;
}

int cmd_decompose(const std::string& input, bool as_operator, double tol,
                  const std::string& out) {
  auto state = state_from_json(parse_doc(input));
  if (!std::holds_alternative<ComplexMatrix>(state))
    throw std::invalid_argument("decompose: expected a matrix document (dim/entries)");
  const ComplexMatrix& m = std::get<ComplexMatrix>(state);
  if (as_operator)
    emit(coeffs_to_json(decompose_operator(m)) + "\n", out);
  else
    emit(bloch_to_json(density_to_bloch(m, tol)) + "\n", out);
  return 0;
}

// --- check ------------------------------------------------------------------

int cmd_check(const std::string& input, double tol, bool oracle,
              const std::string& out) {
  auto state = state_from_json(parse_doc(input));
  PositivityReport rep =
      std::holds_alternative<ComplexMatrix>(state)
          ? check_positivity(std::get<ComplexMatrix>(state), tol, oracle)
          : check_positivity(std::get<BlochVector>(state), tol, oracle);
  emit(report_to_json(rep) + "\n", out);
  switch (rep.verdict) {
    case Verdict::Positive: return 0;
    case Verdict::NonPositive: return 1;
    case Verdict::Marginal: return 3;
  }
  return 2;
}

// --- traces -----------------------------------------------------------------

int cmd_traces(const std::string& input, int kmax, const std::string& out) {
  auto state = state_from_json(parse_doc(input));
  BlochVector v = std::holds_alternative<BlochVector>(state)
                      ? std::get<BlochVector>(state)
                      : density_to_bloch(std::get<ComplexMatrix>(state));
  const int n = v.dim();
  if (kmax == 0) kmax = n;
  if (kmax < 1) throw std::invalid_argument("traces: kmax must be >= 1");

  std::vector<double> t = trace_powers_from_bloch(v, kmax);
  std::vector<double> traces = traces_from_trace_powers(n, t);

  std::string s = "{\"two_j\":" + std::to_string(v.two_j()) +
                  ",\"kmax\":" + std::to_string(kmax) + ",\"T\":[";
  for (size_t i = 0; i < t.size(); ++i)
    s += (i ? "," : "") + format_double(t[i]);
  s += "],\"traces\":[";
  for (size_t i = 0; i < traces.size(); ++i)
    s += (i ? "," : "") + format_double(traces[i]);
  s += "]}\n";
  emit(s, out);
  return 0;
}

// --- scan -------------------------------------------------------------------

SectionPair parse_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("scan: --pair expects \"axis,axis\" (e.g. x,y)");
  return SectionPair{axis_from_name(text.substr(0, comma)),
                     axis_from_name(text.substr(comma + 1))};
}

int cmd_scan(const std::string& pair_text, const std::string& type_text,
             int resolution, double tol, const std::string& prefix) {
  ScanResult res;
  if (!pair_text.empty() && !type_text.empty())
    throw std::invalid_argument("scan: give either --pair or --type, not both");
  if (!pair_text.empty())
    res = scan_section(parse_pair(pair_text), resolution, tol);
  else if (!type_text.empty())
    res = scan_section(section_from_name(type_text), resolution, tol);
  else
    throw std::invalid_argument("scan: one of --pair or --type is required");

  emit(scan_to_csv(res), prefix + ".csv");
  emit(scan_to_json(res) + "\n", prefix + ".json");
  std::cout << "wrote " << prefix << ".csv\n";
  std::cout << "wrote " << prefix << ".json\n";
  return 0;
}

// --- verify -----------------------------------------------------------------

struct SuiteResult {
  std::string name;
  long checks = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass() const { return max_residual <= tolerance; }
};

void bump(SuiteResult& s, double residual) {
  ++s.checks;
  if (residual > s.max_residual) s.max_residual = residual;
}

SuiteResult suite_reference(int two_j_max) {
  SuiteResult s{"reference_match", 0, 0.0, 1e-14};
  for (int two_j = 1; two_j <= std::min(two_j_max, 2); ++two_j)
    for (const auto& [lab, ref] : reference_operators(two_j)) {
      ComplexMatrix diff = polarization_operator(lab) - ref;
      bump(s, diff.max_abs());
    }
  return s;
}

SuiteResult suite_orthonormality(int two_j_max) {
  SuiteResult s{"orthonormality", 0, 0.0, 1e-12};
  for (int two_j = 1; two_j <= two_j_max; ++two_j) {
    std::vector<PolOpLabel> labs = basis_labels(two_j);
    for (const PolOpLabel& a : labs)
      for (const PolOpLabel& b : labs) {
        Complex inner = polarization_operator(a).frobenius_inner(polarization_operator(b));
        double want = (a == b) ? 1.0 : 0.0;
        bump(s, std::abs(inner - Complex(want, 0.0)));
      }
  }
  return s;
}

SuiteResult suite_products(int two_j_max) {
  SuiteResult s{"product_expansion", 0, 0.0, 1e-12};
  for (int two_j = 1; two_j <= std::min(two_j_max, 4); ++two_j) {
    std::vector<PolOpLabel> labs = basis_labels(two_j);
    const int n = two_j + 1;
    for (const PolOpLabel& a : labs)
      for (const PolOpLabel& b : labs) {
        ComplexMatrix direct = polarization_operator(a) * polarization_operator(b);
        ComplexMatrix comm = direct - polarization_operator(b) * polarization_operator(a);
        ComplexMatrix anti = direct + polarization_operator(b) * polarization_operator(a);

        ComplexMatrix acc(n);
        for (const ExpansionTerm& term : product_expansion(a, b))
          acc += term.coeff * polarization_operator(term.label);
        bump(s, (acc - direct).max_abs());

        ComplexMatrix acc_c(n);
        for (const ExpansionTerm& term : commutator_expansion(a, b, false))
          acc_c += term.coeff * polarization_operator(term.label);
        bump(s, (acc_c - comm).max_abs());

        ComplexMatrix acc_a(n);
        for (const ExpansionTerm& term : commutator_expansion(a, b, true))
          acc_a += term.coeff * polarization_operator(term.label);
        bump(s, (acc_a - anti).max_abs());
      }
  }
  return s;
}

double direct_trace(int two_j, const std::vector<PolOpLabel>& tuple) {
  ComplexMatrix prod = ComplexMatrix::identity(two_j + 1);
  for (const PolOpLabel& lab : tuple) prod = prod * polarization_operator(lab);
  return prod.trace().real();
}

SuiteResult suite_multi_trace(int two_j_max) {
  SuiteResult s{"multi_trace", 0, 0.0, 1e-12};
  for (int two_j = 1; two_j <= std::min(two_j_max, 3); ++two_j) {
    std::vector<PolOpLabel> labs = basis_labels(two_j);
    for (const PolOpLabel& a : labs)
      for (const PolOpLabel& b : labs)
        for (const PolOpLabel& c : labs) {
          std::vector<PolOpLabel> tuple{a, b, c};
          Complex chain = multi_trace(two_j, tuple);
          bump(s, std::abs(chain - Complex(direct_trace(two_j, tuple), 0.0)));
        }
  }
  std::mt19937_64 rng(20240817);
  for (int two_j = 1; two_j <= std::min(two_j_max, 4); ++two_j) {
    std::vector<PolOpLabel> labs = basis_labels(two_j);
    std::uniform_int_distribution<size_t> pick(0, labs.size() - 1);
    for (int len = 4; len <= 5; ++len)
      for (int rep = 0; rep < 200; ++rep) {
        std::vector<PolOpLabel> tuple;
        for (int i = 0; i < len; ++i) tuple.push_back(labs[pick(rng)]);
        Complex chain = multi_trace(two_j, tuple);
        bump(s, std::abs(chain - Complex(direct_trace(two_j, tuple), 0.0)));
      }
  }
  return s;
}

SuiteResult suite_coeff_paths(int two_j_max) {
  SuiteResult s{"coefficient_paths", 0, 0.0, 1e-10};
  std::mt19937_64 rng(977317);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int two_j = 1; two_j <= std::min(two_j_max, 6); ++two_j) {
    const int n = two_j + 1;
    for (int rep = 0; rep < 50; ++rep) {
      std::vector<double> p(n * n - 1);
      for (double& x : p) x = u(rng);
      BlochVector v = BlochVector::from_real_params(two_j, p);
      std::vector<double> sv = s_from_bloch(v);
      std::vector<double> sm = char_poly_coeffs(bloch_to_density(v), 1e-9);
      for (int k = 0; k < n; ++k) bump(s, std::abs(sv[k] - sm[k]));
    }
  }
  return s;
}

int cmd_verify(int two_j_max, const std::string& format) {
  if (two_j_max < 1 || two_j_max > 11)
    throw std::invalid_argument("verify: --two-j-max must be in 1..11");

  std::vector<SuiteResult> suites;
  suites.push_back(suite_reference(two_j_max));
  suites.push_back(suite_orthonormality(two_j_max));
  suites.push_back(suite_products(two_j_max));
  suites.push_back(suite_multi_trace(two_j_max));
  suites.push_back(suite_coeff_paths(two_j_max));

  bool all_pass = true;
  for (const SuiteResult& s : suites) all_pass = all_pass && s.pass();

  if (format == "json") {
    std::string out = "{\"two_j_max\":" + std::to_string(two_j_max) + ",\"suites\":[";
    for (size_t i = 0; i < suites.size(); ++i) {
      const SuiteResult& s = suites[i];
      out += std::string(i ? "," : "") + "{\"name\":\"" + s.name +
             "\",\"checks\":" + std::to_string(s.checks) +
             ",\"max_residual\":" + format_double(s.max_residual) +
             ",\"tolerance\":" + format_double(s.tolerance) +
             ",\"pass\":" + (s.pass() ? "true" : "false") + "}";
    }
    out += std::string("],\"pass\":") + (all_pass ? "true" : "false") + "}\n";
    std::cout << out;
  } else {
    for (const SuiteResult& s : suites) {
      char line[160];
      std::snprintf(line, sizeof(line), "%-20s %-4s  %8ld checks  max residual %.3e  (tolerance %.0e)",
                    s.name.c_str(), s.pass() ? "ok" : "FAIL", s.checks,
                    s.max_residual, s.tolerance);
      std::cout << line << "\n";
    }
    std::cout << (all_pass ? "verify: all suites passed" : "verify: FAILURES above") << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orthonormal multipole basis, Bloch vectors, and positivity checks"};
  app.require_subcommand(1);

  // basis
  auto* basis = app.add_subcommand("basis", "print basis operator matrices");
  int b_two_j = 0, b_l = 0, b_m = 0;
  std::string b_out;
  basis->add_option("--two-j", b_two_j, "twice the spin (dimension - 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* b_lopt = basis->add_option("--L", b_l, "rank of a single operator");
  auto* b_mopt = basis->add_option("--M", b_m, "projection of a single operator");
  b_lopt->needs(b_mopt);
  b_mopt->needs(b_lopt);
  basis->add_option("--out", b_out, "output file (default stdout)");

  // compose
  auto* compose = app.add_subcommand("compose", "Bloch vector -> density matrix");
  std::string c_in, c_out;
  compose->add_option("--input", c_in, "Bloch vector JSON file, or - for stdin")->required();
  compose->add_option("--out", c_out, "output file (default stdout)");

  // decompose
  auto* decompose = app.add_subcommand("decompose", "density matrix -> Bloch vector");
  std::string d_in, d_out;
  bool d_operator = false;
  double d_tol = 1e-9;
  decompose->add_option("--input", d_in, "matrix JSON file, or - for stdin")->required();
  decompose->add_flag("--operator", d_operator,
                      "treat the input as a general operator and print all basis coefficients");
  decompose->add_option("--tolerance", d_tol, "validation tolerance (default 1e-9)");
  decompose->add_option("--out", d_out, "output file (default stdout)");

  // check
  auto* check = app.add_subcommand("check", "positivity check of a state");
  std::string k_in, k_out;
  double k_tol = 1e-9;
  bool k_oracle = false;
  check->add_option("--input", k_in, "state JSON (matrix or Bloch vector), or - for stdin")
      ->required();
  check->add_option("--tolerance", k_tol, "verdict tolerance (default 1e-9)");
  check->add_flag("--oracle", k_oracle, "cross-check the verdict against eigenvalues");
  check->add_option("--out", k_out, "output file (default stdout)");

  // traces
  auto* traces = app.add_subcommand("traces", "trace powers Tr{rho^k} and T_k");
  std::string t_in, t_out;
  int t_kmax = 0;
  traces->add_option("--input", t_in, "state JSON (matrix or Bloch vector), or - for stdin")
      ->required();
  traces->add_option("--kmax", t_kmax, "highest power (default N)");
  traces->add_option("--out", t_out, "output file (default stdout)");

  // scan
  auto* scan = app.add_subcommand("scan", "grid scan of a two-parameter section");
  std::string s_pair, s_type, s_prefix = "scan";
  int s_res = 401;
  double s_tol = 1e-9;
  scan->add_option("--pair", s_pair, "parameter pair, e.g. x,y or y,alpha2");
  scan->add_option("--type", s_type, "section family name (I..VII)");
  scan->add_option("--resolution", s_res, "grid points per axis (default 401)")
      ->check(CLI::Range(3, 100000));
  scan->add_option("--tolerance", s_tol, "classification tolerance (default 1e-9)");
  scan->add_option("--out", s_prefix, "output prefix, writes PREFIX.csv and PREFIX.json");

  // verify
  auto* verify = app.add_subcommand("verify", "run the built-in identity suites");
  int v_max = 0;
  std::string v_format = "text";
  verify->add_option("--two-j-max", v_max, "largest two_j to exercise (1..11)")->required();
  verify->add_option("--format", v_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (basis->parsed())
      return cmd_basis(b_two_j, b_l, b_m, b_lopt->count() > 0, b_out);
    if (compose->parsed()) return cmd_compose(c_in, c_out);
    if (decompose->parsed()) return cmd_decompose(d_in, d_operator, d_tol, d_out);
    if (check->parsed()) return cmd_check(k_in, k_tol, k_oracle, k_out);
    if (traces->parsed()) return cmd_traces(t_in, t_kmax, t_out);
    if (scan->parsed()) return cmd_scan(s_pair, s_type, s_res, s_tol, s_prefix);
    if (verify->parsed()) return cmd_verify(v_max, v_format);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
