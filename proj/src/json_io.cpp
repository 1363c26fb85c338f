#include "blochspace/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace blochspace {

namespace {

using nlohmann::json;

void append_pair(std::string& out, double re, double im) {
  out += '[';
  out += format_double(re);
  out += ',';
  out += format_double(im);
  out += ']';
}

double num_field(const json& j, const char* ctx) {
  if (!j.is_number())
    throw std::invalid_argument(std::string(ctx) + ": expected a number");
  return j.get<double>();
}

int int_field(const json& j, const char* name) {
  if (!j.is_number_integer())
    throw std::invalid_argument(std::string(name) + ": expected an integer");
  return j.get<int>();
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string matrix_to_json(const ComplexMatrix& m) {
  std::string out = "{\"dim\":" + std::to_string(m.dim()) + ",\"entries\":[";
  for (int i = 0; i < m.dim(); ++i) {
    if (i) out += ',';
    out += '[';
    for (int j = 0; j < m.dim(); ++j) {
      if (j) out += ',';
      append_pair(out, m.at(i, j).real(), m.at(i, j).imag());
    }
    out += ']';
  }
  out += "]}";
  return out;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw std::invalid_argument("matrix document needs \"dim\" and \"entries\"");
  int dim = int_field(j["dim"], "dim");
  if (dim < 1) throw std::invalid_argument("dim: must be >= 1");
  const json& rows = j["entries"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
    throw std::invalid_argument("entries: expected " + std::to_string(dim) + " rows");
  ComplexMatrix m(dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("entries: row " + std::to_string(r) +
                                  " must have " + std::to_string(dim) + " entries");
    for (int c = 0; c < dim; ++c) {
      const json& e = row[c];
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("entries: each entry must be [re, im]");
      m.at(r, c) = Complex(num_field(e[0], "entry"), num_field(e[1], "entry"));
    }
  }
  return m;
}

std::string bloch_to_json(const BlochVector& v) {
  std::string out = "{\"two_j\":" + std::to_string(v.two_j()) + ",\"params\":[";
  bool first = true;
  for (double p : v.real_params()) {
    if (!first) out += ',';
    first = false;
    out += format_double(p);
  }
  out += "]}";
  return out;
}

BlochVector bloch_from_json(const json& j) {
  if (!j.is_object() || !j.contains("two_j") || !j.contains("params"))
    throw std::invalid_argument("state document needs \"two_j\" and \"params\"");
  int two_j = int_field(j["two_j"], "two_j");
  if (two_j < 1) throw std::invalid_argument("two_j: must be >= 1");
  const json& params = j["params"];
  if (!params.is_array())
    throw std::invalid_argument("params: expected an array of reals");
  std::vector<double> p;
  p.reserve(params.size());
  for (const json& e : params) p.push_back(num_field(e, "params"));
  return BlochVector::from_real_params(two_j, p);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Positive: return "Positive";
    case Verdict::NonPositive: return "NonPositive";
    case Verdict::Marginal: return "Marginal";
  }
  return "?";
}

const char* method_name(Method m) {
  switch (m) {
    case Method::NewtonFromMatrix: return "NewtonFromMatrix";
    case Method::NewtonFromBloch: return "NewtonFromBloch";
    case Method::EigenOracle: return "EigenOracle";
  }
  return "?";
}

std::string report_to_json(const PositivityReport& rep) {
  auto list = [](const std::vector<double>& xs) {
    std::string s = "[";
    for (size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ',';
      s += format_double(xs[i]);
    }
    return s + "]";
  };
  std::string out = "{\"N\":" + std::to_string(rep.N);
  out += ",\"S\":" + list(rep.S);
  out += ",\"T\":" + list(rep.T);
  out += ",\"traces\":" + list(rep.traces);
  out += std::string(",\"verdict\":\"") + verdict_name(rep.verdict) + "\"";
  out += ",\"tolerance\":" + format_double(rep.tolerance);
  out += std::string(",\"method\":\"") + method_name(rep.method) + "\"}";
  return out;
}

std::string coeffs_to_json(const OperatorCoefficients& oc) {
  std::string out = "{\"two_j\":" + std::to_string(oc.two_j) + ",\"coeffs\":[";
  std::vector<PolOpLabel> labs = basis_labels(oc.two_j);
  for (size_t i = 0; i < labs.size(); ++i) {
    if (i) out += ',';
    out += "{\"L\":" + std::to_string(labs[i].L) +
           ",\"M\":" + std::to_string(labs[i].M) + ",\"coeff\":";
    append_pair(out, oc.coeffs[i].real(), oc.coeffs[i].imag());
    out += '}';
  }
  out += "]}";
  return out;
}

std::string scan_to_csv(const ScanResult& res) {
  std::string out = "s,t,norm_sq,F,classification\n";
  const int r = res.resolution;
  for (int is = 0; is < r; ++is)
    for (int it = 0; it < r; ++it) {
      size_t k = static_cast<size_t>(is) * r + it;
      out += format_double(res.grid[is]);
      out += ',';
      out += format_double(res.grid[it]);
      out += ',';
      out += format_double(res.norm_sq[k]);
      out += ',';
      out += format_double(res.f[k]);
      out += ',';
      out += std::to_string(static_cast<int>(res.cls[k]));
      out += '\n';
    }
  return out;
}

std::string scan_to_json(const ScanResult& res) {
  auto point_list = [](const std::vector<std::array<double, 2>>& pts) {
    std::string s = "[";
    for (size_t i = 0; i < pts.size(); ++i) {
      if (i) s += ',';
      s += '[';
      s += format_double(pts[i][0]);
      s += ',';
      s += format_double(pts[i][1]);
      s += ']';
    }
    return s + "]";
  };
  std::string out = std::string("{\"section\":\"") + section_name(res.tag) + "\"";
  out += std::string(",\"pair\":[\"") + axis_name(res.pair.s) + "\",\"" +
         axis_name(res.pair.t) + "\"]";
  out += ",\"resolution\":" + std::to_string(res.resolution);
  out += ",\"tolerance\":" + format_double(res.tol);
  out += ",\"pure_states\":" + point_list(res.pure_states);
  out += ",\"boundary\":[";
  for (size_t i = 0; i < res.boundary.size(); ++i) {
    if (i) out += ',';
    out += point_list(res.boundary[i]);
  }
  out += "]}";
  return out;
}

std::variant<ComplexMatrix, BlochVector> state_from_json(const json& j) {
  if (j.is_object() && j.contains("dim") && j.contains("entries"))
    return matrix_from_json(j);
  if (j.is_object() && j.contains("two_j") && j.contains("params"))
    return bloch_from_json(j);
  throw std::invalid_argument(
      "state document must be a matrix {dim, entries} or a Bloch vector "
      "{two_j, params}");
}

}  // namespace blochspace
