#include "dunkl/serialize.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

Rational field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const auto& v = j.at(key);
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError(std::string("field '") + key + "' must be a rational string");
}

Json interval_json(const Interval& iv) { return Json::array({iv.lo, iv.hi}); }

}  // namespace

std::string format_double(double v) {
  v += 0.0;  // no "-0"
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

Json to_json(const LaurentPoly& p) {
  Json arr = Json::array();
  for (const auto& [k, c] : p.terms()) {
    arr.push_back({{"exponent", k},
                   {"numerator", c.numerator().get_str()},
                   {"denominator", c.denominator().get_str()}});
  }
  return arr;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array");
  LaurentPoly p;
  for (const auto& rec : j) {
    try {
      const int k = rec.at("exponent").get<int>();
      const Rational num = Rational::parse(rec.at("numerator").get<std::string>());
      const Rational den = Rational::parse(rec.at("denominator").get<std::string>());
      if (den.is_zero()) throw ParseError("zero denominator");
      p.add_term(k, num / den);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad polynomial record: ") + e.what());
    }
  }
  return p;
}

Json to_json(const OperatorParams& p) {
  return {{"mu", p.mu.str()},     {"nu0", p.nu0.str()},   {"nu1", p.nu1.str()},
          {"rho0", p.rho0.str()}, {"rho1", p.rho1.str()}, {"tau0", p.tau0.str()},
          {"tau1", p.tau1.str()}, {"xi", p.xi.str()},     {"eta", p.eta.str()}};
}

OperatorParams params_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("operator parameters must be a JSON object");
  OperatorParams p;
  p.mu = field(j, "mu");
  p.nu0 = field(j, "nu0");
  p.nu1 = field(j, "nu1");
  p.rho0 = field(j, "rho0");
  p.rho1 = field(j, "rho1");
  p.tau0 = field(j, "tau0");
  p.tau1 = field(j, "tau1");
  p.xi = field(j, "xi");
  p.eta = field(j, "eta");
  return p;
}

Json to_json(const WeightFunction& w) {
  Json j;
  j["constant"] = w.constant;
  j["sign_factor"] = w.sign_factor;
  Json affine = Json::array();
  for (const auto& f : w.affine_factors) affine.push_back({{"root", f.root}, {"multiplicity", f.multiplicity}});
  j["affine_factors"] = affine;
  j["abs_power"] = w.abs_power;
  Json alg = Json::array();
  for (const auto& f : w.algebraic_factors) {
    alg.push_back({{"constant", f.constant}, {"quadratic", f.quadratic}, {"exponent", f.exponent}});
  }
  j["algebraic_factors"] = alg;
  if (w.exponential_factor) {
    const auto& e = *w.exponential_factor;
    j["exponential_factor"] = {{"coefficient", e.coefficient}, {"shift", e.shift}, {"power", e.power}};
  } else {
    j["exponential_factor"] = nullptr;
  }
  j["variable_scale"] = w.variable_scale;
  Json support = Json::array();
  for (const auto& iv : w.support) support.push_back(interval_json(iv));
  j["support"] = support;
  if (w.jacobi) {
    j["jacobi"] = {{"alpha", w.jacobi->alpha}, {"beta", w.jacobi->beta}, {"c", w.jacobi->c}};
  }
  j["formula"] = w.describe();
  return j;
}

Json to_json(const QuadratureRule& rule) {
  Json j;
  j["order"] = rule.order;
  j["size"] = rule.size();
  j["nodes"] = rule.nodes;
  j["weights"] = rule.weights;
  j["target"] = to_json(rule.target);
  return j;
}

Json to_json(const std::vector<EigenPolynomial>& table) {
  Json arr = Json::array();
  for (const auto& e : table) {
    arr.push_back({{"n", e.n}, {"lambda", e.lambda.str()}, {"coefficients", to_json(e.poly.laurent())}});
  }
  return arr;
}

Json to_json(const GramMatrix& g) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < g.entries.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < g.entries.cols(); ++c) row.push_back(g.entries(r, c));
    rows.push_back(row);
  }
  const char* basis = g.basis == GramBasis::Eigen      ? "eigen"
                      : g.basis == GramBasis::Monomial ? "monomial"
                                                       : "custom";
  return {{"basis", basis}, {"entries", rows}};
}

Json to_json(const std::vector<RecurrenceEntry>& table) {
  Json arr = Json::array();
  for (const auto& e : table) {
    Json rec = {{"n", e.n}, {"b", e.b}, {"h", e.h}};
    rec["u"] = e.u ? Json(*e.u) : Json(nullptr);
    arr.push_back(rec);
  }
  return arr;
}

Json to_json(const ClassificationVerdict& v) {
  Json j;
  j["case_tag"] = std::string(to_string(v.case_tag));
  j["positive"] = v.positive_on_symmetric_support;
  Json params = Json::object();
  for (const auto& [k, val] : v.case_parameters) params[k] = val;
  j["parameters"] = params;
  j["kappa0"] = v.kappa0.str();
  j["kappa1"] = v.canonical ? Json(v.kappa1.str()) : Json(v.kappa1_value);
  j["canonical"] = v.canonical ? to_json(*v.canonical) : Json(nullptr);
  j["weight"] = v.weight ? to_json(*v.weight) : Json(nullptr);
  j["notes"] = v.notes;
  return j;
}

void write_eigen_csv(std::ostream& os, const std::vector<EigenPolynomial>& table) {
  int N = 0;
  for (const auto& e : table) N = std::max(N, e.poly.degree());
  os << "n,lambda";
  for (int k = 0; k <= N; ++k) os << ",x^" << k;
  os << '\n';
  for (const auto& e : table) {
    os << e.n << ',' << e.lambda.str();
    for (int k = 0; k <= N; ++k) os << ',' << e.poly.coefficient(k).str();
    os << '\n';
  }
}

std::vector<EigenRow> read_eigen_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty eigenpolynomial table");
  const auto header = split(line, ',');
  if (header.size() < 3 || header[0] != "n" || header[1] != "lambda") {
    throw ParseError("unexpected eigenpolynomial table header: " + line);
  }
  std::vector<EigenRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != header.size()) throw ParseError("row width mismatch: " + line);
    EigenRow row;
    const Rational n = Rational::parse(cells[0]);
    if (!n.is_integer()) throw ParseError("degree must be an integer: " + cells[0]);
    row.n = static_cast<int>(n.numerator().get_si());
    row.lambda = Rational::parse(cells[1]);
    LaurentPoly p;
    for (std::size_t k = 2; k < cells.size(); ++k) p.add_term(static_cast<int>(k - 2), Rational::parse(cells[k]));
    row.poly = Polynomial(std::move(p));
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_gram_csv(std::ostream& os, const GramMatrix& g) {
  os << "n";
  for (Eigen::Index c = 0; c < g.entries.cols(); ++c) os << ",m" << c;
  os << '\n';
  for (Eigen::Index r = 0; r < g.entries.rows(); ++r) {
    os << r;
    for (Eigen::Index c = 0; c < g.entries.cols(); ++c) os << ',' << format_double(g.entries(r, c));
    os << '\n';
  }
}

void write_recurrence_csv(std::ostream& os, const std::vector<RecurrenceEntry>& table) {
  os << "n,b,u,h\n";
  for (const auto& e : table) {
    os << e.n << ',' << format_double(e.b) << ',' << (e.u ? format_double(*e.u) : "") << ','
       << format_double(e.h) << '\n';
  }
}

std::string format_verdict(const ClassificationVerdict& v) {
  std::ostringstream os;
  os << to_string(v.case_tag) << " positive=" << (v.positive_on_symmetric_support ? "true" : "false");
  for (const auto& [k, val] : v.case_parameters) os << ' ' << k << '=' << format_double(val);
  if (v.case_tag != CaseTag::NotSymmetrizable && v.case_tag != CaseTag::DegenerateSpectrum) {
    os << " kappa0=" << v.kappa0.str();
    os << " kappa1=" << (v.canonical ? v.kappa1.str() : format_double(v.kappa1_value));
  }
  if (v.weight) os << " weight=" << v.weight->describe();
  if (!v.notes.empty()) os << " notes=\"" << v.notes << '"';
  return os.str();
}

}  // namespace dunkl
