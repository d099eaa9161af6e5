#pragma once

#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "dunkl/bochner_solver.hpp"
#include "dunkl/dunkl_operator.hpp"
#include "dunkl/jacobi_m1.hpp"
#include "dunkl/laurent_poly.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/weight_function.hpp"

namespace dunkl {

using Json = nlohmann::ordered_json;

/// Shortest decimal string that reads back to the same double.
std::string format_double(double v);

/// [{"exponent": k, "numerator": "p", "denominator": "q"}, ...], exponent ascending.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// {"mu": "p/q", ...} with all nine fields.
Json to_json(const OperatorParams& p);
OperatorParams params_from_json(const Json& j);

Json to_json(const WeightFunction& w);
Json to_json(const QuadratureRule& rule);
Json to_json(const std::vector<EigenPolynomial>& table);
Json to_json(const GramMatrix& g);
Json to_json(const std::vector<RecurrenceEntry>& table);
Json to_json(const ClassificationVerdict& v);

/// Header "n,lambda,x^0,...,x^N"; one row per degree with exact rational
/// entries.
void write_eigen_csv(std::ostream& os, const std::vector<EigenPolynomial>& table);

struct EigenRow {
  int n = 0;
  Rational lambda;
  Polynomial poly;
};
/// Inverse of write_eigen_csv. Throws ParseError on malformed input.
std::vector<EigenRow> read_eigen_csv(std::istream& is);

void write_gram_csv(std::ostream& os, const GramMatrix& g);
void write_recurrence_csv(std::ostream& os, const std::vector<RecurrenceEntry>& table);

/// One-line record: "<tag> positive=<bool> key=value ... weight=<formula>".
std::string format_verdict(const ClassificationVerdict& v);

}  // namespace dunkl
