#pragma once

#include "monobasis/free_algebra.hpp"
#include "monobasis/linalg.hpp"
#include "monobasis/polynomial.hpp"
#include "monobasis/sl2.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace monobasis {

using Json = nlohmann::json;

Json rational_json(const Rational& q);

// [{"t": [...], "z": [...], "c": "p/q"}, ...] in exponent order.
Json polynomial_json(const CorrelationPolynomial& f);
CorrelationPolynomial polynomial_from_json(const Json& j);

// [[a, n], ...] in canonical order.
Json monomial_json(const Monomial& m);
Monomial monomial_from_json(const Json& j);

// {"a,b": "p/q"}
Json tensor_json(const TensorVector& v);
TensorVector tensor_from_json(const Json& j);

// [{"monomial": [[a, n], ...], "c": "p/q"}, ...]
Json algebra_json(const AlgebraElement& e);

// "a:n|a:n" label used in CSV headers.
std::string monomial_label(const Monomial& m);

// Dense matrix CSV with quoted row labels and column labels.
std::string matrix_csv(const std::vector<std::string>& row_labels, const std::vector<std::string>& column_labels,
                       const DenseMatrix& m);

}  // namespace monobasis
