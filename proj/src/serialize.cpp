#include "monobasis/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace monobasis {

Json rational_json(const Rational& q)
{
  return to_string(q);
}

Json polynomial_json(const CorrelationPolynomial& f)
{
  Json arr = Json::array();
  const auto s = static_cast<std::size_t>(f.particles());
  for (const auto& [e, c] : f.terms()) {
    Json term;
    term["t"] = std::vector<int>(e.begin(), e.begin() + static_cast<long>(s));
    term["z"] = std::vector<int>(e.begin() + static_cast<long>(s), e.end());
    term["c"] = to_string(c);
    arr.push_back(std::move(term));
  }
  return arr;
}

CorrelationPolynomial polynomial_from_json(const Json& j)
{
  if (!j.is_array())
    throw std::invalid_argument("polynomial_from_json: expected an array");
  if (j.empty())
    return CorrelationPolynomial(1);
  const auto particles = j.front().at("t").size();
  CorrelationPolynomial f(static_cast<int>(particles));
  for (const auto& term : j) {
    auto t = term.at("t").get<std::vector<int>>();
    const auto z = term.at("z").get<std::vector<int>>();
    if (t.size() != particles || z.size() != particles)
      throw std::invalid_argument("polynomial_from_json: inconsistent particle count");
    t.insert(t.end(), z.begin(), z.end());
    f.add_term(t, parse_rational(term.at("c").get<std::string>()));
  }
  return f;
}

Json monomial_json(const Monomial& m)
{
  Json arr = Json::array();
  for (const auto& g : m.factors)
    arr.push_back({g.color, g.mode});
  return arr;
}

Monomial monomial_from_json(const Json& j)
{
  Monomial m;
  for (const auto& pair : j)
    m.factors.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
  return m;
}

Json tensor_json(const TensorVector& v)
{
  Json obj = Json::object();
  for (const auto& [key, c] : v.coefficients())
    obj[std::to_string(key.first) + "," + std::to_string(key.second)] = to_string(c);
  return obj;
}

TensorVector tensor_from_json(const Json& j)
{
  TensorVector v;
  for (const auto& [key, val] : j.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("tensor_from_json: key must be \"a,b\"");
    v.add(std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1)), parse_rational(val.get<std::string>()));
  }
  return v;
}

Json algebra_json(const AlgebraElement& e)
{
  Json arr = Json::array();
  for (const auto& [m, c] : e.terms())
    arr.push_back({{"monomial", monomial_json(m)}, {"c", to_string(c)}});
  return arr;
}

std::string monomial_label(const Monomial& m)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i)
    os << (i ? "|" : "") << m[i].color << ':' << m[i].mode;
  return os.str();
}

std::string matrix_csv(const std::vector<std::string>& row_labels, const std::vector<std::string>& column_labels,
                       const DenseMatrix& m)
{
  std::ostringstream os;
  os << "row";
  for (const auto& c : column_labels)
    os << ",\"" << c << '"';
  os << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << '"' << row_labels.at(i) << '"';
    for (const auto& v : m[i])
      os << ',' << to_string(v);
    os << '\n';
  }
  return os.str();
}

}  // namespace monobasis
