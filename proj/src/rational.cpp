#include "monobasis/rational.hpp"

#include <stdexcept>

namespace monobasis {

Rational make_rational(long num, long den)
{
  if (den == 0)
    throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q)
{
  return q.get_str();
}

Rational parse_rational(std::string_view text)
{
  if (text.empty())
    throw std::invalid_argument("parse_rational: empty string");
  Rational q;
  if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("parse_rational: malformed '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

}  // namespace monobasis
