#include "monobasis/commands.hpp"
#include "monobasis/serialize.hpp"

#include <doctest.h>

using namespace monobasis;

TEST_CASE("rational json")
{
  CHECK(rational_json(make_rational(-3, 6)) == Json("-1/2"));
  CHECK(rational_json(Rational(4)) == Json("4"));
}

TEST_CASE("polynomial round trip")
{
  CorrelationPolynomial f(2);
  f.add_term({1, 0, 2, -1}, make_rational(3, 4));
  f.add_term({0, 2, 0, 0}, Rational(-5));
  const Json j = polynomial_json(f);
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
  CHECK(j[0].at("c").is_string());
  CHECK(polynomial_from_json(j) == f);
  CHECK(polynomial_from_json(Json::parse(j.dump())) == f);
  CHECK_THROWS(polynomial_from_json(Json::parse(R"([{"t":[1],"z":[0,0],"c":"1"}])")));
}

TEST_CASE("monomial round trip")
{
  const Monomial m{{{2, -3}, {0, -1}, {1, 0}}};
  const Json j = monomial_json(m);
  CHECK(j == Json::parse("[[2,-3],[0,-1],[1,0]]"));
  CHECK(monomial_from_json(j) == m);
  CHECK(monomial_label(m) == "2:-3|0:-1|1:0");
}

TEST_CASE("tensor round trip")
{
  TensorVector v;
  v.add(0, 2, Rational(2));
  v.add(1, 1, make_rational(-1, 3));
  const Json j = tensor_json(v);
  CHECK(j.at("0,2") == "2");
  CHECK(j.at("1,1") == "-1/3");
  CHECK(tensor_from_json(j) == v);
  CHECK_THROWS(tensor_from_json(Json::parse(R"({"12":"1"})")));
}

TEST_CASE("matrix csv")
{
  const DenseMatrix m{{Rational(1), make_rational(1, 2)}, {Rational(0), Rational(-1)}};
  CHECK(matrix_csv({"r0", "r1"}, {"a", "b"}, m) == "row,\"a\",\"b\"\n\"r0\",1,1/2\n\"r1\",0,-1\n");
}

TEST_CASE("report envelope")
{
  ReportEnvelope rep;
  rep.command = "x";
  rep.check("ok", true);
  CHECK(rep.passed());
  rep.check("bad", false, "why");
  CHECK_FALSE(rep.passed());
  const Json j = rep.to_json();
  CHECK(j.at("schema") == "1");
  CHECK(j.at("command") == "x");
  CHECK(j.at("passed") == false);
  CHECK(j.at("assertions").size() == 2);
  CHECK(j.at("assertions")[1].at("detail") == "why");
  CHECK(j.contains("wall_time_seconds"));
}

TEST_CASE("commands are deterministic")
{
  CommandParams p;
  p.k = 2;
  p.cutoff = 4;
  auto a = cmd_character(p).to_json();
  auto b = cmd_character(p).to_json();
  a.erase("wall_time_seconds");
  b.erase("wall_time_seconds");
  CHECK(a.dump() == b.dump());
  CHECK(a.at("passed") == true);
}

TEST_CASE("command examples")
{
  CommandParams p;
  p.k = 1;
  const auto rel = cmd_relations(p);
  CHECK(rel.status == "not applicable");
  CHECK(rel.passed());
  for (int k : {2, 3}) {
    p.k = k;
    CHECK(cmd_relations(p).passed());
  }
  p.k = 2;
  p.s = 2;
  p.r = 0;
  CHECK(cmd_basis(p).passed());
  p.k = 1;
  p.s = 3;
  p.r = 1;
  CHECK(cmd_basis(p).passed());
  p.degree_min = p.degree_max = 3;
  CHECK(cmd_basis(p).passed());
  for (auto [k, r] : {std::pair{1, 0}, std::pair{2, 1}}) {
    CommandParams c;
    c.k = k;
    c.r = r;
    c.cutoff = 8;
    CHECK(cmd_character(c).passed());
    c.cutoff = 0;
    CHECK(cmd_character(c).passed());
  }
  for (int k : {1, 2, 4}) {
    CommandParams v;
    v.k = k;
    const auto rep = cmd_verlinde(v);
    CHECK(rep.passed());
    CHECK(rep.data.at("basis").size() == static_cast<std::size_t>(k * (k + 1) / 2));
  }
}
