#include "monobasis/commands.hpp"

#include "monobasis/correlation.hpp"
#include "monobasis/normal_order.hpp"
#include "monobasis/paths.hpp"
#include "monobasis/relations.hpp"
#include "monobasis/verlinde.hpp"

#include <chrono>
#include <sstream>

namespace monobasis {

bool ReportEnvelope::passed() const
{
  for (const auto& a : assertions)
    if (!a.passed)
      return false;
  return true;
}

void ReportEnvelope::check(std::string name, bool ok, std::string detail)
{
  assertions.push_back({std::move(name), ok, std::move(detail)});
}

Json ReportEnvelope::to_json() const
{
  Json j;
  j["schema"] = "1";
  j["command"] = command;
  j["params"] = params;
  j["status"] = status;
  Json as = Json::array();
  for (const auto& a : assertions) {
    Json x{{"name", a.name}, {"passed", a.passed}};
    if (!a.detail.empty())
      x["detail"] = a.detail;
    as.push_back(std::move(x));
  }
  j["assertions"] = std::move(as);
  j["passed"] = passed();
  j["data"] = data;
  j["wall_time_seconds"] = wall_time_seconds;
  return j;
}

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const
  {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

ReportEnvelope start(const char* name, Json params)
{
  ReportEnvelope rep;
  rep.command = name;
  rep.params = std::move(params);
  return rep;
}

}  // namespace

ReportEnvelope cmd_relations(const CommandParams& p)
{
  const Stopwatch sw;
  ReportEnvelope rep = start(
      "relations", {{"k", p.k}, {"degree_min", p.degree_min}, {"degree_max", p.degree_max}, {"window", p.window}});
  if (p.k < 2) {
    rep.status = "not applicable";
    rep.data["reason"] = "quadratic relations need k >= 2; only super-commutativity applies";
    rep.wall_time_seconds = sw.seconds();
    return rep;
  }
  const auto spec = q2_spec(p.k);
  Json comps = Json::array();
  std::size_t expected_rows = 0;
  for (const auto& c : spec) {
    comps.push_back({{"m", c.derivative}, {"j", c.spin}});
    expected_rows += static_cast<std::size_t>(2 * c.spin + 1);
  }
  rep.data["q2_spec"] = comps;

  Json mats = Json::object();
  std::ostringstream csv;
  bool rows_ok = true;
  for (int d = p.degree_min; d <= p.degree_max; ++d) {
    const auto rows = relation_matrix(p.k, d, p.window);
    rows_ok = rows_ok && rows.size() == expected_rows;
    Json jr = Json::array();
    for (const auto& r : rows)
      jr.push_back({{"m", r.component.derivative},
                    {"j", r.component.spin},
                    {"weight", r.weight},
                    {"terms", algebra_json(r.vector.terms)}});
    mats[std::to_string(d)] = std::move(jr);
    csv << "# degree " << d << '\n' << relation_matrix_csv(rows);
  }
  rep.data["relation_matrices"] = std::move(mats);
  rep.csv = csv.str();
  rep.check("relation_matrix_row_count", rows_ok);
  rep.check("omega_direct_sum", omega_direct_sum_check(p.k, 4));
  rep.check("omega_redundancy", omega_redundancy_check(p.k, 4));
  rep.check("binomial_identity", binomial_identity_check(4, p.window));
  rep.check("closure", closure_check(p.k));
  rep.wall_time_seconds = sw.seconds();
  return rep;
}

ReportEnvelope cmd_basis(const CommandParams& p)
{
  const Stopwatch sw;
  ReportEnvelope rep = start("basis", {{"k", p.k},
                                       {"s", p.s},
                                       {"r", p.r},
                                       {"degree_min", p.degree_min},
                                       {"degree_max", p.degree_max}});
  bool dims_ok = true, tri_ok = true, ann_ok = true, nf_ok = true, conds_ok = true;
  Json per_degree = Json::array();
  std::ostringstream csv;
  csv << "degree,kappa,rho,value\n";
  for (int d = p.degree_min; d <= p.degree_max; ++d) {
    const auto kappas = normal_ordered_monomials(p.k, p.s, p.r, d);
    const ConstraintSpace space = constraint_space(p.k, p.s, p.r, d);
    Json blocks = Json::array();
    for (const auto& b : space.blocks) {
      std::size_t count = 0;
      for (const auto& m : kappas)
        count += (color_sum(m) == b.color_total);
      if (count != b.dimension())
        dims_ok = false;
      if (count != 0 || b.dimension() != 0)
        blocks.push_back({{"color_sum", b.color_total}, {"normal_ordered", count}, {"dimension", b.dimension()}});
    }
    const DenseMatrix pm = pairing_matrix(p.k, kappas);
    const auto tri = check_triangularity(kappas, pm);
    tri_ok = tri_ok && tri.unit_diagonal && tri.lower_vanishing;
    for (std::size_t i = 0; i < kappas.size(); ++i)
      for (std::size_t j = 0; j < kappas.size(); ++j)
        if (sgn(pm[i][j]) != 0)
          csv << d << ",\"" << monomial_label(kappas[i]) << "\",\"" << monomial_label(kappas[j]) << "\","
              << to_string(pm[i][j]) << '\n';
    for (const auto& kappa : kappas) {
      const auto f = build_f_kappa(p.k, kappa);
      conds_ok = conds_ok && has_exchange_symmetry(f, p.k) && respects_t_degree(f, p.k) &&
                 vanishes_at_origin(f, p.r) && has_z_degree(f, d) &&
                 (p.s < 2 || vanishes_on_diagonal(f, p.k));
    }
    if (p.s == 2 && p.k >= 2) {
      const auto polys = space.polynomials();
      for (const auto& row : relation_matrix(p.k, d, std::abs(d) + 1))
        for (const auto& f : polys)
          if (sgn(pairing(f, row.vector.terms)) != 0)
            ann_ok = false;
    }
    // Round trips on every non-normal-ordered boundary monomial of the degree.
    std::size_t trips = 0;
    for (int a = 0; a <= p.s * p.k; ++a)
      for (const auto& m : boundary_monomials(p.k, p.s, p.r, a, d)) {
        if (is_normal_ordered(m, p.k))
          continue;
        const AlgebraElement nf = normal_form(p.k, p.r, m);
        for (const auto& [t, c] : nf.terms())
          nf_ok = nf_ok && is_normal_ordered(t, p.k);
        nf_ok = nf_ok && preserves_pairings(p.k, p.r, m, nf);
        ++trips;
      }
    per_degree.push_back(
        {{"degree", d}, {"normal_ordered", kappas.size()}, {"dimension", space.dimension()}, {"blocks", blocks},
         {"normal_form_round_trips", trips}});
  }
  rep.data["degrees"] = std::move(per_degree);
  rep.csv = csv.str();
  rep.check("dimension_match", dims_ok);
  rep.check("triangular_unit_diagonal", tri_ok);
  rep.check("f_kappa_conditions", conds_ok);
  if (p.s == 2 && p.k >= 2)
    rep.check("annihilation", ann_ok);
  rep.check("normal_form_round_trip", nf_ok);
  rep.wall_time_seconds = sw.seconds();
  return rep;
}

ReportEnvelope cmd_character(const CommandParams& p)
{
  const Stopwatch sw;
  ReportEnvelope rep = start("character", {{"k", p.k}, {"r", p.r}, {"l", p.l}, {"cutoff", p.cutoff}});
  const PathCharacter ch = path_character(p.k, p.r, p.l, p.cutoff);
  const BiGradedSeries oracle = kac_character(p.k, p.r, p.cutoff);
  rep.check("path_character_equals_kac", ch.full == oracle);
  rep.check("reduced_factorization", ch.factorization_holds);
  rep.check("horizon_stable", ch.horizon_stable);
  const PathCharacter shifted = path_character(p.k, p.r, p.l + 1, p.cutoff);
  rep.check("l_independent", shifted.full == ch.full);

  const auto reduced = enumerate_paths(p.k, p.r, p.l, p.cutoff, true);
  bool sums = true;
  for (const auto& path : reduced.paths)
    sums = sums && energy_sum_check(path);
  rep.check("energy_sum_identity", sums);

  const auto all = enumerate_paths(p.k, p.r, p.l, p.cutoff, false);
  bool bounds = true, valid = true;
  for (const auto& path : all.paths) {
    bounds = bounds && respects_vacuum_bound(path);
    valid = valid && path.is_valid();
  }
  rep.check("paths_normal_ordered", valid);
  rep.check("vacuum_bound", bounds);
  rep.check("vacuum_saturation", vacuum_saturation_check(p.k, p.r, p.l, all.horizon));
  rep.check("top_coefficient_one", ch.full.coefficient(0, 0) == 1);

  rep.data["path_count"] = all.paths.size();
  rep.data["reduced_path_count"] = reduced.paths.size();
  rep.data["horizon"] = all.horizon;
  rep.csv = ch.full.to_csv();
  Json rows = Json::array();
  for (const auto& [key, c] : ch.full.coefficients())
    rows.push_back({{"alpha1_offset", key.first}, {"energy", key.second}, {"multiplicity", c}});
  rep.data["character"] = std::move(rows);
  rep.wall_time_seconds = sw.seconds();
  return rep;
}

ReportEnvelope cmd_verlinde(const CommandParams& p)
{
  const Stopwatch sw;
  ReportEnvelope rep = start("verlinde", {{"k", p.k}});
  const AkVerlindeAlgebra alg = ak_verlinde(p.k);
  rep.check("dimension", alg.dimension() == static_cast<std::size_t>(p.k * (p.k + 1) / 2),
            std::to_string(alg.dimension()));
  rep.check("fixed_span_closed", alg.fixed_span_closed);
  rep.check("ideal_gamma_stable", alg.ideal_gamma_stable);
  rep.check("generator_involutive", alg.generator_involutive);
  rep.check("identification", alg.identification_holds);
  rep.check("commutative", alg.commutative);
  rep.check("associative", alg.associative);
  rep.check("unit", alg.unit_is_vacuum);
  rep.check("nonnegative_integral", alg.nonnegative_integral);

  Json basis = Json::array();
  for (const auto& [j, r] : alg.basis)
    basis.push_back({j, r});
  rep.data["basis"] = std::move(basis);
  std::ostringstream csv;
  csv << "x_j,x_r,y_j,y_r,z_j,z_r,multiplicity\n";
  Json triples = Json::array();
  for (const auto& [key, c] : alg.structure) {
    const auto& [x, y, z] = key;
    csv << x.first << ',' << x.second << ',' << y.first << ',' << y.second << ',' << z.first << ',' << z.second << ','
        << c << '\n';
    triples.push_back({{x.first, x.second}, {y.first, y.second}, {z.first, z.second}, c});
  }
  rep.data["structure_constants"] = std::move(triples);
  rep.csv = csv.str();
  rep.wall_time_seconds = sw.seconds();
  return rep;
}

}  // namespace monobasis
