#include "arrinv/report.hpp"

#include <numeric>

namespace arrinv {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

Json unavailable(const std::string& reason) { return Json{{"unavailable", reason}}; }

std::optional<SteinerTensor> try_tensor(const Arrangement& a) {
  if (a.m() < a.n() + 2 || !is_essential(a)) {
    return std::nullopt;
  }
  return steiner_tensor(a);
}

Json local_json(const IntersectionLattice& lattice) {
  Json points = Json::array();
  for (const LocalPoint& p : local_data(lattice)) {
    points.push_back(Json{{"indices", labels_json(lattice.flats[p.flat].indices)},
                          {"s", p.s},
                          {"milnor", p.milnor},
                          {"delta", p.delta_local},
                          {"branches", p.branches},
                          {"torsion_length", p.torsion_length}});
  }
  return points;
}

Json delta_json(const IntersectionLattice& lattice) {
  const DeltaData d = delta_invariant(lattice);
  Json per_point = Json::array();
  for (const auto& [flat, value] : d.per_point) {
    per_point.push_back(Json{{"indices", labels_json(lattice.flats[flat].indices)}, {"delta", value}});
  }
  return Json{{"total", d.total}, {"per_point", std::move(per_point)}};
}

Json oracle_json(const Arrangement& a, const IntersectionLattice& lattice, const PoincareData& pd,
                 const std::vector<std::uint64_t>& primes) {
  Json out = Json::array();
  for (std::uint64_t requested : primes) {
    const std::uint64_t p = good_prime_from(a, lattice, requested);
    if (p == 0) {
      out.push_back(Json{{"prime", requested}, {"unavailable", "no prime of good reduction found"}});
      continue;
    }
    const Integer count(std::to_string(count_complement_points(a, p)));
    const Integer expected = characteristic_value(pd, a.n(), p);
    out.push_back(Json{{"prime", requested},
                       {"used_prime", p},
                       {"count", integer_json(count)},
                       {"expected", integer_json(expected)},
                       {"match", count == expected}});
  }
  return out;
}

Json gale_json(const Arrangement& a) {
  if (a.m() < a.n() + 3) {
    return unavailable("the associated arrangement needs m >= n+3");
  }
  if (!is_essential(a)) {
    return unavailable("the arrangement is not essential");
  }
  Json out;
  try {
    const Arrangement dual = gale_dual(a);
    out["dual"] = arrangement_to_json(dual);
  } catch (const PreconditionError& e) {
    out["dual"] = nullptr;
    out["dual_unavailable"] = e.what();
  }
  try {
    const GaleBijectionReport r = verify_gale_bijection(a);
    out["dependent_sets"] = dependent_sets(a).sets.size();
    out["bijection_holds"] = r.holds;
  } catch (const PreconditionError& e) {
    out["bijection_unavailable"] = e.what();
  }
  return out;
}

bool semistable(StabilityStatus s) { return s == StabilityStatus::Stable || s == StabilityStatus::NotStable; }

bool decided(StabilityStatus s) { return s != StabilityStatus::Undetermined; }

} // namespace

std::uint64_t good_prime_from(const Arrangement& a, const IntersectionLattice& lattice, std::uint64_t p, int attempts) {
  for (int tried = 0; tried < attempts; ++p) {
    if (!is_prime(p)) {
      continue;
    }
    ++tried;
    if (has_good_reduction(a, lattice, p)) {
      return p;
    }
  }
  return 0;
}

StabilityVerdict stability_of(const Arrangement& a, const IntersectionLattice& lattice, const AnalysisOptions& options) {
  const auto tensor = try_tensor(a);
  return classify(a, lattice, tensor ? &*tensor : nullptr, ClassifyOptions{options.literature_rules});
}

Json invariants_report(const Arrangement& a, const IntersectionLattice& lattice) {
  Json out;
  const PoincareData pd = poincare(lattice);
  out["poincare"] = poincare_json(pd);
  out["chern"] = chern_json(chern(a, lattice));
  if (a.n() == 2) {
    out["delta"] = delta_json(lattice);
    out["local"] = local_json(lattice);
    if (a.m() >= 4) {
      const H0Values h = h0_values(lattice);
      out["h0"] = Json{{"h0_tilde", h.h0_tilde}, {"h0_log", h.h0_log}};
      out["discriminant"] = discriminant_value(lattice);
    }
  }
  return out;
}

Json analyze_report(const Arrangement& a, const AnalysisOptions& options) {
  const IntersectionLattice lattice = build_lattice(a);
  Json out;
  out["arrangement"] = arrangement_to_json(a);
  out["arrangement"]["m"] = a.m();
  out["lattice"] = lattice_summary_json(lattice);
  const Json inv = invariants_report(a, lattice);
  for (const auto& [key, value] : inv.items()) {
    out[key] = value;
  }

  std::optional<StabilityVerdict> verdict;
  try {
    verdict = stability_of(a, lattice, options);
    out["stability"] = stability_json(*verdict);
  } catch (const PreconditionError& e) {
    out["stability"] = unavailable(e.what());
  }
  if (verdict) {
    try {
      out["torelli"] = torelli_json(torelli_verdict(a, lattice, *verdict, TorelliOptions{options.max_subsets}));
    } catch (const PreconditionError& e) {
      out["torelli"] = unavailable(e.what());
    }
  } else {
    out["torelli"] = unavailable("no stability verdict");
  }
  out["gale"] = gale_json(a);
  out["oracles"] = Json{{"finite_field", oracle_json(a, lattice, poincare(lattice), options.primes)}};
  return out;
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
  case CheckStatus::Pass:
    return "pass";
  case CheckStatus::Fail:
    return "fail";
  case CheckStatus::Skip:
    return "skip";
  }
  return "?";
}

bool VerifyReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

VerifyReport verify(const Arrangement& a, const IntersectionLattice& lattice, const AnalysisOptions& options) {
  VerifyReport report;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
  };
  auto skip = [&](std::string name, std::string detail) {
    report.checks.push_back({std::move(name), CheckStatus::Skip, std::move(detail)});
  };
  const std::size_t n = a.n();
  const std::size_t m = a.m();

  {
    std::size_t rank0 = 0;
    bool ok = true;
    for (std::size_t i = 0; i < lattice.flats.size(); ++i) {
      const Flat& f = lattice.flats[i];
      if (f.rank == 0) {
        ++rank0;
        ok = ok && lattice.mobius[i] == 1;
      } else if (f.rank == 1) {
        ok = ok && f.s() == 1 && lattice.mobius[i] == -1;
      }
    }
    add("mobius_normalization", ok && rank0 == 1, "one rank-0 flat with mu = 1; every rank-1 flat a single hyperplane with mu = -1");
  }

  const PoincareData pd = poincare(lattice);
  for (std::uint64_t requested : options.primes) {
    const std::string name = "finite_field_p" + std::to_string(requested);
    const std::uint64_t p = good_prime_from(a, lattice, requested);
    if (p == 0) {
      add(name, false, "the lattice does not survive reduction at any prime tried from " + std::to_string(requested));
      continue;
    }
    const Integer count(std::to_string(count_complement_points(a, p)));
    const Integer expected = characteristic_value(pd, n, p);
    std::string detail = "count " + to_string(count) + ", sum mu(x) p^(n+1-rank x) = " + to_string(expected);
    if (p != requested) {
      detail += " (degenerate reduction mod " + std::to_string(requested) + "; used p = " + std::to_string(p) + ")";
    }
    add(name, count == expected, detail);
  }

  if (n == 2) {
    long pairs = 0;
    for (std::size_t i : lattice.flats_of_rank(2)) {
      pairs += binomial(static_cast<long>(lattice.flats[i].s()), 2).get_si();
    }
    const long cm2 = binomial(static_cast<long>(m), 2).get_si();
    add("pair_count", pairs == cm2, "sum C(s,2) = " + std::to_string(pairs) + ", C(m,2) = " + std::to_string(cm2));

    bool jm = true;
    long sum_s1 = 0;
    long sum_delta = 0;
    for (std::size_t i : lattice.flats_of_rank(2)) {
      const long s = static_cast<long>(lattice.flats[i].s());
      const long milnor = (s - 1) * (s - 1);
      const long delta = s * (s - 1) / 2;
      jm = jm && milnor == 2 * delta - s + 1;
      sum_s1 += s - 1;
      sum_delta += (s - 1) * (s - 2) / 2;
    }
    add("jung_milnor", jm, "mu = 2 delta - r + 1 at every point (mu = (s-1)^2, delta = C(s,2), r = s)");
    add("combinatorial_identity", cm2 - sum_s1 == sum_delta,
        "C(m,2) - sum(s-1) = " + std::to_string(cm2 - sum_s1) + ", sum C(s-1,2) = " + std::to_string(sum_delta));
  } else {
    skip("jung_milnor", "line arrangements only");
    skip("combinatorial_identity", "line arrangements only");
  }

  if (m >= n + 3 && is_essential(a)) {
    try {
      const GaleBijectionReport g = verify_gale_bijection(a);
      add("gale_bijection", g.holds,
          "missing " + std::to_string(g.missing_in_dual.size()) + ", extra " + std::to_string(g.extra_in_dual.size()));
    } catch (const PreconditionError& e) {
      skip("gale_bijection", e.what());
    }
  } else {
    skip("gale_bijection", "needs an essential arrangement with m >= n+3");
  }

  const ChernData cd = chern(a, lattice);
  if (cd.steiner) {
    const bool round_trip = twist_by_minus_one(cd.steiner->twisted_ct, n) == cd.steiner->ct;
    add("twist_identity", cd.steiner->twist_identity_holds && round_trip,
        "c_t(F(1)) = sum c_i t^i (1+t)^(r-i) on the Steiner resolution, and back");
  } else {
    skip("twist_identity", cd.steiner_unavailable);
  }

  if (n == 2 && m >= 4) {
    const StabilityVerdict v = stability_of(a, lattice, options);
    if (semistable(v.status)) {
      const long delta = delta_invariant(lattice).total;
      const Rational bound = ratio(static_cast<long>((m - 1) * (m - 3)), 4);
      std::string detail = "delta = " + std::to_string(delta) + ", (m-1)(m-3)/4 = " + to_string(bound);
      const Rational fifth = ratio(static_cast<long>((m - 1) * (m - 3)), 5);
      if (Rational(delta) > fifth) {
        detail += "; exceeds (m-1)(m-3)/5 = " + to_string(fifth) +
                  ", a semi-stable counterexample to the bound with denominator 5";
      }
      add("delta_bound", Rational(delta) <= bound, detail);
    } else {
      skip("delta_bound", std::string("stability status ") + std::string(to_string(v.status)));
    }
  } else {
    skip("delta_bound", "line arrangements with m >= 4 only");
  }
  return report;
}

Json verify_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const Check& c : r.checks) {
    checks.push_back(Json{{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
  }
  return Json{{"passed", r.all_passed()}, {"checks", std::move(checks)}};
}

Json conjecture_report(const Arrangement& a, const AnalysisOptions& options, bool& counterexample) {
  counterexample = false;
  gale_configuration(a); // precondition check
  const StabilityVerdict primal = stability_of(a, build_lattice(a), options);
  Json out;
  out["arrangement"] = Json{{"status", std::string(to_string(primal.status))}, {"stability", stability_json(primal)}};
  std::optional<Arrangement> dual;
  try {
    dual = gale_dual(a);
  } catch (const PreconditionError& e) {
    out["associated"] = unavailable(e.what());
    out["agreement"] = "undetermined";
    out["note"] = "the associated configuration has coincident points, so it is not an arrangement of distinct hyperplanes";
    return out;
  }
  const StabilityVerdict second = stability_of(*dual, build_lattice(*dual), options);
  out["associated"] = Json{{"arrangement", arrangement_to_json(*dual)},
                           {"status", std::string(to_string(second.status))},
                           {"stability", stability_json(second)}};
  if (decided(primal.status) && decided(second.status)) {
    const bool agree = (primal.status == StabilityStatus::Stable) == (second.status == StabilityStatus::Stable);
    out["agreement"] = agree ? "agree" : "disagree";
    counterexample = !agree;
    if (!agree) {
      out["note"] = "COUNTEREXAMPLE: stability of A and of its associated arrangement differ";
    }
  } else {
    out["agreement"] = "undetermined";
  }
  return out;
}

} // namespace arrinv
