#include "arrinv/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace arrinv {

namespace {

Rational coefficient_from_json(const nlohmann::json& v, std::size_t row, std::size_t col) {
  const std::string where = "hyperplane " + std::to_string(row + 1) + ", coefficient " + std::to_string(col + 1);
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational(Integer(std::to_string(v.get<std::uint64_t>())))
                                  : Rational(Integer(std::to_string(v.get<std::int64_t>())));
  }
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  throw ValidationError(where + ": expected an integer or a \"p/q\" string, got " + v.dump());
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

} // namespace

Arrangement arrangement_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw ValidationError("input must be a JSON object with keys \"n\" and \"hyperplanes\"");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "hyperplanes" && key != "name" && key != "description") {
      throw ValidationError("unknown key \"" + key + "\"");
    }
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
    throw ValidationError("\"n\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(doc["n"].get<long long>());
  if (!doc.contains("hyperplanes") || !doc["hyperplanes"].is_array()) {
    throw ValidationError("\"hyperplanes\" must be an array of coefficient arrays");
  }
  std::vector<std::vector<Rational>> rows;
  const auto& hs = doc["hyperplanes"];
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (!hs[i].is_array()) {
      throw ValidationError("hyperplane " + std::to_string(i + 1) + ": expected an array of coefficients");
    }
    std::vector<Rational> row;
    for (std::size_t j = 0; j < hs[i].size(); ++j) {
      row.push_back(coefficient_from_json(hs[i][j], i, j));
    }
    rows.push_back(std::move(row));
  }
  return parse_arrangement(n, rows);
}

Arrangement parse_arrangement_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string message = e.what();
    // Drop the library's own "[json.exception...] parse error at ..." prefix.
    if (auto pos = message.find(": "); pos != std::string::npos) {
      message = message.substr(pos + 2);
    }
    throw ValidationError("JSON syntax error at line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ": " + message);
  }
  return arrangement_from_json(doc);
}

Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open input file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_arrangement_text(buffer.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) {
    return z.get_si();
  }
  return to_string(z);
}

Json rational_json(const Rational& q) { return to_string(q); }

Json labels_json(const std::vector<std::size_t>& indices) {
  Json out = Json::array();
  for (std::size_t i : indices) {
    out.push_back(i + 1);
  }
  return out;
}

Json matrix_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(rational_json(m(r, c)));
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json polynomial_json(const TruncatedPolynomial& p) {
  Json coeffs = Json::array();
  for (const Integer& c : p.coefficients()) {
    coeffs.push_back(integer_json(c));
  }
  return Json{{"coefficients", std::move(coeffs)}, {"text", p.to_string()}};
}

Json arrangement_to_json(const Arrangement& a) {
  Json hs = Json::array();
  for (const LinearForm& f : a.forms()) {
    Json row = Json::array();
    for (const Integer& c : f.coefficients()) {
      row.push_back(integer_json(c));
    }
    hs.push_back(std::move(row));
  }
  return Json{{"n", a.n()}, {"hyperplanes", std::move(hs)}};
}

Json fixture_to_json(const Fixture& f) {
  Json hs = Json::array();
  for (const auto& row : f.hyperplanes) {
    hs.push_back(row);
  }
  return Json{{"name", f.name}, {"description", f.description}, {"n", f.n}, {"hyperplanes", std::move(hs)}};
}

Json flat_json(const IntersectionLattice& lattice, std::size_t index) {
  const Flat& f = lattice.flats[index];
  return Json{{"indices", labels_json(f.indices)}, {"rank", f.rank}, {"s", f.s()}, {"mobius", lattice.mobius[index]}};
}

Json lattice_json(const IntersectionLattice& lattice) {
  Json out = Json::array();
  for (std::size_t i = 0; i < lattice.flats.size(); ++i) {
    out.push_back(flat_json(lattice, i));
  }
  return out;
}

Json lattice_summary_json(const IntersectionLattice& lattice) {
  Json ranks = Json::array();
  for (std::size_t r = 0; r <= lattice.n; ++r) {
    const auto flats = lattice.flats_of_rank(r);
    if (flats.empty()) {
      continue;
    }
    std::map<std::size_t, std::size_t> by_s;
    for (std::size_t i : flats) {
      ++by_s[lattice.flats[i].s()];
    }
    Json mult = Json::array();
    for (const auto& [s, count] : by_s) {
      mult.push_back(Json{{"s", s}, {"count", count}});
    }
    ranks.push_back(Json{{"rank", r}, {"count", flats.size()}, {"multiplicities", std::move(mult)}});
  }
  const CrossingClassification cc = classify_crossing(lattice);
  Json crossing{{"type", std::string(to_string(cc.type))}};
  crossing["witness"] = cc.witness ? flat_json(lattice, *cc.witness) : Json(nullptr);
  return Json{{"flat_count", lattice.flats.size()}, {"ranks", std::move(ranks)}, {"crossing", std::move(crossing)}};
}

Json poincare_json(const PoincareData& p) {
  return Json{{"projective", polynomial_json(p.projective)}, {"central", polynomial_json(p.central)}};
}

Json chern_json(const ChernData& c) {
  Json out;
  if (c.steiner) {
    out["steiner"] = Json{{"ct", polynomial_json(c.steiner->ct)},
                          {"twisted_ct", polynomial_json(c.steiner->twisted_ct)},
                          {"twist_identity_holds", c.steiner->twist_identity_holds}};
  } else {
    out["steiner"] = nullptr;
    out["steiner_unavailable"] = c.steiner_unavailable;
  }
  out["log_twisted_ct"] = polynomial_json(c.logfree_twisted_ct);
  out["log_ct"] = polynomial_json(c.logfree_ct);
  out["locally_free"] = std::string(to_string(c.locally_free));
  if (c.n2_c1 && c.n2_c2) {
    out["c1"] = *c.n2_c1;
    out["c2"] = *c.n2_c2;
  }
  return out;
}

Json witness_json(const Witness& w) {
  Json out{{"kind", std::string(to_string(w.kind))}};
  if (!w.flat_indices.empty()) {
    out["flat"] = Json{{"indices", labels_json(w.flat_indices)}, {"rank", w.flat_rank}};
  }
  out["lhs"] = rational_json(w.lhs);
  out["rhs"] = rational_json(w.rhs);
  out["strict"] = w.strict;
  out["detail"] = w.detail;
  return out;
}

Json stability_json(const StabilityVerdict& v) {
  Json witnesses = Json::array();
  for (const Witness& w : v.witnesses) {
    witnesses.push_back(witness_json(w));
  }
  Json rules = Json::array();
  for (const RuleRecord& r : v.rules) {
    rules.push_back(Json{{"id", r.id}, {"description", r.description}, {"literature", r.literature}});
  }
  return Json{{"status", std::string(to_string(v.status))}, {"witnesses", std::move(witnesses)}, {"rules", std::move(rules)}};
}

Json conic_json(const ConicResult& c) {
  Json out{{"type", "conic"}, {"kernel_dim", c.kernel_dim}};
  if (c.conic) {
    Json coeffs = Json::array();
    for (const Integer& z : *c.conic) {
      coeffs.push_back(integer_json(z));
    }
    out["coefficients"] = std::move(coeffs);
    out["monomials"] = Json::array({"x^2", "xy", "xz", "y^2", "yz", "z^2"});
    out["classification"] = std::string(to_string(*c.classification));
    if (c.vertex) {
      Json v = Json::array();
      for (const Integer& z : primitive_integer_vector(*c.vertex)) {
        v.push_back(integer_json(z));
      }
      out["vertex"] = std::move(v);
    }
    out["all_points_nonsingular"] = c.all_points_nonsingular;
  }
  return out;
}

Json rnc_json(const RncResult& r) {
  Json lambda = Json::array();
  for (const Rational& q : r.lambda) {
    lambda.push_back(rational_json(q));
  }
  return Json{{"type", "rational_normal_curve"},
              {"verdict", std::string(to_string(r.verdict))},
              {"frame", labels_json(r.frame)},
              {"lambda", std::move(lambda)},
              {"detail", r.detail}};
}

Json torelli_json(const TorelliVerdict& v) {
  Json out{{"status", std::string(to_string(v.status))}, {"rule", v.rule}, {"witness_subset", labels_json(v.witness_subset)}};
  if (v.conic) {
    out["curve"] = conic_json(*v.conic);
  } else if (v.rnc) {
    out["curve"] = rnc_json(*v.rnc);
  } else {
    out["curve"] = nullptr;
  }
  out["evidence"] = v.evidence;
  return out;
}

Json tensor_json(const SteinerTensor& t) {
  Json slices = Json::array();
  for (const auto& s : t.slices) {
    slices.push_back(matrix_json(s));
  }
  return Json{{"m", t.m},
              {"n", t.n},
              {"u_basis", matrix_json(t.u_basis)},
              {"w_basis", matrix_json(t.w_basis)},
              {"slices", std::move(slices)}};
}

namespace {

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) {
    return false;
  }
  for (const auto& e : j) {
    if (e.is_structured()) {
      return false;
    }
  }
  return true;
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const Json& j, const std::string& indent, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_primitive()) {
        out << indent << key << ": " << scalar_text(value) << '\n';
      } else if (is_scalar_array(value)) {
        out << indent << key << ": [";
        for (std::size_t i = 0; i < value.size(); ++i) {
          out << (i ? ", " : "") << scalar_text(value[i]);
        }
        out << "]\n";
      } else {
        out << indent << key << ":\n";
        render(value, indent + "  ", out);
      }
    }
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& e : j) {
      if (e.is_primitive() || is_scalar_array(e)) {
        out << indent << "- " << (e.is_primitive() ? scalar_text(e) : e.dump()) << '\n';
      } else {
        out << indent << "[" << ++i << "]\n";
        render(e, indent + "  ", out);
      }
    }
  } else {
    out << indent << scalar_text(j) << '\n';
  }
}

} // namespace

std::string render_pretty(const Json& doc) {
  std::ostringstream out;
  render(doc, "", out);
  return out.str();
}

} // namespace arrinv
