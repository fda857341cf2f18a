#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "arrinv/arrangement.hpp"
#include "arrinv/fixtures.hpp"
#include "arrinv/invariants.hpp"
#include "arrinv/lattice.hpp"
#include "arrinv/stability.hpp"
#include "arrinv/steiner.hpp"
#include "arrinv/torelli.hpp"

namespace arrinv {

using Json = nlohmann::ordered_json;

/// {"n": n, "hyperplanes": [[c0, ..., cn], ...]} with integer or "p/q"
/// string coefficients. Keys "name" and "description" are tolerated.
Arrangement arrangement_from_json(const nlohmann::json& doc);

/// Parses JSON text; syntax errors carry line and column.
Arrangement parse_arrangement_text(std::string_view text);

/// Reads a file. A missing or unreadable file is a ValidationError.
Arrangement load_arrangement(const std::string& path);

Json arrangement_to_json(const Arrangement& a);
Json fixture_to_json(const Fixture& f);

Json rational_json(const Rational& q);
Json integer_json(const Integer& z);
Json labels_json(const std::vector<std::size_t>& indices); // 1-based
Json matrix_json(const RationalMatrix& m);
Json polynomial_json(const TruncatedPolynomial& p);

Json flat_json(const IntersectionLattice& lattice, std::size_t index);
Json lattice_json(const IntersectionLattice& lattice);
Json lattice_summary_json(const IntersectionLattice& lattice);
Json poincare_json(const PoincareData& p);
Json chern_json(const ChernData& c);
Json witness_json(const Witness& w);
Json stability_json(const StabilityVerdict& v);
Json conic_json(const ConicResult& c);
Json rnc_json(const RncResult& r);
Json torelli_json(const TorelliVerdict& v);
Json tensor_json(const SteinerTensor& t);

/// Indented key/value rendering of a JSON document for --pretty.
std::string render_pretty(const Json& doc);

} // namespace arrinv
