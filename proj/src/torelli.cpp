#include "arrinv/torelli.hpp"

#include <algorithm>
#include <set>

#include "arrinv/steiner.hpp"

namespace arrinv {

RationalMatrix DualConfiguration::as_matrix() const {
  return RationalMatrix::from_rows(points, n + 1);
}

DualConfiguration dual_points(const Arrangement& a) {
  DualConfiguration out;
  out.n = a.n();
  for (const LinearForm& f : a.forms()) {
    out.points.emplace_back(f.coefficients().begin(), f.coefficients().end());
  }
  return out;
}

std::string_view to_string(ConicClass c) {
  switch (c) {
  case ConicClass::Nonsingular:
    return "Nonsingular";
  case ConicClass::TwoDistinctLines:
    return "TwoDistinctLines";
  case ConicClass::DoubleLine:
    return "DoubleLine";
  }
  return "?";
}

std::string_view to_string(RncVerdict v) {
  switch (v) {
  case RncVerdict::OnSmoothRNC:
    return "OnSmoothRNC";
  case RncVerdict::NotOnSmoothRNC:
    return "NotOnSmoothRNC";
  case RncVerdict::DegenerateConfiguration:
    return "DegenerateConfiguration";
  }
  return "?";
}

std::string_view to_string(TorelliStatus s) {
  switch (s) {
  case TorelliStatus::TorelliProved:
    return "TorelliProved";
  case TorelliStatus::NotTorelliProved:
    return "NotTorelliProved";
  case TorelliStatus::TorelliConjectured:
    return "TorelliConjectured";
  case TorelliStatus::NotTorelliConjectured:
    return "NotTorelliConjectured";
  case TorelliStatus::Unknown:
    return "Unknown";
  }
  return "?";
}

namespace {

RationalMatrix symmetric_matrix(std::span<const Rational> c) {
  const Rational half(1, 2);
  return RationalMatrix{{c[0], c[1] * half, c[2] * half},
                        {c[1] * half, c[3], c[4] * half},
                        {c[2] * half, c[4] * half, c[5]}};
}

std::vector<Rational> veronese(std::span<const Rational> p) {
  return {p[0] * p[0], p[0] * p[1], p[0] * p[2], p[1] * p[1], p[1] * p[2], p[2] * p[2]};
}

bool proportional(std::span<const Rational> a, std::span<const Rational> b) {
  RationalMatrix m(0, a.size());
  m.append_row(a);
  m.append_row(b);
  return rank(m) < 2;
}

struct ConicCandidate {
  std::vector<Rational> coefficients;
  ConicClass cls = ConicClass::DoubleLine;
  std::optional<std::vector<Rational>> vertex;
  bool all_nonsingular = false;
};

ConicCandidate inspect(std::vector<Rational> coefficients, const DualConfiguration& p) {
  ConicCandidate c;
  c.cls = classify_conic(coefficients);
  switch (c.cls) {
  case ConicClass::Nonsingular:
    c.all_nonsingular = true;
    break;
  case ConicClass::TwoDistinctLines: {
    const RationalMatrix k = kernel_basis(symmetric_matrix(coefficients));
    std::vector<Rational> v(k.row(0).begin(), k.row(0).end());
    c.all_nonsingular = std::none_of(p.points.begin(), p.points.end(),
                                     [&](const std::vector<Rational>& q) { return proportional(q, v); });
    c.vertex = std::move(v);
    break;
  }
  case ConicClass::DoubleLine:
    c.all_nonsingular = false;
    break;
  }
  c.coefficients = std::move(coefficients);
  return c;
}

} // namespace

ConicClass classify_conic(std::span<const Rational> coefficients) {
  switch (rank(symmetric_matrix(coefficients))) {
  case 3:
    return ConicClass::Nonsingular;
  case 2:
    return ConicClass::TwoDistinctLines;
  case 1:
    return ConicClass::DoubleLine;
  default:
    throw PreconditionError("classify_conic: zero conic");
  }
}

ConicResult conic_test(const DualConfiguration& p) {
  if (p.n != 2) {
    throw PreconditionError("conic_test needs points of the dual plane (n = 2), got n = " + std::to_string(p.n));
  }
  RationalMatrix ver(0, 6);
  for (const auto& q : p.points) {
    ver.append_row(veronese(q));
  }
  ConicResult out;
  out.kernel = kernel_basis(ver);
  out.kernel_dim = out.kernel.rows();
  if (out.kernel_dim == 0) {
    return out;
  }

  std::optional<ConicCandidate> chosen;
  if (out.kernel_dim == 1) {
    chosen = inspect({out.kernel.row(0).begin(), out.kernel.row(0).end()}, p);
  } else {
    // Search small integer combinations of the basis for a member carrying
    // every point on its nonsingular locus, preferring a smooth one.
    static constexpr long kSteps[] = {0, 1, -1, 2, -2};
    const std::size_t k = out.kernel_dim;
    std::vector<std::size_t> digits(k, 0);
    std::optional<ConicCandidate> singular_ok;
    std::optional<ConicCandidate> first;
    while (true) {
      std::size_t d = 0;
      while (d < k && ++digits[d] == std::size(kSteps)) {
        digits[d++] = 0;
      }
      if (d == k) {
        break;
      }
      std::vector<Rational> coeffs(6, Rational(0));
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t c = 0; c < 6; ++c) {
          coeffs[c] += kSteps[digits[j]] * out.kernel(j, c);
        }
      }
      ConicCandidate cand = inspect(std::move(coeffs), p);
      if (!first) {
        first = cand;
      }
      if (cand.cls == ConicClass::Nonsingular) {
        chosen = std::move(cand);
        break;
      }
      if (cand.all_nonsingular && !singular_ok) {
        singular_ok = std::move(cand);
      }
    }
    if (!chosen) {
      chosen = singular_ok ? std::move(singular_ok) : std::move(first);
    }
  }
  out.conic = primitive_integer_vector(chosen->coefficients);
  out.classification = chosen->cls;
  out.vertex = chosen->vertex;
  out.all_points_nonsingular = chosen->all_nonsingular;
  return out;
}

namespace {

bool in_general_position(const RationalMatrix& pts, const std::vector<std::size_t>& subset, std::size_t dim) {
  // Every dim-element subset (or the whole set, when smaller) is independent.
  const std::size_t k = std::min(dim, subset.size());
  std::vector<bool> mask(subset.size(), false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (mask[i]) {
        rows.push_back(subset[i]);
      }
    }
    if (rank(pts.select_rows(rows)) < k) {
      return false;
    }
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return true;
}

std::optional<std::vector<std::size_t>> first_frame(const RationalMatrix& pts, std::size_t n) {
  const std::size_t m = pts.rows();
  const std::size_t k = n + 2;
  if (m < k) {
    return std::nullopt;
  }
  std::vector<bool> mask(m, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask[i]) {
        subset.push_back(i);
      }
    }
    if (in_general_position(pts, subset, n + 1)) {
      return subset;
    }
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return std::nullopt;
}

std::string labels(const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    s += (i ? "," : "") + std::to_string(idx[i] + 1);
  }
  return s + "}";
}

} // namespace

RncResult rnc_test(const DualConfiguration& p) {
  const std::size_t n = p.n;
  if (n < 3) {
    throw PreconditionError("rnc_test needs a dual space of dimension n >= 3, got n = " + std::to_string(n));
  }
  const RationalMatrix pts = p.as_matrix();
  const std::size_t m = pts.rows();
  RncResult out;

  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) {
    all[i] = i;
  }
  if (m <= n + 2) {
    if (in_general_position(pts, all, n + 1)) {
      out.verdict = RncVerdict::OnSmoothRNC;
      out.detail = "at most n+2 points in linear general position lie on a smooth rational normal curve";
    } else {
      out.verdict = RncVerdict::DegenerateConfiguration;
      out.detail = "points are not in linear general position";
    }
    return out;
  }

  const auto frame = first_frame(pts, n);
  if (!frame) {
    out.verdict = RncVerdict::NotOnSmoothRNC;
    out.detail = "no n+2 of the points are in linear general position, but any n+1 points of a smooth "
                 "rational normal curve are independent";
    return out;
  }
  out.frame = *frame;

  // Projective transformation sending the frame to e_0..e_n, (1,...,1).
  RationalMatrix basis(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t r = 0; r <= n; ++r) {
      basis(r, i) = pts((*frame)[i], r);
    }
  }
  const std::vector<Rational> unit = solve(basis, pts.row((*frame)[n + 1]));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t r = 0; r <= n; ++r) {
      basis(r, i) *= unit[i];
    }
  }
  const RationalMatrix to_frame = inverse(basis);

  RationalMatrix span(0, n + 1);
  span.append_row(std::vector<Rational>(n + 1, Rational(1)));
  std::optional<std::vector<Rational>> direction;
  for (std::size_t j = 0; j < m; ++j) {
    if (std::find(frame->begin(), frame->end(), j) != frame->end()) {
      continue;
    }
    std::vector<Rational> w(n + 1);
    for (std::size_t r = 0; r <= n; ++r) {
      Rational q = 0;
      for (std::size_t c = 0; c <= n; ++c) {
        q += to_frame(r, c) * pts(j, c);
      }
      if (q == 0) {
        out.verdict = RncVerdict::NotOnSmoothRNC;
        out.detail = "point " + std::to_string(j + 1) + " lies on the hyperplane spanned by n frame points " +
                     "(frame " + labels(*frame) + ")";
        return out;
      }
      w[r] = 1 / q;
    }
    span.append_row(w);
    if (rank(span) > 2) {
      out.verdict = RncVerdict::NotOnSmoothRNC;
      out.detail = "reciprocal coordinates of point " + std::to_string(j + 1) +
                   " leave the pencil spanned by (1,...,1) and the earlier points (frame " + labels(*frame) + ")";
      return out;
    }
    if (!direction && rank(span) == 2) {
      direction = w;
    }
  }
  if (!direction) {
    out.verdict = RncVerdict::NotOnSmoothRNC;
    out.detail = "remaining points coincide with the unit point of the frame";
    return out;
  }
  std::set<Rational> distinct(direction->begin(), direction->end());
  if (distinct.size() != n + 1) {
    out.verdict = RncVerdict::NotOnSmoothRNC;
    out.detail = "the pencil of reciprocal coordinates has repeated entries, so the only curves through the "
                 "points are degenerate";
    return out;
  }
  out.verdict = RncVerdict::OnSmoothRNC;
  out.lambda = *direction;
  out.detail = "all points lie on t -> (1/(t - lambda_i)) in the coordinates of frame " + labels(*frame);
  return out;
}

namespace {

bool off_curve(const DualConfiguration& sub) {
  if (sub.n == 2) {
    return conic_test(sub).kernel_dim == 0;
  }
  return rnc_test(sub).verdict == RncVerdict::NotOnSmoothRNC;
}

DualConfiguration restrict_to(const DualConfiguration& p, const std::vector<std::size_t>& subset) {
  DualConfiguration out;
  out.n = p.n;
  for (std::size_t i : subset) {
    out.points.push_back(p.points[i]);
  }
  return out;
}

} // namespace

TorelliVerdict torelli_verdict(const Arrangement& a, const IntersectionLattice& lattice,
                               const StabilityVerdict& stability, const TorelliOptions& options) {
  const std::size_t n = a.n();
  const std::size_t m = a.m();
  TorelliVerdict v;
  if (stability.status == StabilityStatus::Unstable) {
    v.status = TorelliStatus::Unknown;
    v.rule = "unstable";
    v.evidence.push_back("the arrangement is unstable; Torelli rules apply to semi-stable arrangements only");
    return v;
  }
  if (stability.status == StabilityStatus::Undetermined) {
    v.evidence.push_back("semi-stability is not established; verdicts below assume it");
  }
  const DualConfiguration dual = dual_points(a);

  // R1: a generic sub-arrangement whose dual points avoid every curve of the
  // relevant kind. Smaller sizes always lie on one.
  if (n >= 2) {
    const std::size_t min_size = n + 4;
    const DependentSets deps = dependent_sets(a);
    std::size_t examined = 0;
    bool capped = false;
    for (std::size_t k = min_size; k <= m && !capped && v.witness_subset.empty(); ++k) {
      std::vector<bool> mask(m, false);
      std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
      do {
        if (++examined > options.max_subsets) {
          capped = true;
          break;
        }
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < m; ++i) {
          if (mask[i]) {
            subset.push_back(i);
          }
        }
        const bool generic = std::none_of(deps.sets.begin(), deps.sets.end(), [&](const auto& d) {
          return std::includes(subset.begin(), subset.end(), d.begin(), d.end());
        });
        if (generic && off_curve(restrict_to(dual, subset))) {
          v.witness_subset = subset;
          break;
        }
      } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    if (capped) {
      v.evidence.push_back("R1 subset search stopped after " + std::to_string(options.max_subsets) + " subsets");
    }
    if (!v.witness_subset.empty()) {
      v.status = TorelliStatus::TorelliProved;
      v.rule = "R1";
      v.evidence.push_back("generic sub-arrangement " + labels(v.witness_subset) +
                           (n == 2 ? " has dual points on no conic" : " has dual points on no smooth rational normal curve"));
      if (n == 2) {
        v.conic = conic_test(restrict_to(dual, v.witness_subset));
      } else {
        v.rnc = rnc_test(restrict_to(dual, v.witness_subset));
      }
      return v;
    }
  }

  if (n == 2) {
    const ConicResult conic = conic_test(dual);
    v.conic = conic;
    if (m == 6) {
      v.rule = "R2";
      if (conic.kernel_dim >= 1 && conic.all_points_nonsingular) {
        v.status = TorelliStatus::NotTorelliProved;
        v.evidence.push_back("all six dual points are nonsingular points of a common conic");
      } else {
        v.status = TorelliStatus::TorelliProved;
        v.evidence.push_back("the six dual points are not nonsingular points of a common conic");
      }
      return v;
    }
    if (m == 5) {
      v.rule = "R3";
      v.status = TorelliStatus::NotTorelliProved;
      v.evidence.push_back("semi-stable arrangements of five lines are never Torelli");
      return v;
    }
    if (conic.kernel_dim >= 1 && conic.all_points_nonsingular) {
      v.rule = "R4";
      v.status = TorelliStatus::NotTorelliConjectured;
      v.evidence.push_back("dual points lie on the nonsingular locus of a stable conic");
      return v;
    }
    v.rule = "R5";
    v.status = TorelliStatus::TorelliConjectured;
    v.evidence.push_back("dual points lie on no stable conic's nonsingular locus");
    return v;
  }

  if (n == 1) {
    v.rule = "R4";
    v.status = TorelliStatus::NotTorelliConjectured;
    v.evidence.push_back("every configuration of P^1 lies on the line itself");
    return v;
  }

  const RncResult rnc = rnc_test(dual);
  v.rnc = rnc;
  if (rnc.verdict == RncVerdict::OnSmoothRNC) {
    v.rule = "R4";
    v.status = TorelliStatus::NotTorelliConjectured;
    v.evidence.push_back("dual points lie on a smooth rational normal curve");
    return v;
  }
  v.rule = "R5";
  v.status = TorelliStatus::Unknown;
  v.evidence.push_back("dual points avoid every smooth rational normal curve; reducible stable curves are not decided for n >= 3");
  (void)lattice;
  return v;
}

} // namespace arrinv
