#include "fanoscape/wps.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

#include "fanoscape/errors.hpp"

namespace fanoscape {

HypersurfaceCandidate HypersurfaceCandidate::make(const std::vector<long>& weights, long degree) {
  if (weights.size() != 5) throw InvalidArgument("a candidate needs five weights");
  if (weights[0] != 1) throw InvalidArgument("the first weight must be 1");
  HypersurfaceCandidate c;
  for (std::size_t i = 0; i < 5; ++i) {
    if (weights[i] == 0) throw ZeroWeight("weights must be positive");
    if (weights[i] < 0) throw InvalidArgument("weights must be positive");
    c.weights[i] = weights[i];
  }
  std::sort(c.weights.begin() + 1, c.weights.end());
  if (degree != c.weights[1] + c.weights[2] + c.weights[3] + c.weights[4]) {
    throw WeightMismatch("degree must equal a1 + a2 + a3 + a4");
  }
  c.degree = degree;
  return c;
}

std::string HypersurfaceCandidate::label() const {
  std::string s = "X_" + std::to_string(degree) + "(";
  for (std::size_t i = 0; i < 5; ++i) {
    if (i) s += ",";
    s += std::to_string(weights[i]);
  }
  return s + ")";
}

// --- mirror ------------------------------------------------------------------------

LaurentPolynomial przyjalkowski_mirror(const std::vector<long>& weights, long degree) {
  if (weights.size() < 2) throw InvalidArgument("need at least two weights");
  for (long w : weights) {
    if (w == 0) throw ZeroWeight("weights must be positive");
    if (w < 0) throw InvalidArgument("weights must be positive");
  }
  // Accept both (1, a1, ..., am) with d = sum a_i and (a1, ..., am) with d = sum a_i.
  std::vector<long> tail;
  const long total = std::accumulate(weights.begin(), weights.end(), 0L);
  if (weights[0] == 1 && total - 1 == degree) {
    tail.assign(weights.begin() + 1, weights.end());
  } else if (total == degree) {
    tail = weights;
  } else {
    throw WeightMismatch("degree must equal the sum of the weights a_i");
  }
  if (tail.size() < 2) throw InvalidArgument("need at least two weights a_i");
  std::sort(tail.begin(), tail.end());
  const std::size_t n = tail.size() - 1;

  // (1 + x_1 + ... + x_n)^d / prod x_i^{a_{i+1}}, term by term.
  const Integer d_fact = factorial(static_cast<unsigned long>(degree));
  LaurentPolynomial f(n);
  std::vector<long> k(n, 0);
  std::function<void(std::size_t, long, Integer)> walk = [&](std::size_t i, long left,
                                                             const Integer& denom) {
    if (i == n) {
      LatticeVector e(n);
      for (std::size_t j = 0; j < n; ++j) e[j] = k[j] - tail[j + 1];
      f.add_term(e, Rational(d_fact / (denom * factorial(static_cast<unsigned long>(left)))));
      return;
    }
    for (long x = 0; x <= left; ++x) {
      k[i] = x;
      walk(i + 1, left - x, denom * factorial(static_cast<unsigned long>(x)));
    }
  };
  walk(0, degree, Integer(1));

  Integer shift = d_fact;
  for (long a : tail) shift /= factorial(static_cast<unsigned long>(a));
  f.add_term(LatticeVector(n), Rational(-shift));
  return f;
}

long interior_point_formula(long d) {
  if (d < 4) throw InvalidArgument("interior_point_formula needs d >= 4");
  return (d - 3) * (d - 2) * (d - 1) / 6;
}

// --- stratum monomials -------------------------------------------------------------------

namespace {

using Exponent = std::array<long, 5>;

// Exponent vector supported on `vars` with sum a_i e_i = target, if any.
bool find_monomial(long target, const std::array<long, 5>& a, const std::vector<std::size_t>& vars,
                   std::size_t pos, Exponent& out) {
  if (target == 0) {
    for (std::size_t i = pos; i < vars.size(); ++i) out[vars[i]] = 0;
    return true;
  }
  if (pos == vars.size()) return false;
  const long w = a[vars[pos]];
  if (pos + 1 == vars.size()) {
    if (target % w != 0) return false;
    out[vars[pos]] = target / w;
    return true;
  }
  long g = 0;
  for (std::size_t i = pos; i < vars.size(); ++i) g = std::gcd(g, a[vars[i]]);
  if (target % g != 0) return false;
  for (long x = target / w; x >= 0; --x) {
    out[vars[pos]] = x;
    if (find_monomial(target - x * w, a, vars, pos + 1, out)) return true;
  }
  return false;
}

std::optional<Exponent> monomial_on(long target, const std::array<long, 5>& a,
                                    const std::vector<std::size_t>& vars) {
  if (target < 0) return std::nullopt;
  Exponent e{};
  if (!find_monomial(target, a, vars, 0, e)) return std::nullopt;
  return e;
}

// Number of exponent vectors on `vars` of weighted degree target.
long count_monomials(long target, const std::array<long, 5>& a,
                     const std::vector<std::size_t>& vars, std::size_t pos = 0) {
  if (pos == vars.size()) return target == 0 ? 1 : 0;
  const long w = a[vars[pos]];
  if (pos + 1 == vars.size()) return target % w == 0 ? 1 : 0;
  long total = 0;
  for (long x = 0; x * w <= target; ++x) total += count_monomials(target - x * w, a, vars, pos + 1);
  return total;
}

std::vector<std::size_t> subset_members(unsigned mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 5; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

// Distinct e outside I, one per element of I, each admitting x_I^M x_e of degree d.
std::optional<std::vector<Exponent>> near_monomials(const HypersurfaceCandidate& c,
                                                    const std::vector<std::size_t>& vars,
                                                    unsigned mask) {
  std::vector<Exponent> found;
  for (std::size_t e = 0; e < 5 && found.size() < vars.size(); ++e) {
    if (mask & (1u << e)) continue;
    auto m = monomial_on(c.degree - c.weights[e], c.weights, vars);
    if (!m) continue;
    (*m)[e] += 1;
    found.push_back(*m);
  }
  if (found.size() < vars.size()) return std::nullopt;
  return found;
}

}  // namespace

Rational reid_tai_minimum(long r, const std::array<long, 3>& b) {
  if (r < 2) throw InvalidArgument("quotient index must be at least 2");
  Rational best;
  for (long k = 1; k < r; ++k) {
    long s = 0;
    for (long bi : b) s += ((k * bi) % r + r) % r;
    Rational age{Integer(s), Integer(r)};
    age.canonicalize();
    if (k == 1 || age < best) best = age;
  }
  return best;
}

bool is_well_formed(const HypersurfaceCandidate& c) {
  const auto& a = c.weights;
  if (std::gcd(std::gcd(a[1], a[2]), std::gcd(a[3], a[4])) != 1) return false;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      for (std::size_t k = j + 1; k < 5; ++k)
        if (c.degree % std::gcd(std::gcd(a[i], a[j]), a[k]) != 0) return false;
  for (long w : a)
    if (w == c.degree) return false;
  return true;
}

QuasismoothReport is_quasismooth(const HypersurfaceCandidate& c) {
  QuasismoothReport report;
  report.verdict = true;
  for (unsigned mask = 1; mask < 32; ++mask) {
    StratumCertificate cert;
    cert.coordinates = subset_members(mask);
    if (auto m = monomial_on(c.degree, c.weights, cert.coordinates)) {
      cert.certified = true;
      cert.monomials.push_back(*m);
    } else if (auto near = near_monomials(c, cert.coordinates, mask)) {
      cert.certified = true;
      cert.monomials = std::move(*near);
    } else {
      report.verdict = false;
    }
    report.witness.push_back(std::move(cert));
  }
  return report;
}

namespace {

bool quick_quasismooth(const HypersurfaceCandidate& c) {
  for (unsigned mask = 1; mask < 32; ++mask) {
    const auto vars = subset_members(mask);
    if (monomial_on(c.degree, c.weights, vars)) continue;
    if (!near_monomials(c, vars, mask)) return false;
  }
  return true;
}

std::string stratum_name(const HypersurfaceCandidate& c, const std::vector<std::size_t>& vars) {
  std::string s = "P(";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c.weights[vars[i]]);
  }
  return s + ")";
}

TerminalityReport terminality(const HypersurfaceCandidate& c) {
  TerminalityReport report;
  const auto& a = c.weights;
  auto fail = [&](std::string why) {
    report.verdict = false;
    if (report.non_isolated.empty()) report.non_isolated = std::move(why);
  };
  auto add_point = [&](long r, std::vector<long> local, long count) {
    std::array<long, 3> b{local[0] % r, local[1] % r, local[2] % r};
    std::sort(b.begin(), b.end());
    for (long bi : b) {
      if (std::gcd(bi, r) != 1) {
        fail("point of index " + std::to_string(r) + " is not an isolated quotient");
        return;
      }
    }
    QuotientSingularity q{r, b, reid_tai_minimum(r, b), count};
    if (q.reid_tai_minimum <= 1) report.verdict = false;
    report.singular_points.push_back(q);
  };

  report.verdict = true;
  // Coordinate 0 has weight 1, so only strata inside {1, 2, 3, 4} carry stabilizers.
  for (unsigned mask = 2; mask < 32; mask += 2) {
    const auto vars = subset_members(mask);
    long g = 0;
    for (auto i : vars) g = std::gcd(g, a[i]);
    if (g == 1) continue;
    const long n_mono = count_monomials(c.degree, a, vars);
    if (vars.size() == 1) {
      const std::size_t i = vars[0];
      if (c.degree % a[i] == 0) continue;
      std::size_t elim = 5;
      for (std::size_t e = 0; e < 5; ++e) {
        if (e != i && (c.degree - a[e]) % a[i] == 0 && c.degree >= a[e]) {
          elim = e;
          break;
        }
      }
      if (elim == 5) throw NotQuasismooth("vertex stratum without a tangent monomial");
      std::vector<long> local;
      for (std::size_t j = 0; j < 5; ++j)
        if (j != i && j != elim) local.push_back(a[j]);
      add_point(a[i], local, 1);
    } else if (vars.size() == 2) {
      if (n_mono == 0) {
        fail("general member contains the curve " + stratum_name(c, vars));
        continue;
      }
      if (n_mono == 1) continue;
      std::vector<long> local;
      for (std::size_t j = 0; j < 5; ++j)
        if (!(mask & (1u << j))) local.push_back(a[j]);
      add_point(g, local, n_mono - 1);
    } else if (n_mono != 1) {
      fail("general member meets " + stratum_name(c, vars) + " in positive dimension");
    }
  }
  return report;
}

}  // namespace

TerminalityReport is_terminal(const HypersurfaceCandidate& c) {
  if (!quick_quasismooth(c)) throw NotQuasismooth(c.label() + " is not quasismooth");
  return terminality(c);
}

std::vector<HypersurfaceCandidate> search_famous_95(long weight_bound) {
  std::vector<HypersurfaceCandidate> out;
  for (long a1 = 1; a1 <= weight_bound; ++a1)
    for (long a2 = a1; a2 <= weight_bound; ++a2)
      for (long a3 = a2; a3 <= weight_bound; ++a3)
        for (long a4 = a3; a4 <= weight_bound; ++a4) {
          HypersurfaceCandidate c;
          c.weights = {1, a1, a2, a3, a4};
          c.degree = a1 + a2 + a3 + a4;
          if (!is_well_formed(c)) continue;
          if (!quick_quasismooth(c)) continue;
          if (!terminality(c).verdict) continue;
          out.push_back(c);
        }
  std::sort(out.begin(), out.end());
  return out;
}

CandidateInvariants candidate_invariants(const HypersurfaceCandidate& c) {
  std::vector<std::int64_t> w(c.weights.begin(), c.weights.end());
  auto h = hilbert_series_complete_intersection(w, {c.degree});
  const TruncatedSeries s = h.expand(2);
  const long genus = static_cast<long>(s[1].get_num().get_si()) - 2;
  return {genus, std::move(h)};
}

}  // namespace fanoscape
