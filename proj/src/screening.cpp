#include "twoweight/screening.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace twoweight {

std::string UnitTuple::to_string() const {
  std::string s = "u=" + std::to_string(u) + " s=(";
  for (std::size_t i = 0; i < this->s.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(this->s[i]);
  }
  return s + ") n=" + std::to_string(n);
}

Verdict<std::int64_t> integrality_filter(const SrgParams& params) {
  const std::int64_t d = params.rho2 - params.rho1;
  if (d <= 0 || params.N % d != 0)
    return Verdict<std::int64_t>::reject(std::to_string(d) + " does not divide " + std::to_string(params.N));
  return Verdict<std::int64_t>::accept(params.N / d);
}

std::vector<Rational> subset_weights(const UnitTuple& tuple) {
  const std::size_t d = tuple.primes.size();
  std::vector<Rational> W(std::size_t{1} << d);
  for (std::size_t T = 0; T < W.size(); ++T) {
    Rational prod(1);
    for (std::size_t i = 0; i < d; ++i)
      if (T >> i & 1)
        prod = prod * Rational(-1, static_cast<std::int64_t>(ipow(tuple.primes[i], tuple.s[i])) - 1);
    W[T] = Rational(tuple.u) * (Rational(1) - prod);
  }
  return W;
}

std::vector<UnitTuple> unit_tuple_candidates(const SrgParams& params, const UnitTupleOptions& options) {
  std::vector<UnitTuple> out;
  if (params.m2 <= 0) return out;
  auto fac = factorize(params.N);
  UnitTuple base;
  for (auto [p, t] : fac) {
    base.primes.push_back(static_cast<int>(p));
    base.t.push_back(t);
  }
  std::vector<std::int64_t> divisors;
  for (std::int64_t u = 1; u <= params.m2; ++u)
    if (params.m2 % u == 0) divisors.push_back(u);

  std::vector<int> s(fac.size(), 1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == fac.size()) {
      std::int64_t prod = 1;
      for (std::size_t j = 0; j < s.size(); ++j) prod *= static_cast<std::int64_t>(ipow(base.primes[j], s[j])) - 1;
      for (std::int64_t u : divisors) {
        if (u % prod != 0) continue;
        if (options.full_ring && u != params.m2) continue;
        UnitTuple t = base;
        t.s = s;
        t.u = u;
        t.n = params.m2 / u;
        bool integral = true;
        for (const auto& w : subset_weights(t)) integral = integral && w.is_integer();
        if (integral) out.push_back(std::move(t));
      }
      return;
    }
    for (int v = 1; v <= base.t[i]; ++v) {
      s[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const UnitTuple& a, const UnitTuple& b) {
    return std::tie(a.u, a.s) < std::tie(b.u, b.s);
  });
  return out;
}

XtResult xT_feasible(const UnitTuple& tuple, std::int64_t n, std::int64_t w1, std::int64_t w2,
                     std::size_t max_solutions) {
  const std::size_t d = tuple.primes.size();
  if (d > 4) throw std::invalid_argument("xT_feasible supports at most four primes");
  const std::size_t D = std::size_t{1} << d;
  XtResult res;
  res.W = subset_weights(tuple);
  std::vector<Rational> c(d);
  for (std::size_t i = 0; i < d; ++i)
    c[i] = Rational(-1, static_cast<std::int64_t>(ipow(tuple.primes[i], tuple.s[i])) - 1);

  // With g(T) = sum_V x_V prod_{i in V cap T} c_i the conditions read
  // g(T) = n - target_T / u, and g = (K_1 x ... x K_d) x with K_i = [[1,1],[1,c_i]].
  const Rational u(tuple.u), nn(n);
  const std::uint64_t assignments = std::uint64_t{1} << (D - 1);
  std::vector<Rational> g(D);
  for (std::uint64_t a = 0; a < assignments; ++a) {
    ++res.assignments;
    g[0] = nn;
    for (std::size_t T = 1; T < D; ++T) g[T] = nn - Rational((a >> (T - 1) & 1) ? w2 : w1) / u;
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      const Rational det = c[i] - Rational(1);
      for (std::size_t T = 0; T < D; ++T) {
        if (T & bit) continue;
        Rational g0 = g[T], g1 = g[T | bit];
        g[T] = (c[i] * g0 - g1) / det;
        g[T | bit] = (g1 - g0) / det;
      }
    }
    bool ok = true;
    for (const auto& x : g) ok = ok && x.is_integer() && x >= Rational(0);
    if (!ok) continue;
    std::vector<std::int64_t> sol;
    for (const auto& x : g) sol.push_back(x.to_integer());
    res.solutions.push_back(std::move(sol));
    if (res.solutions.size() >= max_solutions) {
      res.truncated = true;
      break;
    }
  }
  std::sort(res.solutions.begin(), res.solutions.end());
  res.solutions.erase(std::unique(res.solutions.begin(), res.solutions.end()), res.solutions.end());
  res.feasible = !res.solutions.empty();
  return res;
}

std::vector<std::vector<std::int64_t>> xT_brute_force(const UnitTuple& tuple, std::int64_t n, std::int64_t w1,
                                                      std::int64_t w2) {
  const std::size_t D = std::size_t{1} << tuple.primes.size();
  const auto W = subset_weights(tuple);
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> x(D, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i + 1 == D) {
      x[i] = left;
      for (std::size_t T = 1; T < D; ++T) {
        Rational sum(0);
        for (std::size_t V = 0; V < D; ++V) sum = sum + Rational(x[V]) * W[V & T];
        if (sum != Rational(w1) && sum != Rational(w2)) return;
      }
      out.push_back(x);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      x[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RingSpec> candidate_rings(const UnitTuple& tuple, std::int64_t N) {
  std::vector<std::vector<RingSpec>> per_prime;
  for (std::size_t i = 0; i < tuple.primes.size(); ++i) {
    std::int64_t t = 0;
    for (std::int64_t m = N; m % tuple.primes[i] == 0; m /= tuple.primes[i]) ++t;
    std::vector<RingSpec> options;
    for (int r = tuple.s[i]; r <= std::min<std::int64_t>(t, 3); ++r) {
      CatalogConstraints cc;
      cc.minimal_ideal_exponent = tuple.s[i];
      for (auto& spec : catalog_primary_rings(tuple.primes[i], r, cc)) options.push_back(spec);
    }
    per_prime.push_back(std::move(options));
  }
  std::vector<RingSpec> out;
  RingSpec cur;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t units) {
    if (i == per_prime.size()) {
      if (units == static_cast<std::uint64_t>(tuple.u) && !cur.is_field()) out.push_back(cur);
      return;
    }
    for (const auto& spec : per_prime[i]) {
      const std::uint64_t uc = spec.unit_count();
      if (static_cast<std::uint64_t>(tuple.u) % uc != 0) continue;
      const std::size_t mark = cur.components.size();
      cur.components.insert(cur.components.end(), spec.components.begin(), spec.components.end());
      rec(i + 1, units * uc);
      cur.components.resize(mark);
    }
  };
  rec(0, 1);
  return out;
}

std::string to_string(ScreenVerdict v) {
  switch (v) {
    case ScreenVerdict::FailSpectrum: return "fail-spectrum";
    case ScreenVerdict::FailIntegrality: return "fail-integrality";
    case ScreenVerdict::FailUnitTuple: return "fail-unit-tuple";
    case ScreenVerdict::FailXt: return "fail-xT";
    case ScreenVerdict::FailRing: return "fail-ring";
    case ScreenVerdict::Candidates: return "candidates";
    case ScreenVerdict::Found: return "found";
    case ScreenVerdict::Eliminated: return "eliminated";
    case ScreenVerdict::Undecided: return "undecided";
  }
  return "?";
}

bool is_elimination(ScreenVerdict v) {
  switch (v) {
    case ScreenVerdict::FailSpectrum:
    case ScreenVerdict::FailIntegrality:
    case ScreenVerdict::FailUnitTuple:
    case ScreenVerdict::FailXt:
    case ScreenVerdict::FailRing:
    case ScreenVerdict::Eliminated: return true;
    default: return false;
  }
}

bool fourth_power_order(std::int64_t N) {
  int fourth = 0;
  for (auto [p, e] : factorize(N)) {
    if (e == 4)
      ++fourth;
    else if (e != 1)
      return false;
  }
  return fourth == 1;
}

namespace {

void set_verdict(ScreenReport& rep, ScreenVerdict v, std::string reason) {
  rep.verdict = v;
  rep.reason = std::move(reason);
}

// Stages 3-5 for rings the catalog covers.
void screen_catalog(ScreenReport& rep, const SrgParams& P, const ScreenOptions& options) {
  const std::int64_t N = rep.input.N;
  auto tuples = unit_tuple_candidates(P);
  if (tuples.empty()) return set_verdict(rep, ScreenVerdict::FailUnitTuple, "no (u, s) satisfies the divisibility conditions");

  std::uint64_t assignments = 0;
  bool any = false;
  for (auto& t : tuples) {
    TupleReport tr{t, xT_feasible(t, t.n, *rep.w1, *rep.w2), {}};
    assignments += tr.xt.assignments;
    any = any || tr.xt.feasible;
    rep.tuples.push_back(std::move(tr));
  }
  if (!any)
    return set_verdict(rep, ScreenVerdict::FailXt,
                       "no x_T solution for " + std::to_string(tuples.size()) + " tuples (" +
                           std::to_string(assignments) + " target assignments exhausted)");

  for (auto& tr : rep.tuples) {
    if (!tr.xt.feasible) continue;
    tr.rings = candidate_rings(tr.tuple, N);
    for (const auto& ring : tr.rings)
      for (auto& shape : enumerate_shapes(ring, static_cast<std::uint64_t>(N)))
        rep.candidates.push_back({tr.tuple, ring, std::move(shape), std::nullopt});
  }
  if (rep.candidates.empty())
    return set_verdict(rep, ScreenVerdict::FailRing, "no catalog ring and shape fits a feasible tuple");
  if (!options.run_search) return set_verdict(rep, ScreenVerdict::Candidates, "");

  std::map<RingSpec, RingPtr> built;
  bool found = false, undecided = false;
  for (auto& c : rep.candidates) {
    SearchOutcome out;
    if (c.ring.order() > options.max_order) {
      out.status = SearchStatus::Undecided;
      out.reason = "ring order " + std::to_string(c.ring.order()) + " exceeds bound " + std::to_string(options.max_order);
    } else {
      auto& ring = built[c.ring];
      if (!ring) ring = build_ring(c.ring, options.max_order);
      out = search_codes(P, ring, c.shape, options.search);
    }
    found = found || out.status == SearchStatus::Found;
    undecided = undecided || out.status == SearchStatus::Undecided;
    c.search = std::move(out);
  }
  if (found) return set_verdict(rep, ScreenVerdict::Found, "");
  if (undecided) return set_verdict(rep, ScreenVerdict::Undecided, "some candidate search hit a resource cap");
  set_verdict(rep, ScreenVerdict::Eliminated, "every candidate search was exhausted");
}

}  // namespace

ScreenReport screen(const ParamSet& ps, const ScreenOptions& options) {
  ScreenReport rep;
  rep.input = ps;

  auto spec = srg_spectrum(ps.N, ps.k, ps.lambda, ps.mu);
  if (!spec) {
    set_verdict(rep, ScreenVerdict::FailSpectrum, spec.reason());
    return rep;
  }
  rep.params = *spec;
  const SrgParams& P = *spec;
  if (ps.spectrum) {
    const auto& d = *ps.spectrum;
    if (d.rho1 != P.rho1 || d.m1 != P.m1 || d.rho2 != P.rho2 || d.m2 != P.m2) {
      set_verdict(rep, ScreenVerdict::FailSpectrum, "declared spectrum differs from the computed one");
      return rep;
    }
  }

  auto theta = integrality_filter(P);
  if (!theta) {
    set_verdict(rep, ScreenVerdict::FailIntegrality, theta.reason());
    return rep;
  }
  rep.theta = *theta;
  rep.w1 = -(P.rho1 + 1) * *theta;
  rep.w2 = -P.rho1 * *theta;
  if (*rep.w1 <= 0) {
    set_verdict(rep, ScreenVerdict::FailIntegrality, "w1 = " + std::to_string(*rep.w1) + " is not positive");
    return rep;
  }

  screen_catalog(rep, P, options);

  // Exhausting the catalog only covers rings whose order has no fourth prime power.
  const bool catalog_verdict = rep.verdict == ScreenVerdict::FailRing || rep.verdict == ScreenVerdict::Eliminated;
  bool beyond_catalog = false;
  for (auto [p, e] : factorize(ps.N)) beyond_catalog = beyond_catalog || e >= 4;

  rep.full_ring = options.full_ring == FullRingMode::On ||
                  (options.full_ring == FullRingMode::Auto && fourth_power_order(ps.N));
  if (!rep.full_ring) {
    if (catalog_verdict && beyond_catalog)
      set_verdict(rep, ScreenVerdict::Undecided,
                  "rings of order divisible by a fourth prime power are outside the catalog; " + rep.reason);
    return rep;
  }

  // A ring of order N leaves only n = 1.
  std::uint64_t assignments = 0;
  bool feasible = false;
  for (auto& t : unit_tuple_candidates(P, {true})) {
    TupleReport tr{t, xT_feasible(t, 1, *rep.w1, *rep.w2), {}};
    assignments += tr.xt.assignments;
    feasible = feasible || tr.xt.feasible;
    rep.full_ring_tuples.push_back(std::move(tr));
  }
  if (feasible) {
    if (catalog_verdict && beyond_catalog)
      set_verdict(rep, ScreenVerdict::Undecided,
                  "x_T is feasible with n = 1 and rings of order N are outside the catalog; " + rep.reason);
    return rep;
  }
  const std::string witness = "no x_T solution with n = 1 for " + std::to_string(rep.full_ring_tuples.size()) +
                              " tuples (" + std::to_string(assignments) + " target assignments exhausted)";
  if (catalog_verdict)
    set_verdict(rep, ScreenVerdict::FailXt, witness + "; " + rep.reason);
  else
    rep.reason = rep.reason.empty() ? witness : witness + "; " + rep.reason;
  return rep;
}

}  // namespace twoweight
