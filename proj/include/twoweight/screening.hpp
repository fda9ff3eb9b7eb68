#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twoweight/ring_spec.hpp"
#include "twoweight/search.hpp"
#include "twoweight/srg.hpp"

namespace twoweight {

struct DeclaredSpectrum {
  std::int64_t rho1 = 0, m1 = 0, rho2 = 0, m2 = 0;
};

struct ParamSet {
  std::int64_t N = 0, k = 0, lambda = 0, mu = 0;
  std::optional<DeclaredSpectrum> spectrum;
  std::string id;
};

struct UnitTuple {
  std::int64_t u = 0;
  std::vector<int> primes;  ///< p_i, increasing
  std::vector<int> t;       ///< exponents of N
  std::vector<int> s;       ///< minimal-ideal exponents
  std::int64_t n = 0;       ///< m2 / u

  std::string to_string() const;
  friend auto operator<=>(const UnitTuple&, const UnitTuple&) = default;
};

/// Passes with theta when rho2 - rho1 divides N.
Verdict<std::int64_t> integrality_filter(const SrgParams& params);

/// W_T = u (1 - prod_{i in T} (-1/(p_i^{s_i} - 1))), indexed by subset bitmask.
std::vector<Rational> subset_weights(const UnitTuple& tuple);

struct UnitTupleOptions {
  /// Only u = m2 (n = 1): the ring has the order of the code.
  bool full_ring = false;
};

std::vector<UnitTuple> unit_tuple_candidates(const SrgParams& params, const UnitTupleOptions& options = {});

struct XtResult {
  bool feasible = false;
  std::vector<Rational> W;                       ///< by subset bitmask
  std::vector<std::vector<std::int64_t>> solutions;  ///< x_T by subset bitmask
  std::uint64_t assignments = 0;                 ///< target assignments examined
  bool truncated = false;
};

/// Decides the x_T system: sum x_T = n and every nonempty T has
/// sum_{U subset T} L_U W_U in {w1, w2}.
XtResult xT_feasible(const UnitTuple& tuple, std::int64_t n, std::int64_t w1, std::int64_t w2,
                     std::size_t max_solutions = 1024);

/// Every non-negative integer vector with sum n, checked directly.
std::vector<std::vector<std::int64_t>> xT_brute_force(const UnitTuple& tuple, std::int64_t n, std::int64_t w1,
                                                      std::int64_t w2);

/// Products of catalog rings with |R_i| = p_i^{r_i}, s_i <= r_i <= min(t_i, 3),
/// a minimal ideal of size p_i^{s_i} in R_i, |R^x| = u, R not a field.
std::vector<RingSpec> candidate_rings(const UnitTuple& tuple, std::int64_t N);

enum class ScreenVerdict {
  FailSpectrum,
  FailIntegrality,
  FailUnitTuple,
  FailXt,
  FailRing,
  Candidates,
  Found,
  Eliminated,
  Undecided,
};

std::string to_string(ScreenVerdict v);
/// Every stage ruled the parameter set out.
bool is_elimination(ScreenVerdict v);

struct CandidateReport {
  UnitTuple tuple;
  RingSpec ring;
  Shape shape;
  std::optional<SearchOutcome> search;
};

struct TupleReport {
  UnitTuple tuple;
  XtResult xt;
  std::vector<RingSpec> rings;
};

/// Auto applies the n = 1 check when N = p^4 times a squarefree cofactor.
enum class FullRingMode { Auto, On, Off };

struct ScreenOptions {
  FullRingMode full_ring = FullRingMode::Auto;
  bool run_search = false;
  SearchOptions search;
  std::size_t max_order = kDefaultMaxOrder;
};

struct ScreenReport {
  ParamSet input;
  ScreenVerdict verdict = ScreenVerdict::FailSpectrum;
  std::string reason;
  std::optional<SrgParams> params;
  std::optional<std::int64_t> theta;
  std::optional<std::int64_t> w1, w2;
  bool full_ring = false;  ///< the n = 1 check for a ring of order N was applied
  std::vector<TupleReport> tuples;
  std::vector<TupleReport> full_ring_tuples;
  std::vector<CandidateReport> candidates;
};

/// True when N = p^4 times a squarefree number coprime to p.
bool fourth_power_order(std::int64_t N);

ScreenReport screen(const ParamSet& paramset, const ScreenOptions& options = {});

}  // namespace twoweight
