#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "twoweight/codes.hpp"
#include "twoweight/srg.hpp"

namespace twoweight {

/// Right-projective representatives of the regular vectors of the column
/// module M = (+) I(i, lambda_j^i), lex-least per class, in lex order.
struct OrbitReps {
  std::vector<Word> reps;
  std::vector<std::size_t> class_sizes;
  std::size_t regular_count = 0;
  std::size_t module_size = 0;

  std::size_t size() const { return reps.size(); }
};

/// Entries generate R as a left ideal.
bool is_regular_vector(const RingTable& ring, std::span<const Element> y);

OrbitReps regular_orbit_reps(const RingTable& ring, const Shape& shape);

/// Nonzero coefficient vectors of the transversal product, in the same
/// mixed-radix order LinearCode uses (row 0 least significant).
std::vector<Word> coefficient_vectors(const RingTable& ring, const Shape& shape);

struct DioSystem {
  Shape shape;
  OrbitReps columns;
  std::vector<Word> rows;  ///< X \ {0}
  DenseMatrix<std::int64_t> W;
  std::int64_t w1 = 0, w2 = 0;
  std::int64_t n = 0, k = 0;

  std::int64_t slack() const { return w2 - w1; }
};

struct DioLimits {
  std::size_t max_rows = 4096;
  std::size_t max_entries = 50'000'000;
};

class SearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DioBuild {
  bool built = false;
  std::string reason;  ///< why the system was not built
  DioSystem system;
};

/// W_{x,y} = w(<x,y>) at gamma = |R^x|.
DioBuild build_dio_system(const RingTable& ring, const Shape& shape, const CodeTargets& targets,
                          const DioLimits& limits = {});

struct SolveOptions {
  std::size_t max_solutions = 64;
  std::uint64_t node_cap = 10'000'000;
};

struct DioSolution {
  std::vector<std::uint8_t> v;  ///< one entry per column of W
  std::vector<std::uint8_t> u;  ///< one entry per row of W

  friend auto operator<=>(const DioSolution&, const DioSolution&) = default;
};

struct DioResult {
  std::vector<DioSolution> solutions;
  std::uint64_t nodes = 0;
  bool complete = true;         ///< false when the node cap stopped the search
  bool truncated = false;       ///< stopped at max_solutions
};

DioResult solve_dio(const DioSystem& system, const SolveOptions& options = {});

/// All 0/1 v with W v + (w2-w1) u = w2, |v| = n, |u| = k, by subset enumeration.
std::vector<DioSolution> brute_force_dio(const DioSystem& system);

struct SearchOptions {
  SolveOptions solve;
  DioLimits limits;
};

enum class SearchStatus { Found, Exhausted, Undecided };

std::string to_string(SearchStatus s);

struct FoundCode {
  LinearCode code;
  SrgCertificate certificate;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<FoundCode> codes;  ///< deduplicated by canonical column multiset
  std::uint64_t nodes = 0;
  std::size_t rows = 0, columns = 0;
  std::string reason;
};

/// Generator whose columns are the chosen representatives.
GeneratorMatrix generator_from_solution(const DioSystem& system, const DioSolution& solution);

/// Builds and solves the system, then re-verifies every solution end to end.
/// Throws SearchError if a solution fails certification.
SearchOutcome search_codes(const SrgParams& params, RingPtr ring, const Shape& shape,
                           const SearchOptions& options = {});

}  // namespace twoweight
