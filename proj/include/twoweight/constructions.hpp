#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "twoweight/codes.hpp"

namespace twoweight {

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Point = std::array<Element, 2>;

/// Points of the projective Hjelmslev line over a chain ring of length 2,
/// grouped into q+1 neighbour classes of q points.
struct HjelmslevLine {
  std::size_t q = 0;
  std::vector<Point> points;               ///< lex order
  std::vector<std::vector<Point>> classes; ///< each sorted, ordered by least point
};

HjelmslevLine hjelmslev_points(const RingTable& ring);

/// selection[c] lists s distinct indices into classes[c].
using HjelmslevSelection = std::vector<std::vector<std::size_t>>;

/// 2 x s(q+1) generator whose columns are the chosen points, class by class.
LinearCode hjelmslev_code(RingPtr ring, const HjelmslevLine& line, const HjelmslevSelection& selection);
LinearCode hjelmslev_code(RingPtr ring, std::size_t s);

/// w1 = q^2 (qs - 1), w2 = q^3 s at gamma = q^2 - q, and the graph parameters.
struct HjelmslevPrediction {
  Rational gamma;
  std::int64_t w1 = 0, w2 = 0;
  std::int64_t N = 0, k = 0, lambda = 0, mu = 0;
};
HjelmslevPrediction hjelmslev_prediction(std::int64_t q, std::int64_t s);

enum class Dedupe {
  Exact,     ///< equal codeword sets
  Monomial,  ///< column permutation and unit column scaling
};

struct FamilyOptions {
  Dedupe dedupe = Dedupe::Exact;
  std::uint64_t max_selections = 1'000'000;
  std::uint64_t monomial_cap = 5'000'000;
};

struct HjelmslevFamily {
  std::uint64_t selections = 0;
  std::vector<LinearCode> codes;  ///< one per class, first selection wins
  std::vector<HjelmslevSelection> representatives;
  bool undecided = false;         ///< a monomial comparison exceeded its cap
};

HjelmslevFamily enumerate_hjelmslev_family(RingPtr ring, std::size_t s, const FamilyOptions& options = {});

/// x -> (a + b c)_{c in GF(q)} with b = x mod theta and x - tau(b) = theta tau(a).
/// Residue-field symbols are the indices of the lex-least transversal.
struct GrayMap {
  std::size_t q = 0;
  std::vector<std::vector<std::uint32_t>> image;  ///< by element
  /// Field tables on symbols 0..q-1, read off the ring through the transversal.
  std::vector<std::uint32_t> field_add, field_mul;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return field_add[a * q + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return field_mul[a * q + b]; }
  std::vector<std::uint32_t> map_word(std::span<const Element> word) const;
};

/// Builds the map and verifies it: isometry at gamma = q - 1, injectivity,
/// additivity on the socle, image equal to the affine functions.
GrayMap gray_map(const RingTable& ring);

struct LinearityCheck {
  bool linear = true;
  std::string witness;  ///< a failing sum or scalar multiple
};

LinearityCheck gray_linear_check(const LinearCode& code, const GrayMap& gray, std::size_t max_size = 4096);
LinearityCheck gray_linear_check(const LinearCode& code, std::size_t max_size = 4096);

/// One line per word, symbols separated by spaces.
void write_field_code(std::ostream& out, const std::vector<std::vector<std::uint32_t>>& words);

}  // namespace twoweight
