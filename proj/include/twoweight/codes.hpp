#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "twoweight/matrix.hpp"
#include "twoweight/ring.hpp"

namespace twoweight {

inline constexpr std::size_t kDefaultMaxCodeSize = 4096;

using Word = std::vector<Element>;
using GeneratorMatrix = RowMajorMatrix<Element>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Element e : w) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

/// Partitions per product component, parts in descending order.
struct Shape {
  std::vector<std::vector<int>> parts;

  std::size_t rows() const;
  /// prod_i q_i^{|lambda_i|}
  std::uint64_t code_size(const RingTable& ring) const;
  /// Component of each generator row, in row order.
  std::vector<std::size_t> row_components() const;
  /// lambda of each generator row, in row order.
  std::vector<int> row_parts() const;

  /// "2,2" for one component, "1;1,1" for two.
  std::string to_string() const;
  static Shape parse(std::string_view text);

  friend auto operator<=>(const Shape&, const Shape&) = default;
};

/// Ordering used for the equal-component reduction: (length, parts).
bool partition_less_equal(const std::vector<int>& a, const std::vector<int>& b);

std::vector<Shape> enumerate_shapes(const RingTable& ring, std::uint64_t code_size);
std::vector<Shape> enumerate_shapes(const RingSpec& spec, std::uint64_t code_size);

/// I(i, j) = theta_i^(l_i - j) R_i, embedded in R.
std::vector<Element> component_ideal(const RingTable& ring, std::size_t component, int j);
/// Lex-least transversal of R_i / theta_i^lambda R_i (q_i^lambda elements), embedded.
std::vector<Element> transversal(const RingTable& ring, std::size_t component, int lambda);

class CodeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LinearCode {
 public:
  /// Generator with one row per shape part; entries of row (i,j) must lie in I(i, lambda_j^i).
  static LinearCode from_shaped(RingPtr ring, Shape shape, GeneratorMatrix generator,
                                std::size_t max_size = kDefaultMaxCodeSize);
  /// Arbitrary generator: the code is its left row span, the shape is inferred.
  static LinearCode from_generator(RingPtr ring, GeneratorMatrix generator, std::size_t max_size = kDefaultMaxCodeSize);

  const RingTable& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const Shape& shape() const { return shape_; }
  const GeneratorMatrix& generator() const { return generator_; }
  bool shaped() const { return shaped_; }
  /// Distinct coefficient vectors give distinct codewords. Only a shaped
  /// generator with dependent rows fails this; its list then repeats words.
  bool faithful() const { return faithful_; }

  std::size_t length() const { return static_cast<std::size_t>(generator_.cols()); }
  std::size_t size() const { return static_cast<std::size_t>(codewords_.rows()); }

  /// size() x length(); row 0 is the zero word.
  const GeneratorMatrix& codewords() const { return codewords_; }
  Word codeword(std::size_t i) const;
  /// For shaped codes the coefficient vector x of each codeword, size() x rows.
  const GeneratorMatrix& coefficients() const { return coefficients_; }

  std::optional<std::size_t> index_of(const Word& w) const;
  /// Codewords as a sorted list, a canonical key for exact code equality.
  std::vector<Word> sorted_codewords() const;

 private:
  LinearCode() = default;
  void build_index();

  RingPtr ring_;
  Shape shape_;
  GeneratorMatrix generator_;
  bool shaped_ = false;
  bool faithful_ = true;
  GeneratorMatrix codewords_;
  GeneratorMatrix coefficients_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
};

/// Shape of the left module spanned by `words`.
Shape infer_shape(const RingTable& ring, const std::vector<Word>& words);

/// Codeword list (materialized at construction).
inline const GeneratorMatrix& expand_code(const LinearCode& code) { return code.codewords(); }

struct CodeProperties {
  bool proper = false;
  bool regular = false;
  bool projective = false;
  std::string witness;  ///< first violation found, empty if all hold
};

CodeProperties check_code_properties(const LinearCode& code, const WeightTable& weights);

struct WeightEnumerator {
  Rational gamma;
  std::map<Rational, std::uint64_t> spectrum;

  std::vector<Rational> nonzero_weights() const;
  bool is_two_weight() const { return nonzero_weights().size() == 2; }
  /// "0^1 8^9 12^6"
  std::string to_string() const;
};

std::vector<Rational> codeword_weights(const LinearCode& code, const WeightTable& weights);
WeightEnumerator weight_enumerator(const LinearCode& code, const WeightTable& weights);

/// D_uv = w(c_u - c_v). Throws CodeError when |C| exceeds `max_size`.
RationalMatrix distance_matrix(const LinearCode& code, const WeightTable& weights,
                               std::size_t max_size = kDefaultMaxCodeSize);

struct DistanceIdentities {
  bool row_sums = false;   ///< D J = gamma n |C| J
  bool quadratic = false;  ///< D^2 + (|C| gamma/|R^x|) D = n gamma^2 |C| (1/|R^x| + n) J
  bool cubic = false;      ///< (D - gamma n |C| I) D (D + gamma |C|/|R^x| I) = 0
  bool all() const { return row_sums && quadratic && cubic; }
};

DistanceIdentities verify_distance_identities(const LinearCode& code, const WeightTable& weights);

/// Right unit multiples y u of a column; the lex-least one is the canonical representative.
Word canonical_column(const RingTable& ring, std::span<const Element> column);

/// Columns of the generator, each replaced by its canonical representative, sorted.
std::vector<Word> canonical_column_multiset(const LinearCode& code);

/// Brute-force test for C' = C P D with P a permutation and D a unit diagonal.
/// Returns nullopt when more than `cap` candidate maps would be tried.
std::optional<bool> monomially_equivalent(const LinearCode& a, const LinearCode& b, std::uint64_t cap = 5'000'000);

}  // namespace twoweight
