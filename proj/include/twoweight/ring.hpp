#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "twoweight/rational.hpp"
#include "twoweight/ring_spec.hpp"

namespace twoweight {

/// Index of a ring element. Chain rings use a little-endian mixed-radix digit
/// encoding; products put the first component in the least significant place.
using Element = std::uint32_t;

inline constexpr std::size_t kDefaultMaxOrder = 2048;

/// One chain-ring factor of a product ring, with its ideal chain
/// I(j) = theta^(length - j) R, so |I(j)| = q^j.
struct ChainComponent {
  ChainSpec spec;
  std::size_t order = 0;
  std::size_t radix = 1;  ///< embedding stride inside the product encoding
  int prime = 0;
  std::size_t residue_size = 0;
  int length = 0;
  Element theta = 0;      ///< local index of the lex-least generator of the maximal ideal
  std::vector<std::vector<Element>> ideals;  ///< ideals[j], local indices, sorted
  std::vector<Element> residue_lift;         ///< lex-least transversal of R / theta R, local
};

struct PrincipalIdeal {
  Element generator = 0;         ///< least element generating the ideal
  std::vector<Element> members;  ///< sorted
  std::int64_t mobius = 0;       ///< mu(0, ideal)
};

class RingBuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingTable;

/// Builds the full operation tables and derived data for `spec`.
/// Throws RingBuildError when the order exceeds `max_order` or a table axiom fails.
std::shared_ptr<const RingTable> build_ring(const RingSpec& spec, std::size_t max_order = kDefaultMaxOrder);

class RingTable {
 public:
  const RingSpec& spec() const { return spec_; }
  std::size_t order() const { return order_; }

  Element add(Element a, Element b) const { return add_[std::size_t{a} * order_ + b]; }
  Element mul(Element a, Element b) const { return mul_[std::size_t{a} * order_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg_[b]); }
  Element zero() const { return 0; }
  Element one() const { return one_; }

  bool is_unit(Element x) const { return is_unit_[x] != 0; }
  const std::vector<Element>& units() const { return units_; }
  std::size_t unit_count() const { return units_.size(); }

  /// Principal ideals sorted by (size, generator).
  const std::vector<PrincipalIdeal>& principal_ideals() const { return ideals_; }
  std::size_t ideal_of(Element x) const { return ideal_of_[x]; }
  bool ideal_contains(std::size_t ideal, Element x) const { return ideal_bits_[ideal * order_ + x] != 0; }
  /// |R^x x|
  std::size_t unit_orbit_size(Element x) const { return orbit_size_[x]; }

  /// Phase a/b of the generating character, chi(x) = exp(2 pi i a/b), in [0,1).
  const Rational& character(Element x) const { return character_[x]; }

  const std::vector<Element>& socle() const { return socle_; }
  const std::vector<Element>& radical() const { return radical_; }

  const std::vector<ChainComponent>& components() const { return components_; }
  Element embed(std::size_t component, Element local) const {
    return static_cast<Element>(local * components_[component].radix);
  }
  Element project(std::size_t component, Element x) const {
    const auto& c = components_[component];
    return static_cast<Element>((x / c.radix) % c.order);
  }

  /// "(a,b,...)" of component-local indices for products, the index otherwise.
  std::string element_to_string(Element x) const;

 private:
  friend std::shared_ptr<const RingTable> build_ring(const RingSpec&, std::size_t);
  RingTable() = default;

  RingSpec spec_;
  std::size_t order_ = 0;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<Element> neg_;
  Element one_ = 0;
  std::vector<std::uint8_t> is_unit_;
  std::vector<Element> units_;
  std::vector<PrincipalIdeal> ideals_;
  std::vector<std::size_t> ideal_of_;
  std::vector<std::uint8_t> ideal_bits_;
  std::vector<std::size_t> orbit_size_;
  std::vector<Rational> character_;
  std::vector<Element> socle_, radical_;
  std::vector<ChainComponent> components_;
};

using RingPtr = std::shared_ptr<const RingTable>;

struct WeightTable {
  Rational gamma;
  std::vector<Rational> weights;

  const Rational& operator()(Element x) const { return weights[x]; }
  Rational word_weight(std::span<const Element> word) const;
  /// Integer weights; throws std::domain_error when some weight is fractional.
  std::vector<std::int64_t> integer_weights() const;
};

/// w(x) = gamma (1 - mu(0,Rx) / |R^x x|).
WeightTable hom_weight_table(const RingTable& ring, const Rational& gamma);
/// Same weight evaluated through the character sum
/// gamma (1 - (1/|R^x|) sum_u chi(xu)), in floating point.
std::vector<double> character_weight_table(const RingTable& ring, double gamma);

struct FrobeniusCertificate {
  /// For each nonzero principal ideal (by index), an element whose character is nontrivial.
  std::vector<std::pair<std::size_t, Element>> witnesses;
  std::size_t socle_size = 0;
  std::size_t radical_size = 0;
  Element socle_generator = 0;
};

class FrobeniusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checks that `phase` is a generating character of `ring`, that it is
/// additive, and that the socle is cyclic with |soc R| = |R / rad R|.
FrobeniusCertificate verify_frobenius(const RingTable& ring, const std::vector<Rational>& phase);
FrobeniusCertificate verify_frobenius(const RingTable& ring);

/// Sizes p^s of the minimal ideals, grouped by prime: (p, sorted s values).
std::vector<std::pair<int, std::vector<int>>> minimal_ideal_sizes(const RingTable& ring);

}  // namespace twoweight
