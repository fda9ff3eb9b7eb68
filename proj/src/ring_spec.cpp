#include "twoweight/ring_spec.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace twoweight {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t ChainSpec::order() const {
  switch (kind) {
    case ChainKind::Field: return ipow(p, degree);
    case ChainKind::IntegerResidue: return ipow(p, exponent);
    case ChainKind::TruncatedPoly: return ipow(p, exponent);
    case ChainKind::Witt: return ipow(p, 3);
    case ChainKind::GaloisRing: return ipow(p, exponent * degree);
  }
  return 0;
}

std::uint64_t ChainSpec::residue_size() const {
  switch (kind) {
    case ChainKind::Field:
    case ChainKind::GaloisRing: return ipow(p, degree);
    default: return static_cast<std::uint64_t>(p);
  }
}

int ChainSpec::chain_length() const {
  switch (kind) {
    case ChainKind::Field: return 1;
    case ChainKind::IntegerResidue:
    case ChainKind::TruncatedPoly:
    case ChainKind::GaloisRing: return exponent;
    case ChainKind::Witt: return 3;
  }
  return 0;
}

std::uint64_t ChainSpec::unit_count() const {
  std::uint64_t q = residue_size();
  return order() / q * (q - 1);
}

int ChainSpec::minimal_ideal_exponent() const {
  return (kind == ChainKind::Field || kind == ChainKind::GaloisRing) ? degree : 1;
}

std::string ChainSpec::to_string() const {
  switch (kind) {
    case ChainKind::Field: return "GF(" + std::to_string(order()) + ")";
    case ChainKind::IntegerResidue: return "Z" + std::to_string(order());
    case ChainKind::TruncatedPoly: return "ZX(" + std::to_string(p) + "," + std::to_string(exponent) + ")";
    case ChainKind::Witt: return "W(" + std::to_string(p) + (nonsquare ? ",n)" : ",1)");
    case ChainKind::GaloisRing:
      return "GR(" + std::to_string(ipow(p, exponent)) + "," + std::to_string(degree) + ")";
  }
  return {};
}

std::uint64_t RingSpec::order() const {
  std::uint64_t r = 1;
  for (const auto& c : components) r *= c.order();
  return r;
}

std::uint64_t RingSpec::unit_count() const {
  std::uint64_t r = 1;
  for (const auto& c : components) r *= c.unit_count();
  return r;
}

std::vector<int> RingSpec::primes() const {
  std::set<int> ps;
  for (const auto& c : components) ps.insert(c.p);
  return {ps.begin(), ps.end()};
}

std::string RingSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i > 0) out += 'x';
    out += components[i].to_string();
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingSpec parse() {
    RingSpec spec;
    if (text_.empty()) fail("empty ring spec");
    for (;;) {
      auto comps = factor();
      spec.components.insert(spec.components.end(), comps.begin(), comps.end());
      if (pos_ == text_.size()) break;
      expect('x');
    }
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw RingSpecError(msg, pos_); }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t number() {
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (std::int64_t{1} << 40)) {
        pos_ = start;
        fail("number too large");
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  // p^k or a bare prime power q; returns (p, k).
  std::pair<int, int> prime_power() {
    std::size_t start = pos_;
    std::int64_t a = number();
    if (peek('^')) {
      ++pos_;
      std::int64_t k = number();
      if (!is_prime(a)) {
        pos_ = start;
        fail(std::to_string(a) + " is not prime");
      }
      if (k < 1 || k > 40) {
        pos_ = start;
        fail("exponent out of range");
      }
      return {static_cast<int>(a), static_cast<int>(k)};
    }
    auto f = factorize(a);
    if (f.size() != 1) {
      pos_ = start;
      fail(std::to_string(a) + " is not a prime power");
    }
    return {static_cast<int>(f[0].first), f[0].second};
  }

  std::vector<ChainSpec> factor() {
    std::size_t start = pos_;
    if (starts_with("GF(")) {
      pos_ += 3;
      auto [p, k] = prime_power();
      expect(')');
      return {ChainSpec::field(p, k)};
    }
    if (starts_with("GR(")) {
      pos_ += 3;
      auto [p, m] = prime_power();
      expect(',');
      auto k = number();
      expect(')');
      if (k < 1) fail("degree must be positive");
      if (m > 3) throw UnsupportedRingError("chain length " + std::to_string(m) + " >= 4 is not supported");
      if (m == 1) return {ChainSpec::field(p, static_cast<int>(k))};
      if (k == 1) return {ChainSpec::integers(p, m)};
      return {ChainSpec::galois(p, m, static_cast<int>(k))};
    }
    if (starts_with("ZX(")) {
      pos_ += 3;
      auto p = number();
      if (!is_prime(p)) fail(std::to_string(p) + " is not prime");
      expect(',');
      auto e = number();
      expect(')');
      if (e < 2 || e > 3) throw UnsupportedRingError("ZX(p,e) requires e in {2,3}");
      return {ChainSpec::truncated(static_cast<int>(p), static_cast<int>(e))};
    }
    if (starts_with("W(")) {
      pos_ += 2;
      auto p = number();
      if (!is_prime(p)) fail(std::to_string(p) + " is not prime");
      expect(',');
      bool nonsquare = false;
      if (peek('n')) {
        nonsquare = true;
        ++pos_;
      } else if (peek('1')) {
        ++pos_;
      } else {
        fail("expected '1' or 'n'");
      }
      expect(')');
      if (nonsquare && p == 2) throw UnsupportedRingError("W(2,n): every residue is a square modulo 2");
      return {ChainSpec::witt(static_cast<int>(p), nonsquare)};
    }
    if (starts_with("Z(")) {
      pos_ += 2;
      auto [p, m] = prime_power();
      expect(')');
      if (m > 3) throw UnsupportedRingError("chain length " + std::to_string(m) + " >= 4 is not supported");
      return {ChainSpec::integers(p, m)};
    }
    if (peek('Z')) {
      ++pos_;
      auto n = number();
      if (n < 2) {
        pos_ = start + 1;
        fail("Z<n> requires n >= 2");
      }
      std::vector<ChainSpec> out;
      for (auto [p, m] : factorize(n)) {
        if (m > 3) throw UnsupportedRingError("chain length " + std::to_string(m) + " >= 4 is not supported");
        out.push_back(ChainSpec::integers(static_cast<int>(p), m));
      }
      return out;
    }
    fail("unknown ring");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingSpec parse_ring_spec(std::string_view text) { return Parser(text).parse(); }

std::vector<std::pair<int, RingSpec>> primary_decomposition(const RingSpec& spec) {
  std::map<int, RingSpec> groups;
  for (const auto& c : spec.components) groups[c.p].components.push_back(c);
  return {groups.begin(), groups.end()};
}

std::vector<int> minimal_ideal_exponents(const RingSpec& spec) {
  std::set<int> s;
  for (const auto& c : spec.components) s.insert(c.minimal_ideal_exponent());
  return {s.begin(), s.end()};
}

std::vector<RingSpec> catalog_primary_rings(int p, int order_exp, const CatalogConstraints& constraints) {
  using C = ChainSpec;
  std::vector<RingSpec> all;
  switch (order_exp) {
    case 1:
      all = {{{C::integers(p, 1)}}};
      break;
    case 2:
      all = {{{C::truncated(p, 2)}},
             {{C::field(p, 2)}},
             {{C::integers(p, 1), C::integers(p, 1)}},
             {{C::integers(p, 2)}}};
      break;
    case 3:
      all = {{{C::field(p, 3)}},
             {{C::truncated(p, 3)}},
             {{C::integers(p, 1), C::integers(p, 1), C::integers(p, 1)}},
             {{C::truncated(p, 2), C::integers(p, 1)}},
             {{C::field(p, 2), C::integers(p, 1)}},
             {{C::witt(p, false)}}};
      if (p != 2) all.push_back({{C::witt(p, true)}});
      all.push_back({{C::integers(p, 2), C::integers(p, 1)}});
      all.push_back({{C::integers(p, 3)}});
      break;
    default:
      return {};
  }
  std::vector<RingSpec> out;
  for (auto& r : all) {
    if (constraints.exclude_fields && r.is_field()) continue;
    if (constraints.unit_count && r.unit_count() != *constraints.unit_count) continue;
    if (constraints.minimal_ideal_exponent) {
      auto ex = minimal_ideal_exponents(r);
      if (std::find(ex.begin(), ex.end(), *constraints.minimal_ideal_exponent) == ex.end()) continue;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace twoweight
