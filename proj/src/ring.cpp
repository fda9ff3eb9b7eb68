#include "twoweight/ring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace twoweight {

namespace {

using Digits = std::vector<int>;

// A chain ring presented by a Z-basis e_0..e_{D-1} with digit bases and
// structure constants e_i e_j. Addition is digitwise.
struct DigitAlgebra {
  std::vector<int> bases;
  std::vector<std::vector<Digits>> products;
};

struct LocalTables {
  std::size_t order = 0;
  std::vector<Element> add, mul, neg;
  std::vector<Rational> phase;
  Element one = 1;
};

using Poly = std::vector<int>;  // coefficients, low degree first

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

// Remainder of a modulo monic b over Z/p.
Poly poly_mod(Poly a, const Poly& b, int p) {
  int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    int c = mod(a[i], p);
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] = mod(a[i - db + j] - c * b[j], p);
  }
  a.resize(std::max(db, 0));
  return a;
}

bool is_irreducible(const Poly& f, int p) {
  int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = ipow(p, d);
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g(d + 1);
      std::uint64_t v = c;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(v % p);
        v /= p;
      }
      g[d] = 1;
      auto r = poly_mod(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](int x) { return x == 0; })) return false;
    }
  }
  return true;
}

// Least monic irreducible of degree k over GF(p), ordered by sum c_i p^i of
// the non-leading coefficients.
Poly least_irreducible(int p, int k) {
  std::uint64_t count = ipow(p, k);
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly f(k + 1);
    std::uint64_t v = c;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<int>(v % p);
      v /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw RingBuildError("no irreducible polynomial found");
}

int least_nonsquare(int p) {
  for (int a = 2; a < p; ++a) {
    bool square = false;
    for (int x = 1; x < p; ++x)
      if ((x * x) % p == a) square = true;
    if (!square) return a;
  }
  throw RingBuildError("no non-square modulo " + std::to_string(p));
}

// X^t mod f over Z/modulus for t < 2k-1, f monic of degree k.
DigitAlgebra polynomial_quotient(const Poly& f, int modulus) {
  int k = static_cast<int>(f.size()) - 1;
  std::vector<Digits> xp;
  Digits cur(k, 0);
  cur[0] = 1;
  for (int t = 0; t <= 2 * k - 2; ++t) {
    xp.push_back(cur);
    int top = cur[k - 1];
    Digits next(k, 0);
    for (int i = k - 1; i >= 1; --i) next[i] = cur[i - 1];
    for (int i = 0; i < k; ++i) next[i] = mod(next[i] - top * f[i], modulus);
    cur = next;
  }
  DigitAlgebra a;
  a.bases.assign(k, modulus);
  a.products.assign(k, std::vector<Digits>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a.products[i][j] = xp[i + j];
  return a;
}

DigitAlgebra truncated_algebra(int p, int e) {
  DigitAlgebra a;
  a.bases.assign(e, p);
  a.products.assign(e, std::vector<Digits>(e, Digits(e, 0)));
  for (int i = 0; i < e; ++i)
    for (int j = 0; i + j < e; ++j) a.products[i][j][i + j] = 1;
  return a;
}

DigitAlgebra witt_algebra(int p, int alpha) {
  DigitAlgebra a;
  a.bases = {p * p, p};
  a.products = {{{1, 0}, {0, 1}}, {{0, 1}, {alpha * p, 0}}};
  return a;
}

DigitAlgebra algebra_for(const ChainSpec& c) {
  switch (c.kind) {
    case ChainKind::Field:
      if (c.degree == 1) return {{c.p}, {{{1}}}};
      return polynomial_quotient(least_irreducible(c.p, c.degree), c.p);
    case ChainKind::IntegerResidue: {
      int m = static_cast<int>(ipow(c.p, c.exponent));
      return {{m}, {{{1}}}};
    }
    case ChainKind::TruncatedPoly: return truncated_algebra(c.p, c.exponent);
    case ChainKind::Witt: return witt_algebra(c.p, c.nonsquare ? least_nonsquare(c.p) : 1);
    case ChainKind::GaloisRing:
      return polynomial_quotient(least_irreducible(c.p, c.degree), static_cast<int>(ipow(c.p, c.exponent)));
  }
  throw RingBuildError("unknown chain kind");
}

LocalTables build_local(const ChainSpec& spec) {
  DigitAlgebra alg = algebra_for(spec);
  const std::size_t D = alg.bases.size();
  std::vector<std::size_t> radix(D);
  std::size_t order = 1;
  for (std::size_t d = 0; d < D; ++d) {
    radix[d] = order;
    order *= alg.bases[d];
  }
  auto decode = [&](std::size_t x) {
    Digits v(D);
    for (std::size_t d = 0; d < D; ++d) {
      v[d] = static_cast<int>(x % alg.bases[d]);
      x /= alg.bases[d];
    }
    return v;
  };
  auto encode = [&](const Digits& v) {
    std::size_t x = 0;
    for (std::size_t d = 0; d < D; ++d) x += static_cast<std::size_t>(mod(v[d], alg.bases[d])) * radix[d];
    return static_cast<Element>(x);
  };

  LocalTables t;
  t.order = order;
  std::vector<Digits> digits(order);
  for (std::size_t x = 0; x < order; ++x) digits[x] = decode(x);

  t.add.resize(order * order);
  t.neg.resize(order);
  for (std::size_t x = 0; x < order; ++x) {
    Digits n(D);
    for (std::size_t d = 0; d < D; ++d) n[d] = -digits[x][d];
    t.neg[x] = encode(n);
    for (std::size_t y = 0; y < order; ++y) {
      Digits s(D);
      for (std::size_t d = 0; d < D; ++d) s[d] = digits[x][d] + digits[y][d];
      t.add[x * order + y] = encode(s);
    }
  }

  // mul(x, y) = mul(x - e_d, y) + e_d y, with d the lowest nonzero digit of x.
  t.mul.assign(order * order, 0);
  std::vector<int> lowest(order, 0);
  for (std::size_t x = 1; x < order; ++x) {
    std::size_t d = 0;
    while (digits[x][d] == 0) ++d;
    lowest[x] = static_cast<int>(d);
  }
  std::vector<Element> basis_times_y(D);
  for (std::size_t y = 0; y < order; ++y) {
    for (std::size_t i = 0; i < D; ++i) {
      Digits acc(D, 0);
      for (std::size_t j = 0; j < D; ++j)
        for (std::size_t d = 0; d < D; ++d) acc[d] = mod(acc[d] + digits[y][j] * alg.products[i][j][d], alg.bases[d]);
      basis_times_y[i] = encode(acc);
    }
    for (std::size_t x = 1; x < order; ++x) {
      int d = lowest[x];
      Element prev = t.mul[(x - radix[d]) * order + y];
      t.mul[x * order + y] = t.add[std::size_t{prev} * order + basis_times_y[d]];
    }
  }

  t.phase.resize(order);
  const int p = spec.p;
  switch (spec.kind) {
    case ChainKind::IntegerResidue:
      for (std::size_t x = 0; x < order; ++x) t.phase[x] = Rational(static_cast<std::int64_t>(x), static_cast<std::int64_t>(order));
      break;
    case ChainKind::Field:
      for (std::size_t x = 0; x < order; ++x) {
        Element tr = 0, pw = static_cast<Element>(x);
        for (int i = 0; i < spec.degree; ++i) {
          tr = t.add[std::size_t{tr} * order + pw];
          Element next = 1;
          for (int j = 0; j < p; ++j) next = t.mul[std::size_t{next} * order + pw];
          pw = next;
        }
        if (tr >= static_cast<Element>(p)) throw RingBuildError("trace left the prime field");
        t.phase[x] = Rational(tr, p);
      }
      break;
    case ChainKind::TruncatedPoly:
      for (std::size_t x = 0; x < order; ++x) t.phase[x] = Rational(digits[x][D - 1], p);
      break;
    case ChainKind::Witt:
      for (std::size_t x = 0; x < order; ++x)
        t.phase[x] = (Rational(digits[x][0], p * p) + Rational(digits[x][1], p)).mod_one();
      break;
    case ChainKind::GaloisRing:
      for (std::size_t x = 0; x < order; ++x) t.phase[x] = Rational(digits[x][D - 1], alg.bases[D - 1]);
      break;
  }
  return t;
}

void check_axioms(const LocalTables& t, const std::string& name) {
  const std::size_t n = t.order;
  auto M = [&](std::size_t a, std::size_t b) { return std::size_t{t.mul[a * n + b]}; };
  auto A = [&](std::size_t a, std::size_t b) { return std::size_t{t.add[a * n + b]}; };
  auto fail = [&](const std::string& what) { throw RingBuildError(name + ": " + what); };
  for (std::size_t a = 0; a < n; ++a) {
    if (M(t.one, a) != a) fail("1 is not a multiplicative identity");
    if (A(0, a) != a) fail("0 is not an additive identity");
    if (A(a, t.neg[a]) != 0) fail("negation table is wrong");
    for (std::size_t b = 0; b < n; ++b) {
      if (M(a, b) != M(b, a)) fail("multiplication is not commutative");
      if (A(a, b) != A(b, a)) fail("addition is not commutative");
    }
  }
  // Full associativity/distributivity for small rings, a deterministic stride otherwise.
  std::size_t stride = n <= 128 ? 1 : n / 61 + 1;
  for (std::size_t a = 0; a < n; a += stride)
    for (std::size_t b = 0; b < n; b += (n <= 128 ? 1 : 3))
      for (std::size_t c = 0; c < n; ++c) {
        if (M(M(a, b), c) != M(a, M(b, c))) fail("multiplication is not associative");
        if (A(A(a, b), c) != A(a, A(b, c))) fail("addition is not associative");
        if (M(a, A(b, c)) != A(M(a, b), M(a, c))) fail("distributivity fails");
      }
}

}  // namespace

std::shared_ptr<const RingTable> build_ring(const RingSpec& spec, std::size_t max_order) {
  if (spec.components.empty()) throw RingBuildError("empty ring spec");
  if (spec.order() > max_order)
    throw RingBuildError("ring " + spec.to_string() + " has order " + std::to_string(spec.order()) +
                         " beyond the bound " + std::to_string(max_order));
  if (spec.order() > 65535) throw RingBuildError("ring order beyond table capacity");

  std::shared_ptr<RingTable> r(new RingTable());
  r->spec_ = spec;

  std::vector<LocalTables> locals;
  std::size_t order = 1;
  for (const auto& c : spec.components) {
    locals.push_back(build_local(c));
    check_axioms(locals.back(), c.to_string());
    ChainComponent comp;
    comp.spec = c;
    comp.order = locals.back().order;
    comp.radix = order;
    comp.prime = c.p;
    comp.residue_size = c.residue_size();
    comp.length = c.chain_length();
    r->components_.push_back(comp);
    order *= comp.order;
  }
  r->order_ = order;
  const std::size_t K = locals.size();

  std::vector<std::vector<Element>> local_of(order, std::vector<Element>(K));
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t i = 0; i < K; ++i) local_of[x][i] = static_cast<Element>((x / r->components_[i].radix) % locals[i].order);

  r->add_.resize(order * order);
  r->mul_.resize(order * order);
  r->neg_.resize(order);
  r->character_.resize(order);
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t nx = 0;
    Rational ph(0);
    for (std::size_t i = 0; i < K; ++i) {
      nx += locals[i].neg[local_of[x][i]] * r->components_[i].radix;
      ph += locals[i].phase[local_of[x][i]];
    }
    r->neg_[x] = static_cast<Element>(nx);
    r->character_[x] = ph.mod_one();
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t s = 0, m = 0;
      for (std::size_t i = 0; i < K; ++i) {
        const auto& L = locals[i];
        std::size_t a = local_of[x][i], b = local_of[y][i];
        s += L.add[a * L.order + b] * r->components_[i].radix;
        m += L.mul[a * L.order + b] * r->components_[i].radix;
      }
      r->add_[x * order + y] = static_cast<std::uint16_t>(s);
      r->mul_[x * order + y] = static_cast<std::uint16_t>(m);
    }
  }
  r->one_ = 0;
  for (std::size_t i = 0; i < K; ++i) r->one_ += static_cast<Element>(r->components_[i].radix);

  r->is_unit_.assign(order, 0);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y)
      if (r->mul(static_cast<Element>(x), static_cast<Element>(y)) == r->one_) {
        r->is_unit_[x] = 1;
        r->units_.push_back(static_cast<Element>(x));
        break;
      }

  // Principal ideals.
  std::map<std::vector<Element>, std::size_t> seen;
  std::vector<PrincipalIdeal> raw;
  std::vector<std::size_t> raw_of(order);
  std::vector<std::uint8_t> mark(order);
  for (std::size_t x = 0; x < order; ++x) {
    std::fill(mark.begin(), mark.end(), 0);
    for (std::size_t a = 0; a < order; ++a) mark[r->mul(static_cast<Element>(a), static_cast<Element>(x))] = 1;
    std::vector<Element> members;
    for (std::size_t a = 0; a < order; ++a)
      if (mark[a]) members.push_back(static_cast<Element>(a));
    auto [it, inserted] = seen.emplace(members, raw.size());
    if (inserted) raw.push_back({static_cast<Element>(x), std::move(members), 0});
    raw_of[x] = it->second;
  }
  std::vector<std::size_t> perm(raw.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (raw[a].members.size() != raw[b].members.size()) return raw[a].members.size() < raw[b].members.size();
    return raw[a].generator < raw[b].generator;
  });
  std::vector<std::size_t> rank(raw.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    rank[perm[i]] = i;
    r->ideals_.push_back(std::move(raw[perm[i]]));
  }
  r->ideal_of_.resize(order);
  for (std::size_t x = 0; x < order; ++x) r->ideal_of_[x] = rank[raw_of[x]];
  const std::size_t I = r->ideals_.size();
  r->ideal_bits_.assign(I * order, 0);
  for (std::size_t i = 0; i < I; ++i)
    for (Element m : r->ideals_[i].members) r->ideal_bits_[i * order + m] = 1;

  // mu(0, I) by the defining recursion, bottom-up by size.
  for (std::size_t i = 0; i < I; ++i) {
    if (i == 0) {
      r->ideals_[0].mobius = 1;
      continue;
    }
    std::int64_t s = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (r->ideals_[j].members.size() < r->ideals_[i].members.size() &&
          r->ideal_contains(i, r->ideals_[j].generator))
        s += r->ideals_[j].mobius;
    r->ideals_[i].mobius = -s;
  }

  r->orbit_size_.resize(order);
  std::vector<std::size_t> stamp(order, 0);
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t count = 0;
    for (Element u : r->units_) {
      Element y = r->mul(u, static_cast<Element>(x));
      if (stamp[y] != x + 1) {
        stamp[y] = x + 1;
        ++count;
      }
    }
    r->orbit_size_[x] = count;
  }

  // Socle: sum of the minimal ideals.
  std::vector<std::uint8_t> soc(order, 0);
  soc[0] = 1;
  for (std::size_t i = 1; i < I; ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < i && minimal; ++j)
      if (r->ideals_[j].members.size() < r->ideals_[i].members.size() && r->ideal_contains(i, r->ideals_[j].generator))
        minimal = false;
    if (!minimal) continue;
    std::vector<Element> cur;
    for (std::size_t a = 0; a < order; ++a)
      if (soc[a]) cur.push_back(static_cast<Element>(a));
    for (Element a : cur)
      for (Element m : r->ideals_[i].members) soc[r->add(a, m)] = 1;
  }
  for (std::size_t a = 0; a < order; ++a)
    if (soc[a]) r->socle_.push_back(static_cast<Element>(a));

  for (std::size_t x = 0; x < order; ++x) {
    Element pw = static_cast<Element>(x);
    for (int t = 0; t < 8 && pw != 0; ++t) pw = r->mul(pw, static_cast<Element>(x));
    if (pw == 0) r->radical_.push_back(static_cast<Element>(x));
  }

  // Per-component ideal chains and residue transversals.
  for (std::size_t i = 0; i < K; ++i) {
    auto& comp = r->components_[i];
    const auto& L = locals[i];
    const std::size_t n = L.order;
    auto lmul = [&](Element a, Element b) { return L.mul[std::size_t{a} * n + b]; };
    std::vector<std::uint8_t> nonunit(n, 1);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (lmul(static_cast<Element>(a), static_cast<Element>(b)) == L.one) {
          nonunit[a] = 0;
          break;
        }
    auto local_ideal = [&](Element g) {
      std::vector<std::uint8_t> in(n, 0);
      for (std::size_t a = 0; a < n; ++a) in[lmul(static_cast<Element>(a), g)] = 1;
      return in;
    };
    bool found = false;
    for (std::size_t a = 0; a < n && !found; ++a)
      if (local_ideal(static_cast<Element>(a)) == nonunit) {
        comp.theta = static_cast<Element>(a);
        found = true;
      }
    if (!found) throw RingBuildError(comp.spec.to_string() + ": maximal ideal is not principal");
    std::vector<Element> powers{L.one};
    while (powers.back() != 0 && static_cast<int>(powers.size()) <= comp.length)
      powers.push_back(lmul(powers.back(), comp.theta));
    if (static_cast<int>(powers.size()) != comp.length + 1 || powers.back() != 0)
      throw RingBuildError(comp.spec.to_string() + ": unexpected nilpotency of the maximal ideal");
    comp.ideals.assign(comp.length + 1, {});
    for (int j = 0; j <= comp.length; ++j) {
      auto in = local_ideal(powers[comp.length - j]);
      for (std::size_t a = 0; a < n; ++a)
        if (in[a]) comp.ideals[j].push_back(static_cast<Element>(a));
      if (comp.ideals[j].size() != ipow(comp.residue_size, j))
        throw RingBuildError(comp.spec.to_string() + ": ideal chain has the wrong sizes");
    }
    const auto& rad = comp.ideals[comp.length - 1];
    std::vector<std::uint8_t> covered(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      if (covered[a]) continue;
      comp.residue_lift.push_back(static_cast<Element>(a));
      for (Element m : rad) covered[L.add[a * n + m]] = 1;
    }
  }
  return r;
}

std::string RingTable::element_to_string(Element x) const {
  if (components_.size() == 1) return std::to_string(x);
  std::string s = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(project(i, x));
  }
  return s + ")";
}

Rational WeightTable::word_weight(std::span<const Element> word) const {
  Rational s(0);
  for (Element x : word) s += weights[x];
  return s;
}

std::vector<std::int64_t> WeightTable::integer_weights() const {
  std::vector<std::int64_t> out(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) out[i] = weights[i].to_integer();
  return out;
}

WeightTable hom_weight_table(const RingTable& ring, const Rational& gamma) {
  if (gamma <= Rational(0)) throw std::invalid_argument("gamma must be positive");
  WeightTable w;
  w.gamma = gamma;
  w.weights.resize(ring.order());
  for (std::size_t x = 0; x < ring.order(); ++x) {
    const auto& I = ring.principal_ideals()[ring.ideal_of(static_cast<Element>(x))];
    w.weights[x] = gamma * (Rational(1) - Rational(I.mobius, static_cast<std::int64_t>(ring.unit_orbit_size(static_cast<Element>(x)))));
  }
  return w;
}

std::vector<double> character_weight_table(const RingTable& ring, double gamma) {
  std::vector<double> out(ring.order());
  const double U = static_cast<double>(ring.unit_count());
  for (std::size_t x = 0; x < ring.order(); ++x) {
    double s = 0;
    for (Element u : ring.units())
      s += std::cos(2 * std::numbers::pi * ring.character(ring.mul(static_cast<Element>(x), u)).to_double());
    out[x] = gamma * (1 - s / U);
  }
  return out;
}

FrobeniusCertificate verify_frobenius(const RingTable& ring, const std::vector<Rational>& phase) {
  const std::size_t n = ring.order();
  if (phase.size() != n) throw FrobeniusError("character table has the wrong size");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (phase[ring.add(static_cast<Element>(x), static_cast<Element>(y))] != (phase[x] + phase[y]).mod_one())
        throw FrobeniusError("character is not additive at (" + std::to_string(x) + "," + std::to_string(y) + ")");

  FrobeniusCertificate cert;
  const auto& ideals = ring.principal_ideals();
  for (std::size_t i = 1; i < ideals.size(); ++i) {
    auto it = std::find_if(ideals[i].members.begin(), ideals[i].members.end(),
                           [&](Element m) { return !phase[m].is_zero(); });
    if (it == ideals[i].members.end())
      throw FrobeniusError("ideal generated by " + ring.element_to_string(ideals[i].generator) +
                           " lies in the kernel of the character");
    cert.witnesses.emplace_back(i, *it);
  }
  cert.socle_size = ring.socle().size();
  cert.radical_size = ring.radical().size();
  if (cert.socle_size * cert.radical_size != n)
    throw FrobeniusError("|soc R| differs from |R / rad R|");
  bool cyclic = false;
  for (const auto& I : ideals)
    if (I.members == ring.socle()) {
      cyclic = true;
      cert.socle_generator = I.generator;
      break;
    }
  if (!cyclic) throw FrobeniusError("socle is not cyclic");
  return cert;
}

FrobeniusCertificate verify_frobenius(const RingTable& ring) {
  std::vector<Rational> phase(ring.order());
  for (std::size_t x = 0; x < ring.order(); ++x) phase[x] = ring.character(static_cast<Element>(x));
  return verify_frobenius(ring, phase);
}

std::vector<std::pair<int, std::vector<int>>> minimal_ideal_sizes(const RingTable& ring) {
  std::map<int, std::vector<int>> by_prime;
  const auto& ideals = ring.principal_ideals();
  for (std::size_t i = 1; i < ideals.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < i && minimal; ++j)
      if (ideals[j].members.size() < ideals[i].members.size() && ring.ideal_contains(i, ideals[j].generator))
        minimal = false;
    if (!minimal) continue;
    auto f = factorize(static_cast<std::int64_t>(ideals[i].members.size()));
    auto& v = by_prime[static_cast<int>(f[0].first)];
    if (std::find(v.begin(), v.end(), f[0].second) == v.end()) v.push_back(f[0].second);
  }
  std::vector<std::pair<int, std::vector<int>>> out;
  for (auto& [p, v] : by_prime) {
    std::sort(v.begin(), v.end());
    out.emplace_back(p, v);
  }
  return out;
}

}  // namespace twoweight
