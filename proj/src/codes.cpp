#include "twoweight/codes.hpp"

#include <algorithm>
#include <numeric>
#include <functional>
#include <set>
#include <unordered_set>

namespace twoweight {

std::size_t Shape::rows() const {
  std::size_t r = 0;
  for (const auto& p : parts) r += p.size();
  return r;
}

std::uint64_t Shape::code_size(const RingTable& ring) const {
  if (parts.size() != ring.components().size()) throw CodeError("shape has the wrong number of components");
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int total = std::accumulate(parts[i].begin(), parts[i].end(), 0);
    s *= ipow(ring.components()[i].residue_size, total);
  }
  return s;
}

std::vector<std::size_t> Shape::row_components() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < parts.size(); ++i) out.insert(out.end(), parts[i].size(), i);
  return out;
}

std::vector<int> Shape::row_parts() const {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::string Shape::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) s += ';';
    for (std::size_t j = 0; j < parts[i].size(); ++j) {
      if (j > 0) s += ',';
      s += std::to_string(parts[i][j]);
    }
  }
  return s;
}

Shape Shape::parse(std::string_view text) {
  Shape shape;
  std::vector<int> cur;
  std::string num;
  auto flush_num = [&] {
    if (num.empty()) throw CodeError("malformed shape '" + std::string(text) + "'");
    int v = std::stoi(num);
    if (v <= 0) throw CodeError("shape parts must be positive");
    cur.push_back(v);
    num.clear();
  };
  for (char c : text) {
    if (c == ' ') continue;
    if (c >= '0' && c <= '9') {
      num += c;
    } else if (c == ',') {
      flush_num();
    } else if (c == ';') {
      flush_num();
      shape.parts.push_back(std::move(cur));
      cur.clear();
    } else {
      throw CodeError("unexpected character in shape '" + std::string(text) + "'");
    }
  }
  flush_num();
  shape.parts.push_back(std::move(cur));
  for (auto& p : shape.parts)
    if (!std::is_sorted(p.begin(), p.end(), std::greater<>())) throw CodeError("shape parts must be non-increasing");
  return shape;
}

bool partition_less_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a <= b;
}

namespace {

void partitions_with_first(int total, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(total, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_with_first(total - p, p, cur, out);
    cur.pop_back();
  }
}

// Partitions of `total` with first part exactly `first`.
std::vector<std::vector<int>> partitions_led_by(int total, int first) {
  std::vector<std::vector<int>> out;
  if (total < first) return out;
  std::vector<int> cur{first};
  partitions_with_first(total - first, first, cur, out);
  return out;
}

}  // namespace

std::vector<Shape> enumerate_shapes(const RingTable& ring, std::uint64_t code_size) {
  return enumerate_shapes(ring.spec(), code_size);
}

std::vector<Shape> enumerate_shapes(const RingSpec& spec, std::uint64_t code_size) {
  const auto& comps = spec.components;
  std::vector<Shape> out;
  Shape cur;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t remaining) {
    if (i == comps.size()) {
      if (remaining == 1) out.push_back(cur);
      return;
    }
    const auto& c = comps[i];
    std::uint64_t q = c.residue_size();
    const int length = c.chain_length();
    int e = 0;
    for (std::uint64_t s = q; remaining % s == 0; s *= q) {
      ++e;
      for (auto& lambda : partitions_led_by(e, length)) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j)
          if (comps[j] == c && !partition_less_equal(cur.parts[j], lambda)) ok = false;
        if (!ok) continue;
        cur.parts.push_back(lambda);
        rec(i + 1, remaining / s);
        cur.parts.pop_back();
      }
      if (s > remaining / q) break;
    }
  };
  rec(0, code_size);
  return out;
}

std::vector<Element> component_ideal(const RingTable& ring, std::size_t component, int j) {
  const auto& c = ring.components().at(component);
  if (j < 0 || j > c.length) throw CodeError("ideal index out of range");
  std::vector<Element> out;
  for (Element a : c.ideals[j]) out.push_back(ring.embed(component, a));
  return out;
}

std::vector<Element> transversal(const RingTable& ring, std::size_t component, int lambda) {
  const auto& c = ring.components().at(component);
  if (lambda < 0 || lambda > c.length) throw CodeError("transversal index out of range");
  const auto& ideal = c.ideals[c.length - lambda];
  std::vector<std::uint8_t> covered(c.order, 0);
  std::vector<Element> out;
  for (std::size_t a = 0; a < c.order; ++a) {
    if (covered[a]) continue;
    Element e = ring.embed(component, static_cast<Element>(a));
    out.push_back(e);
    for (Element m : ideal) covered[ring.project(component, ring.add(e, ring.embed(component, m)))] = 1;
  }
  return out;
}

Word LinearCode::codeword(std::size_t i) const {
  Word w(length());
  for (std::size_t j = 0; j < length(); ++j) w[j] = codewords_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return w;
}

std::optional<std::size_t> LinearCode::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Word> LinearCode::sorted_codewords() const {
  std::vector<Word> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(codeword(i));
  std::sort(out.begin(), out.end());
  return out;
}

void LinearCode::build_index() {
  index_.clear();
  index_.reserve(size() * 2);
  for (std::size_t i = 0; i < size(); ++i) index_.try_emplace(codeword(i), i);
}

LinearCode LinearCode::from_shaped(RingPtr ring, Shape shape, GeneratorMatrix generator, std::size_t max_size) {
  const RingTable& R = *ring;
  if (shape.parts.size() != R.components().size()) throw CodeError("shape has the wrong number of components");
  if (static_cast<std::size_t>(generator.rows()) != shape.rows())
    throw CodeError("generator has " + std::to_string(generator.rows()) + " rows, shape needs " +
                    std::to_string(shape.rows()));
  auto comps = shape.row_components();
  auto lambdas = shape.row_parts();
  const std::size_t rows = comps.size(), n = static_cast<std::size_t>(generator.cols());

  std::vector<std::vector<Element>> S(rows);
  std::uint64_t total = 1;
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& c = R.components()[comps[r]];
    if (lambdas[r] > c.length) throw CodeError("shape part exceeds the chain length");
    std::vector<std::uint8_t> in(R.order(), 0);
    for (Element m : component_ideal(R, comps[r], lambdas[r])) in[m] = 1;
    for (std::size_t j = 0; j < n; ++j) {
      Element e = generator(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j));
      if (e >= R.order()) throw CodeError("generator entry out of range");
      if (!in[e])
        throw CodeError("generator entry (" + std::to_string(r) + "," + std::to_string(j) + ") = " +
                        R.element_to_string(e) + " is not in I(" + std::to_string(comps[r]) + "," +
                        std::to_string(lambdas[r]) + ")");
    }
    S[r] = transversal(R, comps[r], lambdas[r]);
    total *= S[r].size();
    if (total > max_size) throw CodeError("code size exceeds the bound " + std::to_string(max_size));
  }

  LinearCode code;
  code.ring_ = std::move(ring);
  code.shape_ = std::move(shape);
  code.generator_ = std::move(generator);
  code.shaped_ = true;
  code.codewords_.resize(static_cast<Eigen::Index>(total), static_cast<Eigen::Index>(n));
  code.coefficients_.resize(static_cast<Eigen::Index>(total), static_cast<Eigen::Index>(rows));
  std::vector<std::size_t> digit(rows, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    for (std::size_t j = 0; j < n; ++j) {
      Element acc = 0;
      for (std::size_t r = 0; r < rows; ++r)
        acc = R.add(acc, R.mul(S[r][digit[r]], code.generator_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j))));
      code.codewords_(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(j)) = acc;
    }
    for (std::size_t r = 0; r < rows; ++r) code.coefficients_(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(r)) = S[r][digit[r]];
    for (std::size_t r = 0; r < rows; ++r) {
      if (++digit[r] < S[r].size()) break;
      digit[r] = 0;
    }
  }
  code.build_index();
  code.faithful_ = code.index_.size() == total;
  return code;
}

LinearCode LinearCode::from_generator(RingPtr ring, GeneratorMatrix generator, std::size_t max_size) {
  const RingTable& R = *ring;
  const std::size_t n = static_cast<std::size_t>(generator.cols());
  for (Eigen::Index i = 0; i < generator.rows(); ++i)
    for (Eigen::Index j = 0; j < generator.cols(); ++j)
      if (generator(i, j) >= R.order()) throw CodeError("generator entry out of range");

  std::vector<Word> words{Word(n, 0)};
  std::unordered_set<Word, WordHash> seen{words.front()};
  for (Eigen::Index g = 0; g < generator.rows(); ++g) {
    const std::size_t before = words.size();
    for (std::size_t a = 1; a < R.order(); ++a) {
      for (std::size_t c = 0; c < before; ++c) {
        Word w(n);
        for (std::size_t j = 0; j < n; ++j)
          w[j] = R.add(words[c][j], R.mul(static_cast<Element>(a), generator(g, static_cast<Eigen::Index>(j))));
        if (seen.insert(w).second) {
          words.push_back(std::move(w));
          if (words.size() > max_size) throw CodeError("code size exceeds the bound " + std::to_string(max_size));
        }
      }
    }
  }

  LinearCode code;
  code.ring_ = std::move(ring);
  code.generator_ = std::move(generator);
  code.shaped_ = false;
  code.shape_ = infer_shape(R, words);
  code.codewords_.resize(static_cast<Eigen::Index>(words.size()), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) code.codewords_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = words[i][j];
  code.build_index();
  code.faithful_ = true;
  return code;
}

Shape infer_shape(const RingTable& ring, const std::vector<Word>& words) {
  Shape shape;
  for (std::size_t i = 0; i < ring.components().size(); ++i) {
    const auto& c = ring.components()[i];
    auto log_q = [&](std::size_t size) {
      int e = 0;
      std::size_t s = 1;
      while (s < size) {
        s *= c.residue_size;
        ++e;
      }
      if (s != size) throw CodeError("module size is not a power of the residue field size");
      return e;
    };
    // |theta^k pi_i(C)| for k = 0..l
    std::vector<int> logs;
    Element pw = ring.embed(i, 1);
    for (int k = 0; k <= c.length; ++k) {
      std::unordered_set<Word, WordHash> img;
      for (const auto& w : words) {
        Word v(w.size());
        for (std::size_t j = 0; j < w.size(); ++j) v[j] = ring.mul(pw, w[j]);
        img.insert(std::move(v));
      }
      logs.push_back(log_q(img.size()));
      pw = ring.mul(pw, ring.embed(i, c.theta));
    }
    std::vector<int> parts;
    std::vector<int> at_least(c.length + 2, 0);
    for (int k = 1; k <= c.length; ++k) at_least[k] = logs[k - 1] - logs[k];
    for (int k = c.length; k >= 1; --k)
      for (int t = 0; t < at_least[k] - at_least[k + 1]; ++t) parts.push_back(k);
    shape.parts.push_back(std::move(parts));
  }
  return shape;
}

CodeProperties check_code_properties(const LinearCode& code, const WeightTable& weights) {
  const RingTable& R = code.ring();
  CodeProperties props;
  props.proper = true;
  for (std::size_t i = 1; i < code.size(); ++i) {
    Rational w(0);
    for (std::size_t j = 0; j < code.length(); ++j) w += weights(code.codewords()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    if (w.is_zero()) {
      props.proper = false;
      if (props.witness.empty()) props.witness = "nonzero codeword " + std::to_string(i) + " has weight 0";
      break;
    }
  }

  props.regular = true;
  std::vector<std::uint8_t> hit(R.order());
  for (std::size_t j = 0; j < code.length() && props.regular; ++j) {
    std::fill(hit.begin(), hit.end(), 0);
    for (std::size_t i = 0; i < code.size(); ++i) hit[code.codewords()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
      props.regular = false;
      if (props.witness.empty()) props.witness = "column " + std::to_string(j) + " does not generate R";
    }
  }

  props.projective = true;
  std::map<std::vector<Word>, std::size_t> modules;
  const auto& G = code.generator();
  for (Eigen::Index j = 0; j < G.cols(); ++j) {
    std::set<Word> m;
    for (std::size_t a = 0; a < R.order(); ++a) {
      Word v(static_cast<std::size_t>(G.rows()));
      for (Eigen::Index r = 0; r < G.rows(); ++r) v[static_cast<std::size_t>(r)] = R.mul(G(r, j), static_cast<Element>(a));
      m.insert(std::move(v));
    }
    auto [it, inserted] = modules.emplace(std::vector<Word>(m.begin(), m.end()), static_cast<std::size_t>(j));
    if (!inserted) {
      props.projective = false;
      if (props.witness.empty())
        props.witness = "columns " + std::to_string(it->second) + " and " + std::to_string(j) + " span the same module";
      break;
    }
  }
  return props;
}

std::vector<Rational> WeightEnumerator::nonzero_weights() const {
  std::vector<Rational> out;
  for (const auto& [w, c] : spectrum)
    if (!w.is_zero()) out.push_back(w);
  return out;
}

std::string WeightEnumerator::to_string() const {
  std::string s;
  for (const auto& [w, c] : spectrum) {
    if (!s.empty()) s += ' ';
    s += w.to_string() + "^" + std::to_string(c);
  }
  return s;
}

std::vector<Rational> codeword_weights(const LinearCode& code, const WeightTable& weights) {
  std::vector<Rational> out(code.size());
  for (std::size_t i = 0; i < code.size(); ++i) {
    Rational w(0);
    for (std::size_t j = 0; j < code.length(); ++j) w += weights(code.codewords()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    out[i] = w;
  }
  return out;
}

WeightEnumerator weight_enumerator(const LinearCode& code, const WeightTable& weights) {
  WeightEnumerator e;
  e.gamma = weights.gamma;
  for (const auto& w : codeword_weights(code, weights)) ++e.spectrum[w];
  return e;
}

RationalMatrix distance_matrix(const LinearCode& code, const WeightTable& weights, std::size_t max_size) {
  const std::size_t N = code.size();
  if (N > max_size) throw CodeError("distance matrix of " + std::to_string(N) + " codewords exceeds the bound");
  const RingTable& R = code.ring();
  const auto& C = code.codewords();
  RationalMatrix D(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
  for (Eigen::Index u = 0; u < static_cast<Eigen::Index>(N); ++u)
    for (Eigen::Index v = 0; v < static_cast<Eigen::Index>(N); ++v) {
      Rational w(0);
      for (Eigen::Index j = 0; j < C.cols(); ++j) w += weights(R.sub(C(u, j), C(v, j)));
      D(u, v) = w;
    }
  return D;
}

DistanceIdentities verify_distance_identities(const LinearCode& code, const WeightTable& weights) {
  DistanceIdentities out;
  const auto scaled = scale_to_integer(distance_matrix(code, weights));
  const IntMatrix& D = scaled.values;
  const Rational L(scaled.scale);
  const Rational gamma = weights.gamma;
  const Rational N(static_cast<std::int64_t>(code.size()));
  const Rational n(static_cast<std::int64_t>(code.length()));
  const Rational U(static_cast<std::int64_t>(code.ring().unit_count()));

  const Rational row_target = L * gamma * n * N;
  out.row_sums = true;
  for (Eigen::Index i = 0; i < D.rows(); ++i)
    if (Rational(D.row(i).sum()) != row_target) out.row_sums = false;

  const IntMatrix D2 = D * D;
  const Rational a = L * N * gamma / U;
  const Rational b = L * L * n * gamma * gamma * N * (Rational(1) / U + n);
  out.quadratic = true;
  for (Eigen::Index i = 0; i < D.rows() && out.quadratic; ++i)
    for (Eigen::Index j = 0; j < D.cols(); ++j)
      if (Rational(D2(i, j)) + a * Rational(D(i, j)) != b) {
        out.quadratic = false;
        break;
      }

  const Rational c = L * gamma * n * N;
  const Rational e = L * gamma * N / U;
  const IntMatrix I = IntMatrix::Identity(D.rows(), D.cols());
  const IntMatrix left = c.den() * D - c.num() * I;
  out.cubic = ((left * D2) * e.den() + (left * D) * e.num()).isZero();
  return out;
}

Word canonical_column(const RingTable& ring, std::span<const Element> column) {
  Word best(column.begin(), column.end());
  Word cur(column.size());
  for (Element u : ring.units()) {
    for (std::size_t i = 0; i < column.size(); ++i) cur[i] = ring.mul(column[i], u);
    if (cur < best) best = cur;
  }
  return best;
}

std::vector<Word> canonical_column_multiset(const LinearCode& code) {
  const auto& G = code.generator();
  std::vector<Word> cols;
  for (Eigen::Index j = 0; j < G.cols(); ++j) {
    Word col(static_cast<std::size_t>(G.rows()));
    for (Eigen::Index r = 0; r < G.rows(); ++r) col[static_cast<std::size_t>(r)] = G(r, j);
    cols.push_back(canonical_column(code.ring(), col));
  }
  std::sort(cols.begin(), cols.end());
  return cols;
}

std::optional<bool> monomially_equivalent(const LinearCode& a, const LinearCode& b, std::uint64_t cap) {
  if (&a.ring() != &b.ring() && a.ring().spec() != b.ring().spec()) return false;
  if (a.length() != b.length() || a.size() != b.size()) return false;
  const RingTable& R = a.ring();
  const std::size_t n = a.length();
  const auto& units = R.units();

  std::uint64_t maps = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    maps *= i;
    if (maps > cap) return std::nullopt;
  }
  for (std::size_t i = 0; i < n; ++i) {
    maps *= units.size();
    if (maps > cap) return std::nullopt;
  }

  // Images of the generator rows of `a` must lie in `b`; equal sizes then force equality.
  const auto& G = a.generator();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> scale(n, 0);
  Word img(n);
  do {
    std::fill(scale.begin(), scale.end(), 0);
    for (;;) {
      bool inside = true;
      for (Eigen::Index r = 0; r < G.rows() && inside; ++r) {
        for (std::size_t j = 0; j < n; ++j) img[perm[j]] = R.mul(G(r, static_cast<Eigen::Index>(j)), units[scale[j]]);
        inside = b.index_of(img).has_value();
      }
      if (inside) return true;
      std::size_t k = 0;
      while (k < n && ++scale[k] == units.size()) scale[k++] = 0;
      if (k == n) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace twoweight
