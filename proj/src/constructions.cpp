#include "twoweight/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

namespace twoweight {

namespace {

const ChainComponent& length_two_component(const RingTable& ring) {
  if (ring.components().size() != 1 || ring.components()[0].length != 2)
    throw ConstructionError(ring.spec().to_string() + " is not a chain ring of length 2");
  return ring.components()[0];
}

// Index of the transversal element congruent to x modulo the maximal ideal.
std::vector<std::uint32_t> residue_index(const RingTable& ring, const ChainComponent& c) {
  std::vector<std::uint32_t> red(ring.order());
  for (Element x = 0; x < ring.order(); ++x) {
    for (std::uint32_t i = 0; i < c.residue_lift.size(); ++i)
      if (!ring.is_unit(ring.sub(x, ring.embed(0, c.residue_lift[i])))) {
        red[x] = i;
        break;
      }
  }
  return red;
}

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : v) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

std::string symbols(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (auto e : v) s += std::to_string(e);
  return s;
}

}  // namespace

HjelmslevLine hjelmslev_points(const RingTable& ring) {
  const auto& comp = length_two_component(ring);
  const auto red = residue_index(ring, comp);
  HjelmslevLine line;
  line.q = comp.residue_size;

  for (Element a = 0; a < ring.order(); ++a)
    for (Element b = 0; b < ring.order(); ++b) {
      if (!ring.is_unit(a) && !ring.is_unit(b)) continue;
      Point p{a, b};
      bool least = true;
      for (Element u : ring.units()) {
        Point v{ring.mul(a, u), ring.mul(b, u)};
        if (v < p) {
          least = false;
          break;
        }
      }
      if (least) line.points.push_back(p);
    }

  std::map<std::array<std::uint32_t, 2>, std::vector<Point>> by_residue;
  for (const auto& p : line.points) {
    std::array<std::uint32_t, 2> key{UINT32_MAX, UINT32_MAX};
    for (Element u : ring.units()) {
      std::array<std::uint32_t, 2> k{red[ring.mul(p[0], u)], red[ring.mul(p[1], u)]};
      key = std::min(key, k);
    }
    by_residue[key].push_back(p);
  }
  for (auto& [key, pts] : by_residue) line.classes.push_back(pts);
  std::sort(line.classes.begin(), line.classes.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });

  if (line.points.size() != line.q * (line.q + 1) || line.classes.size() != line.q + 1)
    throw ConstructionError("Hjelmslev line over " + ring.spec().to_string() + " has the wrong size");
  for (const auto& c : line.classes)
    if (c.size() != line.q) throw ConstructionError("neighbour class of the wrong size");
  return line;
}

LinearCode hjelmslev_code(RingPtr ring, const HjelmslevLine& line, const HjelmslevSelection& selection) {
  if (selection.size() != line.classes.size()) throw ConstructionError("selection needs one entry per class");
  const std::size_t s = selection.front().size();
  if (s < 1 || s >= line.q) throw ConstructionError("s must lie in 1..q-1");
  std::vector<Point> cols;
  for (std::size_t c = 0; c < selection.size(); ++c) {
    auto pick = selection[c];
    std::sort(pick.begin(), pick.end());
    if (pick.size() != s || std::adjacent_find(pick.begin(), pick.end()) != pick.end() ||
        pick.back() >= line.classes[c].size())
      throw ConstructionError("class " + std::to_string(c) + " needs " + std::to_string(s) + " distinct points");
    for (auto i : pick) cols.push_back(line.classes[c][i]);
  }
  GeneratorMatrix G(2, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    G(0, static_cast<Eigen::Index>(j)) = cols[j][0];
    G(1, static_cast<Eigen::Index>(j)) = cols[j][1];
  }
  return LinearCode::from_shaped(std::move(ring), Shape{{{2, 2}}}, std::move(G));
}

LinearCode hjelmslev_code(RingPtr ring, std::size_t s) {
  auto line = hjelmslev_points(*ring);
  HjelmslevSelection sel(line.classes.size());
  for (auto& c : sel)
    for (std::size_t i = 0; i < s; ++i) c.push_back(i);
  return hjelmslev_code(std::move(ring), line, sel);
}

HjelmslevPrediction hjelmslev_prediction(std::int64_t q, std::int64_t s) {
  HjelmslevPrediction p;
  p.gamma = Rational(q * q - q);
  p.w1 = q * q * (q * s - 1);
  p.w2 = q * q * q * s;
  p.N = q * q * q * q;
  p.k = s * (q * q * q - q);
  p.lambda = q * q * (s * s + 1) - 3 * q * s;
  p.mu = q * s * (q * s - 1);
  return p;
}

HjelmslevFamily enumerate_hjelmslev_family(RingPtr ring, std::size_t s, const FamilyOptions& options) {
  auto line = hjelmslev_points(*ring);
  if (s < 1 || s >= line.q) throw ConstructionError("s must lie in 1..q-1");

  // all s-subsets of one class
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (cur.size() == s) {
      subsets.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < line.q; ++i) {
      cur.push_back(i);
      choose(i + 1);
      cur.pop_back();
    }
  };
  choose(0);

  const std::size_t classes = line.classes.size();
  std::uint64_t total = 1;
  for (std::size_t c = 0; c < classes; ++c) {
    total *= subsets.size();
    if (total > options.max_selections)
      throw ConstructionError("family has more than " + std::to_string(options.max_selections) + " selections");
  }

  HjelmslevFamily fam;
  std::set<std::vector<Word>> seen;
  std::vector<std::size_t> idx(classes, 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    HjelmslevSelection sel;
    for (std::size_t c = 0; c < classes; ++c) sel.push_back(subsets[idx[c]]);
    auto code = hjelmslev_code(ring, line, sel);
    ++fam.selections;
    bool fresh = true;
    if (options.dedupe == Dedupe::Exact) {
      fresh = seen.insert(code.sorted_codewords()).second;
    } else {
      for (const auto& other : fam.codes) {
        auto eq = monomially_equivalent(code, other, options.monomial_cap);
        if (!eq) fam.undecided = true;
        if (eq.value_or(false)) {
          fresh = false;
          break;
        }
      }
    }
    if (fresh) {
      fam.codes.push_back(std::move(code));
      fam.representatives.push_back(std::move(sel));
    }
    for (std::size_t c = classes; c-- > 0;) {
      if (++idx[c] < subsets.size()) break;
      idx[c] = 0;
    }
  }
  return fam;
}

std::vector<std::uint32_t> GrayMap::map_word(std::span<const Element> word) const {
  std::vector<std::uint32_t> out;
  out.reserve(word.size() * q);
  for (Element e : word) out.insert(out.end(), image[e].begin(), image[e].end());
  return out;
}

GrayMap gray_map(const RingTable& ring) {
  const auto& comp = length_two_component(ring);
  const auto red = residue_index(ring, comp);
  const std::size_t q = comp.residue_size;
  const Element theta = ring.embed(0, comp.theta);
  std::vector<Element> tau;
  for (Element t : comp.residue_lift) tau.push_back(ring.embed(0, t));

  GrayMap g;
  g.q = q;
  g.field_add.resize(q * q);
  g.field_mul.resize(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      g.field_add[a * q + b] = red[ring.add(tau[a], tau[b])];
      g.field_mul[a * q + b] = red[ring.mul(tau[a], tau[b])];
    }

  g.image.resize(ring.order());
  for (Element x = 0; x < ring.order(); ++x) {
    const std::uint32_t b = red[x];
    const Element rest = ring.sub(x, tau[b]);
    std::optional<std::uint32_t> a;
    for (std::uint32_t i = 0; i < q; ++i)
      if (ring.mul(theta, tau[i]) == rest) a = i;
    if (!a) throw ConstructionError("element " + std::to_string(x) + " has no theta-adic digits");
    auto& img = g.image[x];
    for (std::uint32_t c = 0; c < q; ++c) img.push_back(g.add(*a, g.mul(b, c)));
  }

  const auto w = hom_weight_table(ring, Rational(static_cast<std::int64_t>(q) - 1));
  std::set<std::vector<std::uint32_t>> images;
  for (Element x = 0; x < ring.order(); ++x) {
    auto ham = std::count_if(g.image[x].begin(), g.image[x].end(), [](auto e) { return e != 0; });
    if (Rational(static_cast<std::int64_t>(ham)) != w(x))
      throw ConstructionError("Gray map is not an isometry at element " + std::to_string(x));
    images.insert(g.image[x]);
  }
  if (images.size() != ring.order()) throw ConstructionError("Gray map is not injective");
  std::set<std::vector<std::uint32_t>> affine;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) {
      std::vector<std::uint32_t> f;
      for (std::uint32_t c = 0; c < q; ++c) f.push_back(g.add(a, g.mul(b, c)));
      affine.insert(f);
    }
  if (affine != images) throw ConstructionError("Gray image is not the affine-function code");
  for (Element x : ring.socle())
    for (Element y : ring.socle()) {
      const auto& s = g.image[ring.add(x, y)];
      for (std::size_t c = 0; c < q; ++c)
        if (s[c] != g.add(g.image[x][c], g.image[y][c])) throw ConstructionError("Gray map is not additive on the socle");
    }
  return g;
}

LinearityCheck gray_linear_check(const LinearCode& code, const GrayMap& gray, std::size_t max_size) {
  if (code.size() > max_size)
    throw ConstructionError("code has " + std::to_string(code.size()) + " words, cap is " + std::to_string(max_size));
  std::vector<std::vector<std::uint32_t>> img;
  for (std::size_t i = 0; i < code.size(); ++i) img.push_back(gray.map_word(code.codeword(i)));
  std::unordered_set<std::vector<std::uint32_t>, VecHash> set(img.begin(), img.end());

  LinearityCheck out;
  std::vector<std::uint32_t> t;
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i; j < img.size(); ++j) {
      t.resize(img[i].size());
      for (std::size_t c = 0; c < t.size(); ++c) t[c] = gray.add(img[i][c], img[j][c]);
      if (!set.count(t)) {
        out.linear = false;
        out.witness = symbols(img[i]) + " + " + symbols(img[j]) + " = " + symbols(t);
        return out;
      }
    }
  for (std::uint32_t a = 2; a < gray.q; ++a)
    for (const auto& v : img) {
      t.resize(v.size());
      for (std::size_t c = 0; c < t.size(); ++c) t[c] = gray.mul(a, v[c]);
      if (!set.count(t)) {
        out.linear = false;
        out.witness = std::to_string(a) + " * " + symbols(v) + " = " + symbols(t);
        return out;
      }
    }
  return out;
}

LinearityCheck gray_linear_check(const LinearCode& code, std::size_t max_size) {
  return gray_linear_check(code, gray_map(code.ring()), max_size);
}

void write_field_code(std::ostream& out, const std::vector<std::vector<std::uint32_t>>& words) {
  for (const auto& w : words) {
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
    out << '\n';
  }
}

}  // namespace twoweight
