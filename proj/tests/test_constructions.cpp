#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "twoweight/constructions.hpp"
#include "twoweight/srg.hpp"

using namespace twoweight;

namespace {

GeneratorMatrix matrix(std::initializer_list<std::initializer_list<Element>> rows) {
  GeneratorMatrix g(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (auto row : rows) {
    Eigen::Index j = 0;
    for (Element e : row) g(i, j++) = e;
    ++i;
  }
  return g;
}

RingPtr ring(const char* s) { return build_ring(parse_ring_spec(s)); }

// commutative rings only: neighbours iff the determinant is not a unit
bool neighbours(const RingTable& r, const Point& x, const Point& y) {
  return !r.is_unit(r.sub(r.mul(x[0], y[1]), r.mul(x[1], y[0])));
}

}  // namespace

TEST_CASE("Z4 Hjelmslev line") {
  auto r = ring("Z4");
  auto line = hjelmslev_points(*r);
  CHECK(line.q == 2);
  CHECK(line.points == std::vector<Point>{{0, 1}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 1}});
  REQUIRE(line.classes.size() == 3);
  CHECK(line.classes[0] == std::vector<Point>{{0, 1}, {2, 1}});
  CHECK(line.classes[1] == std::vector<Point>{{1, 0}, {1, 2}});
  CHECK(line.classes[2] == std::vector<Point>{{1, 1}, {1, 3}});
}

TEST_CASE("Hjelmslev classes agree with the determinant test") {
  for (const char* name : {"Z4", "ZX(2,2)", "Z9", "ZX(3,2)", "GR(4,2)", "Z25"}) {
    CAPTURE(name);
    auto r = ring(name);
    auto line = hjelmslev_points(*r);
    const std::size_t q = line.q;
    CHECK(line.points.size() == q * (q + 1));
    CHECK(line.classes.size() == q + 1);

    // every regular pair is a unit multiple of exactly one point
    std::size_t regular = 0;
    for (Element a = 0; a < r->order(); ++a)
      for (Element b = 0; b < r->order(); ++b) regular += (r->is_unit(a) || r->is_unit(b));
    CHECK(regular == line.points.size() * r->unit_count());

    for (std::size_t c = 0; c < line.classes.size(); ++c)
      for (std::size_t d = 0; d < line.classes.size(); ++d)
        for (const auto& x : line.classes[c])
          for (const auto& y : line.classes[d]) CHECK(neighbours(*r, x, y) == (c == d));
  }
}

TEST_CASE("chain length other than 2 is rejected") {
  CHECK_THROWS_AS(hjelmslev_points(*ring("Z8")), ConstructionError);
  CHECK_THROWS_AS(hjelmslev_points(*ring("GF(4)")), ConstructionError);
  CHECK_THROWS_AS(hjelmslev_points(*ring("Z4xZ9")), ConstructionError);
  CHECK_THROWS_AS(gray_map(*ring("Z2")), ConstructionError);
}

TEST_CASE("invalid selections") {
  auto r = ring("Z9");
  auto line = hjelmslev_points(*r);
  CHECK_THROWS_AS(hjelmslev_code(r, line, {{0}, {0}, {0}}), ConstructionError);
  CHECK_THROWS_AS(hjelmslev_code(r, line, {{0}, {0}, {0}, {0, 1}}), ConstructionError);
  CHECK_THROWS_AS(hjelmslev_code(r, line, {{0, 0}, {0, 1}, {0, 1}, {0, 1}}), ConstructionError);
  CHECK_THROWS_AS(hjelmslev_code(r, line, {{3}, {0}, {0}, {0}}), ConstructionError);
  CHECK_THROWS_AS(hjelmslev_code(r, 3), ConstructionError);
  CHECK_THROWS_AS(hjelmslev_code(r, 0), ConstructionError);
}

TEST_CASE("prediction closed forms") {
  auto p = hjelmslev_prediction(2, 1);
  CHECK(p.N == 16);
  CHECK(p.k == 6);
  CHECK(p.lambda == 2);
  CHECK(p.mu == 2);
  CHECK(p.w1 == 4);
  CHECK(p.w2 == 8);
  p = hjelmslev_prediction(3, 1);
  CHECK(p.w1 == 18);
  CHECK(p.w2 == 27);
  CHECK(p.k == 24);
  CHECK(p.lambda == 9);
  CHECK(p.mu == 6);
  p = hjelmslev_prediction(4, 1);
  CHECK(p.k == 60);
  CHECK(p.lambda == 20);
  CHECK(p.mu == 12);
}

TEST_CASE("Hjelmslev codes have the predicted weights and graphs") {
  const std::vector<std::pair<const char*, int>> rings{{"Z4", 2}, {"ZX(2,2)", 2}, {"Z9", 3}, {"ZX(3,2)", 3}, {"GR(4,2)", 4}};
  for (auto [name, q] : rings)
    for (int s = 1; s < q; ++s) {
      CAPTURE(name);
      CAPTURE(s);
      auto r = ring(name);
      auto code = hjelmslev_code(r, static_cast<std::size_t>(s));
      auto pred = hjelmslev_prediction(q, s);
      CHECK(code.size() == static_cast<std::size_t>(pred.N));
      CHECK(code.length() == static_cast<std::size_t>(s * (q + 1)));
      auto w = hom_weight_table(*r, pred.gamma);

      // direct count over all x in R^2
      std::map<Rational, std::int64_t> counts;
      const auto& G = code.generator();
      for (Element a = 0; a < r->order(); ++a)
        for (Element b = 0; b < r->order(); ++b) {
          Rational wt(0);
          for (Eigen::Index j = 0; j < G.cols(); ++j) wt += w(r->add(r->mul(a, G(0, j)), r->mul(b, G(1, j))));
          ++counts[wt];
        }
      CHECK(counts.size() == 3);
      CHECK(counts[Rational(0)] == 1);
      CHECK(counts[Rational(pred.w1)] == pred.k);
      CHECK(counts[Rational(pred.w2)] == pred.N - 1 - pred.k);

      auto props = check_code_properties(code, w);
      CHECK(props.proper);
      CHECK(props.regular);
      CHECK(props.projective);
      auto cert = certify_srg(code, w);
      CHECK(cert.params.N == pred.N);
      CHECK(cert.params.k == pred.k);
      CHECK(cert.params.lambda == pred.lambda);
      CHECK(cert.params.mu == pred.mu);
      CHECK(verify_eigen_relations(code, w, cert.params).ok());
    }
}

TEST_CASE("Gray map tables") {
  auto z4 = gray_map(*ring("Z4"));
  CHECK(z4.image[0] == std::vector<std::uint32_t>{0, 0});
  CHECK(z4.image[1] == std::vector<std::uint32_t>{0, 1});
  CHECK(z4.image[2] == std::vector<std::uint32_t>{1, 1});
  CHECK(z4.image[3] == std::vector<std::uint32_t>{1, 0});

  auto z9 = gray_map(*ring("Z9"));
  CHECK(z9.image[3] == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(z9.image[0] == std::vector<std::uint32_t>{0, 0, 0});
}

TEST_CASE("Gray isometry and GRM(1,1) image") {
  for (const char* name : {"Z4", "ZX(2,2)", "Z9", "ZX(3,2)", "GR(4,2)", "Z25"}) {
    CAPTURE(name);
    auto r = ring(name);
    auto g = gray_map(*r);
    const std::size_t q = g.q;
    auto chi = character_weight_table(*r, static_cast<double>(q - 1));
    std::map<std::size_t, std::size_t> enumerator;
    for (Element x = 0; x < r->order(); ++x) {
      auto ham = static_cast<std::size_t>(std::count_if(g.image[x].begin(), g.image[x].end(), [](auto e) { return e != 0; }));
      CHECK(std::abs(chi[x] - static_cast<double>(ham)) < 1e-9);
      ++enumerator[ham];
    }
    CHECK(enumerator == std::map<std::size_t, std::size_t>{{0, 1}, {q - 1, q * q - q}, {q, q - 1}});
  }
}

TEST_CASE("Gray isometry on codewords") {
  for (const char* name : {"Z4", "Z9", "GR(4,2)"}) {
    CAPTURE(name);
    auto r = ring(name);
    auto g = gray_map(*r);
    auto code = hjelmslev_code(r, 1);
    auto w = hom_weight_table(*r, Rational(static_cast<std::int64_t>(g.q) - 1));
    for (std::size_t i = 0; i < code.size(); ++i) {
      auto word = code.codeword(i);
      auto img = g.map_word(word);
      auto ham = std::count_if(img.begin(), img.end(), [](auto e) { return e != 0; });
      CHECK(Rational(static_cast<std::int64_t>(ham)) == w.word_weight(word));
    }
  }
}

TEST_CASE("Gray linearity") {
  auto z4 = ring("Z4");
  auto diag = LinearCode::from_generator(z4, matrix({{1, 1}}));
  CHECK(diag.size() == 4);
  auto check = gray_linear_check(diag);
  CHECK(check.linear);
  CHECK(check.witness.empty());

  auto zero = LinearCode::from_generator(z4, matrix({{0, 0}}));
  CHECK(zero.size() == 1);
  CHECK(gray_linear_check(zero).linear);

  // 2Z4 maps onto the repetition code, which is linear
  CHECK(gray_linear_check(LinearCode::from_generator(z4, matrix({{2, 2, 2}}))).linear);

  auto fam = enumerate_hjelmslev_family(z4, 1);
  for (const auto& code : fam.codes) {
    auto c = gray_linear_check(code);
    CHECK_FALSE(c.linear);
    CHECK_FALSE(c.witness.empty());
  }

  CHECK_THROWS_AS(gray_linear_check(hjelmslev_code(ring("GR(4,2)"), 1), 100), ConstructionError);
}

TEST_CASE("family enumeration") {
  auto z4 = ring("Z4");
  auto fam = enumerate_hjelmslev_family(z4, 1);
  CHECK(fam.selections == 8);
  CHECK(fam.codes.size() == 4);
  CHECK(fam.representatives.size() == 4);
  std::set<std::vector<Word>> keys;
  for (const auto& c : fam.codes) keys.insert(c.sorted_codewords());
  CHECK(keys.size() == 4);

  // any selection reproduces one of the representatives
  auto line = hjelmslev_points(*z4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        CHECK(keys.count(hjelmslev_code(z4, line, {{a}, {b}, {c}}).sorted_codewords()) == 1);

  FamilyOptions mono;
  mono.dedupe = Dedupe::Monomial;
  auto m = enumerate_hjelmslev_family(z4, 1, mono);
  CHECK(m.codes.size() == 1);
  CHECK_FALSE(m.undecided);

  auto z9 = enumerate_hjelmslev_family(ring("Z9"), 1);
  CHECK(z9.selections == 81);
  CHECK(z9.codes.size() == 27);

  FamilyOptions tiny;
  tiny.max_selections = 10;
  CHECK_THROWS_AS(enumerate_hjelmslev_family(ring("Z9"), 1, tiny), ConstructionError);
}

TEST_CASE("field code output") {
  std::ostringstream out;
  write_field_code(out, {{0, 1}, {1, 1}});
  CHECK(out.str() == "0 1\n1 1\n");
}
