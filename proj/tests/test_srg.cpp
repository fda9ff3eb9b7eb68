#include <algorithm>
#include <set>

#include "doctest.h"
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

LinearCode gf_example() {
  return LinearCode::from_generator(ring("GF(4)xGF(2)"), matrix({{5, 5, 1}, {0, 4, 4}}));
}

// one point from each neighbour class of the Z4 Hjelmslev line
LinearCode z4_hjelmslev() { return LinearCode::from_generator(ring("Z4"), matrix({{0, 1, 1}, {1, 0, 1}})); }

// Counts common neighbours of every pair directly, without matrix algebra.
struct PairCounts {
  std::set<std::int64_t> degrees, lambdas, mus;
};

PairCounts count_pairs(const LinearCode& code, const WeightTable& w, const Rational& w1) {
  const auto N = code.size();
  std::vector<std::vector<bool>> adj(N, std::vector<bool>(N, false));
  for (std::size_t u = 0; u < N; ++u)
    for (std::size_t v = 0; v < N; ++v) {
      if (u == v) continue;
      Word d(code.length());
      for (std::size_t j = 0; j < code.length(); ++j) d[j] = code.ring().sub(code.codeword(u)[j], code.codeword(v)[j]);
      adj[u][v] = w.word_weight(d) == w1;
    }
  PairCounts pc;
  for (std::size_t u = 0; u < N; ++u) {
    pc.degrees.insert(std::count(adj[u].begin(), adj[u].end(), true));
    for (std::size_t v = u + 1; v < N; ++v) {
      std::int64_t common = 0;
      for (std::size_t x = 0; x < N; ++x) common += adj[u][x] && adj[v][x];
      (adj[u][v] ? pc.lambdas : pc.mus).insert(common);
    }
  }
  return pc;
}

}  // namespace

TEST_CASE("srg spectrum") {
  auto a = srg_spectrum(96, 45, 24, 18);
  REQUIRE(a.ok());
  CHECK(a->rho1 == -3);
  CHECK(a->m1 == 75);
  CHECK(a->rho2 == 9);
  CHECK(a->m2 == 20);

  auto b = srg_spectrum(16, 6, 2, 2);
  REQUIRE(b.ok());
  CHECK(b->rho1 == -2);
  CHECK(b->rho2 == 2);
  CHECK(b->m1 == 9);
  CHECK(b->m2 == 6);

  auto pentagon = srg_spectrum(5, 2, 0, 1);
  CHECK_FALSE(pentagon.ok());
  CHECK(pentagon.reason().find("perfect square") != std::string::npos);
  CHECK_FALSE(srg_spectrum(4, 4, 0, 0).ok());
  CHECK_FALSE(srg_spectrum(6, 2, 1, 0)->primitive);
}

TEST_CASE("spectrum invariants hold on a parameter sweep") {
  int accepted = 0;
  for (std::int64_t N = 5; N <= 60; ++N)
    for (std::int64_t k = 1; k < N; ++k)
      for (std::int64_t l = 0; l < k; ++l)
        for (std::int64_t m = 0; m <= k; ++m) {
          auto s = srg_spectrum(N, k, l, m);
          if (!s) continue;
          ++accepted;
          CHECK(s->rho1 < s->rho2);
          CHECK(s->mu == s->k + s->rho1 * s->rho2);
          CHECK(s->lambda == s->k + s->rho1 + s->rho2 + s->rho1 * s->rho2);
          CHECK(s->m1 + s->m2 == N - 1);
          CHECK(s->m1 * s->rho1 + s->m2 * s->rho2 + k == 0);
        }
  CHECK(accepted > 0);
}

TEST_CASE("code targets") {
  auto a = derive_code_targets(*srg_spectrum(96, 45, 24, 18), 4);
  REQUIRE(a.ok());
  CHECK(a->theta == 8);
  CHECK(a->w1 == 16);
  CHECK(a->w2 == 24);
  CHECK(a->n == 5);
  CHECK(a->freq1 == 45);
  CHECK(a->freq2 == 50);

  auto b = derive_code_targets(*srg_spectrum(729, 140, 13, 30), 1);
  REQUIRE(b.ok());
  CHECK(b->theta == 27);
  CHECK(b->w1 == 567);
  CHECK(b->w2 == 594);
  CHECK(b->w2 - b->w1 == b->theta);

  auto c = derive_code_targets(*srg_spectrum(16, 6, 2, 2), 2);
  REQUIRE(c.ok());
  CHECK(c->theta == 4);
  CHECK(c->w1 == 4);
  CHECK(c->w2 == 8);
  CHECK(c->n == 3);

  CHECK_FALSE(derive_code_targets(*srg_spectrum(16, 6, 2, 2), 4).ok());
  SrgParams d;
  d.N = 100;
  d.rho1 = -2;
  d.rho2 = 6;
  d.m2 = 1;
  auto rejected = derive_code_targets(d, 1);
  CHECK_FALSE(rejected.ok());
  CHECK(rejected.reason().find("does not divide N") != std::string::npos);
}

TEST_CASE("certify the GF(4)xGF(2) example") {
  auto code = gf_example();
  auto w = hom_weight_table(code.ring(), Rational(3));
  auto cert = certify_srg(code, w);
  CHECK(cert.params.N == 16);
  CHECK(cert.params.k == 9);
  CHECK(cert.params.lambda == 4);
  CHECK(cert.params.mu == 6);
  CHECK(cert.params.rho1 == -3);
  CHECK(cert.params.rho2 == 1);
  CHECK(cert.params.primitive);
  CHECK(cert.w1 == Rational(8));
  CHECK(cert.w2 == Rational(12));

  auto pc = count_pairs(code, w, cert.w1);
  CHECK(pc.degrees == std::set<std::int64_t>{9});
  CHECK(pc.lambdas == std::set<std::int64_t>{4});
  CHECK(pc.mus == std::set<std::int64_t>{6});

  auto report = verify_eigen_relations(code, w, cert.params);
  CHECK_MESSAGE(report.ok(), report.mismatches());
  CHECK(cert.params.m2 == 9);
}

TEST_CASE("certify the Z4 Hjelmslev code") {
  auto code = z4_hjelmslev();
  auto w = hom_weight_table(code.ring(), Rational(2));
  CHECK(weight_enumerator(code, w).to_string() == "0^1 4^6 8^9");
  CHECK(verify_distance_identities(code, w).all());
  auto cert = certify_srg(code, w);
  CHECK(cert.params == *srg_spectrum(16, 6, 2, 2));
  auto pc = count_pairs(code, w, cert.w1);
  CHECK(pc.lambdas == std::set<std::int64_t>{2});
  CHECK(pc.mus == std::set<std::int64_t>{2});
  auto report = verify_eigen_relations(code, w, cert.params);
  CHECK_MESSAGE(report.ok(), report.mismatches());

  auto targets = derive_code_targets(cert.params, 2);
  REQUIRE(targets.ok());
  CHECK(Rational(targets->w1) == cert.w1);
  CHECK(Rational(targets->w2) == cert.w2);
}

TEST_CASE("eigen relations catch a wrong parameter set") {
  auto code = z4_hjelmslev();
  auto w = hom_weight_table(code.ring(), Rational(2));
  auto wrong = *srg_spectrum(16, 9, 4, 6);
  CHECK_FALSE(verify_eigen_relations(code, w, wrong).ok());
  CHECK_FALSE(verify_eigen_relations(code, w, wrong).mismatches().empty());
}

TEST_CASE("one-weight input is rejected") {
  auto z2 = ring("Z2");
  auto rep = LinearCode::from_generator(z2, matrix({{1, 1}}));
  auto w = hom_weight_table(*z2, Rational(1));
  CHECK_THROWS_AS(certify_srg(rep, w), SrgError);
  CHECK_THROWS_AS(verify_eigen_relations(rep, w, *srg_spectrum(16, 6, 2, 2)), SrgError);
}

TEST_CASE("imprimitive graph is reported, not thrown") {
  // the full-space code over GF(2)^2 at Hamming weight: weights 1 and 2 -> 4-cycle = K_{2,2}
  auto z2 = ring("Z2");
  auto code = LinearCode::from_generator(z2, matrix({{1, 0}, {0, 1}}));
  auto w = hom_weight_table(*z2, Rational(1, 2));
  auto cert = certify_srg(code, w);
  CHECK(cert.params.N == 4);
  CHECK(cert.params.k == 2);
  CHECK_FALSE(cert.params.primitive);
}
