#include "twoweight/srg.hpp"

#include <cmath>
#include <deque>

namespace twoweight {

namespace {

std::optional<std::int64_t> exact_sqrt(std::int64_t v) {
  if (v < 0) return std::nullopt;
  auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(v))));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  if (s * s != v) return std::nullopt;
  return s;
}

using Adjacency = DenseMatrix<std::int32_t>;

bool connected(const Adjacency& A, bool complement) {
  const Eigen::Index n = A.rows();
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
  std::deque<Eigen::Index> queue{0};
  seen[0] = 1;
  Eigen::Index count = 1;
  while (!queue.empty()) {
    Eigen::Index u = queue.front();
    queue.pop_front();
    for (Eigen::Index v = 0; v < n; ++v) {
      if (v == u || seen[static_cast<std::size_t>(v)]) continue;
      bool edge = complement ? A(u, v) == 0 : A(u, v) != 0;
      if (!edge) continue;
      seen[static_cast<std::size_t>(v)] = 1;
      ++count;
      queue.push_back(v);
    }
  }
  return count == n;
}

}  // namespace

std::string SrgParams::to_string() const {
  return "srg(" + std::to_string(N) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," +
         std::to_string(mu) + ")";
}

Verdict<SrgParams> srg_spectrum(std::int64_t N, std::int64_t k, std::int64_t lambda, std::int64_t mu) {
  if (!(N > k && k > 0)) return Verdict<SrgParams>::reject("requires N > k > 0");
  if (lambda < 0 || mu < 0) return Verdict<SrgParams>::reject("lambda and mu must be non-negative");
  const std::int64_t b = lambda - mu, c = k - mu;
  const std::int64_t disc = b * b + 4 * c;
  auto s = exact_sqrt(disc);
  if (!s) return Verdict<SrgParams>::reject("discriminant " + std::to_string(disc) + " is not a perfect square");
  if (*s == 0) return Verdict<SrgParams>::reject("repeated eigenvalue");
  if ((b + *s) % 2 != 0) return Verdict<SrgParams>::reject("eigenvalues are half-integers");
  SrgParams p{N, k, lambda, mu};
  p.rho1 = (b - *s) / 2;
  p.rho2 = (b + *s) / 2;
  const std::int64_t n1 = (N - 1) * p.rho2 + k, n2 = (N - 1) * p.rho1 + k, d = p.rho2 - p.rho1;
  if (n1 % d != 0 || n2 % d != 0) return Verdict<SrgParams>::reject("multiplicities are not integral");
  p.m1 = n1 / d;
  p.m2 = -n2 / d;
  if (p.m1 <= 0 || p.m2 <= 0) return Verdict<SrgParams>::reject("multiplicities are not positive");
  p.primitive = mu != 0 && mu != k;
  return Verdict<SrgParams>::accept(p);
}

Verdict<CodeTargets> derive_code_targets(const SrgParams& params, std::int64_t unit_count) {
  const std::int64_t d = params.rho2 - params.rho1;
  if (d <= 0 || params.N % d != 0)
    return Verdict<CodeTargets>::reject("rho2 - rho1 = " + std::to_string(d) + " does not divide N = " +
                                         std::to_string(params.N));
  if (unit_count <= 0 || params.m2 % unit_count != 0)
    return Verdict<CodeTargets>::reject("unit count " + std::to_string(unit_count) + " does not divide m2 = " +
                                         std::to_string(params.m2));
  CodeTargets t;
  t.theta = params.N / d;
  t.t = -(params.rho1 + 1);
  t.w1 = t.t * t.theta;
  t.w2 = -params.rho1 * t.theta;
  t.freq1 = params.k;
  t.freq2 = params.N - params.k - 1;
  t.unit_count = unit_count;
  t.n = params.m2 / unit_count;
  if (t.w1 <= 0) return Verdict<CodeTargets>::reject("w1 = " + std::to_string(t.w1) + " is not positive");
  return Verdict<CodeTargets>::accept(t);
}

SrgCertificate certify_srg(const LinearCode& code, const WeightTable& weights) {
  auto spectrum = weight_enumerator(code, weights).nonzero_weights();
  if (spectrum.size() != 2)
    throw SrgError("code has " + std::to_string(spectrum.size()) + " nonzero weights, not two");
  const Rational w1 = spectrum[0], w2 = spectrum[1];

  const RingTable& R = code.ring();
  const auto& C = code.codewords();
  const auto N = static_cast<Eigen::Index>(code.size());
  Adjacency A = Adjacency::Zero(N, N);
  std::vector<std::int64_t> iw;
  std::int64_t scale = 1;
  for (const auto& w : weights.weights) scale = lcm64(scale, w.den());
  for (const auto& w : weights.weights) iw.push_back((w * Rational(scale)).to_integer());
  const std::int64_t target = (w1 * Rational(scale)).to_integer();
  for (Eigen::Index u = 0; u < N; ++u)
    for (Eigen::Index v = u + 1; v < N; ++v) {
      std::int64_t w = 0;
      for (Eigen::Index j = 0; j < C.cols(); ++j) w += iw[R.sub(C(u, j), C(v, j))];
      if (w == target) A(u, v) = A(v, u) = 1;
    }

  const std::int64_t k = A.row(0).sum();
  for (Eigen::Index u = 0; u < N; ++u)
    if (A.row(u).sum() != k) throw SrgError("graph is not regular");

  const Adjacency A2 = A * A;
  SrgCertificate cert;
  std::optional<std::int64_t> lambda, mu;
  for (Eigen::Index v = 1; v < N && (!lambda || !mu); ++v) {
    if (A(0, v) && !lambda) {
      lambda = A2(0, v);
      cert.adjacent_probe = static_cast<std::size_t>(v);
    } else if (!A(0, v) && !mu) {
      mu = A2(0, v);
      cert.nonadjacent_probe = static_cast<std::size_t>(v);
    }
  }
  if (!lambda || !mu) throw SrgError("graph is complete or empty");

  for (Eigen::Index u = 0; u < N; ++u)
    for (Eigen::Index v = 0; v < N; ++v) {
      std::int64_t lhs = A2(u, v) - (*lambda - *mu) * A(u, v) - (u == v ? k - *mu : 0);
      if (lhs != *mu)
        throw SrgError("A^2 - (lambda - mu) A - (k - mu) I = mu J fails at (" + std::to_string(u) + "," +
                       std::to_string(v) + ")");
    }

  auto spec = srg_spectrum(N, k, *lambda, *mu);
  if (!spec) throw SrgError("certified parameters have no integral spectrum: " + spec.reason());
  cert.params = *spec;
  cert.params.primitive = connected(A, false) && connected(A, true);
  cert.w1 = w1;
  cert.w2 = w2;
  return cert;
}

bool EigenReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

std::string EigenReport::mismatches() const {
  std::string s;
  for (const auto& c : checks)
    if (!c.ok) s += c.name + ": " + c.detail + "\n";
  return s;
}

EigenReport verify_eigen_relations(const LinearCode& code, const WeightTable& weights, const SrgParams& params) {
  auto e = weight_enumerator(code, weights);
  auto nz = e.nonzero_weights();
  if (nz.size() != 2) throw SrgError("verify_eigen_relations requires a two-weight code");
  const Rational w1 = nz[0], w2 = nz[1];
  const Rational gamma = weights.gamma;
  const Rational C(static_cast<std::int64_t>(code.size()));
  const Rational n(static_cast<std::int64_t>(code.length()));
  const Rational U(static_cast<std::int64_t>(code.ring().unit_count()));
  const Rational k(params.k), r1(params.rho1), r2(params.rho2);

  EigenReport report;
  auto check = [&](std::string name, const Rational& lhs, const Rational& rhs) {
    report.checks.push_back({std::move(name), lhs == rhs, lhs.to_string() + " vs " + rhs.to_string()});
  };
  check("frequency of w1 equals k", Rational(static_cast<std::int64_t>(e.spectrum[w1])), k);
  check("(w2-w1)k = w2(|C|-1) - gamma n |C|", (w2 - w1) * k, w2 * (C - Rational(1)) - gamma * n * C);
  check("(w2-w1)rho1 = -w2", (w2 - w1) * r1, -w2);
  check("(w2-w1)rho2 = -w2 + gamma |C|/|R^x|", (w2 - w1) * r2, -w2 + gamma * C / U);

  const std::int64_t spread = params.rho2 - params.rho1;
  report.checks.push_back({"rho2-rho1 divides |C|", spread != 0 && static_cast<std::int64_t>(code.size()) % spread == 0,
                           std::to_string(spread) + " | " + std::to_string(code.size())});
  const Rational d = gamma * C / (U * Rational(spread));
  check("w1 = -(rho1+1) gamma|C|/(|R^x|(rho2-rho1))", w1, -(r1 + Rational(1)) * d);
  check("w2 = -rho1 gamma|C|/(|R^x|(rho2-rho1))", w2, -r1 * d);

  // Rescaled to gamma = |R^x|: w1 = d t, w2 = d (t + 1) with integral d and t.
  const Rational scale = U / gamma;
  const Rational d_units = C / Rational(spread);
  const Rational t = -(r1 + Rational(1));
  report.checks.push_back({"d = |C|/(rho2-rho1) is integral", d_units.is_integer(), d_units.to_string()});
  check("w1 = d t at gamma = |R^x|", w1 * scale, d_units * t);
  check("w2 = d (t+1) at gamma = |R^x|", w2 * scale, d_units * (t + Rational(1)));

  check("m1 = |C| - 1 - n|R^x|", Rational(params.m1), C - Rational(1) - n * U);
  check("m2 = n|R^x|", Rational(params.m2), n * U);
  return report;
}

}  // namespace twoweight
