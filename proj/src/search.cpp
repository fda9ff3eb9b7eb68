#include "twoweight/search.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_set>

namespace twoweight {

namespace {

// Mixed-radix walk over the product of per-row lists, row 0 least significant.
template <typename F>
void for_each_product(const std::vector<std::vector<Element>>& lists, F&& f) {
  std::vector<std::size_t> idx(lists.size(), 0);
  Word cur(lists.size());
  for (std::size_t j = 0; j < lists.size(); ++j) cur[j] = lists[j][0];
  for (;;) {
    f(cur);
    std::size_t j = 0;
    while (j < lists.size()) {
      if (++idx[j] < lists[j].size()) {
        cur[j] = lists[j][idx[j]];
        break;
      }
      idx[j] = 0;
      cur[j] = lists[j][0];
      ++j;
    }
    if (j == lists.size()) return;
  }
}

std::vector<std::vector<Element>> column_lists(const RingTable& ring, const Shape& shape) {
  std::vector<std::vector<Element>> lists;
  auto comps = shape.row_components();
  auto parts = shape.row_parts();
  for (std::size_t j = 0; j < comps.size(); ++j) lists.push_back(component_ideal(ring, comps[j], parts[j]));
  return lists;
}

}  // namespace

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::Undecided: return "undecided";
  }
  return "?";
}

bool is_regular_vector(const RingTable& ring, std::span<const Element> y) {
  const auto& comps = ring.components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool covered = false;
    for (Element e : y) {
      Element local = ring.embed(i, ring.project(i, e));
      if (ring.principal_ideals()[ring.ideal_of(local)].members.size() == comps[i].order) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

OrbitReps regular_orbit_reps(const RingTable& ring, const Shape& shape) {
  OrbitReps out;
  std::vector<std::pair<Word, std::size_t>> found;
  std::set<Word> orbit;
  Word scaled;
  for_each_product(column_lists(ring, shape), [&](const Word& y) {
    ++out.module_size;
    if (!is_regular_vector(ring, y)) return;
    ++out.regular_count;
    orbit.clear();
    bool least = true;
    for (Element u : ring.units()) {
      scaled = y;
      for (auto& e : scaled) e = ring.mul(e, u);
      if (scaled < y) {
        least = false;
        break;
      }
      orbit.insert(scaled);
    }
    if (least) found.emplace_back(y, orbit.size());
  });
  std::sort(found.begin(), found.end());
  for (auto& [rep, size] : found) {
    out.reps.push_back(rep);
    out.class_sizes.push_back(size);
  }
  return out;
}

std::vector<Word> coefficient_vectors(const RingTable& ring, const Shape& shape) {
  std::vector<std::vector<Element>> lists;
  auto comps = shape.row_components();
  auto parts = shape.row_parts();
  for (std::size_t j = 0; j < comps.size(); ++j) lists.push_back(transversal(ring, comps[j], parts[j]));
  std::vector<Word> out;
  bool first = true;
  for_each_product(lists, [&](const Word& x) {
    if (first) {
      first = false;
      return;
    }
    out.push_back(x);
  });
  return out;
}

DioBuild build_dio_system(const RingTable& ring, const Shape& shape, const CodeTargets& targets,
                          const DioLimits& limits) {
  DioBuild b;
  if (targets.unit_count != static_cast<std::int64_t>(ring.unit_count())) {
    b.reason = "targets assume " + std::to_string(targets.unit_count) + " units, ring has " +
               std::to_string(ring.unit_count());
    return b;
  }
  const std::uint64_t t = shape.code_size(ring);
  if (t - 1 > limits.max_rows) {
    b.reason = "system has " + std::to_string(t - 1) + " rows, cap is " + std::to_string(limits.max_rows);
    return b;
  }
  DioSystem& s = b.system;
  s.shape = shape;
  s.columns = regular_orbit_reps(ring, shape);
  if ((t - 1) * s.columns.size() > limits.max_entries) {
    b.reason = "system has " + std::to_string(t - 1) + " x " + std::to_string(s.columns.size()) +
               " entries, cap is " + std::to_string(limits.max_entries);
    return b;
  }
  s.rows = coefficient_vectors(ring, shape);
  s.w1 = targets.w1;
  s.w2 = targets.w2;
  s.n = targets.n;
  s.k = targets.freq1;

  const auto w = hom_weight_table(ring, Rational(static_cast<std::int64_t>(ring.unit_count()))).integer_weights();
  const auto m = static_cast<Eigen::Index>(s.rows.size());
  const auto r = static_cast<Eigen::Index>(s.columns.size());
  s.W.resize(m, r);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Word& x = s.rows[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < r; ++j) {
      const Word& y = s.columns.reps[static_cast<std::size_t>(j)];
      Element dot = 0;
      for (std::size_t l = 0; l < x.size(); ++l) dot = ring.add(dot, ring.mul(x[l], y[l]));
      s.W(i, j) = w[dot];
    }
  }
  b.built = true;
  return b;
}

namespace {

class DioSolver {
 public:
  DioSolver(const DioSystem& s, const SolveOptions& o) : s_(s), opt_(o) {
    m_ = static_cast<std::size_t>(s.W.rows());
    r_ = static_cast<std::size_t>(s.W.cols());
    order_.resize(r_);
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<std::int64_t> colsum(r_);
    for (std::size_t j = 0; j < r_; ++j) colsum[j] = s.W.col(static_cast<Eigen::Index>(j)).sum();
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return colsum[a] > colsum[b]; });

    const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 4;
    smin_.assign((r_ + 1) * m_, big);
    smax_.assign((r_ + 1) * m_, 0);
    ssum_.assign((r_ + 1) * m_, 0);
    for (std::size_t p = r_; p-- > 0;) {
      auto col = static_cast<Eigen::Index>(order_[p]);
      for (std::size_t i = 0; i < m_; ++i) {
        std::int64_t v = s.W(static_cast<Eigen::Index>(i), col);
        smin_[p * m_ + i] = std::min(smin_[(p + 1) * m_ + i], v);
        smax_[p * m_ + i] = std::max(smax_[(p + 1) * m_ + i], v);
        ssum_[p * m_ + i] = ssum_[(p + 1) * m_ + i] + v;
      }
    }
    sigma_.assign(m_, 0);
    pick_.assign(r_, 0);
  }

  DioResult run() {
    if (s_.n >= 0 && static_cast<std::size_t>(s_.n) <= r_) dfs(0, 0);
    std::sort(result_.solutions.begin(), result_.solutions.end());
    return std::move(result_);
  }

 private:
  bool stopped() const { return !result_.complete || result_.truncated; }

  void dfs(std::size_t pos, std::int64_t chosen) {
    if (stopped()) return;
    if (++result_.nodes > opt_.node_cap) {
      result_.complete = false;
      return;
    }
    const std::int64_t left = s_.n - chosen;
    if (left == 0) {
      leaf();
      return;
    }
    if (static_cast<std::int64_t>(r_ - pos) < left) return;
    const std::size_t base = pos * m_;
    for (std::size_t i = 0; i < m_; ++i) {
      std::int64_t lo = left * smin_[base + i];
      std::int64_t hi = std::min(left * smax_[base + i], ssum_[base + i]);
      if (sigma_[i] + lo > s_.w2 || sigma_[i] + hi < s_.w1) return;
    }
    auto col = static_cast<Eigen::Index>(order_[pos]);
    for (std::size_t i = 0; i < m_; ++i) sigma_[i] += s_.W(static_cast<Eigen::Index>(i), col);
    pick_[pos] = 1;
    dfs(pos + 1, chosen + 1);
    pick_[pos] = 0;
    for (std::size_t i = 0; i < m_; ++i) sigma_[i] -= s_.W(static_cast<Eigen::Index>(i), col);
    dfs(pos + 1, chosen);
  }

  void leaf() {
    std::int64_t low = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (sigma_[i] == s_.w1)
        ++low;
      else if (sigma_[i] != s_.w2)
        return;
    }
    if (low != s_.k) return;
    DioSolution sol;
    sol.v.assign(r_, 0);
    for (std::size_t p = 0; p < r_; ++p)
      if (pick_[p]) sol.v[order_[p]] = 1;
    sol.u.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) sol.u[i] = sigma_[i] == s_.w1;
    result_.solutions.push_back(std::move(sol));
    if (result_.solutions.size() >= opt_.max_solutions) result_.truncated = true;
  }

  const DioSystem& s_;
  SolveOptions opt_;
  std::size_t m_ = 0, r_ = 0;
  std::vector<std::size_t> order_;
  std::vector<std::int64_t> smin_, smax_, ssum_, sigma_;
  std::vector<std::uint8_t> pick_;
  DioResult result_;
};

}  // namespace

DioResult solve_dio(const DioSystem& system, const SolveOptions& options) {
  return DioSolver(system, options).run();
}

std::vector<DioSolution> brute_force_dio(const DioSystem& s) {
  const auto m = s.W.rows();
  const auto r = static_cast<unsigned>(s.W.cols());
  if (r > 30) throw SearchError("brute force is limited to 30 columns");
  std::vector<DioSolution> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    if (std::popcount(mask) != s.n) continue;
    DioSolution sol;
    sol.v.assign(r, 0);
    for (unsigned j = 0; j < r; ++j) sol.v[j] = (mask >> j) & 1;
    sol.u.assign(static_cast<std::size_t>(m), 0);
    bool ok = true;
    std::int64_t low = 0;
    for (Eigen::Index i = 0; i < m && ok; ++i) {
      std::int64_t sum = 0;
      for (unsigned j = 0; j < r; ++j)
        if (sol.v[j]) sum += s.W(i, j);
      // W v + (w2 - w1) u = w2 with u in {0,1}
      if (sum == s.w2) continue;
      if (sum + s.slack() == s.w2) {
        sol.u[static_cast<std::size_t>(i)] = 1;
        ++low;
      } else {
        ok = false;
      }
    }
    if (ok && low == s.k) out.push_back(std::move(sol));
  }
  std::sort(out.begin(), out.end());
  return out;
}

GeneratorMatrix generator_from_solution(const DioSystem& system, const DioSolution& solution) {
  std::vector<std::size_t> picked;
  for (std::size_t j = 0; j < solution.v.size(); ++j)
    if (solution.v[j]) picked.push_back(j);
  const auto rows = static_cast<Eigen::Index>(system.shape.rows());
  GeneratorMatrix G(rows, static_cast<Eigen::Index>(picked.size()));
  for (std::size_t c = 0; c < picked.size(); ++c)
    for (Eigen::Index i = 0; i < rows; ++i)
      G(i, static_cast<Eigen::Index>(c)) = system.columns.reps[picked[c]][static_cast<std::size_t>(i)];
  return G;
}

SearchOutcome search_codes(const SrgParams& params, RingPtr ring, const Shape& shape, const SearchOptions& options) {
  SearchOutcome out;
  const auto units = static_cast<std::int64_t>(ring->unit_count());
  auto targets = derive_code_targets(params, units);
  if (!targets) {
    out.reason = targets.reason();
    return out;
  }
  if (shape.code_size(*ring) != static_cast<std::uint64_t>(params.N)) {
    out.reason = "shape " + shape.to_string() + " does not give a module of size " + std::to_string(params.N);
    return out;
  }
  auto built = build_dio_system(*ring, shape, *targets, options.limits);
  if (!built.built) {
    out.status = SearchStatus::Undecided;
    out.reason = built.reason;
    return out;
  }
  const DioSystem& sys = built.system;
  out.rows = static_cast<std::size_t>(sys.W.rows());
  out.columns = static_cast<std::size_t>(sys.W.cols());
  if (static_cast<std::int64_t>(out.columns) < sys.n) {
    out.reason = "only " + std::to_string(out.columns) + " column classes for length " + std::to_string(sys.n);
    return out;
  }

  auto result = solve_dio(sys, options.solve);
  out.nodes = result.nodes;

  const WeightTable weights = hom_weight_table(*ring, Rational(units));
  std::set<std::vector<Word>> seen;
  for (const auto& sol : result.solutions) {
    auto code = LinearCode::from_shaped(ring, shape, generator_from_solution(sys, sol));
    auto fail = [&](const std::string& what) {
      throw SearchError("solution over " + ring->spec().to_string() + " shape " + shape.to_string() + " " + what);
    };
    if (!code.faithful() || code.size() != static_cast<std::size_t>(params.N)) fail("does not expand to N codewords");
    auto props = check_code_properties(code, weights);
    if (!props.proper || !props.regular || !props.projective) fail("fails code properties: " + props.witness);
    auto nz = weight_enumerator(code, weights).nonzero_weights();
    if (nz != std::vector<Rational>{Rational(targets->w1), Rational(targets->w2)}) fail("has the wrong weights");
    SrgCertificate cert;
    try {
      cert = certify_srg(code, weights);
    } catch (const SrgError& e) {
      fail(std::string("does not certify: ") + e.what());
    }
    if (cert.params.k != params.k || cert.params.lambda != params.lambda || cert.params.mu != params.mu)
      fail("certifies as " + cert.params.to_string());
    auto eig = verify_eigen_relations(code, weights, cert.params);
    if (!eig.ok()) fail("breaks eigenvalue relations: " + eig.mismatches());
    if (!seen.insert(canonical_column_multiset(code)).second) continue;
    out.codes.push_back({std::move(code), cert});
  }

  if (!out.codes.empty())
    out.status = SearchStatus::Found;
  else if (!result.complete) {
    out.status = SearchStatus::Undecided;
    out.reason = "node cap " + std::to_string(options.solve.node_cap) + " reached";
  } else {
    out.reason = "search exhausted";
  }
  return out;
}

}  // namespace twoweight
