#include "twoweight/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "twoweight/constructions.hpp"
#include "twoweight/io.hpp"
#include "twoweight/screening.hpp"

namespace twoweight {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr const char* kVersion = "1.0.0";

struct Common {
  std::string format = "json";
  std::string out_dir;
  bool timing = false;
  std::size_t max_order = kDefaultMaxOrder;
};

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string sanitize(std::string s) {
  for (auto& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  return s;
}

Rational parse_gamma(const std::string& text, const RingTable& ring) {
  if (text == "units") return Rational(static_cast<std::int64_t>(ring.unit_count()));
  return Rational::parse(text);
}

json srg_json(const SrgParams& p) {
  return {{"N", p.N},       {"k", p.k},   {"lambda", p.lambda}, {"mu", p.mu},
          {"rho1", p.rho1}, {"m1", p.m1}, {"rho2", p.rho2},     {"m2", p.m2},
          {"primitive", p.primitive}};
}

json generator_json(const GeneratorMatrix& G) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < G.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < G.cols(); ++j) row.push_back(G(i, j));
    rows.push_back(row);
  }
  return rows;
}

json enumerator_json(const WeightEnumerator& e) {
  json m = json::object();
  for (const auto& [w, c] : e.spectrum) m[w.to_string()] = c;
  return m;
}

json properties_json(const CodeProperties& p) {
  return {{"proper", p.proper}, {"regular", p.regular}, {"projective", p.projective}, {"witness", p.witness}};
}

// Weight, property and graph checks shared by verify and hjelmslev.
json analyse_code(const LinearCode& code, const Rational& gamma) {
  auto w = hom_weight_table(code.ring(), gamma);
  auto e = weight_enumerator(code, w);
  json r;
  r["ring"] = code.ring().spec().to_string();
  r["shape"] = code.shape().to_string();
  r["gamma"] = gamma.to_string();
  r["length"] = code.length();
  r["size"] = code.size();
  r["generator"] = generator_json(code.generator());
  r["properties"] = properties_json(check_code_properties(code, w));
  r["enumerator"] = e.to_string();
  r["weights"] = enumerator_json(e);
  r["two_weight"] = e.is_two_weight();
  r["srg"] = nullptr;
  if (!e.is_two_weight()) return r;
  try {
    auto cert = certify_srg(code, w);
    r["srg"] = srg_json(cert.params);
    r["w1"] = cert.w1.to_string();
    r["w2"] = cert.w2.to_string();
    auto eig = verify_eigen_relations(code, w, cert.params);
    r["eigen_relations"] = {{"ok", eig.ok()}, {"mismatches", eig.mismatches()}};
    if (code.size() <= kDefaultMaxCodeSize) {
      auto d = verify_distance_identities(code, w);
      r["distance_identities"] = {{"row_sums", d.row_sums}, {"quadratic", d.quadratic}, {"cubic", d.cubic}};
    }
  } catch (const SrgError& ex) {
    r["srg_error"] = ex.what();
  }
  return r;
}

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// Rows are flat objects sharing `columns`.
std::string to_csv(const std::vector<std::string>& columns, const std::vector<json>& rows) {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
  out += '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i)
      out += (i ? "," : "") + (r.contains(columns[i]) ? csv_cell(r[columns[i]]) : std::string());
    out += '\n';
  }
  return out;
}

// Scalar top-level fields as a one-row table.
std::string scalar_csv(const json& report) {
  std::vector<std::string> cols;
  for (auto it = report.begin(); it != report.end(); ++it)
    if (!it->is_structured()) cols.push_back(it.key());
  return to_csv(cols, {report});
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  out << text;
  if (c.out_dir.empty()) return;
  fs::create_directories(c.out_dir);
  std::ofstream f(fs::path(c.out_dir) / (c.format == "csv" ? "report.csv" : "report.json"));
  if (!f) throw IoError("cannot write to " + c.out_dir);
  f << text;
}

std::string write_code(const Common& c, const std::string& stem, const LinearCode& code, const Rational& gamma,
                       const std::string& comment) {
  if (c.out_dir.empty()) return {};
  fs::create_directories(c.out_dir);
  const std::string name = stem + ".code";
  std::ofstream f(fs::path(c.out_dir) / name);
  if (!f) throw IoError("cannot write to " + c.out_dir);
  write_code_file(f, code, gamma, comment);
  return name;
}

json metadata(const std::string& command, const Common& c) {
  return {{"tool", "twoweight"}, {"version", kVersion}, {"command", command}, {"max_order", c.max_order}};
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Common& c, const std::string& path, const std::string& gamma_text, std::ostream& out) {
  auto t0 = Clock::now();
  auto file = read_code_file(path);
  auto loaded = load_code(file, c.max_order);
  Rational gamma = gamma_text.empty() ? loaded.gamma : parse_gamma(gamma_text, loaded.code.ring());
  json r = analyse_code(loaded.code, gamma);
  r["file"] = path;
  r["meta"] = metadata("verify", c);
  if (c.timing) r["elapsed_ms"] = ms_since(t0);
  emit(c, c.format == "csv" ? scalar_csv(r) : r.dump(2) + "\n", out);
  return kExitOk;
}

// ---------------------------------------------------------------- screen / search

json tuple_json(const TupleReport& t) {
  json W = json::array();
  for (const auto& w : t.xt.W) W.push_back(w.to_string());
  json rings = json::array();
  for (const auto& r : t.rings) rings.push_back(r.to_string());
  return {{"tuple", t.tuple.to_string()},
          {"u", t.tuple.u},
          {"n", t.tuple.n},
          {"xT_feasible", t.xt.feasible},
          {"xT_solutions", t.xt.solutions.size()},
          {"xT_assignments", t.xt.assignments},
          {"xT_truncated", t.xt.truncated},
          {"W", W},
          {"rings", rings}};
}

json outcome_json(const SearchOutcome& s) {
  return {{"status", to_string(s.status)}, {"nodes", s.nodes},     {"rows", s.rows},
          {"columns", s.columns},          {"codes", s.codes.size()}, {"reason", s.reason}};
}

json base_row(const ParamSet& p) {
  return {{"id", p.id}, {"N", p.N}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

json screen_row(const Common& c, const ParamRow& row, const ScreenOptions& opts) {
  json r = base_row(row.params);
  auto t0 = Clock::now();
  try {
    auto rep = screen(row.params, opts);
    r["verdict"] = to_string(rep.verdict);
    r["eliminated"] = is_elimination(rep.verdict);
    r["reason"] = rep.reason;
    r["spectrum"] = rep.params ? srg_json(*rep.params) : json(nullptr);
    r["theta"] = rep.theta ? json(*rep.theta) : json(nullptr);
    r["w1"] = rep.w1 ? json(*rep.w1) : json(nullptr);
    r["w2"] = rep.w2 ? json(*rep.w2) : json(nullptr);
    r["full_ring"] = rep.full_ring;
    if (row.weights && rep.params && rep.w1) {
      const auto& d = *row.weights;
      const bool match = d.w1 == *rep.w1 && d.w2 == *rep.w2 && d.f1 == rep.params->k &&
                         d.f2 == rep.params->N - 1 - rep.params->k;
      r["declared_weights"] = match ? "match" : "mismatch";
    }
    json tuples = json::array();
    for (const auto& t : rep.tuples) tuples.push_back(tuple_json(t));
    r["tuples"] = tuples;
    json full = json::array();
    for (const auto& t : rep.full_ring_tuples) full.push_back(tuple_json(t));
    r["full_ring_tuples"] = full;
    json cands = json::array();
    std::uint64_t nodes = 0;
    for (const auto& cand : rep.candidates) {
      json cj = {{"tuple", cand.tuple.to_string()}, {"ring", cand.ring.to_string()}, {"shape", cand.shape.to_string()}};
      if (cand.search) {
        cj["search"] = outcome_json(*cand.search);
        nodes += cand.search->nodes;
        json files = json::array();
        for (std::size_t i = 0; i < cand.search->codes.size(); ++i) {
          const auto& code = cand.search->codes[i].code;
          auto name = write_code(c, sanitize(row.params.id) + "_" + sanitize(cand.ring.to_string()) + "_" +
                                        sanitize(cand.shape.to_string()) + "_" + std::to_string(i),
                                 code, Rational(static_cast<std::int64_t>(code.ring().unit_count())),
                                 "srg(" + row.params.id + ")");
          if (!name.empty()) files.push_back(name);
        }
        if (!files.empty()) cj["files"] = files;
      }
      cands.push_back(cj);
    }
    r["candidates"] = cands;
    r["candidate_count"] = rep.candidates.size();
    if (opts.run_search) {
      r["nodes"] = nodes;
      r["node_cap"] = opts.search.solve.node_cap;
    }
  } catch (const std::exception& ex) {
    r["verdict"] = to_string(ScreenVerdict::Undecided);
    r["eliminated"] = false;
    r["reason"] = std::string("error: ") + ex.what();
  }
  if (c.timing) r["elapsed_ms"] = ms_since(t0);
  return r;
}

template <class F>
std::vector<json> run_rows(std::size_t count, std::size_t workers, F&& work) {
  std::vector<json> out(count);
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    for (std::size_t i; (i = next++) < count;) out[i] = work(i);
  };
  workers = std::max<std::size_t>(1, std::min(workers, count));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(loop);
  loop();
  for (auto& t : pool) t.join();
  return out;
}

FullRingMode parse_full_ring(const std::string& s) {
  if (s == "auto") return FullRingMode::Auto;
  if (s == "on") return FullRingMode::On;
  if (s == "off") return FullRingMode::Off;
  throw Usage("--full-ring must be auto, on or off");
}

std::vector<ParamRow> load_rows(const std::string& arg, std::vector<std::string>& errors) {
  if (fs::is_regular_file(arg)) {
    auto t = read_param_table(arg);
    errors = t.errors;
    return t.rows;
  }
  std::istringstream in("N,k,lambda,mu\n" + arg + "\n");
  auto t = parse_param_table(in);
  if (!t.errors.empty() || t.rows.size() != 1) throw Usage("'" + arg + "' is neither a file nor a row N,k,lambda,mu");
  return t.rows;
}

int finish_table(const Common& c, const std::string& command, json report, const std::vector<json>& rows,
                 const std::vector<std::string>& errors, std::ostream& out) {
  std::map<std::string, int> counts;
  bool undecided = false;
  for (const auto& r : rows) {
    const std::string v = r.value("verdict", r.value("status", ""));
    ++counts[v];
    undecided = undecided || v == "undecided";
  }
  report["meta"] = metadata(command, c);
  report["rows"] = rows;
  report["summary"] = counts;
  report["input_errors"] = errors;
  if (c.format == "csv") {
    emit(c, to_csv({"id", "N", "k", "lambda", "mu", "verdict", "eliminated", "reason"}, rows), out);
  } else {
    emit(c, report.dump(2) + "\n", out);
  }
  if (undecided) return kExitUndecided;
  return errors.empty() ? kExitOk : kExitInvalid;
}

struct ScreenArgs {
  std::string table;
  std::uint64_t node_cap = 100'000;
  std::size_t max_solutions = 64;
  bool no_search = false;
  std::string full_ring = "auto";
  std::size_t workers = 1;
  std::string ring, shape;
};

ScreenOptions screen_options(const Common& c, const ScreenArgs& a) {
  ScreenOptions o;
  o.full_ring = parse_full_ring(a.full_ring);
  o.run_search = !a.no_search;
  o.search.solve.node_cap = a.node_cap;
  o.search.solve.max_solutions = a.max_solutions;
  o.max_order = c.max_order;
  return o;
}

int cmd_screen(const Common& c, const ScreenArgs& a, std::ostream& out) {
  std::vector<std::string> errors;
  auto rows = load_rows(a.table, errors);
  auto opts = screen_options(c, a);
  auto results = run_rows(rows.size(), a.workers, [&](std::size_t i) { return screen_row(c, rows[i], opts); });
  json report = {{"table", a.table}, {"search", opts.run_search}, {"full_ring", a.full_ring}};
  return finish_table(c, "screen", report, results, errors, out);
}

json ring_search_row(const Common& c, const ParamRow& row, const RingPtr& ring, const std::vector<Shape>& shapes,
                     const SearchOptions& opts) {
  json r = base_row(row.params);
  r["ring"] = ring->spec().to_string();
  auto t0 = Clock::now();
  auto spec = srg_spectrum(row.params.N, row.params.k, row.params.lambda, row.params.mu);
  if (!spec) {
    r["status"] = "fail-spectrum";
    r["reason"] = spec.reason();
    return r;
  }
  r["spectrum"] = srg_json(*spec);
  bool found = false, undecided = false;
  json results = json::array();
  for (const auto& shape : shapes) {
    json sj = {{"shape", shape.to_string()}};
    try {
      auto o = search_codes(*spec, ring, shape, opts);
      sj.update(outcome_json(o));
      json files = json::array();
      for (std::size_t i = 0; i < o.codes.size(); ++i) {
        auto name = write_code(c, sanitize(row.params.id) + "_" + sanitize(ring->spec().to_string()) + "_" +
                                      sanitize(shape.to_string()) + "_" + std::to_string(i),
                               o.codes[i].code, Rational(static_cast<std::int64_t>(ring->unit_count())),
                               "srg(" + row.params.id + ")");
        if (!name.empty()) files.push_back(name);
        sj["certificates"].push_back(srg_json(o.codes[i].certificate.params));
      }
      if (!files.empty()) sj["files"] = files;
      found = found || o.status == SearchStatus::Found;
      undecided = undecided || o.status == SearchStatus::Undecided;
    } catch (const std::exception& ex) {
      sj["status"] = "undecided";
      sj["reason"] = std::string("error: ") + ex.what();
      undecided = true;
    }
    results.push_back(sj);
  }
  r["results"] = results;
  r["node_cap"] = opts.solve.node_cap;
  r["status"] = found ? "found" : undecided ? "undecided" : "exhausted";
  r["verdict"] = r["status"];
  if (c.timing) r["elapsed_ms"] = ms_since(t0);
  return r;
}

int cmd_search(const Common& c, ScreenArgs a, std::ostream& out) {
  std::vector<std::string> errors;
  auto rows = load_rows(a.table, errors);
  if (a.ring.empty()) {
    if (!a.shape.empty()) throw Usage("--shape needs --ring");
    a.no_search = false;
    auto opts = screen_options(c, a);
    auto results = run_rows(rows.size(), a.workers, [&](std::size_t i) { return screen_row(c, rows[i], opts); });
    return finish_table(c, "search", {{"table", a.table}}, results, errors, out);
  }
  auto ring = build_ring(parse_ring_spec(a.ring), c.max_order);
  SearchOptions opts;
  opts.solve.node_cap = a.node_cap;
  opts.solve.max_solutions = a.max_solutions;
  auto results = run_rows(rows.size(), a.workers, [&](std::size_t i) {
    std::vector<Shape> shapes;
    if (!a.shape.empty())
      shapes.push_back(Shape::parse(a.shape));
    else if (rows[i].params.N > 0)
      shapes = enumerate_shapes(*ring, static_cast<std::uint64_t>(rows[i].params.N));
    return ring_search_row(c, rows[i], ring, shapes, opts);
  });
  return finish_table(c, "search", {{"table", a.table}, {"ring", a.ring}}, results, errors, out);
}

// ---------------------------------------------------------------- constructions

json point_json(const RingTable& ring, const Point& p) {
  return "(" + ring.element_to_string(p[0]) + "," + ring.element_to_string(p[1]) + ")";
}

int cmd_hjelmslev(const Common& c, const std::string& ring_text, std::size_t s, const std::string& gamma_text,
                  std::ostream& out) {
  auto t0 = Clock::now();
  auto ring = build_ring(parse_ring_spec(ring_text), c.max_order);
  auto line = hjelmslev_points(*ring);
  auto code = hjelmslev_code(ring, s);
  const auto q = static_cast<std::int64_t>(line.q);
  auto pred = hjelmslev_prediction(q, static_cast<std::int64_t>(s));
  Rational gamma = gamma_text.empty() ? pred.gamma : parse_gamma(gamma_text, *ring);

  json r = analyse_code(code, gamma);
  r["meta"] = metadata("hjelmslev", c);
  r["s"] = s;
  r["q"] = line.q;
  r["points"] = line.points.size();
  json classes = json::array();
  for (const auto& cl : line.classes) {
    json pts = json::array();
    for (const auto& p : cl) pts.push_back(point_json(*ring, p));
    classes.push_back(pts);
  }
  r["classes"] = classes;
  r["predicted"] = {{"gamma", pred.gamma.to_string()}, {"w1", pred.w1}, {"w2", pred.w2}, {"N", pred.N},
                    {"k", pred.k},                     {"lambda", pred.lambda}, {"mu", pred.mu}};
  bool match = false;
  if (gamma == pred.gamma && r["srg"].is_object()) {
    const auto& g = r["srg"];
    match = r["w1"] == Rational(pred.w1).to_string() && r["w2"] == Rational(pred.w2).to_string() &&
            g["N"] == pred.N && g["k"] == pred.k && g["lambda"] == pred.lambda && g["mu"] == pred.mu;
  }
  r["matches_prediction"] = match;
  auto name = write_code(c, "hjelmslev_" + sanitize(ring_text) + "_s" + std::to_string(s), code, gamma,
                         "Hjelmslev code, first " + std::to_string(s) + " points of each class");
  if (!name.empty()) r["file"] = name;
  if (c.timing) r["elapsed_ms"] = ms_since(t0);
  emit(c, c.format == "csv" ? scalar_csv(r) : r.dump(2) + "\n", out);
  return kExitOk;
}

struct GrayArgs {
  std::string ring;
  std::size_t s = 1;
  std::string dedupe = "exact";
  std::uint64_t max_selections = 1'000'000;
};

int cmd_gray(const Common& c, const GrayArgs& a, std::ostream& out) {
  auto t0 = Clock::now();
  auto ring = build_ring(parse_ring_spec(a.ring), c.max_order);
  auto gray = gray_map(*ring);
  FamilyOptions fo;
  if (a.dedupe == "exact")
    fo.dedupe = Dedupe::Exact;
  else if (a.dedupe == "monomial")
    fo.dedupe = Dedupe::Monomial;
  else
    throw Usage("--dedupe must be exact or monomial");
  fo.max_selections = a.max_selections;
  auto fam = enumerate_hjelmslev_family(ring, a.s, fo);

  json r;
  r["meta"] = metadata("gray-check", c);
  r["ring"] = ring->spec().to_string();
  r["s"] = a.s;
  r["q"] = gray.q;
  r["dedupe"] = a.dedupe;
  r["selections"] = fam.selections;
  r["distinct"] = fam.codes.size();
  r["dedupe_undecided"] = fam.undecided;
  json images = json::object();
  for (Element x = 0; x < ring->order(); ++x) {
    std::string img;
    for (auto e : gray.image[x]) img += std::to_string(e);
    images[ring->element_to_string(x)] = img;
  }
  r["gray_map"] = images;

  std::size_t linear = 0;
  json codes = json::array();
  for (std::size_t i = 0; i < fam.codes.size(); ++i) {
    auto check = gray_linear_check(fam.codes[i], gray);
    linear += check.linear;
    codes.push_back({{"index", i}, {"selection", fam.representatives[i]}, {"linear", check.linear},
                     {"witness", check.witness}});
    if (!c.out_dir.empty()) {
      const std::string stem = "gray_" + sanitize(a.ring) + "_s" + std::to_string(a.s) + "_" + std::to_string(i);
      const auto q = static_cast<std::int64_t>(gray.q);
      write_code(c, stem, fam.codes[i], Rational(q * q - q),
                 "Hjelmslev family member " + std::to_string(i));
      std::vector<std::vector<std::uint32_t>> words;
      for (std::size_t j = 0; j < fam.codes[i].size(); ++j) words.push_back(gray.map_word(fam.codes[i].codeword(j)));
      std::ofstream f(fs::path(c.out_dir) / (stem + ".gray"));
      write_field_code(f, words);
    }
  }
  r["codes"] = codes;
  r["linear"] = linear;
  r["nonlinear"] = fam.codes.size() - linear;
  if (c.timing) r["elapsed_ms"] = ms_since(t0);
  emit(c, c.format == "csv" ? scalar_csv(r) : r.dump(2) + "\n", out);
  return fam.undecided ? kExitUndecided : kExitOk;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", c.out_dir, "Directory for the report and any code files");
  sub->add_option("--max-order", c.max_order, "Largest ring order to tabulate");
  sub->add_flag("--timing", c.timing, "Add elapsed times to the report");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-weight codes over finite Frobenius rings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Common common;

  auto* verify = app.add_subcommand("verify", "Check a code file and certify its graph");
  std::string code_path, gamma;
  verify->add_option("codefile", code_path)->required();
  verify->add_option("--gamma", gamma, "units or a rational, overrides the file");
  add_common(verify, common);

  ScreenArgs sa;
  auto* scr = app.add_subcommand("screen", "Screen a table of graph parameters");
  scr->add_option("table", sa.table)->required();
  scr->add_option("--node-cap", sa.node_cap, "Search nodes per candidate");
  scr->add_option("--max-solutions", sa.max_solutions, "Solutions kept per candidate");
  scr->add_flag("--no-search", sa.no_search, "Stop after the candidate stage");
  scr->add_option("--full-ring", sa.full_ring, "auto, on or off");
  scr->add_option("--workers", sa.workers, "Rows screened in parallel");
  add_common(scr, common);

  ScreenArgs ra;
  ra.node_cap = 10'000'000;
  auto* srch = app.add_subcommand("search", "Search for codes realising graph parameters");
  srch->add_option("target", ra.table, "Table file or a row N,k,lambda,mu")->required();
  srch->add_option("--ring", ra.ring, "Search this ring only");
  srch->add_option("--shape", ra.shape, "Search this shape only");
  srch->add_option("--node-cap", ra.node_cap, "Search nodes per ring and shape");
  srch->add_option("--max-solutions", ra.max_solutions, "Solutions kept per ring and shape");
  srch->add_option("--full-ring", ra.full_ring, "auto, on or off");
  srch->add_option("--workers", ra.workers, "Rows searched in parallel");
  add_common(srch, common);

  auto* hj = app.add_subcommand("hjelmslev", "Build and certify a Hjelmslev two-weight code");
  std::string hj_ring, hj_gamma;
  std::size_t hj_s = 1;
  hj->add_option("ring", hj_ring)->required();
  hj->add_option("s", hj_s)->required();
  hj->add_option("--gamma", hj_gamma, "units or a rational");
  add_common(hj, common);

  GrayArgs ga;
  auto* gc = app.add_subcommand("gray-check", "Enumerate a Hjelmslev family and test its Gray images for linearity");
  gc->add_option("ring", ga.ring)->required();
  gc->add_option("s", ga.s)->required();
  gc->add_option("--dedupe", ga.dedupe, "exact or monomial");
  gc->add_option("--max-selections", ga.max_selections, "Cap on the number of selections");
  add_common(gc, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*verify) return cmd_verify(common, code_path, gamma, out);
    if (*scr) return cmd_screen(common, sa, out);
    if (*srch) return cmd_search(common, ra, out);
    if (*hj) return cmd_hjelmslev(common, hj_ring, hj_s, hj_gamma, out);
    if (*gc) return cmd_gray(common, ga, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace twoweight
