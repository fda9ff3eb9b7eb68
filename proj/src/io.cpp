#include "twoweight/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace twoweight {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(s);
  while (std::getline(in, cell, sep)) out.push_back(trim(cell));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  return in;
}

}  // namespace

CodeFile parse_code_file(std::istream& in) {
  CodeFile file;
  bool have_ring = false, have_shape = false;
  std::vector<std::vector<Element>> rows;
  std::string raw;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) { throw IoError("line " + std::to_string(lineno) + ": " + msg); };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string key;
    words >> key;
    std::string rest;
    std::getline(words, rest);
    rest = trim(rest);
    try {
      if (key == "ring") {
        if (!rows.empty()) fail("header after generator rows");
        file.ring = parse_ring_spec(rest);
        have_ring = true;
      } else if (key == "shape") {
        if (!rows.empty()) fail("header after generator rows");
        file.shape = Shape::parse(rest);
        have_shape = true;
      } else if (key == "gamma") {
        if (!rows.empty()) fail("header after generator rows");
        if (rest == "units")
          file.gamma.reset();
        else
          file.gamma = Rational::parse(rest);
      } else {
        std::vector<Element> row;
        std::istringstream cells(line);
        std::string cell;
        while (cells >> cell) {
          auto v = parse_int(cell);
          if (!v || *v < 0) fail("bad element '" + cell + "'");
          row.push_back(static_cast<Element>(*v));
        }
        if (!rows.empty() && row.size() != rows.front().size()) fail("generator rows differ in length");
        rows.push_back(std::move(row));
      }
    } catch (const IoError&) {
      throw;
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }
  if (!have_ring) throw IoError("missing ring line");
  if (!have_shape) throw IoError("missing shape line");
  if (rows.empty()) throw IoError("no generator rows");

  file.generator.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      file.generator(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return file;
}

CodeFile read_code_file(const std::string& path) {
  auto in = open(path);
  try {
    return parse_code_file(in);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

LoadedCode load_code(const CodeFile& file, std::size_t max_order) {
  auto ring = build_ring(file.ring, max_order);
  for (Eigen::Index i = 0; i < file.generator.size(); ++i)
    if (file.generator.data()[i] >= ring->order())
      throw IoError("element " + std::to_string(file.generator.data()[i]) + " is outside " + file.ring.to_string());

  std::optional<LinearCode> code;
  if (static_cast<std::size_t>(file.generator.rows()) == file.shape.rows()) {
    try {
      auto c = LinearCode::from_shaped(ring, file.shape, file.generator);
      if (c.faithful()) code = std::move(c);
    } catch (const CodeError&) {
    }
  }
  if (!code) {
    code = LinearCode::from_generator(ring, file.generator);
    if (code->shape() != file.shape)
      throw IoError("generator spans shape " + code->shape().to_string() + ", file declares " + file.shape.to_string());
  }
  Rational gamma = file.gamma.value_or(Rational(static_cast<std::int64_t>(ring->unit_count())));
  return {file, std::move(*code), gamma};
}

void write_code_file(std::ostream& out, const LinearCode& code, const Rational& gamma, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "ring " << code.ring().spec().to_string() << '\n';
  out << "shape " << code.shape().to_string() << '\n';
  out << "gamma " << gamma.to_string() << '\n';
  const auto& G = code.generator();
  for (Eigen::Index i = 0; i < G.rows(); ++i) {
    for (Eigen::Index j = 0; j < G.cols(); ++j) out << (j ? " " : "") << G(i, j);
    out << '\n';
  }
}

ParamTable parse_param_table(std::istream& in) {
  ParamTable table;
  std::string raw;
  std::size_t lineno = 0;
  std::map<std::string, std::size_t> column;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto cells = split(line, ',');
    if (column.empty()) {
      for (std::size_t i = 0; i < cells.size(); ++i) column[cells[i]] = i;
      for (const char* need : {"N", "k", "lambda", "mu"})
        if (!column.count(need)) throw IoError("line " + std::to_string(lineno) + ": header lacks column " + need);
      continue;
    }
    auto err = [&](const std::string& msg) { table.errors.push_back("line " + std::to_string(lineno) + ": " + msg); };
    if (cells.size() != column.size()) {
      err("expected " + std::to_string(column.size()) + " fields, got " + std::to_string(cells.size()));
      continue;
    }
    bool ok = true;
    auto get = [&](const char* name) -> std::optional<std::int64_t> {
      auto it = column.find(name);
      if (it == column.end() || cells[it->second].empty()) return std::nullopt;
      auto v = parse_int(cells[it->second]);
      if (!v) {
        err(std::string("field ") + name + " is not an integer: '" + cells[it->second] + "'");
        ok = false;
      }
      return v;
    };

    ParamRow row;
    row.line = lineno;
    auto N = get("N"), k = get("k"), lambda = get("lambda"), mu = get("mu");
    if (!ok) continue;
    if (!N || !k || !lambda || !mu) {
      err("N, k, lambda and mu are required");
      continue;
    }
    row.params.N = *N;
    row.params.k = *k;
    row.params.lambda = *lambda;
    row.params.mu = *mu;

    auto rho1 = get("rho1"), m1 = get("m1"), rho2 = get("rho2"), m2 = get("m2");
    auto w1 = get("w1"), f1 = get("f1"), w2 = get("w2"), f2 = get("f2");
    if (!ok) continue;
    const int spectrum_fields = !!rho1 + !!m1 + !!rho2 + !!m2;
    if (spectrum_fields == 4)
      row.params.spectrum = DeclaredSpectrum{*rho1, *m1, *rho2, *m2};
    else if (spectrum_fields != 0) {
      err("partial spectrum");
      continue;
    }
    const int weight_fields = !!w1 + !!f1 + !!w2 + !!f2;
    if (weight_fields == 4)
      row.weights = DeclaredWeights{*w1, *f1, *w2, *f2};
    else if (weight_fields != 0) {
      err("partial weight columns");
      continue;
    }
    if (auto it = column.find("id"); it != column.end() && !cells[it->second].empty())
      row.params.id = cells[it->second];
    else
      row.params.id = std::to_string(*N) + "," + std::to_string(*k) + "," + std::to_string(*lambda) + "," +
                      std::to_string(*mu);
    table.rows.push_back(std::move(row));
  }
  if (column.empty()) throw IoError("empty parameter table");
  return table;
}

ParamTable read_param_table(const std::string& path) {
  auto in = open(path);
  try {
    return parse_param_table(in);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

}  // namespace twoweight
