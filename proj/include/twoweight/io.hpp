#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "twoweight/codes.hpp"
#include "twoweight/screening.hpp"

namespace twoweight {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text format:
///   ring <spec>
///   shape <partitions>        e.g. "2,2" or "1;1,1"
///   gamma <rational>|units
///   <generator rows, space-separated element indices>
/// `#` starts a comment. A generator with one row per shape part is read as a
/// shaped generator; any other row count is spanned and must give the declared shape.
struct CodeFile {
  RingSpec ring;
  Shape shape;
  std::optional<Rational> gamma;  ///< empty means |R^x|
  GeneratorMatrix generator;
};

CodeFile parse_code_file(std::istream& in);
CodeFile read_code_file(const std::string& path);

struct LoadedCode {
  CodeFile file;
  LinearCode code;
  Rational gamma;
};

LoadedCode load_code(const CodeFile& file, std::size_t max_order = kDefaultMaxOrder);

void write_code_file(std::ostream& out, const LinearCode& code, const Rational& gamma,
                     const std::string& comment = {});

struct DeclaredWeights {
  std::int64_t w1 = 0, f1 = 0, w2 = 0, f2 = 0;
};

struct ParamRow {
  ParamSet params;
  std::optional<DeclaredWeights> weights;
  std::size_t line = 0;
};

struct ParamTable {
  std::vector<ParamRow> rows;
  /// "line 7: ..." for every row that could not be read.
  std::vector<std::string> errors;
};

/// CSV with header N,k,lambda,mu and optional rho1,m1,rho2,m2, w1,f1,w2,f2, id.
/// Columns are matched by header name.
ParamTable parse_param_table(std::istream& in);
ParamTable read_param_table(const std::string& path);

}  // namespace twoweight
