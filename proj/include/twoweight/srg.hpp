#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twoweight/codes.hpp"

namespace twoweight {

/// Either a value or the reason it was rejected. Rejections are ordinary
/// outcomes of the parameter algebra, not errors.
template <typename T>
class Verdict {
 public:
  static Verdict accept(T value) {
    Verdict v;
    v.value_ = std::move(value);
    return v;
  }
  static Verdict reject(std::string reason) {
    Verdict v;
    v.reason_ = std::move(reason);
    return v;
  }

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }
  const T& operator*() const { return *value_; }
  const T* operator->() const { return &*value_; }
  const std::string& reason() const { return reason_; }

 private:
  std::optional<T> value_;
  std::string reason_;
};

struct SrgParams {
  std::int64_t N = 0, k = 0, lambda = 0, mu = 0;
  std::int64_t rho1 = 0, rho2 = 0;  ///< restricted eigenvalues, rho1 < rho2
  std::int64_t m1 = 0, m2 = 0;
  bool primitive = true;

  std::string to_string() const;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Roots of rho^2 - (lambda - mu) rho - (k - mu) and their multiplicities.
Verdict<SrgParams> srg_spectrum(std::int64_t N, std::int64_t k, std::int64_t lambda, std::int64_t mu);

struct CodeTargets {
  std::int64_t theta = 0;
  std::int64_t t = 0;  ///< -(rho1 + 1)
  std::int64_t w1 = 0, w2 = 0;
  std::int64_t freq1 = 0, freq2 = 0;
  std::int64_t unit_count = 0;
  std::int64_t n = 0;  ///< m2 / unit_count
};

Verdict<CodeTargets> derive_code_targets(const SrgParams& params, std::int64_t unit_count);

class SrgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SrgCertificate {
  SrgParams params;
  Rational w1, w2;
  /// Probe pairs (0, v) used to read lambda and mu.
  std::size_t adjacent_probe = 0, nonadjacent_probe = 0;
};

/// Builds the Cayley graph on w1-differences and verifies A J = k J and
/// A^2 - (lambda - mu) A - (k - mu) I = mu J over the integers.
/// Throws SrgError when the code is not two-weight or an identity fails.
SrgCertificate certify_srg(const LinearCode& code, const WeightTable& weights);

struct IdentityCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct EigenReport {
  std::vector<IdentityCheck> checks;
  bool ok() const;
  /// Failed checks, one per line.
  std::string mismatches() const;
};

/// Weight/eigenvalue/multiplicity relations for a certified two-weight code.
/// Throws SrgError on one-weight input.
EigenReport verify_eigen_relations(const LinearCode& code, const WeightTable& weights, const SrgParams& params);

}  // namespace twoweight
