#pragma once

// Affine forms q0 + sum_i q_i*alpha_i over Q in formal transcendentals
// alpha_5..alpha_n. The alphas are symbols, never numeric approximations:
// every quantity in the pipeline is affine-linear in them, so integrality
// questions ("is this coordinate a negative integer?") are decided exactly.
//
// Poly is a sparse multivariate polynomial in the same symbols; it only
// appears when series coefficients (products of affine forms) must be
// compared exactly.

#include "hypex/linalg.hpp"
#include "hypex/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace hypex {

class AffineForm {
 public:
  AffineForm() : constant_(0) {}
  explicit AffineForm(Rat c) : constant_(std::move(c)) {}
  explicit AffineForm(long c) : constant_(c) {}

  static AffineForm symbol(int index, Rat coeff = Rat(1)) {
    AffineForm f;
    if (coeff != 0) f.coeffs_[index] = std::move(coeff);
    return f;
  }

  const Rat& constant() const { return constant_; }
  const std::map<int, Rat>& coeffs() const { return coeffs_; }

  bool is_rational() const { return coeffs_.empty(); }
  bool is_integer() const { return coeffs_.empty() && hypex::is_integer(constant_); }
  bool is_negative_integer() const { return is_integer() && constant_ < 0; }
  bool is_nonnegative_integer() const { return is_integer() && constant_ >= 0; }
  bool is_zero() const { return coeffs_.empty() && constant_ == 0; }

  AffineForm& operator+=(const AffineForm& o);
  AffineForm& operator-=(const AffineForm& o);
  AffineForm& operator*=(const Rat& s);

  friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
  friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
  friend AffineForm operator*(AffineForm a, const Rat& s) { return a *= s; }
  friend AffineForm operator*(const Rat& s, AffineForm a) { return a *= s; }
  friend AffineForm operator-(AffineForm a) { return a *= Rat(-1); }

  bool operator==(const AffineForm& o) const {
    return constant_ == o.constant_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const AffineForm& o) const { return !(*this == o); }
  bool operator<(const AffineForm& o) const;  // arbitrary total order for containers

  // Substitutes rational values for the symbols listed in `values`;
  // symbols without a value are kept.
  AffineForm substitute(const std::map<int, Rat>& values) const;

  // e.g. "2", "a5", "1+a5", "-1-2*a5", "1/2-3/4*a6"
  std::string str(const std::string& symbol_prefix = "a") const;

 private:
  Rat constant_;
  std::map<int, Rat> coeffs_;  // symbol index -> coefficient, no zero entries
};

// Vector of affine forms; houses v, beta, u, fake exponents.
using ParamVector = std::vector<AffineForm>;

ParamVector to_params(const RatVec& v);
ParamVector to_params(const IntVec& v);

ParamVector operator+(const ParamVector& a, const ParamVector& b);
ParamVector operator-(const ParamVector& a, const ParamVector& b);

// apply an integer matrix: (M x)_i = sum_j M[i][j] * x_j
ParamVector mat_vec(const IntMat& m, const ParamVector& x);

std::string str(const ParamVector& v, const std::string& symbol_prefix = "a");

// Sparse polynomial over Q in the alpha symbols. Monomials are maps
// symbol index -> positive exponent.
class Poly {
 public:
  using Monomial = std::map<int, int>;

  Poly() = default;
  explicit Poly(const Rat& c) {
    if (c != 0) terms_[Monomial{}] = c;
  }
  explicit Poly(const AffineForm& f);

  static Poly one() { return Poly(Rat(1)); }

  bool is_zero() const { return terms_.empty(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator*(const Poly& o) const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  const std::map<Monomial, Rat>& terms() const { return terms_; }

 private:
  std::map<Monomial, Rat> terms_;
};

Poly product(const std::vector<AffineForm>& factors);

}  // namespace hypex
