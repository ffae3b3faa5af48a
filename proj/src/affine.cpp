#include "hypex/affine.hpp"

#include <sstream>

namespace hypex {

AffineForm& AffineForm::operator+=(const AffineForm& o) {
  constant_ += o.constant_;
  for (const auto& [i, c] : o.coeffs_) {
    Rat& slot = coeffs_[i];
    slot += c;
    if (slot == 0) coeffs_.erase(i);
  }
  return *this;
}

AffineForm& AffineForm::operator-=(const AffineForm& o) {
  constant_ -= o.constant_;
  for (const auto& [i, c] : o.coeffs_) {
    Rat& slot = coeffs_[i];
    slot -= c;
    if (slot == 0) coeffs_.erase(i);
  }
  return *this;
}

AffineForm& AffineForm::operator*=(const Rat& s) {
  if (s == 0) {
    constant_ = 0;
    coeffs_.clear();
    return *this;
  }
  constant_ *= s;
  for (auto& [i, c] : coeffs_) c *= s;
  return *this;
}

bool AffineForm::operator<(const AffineForm& o) const {
  if (constant_ != o.constant_) return constant_ < o.constant_;
  auto it = coeffs_.begin(), jt = o.coeffs_.begin();
  for (; it != coeffs_.end() && jt != o.coeffs_.end(); ++it, ++jt) {
    if (it->first != jt->first) return it->first < jt->first;
    if (it->second != jt->second) return it->second < jt->second;
  }
  return jt != o.coeffs_.end();
}

AffineForm AffineForm::substitute(const std::map<int, Rat>& values) const {
  AffineForm r(constant_);
  for (const auto& [i, c] : coeffs_) {
    auto it = values.find(i);
    if (it != values.end())
      r.constant_ += c * it->second;
    else
      r.coeffs_[i] = c;
  }
  return r;
}

std::string AffineForm::str(const std::string& symbol_prefix) const {
  std::ostringstream os;
  bool first = true;
  if (constant_ != 0 || coeffs_.empty()) {
    os << constant_.get_str();
    first = false;
  }
  for (const auto& [i, c] : coeffs_) {
    if (c > 0 && !first) os << "+";
    if (c == -1)
      os << "-";
    else if (c != 1)
      os << c.get_str() << "*";
    os << symbol_prefix << i;
    first = false;
  }
  return os.str();
}

ParamVector to_params(const RatVec& v) {
  ParamVector p;
  p.reserve(v.size());
  for (const auto& x : v) p.emplace_back(x);
  return p;
}

ParamVector to_params(const IntVec& v) {
  ParamVector p;
  p.reserve(v.size());
  for (const auto& x : v) p.emplace_back(Rat(x));
  return p;
}

ParamVector operator+(const ParamVector& a, const ParamVector& b) {
  ParamVector r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

ParamVector operator-(const ParamVector& a, const ParamVector& b) {
  ParamVector r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

ParamVector mat_vec(const IntMat& m, const ParamVector& x) {
  ParamVector r(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) r[i] += x[j] * Rat(m[i][j]);
  return r;
}

std::string str(const ParamVector& v, const std::string& symbol_prefix) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].str(symbol_prefix);
  }
  os << ")";
  return os.str();
}

Poly::Poly(const AffineForm& f) {
  if (f.constant() != 0) terms_[Monomial{}] = f.constant();
  for (const auto& [i, c] : f.coeffs()) terms_[Monomial{{i, 1}}] = c;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) {
    Rat& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) {
    Rat& slot = terms_[m];
    slot -= c;
    if (slot == 0) terms_.erase(m);
  }
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1;
      for (const auto& [i, e] : m2) m[i] += e;
      Rat& slot = r.terms_[m];
      slot += c1 * c2;
      if (slot == 0) r.terms_.erase(m);
    }
  return r;
}

Poly product(const std::vector<AffineForm>& factors) {
  Poly p = Poly::one();
  for (const auto& f : factors) p = p * Poly(f);
  return p;
}

}  // namespace hypex
