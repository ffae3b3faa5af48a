#include "hypex/series.hpp"

#include "hypex/polytope2d.hpp"

#include <algorithm>
#include <sstream>

namespace hypex {

std::set<int> negative_support(const ParamVector& x) {
  std::set<int> s;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i].is_negative_integer()) s.insert(static_cast<int>(i));
  return s;
}

bool has_minimum_negative_support(const ParamVector& x, const GaleDiagram& b) {
  std::set<int> ns = negative_support(x);
  if (ns.empty()) return true;
  // escape patterns: for each i in nsupp, can the translate avoid a
  // negative integer everywhere outside nsupp \ {i}? Coordinates with a
  // symbolic part or a non-integral rational impose nothing.
  for (int escape : ns) {
    Polyhedron2D p;
    for (size_t j = 0; j < x.size(); ++j) {
      int ji = static_cast<int>(j);
      if (ns.count(ji) && ji != escape) continue;  // allowed to stay negative
      if (!x[j].is_integer()) continue;
      // x_j + (Bz)_j >= 0  <=>  -(b_j . z) <= x_j
      p.add(-b.rows[j][0], -b.rows[j][1], x[j].constant());
    }
    if (is_feasible(integer_points_2d(p))) return false;
  }
  return true;
}

bool in_series_support(const ParamVector& v, const GaleDiagram& b, const IntVec& z) {
  IntVec w = b.apply(z);
  ParamVector shifted = v;
  for (size_t i = 0; i < v.size(); ++i) shifted[i] += AffineForm(Rat(w[i]));
  return negative_support(shifted) == negative_support(v);
}

const SeriesTerm* SeriesTruncation::term_at(const std::vector<long>& z) const {
  for (const SeriesTerm& t : terms)
    if (t.z == z) return &t;
  return nullptr;
}

SeriesTruncation canonical_series(const ParamVector& v, const GaleDiagram& b, long radius) {
  SeriesTruncation out;
  out.base = v;
  out.radius = radius;
  for (long z1 = -radius; z1 <= radius; ++z1)
    for (long z2 = -radius; z2 <= radius; ++z2) {
      IntVec z{Int(z1), Int(z2)};
      if (!in_series_support(v, b, z)) continue;
      IntVec w = b.apply(z);
      SeriesTerm t;
      t.z = {z1, z2};
      for (size_t i = 0; i < v.size(); ++i) {
        if (w[i] < 0) {
          for (Int j = 1; j <= -w[i]; ++j)
            t.numerator.push_back(v[i] - AffineForm(Rat(j - 1)));
        } else if (w[i] > 0) {
          for (Int j = 1; j <= w[i]; ++j) {
            AffineForm f = v[i] + AffineForm(Rat(j));
            if (f.is_zero())
              throw ZeroDenominator("vanishing denominator factor inside the series support");
            t.denominator.push_back(std::move(f));
          }
        }
      }
      out.terms.push_back(std::move(t));
    }
  return out;
}

Rat evaluate_coefficient(const SeriesTerm& t, const std::map<int, Rat>& alpha) {
  Rat num(1), den(1);
  for (const AffineForm& f : t.numerator) {
    AffineForm s = f.substitute(alpha);
    if (!s.is_rational()) throw std::invalid_argument("unsubstituted symbol in coefficient");
    num *= s.constant();
  }
  for (const AffineForm& f : t.denominator) {
    AffineForm s = f.substitute(alpha);
    if (!s.is_rational()) throw std::invalid_argument("unsubstituted symbol in coefficient");
    if (s.constant() == 0) throw ZeroDenominator("denominator vanishes at the substitution");
    den *= s.constant();
  }
  return num / den;
}

namespace {

// falling factorial factors of applying d^e to x^w
std::vector<AffineForm> falling_factors(const ParamVector& w, const Exp& e) {
  std::vector<AffineForm> fs;
  for (size_t i = 0; i < w.size(); ++i)
    for (long j = 0; j < e[i]; ++j) fs.push_back(w[i] - AffineForm(Rat(j)));
  return fs;
}

bool any_zero(const std::vector<AffineForm>& fs) {
  for (const AffineForm& f : fs)
    if (f.is_zero()) return true;
  return false;
}

ParamVector translate(const ParamVector& v, const GaleDiagram& b, const std::vector<long>& z) {
  IntVec w = b.apply(IntVec{Int(z[0]), Int(z[1])});
  ParamVector out = v;
  for (size_t i = 0; i < v.size(); ++i) out[i] += AffineForm(Rat(w[i]));
  return out;
}

}  // namespace

SeriesVerification verify_series(const Configuration& a, const SeriesTruncation& phi,
                                 const GroebnerBasis& gb, const GaleDiagram& b) {
  SeriesVerification rep;

  // homogeneity: A (v + Bz) == A v exactly, i.e. A (Bz) == 0
  rep.homogeneous = true;
  for (const SeriesTerm& t : phi.terms) {
    IntVec w = b.apply(IntVec{Int(t.z[0]), Int(t.z[1])});
    IntVec img = mat_vec(a.entries(), w);
    for (const Int& e : img)
      if (e != 0) rep.homogeneous = false;
  }

  auto coeff_poly = [&](const SeriesTerm& t, const std::vector<AffineForm>& extra) {
    std::vector<AffineForm> fs = t.numerator;
    fs.insert(fs.end(), extra.begin(), extra.end());
    return product(fs);
  };

  for (const Binomial& op : gb.elements) {
    IntVec diff(a.n());
    for (int i = 0; i < a.n(); ++i) diff[i] = op.plus[i] - op.minus[i];
    auto delta = b.coordinates(diff);
    if (!delta) {
      rep.failures.push_back({op, {}, "operator difference is outside the kernel lattice"});
      continue;
    }
    std::vector<long> dz{delta->at(0).get_si(), delta->at(1).get_si()};

    for (const SeriesTerm& t : phi.terms) {
      // plus-side image of term z pairs with the minus-side image of z - dz
      {
        std::vector<long> zp{t.z[0] - dz[0], t.z[1] - dz[1]};
        const SeriesTerm* partner = phi.term_at(zp);
        std::vector<AffineForm> fall = falling_factors(translate(phi.base, b, t.z), op.plus);
        if (partner) {
          // c_z * fall_plus(z) == c_{z'} * fall_minus(z'), cross-multiplied
          std::vector<AffineForm> fall_m =
              falling_factors(translate(phi.base, b, zp), op.minus);
          Poly lhs = coeff_poly(t, fall) * product(partner->denominator);
          Poly rhs = coeff_poly(*partner, fall_m) * product(t.denominator);
          ++rep.pairs_checked;
          if (!(lhs - rhs).is_zero()) {
            std::ostringstream os;
            os << "interior cancellation failed against translate (" << zp[0] << ","
               << zp[1] << ")";
            rep.failures.push_back({op, t.z, os.str()});
          }
        } else if (!in_series_support(phi.base, b, IntVec{Int(zp[0]), Int(zp[1])})) {
          // partner is not a series term at all: this image must vanish
          ++rep.pairs_checked;
          if (!any_zero(fall) && !any_zero(t.numerator)) {
            rep.failures.push_back({op, t.z, "image with no partner fails to vanish"});
          }
        } else {
          rep.boundary.push_back({op, t.z, zp});
        }
      }
      // minus-side image of term z pairs with the plus-side image of z + dz;
      // only the unpaired cases are new
      {
        std::vector<long> zq{t.z[0] + dz[0], t.z[1] + dz[1]};
        if (!phi.term_at(zq)) {
          std::vector<AffineForm> fall = falling_factors(translate(phi.base, b, t.z), op.minus);
          if (!in_series_support(phi.base, b, IntVec{Int(zq[0]), Int(zq[1])})) {
            ++rep.pairs_checked;
            if (!any_zero(fall) && !any_zero(t.numerator)) {
              rep.failures.push_back({op, t.z, "image with no partner fails to vanish"});
            }
          } else {
            rep.boundary.push_back({op, t.z, zq});
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace hypex
