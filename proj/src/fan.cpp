#include "hypex/fan.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace hypex {

namespace {

using Vec2 = std::vector<long>;

Vec2 rot90(const Vec2& v) { return {-v[1], v[0]}; }

long dot2(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

Vec2 primitive2(Vec2 v) {
  long g = std::gcd(std::abs(v[0]), std::abs(v[1]));
  if (g > 1) {
    v[0] /= g;
    v[1] /= g;
  }
  return v;
}

// kernel-class normal of a binomial: B^T (plus - minus)
Vec2 cone_normal(const GaleDiagram& b, const Binomial& g) {
  Vec2 nu{0, 0};
  for (int i = 0; i < b.n(); ++i) {
    long diff = g.plus[i] - g.minus[i];
    if (diff == 0) continue;
    assert(b.rows[i][0].fits_slong_p() && b.rows[i][1].fits_slong_p());
    nu[0] += b.rows[i][0].get_si() * diff;
    nu[1] += b.rows[i][1].get_si() * diff;
  }
  return nu;
}

struct SectorRays {
  Vec2 entry, exit;  // counterclockwise traversal leaves through `exit`
};

// Boundary rays of {y : <y, nu> >= 0 for all nu}; the sector is full
// dimensional (the basis came from an open cone).
SectorRays sector_rays(const std::vector<Vec2>& normals) {
  std::vector<Vec2> rays;
  for (const Vec2& nu : normals)
    for (const Vec2& cand : {rot90(nu), Vec2{nu[1], -nu[0]}}) {
      Vec2 r = primitive2(cand);
      bool inside = true, tight = false;
      for (const Vec2& m : normals) {
        long s = dot2(r, m);
        if (s < 0) inside = false;
        if (s == 0) tight = true;
      }
      if (inside && tight) rays.push_back(r);
    }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  if (rays.size() != 2)
    throw std::logic_error("sector of a monomial initial ideal must have two boundary rays");
  auto is_exit = [&](const Vec2& r) {
    Vec2 probe = rot90(r);
    for (const Vec2& m : normals)
      if (dot2(r, m) == 0 && dot2(probe, m) < 0) return true;
    return false;
  };
  SectorRays out;
  bool e0 = is_exit(rays[0]), e1 = is_exit(rays[1]);
  if (e0 == e1) throw std::logic_error("sector rays must split into entry and exit");
  out.exit = e0 ? rays[0] : rays[1];
  out.entry = e0 ? rays[1] : rays[0];
  return out;
}

Vec2 interior_direction(const SectorRays& rays) {
  Vec2 sum{rays.entry[0] + rays.exit[0], rays.entry[1] + rays.exit[1]};
  if (sum[0] == 0 && sum[1] == 0) return rot90(rays.entry);  // halfplane sector
  return primitive2(sum);
}

std::vector<Vec2> generic_start_candidates() {
  std::vector<Vec2> out;
  for (long s = 2; s <= 40; ++s)
    for (long x = 1; x < s; ++x) {
      long y = s - x;
      if (std::gcd(x, y) != 1) continue;
      out.push_back({x, y});
      out.push_back({x, -y});
    }
  return out;
}

}  // namespace

Weight gale_weight(const GaleDiagram& b, const std::vector<long>& y) {
  Weight w(b.n());
  for (int i = 0; i < b.n(); ++i) {
    assert(b.rows[i][0].fits_slong_p() && b.rows[i][1].fits_slong_p());
    w[i] = b.rows[i][0].get_si() * y[0] + b.rows[i][1].get_si() * y[1];
  }
  return w;
}

GroebnerFan groebner_fan_from_start(const GaleDiagram& b, const GroebnerBasis& lattice_ideal,
                                    const std::vector<long>& y_start) {
  const std::vector<Binomial>& gens = lattice_ideal.elements;

  auto gb_for_chain = [&](const std::vector<Weight>& chain) {
    TermOrder order = TermOrder::weighted(chain, b.n());
    return groebner_basis(gens, order);
  };

  // start cone: y_start must be generic (strict orientation everywhere)
  GroebnerBasis gb = gb_for_chain({gale_weight(b, y_start)});
  for (const Binomial& g : gb.elements)
    if (dot2(y_start, cone_normal(b, g)) <= 0)
      throw std::invalid_argument("start direction lies on a cone boundary");

  GroebnerFan fan;
  MonomialIdeal first;
  for (int step = 0; step < 100000; ++step) {
    std::vector<Vec2> normals;
    for (const Binomial& g : gb.elements) normals.push_back(cone_normal(b, g));
    SectorRays rays = sector_rays(normals);

    FanCone cone;
    std::vector<Exp> lead;
    for (const Binomial& g : gb.elements) lead.push_back(g.plus);
    cone.ideal = MonomialIdeal(std::move(lead));
    cone.witness_y = interior_direction(rays);
    cone.witness = gale_weight(b, cone.witness_y);
    if (step > 0 && cone.ideal == first) break;
    if (step == 0) first = cone.ideal;
    fan.cones.push_back(std::move(cone));

    // flip: just past the exit ray, counterclockwise
    std::vector<Weight> chain{gale_weight(b, rays.exit),
                              gale_weight(b, rot90(rays.exit))};
    gb = gb_for_chain(chain);
    InitialIdeal next = initial_ideal(gb, chain);
    if (!next.is_monomial)
      throw std::logic_error("flip across a facet must land in a full-dimensional cone");
  }

  std::sort(fan.cones.begin(), fan.cones.end(),
            [](const FanCone& a, const FanCone& c) { return a.ideal < c.ideal; });
  return fan;
}

GroebnerFan groebner_fan_monomial_initial_ideals(const GaleDiagram& b,
                                                 const GroebnerBasis& lattice_ideal) {
  for (const Vec2& y : generic_start_candidates()) {
    try {
      return groebner_fan_from_start(b, lattice_ideal, y);
    } catch (const std::invalid_argument&) {
      continue;  // direction hit a boundary; try the next one
    }
  }
  throw std::logic_error("no generic start direction found");
}

ChainedInitial monomial_initial_by_chain(const std::vector<Binomial>& gens,
                                         const Weight& base_weight, unsigned long seed) {
  const int n = static_cast<int>(base_weight.size());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-37, 37);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Weight w(n);
    for (int i = 0; i < n; ++i) w[i] = dist(rng);
    std::vector<Weight> chain{base_weight, w};
    TermOrder order = TermOrder::weighted(chain, n);
    GroebnerBasis gb = groebner_basis(gens, order);
    InitialIdeal init = initial_ideal(gb, chain);
    if (!init.is_monomial) continue;
    ChainedInitial out;
    out.gb = std::move(gb);
    out.ideal = init.monomial_ideal();
    out.base_weight = base_weight;
    out.generic_weight = std::move(w);
    return out;
  }
  throw std::logic_error("no generic refinement found for the weight chain");
}

void write_fan_cache(std::ostream& os, const Configuration& a, const GroebnerFan& fan) {
  os << "hypex-fan-cache 1\n";
  os << "matrix " << a.d() << " " << a.n() << "\n";
  for (const auto& row : a.entries()) {
    for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j].get_str();
    os << "\n";
  }
  os << "ideals " << fan.cones.size() << "\n\n";
  for (const FanCone& c : fan.cones) {
    os << "ideal " << c.ideal.generators().size() << "\n";
    for (const Exp& g : c.ideal.generators()) {
      for (size_t j = 0; j < g.size(); ++j) os << (j ? " " : "") << g[j];
      os << "\n";
    }
    os << "witness";
    for (long w : c.witness) os << " " << w;
    os << "\n\n";
  }
}

GroebnerFan read_fan_cache(std::istream& is, const Configuration& a) {
  std::string line;
  auto next_line = [&]() -> std::string {
    while (std::getline(is, line)) {
      if (!line.empty()) return line;
    }
    throw CacheError("unexpected end of cache file");
  };
  if (next_line() != "hypex-fan-cache 1") throw CacheError("bad cache header");
  {
    std::istringstream ls(next_line());
    std::string tag;
    int d = 0, n = 0;
    ls >> tag >> d >> n;
    if (tag != "matrix" || d != a.d() || n != a.n())
      throw CacheError("cache matrix header mismatch");
    for (int i = 0; i < d; ++i) {
      std::istringstream rs(next_line());
      for (int j = 0; j < n; ++j) {
        std::string v;
        if (!(rs >> v)) throw CacheError("truncated matrix row");
        if (Int(v) != a.entries()[i][j]) throw CacheError("cache built for a different matrix");
      }
    }
  }
  size_t count = 0;
  {
    std::istringstream ls(next_line());
    std::string tag;
    ls >> tag >> count;
    if (tag != "ideals") throw CacheError("missing ideal count");
  }
  GroebnerFan fan;
  for (size_t k = 0; k < count; ++k) {
    std::istringstream hs(next_line());
    std::string tag;
    size_t gens = 0;
    hs >> tag >> gens;
    if (tag != "ideal") throw CacheError("missing ideal record");
    std::vector<Exp> gvecs;
    for (size_t g = 0; g < gens; ++g) {
      std::istringstream rs(next_line());
      Exp e(a.n());
      for (int j = 0; j < a.n(); ++j)
        if (!(rs >> e[j])) throw CacheError("truncated generator row");
      gvecs.push_back(std::move(e));
    }
    std::istringstream ws(next_line());
    ws >> tag;
    if (tag != "witness") throw CacheError("missing witness record");
    FanCone cone;
    cone.witness.resize(a.n());
    for (int j = 0; j < a.n(); ++j)
      if (!(ws >> cone.witness[j])) throw CacheError("truncated witness");
    cone.ideal = MonomialIdeal(std::move(gvecs));
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

}  // namespace hypex
