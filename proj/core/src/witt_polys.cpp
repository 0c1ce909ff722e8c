#include <climits>
#include <mutex>
#include <random>
#include <sstream>

#include "frobkit/errors.hpp"
#include "frobkit/witt.hpp"

namespace frobkit {

namespace {

Monomial unit_monomial() { return Monomial{}; }

Monomial variable(int slot, unsigned exponent) {
  Monomial m{};
  m[static_cast<std::size_t>(slot)] = static_cast<std::uint16_t>(exponent);
  return m;
}

unsigned long ipow(unsigned long b, int e) {
  unsigned long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

struct CacheKey {
  int p;
  std::vector<mpz_class> g;
  int n;
  bool operator<(const CacheKey& o) const {
    if (p != o.p) return p < o.p;
    if (n != o.n) return n < o.n;
    return g < o.g;
  }
};

std::mutex cache_mutex;
std::map<CacheKey, std::shared_ptr<const WittPolySet>>& cache() {
  static std::map<CacheKey, std::shared_ptr<const WittPolySet>> c;
  return c;
}

// Divide every coefficient by pi^m after checking divisibility.
WittPoly divide_by_pi_power(const WittPoly& a, int m, const OFExact& pi_inv_m, const char* which) {
  WittPoly r;
  for (const auto& [mono, c] : a) {
    if (c.is_zero()) continue;
    if (c.valuation() < m) {
      std::ostringstream os;
      os << "integrality failure in " << which << "_" << m << " at monomial " << monomial_str(mono)
         << ": coefficient " << c.str() << " has valuation " << c.valuation() << " < " << m;
      throw InternalError(os.str());
    }
    r.emplace(mono, c * pi_inv_m);
  }
  return r;
}

}  // namespace

std::string monomial_str(const Monomial& m) {
  std::ostringstream os;
  bool any = false;
  for (int s = 0; s < 2 * kMaxWittLength; ++s) {
    if (m[static_cast<std::size_t>(s)] == 0) continue;
    if (any) os << "*";
    os << (s < kMaxWittLength ? "x" : "y") << (s % kMaxWittLength);
    if (m[static_cast<std::size_t>(s)] != 1) os << "^" << m[static_cast<std::size_t>(s)];
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

WittPoly poly_mul(const WittPoly& a, const WittPoly& b) {
  WittPoly r;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m;
      for (std::size_t s = 0; s < m.size(); ++s) {
        const unsigned e = static_cast<unsigned>(ma[s]) + mb[s];
        if (e > UINT16_MAX) throw DomainError("Witt polynomial exponent overflow");
        m[s] = static_cast<std::uint16_t>(e);
      }
      auto it = r.find(m);
      if (it == r.end()) {
        r.emplace(m, ca * cb);
      } else {
        it->second += ca * cb;
      }
    }
  }
  for (auto it = r.begin(); it != r.end();) {
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  }
  return r;
}

WittPoly poly_pow(const WittPoly& a, unsigned long k) {
  if (a.empty()) return k == 0 ? WittPoly{} : a;
  WittPoly result{{unit_monomial(), OFExact(a.begin()->second.field(), 1L)}};
  WittPoly base = a;
  while (k > 0) {
    if (k & 1UL) result = poly_mul(result, base);
    k >>= 1;
    if (k > 0) base = poly_mul(base, base);
  }
  return result;
}

void poly_add_into(WittPoly& a, const WittPoly& b, const OFExact& scale) {
  for (const auto& [m, c] : b) {
    OFExact t = c * scale;
    auto it = a.find(m);
    if (it == a.end()) {
      if (!t.is_zero()) a.emplace(m, std::move(t));
    } else {
      it->second += t;
      if (it->second.is_zero()) a.erase(it);
    }
  }
}

WittPoly ghost_poly(const FieldPtr& field, int m, int offset) {
  const unsigned long p = static_cast<unsigned long>(field->p());
  WittPoly r;
  OFExact pij(field, 1L);
  const OFExact pi = OFExact::uniformizer(field);
  for (int j = 0; j <= m; ++j) {
    r.emplace(variable(offset + j, static_cast<unsigned>(ipow(p, m - j))), pij);
    pij = pij * pi;
  }
  return r;
}

std::shared_ptr<const WittPolySet> witt_polys(const FieldPtr& field, int n) {
  if (n < 1 || n > kMaxWittLength) {
    throw DomainError("Witt length must be in [1, " + std::to_string(kMaxWittLength) + "], got " +
                      std::to_string(n));
  }
  const CacheKey key{field->p(), field->eisenstein(), n};
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& c = cache();
  if (auto it = c.find(key); it != c.end()) return it->second;

  auto set = std::make_shared<WittPolySet>();
  set->field = field;
  set->length = n;
  // Reuse the largest shorter set already computed.
  int start = 0;
  for (int k = n - 1; k >= 1; --k) {
    auto it = c.find(CacheKey{field->p(), field->eisenstein(), k});
    if (it != c.end()) {
      set->sum = it->second->sum;
      set->prod = it->second->prod;
      start = k;
      break;
    }
  }
  const unsigned long p = static_cast<unsigned long>(field->p());
  const OFExact pi = OFExact::uniformizer(field);
  const OFExact one(field, 1L);
  for (int m = start; m < n; ++m) {
    const WittPoly wx = ghost_poly(field, m, 0);
    const WittPoly wy = ghost_poly(field, m, kMaxWittLength);
    WittPoly s = wx;
    poly_add_into(s, wy, one);
    WittPoly q = poly_mul(wx, wy);
    OFExact pij(field, 1L);
    for (int j = 0; j < m; ++j) {
      const unsigned long k = ipow(p, m - j);
      poly_add_into(s, poly_pow(set->sum[static_cast<std::size_t>(j)], k), -pij);
      poly_add_into(q, poly_pow(set->prod[static_cast<std::size_t>(j)], k), -pij);
      pij = pij * pi;
    }
    const OFExact inv = one.times_uniformizer_power(-m);
    set->sum.push_back(divide_by_pi_power(s, m, inv, "S"));
    set->prod.push_back(divide_by_pi_power(q, m, inv, "P"));
  }
  std::shared_ptr<const WittPolySet> out = set;
  c.emplace(key, out);
  return out;
}

std::string check_ghost_compatibility(const WittPolySet& set) {
  const FieldPtr& field = set.field;
  const unsigned long p = static_cast<unsigned long>(field->p());
  const OFExact pi = OFExact::uniformizer(field);
  const OFExact one(field, 1L);
  for (int m = 0; m < set.length; ++m) {
    const WittPoly wx = ghost_poly(field, m, 0);
    const WittPoly wy = ghost_poly(field, m, kMaxWittLength);
    WittPoly lhs_s, lhs_p;
    OFExact pij(field, 1L);
    for (int j = 0; j <= m; ++j) {
      const unsigned long k = ipow(p, m - j);
      poly_add_into(lhs_s, poly_pow(set.sum[static_cast<std::size_t>(j)], k), pij);
      poly_add_into(lhs_p, poly_pow(set.prod[static_cast<std::size_t>(j)], k), pij);
      pij = pij * pi;
    }
    WittPoly rhs_s = wx;
    poly_add_into(rhs_s, wy, one);
    const WittPoly rhs_p = poly_mul(wx, wy);
    if (lhs_s != rhs_s) return "w_" + std::to_string(m) + "(S) != w_" + std::to_string(m) + "(x) + w_" + std::to_string(m) + "(y)";
    if (lhs_p != rhs_p) return "w_" + std::to_string(m) + "(P) != w_" + std::to_string(m) + "(x) * w_" + std::to_string(m) + "(y)";
    for (const auto* polys : {&set.sum, &set.prod}) {
      for (const auto& [mono, c] : (*polys)[static_cast<std::size_t>(m)]) {
        if (!c.is_integral()) return "non-integral coefficient at " + monomial_str(mono);
      }
    }
  }
  return {};
}

OFExact eval_poly(const WittPoly& poly, const std::vector<OFExact>& x, const std::vector<OFExact>& y) {
  if (x.empty()) throw DomainError("evaluation point is empty");
  OFExact acc(x.front().field(), 0L);
  for (const auto& [mono, c] : poly) {
    OFExact t = c;
    for (int s = 0; s < 2 * kMaxWittLength; ++s) {
      const unsigned e = mono[static_cast<std::size_t>(s)];
      if (e == 0) continue;
      const auto& v = s < kMaxWittLength ? x : y;
      const std::size_t j = static_cast<std::size_t>(s % kMaxWittLength);
      if (j >= v.size()) throw DomainError("evaluation point is too short");
      t = t * v[j].pow(e);
    }
    acc += t;
  }
  return acc;
}

OFExact ghost_component(const std::vector<OFExact>& a, int m) {
  if (m < 0 || static_cast<std::size_t>(m) >= a.size()) throw DomainError("ghost index out of range");
  const FieldPtr& field = a.front().field();
  const unsigned long p = static_cast<unsigned long>(field->p());
  const OFExact pi = OFExact::uniformizer(field);
  OFExact acc(field, 0L);
  OFExact pij(field, 1L);
  for (int j = 0; j <= m; ++j) {
    acc += pij * a[static_cast<std::size_t>(j)].pow(ipow(p, m - j));
    pij = pij * pi;
  }
  return acc;
}

WittSelfTest witt_selftest(const FieldPtr& field, int n, int samples, std::uint64_t seed) {
  WittSelfTest out;
  out.length = n;
  const auto set = witt_polys(field, n);
  out.symbolic_failure = check_ghost_compatibility(*set);
  for (int m = 0; m < n; ++m) {
    out.sum_terms.push_back(static_cast<int>(set->sum[static_cast<std::size_t>(m)].size()));
    out.prod_terms.push_back(static_cast<int>(set->prod[static_cast<std::size_t>(m)].size()));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> digit(-static_cast<long>(field->p()), field->p());
  const OFExact pi = OFExact::uniformizer(field);
  auto random_point = [&] {
    std::vector<OFExact> v;
    for (int j = 0; j < n; ++j) v.push_back(OFExact(field, digit(rng)) + OFExact(field, digit(rng)) * pi);
    return v;
  };
  for (int k = 0; k < samples; ++k) {
    const auto x = random_point();
    const auto y = random_point();
    std::vector<OFExact> s, q;
    for (int m = 0; m < n; ++m) {
      s.push_back(eval_poly(set->sum[static_cast<std::size_t>(m)], x, y));
      q.push_back(eval_poly(set->prod[static_cast<std::size_t>(m)], x, y));
    }
    bool ok = true;
    for (int m = 0; m < n && ok; ++m) {
      ok = ghost_component(s, m) == ghost_component(x, m) + ghost_component(y, m) &&
           ghost_component(q, m) == ghost_component(x, m) * ghost_component(y, m) && s[static_cast<std::size_t>(m)].is_integral() &&
           q[static_cast<std::size_t>(m)].is_integral();
    }
    ++out.samples;
    if (!ok) ++out.sample_failures;
  }
  return out;
}

}  // namespace frobkit
