#include "frobkit/perf_series.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "frobkit/errors.hpp"

namespace frobkit {

namespace {

int mod_p(long c, int p) {
  long r = c % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

}  // namespace

long PerfSeries::denominator() const {
  long d = 1;
  for (int i = 0; i < budget_.root_levels; ++i) d *= p_;
  return d;
}

long PerfSeries::max_num() const { return budget_.exp_bound * denominator(); }

void PerfSeries::check_compatible(const PerfSeries& o) const {
  if (p_ != o.p_ || !(budget_ == o.budget_)) throw DomainError("perfected series with different p or budget");
}

PerfSeries PerfSeries::constant(int p, PerfBudget budget, long c) {
  PerfSeries r(p, budget);
  const int cm = mod_p(c, p);
  if (cm != 0) r.terms_.push_back({0, cm});
  return r;
}

PerfSeries PerfSeries::monomial(int p, PerfBudget budget, const Rational& alpha, long c) {
  return from_terms(p, budget, {{alpha, c}});
}

PerfSeries PerfSeries::from_terms(int p, PerfBudget budget, const std::vector<std::pair<Rational, long>>& terms,
                                  bool truncated) {
  PerfSeries r(p, budget);
  r.truncated_ = truncated;
  const long D = r.denominator();
  std::map<long, long> acc;
  for (const auto& [alpha, c] : terms) {
    if (alpha < 0) throw DomainError("negative exponent in a perfected series");
    Rational scaled = alpha * D;
    scaled.canonicalize();
    if (scaled.get_den() != 1) {
      throw BudgetError("exponent " + alpha.get_str() + " needs more than " + std::to_string(budget.root_levels) +
                        " root levels");
    }
    const long num = scaled.get_num().get_si();
    if (num > r.max_num()) {
      r.truncated_ = true;
      continue;
    }
    acc[num] += c;
  }
  for (const auto& [num, c] : acc) {
    const int cm = mod_p(c, p);
    if (cm != 0) r.terms_.push_back({num, cm});
  }
  return r;
}

Rational PerfSeries::exponent(long num) const {
  Rational q(num, denominator());
  q.canonicalize();
  return q;
}

Rational PerfSeries::order() const {
  if (terms_.empty()) throw DomainError("order of the zero series");
  return exponent(terms_.front().num);
}

int PerfSeries::coefficient(const Rational& alpha) const {
  Rational scaled = alpha * denominator();
  scaled.canonicalize();
  if (scaled.get_den() != 1) return 0;
  const long num = scaled.get_num().get_si();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), num, [](const Term& t, long n) { return t.num < n; });
  return it != terms_.end() && it->num == num ? it->coeff : 0;
}

int PerfSeries::root_level() const {
  int level = 0;
  for (const auto& t : terms_) {
    long n = t.num;
    int k = budget_.root_levels;
    while (k > 0 && n % p_ == 0) {
      n /= p_;
      --k;
    }
    level = std::max(level, k);
  }
  return level;
}

PerfSeries PerfSeries::frob() const {
  PerfSeries r(p_, budget_);
  r.truncated_ = truncated_;
  const long bound = max_num();
  for (const auto& t : terms_) {
    const long n = t.num * p_;
    if (n > bound) {
      r.truncated_ = true;
      break;
    }
    r.terms_.push_back({n, t.coeff});
  }
  return r;
}

PerfSeries PerfSeries::frob_inv() const {
  if (truncated_) throw BudgetError("p-th root of a truncated perfected series");
  PerfSeries r(p_, budget_);
  for (const auto& t : terms_) {
    if (t.num % p_ != 0) {
      throw BudgetError("root budget exhausted: exponent " + exponent(t.num).get_str() + " has denominator p^" +
                        std::to_string(budget_.root_levels));
    }
    r.terms_.push_back({t.num / p_, t.coeff});
  }
  return r;
}

PerfSeries PerfSeries::pow(unsigned long k) const {
  PerfSeries result = constant(p_, budget_, 1);
  PerfSeries base = *this;
  // x^(d0 + d1 p + ...) = x^d0 * frob(x)^d1 * ...
  while (k > 0) {
    const unsigned long d = k % static_cast<unsigned long>(p_);
    for (unsigned long i = 0; i < d; ++i) result = result * base;
    k /= static_cast<unsigned long>(p_);
    if (k > 0) base = base.frob();
  }
  return result;
}

PerfSeries PerfSeries::operator-() const { return scaled(-1); }

PerfSeries PerfSeries::scaled(long c) const {
  PerfSeries r(p_, budget_);
  r.truncated_ = truncated_;
  const int cm = mod_p(c, p_);
  if (cm == 0) return r;
  for (const auto& t : terms_) r.terms_.push_back({t.num, mod_p(static_cast<long>(t.coeff) * cm, p_)});
  return r;
}

PerfSeries operator+(const PerfSeries& a, const PerfSeries& b) {
  a.check_compatible(b);
  PerfSeries r(a.p_, a.budget_);
  r.truncated_ = a.truncated_ || b.truncated_;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].num < b.terms_[j].num)) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].num < a.terms_[i].num) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      const int c = (a.terms_[i].coeff + b.terms_[j].coeff) % a.p_;
      if (c != 0) r.terms_.push_back({a.terms_[i].num, c});
      ++i;
      ++j;
    }
  }
  return r;
}

PerfSeries operator-(const PerfSeries& a, const PerfSeries& b) { return a + (-b); }

PerfSeries operator*(const PerfSeries& a, const PerfSeries& b) {
  a.check_compatible(b);
  PerfSeries r(a.p_, a.budget_);
  r.truncated_ = a.truncated_ || b.truncated_;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  const long bound = a.max_num();
  const long lo = a.terms_.front().num + b.terms_.front().num;
  const long hi = std::min(bound, a.terms_.back().num + b.terms_.back().num);
  if (lo > bound) {
    r.truncated_ = true;
    return r;
  }
  if (a.terms_.back().num + b.terms_.back().num > bound) r.truncated_ = true;
  const int p = a.p_;
  std::vector<int> acc(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      const long n = x.num + y.num;
      if (n > hi) break;
      int& slot = acc[static_cast<std::size_t>(n - lo)];
      slot = (slot + x.coeff * y.coeff) % p;
    }
  }
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (acc[k] != 0) r.terms_.push_back({lo + static_cast<long>(k), acc[k]});
  }
  return r;
}

std::string PerfSeries::str() const {
  std::ostringstream os;
  if (terms_.empty()) os << "0";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    const Rational e = exponent(terms_[i].num);
    if (e == 0) {
      os << terms_[i].coeff;
      continue;
    }
    if (terms_[i].coeff != 1) os << terms_[i].coeff << "*";
    os << "t";
    if (e != 1) os << "^" << e.get_str();
  }
  if (truncated_) os << " + O(t^>" << budget_.exp_bound << ")";
  return os.str();
}

}  // namespace frobkit
