#include "frobkit/matrix.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "frobkit/errors.hpp"

namespace frobkit {

namespace {

void require_same_shape(const SeriesMatrix& a, const SeriesMatrix& b) {
  require_same_field(a.field(), b.field());
  if (a.dim() != b.dim()) throw DomainError("matrix dimensions differ");
}

SeriesMatrix minor(const SeriesMatrix& a, int row, int col) {
  const int d = a.dim();
  std::vector<std::vector<USeries>> rows;
  for (int i = 0; i < d; ++i) {
    if (i == row) continue;
    std::vector<USeries> r;
    for (int j = 0; j < d; ++j) {
      if (j != col) r.push_back(a(i, j));
    }
    rows.push_back(std::move(r));
  }
  return SeriesMatrix::from_rows(std::move(rows));
}

}  // namespace

SeriesMatrix::SeriesMatrix(FieldPtr field, int d, int cap)
    : field_(std::move(field)), d_(d), e_(static_cast<std::size_t>(d * d), USeries(field_, cap)) {
  if (d < 1) throw DomainError("matrix dimension must be positive");
}

SeriesMatrix SeriesMatrix::identity(FieldPtr field, int d, int prec, int cap) {
  SeriesMatrix m(field, d, cap);
  for (int i = 0; i < d; ++i) m(i, i) = USeries::one(field, prec, cap);
  return m;
}

SeriesMatrix SeriesMatrix::from_rows(std::vector<std::vector<USeries>> rows) {
  const int d = static_cast<int>(rows.size());
  if (d == 0) throw DomainError("empty matrix");
  SeriesMatrix m(rows[0].at(0).field(), d, rows[0][0].cap());
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != d) throw DomainError("matrix is not square");
    for (int j = 0; j < d; ++j) {
      USeries& x = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      require_same_field(m.field(), x.field());
      m(i, j) = std::move(x);
    }
  }
  return m;
}

SeriesMatrix SeriesMatrix::diagonal(const std::vector<USeries>& entries) {
  if (entries.empty()) throw DomainError("empty matrix");
  const int d = static_cast<int>(entries.size());
  SeriesMatrix m(entries[0].field(), d, entries[0].cap());
  for (int i = 0; i < d; ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
  return m;
}

int SeriesMatrix::cap() const {
  int c = e_.front().cap();
  for (const auto& x : e_) c = std::min(c, x.cap());
  return c;
}

SeriesMatrix SeriesMatrix::truncated(int cap) const {
  SeriesMatrix m = *this;
  for (auto& x : m.e_) x = x.truncated(cap);
  return m;
}

SeriesMatrix SeriesMatrix::constant_part() const {
  SeriesMatrix m = *this;
  for (auto& x : m.e_) x = x.cap() == 0 ? x : USeries::constant(x[0], x.cap());
  return m;
}

bool SeriesMatrix::is_integral() const {
  return std::all_of(e_.begin(), e_.end(), [](const USeries& x) { return x.is_integral(); });
}

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
  require_same_shape(a, b);
  SeriesMatrix r = a;
  for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
  return r;
}

SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
  require_same_shape(a, b);
  SeriesMatrix r = a;
  for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
  return r;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  require_same_shape(a, b);
  const int d = a.dim();
  SeriesMatrix r(a.field(), d, std::min(a.cap(), b.cap()));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      USeries acc = r(i, j);
      for (int k = 0; k < d; ++k) acc = acc + a(i, k) * b(k, j);
      r(i, j) = std::move(acc);
    }
  }
  return r;
}

SeriesMatrix operator*(const USeries& c, const SeriesMatrix& a) {
  SeriesMatrix r = a;
  for (auto& x : r.e_) x = c * x;
  return r;
}

bool SeriesMatrix::congruent(const SeriesMatrix& other) const {
  require_same_shape(*this, other);
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (!e_[k].congruent(other.e_[k])) return false;
  }
  return true;
}

std::string SeriesMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < d_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < d_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

USeries det(const SeriesMatrix& a) {
  const int d = a.dim();
  if (d > 16) throw DomainError("determinant limited to dimension 16");
  const int cap = a.cap();
  const unsigned full = (1U << d) - 1U;
  std::vector<USeries> dp(static_cast<std::size_t>(full) + 1U, USeries(a.field(), cap));
  std::vector<bool> live(dp.size(), false);
  live[0] = true;
  for (unsigned mask = 0; mask < full; ++mask) {
    if (!live[mask]) continue;
    const int row = std::popcount(mask);
    for (int j = 0; j < d; ++j) {
      const unsigned bit = 1U << j;
      if (mask & bit) continue;
      const USeries& x = a(row, j);
      if (x.is_exact_zero()) continue;
      USeries term = mask == 0 ? x.truncated(cap) : dp[mask] * x;
      if (std::popcount(mask >> (j + 1)) % 2 == 1) term = -term;
      dp[mask | bit] = live[mask | bit] ? dp[mask | bit] + term : term;
      live[mask | bit] = true;
    }
  }
  return dp[full];
}

SeriesMatrix adjugate(const SeriesMatrix& a) {
  const int d = a.dim();
  SeriesMatrix r(a.field(), d, a.cap());
  if (d == 1) {
    r(0, 0) = USeries::one(a.field(), Field::kMaxPrecision, a.cap());
    return r;
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      USeries m = det(minor(a, i, j));
      r(j, i) = (i + j) % 2 == 0 ? m : -m;
    }
  }
  return r;
}

SeriesMatrix constant_inverse(const SeriesMatrix& a) {
  const SeriesMatrix c = a.constant_part();
  const USeries dt = det(c);
  if (dt.cap() == 0 || dt[0].is_zero()) throw DomainError("constant matrix is singular at available precision");
  const FElement inv = dt[0].inverse();
  SeriesMatrix adj = adjugate(c);
  const int d = a.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) adj(i, j) = inv * adj(i, j);
  }
  return adj;
}

SeriesMatrix block_diag(const SeriesMatrix& a, const SeriesMatrix& b) {
  require_same_field(a.field(), b.field());
  const int da = a.dim();
  const int d = da + b.dim();
  SeriesMatrix m(a.field(), d, std::min(a.cap(), b.cap()));
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) m(i, j) = a(i, j);
  }
  for (int i = 0; i < b.dim(); ++i) {
    for (int j = 0; j < b.dim(); ++j) m(da + i, da + j) = b(i, j);
  }
  return m;
}

SeriesMatrix frobenius(const SeriesMatrix& a, const FrobLift& f) {
  const USeries g = f.series(a.cap());
  SeriesMatrix r = a;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) r(i, j) = compose(a(i, j), g);
  }
  return r;
}

Gauge gauge_alpha(const SeriesMatrix& a, int e0) {
  Gauge g;
  g.infinite = true;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      const Gauge x = gauge_alpha(a(i, j), e0);
      if (x.infinite) continue;
      if (g.infinite || x.value < g.value || (x.value == g.value && !x.exact)) g = x;
      g.infinite = false;
    }
  }
  return g;
}

bool vanishes_mod(const SeriesMatrix& a, int cap, int N) {
  bool indeterminate = false;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      try {
        if (!vanishes_mod(a(i, j), cap, N)) return false;
      } catch (const PrecisionError&) {
        indeterminate = true;
      }
    }
  }
  if (indeterminate) throw PrecisionError("indeterminate: matrix entries known to fewer than " + std::to_string(N) + " digits");
  return true;
}

}  // namespace frobkit
