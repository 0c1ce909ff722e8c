#pragma once

#include <string>
#include <vector>

#include "frobkit/series.hpp"

namespace frobkit {

// Square matrix of power series, row-major.
class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  // The exact zero matrix.
  SeriesMatrix(FieldPtr field, int d, int cap);

  static SeriesMatrix identity(FieldPtr field, int d, int prec, int cap);
  static SeriesMatrix from_rows(std::vector<std::vector<USeries>> rows);
  static SeriesMatrix diagonal(const std::vector<USeries>& entries);

  const FieldPtr& field() const { return field_; }
  int dim() const { return d_; }
  // Smallest cap among the entries.
  int cap() const;
  const USeries& operator()(int i, int j) const { return e_[index(i, j)]; }
  USeries& operator()(int i, int j) { return e_[index(i, j)]; }

  SeriesMatrix truncated(int cap) const;
  // A mod u, as constant series.
  SeriesMatrix constant_part() const;
  bool is_integral() const;

  friend SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator*(const USeries& c, const SeriesMatrix& a);

  bool congruent(const SeriesMatrix& other) const;
  std::string str() const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * d_ + j); }

  FieldPtr field_;
  int d_ = 0;
  std::vector<USeries> e_;
};

// Expansion over column subsets; O(2^d d) series products.
USeries det(const SeriesMatrix& a);
SeriesMatrix adjugate(const SeriesMatrix& a);
// Inverse of a matrix of constants, by adjugate over determinant.
SeriesMatrix constant_inverse(const SeriesMatrix& a);
SeriesMatrix block_diag(const SeriesMatrix& a, const SeriesMatrix& b);
// Entrywise phi(x) = x(f(u)).
SeriesMatrix frobenius(const SeriesMatrix& a, const FrobLift& f);
// Entrywise minimum of the gauge.
Gauge gauge_alpha(const SeriesMatrix& a, int e0);
bool vanishes_mod(const SeriesMatrix& a, int cap, int N);

}  // namespace frobkit
