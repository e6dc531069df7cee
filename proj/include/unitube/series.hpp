#ifndef UNITUBE_SERIES_HPP
#define UNITUBE_SERIES_HPP

#include <string>
#include <vector>

#include "unitube/errors.hpp"
#include "unitube/field.hpp"

namespace unitube {

// Element of k[[x]] (min_order 0) or xk[[x]] (min_order 1), stored exactly
// up to x^{N-1}.  Arithmetic requires equal precision and truncates at N.
class TruncatedSeries {
 public:
  static TruncatedSeries zero(long long precision, int min_order = 0);
  static TruncatedSeries one(long long precision);
  static TruncatedSeries monomial(long long precision, long long power);
  static TruncatedSeries make(std::vector<Rat> coeffs, int min_order = 0);

  long long precision() const { return static_cast<long long>(coeffs_.size()); }
  int min_order() const { return min_order_; }
  const Rat& coeff(long long i) const;

  bool is_zero() const;

  TruncatedSeries add(const TruncatedSeries& other) const;
  TruncatedSeries mul(const TruncatedSeries& other) const;
  TruncatedSeries scale(const Rat& c) const;

  bool eq(const TruncatedSeries& other) const;

  // least i with c_i != 0; precision when all stored coefficients vanish
  long long order() const;

  std::string str() const;

 private:
  TruncatedSeries(std::vector<Rat> coeffs, int min_order)
      : coeffs_(std::move(coeffs)), min_order_(min_order) {}
  void require_same_precision(const TruncatedSeries& other) const;

  std::vector<Rat> coeffs_;
  int min_order_;
};

}  // namespace unitube

#endif
