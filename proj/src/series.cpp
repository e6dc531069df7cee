#include "unitube/series.hpp"

#include <sstream>

namespace unitube {

TruncatedSeries TruncatedSeries::zero(long long precision, int min_order) {
  if (precision < 1) fail(ErrorKind::BadInput, "precision must be at least 1");
  if (min_order != 0 && min_order != 1) fail(ErrorKind::BadInput, "min_order must be 0 or 1");
  return TruncatedSeries(std::vector<Rat>(static_cast<std::size_t>(precision), Rat(0)),
                         min_order);
}

TruncatedSeries TruncatedSeries::one(long long precision) {
  TruncatedSeries s = zero(precision, 0);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(long long precision, long long power) {
  if (power < 0) fail(ErrorKind::BadInput, "negative power");
  TruncatedSeries s = zero(precision, power >= 1 ? 1 : 0);
  if (power < precision) s.coeffs_[static_cast<std::size_t>(power)] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::make(std::vector<Rat> coeffs, int min_order) {
  if (coeffs.empty()) fail(ErrorKind::BadInput, "precision must be at least 1");
  if (min_order != 0 && min_order != 1) fail(ErrorKind::BadInput, "min_order must be 0 or 1");
  if (min_order == 1 && !rat_is_zero(coeffs[0]))
    fail(ErrorKind::BadInput, "constant term in an xk[[x]] slot");
  return TruncatedSeries(std::move(coeffs), min_order);
}

const Rat& TruncatedSeries::coeff(long long i) const {
  if (i < 0 || i >= precision()) fail(ErrorKind::OutOfRange, "coefficient index");
  return coeffs_[static_cast<std::size_t>(i)];
}

bool TruncatedSeries::is_zero() const {
  for (const Rat& c : coeffs_)
    if (!rat_is_zero(c)) return false;
  return true;
}

void TruncatedSeries::require_same_precision(const TruncatedSeries& other) const {
  if (precision() != other.precision())
    fail(ErrorKind::PrecisionMismatch,
         std::to_string(precision()) + " vs " + std::to_string(other.precision()));
}

TruncatedSeries TruncatedSeries::add(const TruncatedSeries& other) const {
  require_same_precision(other);
  std::vector<Rat> out(coeffs_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.coeffs_[i];
  return TruncatedSeries(std::move(out), std::min(min_order_, other.min_order_));
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& other) const {
  require_same_precision(other);
  std::size_t n = coeffs_.size();
  std::vector<Rat> out(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (rat_is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return TruncatedSeries(std::move(out), std::min(min_order_ + other.min_order_, 1));
}

TruncatedSeries TruncatedSeries::scale(const Rat& c) const {
  std::vector<Rat> out(coeffs_);
  for (Rat& v : out) v *= c;
  return TruncatedSeries(std::move(out), min_order_);
}

bool TruncatedSeries::eq(const TruncatedSeries& other) const {
  require_same_precision(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != other.coeffs_[i]) return false;
  return true;
}

long long TruncatedSeries::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!rat_is_zero(coeffs_[i])) return static_cast<long long>(i);
  return precision();
}

std::string TruncatedSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (rat_is_zero(coeffs_[i])) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || coeffs_[i] != 1) os << rat_str(coeffs_[i]);
    if (i == 0)
      ;
    else if (coeffs_[i] != 1)
      os << "*";
    if (i == 1)
      os << "x";
    else if (i > 1)
      os << "x^" << i;
  }
  if (first) os << "0";
  os << " + O(x^" << precision() << ")";
  return os.str();
}

}  // namespace unitube
