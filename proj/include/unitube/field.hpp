#ifndef UNITUBE_FIELD_HPP
#define UNITUBE_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unitube/errors.hpp"

namespace unitube {

// Exact rational scalar.  All symbolic coefficients in the library use this
// type; the matrix oracle can swap in a prime field through the same field
// interface below.
using Rat = mpq_class;

inline bool rat_is_zero(const Rat& x) { return sgn(x) == 0; }
inline std::string rat_str(const Rat& x) { return x.get_str(); }

struct RatField {
  using Elem = Rat;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem from_int(long long v) const { return Rat(static_cast<long>(v)); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (rat_is_zero(a)) fail(ErrorKind::BadInput, "division by zero");
    return Rat(1) / a;
  }
  bool is_zero(const Elem& a) const { return rat_is_zero(a); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string str(const Elem& a) const { return rat_str(a); }
  std::string name() const { return "Q"; }
};

// Z/p for an odd prime p.  Elements are canonical representatives in [0, p).
struct PrimeField {
  long long p = 1009;
  using Elem = long long;

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(long long v) const {
    long long r = v % p;
    return r < 0 ? r + p : r;
  }
  Elem add(Elem a, Elem b) const {
    long long r = a + b;
    return r >= p ? r - p : r;
  }
  Elem sub(Elem a, Elem b) const {
    long long r = a - b;
    return r < 0 ? r + p : r;
  }
  Elem mul(Elem a, Elem b) const {
    return static_cast<long long>(static_cast<__int128>(a) * b % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    // extended euclid; p prime makes every nonzero element invertible
    long long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
      long long q = r / nr;
      long long tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (r != 1) fail(ErrorKind::BadInput, "modulus is not prime");
    return from_int(t);
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string str(Elem a) const { return std::to_string(a); }
  std::string name() const { return "F_" + std::to_string(p); }
};

// Dense matrix over a field object F.  Only what the oracle needs: rank,
// consistency of linear systems, products, and column-space accumulation.
template <class F>
class Mat {
 public:
  using Elem = typename F::Elem;

  Mat(F f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), d_(rows * cols, f.zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& field() const { return f_; }

  Elem& at(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

  static Mat identity(F f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  Mat mul(const Mat& o) const {
    if (cols_ != o.rows_) fail(ErrorKind::RankMismatch, "matrix product shape");
    Mat r(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (f_.is_zero(at(i, k))) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = f_.add(r.at(i, j), f_.mul(at(i, k), o.at(k, j)));
      }
    return r;
  }

  Mat sub(const Mat& o) const {
    Mat r(f_, rows_, cols_);
    for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] = f_.sub(d_[i], o.d_[i]);
    return r;
  }

  bool is_zero() const {
    for (const auto& e : d_)
      if (!f_.is_zero(e)) return false;
    return true;
  }

  Mat neg() const {
    Mat r(f_, rows_, cols_);
    for (std::size_t i = 0; i < d_.size(); ++i) r.d_[i] = f_.neg(d_[i]);
    return r;
  }

  // columns of `o` appended on the right
  Mat hcat(const Mat& o) const {
    Mat r(f_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
  }

  // rows of `o` appended below
  Mat vcat(const Mat& o) const {
    Mat r(f_, rows_ + o.rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
      for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, j);
      for (std::size_t i = 0; i < o.rows_; ++i) r.at(rows_ + i, j) = o.at(i, j);
    }
    return r;
  }

  // Gauss-Jordan inverse; nullopt when not square or singular.
  std::optional<Mat> try_inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Mat aug = hcat(identity(f_, rows_));
    aug.eliminate();
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const Elem& e = aug.at(i, j);
        if (i == j ? !f_.eq(e, f_.one()) : !f_.is_zero(e)) return std::nullopt;
      }
    Mat inv(f_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
  }

  std::size_t rank() const {
    Mat w = *this;
    return w.eliminate();
  }

  std::size_t nullity() const { return cols_ - rank(); }

  // Is Ax = b consistent for some x?  b given as a one-column matrix.
  bool solvable(const Mat& b) const {
    return hcat(b).rank() == rank();
  }

 private:
  // in-place row reduction; returns rank
  std::size_t eliminate() {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
      std::size_t piv = rank;
      while (piv < rows_ && f_.is_zero(at(piv, col))) ++piv;
      if (piv == rows_) continue;
      if (piv != rank)
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(rank, j));
      Elem pinv = f_.inv(at(rank, col));
      for (std::size_t j = col; j < cols_; ++j) at(rank, j) = f_.mul(at(rank, j), pinv);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == rank || f_.is_zero(at(i, col))) continue;
        Elem c = at(i, col);
        for (std::size_t j = col; j < cols_; ++j)
          at(i, j) = f_.sub(at(i, j), f_.mul(c, at(rank, j)));
      }
      ++rank;
    }
    return rank;
  }

  F f_;
  std::size_t rows_, cols_;
  std::vector<Elem> d_;
};

}  // namespace unitube

#endif
