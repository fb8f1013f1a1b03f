#include "equideform/fpalgebra.hpp"

#include "equideform/error.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

namespace equideform {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p) || p > kMaxPrime)
    throw Error(ErrorKind::InvalidArgument,
                "characteristic " + std::to_string(p) +
                    " is not a prime <= " + std::to_string(kMaxPrime));
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on signed values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1)
    throw Error(ErrorKind::InvalidArgument, "zero has no inverse mod p");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// ---------------------------------------------------------------------------
// PrimeFieldMatrix

PrimeFieldMatrix::PrimeFieldMatrix(std::size_t rows, std::size_t cols,
                                   std::uint32_t p,
                                   std::vector<std::uint32_t> entries)
    : rows_(rows), cols_(cols), p_(p), entries_(std::move(entries)) {
  require_prime(p);
  if (entries_.size() != rows * cols)
    throw Error(ErrorKind::InvalidArgument,
                "matrix entry count does not match its shape");
  for (auto e : entries_)
    if (e >= p)
      throw Error(ErrorKind::InvalidArgument,
                  "matrix entry " + std::to_string(e) + " not reduced mod " +
                      std::to_string(p));
}

PrimeFieldMatrix PrimeFieldMatrix::zero(std::size_t rows, std::size_t cols,
                                        std::uint32_t p) {
  return {rows, cols, p, std::vector<std::uint32_t>(rows * cols, 0)};
}

PrimeFieldMatrix PrimeFieldMatrix::identity(std::size_t n, std::uint32_t p) {
  std::vector<std::uint32_t> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return {n, n, p, std::move(e)};
}

PrimeFieldMatrix
PrimeFieldMatrix::from_integers(std::size_t rows, std::size_t cols,
                                std::uint32_t p,
                                std::span<const std::int64_t> values) {
  require_prime(p);
  std::vector<std::uint32_t> e;
  e.reserve(values.size());
  const auto sp = static_cast<std::int64_t>(p);
  for (auto v : values) e.push_back(static_cast<std::uint32_t>(((v % sp) + sp) % sp));
  return {rows, cols, p, std::move(e)};
}

PrimeFieldMatrix PrimeFieldMatrix::transpose() const {
  std::vector<std::uint32_t> t(entries_.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t[c * rows_ + r] = entries_[r * cols_ + c];
  return {cols_, rows_, p_, std::move(t)};
}

PrimeFieldMatrix PrimeFieldMatrix::operator*(const PrimeFieldMatrix &rhs) const {
  if (cols_ != rhs.rows_ || p_ != rhs.p_)
    throw Error(ErrorKind::InvalidArgument, "incompatible matrix product");
  std::vector<std::uint64_t> acc(rows_ * rhs.cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = entries_[i * cols_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        acc[i * rhs.cols_ + j] = (acc[i * rhs.cols_ + j] + a * rhs.entries_[k * rhs.cols_ + j]) % p_;
    }
  return {rows_, rhs.cols_, p_, std::vector<std::uint32_t>(acc.begin(), acc.end())};
}

std::vector<std::uint32_t>
PrimeFieldMatrix::apply(std::span<const std::uint32_t> v) const {
  if (v.size() != cols_)
    throw Error(ErrorKind::InvalidArgument, "vector length does not match matrix");
  std::vector<std::uint32_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < cols_; ++k)
      s = (s + std::uint64_t(entries_[i * cols_ + k]) * v[k]) % p_;
    out[i] = static_cast<std::uint32_t>(s);
  }
  return out;
}

bool PrimeFieldMatrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

// ---------------------------------------------------------------------------
// IntegerMatrix

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols,
                             std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw Error(ErrorKind::InvalidArgument,
                "matrix entry count does not match its shape");
}

PrimeFieldMatrix IntegerMatrix::reduce_mod(std::uint32_t p) const {
  return PrimeFieldMatrix::from_integers(rows_, cols_, p, entries_);
}

// ---------------------------------------------------------------------------
// EchelonBasis

EchelonBasis::EchelonBasis(std::size_t dimension, std::uint32_t p)
    : dim_(dimension), p_(p), pivot_slot_(dimension, -1) {
  require_prime(p);
  if (p_ == 2) {
    words_ = (dim_ + 63) / 64;
    scratch_.assign(words_, 0);
  } else {
    scratch_.assign(dim_, 0);
  }
}

std::size_t EchelonBasis::reduce_binary(std::vector<std::uint64_t> &bits) const {
  for (std::size_t w = 0; w < words_; ++w) {
    while (bits[w] != 0) {
      const std::size_t pos = w * 64 + std::countr_zero(bits[w]);
      const auto slot = pivot_slot_[pos];
      if (slot < 0) return pos;
      const std::uint64_t *row = bits_.data() + std::size_t(slot) * words_;
      for (std::size_t k = w; k < words_; ++k) bits[k] ^= row[k];
    }
  }
  return dim_;
}

std::size_t EchelonBasis::reduce_general(std::vector<std::uint64_t> &acc) const {
  // acc holds unreduced nonnegative sums; each step adds at most (p-1)^2 per
  // entry and there are at most dim_ steps, so 64 bits never overflow.
  for (std::size_t j = 0; j < dim_; ++j) {
    const std::uint64_t c = acc[j] % p_;
    acc[j] = c;
    if (c == 0) continue;
    const auto slot = pivot_slot_[j];
    if (slot < 0) return j;
    const std::uint32_t *row = rows_.data() + std::size_t(slot) * dim_;
    const std::uint64_t factor = p_ - c;
    for (std::size_t k = j; k < dim_; ++k) acc[k] += factor * row[k];
    acc[j] = 0;
  }
  return dim_;
}

bool EchelonBasis::insert(std::span<const std::uint32_t> v) {
  if (v.size() != dim_)
    throw Error(ErrorKind::InvalidArgument, "vector length does not match basis");
  if (p_ == 2) {
    std::fill(scratch_.begin(), scratch_.end(), 0);
    for (std::size_t i = 0; i < dim_; ++i)
      if (v[i] & 1u) scratch_[i / 64] |= std::uint64_t(1) << (i % 64);
    const std::size_t pos = reduce_binary(scratch_);
    if (pos == dim_) return false;
    pivot_slot_[pos] = static_cast<std::int32_t>(rank_++);
    bits_.insert(bits_.end(), scratch_.begin(), scratch_.end());
    return true;
  }
  for (std::size_t i = 0; i < dim_; ++i) scratch_[i] = v[i];
  const std::size_t pos = reduce_general(scratch_);
  if (pos == dim_) return false;
  const std::uint64_t inv = inverse_mod(static_cast<std::uint32_t>(scratch_[pos]), p_);
  const std::size_t base = rows_.size();
  rows_.resize(base + dim_, 0);
  for (std::size_t k = pos; k < dim_; ++k)
    rows_[base + k] = static_cast<std::uint32_t>((scratch_[k] % p_) * inv % p_);
  pivot_slot_[pos] = static_cast<std::int32_t>(rank_++);
  return true;
}

bool EchelonBasis::contains(std::span<const std::uint32_t> v) const {
  if (v.size() != dim_)
    throw Error(ErrorKind::InvalidArgument, "vector length does not match basis");
  if (p_ == 2) {
    std::vector<std::uint64_t> bits(words_, 0);
    for (std::size_t i = 0; i < dim_; ++i)
      if (v[i] & 1u) bits[i / 64] |= std::uint64_t(1) << (i % 64);
    return reduce_binary(bits) == dim_;
  }
  std::vector<std::uint64_t> acc(v.begin(), v.end());
  return reduce_general(acc) == dim_;
}

// ---------------------------------------------------------------------------
// Dense elimination

RowReduction row_reduce(const PrimeFieldMatrix &m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::uint32_t p = m.prime();
  std::vector<std::uint32_t> a(m.entries().begin(), m.entries().end());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && a[pr * cols + c] == 0) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      std::swap_ranges(a.begin() + pr * cols, a.begin() + (pr + 1) * cols, a.begin() + r * cols);
    const std::uint64_t inv = inverse_mod(a[r * cols + c], p);
    for (std::size_t k = c; k < cols; ++k)
      a[r * cols + k] = static_cast<std::uint32_t>(a[r * cols + k] * inv % p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint64_t f = a[i * cols + c];
      if (f == 0) continue;
      const std::uint64_t neg = p - f;
      for (std::size_t k = c; k < cols; ++k)
        a[i * cols + k] = static_cast<std::uint32_t>((a[i * cols + k] + neg * a[r * cols + k]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return {PrimeFieldMatrix(rows, cols, p, std::move(a)), std::move(pivots)};
}

std::size_t rank_mod_p(const PrimeFieldMatrix &m) {
  // Insert the shorter side as vectors: rank of rows == rank of columns.
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.cols() <= m.rows()) {
    EchelonBasis basis(m.cols(), m.prime());
    for (std::size_t r = 0; r < m.rows() && basis.rank() < m.cols(); ++r)
      basis.insert(m.row(r));
    return basis.rank();
  }
  const auto t = m.transpose();
  EchelonBasis basis(t.cols(), t.prime());
  for (std::size_t r = 0; r < t.rows() && basis.rank() < t.cols(); ++r)
    basis.insert(t.row(r));
  return basis.rank();
}

Nullspace nullspace_mod_p(const PrimeFieldMatrix &m) {
  const auto [reduced, pivots] = row_reduce(m);
  const std::size_t cols = m.cols();
  const std::uint32_t p = m.prime();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Nullspace ns;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const auto e = reduced(i, f);
      v[pivots[i]] = e == 0 ? 0 : p - e;
    }
    ns.basis.push_back(std::move(v));
    ns.free_columns.push_back(f);
  }
  return ns;
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<BigInt> smith_normal_form(const IntegerMatrix &m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t n = std::min(rows, cols);
  std::vector<BigInt> a(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> BigInt & { return a[i * cols + j]; };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols; ++k) std::swap(at(i, k), at(j, k));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < rows; ++k) std::swap(at(k, i), at(k, j));
  };

  std::size_t t = 0;
  for (; t < n; ++t) {
    // Pivot: nonzero entry of least absolute value in the trailing block.
    std::size_t pi = rows, pj = cols;
    BigInt best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const BigInt &v = at(i, j);
        if (v.is_zero()) continue;
        if (pi == rows || abs(v) < best) {
          best = abs(v);
          pi = i;
          pj = j;
          if (best == 1) break;
        }
      }
    if (pi == rows) break;
    if (pi != t) swap_rows(pi, t);
    if (pj != t) swap_cols(pj, t);

    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (at(i, t).is_zero()) continue;
        const BigInt q = at(i, t) / at(t, t);
        if (!q.is_zero())
          for (std::size_t k = t; k < cols; ++k)
            if (!at(t, k).is_zero()) at(i, k) -= q * at(t, k);
        if (!at(i, t).is_zero()) {
          swap_rows(i, t);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (at(t, j).is_zero()) continue;
        const BigInt q = at(t, j) / at(t, t);
        if (!q.is_zero())
          for (std::size_t k = t; k < rows; ++k)
            if (!at(k, t).is_zero()) at(k, j) -= q * at(k, t);
        if (!at(t, j).is_zero()) {
          swap_cols(j, t);
          changed = true;
        }
      }
    }
  }

  std::vector<BigInt> d;
  for (std::size_t i = 0; i < t; ++i) d.push_back(abs(at(i, i)));
  // Diagonal to Smith form: replace pairs by (gcd, lcm).
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const BigInt g = gcd(d[i], d[j]);
      if (g == d[i]) continue;
      const BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  d.resize(n, BigInt(0));
  return d;
}

} // namespace equideform
