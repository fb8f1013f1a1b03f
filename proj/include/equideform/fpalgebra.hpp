#pragma once

// Exact linear algebra over the prime field F_p and over the integers.
//
// Dimensions of every vector space in this library are ranks of matrices with
// entries in F_p. Ranks do not change under field extension, so working over
// the prime field gives the same answers as over any field of characteristic p.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace equideform {

using BigInt = boost::multiprecision::cpp_int;

/// Largest prime accepted as a field characteristic. Products of two
/// residues must fit in 32 bits.
inline constexpr std::uint32_t kMaxPrime = 65521;

bool is_prime(std::uint64_t n) noexcept;

/// Throws InvalidArgument unless p is a prime not exceeding kMaxPrime.
void require_prime(std::uint64_t p);

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

class PrimeFieldMatrix {
public:
  PrimeFieldMatrix() = default;
  /// Entries are row-major residues in [0, p).
  PrimeFieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t p,
                   std::vector<std::uint32_t> entries);

  static PrimeFieldMatrix zero(std::size_t rows, std::size_t cols,
                               std::uint32_t p);
  static PrimeFieldMatrix identity(std::size_t n, std::uint32_t p);
  /// Reduces arbitrary integers into [0, p).
  static PrimeFieldMatrix from_integers(std::size_t rows, std::size_t cols,
                                        std::uint32_t p,
                                        std::span<const std::int64_t> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t prime() const noexcept { return p_; }
  std::span<const std::uint32_t> entries() const noexcept { return entries_; }
  std::span<const std::uint32_t> row(std::size_t r) const noexcept {
    return {entries_.data() + r * cols_, cols_};
  }
  std::uint32_t operator()(std::size_t r, std::size_t c) const noexcept {
    return entries_[r * cols_ + c];
  }

  PrimeFieldMatrix transpose() const;
  /// Column j of the result is this applied to column j of rhs.
  PrimeFieldMatrix operator*(const PrimeFieldMatrix &rhs) const;
  std::vector<std::uint32_t> apply(std::span<const std::uint32_t> v) const;
  bool is_zero() const noexcept;

  friend bool operator==(const PrimeFieldMatrix &,
                         const PrimeFieldMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> entries_;
};

class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols,
                std::vector<std::int64_t> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const noexcept {
    return entries_[r * cols_ + c];
  }

  PrimeFieldMatrix reduce_mod(std::uint32_t p) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> entries_;
};

/// Incrementally maintained row-echelon basis of a subspace of F_p^n.
///
/// Vectors are reduced against existing pivots in increasing position order;
/// the first surviving nonzero position becomes the new pivot. p = 2 uses a
/// bit-packed representation.
class EchelonBasis {
public:
  EchelonBasis(std::size_t dimension, std::uint32_t p);

  /// Adds v to the span. Returns true if v was independent of the basis.
  bool insert(std::span<const std::uint32_t> v);
  /// True if v lies in the current span. Does not modify the basis.
  bool contains(std::span<const std::uint32_t> v) const;

  std::size_t rank() const noexcept { return rank_; }
  std::size_t dimension() const noexcept { return dim_; }
  std::uint32_t prime() const noexcept { return p_; }

private:
  // Returns the pivot position of the reduced vector, or dim_ if it vanished.
  std::size_t reduce_binary(std::vector<std::uint64_t> &bits) const;
  std::size_t reduce_general(std::vector<std::uint64_t> &acc) const;

  std::size_t dim_;
  std::uint32_t p_;
  std::size_t rank_ = 0;
  std::size_t words_ = 0;
  std::vector<std::int32_t> pivot_slot_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> rows_;
  std::vector<std::uint64_t> scratch_;
};

/// Reduced row echelon form with the list of pivot columns.
struct RowReduction {
  PrimeFieldMatrix reduced;
  std::vector<std::size_t> pivots;
};

RowReduction row_reduce(const PrimeFieldMatrix &m);

/// Pivot choice is the first nonzero entry in column order, so the result is
/// deterministic.
std::size_t rank_mod_p(const PrimeFieldMatrix &m);

/// Basis of {x : m x = 0}, one vector per free column of the reduced form.
/// Each basis vector has a 1 in its own free column and 0 in every other
/// free column, so kernel coordinates of a vector are its free-column entries.
struct Nullspace {
  std::vector<std::vector<std::uint32_t>> basis;
  std::vector<std::size_t> free_columns;
};

Nullspace nullspace_mod_p(const PrimeFieldMatrix &m);

/// Invariant factors d_1 | d_2 | ... of the Smith normal form, min(rows, cols)
/// values, zeros last.
std::vector<BigInt> smith_normal_form(const IntegerMatrix &m);

} // namespace equideform
