#include "equideform/catalog.hpp"
#include "equideform/fpalgebra.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace equideform;

namespace {

PrimeFieldMatrix mat(std::uint32_t p, std::vector<std::vector<std::int64_t>> rows) {
  std::vector<std::int64_t> flat;
  for (const auto &r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return PrimeFieldMatrix::from_integers(rows.size(), rows.empty() ? 0 : rows[0].size(), p, flat);
}

std::vector<BigInt> snf(std::size_t rows, std::size_t cols, std::vector<std::int64_t> e) {
  return smith_normal_form(IntegerMatrix(rows, cols, std::move(e)));
}

} // namespace

TEST_CASE("rank examples") {
  CHECK(rank_mod_p(PrimeFieldMatrix::zero(2, 2, 3)) == 0);
  CHECK(rank_mod_p(mat(2, {{1, 1}, {1, 1}})) == 1);
  const auto m = mat(5, {{1, 2}, {3, 4}});
  CHECK(rank_mod_p(m) == 2);
  CHECK(oracle::rank_by_enumeration(to_dense(m), 5) == 2);
}

TEST_CASE("smith normal form examples") {
  CHECK(snf(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}) == std::vector<BigInt>{1, 1, 1});
  CHECK(snf(2, 2, {2, 0, 0, 3}) == std::vector<BigInt>{1, 6});
  CHECK(snf(2, 2, {2, 4, 6, 8}) == std::vector<BigInt>{2, 4});
  CHECK(snf(2, 3, {0, 0, 0, 0, 0, 0}) == std::vector<BigInt>{0, 0});
}

TEST_CASE("matrix validation") {
  CHECK(error_kind([] { PrimeFieldMatrix(1, 1, 4, {1}); }) == ErrorKind::InvalidArgument);
  CHECK(error_kind([] { PrimeFieldMatrix(1, 2, 3, {1}); }) == ErrorKind::InvalidArgument);
  CHECK(error_kind([] { PrimeFieldMatrix(1, 1, 3, {3}); }) == ErrorKind::InvalidArgument);
  CHECK(error_kind([] { require_prime(65537); }) == ErrorKind::InvalidArgument);
  CHECK(mat(7, {{-1}})(0, 0) == 6);
  CHECK(inverse_mod(3, 7) == 5);
  CHECK(error_kind([] { inverse_mod(0, 7); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("rank agrees with independent oracles on random matrices") {
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 65521u})
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
      oracle::Dense d(rows, std::vector<std::int64_t>(cols));
      for (auto &r : d)
        for (auto &x : r) x = rng() % 3 == 0 ? 0 : static_cast<std::int64_t>(rng() % p);
      if (trial % 4 == 0 && rows > 2) d[2] = d[0];
      std::vector<std::int64_t> flat;
      for (const auto &r : d) flat.insert(flat.end(), r.begin(), r.end());
      const auto m = PrimeFieldMatrix::from_integers(rows, cols, p, flat);
      const auto rk = rank_mod_p(m);
      CHECK(rk == oracle::rank(d, p));
      CHECK(rk == rank_mod_p(m.transpose()));
      CHECK(rk <= std::min(rows, cols));
      if (p <= 3 && cols <= 6) CHECK(rk == oracle::rank_by_enumeration(d, p));

      const auto ns = nullspace_mod_p(m);
      CHECK(ns.basis.size() + rk == cols);
      for (std::size_t k = 0; k < ns.basis.size(); ++k) {
        for (auto x : m.apply(ns.basis[k])) CHECK(x == 0);
        CHECK(ns.basis[k][ns.free_columns[k]] == 1);
      }

      const auto rr = row_reduce(m);
      CHECK(rr.pivots.size() == rk);
      for (std::size_t i = 0; i < rr.pivots.size(); ++i) CHECK(rr.reduced(i, rr.pivots[i]) == 1);

      EchelonBasis basis(cols, p);
      std::size_t inserted = 0;
      for (std::size_t r = 0; r < rows; ++r) {
        const auto row = m.row(r);
        const bool was_in = basis.contains(row);
        if (basis.insert(row)) ++inserted;
        else CHECK(was_in);
        CHECK(basis.contains(row));
      }
      CHECK(inserted == rk);
      CHECK(basis.rank() == rk);
    }
}

TEST_CASE("smith normal form agrees with determinantal divisors") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    std::vector<std::int64_t> e(rows * cols);
    for (auto &x : e) x = static_cast<std::int64_t>(rng() % 11) - 5;
    oracle::Dense d(rows, std::vector<std::int64_t>(cols));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) d[r][c] = e[r * cols + c];
    const auto got = snf(rows, cols, e);
    const auto want = oracle::smith_by_minors(d);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == BigInt(want[i]));
  }
}

TEST_CASE("matrix algebra") {
  const auto a = mat(5, {{1, 2}, {3, 4}});
  CHECK(a * PrimeFieldMatrix::identity(2, 5) == a);
  CHECK((a * a)(0, 0) == (1 + 6) % 5);
  CHECK(a.transpose()(0, 1) == 3);
  CHECK(a.apply(std::vector<std::uint32_t>{1, 1}) == std::vector<std::uint32_t>{3, 2});
  CHECK(PrimeFieldMatrix::zero(3, 2, 5).is_zero());
  CHECK(error_kind([&] { (void)(a * PrimeFieldMatrix::zero(3, 3, 5)); }) == ErrorKind::InvalidArgument);
}
