#pragma once

#include "equideform/error.hpp"
#include "oracle.hpp"

#include <optional>

// The error kind thrown by f, or nullopt if it returned normally.
template <class F>
std::optional<equideform::ErrorKind> error_kind(F &&f) {
  try {
    f();
  } catch (const equideform::Error &e) {
    return e.kind();
  }
  return std::nullopt;
}

inline oracle::Dense to_dense(const equideform::PrimeFieldMatrix &m) {
  oracle::Dense d(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m(r, c);
  return d;
}

inline equideform::FiniteGroup catalog_group(const char *name) {
  return equideform::build_group(equideform::find_catalog_entry(equideform::builtin_catalog(), name)->spec);
}
