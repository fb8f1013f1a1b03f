#include "equideform/error.hpp"

namespace equideform {

const char *error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::InvalidArgument: return "invalid-argument";
  case ErrorKind::InvalidTable: return "invalid-table";
  case ErrorKind::SizeCapExceeded: return "size-cap-exceeded";
  case ErrorKind::IndexOutOfRange: return "index-out-of-range";
  case ErrorKind::NotSubgroup: return "not-a-subgroup";
  case ErrorKind::NotEquivariant: return "non-equivariant-morphism";
  case ErrorKind::EmptySubgroupList: return "empty-subgroup-list";
  case ErrorKind::InvalidCover: return "invalid-cover";
  case ErrorKind::NotOrdinaryCompatible: return "not-ordinary-compatible";
  case ErrorKind::NotPGroup: return "not-a-p-group";
  case ErrorKind::NoBranchPoints: return "no-branch-points";
  case ErrorKind::Parse: return "malformed-input";
  }
  return "unknown";
}

} // namespace equideform
