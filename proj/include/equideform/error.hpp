#pragma once

#include <stdexcept>
#include <string>

namespace equideform {

enum class ErrorKind {
  InvalidArgument,
  InvalidTable,
  SizeCapExceeded,
  IndexOutOfRange,
  NotSubgroup,
  NotEquivariant,
  EmptySubgroupList,
  InvalidCover,
  NotOrdinaryCompatible,
  NotPGroup,
  NoBranchPoints,
  Parse,
};

/// Stable kebab-case name, used in diagnostics and reports.
const char *error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace equideform
