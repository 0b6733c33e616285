#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace expdist {

enum class ErrorKind {
  DivisionByZero,
  DimensionMismatch,
  SingularMatrix,
  BadAttachment,
  BadBlockSpec,
  NotConnected,
  BlockNotBipartite,
  BlockNotCompleteBipartite,
  MultiEdgeOrLoop,
  VertexOutOfRange,
  ZeroQ,
  VanishingBlockDenominator,
  SingularForm,
  SingularLeadingBlock,
  SingularParameter,
  NotEnoughBlocks,
  ParseError,
};

/// Stable identifier used on the command line and in reports, e.g. "BlockNotBipartite".
std::string_view error_name(ErrorKind kind) noexcept;

/// The single exception type thrown by the library. `kind()` carries the
/// machine-readable category; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace expdist
