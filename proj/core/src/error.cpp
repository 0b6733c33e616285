#include "expdist/error.hpp"

namespace expdist {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::BadAttachment: return "BadAttachment";
    case ErrorKind::BadBlockSpec: return "BadBlockSpec";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::BlockNotBipartite: return "BlockNotBipartite";
    case ErrorKind::BlockNotCompleteBipartite: return "BlockNotCompleteBipartite";
    case ErrorKind::MultiEdgeOrLoop: return "MultiEdgeOrLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::ZeroQ: return "ZeroQ";
    case ErrorKind::VanishingBlockDenominator: return "VanishingBlockDenominator";
    case ErrorKind::SingularForm: return "SingularForm";
    case ErrorKind::SingularLeadingBlock: return "SingularLeadingBlock";
    case ErrorKind::SingularParameter: return "SingularParameter";
    case ErrorKind::NotEnoughBlocks: return "NotEnoughBlocks";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

}  // namespace expdist
