#pragma once

#include <stdexcept>
#include <string>

namespace mae {

enum class ErrorCode {
  SyntaxError,
  UnknownVariable,
  NonConstantRank,
  NotDecomposable,
  DegenerateHorizontal,
  ZeroSymbol,
  NotOnEquation,
  LineNotInPlane,
  InsufficientSamples,
  RankError,
  TrivialEquation,
  NormalFormError,
  NotMAE,
  NotFullyDecomposable,
  InexactRoots,
  NotGoursat,
  DiscriminantVanishes,
  OutsideC1,
  InvalidArgument,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace mae
