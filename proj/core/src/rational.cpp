#include "mae/rational.hpp"

#include "mae/errors.hpp"

namespace mae {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NonConstantRank: return "NonConstantRank";
    case ErrorCode::NotDecomposable: return "NotDecomposable";
    case ErrorCode::DegenerateHorizontal: return "DegenerateHorizontal";
    case ErrorCode::ZeroSymbol: return "ZeroSymbol";
    case ErrorCode::NotOnEquation: return "NotOnEquation";
    case ErrorCode::LineNotInPlane: return "LineNotInPlane";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::RankError: return "RankError";
    case ErrorCode::TrivialEquation: return "TrivialEquation";
    case ErrorCode::NormalFormError: return "NormalFormError";
    case ErrorCode::NotMAE: return "NotMAE";
    case ErrorCode::NotFullyDecomposable: return "NotFullyDecomposable";
    case ErrorCode::InexactRoots: return "InexactRoots";
    case ErrorCode::NotGoursat: return "NotGoursat";
    case ErrorCode::DiscriminantVanishes: return "DiscriminantVanishes";
    case ErrorCode::OutsideC1: return "OutsideC1";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw Error(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  q.canonicalize();
  return q;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  Rational q(static_cast<long>(num), static_cast<unsigned long>(den < 0 ? -den : den));
  if (den < 0) q = -q;
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace mae
