#include "mae/coordinate.hpp"

#include "mae/errors.hpp"

namespace mae {

namespace {
constexpr std::array<std::string_view, kNumCoordinates> kNames = {
    "x1", "x2", "u", "p1", "p2", "p11", "p12", "p22", "p111", "p112", "p122", "p222"};

void check_index(int i) {
  if (i != 1 && i != 2) throw Error(ErrorCode::InvalidArgument, "jet index must be 1 or 2");
}
}  // namespace

std::string_view name(Coordinate c) { return kNames[index(c)]; }

std::optional<Coordinate> coordinate_from_name(std::string_view s) {
  for (std::size_t i = 0; i < kNumCoordinates; ++i) {
    if (kNames[i] == s) return kAllCoordinates[i];
  }
  return std::nullopt;
}

Coordinate first(int i) {
  check_index(i);
  return i == 1 ? Coordinate::p1 : Coordinate::p2;
}

Coordinate second(int i, int j) {
  check_index(i);
  check_index(j);
  const int ones = (i == 1) + (j == 1);
  return ones == 2 ? Coordinate::p11 : (ones == 1 ? Coordinate::p12 : Coordinate::p22);
}

Coordinate third(int i, int j, int k) {
  check_index(i);
  check_index(j);
  check_index(k);
  const int twos = (i == 2) + (j == 2) + (k == 2);
  return kThirdOrder[static_cast<std::size_t>(twos)];
}

}  // namespace mae
