#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace mae {

enum class Coordinate : std::uint8_t {
  x1, x2, u, p1, p2, p11, p12, p22, p111, p112, p122, p222
};

inline constexpr std::size_t kNumCoordinates = 12;
// Coordinates of M^(1): x1..p22.
inline constexpr std::size_t kNumLevel1 = 8;

inline constexpr std::array<Coordinate, kNumCoordinates> kAllCoordinates = {
    Coordinate::x1,  Coordinate::x2,   Coordinate::u,    Coordinate::p1,
    Coordinate::p2,  Coordinate::p11,  Coordinate::p12,  Coordinate::p22,
    Coordinate::p111, Coordinate::p112, Coordinate::p122, Coordinate::p222};

inline constexpr std::array<Coordinate, 4> kThirdOrder = {
    Coordinate::p111, Coordinate::p112, Coordinate::p122, Coordinate::p222};

constexpr std::size_t index(Coordinate c) { return static_cast<std::size_t>(c); }

// 0 for x1,x2,u,p1,p2; 1 for p11,p12,p22; 2 for p111..p222.
constexpr int level(Coordinate c) {
  const auto i = index(c);
  return i < 5 ? 0 : (i < 8 ? 1 : 2);
}

std::string_view name(Coordinate c);
std::optional<Coordinate> coordinate_from_name(std::string_view s);

// p_{ij} for i,j in {1,2}.
Coordinate second(int i, int j);
// p_{ijk} for i,j,k in {1,2}.
Coordinate third(int i, int j, int k);
// p_i for i in {1,2}.
Coordinate first(int i);

}  // namespace mae
