#pragma once

// Fixed E8 data for the doubling construction: words, root lists and index
// sets in Bourbaki labeling.

#include <array>
#include <string_view>
#include <utility>
#include <vector>

namespace g2e8::e8data {

/// Levi of P2 (type A7) and of P1 (type D7), as simple indices.
inline const std::vector<int> kLeviM2 = {1, 3, 4, 5, 6, 7, 8};
inline const std::vector<int> kLeviM1 = {2, 3, 4, 5, 6, 7, 8};
inline const std::vector<int> kRight47 = {4, 7};

/// Support of the character psi_U on the radical of P1.
inline constexpr std::array<std::string_view, 4> kPsiSupport = {"11221111", "11122111", "12232210", "11233210"};

inline constexpr std::string_view kWordSht = "2431542345654234576542314354287654231435426543765428765431";
inline constexpr std::string_view kWordLng =
    "24315423456542314354276542314354265437654287654231435426543765428765431";
/// The two printed forms of nu0.
inline constexpr std::string_view kWordNu0A = "345678243546576";
inline constexpr std::string_view kWordNu0B = "345678245673456";

/// Inversion set of nu0.
inline constexpr std::array<std::string_view, 15> kNu0Inversions = {
    "00000100", "00000110", "00000111", "00001100", "00001110", "00001111", "00011100", "00011110",
    "00011111", "00111100", "00111110", "00111111", "01122210", "01122211", "01122221"};

/// Radical roots of P1 that w0 sends to positive roots.
inline constexpr std::array<std::string_view, 7> kUMinusU0 = {"11110000", "11111000", "11121000", "11221000",
                                                              "12232100", "12232110", "12232111"};

/// Radical roots of P1 removed from U0' = nu0 U0 nu0^-1.
inline constexpr std::array<std::string_view, 7> kUMinusU0Prime = {"12343210", "12343211", "12343221", "12343321",
                                                                   "12344321", "12354321", "13354321"};

/// Roots of the abelian subgroup D0.
inline constexpr std::array<std::string_view, 5> kD0Roots = {"00001100", "00011100", "00001110", "00000111",
                                                             "00011110"};

/// z = x_{00011100}(1) x_{00001110}(1) x_{00000111}(-1).
inline constexpr std::array<std::pair<std::string_view, int>, 3> kZ = {
    {{"00011100", 1}, {"00001110", 1}, {"00000111", -1}}};

/// Coordinates of delta set to zero by elements of H.
inline constexpr std::array<std::string_view, 5> kDeltaZeroedByH = {"00111100", "00111110", "01122210", "01122211",
                                                                    "01122221"};

}  // namespace g2e8::e8data
