#pragma once

// Golden data transcribed from the worked examples and lattice figures.

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wreath_id::fixtures {

using Grid = std::map<std::pair<int, int>, std::string>;

/// Labels of ([0,2]^2, 1) with r = 2, keyed by (v1, v2).
inline const Grid kFigureHeight1 = {
    {{0, 0}, "1"},  {{1, 0}, "q"},   {{2, 0}, "u"},
    {{0, 1}, "q"},  {{0, 2}, "u"},   {{1, 1}, "q^2"},
    {{1, 2}, "qu"}, {{2, 1}, "qu"},  {{2, 2}, "u^2"},
};

/// Labels of ([0,4]^2, 2) with r = 2.
inline const Grid kFigureHeight2 = {
    {{0, 0}, "1"},     {{1, 0}, "q"},     {{2, 0}, "q^2"},   {{3, 0}, "u"},
    {{4, 0}, "qu"},    {{0, 1}, "q"},     {{0, 2}, "q^2"},   {{0, 3}, "u"},
    {{0, 4}, "qu"},    {{1, 1}, "q^2"},   {{2, 1}, "q^3"},   {{3, 1}, "qu"},
    {{4, 1}, "q^2u"},  {{1, 2}, "q^3"},   {{2, 2}, "q^4"},   {{3, 2}, "q^2u"},
    {{4, 2}, "q^3u"},  {{1, 3}, "qu"},    {{2, 3}, "q^2u"},  {{3, 3}, "u^2"},
    {{4, 3}, "qu^2"},  {{1, 4}, "q^2u"},  {{2, 4}, "q^3u"},  {{3, 4}, "qu^2"},
    {{4, 4}, "q^2u^2"},
};

struct WindowDescents {
  std::string window;
  std::vector<int> descents;
};

/// G_eps for eps = (1,0,1), in the listed order.
inline const std::vector<WindowDescents> kEps101 = {
    {"[1^1 2^0 3^1]", {0, 2}}, {"[1^1 3^1 2^0]", {0, 1}},
    {"[2^0 1^1 3^1]", {1, 2}}, {"[2^0 3^1 1^1]", {1}},
    {"[3^1 1^1 2^0]", {0}},    {"[3^1 2^0 1^1]", {0, 2}},
};

/// G_eps for eps = (1,1,0).
inline const std::vector<WindowDescents> kEps110 = {
    {"[1^1 2^1 3^0]", {0, 1}}, {"[1^1 3^0 2^1]", {0, 2}},
    {"[2^1 1^1 3^0]", {0}},    {"[2^1 3^0 1^1]", {0, 2}},
    {"[3^0 1^1 2^1]", {1, 2}}, {"[3^0 2^1 1^1]", {1}},
};

/// For eps = (1,1,0) with rho = 213: each window's rho-pi and whether 0 is
/// adjoined to Des(rho pi).
struct RhoShiftRow {
  std::string window;
  std::vector<int> rho_pi;
  bool adjoin_zero;
};
inline const std::vector<RhoShiftRow> kRhoShift110 = {
    {"[1^1 2^1 3^0]", {2, 1, 3}, true},  {"[1^1 3^0 2^1]", {2, 3, 1}, true},
    {"[2^1 1^1 3^0]", {1, 2, 3}, true},  {"[2^1 3^0 1^1]", {1, 3, 2}, true},
    {"[3^0 1^1 2^1]", {3, 2, 1}, false}, {"[3^0 2^1 1^1]", {3, 1, 2}, false},
};

/// Omega from G_(1,0,1) to G_(1,1,0).
inline const std::vector<std::pair<std::string, std::string>> kOmega101To110 = {
    {"[1^1 2^0 3^1]", "[1^1 3^0 2^1]"}, {"[1^1 3^1 2^0]", "[1^1 2^1 3^0]"},
    {"[2^0 1^1 3^1]", "[3^0 1^1 2^1]"}, {"[2^0 3^1 1^1]", "[3^0 2^1 1^1]"},
    {"[3^1 1^1 2^0]", "[2^1 1^1 3^0]"}, {"[3^1 2^0 1^1]", "[2^1 3^0 1^1]"},
};

}  // namespace wreath_id::fixtures
