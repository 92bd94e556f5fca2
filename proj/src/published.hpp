#pragma once

// Values printed in the reference tables for the 12-step scale, transcribed
// cell by cell. Used only by the verification report, which compares them
// with computed values and classifies any mismatch.

#include <chordenum/chord.hpp>

#include <array>
#include <string_view>
#include <vector>

namespace chordenum::published {

using Row = std::array<Count, 13>;
using TextRow = std::array<std::string_view, 13>;

// scale table
inline constexpr Row N_C{0, 1, 11, 55, 165, 330, 462, 462, 330, 165, 55, 11, 1};
inline constexpr TextRow N_C_over_n{"1/12", "1",     "11/2", "55/3", "165/4", "66", "77",
                                    "66",   "165/4", "55/3", "11/2", "1",     "1/12"};
inline constexpr Row I_C{0, 1, 5, 18, 41, 66, 77, 66, 41, 18, 5, 1, 0};
inline constexpr Row DeltaN{0, 0, 1, 2, 7, 0, 18, 0, 14, 6, 5, 0, 11};
inline constexpr TextRow DeltaN_over_n{"11/12", "0", "1/2", "2/3", "7/4", "0",    "3",
                                       "0",     "7/4", "2/3", "1/2", "0", "11/12"};
inline constexpr Row N_M{0, 1, 12, 57, 172, 330, 480, 462, 344, 171, 60, 11, 12};
inline constexpr Row N_M_over_n{1, 1, 6, 19, 43, 66, 80, 66, 43, 19, 6, 1, 1};

// repN table, Delta N_i for i = 1..5
inline constexpr std::array<Row, 5> DeltaN_i{{
    {0, 0, 1, 2, 3, 0, 5, 0, 0, 0, 0, 0, 11},
    {0, 0, 0, 0, 4, 0, 4, 0, 6, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 9, 0, 0, 6, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 8, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 5, 0, 0},
}};

// repn table, nu_i for i = 1..5, then the aggregate rows
inline constexpr std::array<Row, 5> nu_i{{
    {1, 0, 1, 1, 1, 0, 1, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 2, 0, 1, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 3, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
}};
inline constexpr Row nu{1, 0, 1, 1, 3, 0, 5, 0, 3, 1, 1, 0, 1};
inline constexpr Row nu_C{0, 1, 5, 18, 40, 66, 75, 66, 40, 18, 5, 1, 0};
inline constexpr Row nu_M{1, 1, 6, 19, 43, 66, 80, 66, 43, 19, 6, 1, 1};

// TTI table
inline constexpr Row nu_P{1, 1, 6, 5, 15, 10, 20, 10, 15, 5, 6, 1, 1};
inline constexpr Row nu_N{0, 0, 0, 14, 28, 56, 60, 56, 28, 14, 0, 0, 0};
inline constexpr Row nu_Q{1, 1, 6, 12, 29, 38, 50, 38, 29, 12, 6, 1, 1};

// core table: phi column and the printed addend columns
inline constexpr Row phi{1, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
inline constexpr TextRow core_group{"11/12", "0/12",  "6/12", "8/12",          "(15+6)/12", "0/12", "(20+12+4)/12",
                                    "0/12",  "(15+6)/12", "8/12", "6/12", "0/12", "11/12"};
inline constexpr TextRow core_census{"11/12", "0/1",     "1/2",  "2/3",  "(3+4)/4", "0/5",  "(5+4+9)/6",
                                     "0/7",   "(6+8)/8", "6/9",  "5/10", "0/11",    "11/12"};

// poli table as printed, and the equation chain that derives N_S
inline constexpr Row N_S_table{0, 0, 2, 36, 264, 1110, 2970, 5944, 7392, 7128, 4950, 2420, 792};
inline constexpr Row N_V_table{0, 1, 13, 91, 429, 1430, 3432, 6006, 7722, 7293, 5005, 2431, 793};
inline constexpr Row N_S_chain{0, 0, 2, 36, 264, 1100, 2970, 5544, 7392, 7128, 4950, 2420, 792};

// face table: F_j for j = 0..13 (rows) over n = 0..13 (columns); blank cells are 0
inline constexpr std::array<std::array<Count, 14>, 14> faces{{
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13},
    {0, 0, 1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66, 78},
    {0, 0, 0, 1, 4, 10, 20, 35, 56, 84, 120, 165, 220, 286},
    {0, 0, 0, 0, 1, 5, 15, 35, 70, 126, 210, 330, 495, 715},
    {0, 0, 0, 0, 0, 1, 6, 21, 56, 126, 252, 462, 792, 1287},
    {0, 0, 0, 0, 0, 0, 1, 7, 28, 84, 210, 462, 924, 1716},
    {0, 0, 0, 0, 0, 0, 0, 1, 8, 36, 120, 330, 792, 1716},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 9, 45, 165, 495, 1287},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 10, 55, 220, 715},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 11, 66, 286},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 12, 78},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 13},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
}};

// layer chains tau_k^(n-2) for k = L-n+1 down to 1, n = 5..12
struct LayerChain {
    int n;
    std::vector<Count> values;
};

inline const std::vector<LayerChain>& layer_chains()
{
    static const std::vector<LayerChain> chains{
        {5, {120, 84, 56, 35, 20, 10, 4, 1}},
        {6, {210, 126, 70, 35, 15, 5, 1}},
        {7, {252, 126, 56, 21, 6, 1}},
        {8, {210, 84, 28, 7, 1}},
        {9, {120, 36, 8, 1}},
        {10, {45, 9, 1}},
        {11, {10, 1}},
        {12, {1}},
    };
    return chains;
}

// Palindrome solution lists printed for each reduced weighted equation.
struct WeightedList {
    int n;
    std::vector<int> weights;
    std::vector<std::vector<int>> solutions;
};

inline const std::vector<WeightedList>& weighted_lists()
{
    static const std::vector<WeightedList> lists{
        {3, {2, 1}, {{1, 10}, {2, 8}, {3, 6}, {4, 4}, {5, 2}}},
        {4,
         {2, 1, 1},
         {{1, 2, 8}, {1, 3, 7}, {1, 4, 6}, {2, 1, 7}, {2, 3, 5}, {3, 1, 5}, {3, 2, 4}, {4, 1, 3}, {3, 3, 3}}},
        {4, {2, 2}, {{1, 5}, {2, 4}}},
        {4, {3, 1}, {{1, 9}, {2, 6}}},
        {5, {4, 1}, {{1, 8}, {2, 4}}},
        {5, {2, 2, 1}, {{1, 2, 6}, {1, 3, 4}, {1, 4, 2}}},
        {5, {3, 2}, {{2, 3}}},
        {6, {2, 2, 2}, {{1, 2, 3}}},
        {6, {3, 3}, {{1, 3}}},
        {6, {3, 2, 1}, {{1, 2, 5}, {2, 1, 4}}},
        {6, {4, 2}, {{1, 4}}},
        {6, {4, 1, 1}, {{1, 2, 6}, {1, 3, 5}, {2, 1, 3}}},
        {6, {5, 1}, {{1, 7}, {2, 2}}},
        {7, {6, 1}, {{1, 6}}},
        {7, {4, 2, 1}, {{1, 2, 4}, {1, 3, 2}}},
        {7, {5, 2}, {{2, 1}}},
        {8, {4, 4}, {{1, 2}}},
        {8, {6, 1, 1}, {{1, 2, 4}}},
        {8, {5, 2, 1}, {{1, 2, 3}}},
        {8, {6, 2}, {{1, 3}}},
        {8, {7, 1}, {{1, 5}}},
        {9, {8, 1}, {{1, 4}}},
        {9, {6, 3}, {{1, 2}}},
        {10, {8, 2}, {{1, 2}}},
        {10, {9, 1}, {{1, 4}}},
        {11, {10, 1}, {{1, 2}}},
        {12, {12}, {{1}}},
    };
    return lists;
}

// Colored necklace example: 4 beads, 3 colours.
inline constexpr int kBeads = 4;
inline constexpr int kColors = 3;
inline constexpr std::array<Count, 4> cyclic_census{81, 15, 96, 24};   // distinct, repeating, N_M, classes
inline constexpr std::array<Count, 4> dihedral_census{81, 87, 168, 21};
inline constexpr std::array<Count, 4> cyclic_patterns{3, 6, 6, 9};    // x^4, x^3y, x^2y^2, x^2yz
inline constexpr std::array<Count, 4> dihedral_patterns{3, 6, 6, 6};

} // namespace chordenum::published
