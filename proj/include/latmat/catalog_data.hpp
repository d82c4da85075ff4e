#pragma once

namespace latmat {
namespace detail {

/// Named semilattice classes with their Hasse covers and the mu(x_i, x_n)
/// vector of each class diagram, x_n being the last added element. Covers
/// are "a<b" pairs on 0-based indices in linear-extension order; the mu
/// vector is indexed the same way. The parametric family S_{n-2,n} is
/// generated in code instead of being tabulated.
struct RawCatalogEntry {
    const char* label;
    int figure;
    int n;
    const char* covers;
    const char* mobius;
};

inline constexpr RawCatalogEntry kRawCatalog[] = {
    {"S_{1,2}", 1, 2, "0<1", "-1 1"},
    {"S_{2,4}", 1, 4, "0<1 0<2 1<3 2<3", "1 -1 -1 1"},
    {"S_{3,5}", 1, 5, "0<1 0<2 0<3 1<4 2<4 3<4", "2 -1 -1 -1 1"},
    {"S_{3,6}", 1, 6, "0<1 0<4 1<2 1<3 2<5 3<5 4<5", "1 1 -1 -1 -1 1"},
    {"S_{3,7}", 1, 7, "0<1 0<2 1<3 1<4 2<4 2<5 3<6 4<6 5<6", "0 1 1 -1 -1 -1 1"},
    {"S_{3,8}", 1, 8, "0<1 0<2 0<3 1<4 1<5 2<4 2<6 3<5 3<6 4<7 5<7 6<7", "-1 1 1 1 -1 -1 -1 1"},
    {"S_{4,6}", 1, 6, "0<1 0<2 0<3 0<4 1<5 2<5 3<5 4<5", "3 -1 -1 -1 -1 1"},
    {"S_{4,7}^{(1)}", 1, 7, "0<1 0<5 1<2 1<3 1<4 2<6 3<6 4<6 5<6", "1 2 -1 -1 -1 -1 1"},
    {"S_{4,7}^{(2)}", 1, 7, "0<1 0<4 0<5 1<2 1<3 2<6 3<6 4<6 5<6", "2 1 -1 -1 -1 -1 1"},
    {"S_{5,7}", 1, 7, "0<1 0<2 0<3 0<4 0<5 1<6 2<6 3<6 4<6 5<6", "4 -1 -1 -1 -1 -1 1"},
    {"1_A", 2, 1, "", "1"},
    {"2_A", 2, 2, "0<1", "-1 1"},
    {"3_A", 2, 3, "0<1 1<2", "0 -1 1"},
    {"3_B", 2, 3, "0<1 0<2", "-1 0 1"},
    {"4_A", 2, 4, "0<1 1<2 2<3", "0 0 -1 1"},
    {"4_B", 2, 4, "0<1 1<2 1<3", "0 -1 0 1"},
    {"4_C", 2, 4, "0<1 0<3 1<2", "-1 0 0 1"},
    {"4_D", 2, 4, "0<1 0<2 0<3", "-1 0 0 1"},
    {"4_E", 2, 4, "0<1 0<2 1<3 2<3", "1 -1 -1 1"},
    {"5_A", 2, 5, "0<1 1<2 2<3 3<4", "0 0 0 -1 1"},
    {"5_B", 2, 5, "0<1 1<2 2<3 2<4", "0 0 -1 0 1"},
    {"5_C", 2, 5, "0<1 1<2 1<4 2<3", "0 -1 0 0 1"},
    {"5_D", 2, 5, "0<1 0<4 1<2 2<3", "-1 0 0 0 1"},
    {"5_E", 2, 5, "0<1 1<2 1<3 1<4", "0 -1 0 0 1"},
    {"5_F", 2, 5, "0<1 0<4 1<2 1<3", "-1 0 0 0 1"},
    {"5_G", 2, 5, "0<1 0<2 1<3 2<4", "0 0 -1 0 1"},
    {"5_H", 2, 5, "0<1 0<2 0<3 2<4", "0 0 -1 0 1"},
    {"5_I", 2, 5, "0<1 0<2 0<3 0<4", "-1 0 0 0 1"},
    {"5_J", 2, 5, "0<1 0<2 1<3 2<3 3<4", "0 0 0 -1 1"},
    {"5_K", 2, 5, "0<1 0<2 1<3 2<3 2<4", "0 0 -1 0 1"},
    {"5_L", 2, 5, "0<1 0<2 0<4 1<3 2<3", "-1 0 0 0 1"},
    {"5_M", 2, 5, "0<1 1<2 1<3 2<4 3<4", "0 1 -1 -1 1"},
    {"5_N", 2, 5, "0<1 0<2 1<3 2<4 3<4", "1 0 -1 -1 1"},
    {"5_O", 2, 5, "0<1 0<2 0<3 1<4 2<4 3<4", "2 -1 -1 -1 1"},
    {"6_A", 3, 6, "0<1 0<2 0<3 1<4 2<4 3<4 4<5", "0 0 0 0 -1 1"},
    {"6_B", 3, 6, "0<1 0<2 0<3 1<4 1<5 2<4 3<4", "0 -1 0 0 0 1"},
    {"6_C", 3, 6, "0<1 0<2 0<3 0<5 1<4 2<4 3<4", "-1 0 0 0 0 1"},
    {"6_D", 3, 6, "0<1 1<2 1<3 1<4 2<5 3<5 4<5", "0 2 -1 -1 -1 1"},
    {"6_E", 3, 6, "0<1 0<2 0<4 1<3 2<5 3<5 4<5", "2 0 -1 -1 -1 1"},
    {"6_F", 3, 6, "0<1 0<2 1<3 1<4 2<5 3<5 4<5", "1 1 -1 -1 -1 1"},
    {"6_G", 3, 6, "0<1 0<2 0<3 0<4 1<5 2<5 3<5 4<5", "3 -1 -1 -1 -1 1"},
    {"7_AA", 4, 7, "0<1 0<2 0<3 0<6 1<4 2<4 3<4 4<5", "-1 0 0 0 0 0 1"},
    {"7_AB", 4, 7, "0<1 0<2 0<3 1<4 1<6 2<4 3<4 4<5", "0 -1 0 0 0 0 1"},
    {"7_AC", 4, 7, "0<1 0<2 0<3 1<4 2<4 3<4 4<5 4<6", "0 0 0 0 -1 0 1"},
    {"7_AD", 4, 7, "0<1 0<2 0<3 1<4 2<4 3<4 4<5 5<6", "0 0 0 0 0 -1 1"},
    {"7_AE", 4, 7, "0<1 0<2 0<3 0<6 1<4 1<5 2<5 3<5", "-1 0 0 0 0 0 1"},
    {"7_AF", 4, 7, "0<1 0<2 0<3 1<4 1<6 2<4 3<4 3<5", "0 -1 0 0 0 0 1"},
    {"7_AG", 4, 7, "0<1 0<2 0<3 1<4 1<5 1<6 2<5 3<5", "0 -1 0 0 0 0 1"},
    {"7_AH", 4, 7, "0<1 0<2 0<3 1<4 1<5 2<5 3<5 4<6", "0 0 0 0 -1 0 1"},
    {"7_AI", 4, 7, "0<1 0<2 0<3 0<4 0<6 2<5 3<5 4<5", "-1 0 0 0 0 0 1"},
    {"7_AJ", 4, 7, "0<1 0<2 0<3 0<4 1<6 2<5 3<5 4<5", "0 -1 0 0 0 0 1"},
    {"7_AK", 4, 7, "0<1 0<6 1<2 1<3 1<4 2<5 3<5 4<5", "-1 0 0 0 0 0 1"},
    {"7_AL", 4, 7, "0<1 1<2 1<3 1<4 1<6 2<5 3<5 4<5", "0 -1 0 0 0 0 1"},
    {"7_AM", 4, 7, "0<1 1<2 1<3 1<4 2<5 2<6 3<5 4<5", "0 0 -1 0 0 0 1"},
    {"7_AN", 4, 7, "0<1 1<2 1<3 1<4 2<5 3<5 4<5 5<6", "0 0 0 0 0 -1 1"},
    {"7_AO", 4, 7, "0<1 0<2 0<4 0<6 1<3 2<5 3<5 4<5", "-1 0 0 0 0 0 1"},
    {"7_AP", 4, 7, "0<1 0<2 0<4 1<3 2<5 2<6 3<5 4<5", "0 0 -1 0 0 0 1"},
    {"7_AQ", 4, 7, "0<1 0<3 0<4 1<2 1<6 2<5 3<5 4<5", "0 -1 0 0 0 0 1"},
    {"7_AR", 4, 7, "0<1 0<3 0<4 1<2 2<5 2<6 3<5 4<5", "0 0 -1 0 0 0 1"},
    {"7_AS", 4, 7, "0<1 0<2 0<4 1<3 2<5 3<5 4<5 5<6", "0 0 0 0 0 -1 1"},
    {"7_AT", 4, 7, "0<1 0<4 0<5 1<2 2<3 3<6 4<6 5<6", "2 0 0 -1 -1 -1 1"},
    {"7_AU", 4, 7, "0<1 1<2 1<4 1<5 2<3 3<6 4<6 5<6", "0 2 0 -1 -1 -1 1"},
    {"7_AV", 4, 7, "0<1 1<2 2<3 2<4 2<5 3<6 4<6 5<6", "0 0 2 -1 -1 -1 1"},
    {"7_AX", 4, 7, "0<1 0<2 0<4 1<3 2<5 3<6 4<6 5<6", "2 0 0 -1 -1 -1 1"},
    {"7_BA", 5, 7, "0<1 0<4 0<6 1<2 1<3 2<5 3<5 4<5", "-1 0 0 0 0 0 1"},
    {"7_BB", 5, 7, "0<1 0<4 1<2 1<3 1<6 2<5 3<5 4<5", "0 -1 0 0 0 0 1"},
    {"7_BC", 5, 7, "0<1 0<2 1<3 1<4 2<5 2<6 3<5 4<5", "0 0 -1 0 0 0 1"},
    {"7_BD", 5, 7, "0<1 0<2 1<3 1<4 2<5 3<5 4<5 4<6", "0 0 0 0 -1 0 1"},
    {"7_BE", 5, 7, "0<1 0<2 1<3 1<4 2<5 3<5 4<5 5<6", "0 0 0 0 0 -1 1"},
    {"7_BF", 5, 7, "0<1 0<5 1<2 2<3 2<4 3<6 4<6 5<6", "1 0 1 -1 -1 -1 1"},
    {"7_BG", 5, 7, "0<1 0<5 1<2 1<4 2<3 3<6 4<6 5<6", "1 1 0 -1 -1 -1 1"},
    {"7_BH", 5, 7, "0<1 1<2 1<5 2<3 2<4 3<6 4<6 5<6", "0 1 1 -1 -1 -1 1"},
    {"7_BI", 5, 7, "0<1 0<2 1<3 1<4 2<5 3<6 4<6 5<6", "1 1 0 -1 -1 -1 1"},
    {"7_CA", 6, 7, "0<1 0<2 0<3 1<4 1<5 2<5 3<5 4<6 5<6", "0 1 0 0 -1 -1 1"},
    {"7_CB", 6, 7, "0<1 0<2 0<3 0<4 1<5 2<5 3<5 4<6 5<6", "1 0 0 0 -1 -1 1"},
    {"7_CC", 6, 7, "0<1 0<2 0<3 0<4 1<5 2<5 3<5 3<6 4<6", "1 0 0 -1 -1 0 1"},
    {"7_CD", 6, 7, "0<1 0<2 0<3 0<4 1<5 2<5 3<6 4<6 5<6", "2 0 0 -1 -1 -1 1"},
    {"7_CE", 6, 7, "0<1 0<2 1<3 2<3 2<4 2<5 3<6 4<6 5<6", "0 0 2 -1 -1 -1 1"},
    {"7_DA", 7, 7, "0<1 0<2 0<3 0<4 0<6 1<5 2<5 3<5 4<5", "-1 0 0 0 0 0 1"},
    {"7_DB", 7, 7, "0<1 0<2 0<3 0<4 1<5 2<5 3<5 4<5 4<6", "0 0 0 0 -1 0 1"},
    {"7_DC", 7, 7, "0<1 0<2 0<3 0<4 1<5 2<5 3<5 4<5 5<6", "0 0 0 0 0 -1 1"},
    {"7_DD", 7, 7, "0<1 1<2 1<3 1<4 1<5 2<6 3<6 4<6 5<6", "0 3 -1 -1 -1 -1 1"},
    {"7_DE", 7, 7, "0<1 0<3 0<4 0<5 1<2 2<6 3<6 4<6 5<6", "3 0 -1 -1 -1 -1 1"},
    {"7_E", 8, 7, "0<1 0<2 0<3 1<4 1<5 2<5 3<6 4<6 5<6", "1 1 0 -1 -1 -1 1"},
    {"7_F", 8, 7, "0<1 0<2 1<3 1<4 2<4 2<5 3<6 4<6 5<6", "0 1 1 -1 -1 -1 1"},
    {"7_G", 8, 7, "0<1 0<5 1<2 1<3 1<4 2<6 3<6 4<6 5<6", "1 2 -1 -1 -1 -1 1"},
    {"7_H", 8, 7, "0<1 0<4 0<5 1<2 1<3 2<6 3<6 4<6 5<6", "2 1 -1 -1 -1 -1 1"},
    {"7_I", 8, 7, "0<1 0<2 0<3 0<4 0<5 1<6 2<6 3<6 4<6 5<6", "4 -1 -1 -1 -1 -1 1"},
};

}  // namespace detail
}  // namespace latmat
