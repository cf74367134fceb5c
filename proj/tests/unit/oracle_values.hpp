#pragma once
// Generated by tests/oracles/generate.py; do not edit.
#include "qhz/qcore.hpp"
namespace oracle {
using qhz::Complex;
inline const Complex kLogGamma_3p5_m2i{0.58073321208126816934, -2.3353168419161627716};
inline const Complex kLogGamma_m2p5_p0p5i{-0.93508562129827747868, -8.8709628852474591986};
inline const Complex kLogGamma_0p1_p30i{-47.565423555699172694, 71.406325063462139443};
inline const Complex kHurwitz_2p5_1p3{0.78321855390823728979, 0.0};
inline const Complex kHurwitz_m1p5p2i_0p7{0.0065734995858852344893, 0.11359791587722056018};
inline const Complex kFplus_1_1_1_q05{0.2805922274111408657, 0.0};
inline const Complex kFplus_2_0p7_0p3_q03{0.9081556001931973581, 0.0};
inline const Complex kFplus_1_c_c_q05{0.26503207366991557467, -0.16365448213692536767};
inline const Complex kFminus_1_1_1_q05{5.0495189312265517195, 0.0};
inline const Complex kFminus_3_m2_0p4_q07{-1.2554519104131927015, 0.0};
inline const Complex kGq_2_0p5_1p3_q05{0.47440108434800303626, 0.0};
inline const Complex kBtilde_2_5_1p3_q05{-2.7387329376372649183, 0.0};
inline const Complex kB_3_8_1p7_q09{1.5781226806476359173, 0.0};
inline const Complex kB_1_6_1_q0999{0.023867595754498676689, 0.0};
inline const Complex kZeta_1_4_1_q05{0.12831687402105255801, 0.0};
inline const Complex kZeta_2_3p5_1p5_q08{0.22470940907431355514, 0.0};
inline const Complex kZetaBin_2_1p5_1_q05{0.78009562209060357387, 0.0};
inline const Complex kZetaBin_2_m0p5_1_q05{-0.27699896075424568523, 0.0};
inline const Complex kZetaBin_1_c_c_q06{2.6713565627889825692, -0.57499046377235898177};
inline const Complex kPhi_2_1_0p5_q05{0.040232530034716299759, -0.79491796047947329856};
inline const Complex kPhi_1_m2_m1p3_q03{-0.31944031607866986646, -0.37663633675683966415};
inline const Complex kLogZ_1_1_q05{1.2420620948124149458, 0.0};
inline const Complex kLogZ_2p5_c_q08{50.072059213628649062, -6.6710623502770772786};
}  // namespace oracle
