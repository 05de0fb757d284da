// Generated by generate_oracles.py (mpmath). Do not edit.
#pragma once

namespace oracle {

inline constexpr double kLnGamma_0_1 = 2.2527126517342059599;
inline constexpr double kLnGamma_7_3 = 7.1478925230222490328;
inline constexpr double kLnGamma_150_5 = 602.51395487058541195;
inline constexpr double kDigamma_10 = 2.2517525890667211076;
inline constexpr double kDigamma_0_3 = -3.502524222200132989;
inline constexpr double kDigamma_50_5 = 3.9120396709283919846;
inline constexpr double kLegendre_4_5_m2_1_25 = 0.13660956087161844936;
inline constexpr double kLegendre_2_7_p3_1_8 = 19.016550807756125401;
inline constexpr double kLegendre_6_5_m4_3_5 = 8.8475664792793887919;
inline constexpr double kLegendre_10_5_0_5 = 4.9170103472719692775e+9;
inline constexpr double kLegendre_30_3_m7_1_02 = 5.8512272995879935195e-11;
inline constexpr double kLegendreSeries_4_5_m2_1_25 = 0.13660956087161844936;
inline constexpr double kKummerU_1_1_1 = 0.59634736232319407434;
inline constexpr double kKummerU_1_2_5_0_5 = 3.3113590848375969431;
inline constexpr double kKummerU_3_5_5_0_02 = 2.5923480108881010584e+8;
inline constexpr double kKummerU_2_3_5_1e6_scaled = 1.0000009999992500015;
inline constexpr double kExpE1_1 = 0.59634736232319407434;
inline constexpr double kPcfD_m3_1_2 = 0.085772798477853223274;
inline constexpr double kPcfD_m1_3 = 0.032103581293111514506;
inline constexpr double kPcfD_m11_0_3 = 0.00012328971447222738373;
inline constexpr double kPcfD_m50_7 = 9.292774335057710772e-55;
inline constexpr double kPcfD_m200_0_05 = 7.4029553826234917642e-188;
inline constexpr double kPcfD_m120_10 = 1.1311114639455972395e-148;
inline constexpr double kMeijerLog_3_2_5 = 13.768077281959321834;
inline constexpr double kMeijerLog_0_1 = 0.59634736232319407434;
inline constexpr double kMeijerLog_20_1e4 = 2.9756506637920911769e+19;
inline constexpr double kMeijerLog_5_1e_3 = 0.71749334999917485998;
inline constexpr double kCoeffD_2_m5_5_K10_D0_35 = 2.895747273924306159e-6;
inline constexpr double kCoeffD_2_m5_5_K10_D0_35_theta = 2.895747273924306159e-6;
inline constexpr double kCoeffD_0_case1p = 5.301482014577608523e-7;
inline constexpr double kCoeffD_40_case4q = 0.0012546907830802349097;
inline constexpr double kCoeffH_40_case4q = 0.0032579659262444931144;
inline constexpr double kPdf_case1p_0_5 = 0.67970108289117560101;
inline constexpr double kCdf_case2q_1_0 = 0.47447075913480134405;
inline constexpr double kCdf_case6p_0_2 = 0.083155086846994953293;
inline constexpr double kCdf_case1p_1e_3 = 0.00020374599966655937506;
inline constexpr double kMoment2_case2q = 2.076851062901656303;
inline constexpr double kEcLambda_case2q_b5 = 2.5639739913757986198;
inline constexpr double kOpaOutageP_case1_10dB_gth10 = 0.84789096371518253519;
inline constexpr double kOpaOutageP_case1_30dB_gth10 = 0.02393914717826323177;
inline constexpr double kOpaI9_capacity_20dB = 0.40275413165820904572;
inline constexpr double kOpaMeanSqrt_capacity_20dB = 3.4357958534996647965;

}  // namespace oracle
