#pragma once

// Reference values from tools/oracle.py (mpmath, 20+ digits).

namespace oracle {

inline constexpr double K_m0 = 1.5707963267948966192;
inline constexpr double E_m0 = 1.5707963267948966192;
inline constexpr double K_m01 = 1.6124413487202193982;
inline constexpr double E_m01 = 1.5307576368977632025;
inline constexpr double K_m05 = 1.8540746773013719184;
inline constexpr double E_m05 = 1.3506438810476755025;
inline constexpr double K_m09 = 2.5780921133481731882;
inline constexpr double E_m09 = 1.1047747327040733261;
inline constexpr double K_m099 = 3.6956373629898746778;
inline constexpr double E_m099 = 1.0159935450252239356;
inline constexpr double K_m1m8 = 10.59663475708766032;
inline constexpr double E_m1m8 = 1.0000000504831738439;
inline constexpr double Sn_a = 0.29341273316845538786;
inline constexpr double Cn_a = 0.95598586182778707425;
inline constexpr double Dn_a = 0.97824050417436120377;
inline constexpr double Sn_b = 0.98779471596504957767;
inline constexpr double Cn_b = 0.15576135307426880783;
inline constexpr double Dn_b = 0.34904933634140364326;
inline constexpr double Sn_c = -0.9372038834473152047;
inline constexpr double Cn_c = 0.34878199616848232216;
inline constexpr double Dn_c = 0.36115424965346663505;
inline constexpr double Tau_m03 = 3.2799997317290224137;
inline constexpr double H_m03 = 1.5059416123600403521;
inline constexpr double X_m03_a = 0.68133772414007762502;
inline constexpr double Z_m03_a = 0.25576938281136533055;
inline constexpr double X_m03_b = 0.36989886164370780568;
inline constexpr double Z_m03_b = -1.1657648387110872194;
inline constexpr double Area_m03 = 10.268505053281716615;
inline constexpr double Volume_m03 = -2.4766239965354780166;
inline constexpr double Tau_m01 = 3.9906055553294587754;
inline constexpr double H_m01 = 1.2763499431699064233;
inline constexpr double X_m01_a = 0.85289010441531502816;
inline constexpr double Z_m01_a = 0.32252065938273038951;
inline constexpr double X_m01_b = 0.25478964616852810717;
inline constexpr double Z_m01_b = -1.0723105989971184168;
inline constexpr double Area_m01 = 11.525817864930160318;
inline constexpr double Volume_m01 = -3.5746211813185648981;
inline constexpr double Tau_p02 = 2.6611680092312479371;
inline constexpr double H_p02 = 0.60632365728601464244;
inline constexpr double X_p02_a = 1.0937100635525121517;
inline constexpr double Z_p02_a = 0.41241497686719926966;
inline constexpr double X_p02_b = 0.23042678663041580186;
inline constexpr double Z_p02_b = -0.69661800895638316471;
inline constexpr double Area_p02 = 15.645181422768057507;
inline constexpr double Volume_p02 = -5.4690367339130110507;
inline constexpr double Tau_p1 = 1.0782578237498216177;
inline constexpr double H_p1 = 0.26559640763727581417;
inline constexpr double X_p1_a = 1.6641102298576044509;
inline constexpr double Z_p1_a = 0.56997500380686319833;
inline constexpr double X_p1_b = 1.9943442721431810234;
inline constexpr double Z_p1_b = -0.61783349232322686104;
inline constexpr double Area_p1 = 30.437157754357684433;
inline constexpr double Volume_p1 = -10.701983066821298646;
inline constexpr double TorusMeanCurvature_p02 = 0.99472611971756688555;
inline constexpr double RoundTorusM0 = 1.0346258512790941762;
inline constexpr double RoundTorusFirstVariation = -0.76002644524186797108;
inline constexpr double RoundTorusSecondVariation = 1.0252259073071281645;
inline constexpr double RadialFactor = -0.52359877559829887308;
inline constexpr double I1 = 1.0;

}  // namespace oracle
