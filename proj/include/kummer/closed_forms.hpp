#pragma once

// Closed-form normalized coefficients f~_n and p~_n, n = 1..4, as explicit
// rational functions of (mu, tau). Generated once by exact rational series
// arithmetic from the same construction the runtime pipeline uses, then
// Horner-factored in tau. They anchor the pipeline in tests and serve as the
// small-|mu| evaluation path, where the double-precision pipeline loses
// accuracy to cancellation (absolute coefficient noise grows like eps/mu^n).

namespace kummer {
namespace detail {

inline double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

inline double f_tilde_1_closed(double mu, double tau) {
    return (ipow(tau, 2)*(mu + tau*(2*mu + tau*(mu*(9 - 4*mu) + tau*(-21*ipow(mu, 2) + tau*(-ipow(mu, 3)*tau + ipow(mu, 2)*(13*mu + 1)))))))
        / (12*(mu*tau - 1)*ipow(mu*ipow(tau, 2) - 1, 3));
}

inline double p_tilde_1_closed(double mu, double tau) {
    return (ipow(tau, 2)*(mu + tau*(-10*mu + tau*(mu*(8*mu + 9) + tau*(-9*ipow(mu, 2) + tau*(-ipow(mu, 3)*tau + ipow(mu, 2)*(mu + 1)))))))
        / (12*(mu*tau - 1)*ipow(mu*ipow(tau, 2) - 1, 3));
}

inline double f_tilde_2_closed(double mu, double tau) {
    return (ipow(tau, 4)*(ipow(mu, 2) + tau*(mu*(4*mu - 144) + tau*(mu*(mu*(454 - 8*mu) + 720) + tau*(ipow(mu, 2)*(-490*mu - 3276) + tau*(ipow(mu, 2)*(mu*(186*mu + 5462) + 801) + tau*(ipow(mu, 3)*(-3958*mu - 2678) + tau*(ipow(mu, 3)*(mu*(1048*mu + 3255) + 18) + tau*(ipow(mu, 4)*(-1690*mu - 60) + tau*(ipow(mu, 4)*(mu*(313*mu + 68) + 1) + tau*(ipow(mu, 6)*tau + ipow(mu, 5)*(-26*mu - 2))))))))))))
        / (288*ipow(mu*tau - 1, 2)*ipow(mu*ipow(tau, 2) - 1, 6));
}

inline double p_tilde_2_closed(double mu, double tau) {
    return (ipow(tau, 4)*(mu*(mu + 288) + tau*(mu*(-596*mu - 1008) + tau*(mu*(mu*(304*mu + 2998) + 720) + tau*(ipow(mu, 2)*(-2914*mu - 3204) + tau*(ipow(mu, 2)*(mu*(930*mu + 4502) + 801) + tau*(ipow(mu, 3)*(-2326*mu - 1910) + tau*(ipow(mu, 3)*(mu*(304*mu + 1431) + 18) + tau*(ipow(mu, 4)*(-322*mu - 36) + tau*(ipow(mu, 4)*(mu*(mu + 20) + 1) + tau*(ipow(mu, 6)*tau + ipow(mu, 5)*(-2*mu - 2))))))))))))
        / (288*ipow(mu*tau - 1, 2)*ipow(mu*ipow(tau, 2) - 1, 6));
}

inline double f_tilde_3_closed(double mu, double tau) {
    return (ipow(tau, 4)*(-432*mu + tau*(mu*(432*mu - 1728) + tau*(mu*(mu*(6480 - 139*mu) + 21600) + tau*(mu*(mu*(-5586*mu - 81648) - 388800) + tau*(mu*(mu*(mu*(1668*mu + 114675) + 2244240) + 680400) + tau*(ipow(mu, 2)*(mu*(-75291*mu - 5103788) - 5572800) + tau*(ipow(mu, 2)*(mu*(mu*(18579*mu + 5732235) + 17316315) + 1951776) + tau*(ipow(mu, 3)*(mu*(-3181371*mu - 27110118) - 10855458) + tau*(ipow(mu, 3)*(mu*(mu*(700264*mu + 22957125) + 24696258) + 763101) + tau*(ipow(mu, 4)*(mu*(-10070166*mu - 29304894) - 3562623) + tau*(ipow(mu, 4)*(mu*(mu*(1797159*mu + 19013532) + 6694593) + 6831) + tau*(ipow(mu, 5)*(mu*(-6330048*mu - 6394821) - 36663) + tau*(ipow(mu, 5)*(mu*(mu*(829668*mu + 3197085) + 73563) + 1431) + tau*(ipow(mu, 6)*(mu*(-753675*mu - 69141) - 4473) + tau*(ipow(mu, 6)*(mu*(mu*(56201*mu + 30105) + 4848) - 139) + tau*(ipow(mu, 7)*(mu*(-4695*mu - 2001) + 417) + tau*(139*ipow(mu, 9)*tau + ipow(mu, 8)*(195*mu - 417)))))))))))))))))))
        / (51840*ipow(mu*tau - 1, 3)*ipow(mu*ipow(tau, 2) - 1, 9));
}

inline double p_tilde_3_closed(double mu, double tau) {
    return (ipow(tau, 4)*(-432*mu + tau*(mu*(432*mu - 53568) + tau*(mu*(mu*(166320 - 139*mu) + 540000) + tau*(mu*(mu*(-169926*mu - 2418768) - 1166400) + tau*(mu*(mu*(mu*(58008*mu + 4006275) + 7156080) + 680400) + tau*(ipow(mu, 2)*(mu*(-2919831*mu - 16184228) - 6855840) + tau*(ipow(mu, 2)*(mu*(mu*(790239*mu + 17273115) + 21133035) + 1951776) + tau*(ipow(mu, 3)*(mu*(-8782971*mu - 29828118) - 9548118) + tau*(ipow(mu, 3)*(mu*(mu*(1707184*mu + 21070005) + 18231198) + 763101) + tau*(ipow(mu, 4)*(mu*(-6991806*mu - 17006394) - 2821203) + tau*(ipow(mu, 4)*(mu*(mu*(790239*mu + 7809792) + 3952653) + 6831) + tau*(ipow(mu, 5)*(mu*(-1495428*mu - 2554881) - 24963) + tau*(ipow(mu, 5)*(mu*(mu*(58008*mu + 721185) + 34143) + 1431) + tau*(ipow(mu, 6)*(mu*(-60855*mu - 20721) - 4293) + tau*(ipow(mu, 6)*(mu*(mu*(4725 - 139*mu) + 4308) - 139) + tau*(ipow(mu, 7)*(mu*(-15*mu - 1461) + 417) + tau*(139*ipow(mu, 9)*tau + ipow(mu, 8)*(15*mu - 417)))))))))))))))))))
        / (51840*ipow(mu*tau - 1, 3)*ipow(mu*ipow(tau, 2) - 1, 9));
}

inline double f_tilde_4_closed(double mu, double tau) {
    return (ipow(tau, 6)*(-1728*ipow(mu, 2) + tau*(mu*(mu*(1728*mu - 10368) - 1244160) + tau*(mu*(mu*(mu*(36288 - 571*mu) + 6277824) + 43545600) + tau*(mu*(mu*(mu*(-30488*mu - 12632544) - 298798848) - 217728000) + tau*(mu*(mu*(mu*(mu*(9136*mu + 12674316) + 841937760) + 1977048000) + 235146240) + tau*(ipow(mu, 2)*(mu*(mu*(-6369444*mu - 1250732360) - 7309198080) - 3236526720) + tau*(ipow(mu, 2)*(mu*(mu*(mu*(1278020*mu + 1035350060) + 14506908830) + 16049280384) + 1218576960) + tau*(ipow(mu, 3)*(mu*(mu*(-453500204*mu - 16856031940) - 41264324712) - 10254654432) + tau*(ipow(mu, 3)*(mu*(mu*(mu*(82229968*mu + 11535226146) + 62403592332) + 36498020364) + 1257542496) + tau*(ipow(mu, 4)*(mu*(mu*(-4322203276*mu - 57846707984) - 72070323500) - 8501653944) + tau*(ipow(mu, 4)*(mu*(mu*(mu*(685938350*mu + 32405563128) + 86495791886) + 24671708676) + 260412165) + tau*(ipow(mu, 5)*(mu*(mu*(-10084935348*mu - 64567434600) - 39962916924) - 1569566700) + tau*(ipow(mu, 5)*(mu*(mu*(mu*(1338944656*mu + 29188066222) + 39265436532) + 4009274670) + 2844180) + tau*(ipow(mu, 6)*(mu*(mu*(-7259504812*mu - 23731481796) - 5619000492) - 16155720) + tau*(ipow(mu, 6)*(mu*(mu*(mu*(751445924*mu + 8478911244) + 4662971775) + 38458640) + 49950) + tau*(ipow(mu, 7)*(mu*(mu*(-1589570756*mu - 2295515340) - 49416240) - 295520) + tau*(ipow(mu, 7)*(mu*(mu*(mu*(112029040*mu + 628961670) + 36616440) + 698056) + 180) + tau*(ipow(mu, 8)*(mu*(mu*(-80235396*mu - 15330560) - 829908) + 5952) + tau*(ipow(mu, 8)*(mu*(mu*(mu*(2697077*mu + 3208064) + 507368) - 26164) - 571) + tau*(ipow(mu, 9)*(mu*(mu*(-224804*mu - 139336) + 40980) + 2284) + tau*(ipow(mu, 10)*(mu*(9390*mu - 28176) - 3426) + tau*(-571*ipow(mu, 12)*tau + ipow(mu, 11)*(7228*mu + 2284))))))))))))))))))))))))
        / (2488320*ipow(mu*tau - 1, 4)*ipow(mu*ipow(tau, 2) - 1, 12));
}

inline double p_tilde_4_closed(double mu, double tau) {
    return (ipow(tau, 6)*(mu*(2488320 - 1728*mu) + tau*(mu*(mu*(1728*mu - 10150272) - 63452160) + tau*(mu*(mu*(mu*(15555456 - 571*mu) + 363849408) + 304819200) + tau*(mu*(mu*(mu*(-10595720*mu - 821535264) - 2312471808) - 479001600) + tau*(mu*(mu*(mu*(mu*(2706784*mu + 915872556) + 6929595360) + 5011554240) + 235146240) + tau*(ipow(mu, 2)*(mu*(mu*(-505350804*mu - 10685042840) - 19375839360) - 4271356800) + tau*(ipow(mu, 2)*(mu*(mu*(mu*(110600276*mu + 9030307820) + 38261506910) + 22235943744) + 1218576960) + tau*(ipow(mu, 3)*(mu*(mu*(-3990251372*mu - 42761926660) - 55640919672) - 10241264160) + tau*(ipow(mu, 3)*(mu*(mu*(mu*(723075616*mu + 27360532386) + 78127503612) + 34378700076) + 1257542496) + tau*(ipow(mu, 4)*(mu*(mu*(-9318673276*mu - 64487284304) - 61204709468) - 7479932904) + tau*(ipow(mu, 4)*(mu*(mu*(mu*(1301807390*mu + 30681389928) + 63321608798) + 18619937316) + 260412165) + tau*(ipow(mu, 5)*(mu*(mu*(-7603466388*mu - 38605188024) - 25012684284) - 1311312780) + tau*(ipow(mu, 5)*(mu*(mu*(mu*(723075616*mu + 13198940254) + 19434429588) + 2710931790) + 2844180) + tau*(ipow(mu, 6)*(mu*(mu*(-2177280700*mu - 8638738116) - 2940633612) - 13503240) + tau*(ipow(mu, 6)*(mu*(mu*(mu*(110600276*mu + 2004769164) + 1766202975) + 25802480) + 49950) + tau*(ipow(mu, 7)*(mu*(mu*(-188025476*mu - 563074380) - 25063680) - 202880) + tau*(ipow(mu, 7)*(mu*(mu*(mu*(2706784*mu + 80405190) + 12746280) + 318856) + 180) + tau*(ipow(mu, 8)*(mu*(mu*(-2931348*mu - 3060320) - 238788) - 720) + tau*(ipow(mu, 8)*(mu*(mu*(mu*(233744 - 571*mu) + 82808) + 524) - 571) + tau*(ipow(mu, 9)*(mu*(mu*(556*mu - 9976) + 948) + 2284) + tau*(ipow(mu, 10)*(mu*(30*mu - 1488) - 3426) + tau*(-571*ipow(mu, 12)*tau + ipow(mu, 11)*(556*mu + 2284))))))))))))))))))))))))
        / (2488320*ipow(mu*tau - 1, 4)*ipow(mu*ipow(tau, 2) - 1, 12));
}

} // namespace detail
} // namespace kummer
