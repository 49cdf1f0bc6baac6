#pragma once

#include <array>
#include <string>
#include <vector>

#include "thb/hopf.hpp"
#include "thb/linalg.hpp"
#include "thb/model.hpp"

namespace thb {

/// Eigen-data of the scaled system at a (k1, 0) Turing-Hopf point.
/// phi1 = (1, p1), phi2(theta) = (1, p2) e^{i omega0 theta},
/// psi1(0) = (1, q1)/N1, psi2(0) = (1, q2)/N2.
struct EigenData {
    double p1 = 0.0;
    double q1 = 0.0;
    cplx p2;
    cplx q2;
    double N1 = 0.0;
    cplx N2;
    double omega0 = 0.0;  ///< tau* omega* (frequency after time scaling)

    Vec2c phi1() const { return {1.0, p1}; }
    Vec2c phi2(double theta) const;
    Vec2c psi1() const { return {1.0 / N1, q1 / N1}; }
    Vec2c psi2() const { return {1.0 / N2, q2 / N2}; }
};

/// The ten multilinear-form vectors; each is scalar * (1, -1)^T.
struct MultilinearForms {
    cplx Q11, Q12, Q1b2, Q22, Q2b2, Qb2b2;  // quadratic scalars
    cplx C111, C12b2, C112, C22b2;          // cubic scalars

    static Vec2c vec(cplx s) { return {s, -s}; }
};

/// Center-manifold correction terms, evaluated at any theta in [-1, 0].
/// The pure-square blocks (h200_*, h020_0, h002_0) are reported at twice the
/// resolvent form to match the reference value convention; the coefficient
/// assembly consumes the resolvent form directly.
class HTerms {
public:
    Vec2c h200_0(double theta) const;
    Vec2c h200_2k1(double theta) const;  // constant in theta
    Vec2c h011_0(double theta) const;
    Vec2c h011_2k1(double) const { return {}; }  // identically zero
    Vec2c h020_0(double theta) const;
    Vec2c h110_k1(double theta) const;
    Vec2c h002_0(double theta) const { return h020_0(theta).conj(); }
    Vec2c h101_k1(double theta) const { return h110_k1(theta).conj(); }

    // internal state, filled by h_terms()
    EigenData ed;
    MultilinearForms mf;
    Vec2c r200_0;    // -(1/2) A0^{-1} Q11
    Vec2c r200_2k1;  // -(1/(2 sqrt 2)) A_{2k1}^{-1} Q11
    Vec2c r011_0;    // -A0^{-1} Q2b2
    Vec2c r020_0;    // (1/2) Dhat0(2 i w0)^{-1} Q22
    Vec2c r110_k1;   // Dhatk1(i w0)^{-1} Q12
};

struct NormalForm {
    // a1(alpha) = a1_c1 alpha1 + a1_c2 alpha2 (real); analytically a1_c1 = 0
    // because the zero root of mode k1 persists for every delay.
    double a1_c1 = 0.0;
    double a1_c2 = 0.0;
    cplx b2_c1;  // b2(alpha) alpha1 coefficient
    cplx b2_c2;  // alpha2 coefficient; vanishes for k2 = 0
    double a111 = 0.0;
    double a123 = 0.0;
    cplx b112;
    cplx b223;
};

struct BifurcationLine {
    std::string name;      // L1..L6
    bool vertical = false; // tau = tau*
    double slope = 0.0;    // d eps / d tau, for non-vertical lines
    bool tau_above = true; // half-line lives at tau > tau* (eps > eps* for verticals)
};

struct PlanarUnfolding {
    std::array<double, 2> eps1_alpha{};  // linear form in (alpha1, alpha2)
    std::array<double, 2> eps2_alpha{};
    double b0 = 0.0;
    double c0 = 0.0;
    int d0 = 0;
    int sign_re_b223 = 0;
    double d0_minus_b0c0 = 0.0;
    std::string case_label;
};

struct RegionPrediction {
    std::string region;  // D1..D6
    std::string attractors;
    bool outside_validity = false;
};

EigenData eigen_data(const TuringHopfPoint& thp, const Equilibrium& eq, double d);

MultilinearForms multilinear(const EigenData& ed, const Equilibrium& eq, double tau_star);

HTerms h_terms(const EigenData& ed, const MultilinearForms& mf,
               const TuringHopfPoint& thp, const Equilibrium& eq, double d);

NormalForm nf_coefficients(const EigenData& ed, const MultilinearForms& mf,
                           const HTerms& ht, const TuringHopfPoint& thp,
                           const Equilibrium& eq, double d);

PlanarUnfolding planar_unfolding(const NormalForm& nf);

/// Pure function of the sign quadruple (d0, sign b0, sign c0, sign(d0-b0c0)).
std::string case_from_signs(int d0, int sb0, int sc0, int sdd);

std::vector<BifurcationLine> bifurcation_lines(const PlanarUnfolding& pu,
                                               const NormalForm& nf,
                                               const TuringHopfPoint& thp);

RegionPrediction region_of(const PlanarUnfolding& pu,
                           const std::vector<BifurcationLine>& lines,
                           const TuringHopfPoint& thp, double tau, double eps);

/// Convenience: the whole chain at the Turing-Hopf point of (eq, d).
struct NormalFormAnalysis {
    TuringHopfPoint thp;
    EigenData ed;
    MultilinearForms mf;
    HTerms ht;
    NormalForm nf;
    PlanarUnfolding pu;
    std::vector<BifurcationLine> lines;
};
NormalFormAnalysis analyze_normal_form(const Equilibrium& eq, double d);

}  // namespace thb
