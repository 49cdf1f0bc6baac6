#include <doctest.h>

#include <cmath>

#include "thb/errors.hpp"
#include "thb/normal_form.hpp"

using namespace thb;

namespace {

const Equilibrium kEq = equilibrium(0.1, 0.9);

bool rel_close(double got, double want, double tol = 0.01) {
    return std::abs(got - want) <= tol * std::abs(want);
}
bool rel_close(cplx got, cplx want, double tol = 0.01) {
    return std::abs(got - want) <= tol * std::abs(want);
}
bool vec_close(const Vec2c& got, cplx wx, cplx wy, double tol = 0.01) {
    return rel_close(got.x, wx, tol) && rel_close(got.y, wy, tol);
}

}  // namespace

TEST_CASE("eigen-data reproduces the reference block") {
    const NormalFormAnalysis an = analyze_normal_form(kEq, 0.5);
    CHECK(rel_close(an.ed.q1, 0.16837));
    CHECK(rel_close(an.ed.p1, -0.30307));
    CHECK(rel_close(an.ed.p2, cplx(-0.99997, 1.0937)));
    CHECK(rel_close(an.ed.N1, 1.2192));
    CHECK(rel_close(an.ed.N2, cplx(1.0848, 1.4353)));

    // phi1 is a null vector of the mode-k1 characteristic matrix at lambda = 0
    const ModelParams p = params_from(kEq, 0.5, an.thp.eps_star, an.thp.tau_star);
    const Vec2c res = char_matrix(p, an.thp.k1, 0.0) * an.ed.phi1();
    CHECK(res.norm_inf() < 1e-9);
}

TEST_CASE("normalization pairings") {
    for (double d : {0.05, 0.5}) {
        const NormalFormAnalysis an = analyze_normal_form(kEq, d);
        const double u = kEq.u, v = kEq.v, tau = an.thp.tau_star;
        // <psi, phi> = psi(0) [I + tau e^{-lambda} M] phi(0) with the kinetic
        // Jacobian delay block M.
        const auto pairing = [&](const Vec2c& psi, const Vec2c& phi, cplx lambda) {
            const cplx e = tau * std::exp(-lambda);
            const Mat2c dprime{1.0 + e * 2.0 * u * v, e * u * u,
                               -e * 2.0 * u * v, 1.0 - e * u * u};
            return dot(psi, dprime * phi);
        };
        CHECK(std::abs(pairing(an.ed.psi1(), an.ed.phi1(), 0.0) - 1.0) < 1e-10);
        CHECK(std::abs(pairing(an.ed.psi2(), an.ed.phi2(0.0), cplx(0.0, an.ed.omega0)) - 1.0)
              < 1e-10);
    }
}

TEST_CASE("multilinear forms are multiples of (1, -1)") {
    const NormalFormAnalysis an = analyze_normal_form(kEq, 0.5);
    const MultilinearForms& mf = an.mf;
    for (cplx s : {mf.Q11, mf.Q12, mf.Q1b2, mf.Q22, mf.Q2b2, mf.Qb2b2, mf.C111, mf.C12b2,
                   mf.C112, mf.C22b2}) {
        const Vec2c v = MultilinearForms::vec(s);
        CHECK(std::abs(v.x + v.y) < 1e-14);
    }
    CHECK(rel_close(mf.Q11, 2.0 * an.thp.tau_star * (0.9 + 2.0 * an.ed.p1), 1e-12));
    CHECK(rel_close(mf.C111, 6.0 * an.thp.tau_star * an.ed.p1, 1e-12));
}

TEST_CASE("h-terms reproduce the reference value blocks") {
    const NormalFormAnalysis an = analyze_normal_form(kEq, 0.5);
    const HTerms& ht = an.ht;
    CHECK(vec_close(ht.h200_0(0.0), 0.0084241, -0.0079706));
    CHECK(vec_close(ht.h200_0(-1.0), -0.097808, 0.088523));
    CHECK(vec_close(ht.h200_2k1(0.0), 0.31035, -0.046975));
    CHECK(vec_close(ht.h200_2k1(-1.0), 0.31035, -0.046975));
    CHECK(ht.h011_2k1(0.0).norm_inf() == 0.0);
    CHECK(vec_close(ht.h011_0(0.0), -0.031531, 0.029834));
    CHECK(vec_close(ht.h011_0(-1.0), 0.36609, -0.33134));
    CHECK(vec_close(ht.h020_0(0.0), cplx(0.0020659, 0.069984), cplx(-0.0021214, -0.066282),
                    0.02));
    CHECK(vec_close(ht.h020_0(-1.0), cplx(-0.08515, -0.80808), cplx(0.082398, 0.73077)));
    CHECK(vec_close(ht.h110_k1(0.0), cplx(-0.0043069, 0.10203), cplx(0.0073407, -0.25347)));
    CHECK(vec_close(ht.h110_k1(-1.0), cplx(0.03495, -0.24323), cplx(-0.048564, -0.14565)));
    // conjugate pairs
    CHECK((ht.h002_0(-0.5) - ht.h020_0(-0.5).conj()).norm_inf() == 0.0);
    CHECK((ht.h101_k1(-0.5) - ht.h110_k1(-0.5).conj()).norm_inf() == 0.0);
}

TEST_CASE("coefficient block reproduces example A (d = 0.5)") {
    const NormalFormAnalysis an = analyze_normal_form(kEq, 0.5);
    const NormalForm& nf = an.nf;
    // the alpha1 coefficient of a1 vanishes identically on the Turing curve
    CHECK(std::abs(nf.a1_c1) < 1e-12);
    CHECK(rel_close(nf.a1_c2, -0.8787));
    CHECK(rel_close(nf.b2_c1, cplx(0.07723, 0.83252)));
    CHECK(nf.b2_c2 == cplx(0.0));
    CHECK(rel_close(nf.a111, -0.1399));
    CHECK(rel_close(nf.a123, -0.1966));
    CHECK(rel_close(nf.b112, cplx(-0.0906, 0.0967)));
    CHECK(rel_close(nf.b223, cplx(-0.1675, -0.0489)));
}

TEST_CASE("planar constants and case label") {
    const NormalFormAnalysis an = analyze_normal_form(kEq, 0.5);
    CHECK(rel_close(an.pu.b0, 0.6476));
    CHECK(rel_close(an.pu.c0, 1.1737));
    CHECK(an.pu.d0 == 1);
    CHECK(rel_close(an.pu.d0_minus_b0c0, 0.2399));
    CHECK(an.pu.case_label == "Ia");
    CHECK(an.pu.sign_re_b223 == -1);
    CHECK(analyze_normal_form(kEq, 0.05).pu.case_label == "Ia");
}

TEST_CASE("case table covers all twelve columns") {
    CHECK(case_from_signs(+1, +1, +1, +1) == "Ia");
    CHECK(case_from_signs(+1, +1, +1, -1) == "Ib");
    CHECK(case_from_signs(+1, +1, -1, +1) == "II");
    CHECK(case_from_signs(+1, -1, +1, +1) == "III");
    CHECK(case_from_signs(+1, -1, -1, +1) == "IVa");
    CHECK(case_from_signs(+1, -1, -1, -1) == "IVb");
    CHECK(case_from_signs(-1, +1, +1, -1) == "V");
    CHECK(case_from_signs(-1, +1, -1, +1) == "VIa");
    CHECK(case_from_signs(-1, +1, -1, -1) == "VIb");
    CHECK(case_from_signs(-1, -1, +1, +1) == "VIIa");
    CHECK(case_from_signs(-1, -1, +1, -1) == "VIIb");
    CHECK(case_from_signs(-1, -1, -1, -1) == "VIII");
    // infeasible sign patterns
    CHECK_THROWS_AS(case_from_signs(+1, +1, -1, -1), precondition_error);
    CHECK_THROWS_AS(case_from_signs(-1, +1, +1, +1), precondition_error);
    CHECK_THROWS_AS(case_from_signs(-1, -1, -1, +1), precondition_error);
}

TEST_CASE("line slopes for both examples") {
    const NormalFormAnalysis a1 = analyze_normal_form(kEq, 0.5);
    const NormalFormAnalysis a2 = analyze_normal_form(kEq, 0.05);
    const auto slope = [](const NormalFormAnalysis& an, const char* name) {
        for (const BifurcationLine& l : an.lines)
            if (l.name == name) return l.slope;
        FAIL("missing line");
        return 0.0;
    };
    CHECK(rel_close(slope(a1, "L3"), -0.1034));
    CHECK(rel_close(slope(a1, "L4"), -0.1359));
    CHECK(rel_close(slope(a2, "L3"), -0.1154));
    CHECK(rel_close(slope(a2, "L4"), -0.1231));
    // L2 and L6 share the Turing-line slope, which is exactly zero here
    CHECK(std::abs(slope(a1, "L2")) < 1e-10);
    CHECK(slope(a1, "L6") == slope(a1, "L2"));
}

TEST_CASE("line mapping consistency with the planar forms") {
    const NormalFormAnalysis an = analyze_normal_form(kEq, 0.5);
    const auto eps1 = [&](double a1, double a2) {
        return an.pu.eps1_alpha[0] * a1 + an.pu.eps1_alpha[1] * a2;
    };
    const auto eps2 = [&](double a1, double a2) {
        return an.pu.eps2_alpha[0] * a1 + an.pu.eps2_alpha[1] * a2;
    };
    for (const BifurcationLine& l : an.lines) {
        if (l.vertical) {
            CHECK(std::abs(eps1(0.0, 0.3)) < 1e-10);  // alpha1 = 0 along L1/L5
            continue;
        }
        const double a1 = l.tau_above ? 0.01 : -0.01;
        const double a2 = l.slope * a1;
        if (l.name == "L2" || l.name == "L6") CHECK(std::abs(eps2(a1, a2)) < 1e-10);
        if (l.name == "L3") CHECK(std::abs(eps2(a1, a2) - an.pu.c0 * eps1(a1, a2)) < 1e-10);
        if (l.name == "L4") CHECK(std::abs(eps2(a1, a2) - eps1(a1, a2) / an.pu.b0) < 1e-10);
    }
}

TEST_CASE("region classification") {
    const NormalFormAnalysis an = analyze_normal_form(kEq, 0.5);
    const double ts = an.thp.tau_star, es = an.thp.eps_star;
    const auto region = [&](double dt, double de) {
        return region_of(an.pu, an.lines, an.thp, ts + dt, es + de).region;
    };
    CHECK(region(-0.05, 0.05) == "D1");
    CHECK(region(0.05, 0.05) == "D2");
    CHECK(region(0.05, -0.003) == "D3");
    CHECK(region(0.05, -0.0063) == "D4");
    CHECK(region(0.05, -0.03) == "D5");
    CHECK(region(-0.05, -0.05) == "D6");
    CHECK_THROWS_AS(region(0.0, 0.05), precondition_error);  // on L1
    double s3 = 0.0;
    for (const BifurcationLine& l : an.lines)
        if (l.name == "L3") s3 = l.slope;
    CHECK_THROWS_AS(region(0.05, 0.05 * s3), precondition_error);  // on L3
    CHECK(region_of(an.pu, an.lines, an.thp, ts + 0.2, es + 0.2).outside_validity);
    CHECK_FALSE(region_of(an.pu, an.lines, an.thp, ts + 0.05, es + 0.05).outside_validity);
}

TEST_CASE("unsupported mode pairs are rejected") {
    TuringHopfPoint thp{1, 1, 0.1, 0.2, 0.9};
    CHECK_THROWS_AS(eigen_data(thp, kEq, 0.5), precondition_error);
    TuringHopfPoint thp0{0, 0, 0.1, 0.2, 0.9};
    CHECK_THROWS_AS(eigen_data(thp0, kEq, 0.5), precondition_error);
}
