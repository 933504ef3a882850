#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qppt/moments.hpp"
#include "qppt/rng.hpp"
#include "testkit.hpp"

using namespace qppt;

namespace {

constexpr Complex kI{0.0, 1.0};

// frames conjugated by the time-reversal unitary: (k, l, m) -> (Rk, Rl, Rm),
// R = diag(-1, 1, -1), still right-handed
OrthonormalTriad reflect(const OrthonormalTriad& t) {
    const auto r = [](const Vec3& v) { return Vec3{-v[0], v[1], -v[2]}; };
    return OrthonormalTriad{r(t.k), r(t.l), r(t.m)};
}

std::vector<OrthonormalTriad> reflect_subset(std::vector<OrthonormalTriad> triads,
                                             const std::vector<int>& subset) {
    for (int q : subset) triads[static_cast<std::size_t>(q - 1)] = reflect(triads[static_cast<std::size_t>(q - 1)]);
    return triads;
}

} // namespace

TEST_CASE("moment matrix of the bare identity column") {
    OperatorColumn xi;
    xi.ops = {ComplexMatrix::identity(4)};
    const MomentMatrix mm = moment_matrix(maximally_mixed(2), xi);
    REQUIRE(mm.entries.dim() == 1);
    CHECK(std::abs(mm.entries(0, 0) - Complex{1.0, 0.0}) < 1e-15);
}

TEST_CASE("moment matrix of (I, sx, sy) on |0><0|") {
    OperatorColumn xi;
    xi.ops = {ComplexMatrix::identity(2), sigma_dot({1, 0, 0}), sigma_dot({0, 1, 0})};
    const DensityOperator rho = pure_state({1.0, 0.0});
    const MomentMatrix mm = moment_matrix(rho, xi);
    // <sx sy> = i <sz> = i
    CHECK(std::abs(mm.entries(0, 1)) < 1e-15);
    CHECK(std::abs(mm.entries(0, 2)) < 1e-15);
    CHECK(std::abs(mm.entries(1, 1) - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(mm.entries(1, 2) - kI) < 1e-15);
    CHECK(std::abs(mm.entries(2, 1) + kI) < 1e-15);
    CHECK(mm.real_part(1, 2) == Complex{0.0, 0.0});
}

TEST_CASE("frame moment matrix of the Werner state") {
    const double x = 0.45;
    const OrthonormalTriad std_triad = OrthonormalTriad::standard();
    const MomentMatrix mm =
        moment_matrix(werner_two_qubit(x), OperatorColumn::two_qubit_frame(std_triad, std_triad));
    // first row (1, t_k, t_l, t_m) with every t equal to -x
    CHECK(mm.entries(0, 0).real() == doctest::Approx(1.0).epsilon(1e-13));
    for (int c = 1; c < 4; ++c) CHECK(mm.entries(0, c).real() == doctest::Approx(-x).epsilon(1e-13));
    // inner off-diagonals carry the opposite sign
    CHECK(mm.entries(1, 2).real() == doctest::Approx(x).epsilon(1e-13));
    CHECK(mm.entries(1, 3).real() == doctest::Approx(x).epsilon(1e-13));
}

TEST_CASE("moment matrices are PSD with unit corner for valid states") {
    SeededRng rng(501);
    for (int rep = 0; rep < 30; ++rep) {
        const DensityOperator rho = testkit::random_density(2, rng);
        OperatorColumn xi;
        xi.ops = {ComplexMatrix::identity(4), testkit::random_hermitian(4, rng),
                  testkit::random_hermitian(4, rng), testkit::random_hermitian(4, rng)};
        const MomentMatrix mm = moment_matrix(rho, xi);
        CHECK(std::abs(mm.entries(0, 0) - Complex{1.0, 0.0}) < 1e-12);
        CHECK(mm.entries.is_hermitian(1e-12));
        CHECK(min_eigenvalue(mm.entries) >= -1e-10);
        // real part of a PSD Hermitian matrix is PSD
        CHECK(min_eigenvalue(mm.real_part) >= -1e-10);
    }
}

TEST_CASE("moment_matrix validates the column") {
    OperatorColumn xi;
    xi.ops = {sigma_dot({1, 0, 0})}; // no identity in front
    CHECK_THROWS_AS(moment_matrix(maximally_mixed(1), xi), BadShape);
    OperatorColumn xi2;
    xi2.ops = {ComplexMatrix::identity(2), ComplexMatrix::identity(4)};
    CHECK_THROWS_AS(moment_matrix(maximally_mixed(1), xi2), DimensionMismatch);
}

TEST_CASE("sr_check equality case on |0><0|") {
    const DensityOperator rho = pure_state({1.0, 0.0});
    const SrResult r = sr_check(rho, sigma_dot({1, 0, 0}), sigma_dot({0, 1, 0}));
    CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(r.rhs == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(r.holds);
}

TEST_CASE("sr_check on the maximally mixed qubit") {
    const SrResult r = sr_check(maximally_mixed(1), sigma_dot({1, 0, 0}), sigma_dot({0, 1, 0}));
    CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(r.rhs == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(r.holds);
}

TEST_CASE("sr_check with the identity as second observable") {
    SeededRng rng(502);
    const DensityOperator rho = testkit::random_density(1, rng);
    const SrResult r = sr_check(rho, sigma_dot({0, 0, 1}), ComplexMatrix::identity(2));
    CHECK(r.rhs == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(r.lhs >= -1e-15);
    CHECK(r.holds);
}

TEST_CASE("sr_check rejects non-Hermitian observables") {
    ComplexMatrix bad(2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(sr_check(maximally_mixed(1), bad, sigma_dot({0, 0, 1})), NotHermitian);
}

TEST_CASE("srpt_check holds on separable samples") {
    const SigmaSet s = build_sigma_set(standard_triads(2));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const DensityOperator rho = random_separable(2, 3, seed);
        const SrResult r = srpt_check(rho, s.sigma1, s.sigma2, Bipartition::first_r(2, 1));
        CHECK(r.holds);
        CHECK(r.block_min_eigenvalue >= -1e-10);
    }
}

TEST_CASE("srpt_check with one-sided product observables reduces to sr_check on rho^PT") {
    SeededRng rng(503);
    const ComplexMatrix a = testkit::random_hermitian(2, rng);
    const ComplexMatrix b = testkit::random_hermitian(2, rng);
    const ComplexMatrix a1 = kron(a, ComplexMatrix::identity(2));
    const ComplexMatrix a2 = kron(ComplexMatrix::identity(2), b);
    const DensityOperator rho = testkit::random_density(2, rng);
    const Bipartition bp = Bipartition::first_r(2, 1);

    const SrResult pt_result = srpt_check(rho, a1, a2, bp);
    // rho^PT of a random state may fail positivity, so compare raw moments
    const ComplexMatrix rho_pt = partial_transpose(rho.matrix, bp);
    const DensityOperator as_state = DensityOperator::trusted(2, rho_pt);
    const SrResult direct = sr_check(as_state, a1, a2);
    CHECK(pt_result.lhs == doctest::Approx(direct.lhs).epsilon(1e-12));
    CHECK(pt_result.rhs == doctest::Approx(direct.rhs).epsilon(1e-12));
}

TEST_CASE("srpt_check flags the singlet with the collective operators") {
    const DensityOperator singlet = werner_two_qubit(1.0);
    const SigmaSet s = build_sigma_set(standard_triads(2));
    const SrResult r = srpt_check(singlet, s.sigma1, s.sigma2, Bipartition::first_r(2, 1));
    CHECK_FALSE(r.holds);
    CHECK(r.variance1 == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(r.block_min_eigenvalue ==
          doctest::Approx(0.5 * (1.0 - std::sqrt(5.0))).epsilon(1e-12));
    // the bare product inequality saturates here; the block test decides
    CHECK(r.lhs >= r.rhs - 1e-12);
}

TEST_CASE("m1_pair of the maximally mixed state is the identity") {
    const M1Pair pair = m1_pair(maximally_mixed(2));
    CHECK(max_abs_diff(pair.m, ComplexMatrix::identity(7)) < 1e-13);
    CHECK(max_abs_diff(pair.m_pt, ComplexMatrix::identity(7)) < 1e-13);
}

TEST_CASE("m1_pair of the Werner state flips the T block") {
    const double x = 0.6;
    const M1Pair pair = m1_pair(werner_two_qubit(x));
    for (int i = 0; i < 3; ++i) {
        CHECK(pair.m(1 + i, 4 + i).real() == doctest::Approx(-x).epsilon(1e-13));
        CHECK(pair.m_pt(1 + i, 4 + i).real() == doctest::Approx(x).epsilon(1e-13));
        CHECK(std::abs(pair.m(0, 1 + i)) < 1e-13);
    }
}

TEST_CASE("m1_pair matches the real part of the raw moment matrix") {
    SeededRng rng(504);
    const OperatorColumn xi = OperatorColumn::two_qubit_basic();
    for (int rep = 0; rep < 20; ++rep) {
        const DensityOperator rho = testkit::random_density(2, rng);
        const M1Pair pair = m1_pair(rho);
        const MomentMatrix raw = moment_matrix(rho, xi);
        CHECK(max_abs_diff(pair.m, raw.real_part) < 1e-12);
        const Bipartition bp = Bipartition::first_r(2, 1);
        const MomentMatrix raw_pt = moment_matrix(time_reversal_pt(rho.matrix, bp), xi);
        CHECK(max_abs_diff(pair.m_pt, raw_pt.real_part) < 1e-12);
    }
}

TEST_CASE("time-reversal and literal PT give the same raw m1 spectra") {
    SeededRng rng(505);
    const OperatorColumn xi = OperatorColumn::two_qubit_basic();
    const Bipartition bp = Bipartition::first_r(2, 1);
    for (int rep = 0; rep < 10; ++rep) {
        const DensityOperator rho = testkit::random_density(2, rng);
        const Spectrum a = hermitian_eigenvalues(moment_matrix(time_reversal_pt(rho.matrix, bp), xi).entries);
        const Spectrum b = hermitian_eigenvalues(moment_matrix(partial_transpose(rho.matrix, bp), xi).entries);
        for (std::size_t i = 0; i < a.values.size(); ++i)
            CHECK(a.values[i] == doctest::Approx(b.values[i]).epsilon(1e-10));
    }
}

TEST_CASE("disordered subsystems: m1 verdict blind to the partial transpose") {
    SeededRng rng(506);
    int found = 0;
    while (found < 20) {
        TwoQubitData d;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) d.t[i][j] = 2.0 * rng.uniform() - 1.0;
        DensityOperator rho;
        try {
            rho = two_qubit_from_data(d);
        } catch (const NotPositive&) {
            continue;
        }
        ++found;
        const M1Pair pair = m1_pair(rho);
        const bool m_ok = min_eigenvalue(pair.m) >= -1e-10;
        const bool pt_ok = min_eigenvalue(pair.m_pt) >= -1e-10;
        CHECK(m_ok == pt_ok);
        CHECK(m_ok); // with s1 = s2 = 0 both are PSD for any valid state
    }
}

TEST_CASE("m1_schur on the identity and on block forms") {
    CHECK(max_abs_diff(m1_schur(ComplexMatrix::identity(7)), ComplexMatrix::identity(6)) < 1e-15);

    // pure |00>: schur blocks diag(1,1,0) and zero cross terms
    TwoQubitData d;
    d.s1 = {0, 0, 1};
    d.s2 = {0, 0, 1};
    d.t[2][2] = 1.0;
    const M1Pair pair = m1_pair(two_qubit_from_data(d));
    const ComplexMatrix schur = m1_schur(pair.m);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const double want = (i == j && i != 2 && i != 5) ? 1.0 : 0.0;
            CHECK(std::abs(schur(i, j) - Complex{want, 0.0}) < 1e-13);
        }

    CHECK_THROWS_AS(m1_schur(ComplexMatrix::identity(6)), BadShape);
}

TEST_CASE("m1_schur verdict equals the full 7x7 verdict") {
    SeededRng rng(507);
    for (int rep = 0; rep < 200; ++rep) {
        const DensityOperator rho = testkit::random_density(2, rng);
        const M1Pair pair = m1_pair(rho);
        for (const ComplexMatrix* m : {&pair.m, &pair.m_pt}) {
            const bool direct = min_eigenvalue(*m) >= -1e-10;
            const bool schur = min_eigenvalue(m1_schur(*m)) >= -1e-10;
            CHECK(direct == schur);
        }
    }
}

TEST_CASE("m2 closed-form eigenvalues for the Werner family") {
    const double x = 0.8;
    const OrthonormalTriad f = OrthonormalTriad::standard();
    const auto mu = m2_pt_eigs(werner_two_qubit(x), f, f);
    // multiset {1-3x, 1+x, 1+x, 1+x}
    std::array<double, 4> sorted = mu;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted[0] == doctest::Approx(1.0 - 3.0 * x).epsilon(1e-12));
    for (int i = 1; i < 4; ++i) CHECK(sorted[i] == doctest::Approx(1.0 + x).epsilon(1e-12));
}

TEST_CASE("m2 display spectrum at the Werner boundary is {0, 4/3, 4/3, 4/3}") {
    const double x = 1.0 / 3.0;
    const Spectrum s = hermitian_eigenvalues(m2_pt_matrix(-x, -x, -x));
    CHECK(std::abs(s.values[0]) < 1e-14);
    for (int i = 1; i < 4; ++i)
        CHECK(s.values[static_cast<std::size_t>(i)] == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("m2 closed form: T = 0 gives all ones, singlet dips to -2") {
    const OrthonormalTriad f = OrthonormalTriad::standard();
    for (double v : m2_pt_eigs(maximally_mixed(2), f, f)) CHECK(v == doctest::Approx(1.0));
    const auto mu = m2_pt_eigs(werner_two_qubit(1.0), f, f);
    CHECK(*std::min_element(mu.begin(), mu.end()) == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("m2 closed form agrees with the numeric spectrum of the display matrix") {
    SeededRng rng(508);
    for (int rep = 0; rep < 100; ++rep) {
        const DensityOperator rho = testkit::random_density(2, rng);
        const OrthonormalTriad f1 = testkit::random_triad(rng);
        const OrthonormalTriad f2 = testkit::random_triad(rng);
        auto mu = m2_pt_eigs(rho, f1, f2);

        const TwoQubitData d = extract_two_qubit_data(rho);
        const ComplexMatrix display = m2_pt_matrix(bilinear(f1.k, d.t, f2.k), bilinear(f1.l, d.t, f2.l),
                                                   bilinear(f1.m, d.t, f2.m));
        const Spectrum numeric = hermitian_eigenvalues(display);
        std::sort(mu.begin(), mu.end());
        for (int i = 0; i < 4; ++i)
            CHECK(mu[static_cast<std::size_t>(i)] ==
                  doctest::Approx(numeric.values[static_cast<std::size_t>(i)]).epsilon(1e-10));
    }
}

TEST_CASE("m2 display equals the literal-engine moment matrix in reflected frames") {
    SeededRng rng(509);
    const Bipartition bp = Bipartition::first_r(2, 1);
    for (int rep = 0; rep < 20; ++rep) {
        const DensityOperator rho = testkit::random_density(2, rng);
        const auto triads = testkit::random_triads(2, rng);
        const TwoQubitData d = extract_two_qubit_data(rho);
        const ComplexMatrix display = m2_pt_matrix(bilinear(triads[0].k, d.t, triads[1].k),
                                                   bilinear(triads[0].l, d.t, triads[1].l),
                                                   bilinear(triads[0].m, d.t, triads[1].m));
        const auto refl = reflect_subset(triads, {1});
        const MomentMatrix lit = moment_matrix(partial_transpose(rho.matrix, bp),
                                               OperatorColumn::two_qubit_frame(refl[0], refl[1]));
        CHECK(max_abs_diff(display, lit.entries) < 1e-12);
    }
}

TEST_CASE("msigma display entries for hand-computable states") {
    const SigmaSet s3 = build_sigma_set(standard_triads(3));
    const PtSigmaSet ps3 = build_pt_sigma_set(s3, 1);

    SUBCASE("maximally mixed") {
        const MsigmaPair pair = msigma_pair(maximally_mixed(3), s3, ps3);
        const double want = 0.25; // 2^(1-N)
        for (int i = 1; i < 4; ++i) {
            CHECK(pair.m_pt(i, i).real() == doctest::Approx(want).epsilon(1e-13));
            CHECK(std::abs(pair.m_pt(0, i)) < 1e-13);
        }
    }

    SUBCASE("schmidt state") {
        SchmidtParams par;
        par.lambda = {0.55, 0.45, 0.25, 0.35, 0.0};
        par.lambda[4] = std::sqrt(1.0 - 0.3025 - 0.2025 - 0.0625 - 0.1225);
        par.phi = 0.3;
        const MsigmaPair pair = msigma_pair(schmidt_three_qubit(par), s3, ps3);
        const double l1sq = par.lambda[1] * par.lambda[1];
        CHECK(pair.m(0, 1).real() == doctest::Approx(2.0 * par.lambda[0] * par.lambda[4]).epsilon(1e-12));
        CHECK(pair.m_pt(0, 1).real() ==
              doctest::Approx(-2.0 * par.lambda[0] * par.lambda[4]).epsilon(1e-12));
        CHECK(pair.m_pt(0, 3).real() == doctest::Approx(l1sq).epsilon(1e-12));
        CHECK(pair.m_pt(1, 1).real() == doctest::Approx(l1sq).epsilon(1e-12));
        CHECK(std::abs(pair.m_pt(1, 2) - kI * l1sq) < 1e-12);
    }

    SUBCASE("ghz-like") {
        const double p = 0.3, phi = 0.9;
        const MsigmaPair pair = msigma_pair(ghz_like(3, p, phi), s3, ps3);
        CHECK(pair.m(0, 1).real() ==
              doctest::Approx(2.0 * std::sqrt(p * (1 - p)) * std::cos(phi)).epsilon(1e-12));
        CHECK(std::abs(pair.m_pt(1, 1)) < 1e-13); // <Sigma_0^PT> vanishes
    }
}

TEST_CASE("msigma display equals the moment matrix of the time-reversed state") {
    SeededRng rng(510);
    for (int rep = 0; rep < 15; ++rep) {
        const int n = 2 + static_cast<int>(rng.uniform() * 2.0);
        const DensityOperator rho = testkit::random_density(n, rng);
        const auto triads = testkit::random_triads(n, rng);
        const SigmaSet s = build_sigma_set(triads);
        const Bipartition bp = Bipartition::first_r(n, 1);
        const PtSigmaSet ps = build_pt_sigma_set(s, bp);
        const MsigmaPair pair = msigma_pair(rho, s, ps);

        const MomentMatrix direct = moment_matrix(rho, OperatorColumn::from_sigma(s));
        CHECK(max_abs_diff(pair.m, direct.entries) < 1e-12);

        const MomentMatrix tr = moment_matrix(time_reversal_pt(rho.matrix, bp), OperatorColumn::from_sigma(s));
        CHECK(max_abs_diff(pair.m_pt, tr.entries) < 1e-12);

        // and against the literal engine with frames reflected on the cut
        const SigmaSet s_refl = build_sigma_set(reflect_subset(triads, bp.transposed));
        const MomentMatrix lit =
            moment_matrix(partial_transpose(rho.matrix, bp), OperatorColumn::from_sigma(s_refl));
        CHECK(max_abs_diff(pair.m_pt, lit.entries) < 1e-12);
    }
}

TEST_CASE("msigma closed-form eigenvalues match the numeric spectrum") {
    SeededRng rng(511);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 2 + static_cast<int>(rng.uniform() * 2.0);
        const DensityOperator rho =
            (rep % 2 == 0) ? testkit::random_density(n, rng) : werner_n_qubit(n, rng.uniform());
        const SigmaSet s = build_sigma_set(testkit::random_triads(n, rng));
        const PtSigmaSet ps = build_pt_sigma_set(s, 1);
        const MsigmaPair pair = msigma_pair(rho, s, ps);
        auto mu = msigma_pt_eigs(pair.m_pt);
        std::sort(mu.begin(), mu.end());
        const Spectrum numeric = hermitian_eigenvalues(pair.m_pt);
        for (int i = 0; i < 4; ++i)
            CHECK(mu[static_cast<std::size_t>(i)] ==
                  doctest::Approx(numeric.values[static_cast<std::size_t>(i)]).epsilon(1e-10));
    }
}

TEST_CASE("msigma eigenvalue formula special cases") {
    SUBCASE("all expectations zero") {
        ComplexMatrix m(4);
        m(0, 0) = 1.0;
        auto mu = msigma_pt_eigs(m);
        std::sort(mu.begin(), mu.end());
        CHECK(mu[0] == doctest::Approx(0.0));
        CHECK(mu[1] == doctest::Approx(0.0));
        CHECK(mu[2] == doctest::Approx(0.0));
        CHECK(mu[3] == doctest::Approx(1.0));
    }

    SUBCASE("GHZ violation: mu1- = -1") {
        const SigmaSet s = build_sigma_set(standard_triads(3));
        const PtSigmaSet ps = build_pt_sigma_set(s, 1);
        const MsigmaPair pair = msigma_pair(ghz_like(3, 0.5, 0.0), s, ps);
        const auto mu = msigma_pt_eigs(pair.m_pt);
        CHECK(mu[1] == doctest::Approx(-1.0).epsilon(1e-12));
    }

    SUBCASE("Werner threshold zero crossing") {
        for (int n : {3, 5}) {
            const double x_star = 1.0 / (std::pow(2.0, n - 1) + 1.0);
            const SigmaSet s = build_sigma_set(standard_triads(n));
            const PtSigmaSet ps = build_pt_sigma_set(s, 1);
            const MsigmaPair pair = msigma_pair(werner_n_qubit(n, x_star), s, ps);
            const auto mu = msigma_pt_eigs(pair.m_pt);
            CHECK(std::abs(mu[1]) < 1e-14);
        }
    }
}
