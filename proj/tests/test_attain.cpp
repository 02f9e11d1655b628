#include "bjgeo/attain.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace bjgeo;

namespace {

Vec v2(double a, double b) {
    Vec v(2);
    v << a, b;
    return v;
}

Mat m22(double a, double b, double c, double d) {
    Mat m(2, 2);
    m << a, b, c, d;
    return m;
}

const double s3 = std::sqrt(3.0) / 2.0;

Operator hex_diag() {
    const NormSpace hex = NormSpace::regular_hexagon();
    return Operator(m22(1, 0, 0, 0), hex, hex);
}

Operator hex_rotation() {
    const NormSpace hex = NormSpace::regular_hexagon();
    const double r = std::sqrt(3.0) / 4.0;
    return Operator(m22(0.75, -r, r, 0.75), hex, hex);
}

bool points_match(const std::vector<Vec>& got, const std::vector<Vec>& want,
                  double tol = 1e-6) {
    if (got.size() != want.size()) return false;
    for (const auto& w : want) {
        const Vec cw = antipodal_canonical(w);
        bool found = false;
        for (const auto& g : got)
            if ((antipodal_canonical(g) - cw).norm() < tol) found = true;
        if (!found) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("hilbert attainment: diagonal operator") {
    const NormSpace e3 = NormSpace::euclidean(3);
    Mat d = Mat::Zero(3, 3);
    d.diagonal() << 3, 1, 1;
    const Operator T(d, e3, e3);
    const AttainmentSet mn = attain_hilbert(T, AttainMode::Min);
    CHECK(mn.value == Catch::Approx(1.0));
    REQUIRE(mn.form == SetForm::SubspaceSphere);
    CHECK(mn.basis.size() == 2);  // multiplicity of the least eigenvalue
    for (const auto& b : mn.basis) CHECK(std::abs(b[0]) < 1e-9);

    const AttainmentSet mx = attain_hilbert(T, AttainMode::Max);
    CHECK(mx.value == Catch::Approx(3.0));
    REQUIRE(mx.form == SetForm::SubspaceSphere);
    REQUIRE(mx.basis.size() == 1);
    CHECK(std::abs(std::abs(mx.basis[0][0]) - 1.0) < 1e-9);
}

TEST_CASE("hilbert attainment: scalar multiple of a rotation") {
    const NormSpace e2 = NormSpace::euclidean(2);
    const double th = 0.7;
    const Operator T(
        2.0 * m22(std::cos(th), -std::sin(th), std::sin(th), std::cos(th)), e2,
        e2);
    for (AttainMode mode : {AttainMode::Max, AttainMode::Min}) {
        const AttainmentSet a = attain_hilbert(T, mode);
        CHECK(a.value == Catch::Approx(2.0));
        CHECK(a.form == SetForm::WholeSphere);
    }
}

TEST_CASE("hilbert attainment: conjugated diagonal oracle") {
    // build Q' D Q from a known D and random rotations; the eigenstructure
    // is known in closed form
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> ang(0, 2 * M_PI);
    const NormSpace e2 = NormSpace::euclidean(2);
    for (int rep = 0; rep < 50; ++rep) {
        const double th = ang(rng);
        const Mat Q = m22(std::cos(th), -std::sin(th), std::sin(th), std::cos(th));
        const Operator T(Q.transpose() * m22(2, 0, 0, 1) * Q, e2, e2);
        const AttainmentSet a = attain_hilbert(T, AttainMode::Max);
        CHECK(a.value == Catch::Approx(2.0));
        REQUIRE(a.form == SetForm::SubspaceSphere);
        REQUIRE(a.basis.size() == 1);
        const Vec expected = Q.transpose() * v2(1, 0);
        CHECK((antipodal_canonical(a.basis[0]) - antipodal_canonical(expected))
                  .norm() < 1e-9);
    }
}

TEST_CASE("polygon attainment: hexagon Example A") {
    const Operator T = hex_diag();
    const AttainmentSet mx = attain_polygon(T, AttainMode::Max);
    CHECK(mx.value == Catch::Approx(1.0).margin(1e-9));
    REQUIRE(mx.form == SetForm::FinitePairs);
    CHECK(points_match(mx.points, {v2(1, 0)}));

    const AttainmentSet mn = attain_polygon(T, AttainMode::Min);
    CHECK(mn.value == Catch::Approx(0.0).margin(1e-9));
    REQUIRE(mn.form == SetForm::FinitePairs);
    CHECK(points_match(mn.points, {v2(0, s3)}));
}

TEST_CASE("polygon attainment: hexagon Example B") {
    const Operator T = hex_rotation();
    const AttainmentSet mx = attain_polygon(T, AttainMode::Max);
    CHECK(mx.value == Catch::Approx(1.0).margin(1e-9));
    REQUIRE(mx.form == SetForm::FinitePairs);
    CHECK(points_match(mx.points, {v2(1, 0), v2(0.5, s3), v2(-0.5, s3)}));

    const AttainmentSet mn = attain_polygon(T, AttainMode::Min);
    CHECK(mn.value == Catch::Approx(0.75).margin(1e-9));
    REQUIRE(mn.form == SetForm::FinitePairs);
    CHECK(points_match(
        mn.points,
        {v2(0.75, std::sqrt(3.0) / 4), v2(0, s3), v2(-0.75, std::sqrt(3.0) / 4)}));
}

TEST_CASE("polygon attainment: the linf remark operator") {
    const Operator T(m22(0.5, -0.5, 0.5, 0.5), NormSpace::linf_square(),
                     NormSpace::linf_square());
    const AttainmentSet mx = attain_polygon(T, AttainMode::Max);
    CHECK(mx.value == Catch::Approx(1.0));
    REQUIRE(mx.form == SetForm::FinitePairs);
    CHECK(points_match(mx.points, {v2(1, 1), v2(-1, 1)}));
}

TEST_CASE("polygon attainment: flat maximum becomes a segment") {
    // rank one with f the top-edge functional: the whole top edge attains
    const NormSpace hex = NormSpace::regular_hexagon();
    Vec f = v2(0, 2.0 / std::sqrt(3.0));
    const Operator T(Mat(v2(1, 0) * f.transpose()), hex, hex);
    const AttainmentSet mx = attain_polygon(T, AttainMode::Max);
    CHECK(mx.value == Catch::Approx(1.0));
    REQUIRE(mx.form == SetForm::Segments);
    REQUIRE(mx.segments.size() == 1);
    const auto& [a, b] = mx.segments[0];
    CHECK(std::abs(std::abs(a[0]) - 0.5) < 1e-9);
    CHECK(std::abs(std::abs(b[0]) - 0.5) < 1e-9);
    // attained value is constant along the segment (midpoint check)
    CHECK(T.image_norm((a + b) / 2) == Catch::Approx(1.0));

    const AttainmentSet mn = attain_polygon(T, AttainMode::Min);
    CHECK(mn.value == Catch::Approx(0.0).margin(1e-9));
    CHECK(points_match(mn.points, {v2(1, 0)}));
}

TEST_CASE("lp attainment") {
    const NormSpace l3 = NormSpace::lp(2, 3.0);
    SECTION("diag(2,1): unique maximizing pair, brute-force confirmed") {
        const Operator T(m22(2, 0, 0, 1), l3, l3);
        const AttainmentSet mx = attain_lp(T, AttainMode::Max, 24, 9);
        CHECK(mx.approximate);
        CHECK(mx.value == Catch::Approx(2.0).margin(1e-8));
        REQUIRE(mx.form == SetForm::FinitePairs);
        CHECK(points_match(mx.points, {v2(1, 0)}));
        double oracle = 0;
        for (const auto& e : oracle_profile(T, 100000))
            oracle = std::max(oracle, e.value);
        CHECK(std::abs(oracle - mx.value) < 1e-5);
    }
    SECTION("identity: whole sphere") {
        const Operator T(m22(1, 0, 0, 1), l3, l3);
        const AttainmentSet a = attain_lp(T, AttainMode::Max, 8, 9);
        CHECK(a.form == SetForm::WholeSphere);
        CHECK(a.value == Catch::Approx(1.0).margin(1e-9));
    }
    SECTION("shear on l4 matches the dense angular scan") {
        const NormSpace l4 = NormSpace::lp(2, 4.0);
        const Operator T(m22(1, 1, 0, 1), l4, l4);
        const AttainmentSet mx = attain_lp(T, AttainMode::Max, 32, 9);
        double oracle = 0;
        Vec arg;
        for (const auto& e : oracle_profile(T, 100000))
            if (e.value > oracle) oracle = e.value, arg = e.x;
        CHECK(std::abs(oracle - mx.value) < 1e-6);
        REQUIRE(mx.form == SetForm::FinitePairs);
        bool near = false;
        for (const auto& p : mx.points)
            if ((antipodal_canonical(p) - antipodal_canonical(arg)).norm() < 1e-3)
                near = true;
        CHECK(near);
    }
}

TEST_CASE("oracle profile basics") {
    const NormSpace e2 = NormSpace::euclidean(2);
    const Operator I(m22(1, 0, 0, 1), e2, e2);
    for (const auto& e : oracle_profile(I, 360))
        CHECK(e.value == Catch::Approx(1.0));
    const Operator T = hex_diag();
    double mx = 0, mn = 1e9;
    for (const auto& e : oracle_profile(T, 3600)) {
        mx = std::max(mx, e.value);
        mn = std::min(mn, e.value);
    }
    CHECK(std::abs(mx - 1.0) < 1e-3);
    CHECK(mn < 2e-3);
    CHECK_THROWS_AS(oracle_profile(I, 10), InvalidInput);
    const NormSpace e4 = NormSpace::euclidean(4);
    CHECK_THROWS_AS(
        oracle_profile(Operator(Mat::Identity(4, 4), e4, e4), 1000),
        InvalidInput);
}

TEST_CASE("scalar isometry multiple detection") {
    const NormSpace e2 = NormSpace::euclidean(2);
    const double c = std::cos(M_PI / 6), s = std::sin(M_PI / 6);
    CHECK(is_scalar_isometry_multiple(Operator(2 * m22(c, -s, s, c), e2, e2)));
    CHECK_FALSE(is_scalar_isometry_multiple(hex_diag()));
    CHECK_FALSE(is_scalar_isometry_multiple(hex_rotation()));
    // hexagonal rotation by 60 degrees is an isometry of the hexagon
    const double c6 = 0.5, s6 = s3;
    const NormSpace hex = NormSpace::regular_hexagon();
    CHECK(is_scalar_isometry_multiple(
        Operator(m22(c6, -s6, s6, c6), hex, hex)));
}

TEST_CASE("zero operator: whole sphere at value zero") {
    const NormSpace hex = NormSpace::regular_hexagon();
    const Operator Z(Mat::Zero(2, 2), hex, hex);
    for (AttainMode mode : {AttainMode::Max, AttainMode::Min}) {
        const AttainmentSet a = attain(Z, mode);
        CHECK(a.form == SetForm::WholeSphere);
        CHECK(a.value == 0.0);
    }
}

TEST_CASE("sandwich and membership invariants") {
    std::mt19937_64 rng(61);
    std::normal_distribution<double> gauss(0, 1);
    auto random_op = [&](const NormSpace& s) {
        Mat m(s.dim, s.dim);
        for (int i = 0; i < s.dim; ++i)
            for (int j = 0; j < s.dim; ++j) m(i, j) = gauss(rng);
        return Operator(m, s, s);
    };
    for (const NormSpace& s :
         {NormSpace::regular_hexagon(), NormSpace::euclidean(3),
          NormSpace::lp(2, 3.0)}) {
        for (int rep = 0; rep < 5; ++rep) {
            const Operator T = random_op(s);
            const AttainmentSet M = attain(T, AttainMode::Max, 24, 7);
            const AttainmentSet m = attain(T, AttainMode::Min, 24, 7);
            const double slack = s.is_lp() ? 1e-6 : 1e-9;
            for (int i = 0; i < 1000; ++i) {
                const double v = T.image_norm(random_unit_vector(s, rng));
                CHECK(v <= M.value + slack * std::max(1.0, M.value));
                CHECK(v >= m.value - slack * std::max(1.0, M.value));
            }
            for (const auto& x : M.representatives(s))
                CHECK(std::abs(T.image_norm(x) - M.value) <=
                      slack * std::max(1.0, M.value));
            for (const auto& x : m.representatives(s))
                CHECK(std::abs(T.image_norm(x) - m.value) <=
                      slack * std::max(1.0, M.value));
        }
    }
}

TEST_CASE("scaling equivariance") {
    const Operator T = hex_rotation();
    const Operator T3(3.0 * T.matrix, T.domain, T.codomain);
    for (AttainMode mode : {AttainMode::Max, AttainMode::Min}) {
        const AttainmentSet a = attain(T, mode);
        const AttainmentSet b = attain(T3, mode);
        CHECK(b.value == Catch::Approx(3.0 * a.value));
        CHECK(b.form == a.form);
        CHECK(points_match(b.points, a.points));
    }
}

TEST_CASE("hilbert min multiplicity over random clustered spectra") {
    std::mt19937_64 rng(71);
    std::normal_distribution<double> gauss(0, 1);
    std::uniform_int_distribution<int> multi(1, 3);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 4;
        // random orthogonal Q via QR
        Mat A(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A(i, j) = gauss(rng);
        const Mat Q = Eigen::HouseholderQR<Mat>(A).householderQ();
        const int k = multi(rng);  // multiplicity of the least singular value
        Vec d(n);
        for (int i = 0; i < n; ++i) d[i] = i < k ? 1.0 : 2.0 + i;
        const NormSpace en = NormSpace::euclidean(n);
        const Operator T(Mat(Q.transpose() * d.asDiagonal() * Q), en, en);
        const AttainmentSet m = attain_hilbert(T, AttainMode::Min);
        CHECK(m.value == Catch::Approx(1.0));
        REQUIRE(m.form == SetForm::SubspaceSphere);
        CHECK(static_cast<int>(m.basis.size()) == k);
    }
}

TEST_CASE("l1 and linf planar domains dispatch through the polygon solver") {
    const NormSpace linf = NormSpace::lp_inf(2);
    const Operator T(m22(0.5, -0.5, 0.5, 0.5), linf, linf);
    const AttainmentSet mx = attain(T, AttainMode::Max);
    CHECK(mx.value == Catch::Approx(1.0));
    CHECK(points_match(mx.points, {v2(1, 1), v2(-1, 1)}));

    const NormSpace l1 = NormSpace::lp(2, 1.0);
    const Operator D(m22(2, 0, 0, 1), l1, l1);
    const AttainmentSet a = attain(D, AttainMode::Max);
    CHECK(a.value == Catch::Approx(2.0));
    CHECK(points_match(a.points, {v2(1, 0)}));
}
