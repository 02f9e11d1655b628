// Semi-inner-products built from support-functional selectors, axiom
// verification, and constructive certification of norm / minimum-norm
// attainment through the two s.i.p. identities.

#pragma once

#include "bjgeo/attain.hpp"

#include <map>

namespace bjgeo {

/// A sparse choice of support functionals: a finite set of pinned unit
/// vectors with explicit functionals, extended homogeneously
/// (f_{t u} = sgn(t) f_u) and completed elsewhere by the canonical
/// midpoint of the support set. Conflicting pins are rejected.
class Selector {
public:
    explicit Selector(double match_tol = 1e-9) : match_tol_(match_tol) {}

    void pin(const NormSpace& s, const Vec& u, Vec f, double tol = kDefaultTol) {
        if (std::abs(norm_eval(s, u) - 1.0) > tol)
            throw InvalidInput("Selector::pin: key must be a unit vector");
        if (std::abs(f.dot(u) - 1.0) > tol ||
            std::abs(dual_norm_eval(s, f) - 1.0) > tol)
            throw InvalidInput("Selector::pin: functional does not support key");
        for (const auto& [k, g] : pins_) {
            const bool same = (k - u).norm() <= match_tol_;
            const bool anti = (k + u).norm() <= match_tol_;
            if ((same || anti) && (g - (same ? f : Vec(-f))).norm() > tol)
                throw InvalidInput("Selector::pin: conflicting pin at this point");
        }
        pins_.emplace_back(u, std::move(f));
    }

    /// Support functional at the unit vector u.
    Vec at(const NormSpace& s, const Vec& u, double tol = kDefaultTol) const {
        for (const auto& [k, f] : pins_) {
            if ((k - u).norm() <= match_tol_) return f;
            if ((k + u).norm() <= match_tol_) return -f;
        }
        return support_functionals(s, u, tol).canonical();
    }

private:
    double match_tol_;
    std::vector<std::pair<Vec, Vec>> pins_;
};

/// A semi-inner-product on a norm space: [y, x] = ||x|| f_{x/||x||}(y).
class SIP {
public:
    SIP(NormSpace space, Selector selector = Selector{})
        : space_(std::move(space)), selector_(std::move(selector)) {}

    const NormSpace& space() const { return space_; }

    /// [y, x]; [y, 0] = 0 by convention.
    double eval(const Vec& y, const Vec& x, double tol = kDefaultTol) const {
        check_dim(space_, y, "SIP::eval");
        const double nx = norm_eval(space_, x);
        if (nx < 1e-14) return 0.0;
        return nx * selector_.at(space_, x / nx, tol).dot(y);
    }

private:
    NormSpace space_;
    Selector selector_;
};

/// Worst observed violation per s.i.p. axiom over seeded random tuples.
struct SipAxiomReport {
    double additivity = 0;        // [x+y,z] - [x,z] - [y,z]
    double homogeneity_first = 0; // [tx,z] - t[x,z]
    double homogeneity_second = 0;// [y,tx] - t[y,x]  (real-scalar sign rule)
    double positivity = 0;        // | [x,x] - ||x||^2 |
    double cauchy_schwarz = 0;    // max(0, [x,y]^2 - [x,x][y,y])

    double max_violation() const {
        return std::max({additivity, homogeneity_first, homogeneity_second,
                         positivity, cauchy_schwarz});
    }
};

inline SipAxiomReport verify_sip_axioms(const SIP& sip, int trials,
                                        std::uint64_t seed) {
    if (trials < 1) throw InvalidInput("verify_sip_axioms: trials >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0, 1);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    const NormSpace& s = sip.space();
    auto rand_vec = [&] {
        Vec v(s.dim);
        for (int i = 0; i < s.dim; ++i) v[i] = gauss(rng);
        return v;
    };
    SipAxiomReport rep;
    for (int t = 0; t < trials; ++t) {
        const Vec x = rand_vec(), y = rand_vec(), z = rand_vec();
        const double a = uni(rng);
        rep.additivity = std::max(
            rep.additivity,
            std::abs(sip.eval(x + y, z) - sip.eval(x, z) - sip.eval(y, z)));
        rep.homogeneity_first = std::max(
            rep.homogeneity_first,
            std::abs(sip.eval(a * x, z) - a * sip.eval(x, z)));
        rep.homogeneity_second = std::max(
            rep.homogeneity_second,
            std::abs(sip.eval(y, a * x) - a * sip.eval(y, x)));
        const double nx = norm_eval(s, x);
        rep.positivity =
            std::max(rep.positivity, std::abs(sip.eval(x, x) - nx * nx));
        const double cs = sip.eval(x, y) * sip.eval(x, y) -
                          sip.eval(x, x) * sip.eval(y, y);
        rep.cauchy_schwarz = std::max(rep.cauchy_schwarz, std::max(0.0, cs));
    }
    return rep;
}

/// Result of the constructive s.i.p. attainment certificate.
struct SipCertificate {
    AttainMode mode;
    bool pass = false;
    bool degenerate = false;   // zero-image cases where the identity is vacuous
    double value = 0;          // ||T|| (max) or m(T) (min)
    double residual_max = 0;
    bool z_basis_checked = false;
    std::string message;
};

namespace detail {

/// Least-residual convex combination of the columns under the simplex
/// constraint: minimize ||A mu||, mu >= 0, sum mu = 1. Small instances
/// only; solved by enumerating faces of the simplex.
inline Vec simplex_least_squares(const Mat& A) {
    const Eigen::Index k = A.cols();
    Vec best = Vec::Zero(k);
    double best_r = std::numeric_limits<double>::infinity();
    const std::size_t K = static_cast<std::size_t>(k);
    if (K > 16) throw InvalidInput("simplex_least_squares: too many extremes");
    for (std::size_t mask = 1; mask < (std::size_t{1} << K); ++mask) {
        std::vector<Eigen::Index> idx;
        for (std::size_t j = 0; j < K; ++j)
            if ((mask >> j) & 1) idx.push_back(static_cast<Eigen::Index>(j));
        const Eigen::Index m = static_cast<Eigen::Index>(idx.size());
        // minimize ||B mu|| with sum mu = 1 via the augmented normal system
        Mat B(A.rows(), m);
        for (Eigen::Index j = 0; j < m; ++j) B.col(j) = A.col(idx[j]);
        Mat H = B.transpose() * B;
        Mat KKT(m + 1, m + 1);
        KKT.setZero();
        KKT.topLeftCorner(m, m) = H;
        KKT.topRightCorner(m, 1).setOnes();
        KKT.bottomLeftCorner(1, m).setOnes();
        Vec rhs = Vec::Zero(m + 1);
        rhs[m] = 1.0;
        Vec sol = KKT.fullPivLu().solve(rhs);
        Vec mu = sol.head(m);
        if (mu.minCoeff() < -1e-12) continue;
        mu = mu.cwiseMax(0.0);
        const double ssum = mu.sum();
        if (ssum <= 0) continue;
        mu /= ssum;
        const double r = (B * mu).norm();
        if (r < best_r) {
            best_r = r;
            best.setZero();
            for (Eigen::Index j = 0; j < m; ++j) best[idx[j]] = mu[j];
        }
    }
    return best;
}

}  // namespace detail

/// Rebuilds the constructive proof of the s.i.p. characterization of M_T
/// (mode max) or m_T (mode min): pick g supporting Tx/||Tx||, pin the two
/// selectors at x and Tx/||Tx||, and verify
///     [Tz, Tx]_Y = c^2 [z, x]_X,   c = ||T|| or m(T),
/// on the coordinate basis plus seeded random z. The z = x instance alone
/// already forces ||Tx|| = c, so non-members fail.
inline SipCertificate certify_attainment_via_sip(const Operator& T, const Vec& x,
                                                 AttainMode mode,
                                                 int samples = 200,
                                                 std::uint64_t seed = 42,
                                                 double tol = kDefaultTol) {
    check_dim(T.domain, x, "certify_attainment_via_sip");
    if (std::abs(norm_eval(T.domain, x) - 1.0) > tol)
        throw InvalidInput("certify_attainment_via_sip: x must be a unit vector");

    SipCertificate cert;
    cert.mode = mode;
    const AttainmentSet ref = attain(T, mode);
    const double c = ref.value;
    cert.value = c;

    const Vec w = T.matrix * x;
    const double nw = norm_eval(T.codomain, w);

    if (c < tol) {
        // degenerate: zero operator (max) or m(T)=0 (min); membership means Tx=0
        cert.degenerate = true;
        cert.pass = nw <= tol;
        cert.message = cert.pass ? "degenerate: Tx = 0 as required"
                                 : "claimed member has ||Tx|| > 0 while the "
                                   "attained value is 0";
        return cert;
    }
    if (nw <= tol) {
        cert.pass = false;
        cert.message = "Tx = 0 but the attained value is positive";
        return cert;
    }

    const Vec u = w / nw;
    const SupportSet gs = support_functionals(T.codomain, u, 1e-7);

    Vec g, psi;
    if (mode == AttainMode::Max) {
        // psi_x = (g o T)/||Tx|| must come out a support functional at x
        g = gs.canonical();
        psi = T.matrix.transpose() * g / nw;
        if (std::abs(psi.dot(x) - 1.0) > tol) {
            cert.pass = false;
            cert.message = "construction failed: (g o T)(x) != ||Tx||";
            return cert;
        }
        const double dn = dual_norm_eval(T.domain, psi);
        if (dn > 1.0 + 10 * tol) {
            cert.pass = false;
            cert.message = "constructed functional has dual norm " +
                           std::to_string(dn) + " > 1: x is not in M_T";
            return cert;
        }
    } else {
        // psi_x canonical at x; choose g in the support face at Tx/||Tx||
        // vanishing on T(ker psi_x), as the preservation corollary provides
        psi = support_functionals(T.domain, x, tol).canonical();
        const Hyperspace H = hyperspace_from_normal(psi);
        Mat A(static_cast<Eigen::Index>(H.basis.size()),
              static_cast<Eigen::Index>(gs.extremes.size()));
        for (std::size_t i = 0; i < H.basis.size(); ++i)
            for (std::size_t j = 0; j < gs.extremes.size(); ++j)
                A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    gs.extremes[j].dot(T.matrix * H.basis[i]);
        const Vec mu = detail::simplex_least_squares(A);
        g = Vec::Zero(T.codomain.dim);
        for (std::size_t j = 0; j < gs.extremes.size(); ++j)
            g += mu[static_cast<Eigen::Index>(j)] * gs.extremes[j];
        if ((A * mu).lpNorm<Eigen::Infinity>() > 1e-6) {
            cert.pass = false;
            cert.message =
                "no support functional at Tx annihilates T(H_x): x is not in m_T";
            return cert;
        }
    }

    Selector sel_x, sel_y;
    sel_x.pin(T.domain, x, psi, 10 * tol);
    sel_y.pin(T.codomain, u, g, 10 * tol);
    const SIP sip_x(T.domain, sel_x);
    const SIP sip_y(T.codomain, sel_y);

    auto residual = [&](const Vec& z) {
        return std::abs(sip_y.eval(T.matrix * z, w) - c * c * sip_x.eval(z, x));
    };
    double rmax = 0;
    for (int i = 0; i < T.domain.dim; ++i)
        rmax = std::max(rmax, residual(Vec::Unit(T.domain.dim, i)));
    cert.z_basis_checked = true;
    rmax = std::max(rmax, residual(x));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i)
        rmax = std::max(rmax, residual(random_unit_vector(T.domain, rng)));
    cert.residual_max = rmax;
    cert.pass = rmax <= 10 * tol * std::max(1.0, c * c);
    if (!cert.pass)
        cert.message = "identity residual " + std::to_string(rmax) +
                       " exceeds tolerance";
    return cert;
}

}  // namespace bjgeo
