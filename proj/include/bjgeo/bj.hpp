// Birkhoff-James orthogonality and cone membership via one-sided norm
// derivatives, with a convex line-search cross-check, plus orthogonal
// hyperspaces and norming points.

#pragma once

#include "bjgeo/space.hpp"

namespace bjgeo {

/// One-sided derivatives of t -> ||x + t y|| at t = 0: rho_minus <= rho_plus,
/// equal exactly at smooth points.
struct DerivativePair {
    double rho_minus;
    double rho_plus;
};

inline DerivativePair directional_derivatives(const NormSpace& s, const Vec& x,
                                              const Vec& y,
                                              double tol = kDefaultTol) {
    check_dim(s, y, "directional_derivatives");
    const auto [lo, hi] = support_functionals(s, x, tol).range(y);
    return {lo, hi};
}

/// Minimizes a convex scalar function on [a, b] by golden-section search.
template <class F>
inline std::pair<double, double> golden_section_min(F&& f, double a, double b,
                                                    int iters = 200) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters && (b - a) > 1e-15; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double t = (a + b) / 2;
    return {t, f(t)};
}

/// Evidence attached to an orthogonality verdict: the support-functional
/// interval and the minimizer of lambda -> ||x + lambda y||.
struct OrthoCertificate {
    bool orthogonal;
    double rho_minus;
    double rho_plus;
    double lambda_star;
    double min_value;
};

/// x perp_B y  iff  0 lies in [rho_minus, rho_plus]. The certificate also
/// minimizes ||x + lambda y|| by golden section; the two routes must agree
/// or an InternalInconsistency is thrown.
inline OrthoCertificate is_bj_orthogonal(const NormSpace& s, const Vec& x,
                                         const Vec& y,
                                         double tol = kDefaultTol) {
    check_dim(s, y, "is_bj_orthogonal");
    const double ny = norm_eval(s, y);
    if (ny < tol) {
        // ||x + lambda*0|| = ||x||: the zero direction is orthogonal to all x.
        support_functionals(s, x, tol);  // still validates x
        return {true, 0.0, 0.0, 0.0, 1.0};
    }
    const DerivativePair d = directional_derivatives(s, x, y, tol);
    const bool ortho = d.rho_minus <= tol && d.rho_plus >= -tol;

    const double R = 2.0 / ny + 1.0;
    auto g = [&](double t) { return norm_eval(s, x + t * y); };
    const auto [lstar, gmin] = golden_section_min(g, -R, R);
    const double gap = norm_eval(s, x) - gmin;  // >= 0 up to roundoff

    const double agree_tol = 1e-7;
    if (ortho && gap > agree_tol)
        throw InternalInconsistency(
            "is_bj_orthogonal: interval test accepts but the norm decreases "
            "along y (gap " + std::to_string(gap) + ")");
    if (!ortho && std::min(std::abs(d.rho_minus), std::abs(d.rho_plus)) > 1e-6 &&
        gap < 1e-12)
        throw InternalInconsistency(
            "is_bj_orthogonal: interval test rejects decisively but "
            "minimization found no decrease");
    return {ortho, d.rho_minus, d.rho_plus, ortho ? 0.0 : lstar, gmin};
}

enum class ConeSign { Plus, Minus };

/// y in x^+  iff  rho_plus >= 0;  y in x^-  iff  rho_minus <= 0.
inline bool cone_membership(const NormSpace& s, const Vec& x, const Vec& y,
                            ConeSign sign, double tol = kDefaultTol) {
    check_dim(s, y, "cone_membership");
    if (norm_eval(s, y) < tol) {
        support_functionals(s, x, tol);
        return true;
    }
    const DerivativePair d = directional_derivatives(s, x, y, tol);
    return sign == ConeSign::Plus ? d.rho_plus >= -tol : d.rho_minus <= tol;
}

/// A codimension-one subspace, stored as the kernel of `normal` together
/// with an explicit basis.
struct Hyperspace {
    Vec normal;
    std::vector<Vec> basis;
};

inline Hyperspace hyperspace_from_normal(const Vec& f) {
    if (f.norm() < 1e-14)
        throw InvalidInput("hyperspace_from_normal: zero functional");
    const auto n = f.size();
    Eigen::FullPivLU<Mat> lu(f.transpose());
    Mat K = lu.kernel();  // n x (n-1)
    Hyperspace h;
    h.normal = f;
    for (Eigen::Index j = 0; j < K.cols(); ++j)
        h.basis.push_back(K.col(j).normalized());
    if (static_cast<Eigen::Index>(h.basis.size()) != n - 1)
        throw InternalInconsistency("hyperspace_from_normal: kernel rank");
    return h;
}

/// ker f for a support functional f at x; x perp_B h for every h in the
/// kernel. When no selector is given, the canonical midpoint functional
/// of the support set is used.
inline Hyperspace orthogonal_hyperspace(const NormSpace& s, const Vec& x,
                                        const Vec* selector = nullptr,
                                        double tol = kDefaultTol) {
    const SupportSet ss = support_functionals(s, x, tol);
    Vec f;
    if (selector) {
        check_dim(s, *selector, "orthogonal_hyperspace");
        if (std::abs(selector->dot(x) - 1.0) > tol ||
            std::abs(dual_norm_eval(s, *selector) - 1.0) > tol)
            throw InvalidInput(
                "orthogonal_hyperspace: selector is not a support functional at x");
        f = *selector;
    } else {
        f = ss.canonical();
    }
    return hyperspace_from_normal(f);
}

/// A unit vector x with f(x) = ||f||_* : the point where f attains its
/// dual norm on the sphere.
inline Vec norming_point(const NormSpace& s, const Vec& f,
                         double tol = kDefaultTol) {
    check_dim(s, f, "norming_point");
    if (f.lpNorm<Eigen::Infinity>() < 1e-14)
        throw InvalidInput("norming_point: f = 0");
    switch (s.kind) {
        case SpaceKind::InnerProduct: {
            Vec z = s.gram_inv * f;
            return z / norm_eval(s, z);
        }
        case SpaceKind::Lp: {
            if (s.p == 1.0) {
                // first coordinate of maximal |f_i| (canonical tie-break)
                int best = 0;
                for (int i = 1; i < s.dim; ++i)
                    if (std::abs(f[i]) > std::abs(f[best]) + tol) best = i;
                Vec x = Vec::Zero(s.dim);
                x[best] = detail::sgn(f[best]);
                return x;
            }
            if (s.lp_is_inf()) {
                Vec x(s.dim);
                for (int i = 0; i < s.dim; ++i) x[i] = f[i] >= 0 ? 1.0 : -1.0;
                return x;
            }
            const double q = s.p / (s.p - 1.0);
            Vec z(s.dim);
            for (int i = 0; i < s.dim; ++i)
                z[i] = detail::sgn(f[i]) * std::pow(std::abs(f[i]), q - 1.0);
            return z / norm_eval(s, z);
        }
        case SpaceKind::Polygon: {
            // vertex scan; ties broken toward the lexicographically larger vertex
            const Vec2 ff(f[0], f[1]);
            double bv = -std::numeric_limits<double>::infinity();
            for (const auto& v : s.vertices) bv = std::max(bv, ff.dot(v));
            const Vec2* best = nullptr;
            for (const auto& v : s.vertices) {
                if (ff.dot(v) < bv - tol) continue;
                if (!best || v.x() > best->x() + 1e-12 ||
                    (std::abs(v.x() - best->x()) <= 1e-12 && v.y() > best->y()))
                    best = &v;
            }
            return Vec(*best);
        }
    }
    throw InternalInconsistency("norming_point: unreachable");
}

}  // namespace bjgeo
