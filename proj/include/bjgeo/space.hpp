// bjgeo: geometry of norm attainment for linear operators between
// finite-dimensional real normed spaces.
//
// This header defines the norm-space model (lp, planar polygonal, inner
// product) together with norm / dual norm evaluation, support functional
// enumeration and unit-sphere sampling.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace bjgeo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Vec2 = Eigen::Vector2d;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kInfP = std::numeric_limits<double>::infinity();

/// Thrown when inputs violate a precondition (dimension mismatch,
/// non-unit vector, malformed space data).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when two internal computation routes disagree beyond tolerance.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

enum class SpaceKind { Lp, Polygon, InnerProduct };

namespace detail {

inline double sgn(double t) { return t > 0 ? 1.0 : (t < 0 ? -1.0 : 0.0); }

inline double cross2(const Vec2& a, const Vec2& b) {
    return a.x() * b.y() - a.y() * b.x();
}

}  // namespace detail

/// A finite-dimensional real normed space. Immutable after construction;
/// all cached data (edge functionals, Cholesky factors) is built up front,
/// so values are safe to share across threads.
class NormSpace {
public:
    SpaceKind kind;
    int dim;

    // Lp
    double p = 2.0;  // kInfP encodes the sup norm

    // Polygon (dim == 2): canonical CCW vertex loop and, per edge i
    // (vertices[i] -> vertices[i+1]), the functional with f.v = 1 on the edge.
    std::vector<Vec2> vertices;
    std::vector<Vec2> edge_functionals;

    // InnerProduct
    Mat gram;
    Mat gram_inv;

    static NormSpace lp(int dim, double p) {
        if (dim < 1) throw InvalidInput("lp: dim must be positive");
        if (!(p >= 1.0)) throw InvalidInput("lp: p must satisfy p >= 1");
        NormSpace s;
        s.kind = SpaceKind::Lp;
        s.dim = dim;
        s.p = p;
        return s;
    }

    static NormSpace lp_inf(int dim) { return lp(dim, kInfP); }

    static NormSpace inner_product(Mat g) {
        if (g.rows() != g.cols() || g.rows() < 1)
            throw InvalidInput("inner_product: gram must be square");
        if (!g.isApprox(g.transpose(), 1e-12))
            throw InvalidInput("inner_product: gram must be symmetric");
        Eigen::SelfAdjointEigenSolver<Mat> es(g);
        if (es.eigenvalues().minCoeff() <= 0)
            throw InvalidInput("inner_product: gram must be positive definite");
        NormSpace s;
        s.kind = SpaceKind::InnerProduct;
        s.dim = static_cast<int>(g.rows());
        s.gram = std::move(g);
        s.gram_inv = s.gram.inverse();
        return s;
    }

    static NormSpace euclidean(int dim) {
        return inner_product(Mat::Identity(dim, dim));
    }

    /// Builds a planar polygonal norm from its unit-ball vertices.
    /// The list is canonicalized: deduplicated, completed to central
    /// symmetry, sorted CCW by angle. Non-convex or degenerate input
    /// (three consecutive collinear vertices, origin not interior) is
    /// rejected.
    static NormSpace polygon(std::vector<Vec2> verts) {
        const double vt = 1e-9;
        std::vector<Vec2> vs;
        auto push_unique = [&](const Vec2& v) {
            if (v.norm() < vt)
                throw InvalidInput("polygon: vertex at the origin");
            for (const auto& w : vs)
                if ((w - v).norm() < vt) return;
            vs.push_back(v);
        };
        for (const auto& v : verts) push_unique(v);
        // symmetry completion
        const std::size_t n0 = vs.size();
        for (std::size_t i = 0; i < n0; ++i) push_unique(-vs[i]);
        std::sort(vs.begin(), vs.end(), [](const Vec2& a, const Vec2& b) {
            return std::atan2(a.y(), a.x()) < std::atan2(b.y(), b.x());
        });
        const std::size_t n = vs.size();
        if (n < 4) throw InvalidInput("polygon: need at least 4 vertices");
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& a = vs[i];
            const Vec2& b = vs[(i + 1) % n];
            const Vec2& c = vs[(i + 2) % n];
            if (detail::cross2(b - a, c - b) <= vt)
                throw InvalidInput(
                    "polygon: vertices must be strictly convex in CCW order "
                    "(collinear or reflex sequence found)");
        }
        NormSpace s;
        s.kind = SpaceKind::Polygon;
        s.dim = 2;
        s.vertices = std::move(vs);
        s.edge_functionals.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2& a = s.vertices[i];
            const Vec2& b = s.vertices[(i + 1) % n];
            Eigen::Matrix2d M;
            M << a.x(), a.y(), b.x(), b.y();
            Eigen::Vector2d rhs(1.0, 1.0);
            Eigen::Vector2d f = M.fullPivLu().solve(rhs);
            if ((M * f - rhs).norm() > 1e-9)
                throw InvalidInput("polygon: origin not strictly inside");
            s.edge_functionals[i] = f;
        }
        return s;
    }

    /// The regular hexagon with vertices +-(1,0), +-(1/2,s3/2), +-(-1/2,s3/2).
    static NormSpace regular_hexagon() {
        const double s3 = std::sqrt(3.0) / 2.0;
        return polygon({Vec2(1, 0), Vec2(0.5, s3), Vec2(-0.5, s3)});
    }

    /// The sup-norm square (+-1,+-1) as an explicit polygon.
    static NormSpace linf_square() {
        return polygon({Vec2(1, 1), Vec2(-1, 1)});
    }

    bool is_lp() const { return kind == SpaceKind::Lp; }
    bool is_polygon() const { return kind == SpaceKind::Polygon; }
    bool is_inner_product() const { return kind == SpaceKind::InnerProduct; }
    bool lp_is_inf() const { return is_lp() && std::isinf(p); }

private:
    NormSpace() : kind(SpaceKind::Lp), dim(0) {}
};

inline void check_dim(const NormSpace& s, const Vec& x, const char* who) {
    if (x.size() != s.dim)
        throw InvalidInput(std::string(who) + ": dimension mismatch");
}

/// Norm of x in the given space. For polygons this is the Minkowski gauge
/// of the vertex hull, evaluated as the max of the edge functionals.
inline double norm_eval(const NormSpace& s, const Vec& x) {
    check_dim(s, x, "norm_eval");
    switch (s.kind) {
        case SpaceKind::Lp: {
            if (s.lp_is_inf()) return x.lpNorm<Eigen::Infinity>();
            if (s.p == 1.0) return x.lpNorm<1>();
            if (s.p == 2.0) return x.norm();
            double acc = 0;
            for (int i = 0; i < s.dim; ++i)
                acc += std::pow(std::abs(x[i]), s.p);
            return std::pow(acc, 1.0 / s.p);
        }
        case SpaceKind::InnerProduct:
            return std::sqrt(std::max(0.0, x.dot(s.gram * x)));
        case SpaceKind::Polygon: {
            double g = 0;
            for (const auto& f : s.edge_functionals)
                g = std::max(g, f.dot(Vec2(x[0], x[1])));
            return g;
        }
    }
    throw InternalInconsistency("norm_eval: unreachable");
}

/// Dual norm of the covector f.
inline double dual_norm_eval(const NormSpace& s, const Vec& f) {
    check_dim(s, f, "dual_norm_eval");
    switch (s.kind) {
        case SpaceKind::Lp: {
            if (s.lp_is_inf()) return f.lpNorm<1>();
            if (s.p == 1.0) return f.lpNorm<Eigen::Infinity>();
            const double q = s.p / (s.p - 1.0);
            double acc = 0;
            for (int i = 0; i < s.dim; ++i)
                acc += std::pow(std::abs(f[i]), q);
            return std::pow(acc, 1.0 / q);
        }
        case SpaceKind::InnerProduct:
            return std::sqrt(std::max(0.0, f.dot(s.gram_inv * f)));
        case SpaceKind::Polygon: {
            double m = 0;
            for (const auto& v : s.vertices)
                m = std::max(m, f.dot(Vec(v)));
            return m;
        }
    }
    throw InternalInconsistency("dual_norm_eval: unreachable");
}

/// The set of support functionals at a unit vector, described by its
/// extreme points: one covector at smooth points, two (a segment) at a
/// polygon vertex, up to 2^k for faces of l1/linf balls. Every extreme f
/// satisfies dual_norm_eval(f) = 1 and f(x) = 1 within tolerance.
struct SupportSet {
    std::vector<Vec> extremes;

    bool smooth() const { return extremes.size() == 1; }

    /// Midpoint of the extreme points; the canonical selector choice.
    Vec canonical() const {
        Vec c = Vec::Zero(extremes.front().size());
        for (const auto& f : extremes) c += f;
        return c / static_cast<double>(extremes.size());
    }

    /// Range of f(y) over the set (attained at extreme points).
    std::pair<double, double> range(const Vec& y) const {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (const auto& f : extremes) {
            const double v = f.dot(y);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return {lo, hi};
    }
};

inline SupportSet support_functionals(const NormSpace& s, const Vec& x,
                                      double tol = kDefaultTol) {
    check_dim(s, x, "support_functionals");
    const double nx = norm_eval(s, x);
    if (nx < tol) throw InvalidInput("support_functionals: x = 0");
    if (std::abs(nx - 1.0) > tol)
        throw InvalidInput("support_functionals: x must be a unit vector");

    SupportSet out;
    switch (s.kind) {
        case SpaceKind::InnerProduct: {
            out.extremes.push_back(s.gram * x / nx);
            return out;
        }
        case SpaceKind::Lp: {
            if (!s.lp_is_inf() && s.p > 1.0) {
                Vec f(s.dim);
                for (int i = 0; i < s.dim; ++i)
                    f[i] = detail::sgn(x[i]) * std::pow(std::abs(x[i]), s.p - 1.0);
                out.extremes.push_back(f / dual_norm_eval(s, f));
                return out;
            }
            if (s.p == 1.0) {
                // f_i = sgn(x_i) where x_i != 0, f_i in [-1,1] free elsewhere.
                std::vector<int> free_idx;
                Vec base = Vec::Zero(s.dim);
                for (int i = 0; i < s.dim; ++i) {
                    if (std::abs(x[i]) > tol)
                        base[i] = detail::sgn(x[i]);
                    else
                        free_idx.push_back(i);
                }
                const std::size_t k = free_idx.size();
                if (k > 16)
                    throw InvalidInput("support_functionals: l1 face too large");
                for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
                    Vec f = base;
                    for (std::size_t j = 0; j < k; ++j)
                        f[free_idx[j]] = (mask >> j) & 1 ? 1.0 : -1.0;
                    out.extremes.push_back(f);
                }
                return out;
            }
            // sup norm: conv{ sgn(x_i) e_i : |x_i| = 1 }
            for (int i = 0; i < s.dim; ++i) {
                if (std::abs(std::abs(x[i]) - 1.0) <= tol) {
                    Vec f = Vec::Zero(s.dim);
                    f[i] = detail::sgn(x[i]);
                    out.extremes.push_back(f);
                }
            }
            return out;
        }
        case SpaceKind::Polygon: {
            const Vec2 xx(x[0], x[1]);
            const std::size_t n = s.vertices.size();
            std::vector<std::size_t> active;
            for (std::size_t i = 0; i < n; ++i)
                if (std::abs(s.edge_functionals[i].dot(xx) - 1.0) <= tol)
                    active.push_back(i);
            if (active.empty())
                throw InternalInconsistency(
                    "support_functionals: no active polygon edge at a unit vector");
            // A unit vector lies on one edge or on two adjacent ones (a vertex).
            for (std::size_t i : active)
                out.extremes.push_back(Vec(s.edge_functionals[i]));
            return out;
        }
    }
    throw InternalInconsistency("support_functionals: unreachable");
}

struct SpaceProperties {
    bool strictly_convex;
    bool smooth;
};

inline SpaceProperties space_properties(const NormSpace& s) {
    switch (s.kind) {
        case SpaceKind::InnerProduct:
            return {true, true};
        case SpaceKind::Polygon:
            return {false, false};
        case SpaceKind::Lp:
            if (s.dim == 1) return {true, true};
            if (s.lp_is_inf() || s.p == 1.0) return {false, false};
            return {true, true};
    }
    throw InternalInconsistency("space_properties: unreachable");
}

/// Gaussian direction, gauge-normalized. Deterministic per rng state.
inline Vec random_unit_vector(const NormSpace& s, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec x(s.dim);
    double n;
    do {
        for (int i = 0; i < s.dim; ++i) x[i] = gauss(rng);
        n = norm_eval(s, x);
    } while (n < 1e-12);
    return x / n;
}

inline Vec random_unit_vector(const NormSpace& s, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_unit_vector(s, rng);
}

/// Pairing f(x); the <= dual_norm * norm bound is exercised in tests.
inline double pairing(const Vec& f, const Vec& x) { return f.dot(x); }

}  // namespace bjgeo
