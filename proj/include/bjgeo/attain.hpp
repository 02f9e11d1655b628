// Norm and minimum-norm attainment: ||T||, m(T) and the symbolic sets
// M_T, m_T per space kind, plus a brute-force angular oracle.

#pragma once

#include "bjgeo/bj.hpp"

#include <optional>

namespace bjgeo {

/// A real matrix together with its domain and codomain norm spaces.
struct Operator {
    Mat matrix;
    NormSpace domain;
    NormSpace codomain;

    Operator(Mat m, NormSpace dom, NormSpace cod)
        : matrix(std::move(m)), domain(std::move(dom)), codomain(std::move(cod)) {
        if (matrix.cols() != domain.dim || matrix.rows() != codomain.dim)
            throw InvalidInput("Operator: matrix shape inconsistent with spaces");
    }

    Vec apply(const Vec& x) const { return matrix * x; }

    double image_norm(const Vec& x) const {
        return norm_eval(codomain, matrix * x);
    }

    bool is_zero() const {
        return matrix.lpNorm<Eigen::Infinity>() == 0.0;
    }
};

enum class AttainMode { Max, Min };

enum class SetForm { WholeSphere, SubspaceSphere, FinitePairs, Segments };

/// Canonical antipodal representative: the lexicographically larger of
/// {x, -x}.
inline Vec antipodal_canonical(const Vec& x, double tol = 1e-9) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (std::abs(x[i]) > tol) return x[i] > 0 ? x : Vec(-x);
    }
    return x;
}

/// Symbolic description of M_T or m_T together with the attained value.
struct AttainmentSet {
    SetForm form;
    double value = 0.0;
    std::vector<Vec> points;                      // FinitePairs representatives
    std::vector<Vec> basis;                       // SubspaceSphere
    std::vector<std::pair<Vec, Vec>> segments;    // unit-sphere arcs
    bool approximate = false;

    /// Finite list of unit vectors standing in for the whole set in
    /// set-level tests: pair representatives, segment endpoints and
    /// midpoints, subspace basis directions. Empty for WholeSphere.
    std::vector<Vec> representatives(const NormSpace& space) const {
        std::vector<Vec> out;
        if (form == SetForm::FinitePairs) {
            out = points;
        } else if (form == SetForm::SubspaceSphere) {
            for (const auto& b : basis) out.push_back(b / norm_eval(space, b));
        } else if (form == SetForm::Segments) {
            for (const auto& [a, b] : segments) {
                out.push_back(a);
                out.push_back(b);
                Vec m = (a + b) / 2;
                out.push_back(m / norm_eval(space, m));
            }
        }
        return out;
    }

    /// True when x (unit) matches a described member within tol. WholeSphere
    /// matches everything; SubspaceSphere by projection residual; segments by
    /// arc containment of +-x.
    bool contains(const NormSpace& space, const Vec& x, double tol = 1e-6) const {
        switch (form) {
            case SetForm::WholeSphere:
                return true;
            case SetForm::SubspaceSphere: {
                Mat B(x.size(), static_cast<Eigen::Index>(basis.size()));
                for (std::size_t j = 0; j < basis.size(); ++j)
                    B.col(static_cast<Eigen::Index>(j)) = basis[j];
                Vec r = x - B * (B.colPivHouseholderQr().solve(x));
                return r.norm() <= tol;
            }
            case SetForm::FinitePairs: {
                const Vec cx = antipodal_canonical(x);
                for (const auto& p : points)
                    if ((antipodal_canonical(p) - cx).norm() <= tol) return true;
                return false;
            }
            case SetForm::Segments: {
                for (const auto& [a, b] : segments) {
                    for (double sgn : {1.0, -1.0}) {
                        const Vec y = sgn * x;
                        // y on the chord [a,b]: y = a + t(b-a), t in [0,1]
                        Vec d = b - a;
                        const double dn2 = d.squaredNorm();
                        if (dn2 < 1e-18) continue;
                        const double t = d.dot(y - a) / dn2;
                        if (t < -tol || t > 1 + tol) continue;
                        if ((a + t * d - y).norm() <= tol) return true;
                    }
                }
                return false;
            }
        }
        return false;
    }
};

namespace detail {

inline std::vector<Vec> cluster_points(std::vector<std::pair<Vec, double>> pts,
                                       bool maximize, double radius,
                                       double value_tol) {
    // antipodal-canonicalize, keep the best-value representative per cluster,
    // then keep clusters whose value ties the global best
    std::vector<std::pair<Vec, double>> reps;
    for (auto& [x, v] : pts) {
        Vec cx = antipodal_canonical(x);
        bool merged = false;
        for (auto& [rx, rv] : reps) {
            if ((rx - cx).norm() <= radius) {
                if (maximize ? v > rv : v < rv) {
                    rx = cx;
                    rv = v;
                }
                merged = true;
                break;
            }
        }
        if (!merged) reps.emplace_back(std::move(cx), v);
    }
    double best = maximize ? -std::numeric_limits<double>::infinity()
                           : std::numeric_limits<double>::infinity();
    for (const auto& [x, v] : reps) best = maximize ? std::max(best, v) : std::min(best, v);
    std::vector<Vec> out;
    for (const auto& [x, v] : reps)
        if (std::abs(v - best) <= value_tol * std::max(1.0, std::abs(best)))
            out.push_back(x);
    std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) {
        return std::lexicographical_compare(b.data(), b.data() + b.size(),
                                            a.data(), a.data() + a.size());
    });
    return out;
}

}  // namespace detail

/// Hilbert-space attainment by generalized symmetric eigendecomposition of
/// T*T: the attained value is the square root of the extreme eigenvalue and
/// the set is the unit sphere of the matching eigenspace (whole sphere when
/// the spectrum is a single cluster).
inline AttainmentSet attain_hilbert(const Operator& T, AttainMode mode,
                                    double cluster_reltol = 1e-8) {
    if (!T.domain.is_inner_product() || !T.codomain.is_inner_product())
        throw InvalidInput("attain_hilbert: both spaces must be InnerProduct");
    const Mat M = T.matrix.transpose() * T.codomain.gram * T.matrix;
    Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(M, T.domain.gram);
    const Vec ev = es.eigenvalues().cwiseMax(0.0);  // ascending
    const int n = T.domain.dim;
    const double lam = mode == AttainMode::Max ? ev[n - 1] : ev[0];
    const double scale = std::max(1.0, ev[n - 1]);

    AttainmentSet out;
    out.value = std::sqrt(lam);
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
        if (std::abs(ev[i] - lam) <= cluster_reltol * scale) idx.push_back(i);
    if (static_cast<int>(idx.size()) == n) {
        out.form = SetForm::WholeSphere;
        return out;
    }
    out.form = SetForm::SubspaceSphere;
    for (int i : idx) {
        Vec v = es.eigenvectors().col(i);  // gram-orthonormal
        out.basis.push_back(v / norm_eval(T.domain, v));
    }
    return out;
}

/// Attainment over a polygonal domain. Max: vertex scan of the convex map
/// x -> ||Tx||, with edges promoted to segments when flat. Min: convex 1-D
/// minimization along every edge, with flat stretches reported as segments.
inline AttainmentSet attain_polygon(const Operator& T, AttainMode mode,
                                    double tol = kDefaultTol) {
    if (!T.domain.is_polygon())
        throw InvalidInput("attain_polygon: domain must be Polygon");
    const auto& vs = T.domain.vertices;
    const std::size_t n = vs.size();
    AttainmentSet out;

    if (mode == AttainMode::Max) {
        double best = 0;
        for (const auto& v : vs) best = std::max(best, T.image_norm(Vec(v)));
        out.value = best;
        const double vtol = tol * std::max(1.0, best);
        std::vector<bool> on(n);
        for (std::size_t i = 0; i < n; ++i)
            on[i] = std::abs(T.image_norm(Vec(vs[i])) - best) <= vtol;
        std::vector<bool> edge_flat(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = (i + 1) % n;
            if (!on[i] || !on[j]) continue;
            const Vec2 mid = (vs[i] + vs[j]) / 2;
            if (std::abs(T.image_norm(Vec(mid)) - best) <= vtol)
                edge_flat[i] = true;
        }
        std::vector<std::pair<Vec, double>> pts;
        std::vector<std::pair<Vec, Vec>> segs;
        for (std::size_t i = 0; i < n; ++i)
            if (edge_flat[i])
                segs.emplace_back(Vec(vs[i]), Vec(vs[(i + 1) % n]));
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t prev = (i + n - 1) % n;
            if (on[i] && !edge_flat[i] && !edge_flat[prev])
                pts.emplace_back(Vec(vs[i]), best);
        }
        if (!segs.empty()) {
            // keep one arc per antipodal class
            std::vector<std::pair<Vec, Vec>> keep;
            for (const auto& [a, b] : segs) {
                bool dup = false;
                for (const auto& [c, d] : keep)
                    if (((a + d).norm() < 1e-9 && (b + c).norm() < 1e-9) ||
                        ((a + c).norm() < 1e-9 && (b + d).norm() < 1e-9))
                        dup = true;
                if (!dup) keep.emplace_back(a, b);
            }
            out.form = SetForm::Segments;
            out.segments = std::move(keep);
            for (const auto& p : detail::cluster_points(pts, true, 1e-7, tol))
                out.points.push_back(p);  // isolated vertices alongside arcs
            if (out.segments.size() * 2 >= n && out.points.empty()) {
                // every edge flat: the whole sphere attains
                bool all = true;
                for (std::size_t i = 0; i < n; ++i) all = all && edge_flat[i];
                if (all) out.form = SetForm::WholeSphere, out.segments.clear();
            }
        } else {
            out.form = SetForm::FinitePairs;
            out.points = detail::cluster_points(pts, true, 1e-7, tol);
        }
        return out;
    }

    // Min mode: golden-section along each closed edge.
    struct EdgeMin {
        std::size_t edge;
        double t;
        double value;
    };
    std::vector<EdgeMin> mins;
    double best = std::numeric_limits<double>::infinity();
    auto edge_val = [&](std::size_t i, double t) {
        const Vec2 x = (1 - t) * vs[i] + t * vs[(i + 1) % n];
        return T.image_norm(Vec(x));
    };
    for (std::size_t i = 0; i < n; ++i) {
        auto f = [&](double t) { return edge_val(i, t); };
        auto [t, v] = golden_section_min(f, 0.0, 1.0);
        for (double te : {0.0, 1.0})
            if (f(te) < v) t = te, v = f(te);
        mins.push_back({i, t, v});
        best = std::min(best, v);
    }
    out.value = best;
    const double vtol = tol * std::max(1.0, best);
    std::vector<std::pair<Vec, double>> pts;
    std::vector<std::pair<Vec, Vec>> segs;
    for (const auto& em : mins) {
        if (em.value > best + vtol) continue;
        auto f = [&](double t) { return edge_val(em.edge, t); };
        // flat stretch [tl, tr] around the minimizer (convexity along the edge)
        auto frontier = [&](double inside, double outside) {
            for (int it = 0; it < 80; ++it) {
                const double m = (inside + outside) / 2;
                (f(m) <= best + vtol ? inside : outside) = m;
            }
            return inside;
        };
        const double tl = f(0.0) <= best + vtol ? 0.0 : frontier(em.t, 0.0);
        const double tr = f(1.0) <= best + vtol ? 1.0 : frontier(em.t, 1.0);
        const Vec2 a = (1 - tl) * vs[em.edge] + tl * vs[(em.edge + 1) % n];
        const Vec2 b = (1 - tr) * vs[em.edge] + tr * vs[(em.edge + 1) % n];
        if ((a - b).norm() < 1e-7)
            pts.emplace_back(Vec((a + b) / 2), em.value);
        else
            segs.emplace_back(Vec(a), Vec(b));
    }
    if (!segs.empty()) {
        std::vector<std::pair<Vec, Vec>> keep;
        for (const auto& [a, b] : segs) {
            bool dup = false;
            for (const auto& [c, d] : keep)
                if (((a + d).norm() < 1e-7 && (b + c).norm() < 1e-7) ||
                    ((a + c).norm() < 1e-7 && (b + d).norm() < 1e-7))
                    dup = true;
            if (!dup) keep.emplace_back(a, b);
        }
        bool whole = keep.size() * 2 >= n;
        for (std::size_t i = 0; whole && i < n; ++i)
            whole = edge_val(i, 0.5) <= best + vtol;
        if (whole) {
            out.form = SetForm::WholeSphere;
        } else {
            out.form = SetForm::Segments;
            out.segments = std::move(keep);
            out.points = detail::cluster_points(pts, false, 1e-7, tol);
        }
    } else {
        out.form = SetForm::FinitePairs;
        out.points = detail::cluster_points(pts, false, 1e-7, tol);
    }
    return out;
}

namespace detail {

/// Subgradient of the codomain norm at w (canonical selection off the
/// smooth locus); zero at w = 0.
inline Vec norm_subgradient(const NormSpace& s, const Vec& w) {
    const double nw = norm_eval(s, w);
    if (nw < 1e-14) return Vec::Zero(s.dim);
    return support_functionals(s, w / nw, 1e-7).canonical();
}

}  // namespace detail

/// Multi-start projected gradient ascent/descent on the lp sphere
/// (finite p > 1), with a golden-section angular polish in dimension two.
/// The returned set is explicitly flagged approximate.
inline AttainmentSet attain_lp(const Operator& T, AttainMode mode,
                               int restarts = 24, std::uint64_t seed = 42,
                               double tol = kDefaultTol) {
    if (!T.domain.is_lp() || T.domain.lp_is_inf() || !(T.domain.p > 1.0))
        throw InvalidInput("attain_lp: domain must be lp with finite p > 1");
    if (restarts < 1) throw InvalidInput("attain_lp: restarts >= 1");
    const bool maximize = mode == AttainMode::Max;
    std::mt19937_64 rng(seed);

    auto F = [&](const Vec& x) { return T.image_norm(x); };
    auto unit = [&](const Vec& x) { return Vec(x / norm_eval(T.domain, x)); };

    std::vector<std::pair<Vec, double>> converged;
    for (int r = 0; r < restarts; ++r) {
        Vec x = random_unit_vector(T.domain, rng);
        double fx = F(x);
        double step = 0.5;
        for (int it = 0; it < 400 && step > 1e-13; ++it) {
            const Vec w = T.matrix * x;
            if (!maximize && norm_eval(T.codomain, w) < 1e-13) break;
            Vec g = T.matrix.transpose() * detail::norm_subgradient(T.codomain, w);
            if (g.norm() < 1e-15) break;
            const Vec cand = unit(x + (maximize ? step : -step) * g);
            const double fc = F(cand);
            if (maximize ? fc > fx : fc < fx) {
                x = cand;
                fx = fc;
                step *= 1.25;
            } else {
                step *= 0.5;
            }
        }
        if (T.domain.dim == 2) {
            // angular polish: golden section, then a derivative-sign
            // bisection (value-based search alone locates p-flat extrema to
            // eps^{1/p} only)
            const double th0 = std::atan2(x[1], x[0]);
            auto g = [&](double th) {
                Vec d(2);
                d << std::cos(th), std::sin(th);
                const double v = F(unit(d));
                return maximize ? -v : v;
            };
            auto [th, gv] = golden_section_min(g, th0 - 0.5, th0 + 0.5);
            // one-sided derivative of th -> ||T x(th)||
            auto deriv = [&](double t, bool plus) {
                Vec d(2), dp(2);
                d << std::cos(t), std::sin(t);
                dp << -std::sin(t), std::cos(t);
                const double gn = norm_eval(T.domain, d);
                const Vec xx = d / gn;
                const Vec phi = support_functionals(T.domain, xx, 1e-7).canonical();
                const Vec xp = (dp - xx * phi.dot(dp)) / gn;
                const Vec w2 = T.matrix * xx;
                const double nw = norm_eval(T.codomain, w2);
                const Vec wp = T.matrix * xp;
                if (nw < 1e-12) {
                    const double n = norm_eval(T.codomain, wp);
                    return plus ? n : -n;
                }
                const auto [lo, hi] =
                    support_functionals(T.codomain, w2 / nw, 1e-7).range(wp);
                return plus ? hi : lo;
            };
            // bracket a sign change of the relevant one-sided derivative
            const bool use_plus = maximize;
            auto sgn_at = [&](double t) { return deriv(t, use_plus); };
            double lo = th, hi = th, dlo = 0, dhi = 0;
            bool bracketed = false;
            for (double delta = 1e-3; delta <= 0.6; delta *= 2) {
                lo = th - delta;
                hi = th + delta;
                dlo = sgn_at(lo);
                dhi = sgn_at(hi);
                const bool ok = maximize ? (dlo > 0 && dhi < 0)
                                         : (dlo < 0 && dhi > 0);
                if (ok) {
                    bracketed = true;
                    break;
                }
            }
            if (bracketed) {
                for (int it = 0; it < 80; ++it) {
                    const double mid = (lo + hi) / 2;
                    const double dm = sgn_at(mid);
                    if ((maximize && dm > 0) || (!maximize && dm < 0))
                        lo = mid;
                    else
                        hi = mid;
                }
                th = (lo + hi) / 2;
            }
            Vec d(2);
            d << std::cos(th), std::sin(th);
            x = unit(d);
            fx = F(x);
        }
        converged.emplace_back(std::move(x), fx);
    }
    if (converged.empty()) throw InvalidInput("attain_lp: all starts failed");

    AttainmentSet out;
    out.approximate = true;
    auto pts = detail::cluster_points(std::move(converged), maximize, 1e-6, 1e-8);
    double best = -1;
    for (const auto& p : pts) best = std::max(best, F(p));
    if (mode == AttainMode::Min) {
        best = std::numeric_limits<double>::infinity();
        for (const auto& p : pts) best = std::min(best, F(p));
    }
    out.value = best;

    // isometry-like spread probe: whole sphere when the value is constant
    double spread = 0;
    for (int i = 0; i < 100; ++i)
        spread = std::max(spread,
                          std::abs(F(random_unit_vector(T.domain, rng)) - best));
    if (spread <= tol * std::max(1.0, best)) {
        out.form = SetForm::WholeSphere;
        return out;
    }
    out.form = SetForm::FinitePairs;
    out.points = std::move(pts);
    return out;
}

/// Brute-force profile of ||Tx|| over an angular grid of the domain sphere
/// (dim 2: uniform angles over [0, 2pi); dim 3: Fibonacci sphere).
struct ProfileEntry {
    double angle;  // meaningful for dim 2 only
    Vec x;
    double value;
};

inline std::vector<ProfileEntry> oracle_profile(const Operator& T, int samples) {
    if (samples < 100) throw InvalidInput("oracle_profile: samples >= 100");
    const int d = T.domain.dim;
    std::vector<ProfileEntry> out;
    out.reserve(samples);
    if (d == 2) {
        for (int k = 0; k < samples; ++k) {
            const double th = 2.0 * M_PI * k / samples;
            Vec x(2);
            x << std::cos(th), std::sin(th);
            x /= norm_eval(T.domain, x);
            out.push_back({th, x, T.image_norm(x)});
        }
        return out;
    }
    if (d == 3) {
        const double ga = M_PI * (3.0 - std::sqrt(5.0));
        for (int k = 0; k < samples; ++k) {
            const double z = 1.0 - 2.0 * (k + 0.5) / samples;
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double th = ga * k;
            Vec x(3);
            x << r * std::cos(th), r * std::sin(th), z;
            x /= norm_eval(T.domain, x);
            out.push_back({th, x, T.image_norm(x)});
        }
        return out;
    }
    throw InvalidInput("oracle_profile: domain dimension must be 2 or 3");
}

/// ||Tx|| = c on the whole sphere? Exact T*T = cG test in the Hilbert case,
/// seeded sampling otherwise.
inline bool is_scalar_isometry_multiple(const Operator& T, int probes = 200,
                                        std::uint64_t seed = 42,
                                        double tol = kDefaultTol) {
    if (T.is_zero()) return true;
    if (T.domain.is_inner_product() && T.codomain.is_inner_product()) {
        const Mat M = T.matrix.transpose() * T.codomain.gram * T.matrix;
        const double c =
            (T.domain.gram_inv * M).trace() / static_cast<double>(T.domain.dim);
        return (M - c * T.domain.gram).lpNorm<Eigen::Infinity>() <=
               tol * std::max(1.0, std::abs(c));
    }
    std::mt19937_64 rng(seed);
    double lo = std::numeric_limits<double>::infinity(), hi = 0;
    for (int i = 0; i < probes; ++i) {
        const double v = T.image_norm(random_unit_vector(T.domain, rng));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return hi - lo <= tol * std::max(1.0, hi);
}

/// Dispatch by domain kind. l1/linf planar domains are rewritten as their
/// polygonal unit balls so the exact polygon path applies.
inline AttainmentSet attain(const Operator& T, AttainMode mode,
                            int restarts = 24, std::uint64_t seed = 42,
                            double tol = kDefaultTol) {
    if (T.is_zero()) {
        AttainmentSet out;
        out.form = SetForm::WholeSphere;
        out.value = 0.0;
        return out;
    }
    if (T.domain.is_inner_product() && T.codomain.is_inner_product())
        return attain_hilbert(T, mode);
    if (T.domain.is_polygon()) return attain_polygon(T, mode, tol);
    if (T.domain.is_lp()) {
        if (T.domain.lp_is_inf() || T.domain.p == 1.0) {
            if (T.domain.dim != 2)
                throw InvalidInput(
                    "attain: l1/linf domains are supported in dimension 2 only");
            NormSpace poly =
                T.domain.lp_is_inf()
                    ? NormSpace::linf_square()
                    : NormSpace::polygon({Vec2(1, 0), Vec2(0, 1)});
            return attain_polygon(Operator(T.matrix, poly, T.codomain), mode, tol);
        }
        return attain_lp(T, mode, restarts, seed, tol);
    }
    throw InvalidInput("attain: unsupported domain kind");
}

inline double operator_norm(const Operator& T) {
    return attain(T, AttainMode::Max).value;
}

inline double minimum_norm(const Operator& T) {
    return attain(T, AttainMode::Min).value;
}

}  // namespace bjgeo
