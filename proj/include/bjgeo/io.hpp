// JSON (de)serialization for spaces, operators, certificates, attainment
// sets and theorem reports, plus the CSV profile export.

#pragma once

#include "bjgeo/verify.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace bjgeo {

using Json = nlohmann::ordered_json;

inline Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

inline Vec vec_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw InvalidInput("expected a non-empty JSON array of numbers");
    Vec v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
    return v;
}

inline Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
    return rows;
}

inline Mat mat_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw InvalidInput("expected a JSON array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j[0].size());
    Mat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (static_cast<Eigen::Index>(j[i].size()) != cols)
            throw InvalidInput("ragged matrix rows");
        for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = j[i][k].get<double>();
    }
    return m;
}

inline Json space_to_json(const NormSpace& s) {
    Json j;
    switch (s.kind) {
        case SpaceKind::Lp:
            j["kind"] = "lp";
            if (s.lp_is_inf())
                j["p"] = "inf";
            else
                j["p"] = s.p;
            j["dim"] = s.dim;
            break;
        case SpaceKind::Polygon: {
            j["kind"] = "polygon";
            Json vs = Json::array();
            for (const auto& v : s.vertices) vs.push_back({v.x(), v.y()});
            j["vertices"] = vs;
            break;
        }
        case SpaceKind::InnerProduct:
            j["kind"] = "inner_product";
            j["gram"] = mat_to_json(s.gram);
            break;
    }
    return j;
}

inline NormSpace space_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "lp") {
        const auto& pj = j.at("p");
        const double p = pj.is_string()
                             ? (pj.get<std::string>() == "inf"
                                    ? kInfP
                                    : throw InvalidInput("lp: bad p string"))
                             : pj.get<double>();
        return NormSpace::lp(j.at("dim").get<int>(), p);
    }
    if (kind == "polygon") {
        std::vector<Vec2> vs;
        for (const auto& v : j.at("vertices"))
            vs.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
        return NormSpace::polygon(std::move(vs));
    }
    if (kind == "inner_product")
        return NormSpace::inner_product(mat_from_json(j.at("gram")));
    throw InvalidInput("unknown space kind: " + kind);
}

inline Json operator_to_json(const Operator& T) {
    Json j;
    j["matrix"] = mat_to_json(T.matrix);
    j["domain"] = space_to_json(T.domain);
    j["codomain"] = space_to_json(T.codomain);
    return j;
}

inline Operator operator_from_json(const Json& j) {
    return Operator(mat_from_json(j.at("matrix")),
                    space_from_json(j.at("domain")),
                    space_from_json(j.at("codomain")));
}

inline Json ortho_certificate_to_json(const OrthoCertificate& c) {
    Json j;
    j["orthogonal"] = c.orthogonal;
    j["rho_minus"] = c.rho_minus;
    j["rho_plus"] = c.rho_plus;
    j["lambda_star"] = c.lambda_star;
    j["min_value"] = c.min_value;
    return j;
}

inline Json sip_certificate_to_json(const SipCertificate& c) {
    Json j;
    j["mode"] = c.mode == AttainMode::Max ? "max" : "min";
    j["residual_max"] = c.residual_max;
    j["z_basis_checked"] = c.z_basis_checked;
    j["pass"] = c.pass;
    j["degenerate"] = c.degenerate;
    j["value"] = c.value;
    if (!c.message.empty()) j["message"] = c.message;
    return j;
}

inline Json attainment_to_json(const AttainmentSet& a) {
    Json j;
    switch (a.form) {
        case SetForm::WholeSphere: j["form"] = "whole_sphere"; break;
        case SetForm::SubspaceSphere: j["form"] = "subspace_sphere"; break;
        case SetForm::FinitePairs: j["form"] = "finite_pairs"; break;
        case SetForm::Segments: j["form"] = "segments"; break;
    }
    j["value"] = a.value;
    if (!a.points.empty()) {
        Json p = Json::array();
        for (const auto& x : a.points) p.push_back(vec_to_json(x));
        j["points"] = p;
    }
    if (!a.basis.empty()) {
        Json b = Json::array();
        for (const auto& x : a.basis) b.push_back(vec_to_json(x));
        j["basis"] = b;
    }
    if (!a.segments.empty()) {
        Json ss = Json::array();
        for (const auto& [p, q] : a.segments)
            ss.push_back({vec_to_json(p), vec_to_json(q)});
        j["segments"] = ss;
    }
    j["approximate"] = a.approximate;
    return j;
}

inline AttainmentSet attainment_from_json(const Json& j) {
    AttainmentSet a;
    const std::string f = j.at("form").get<std::string>();
    if (f == "whole_sphere") a.form = SetForm::WholeSphere;
    else if (f == "subspace_sphere") a.form = SetForm::SubspaceSphere;
    else if (f == "finite_pairs") a.form = SetForm::FinitePairs;
    else if (f == "segments") a.form = SetForm::Segments;
    else throw InvalidInput("unknown attainment form: " + f);
    a.value = j.at("value").get<double>();
    if (j.contains("points"))
        for (const auto& p : j["points"]) a.points.push_back(vec_from_json(p));
    if (j.contains("basis"))
        for (const auto& b : j["basis"]) a.basis.push_back(vec_from_json(b));
    if (j.contains("segments"))
        for (const auto& s : j["segments"])
            a.segments.emplace_back(vec_from_json(s.at(0)), vec_from_json(s.at(1)));
    a.approximate = j.value("approximate", false);
    return a;
}

inline Json report_to_json(const TheoremReport& r) {
    Json j;
    j["theorem_id"] = r.theorem_id;
    j["pass"] = r.pass;
    j["applicable"] = r.applicable;
    j["max_residual"] = r.max_residual;
    j["notes"] = r.notes;
    Json w = Json::array();
    for (const auto& x : r.witnesses) w.push_back(vec_to_json(x));
    j["witnesses"] = w;
    return j;
}

/// CSV export of the 2-D angular profile: `angle,x1,x2,norm_Tx`.
inline void write_profile_csv(std::ostream& os,
                              const std::vector<ProfileEntry>& profile) {
    os << "angle,x1,x2,norm_Tx\n";
    os.precision(17);
    for (const auto& e : profile) {
        os << e.angle;
        for (Eigen::Index i = 0; i < e.x.size() && i < 2; ++i) os << ',' << e.x[i];
        os << ',' << e.value << '\n';
    }
}

}  // namespace bjgeo
