#include "rmtori/json_io.hpp"

#include "rmtori/errors.hpp"

#include <limits>

namespace rmtori {

namespace {

bool fits_int64(const Integer& n) {
    return n >= std::numeric_limits<long long>::min() &&
           n <= std::numeric_limits<long long>::max();
}

/// N and M as numbers when they fit in 64 bits, decimal strings otherwise.
Json integer_field(const Integer& n) {
    if (fits_int64(n)) return Json(static_cast<long long>(n));
    return Json(n.str());
}

}  // namespace

Integer integer_from_string(const std::string& s) {
    if (s.empty()) throw Error("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw Error("bad integer literal: " + s);
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw Error("bad integer literal: " + s);
    return Integer(s);
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(integer_from_string(s));
    Integer num = integer_from_string(s.substr(0, slash));
    Integer den = integer_from_string(s.substr(slash + 1));
    if (den == 0) throw Error("rational with zero denominator: " + s);
    return Rational(num, den);
}

Json to_json(const KVector& v) { return Json::array({v.deg.str(), v.rk.str()}); }

Json to_json(const SL2Matrix& g) {
    return Json::array({Json::array({g.a.str(), g.b.str()}), Json::array({g.c.str(), g.d.str()})});
}

Json to_json(const QuadNum& q) {
    Json j;
    j["D"] = static_cast<long long>(q.D());
    j["x"] = q.x().str();
    j["y"] = q.y().str();
    return j;
}

Json to_json(const QPoly& p) {
    Json j = Json::object();
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        if (p.coeffs()[i] != 0) j[std::to_string(i)] = p.coeffs()[i].str();
    return j;
}

Json to_json(const QRatFun& f) {
    Json j;
    j["num"] = to_json(f.num());
    j["den"] = to_json(f.den());
    return j;
}

Json to_json(const BiPoly& p) {
    Json j = Json::object();
    for (const auto& [k, v] : p.terms())
        j[std::to_string(k.first) + "," + std::to_string(k.second)] = v.str();
    return j;
}

Json to_json(const Verdict& v) {
    if (v.status == VerdictStatus::BoundaryConditional) return Json("boundary:" + v.note);
    return Json(to_string(v.status));
}

Json profile_to_json(const AlgebraProfile& p, std::size_t horizon) {
    Json j;
    j["g"] = to_json(p.g);
    j["v0"] = to_json(p.v0);
    j["N"] = integer_field(p.N);
    j["M"] = integer_field(p.M);
    j["alpha"] = to_string(p.alpha_flag);
    j["eigen_class"] = to_string(p.eigen_class);
    if (p.theta_attract) j["theta_attract"] = to_json(*p.theta_attract);
    if (p.theta_repel) j["theta_repel"] = to_json(*p.theta_repel);
    if (p.frame) {
        j["eigenvalue_r"] = to_json(p.frame->r);
        j["delta"] = to_json(p.frame->delta);
        j["base_in_attracting_halfplane"] = p.base_in_attracting_halfplane;
    }
    if (p.eigenprop_admissible()) {
        j["degree_one"] = to_json(degree_one_generated(p));
        j["quadratic"] = to_json(quadratic(p));
        j["koszul"] = to_json(koszul(p));
        j["finitely_generated"] = to_json(finitely_generated(p));
        bool ample_ready = p.is_unipotent() || p.base_in_attracting_halfplane;
        j["ample"] = ample_ready ? to_json(ample(p)) : Json("not-applicable:shifted-base");
        j["hilbert"] = to_json(p.hilbert());
        auto coeffs = p.hilbert().coefficients(horizon);
        Json arr = Json::array();
        for (const auto& c : coeffs) arr.push_back(c.str());
        j["hilbert_coefficients"] = arr;
        if (koszul(p).status == VerdictStatus::Holds) {
            AlgebraProfile dual = koszul_dual(p);
            Json dj;
            dj["g"] = to_json(dual.g);
            dj["N"] = integer_field(dual.N);
            dj["M"] = integer_field(dual.M);
            j["koszul_dual"] = dj;
        }
    } else {
        j["admissible"] = false;
    }
    return j;
}

Json orbit_to_json(const TwistOrbit& orbit) {
    Json chi = Json::object();
    for (std::size_t n = 0; n < orbit.horizon; ++n)
        for (std::size_t m = n + 1; m <= orbit.horizon; ++m)
            chi[std::to_string(n) + "," + std::to_string(m)] = orbit.chi_table[n][m].str();
    Json rk = Json::array();
    for (const auto& q : orbit.rk_seq) rk.push_back(to_json(q));
    Json j;
    j["chi"] = chi;
    j["rk"] = rk;
    return j;
}

Json ample_items_to_json(const std::vector<AmpleSeqItem>& items, const QuadNum& theta) {
    Json arr = Json::array();
    for (const auto& it : items) {
        Json j;
        j["d"] = it.d.str();
        j["r"] = it.r.str();
        j["mu"] = it.mu().str();
        j["theta_gap_ok"] = it.theta_gap_ok;
        arr.push_back(j);
    }
    Json out;
    out["theta"] = to_json(theta);
    out["items"] = arr;
    return out;
}

KVector kvector_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw Error("vector JSON must be a 2-array");
    return KVector(integer_from_string(j[0].get<std::string>()),
                   integer_from_string(j[1].get<std::string>()));
}

SL2Matrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw Error("matrix JSON must be a 2x2 nested array");
    return SL2Matrix(integer_from_string(j[0][0].get<std::string>()),
                     integer_from_string(j[0][1].get<std::string>()),
                     integer_from_string(j[1][0].get<std::string>()),
                     integer_from_string(j[1][1].get<std::string>()));
}

QuadNum quadnum_from_json(const Json& j) {
    Integer d = j["D"].is_string() ? integer_from_string(j["D"].get<std::string>())
                                   : Integer(j["D"].get<long long>());
    return QuadNum(d, rational_from_string(j["x"].get<std::string>()),
                   rational_from_string(j["y"].get<std::string>()));
}

}  // namespace rmtori
