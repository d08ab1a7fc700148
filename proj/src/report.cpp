#include "cdl/report.hpp"

#include <sstream>

namespace cdl {

Json to_json(const BiDegree& d) { return Json::array({d.k, d.l}); }

Json to_json(const LowerSet& s) {
    Json members = Json::array();
    for (const auto& d : s.graded_members()) members.push_back(to_json(d));
    Json maximal = Json::array();
    for (const auto& d : s.maximal_elements()) maximal.push_back(to_json(d));
    return Json{{"members", members}, {"maximal", maximal}};
}

Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const Rational& r) {
    return Json{{"num", numerator(r).str()}, {"den", denominator(r).str()}, {"decimal", to_double(r)}};
}

Json to_json(const DesignReport& rep) {
    Json residuals = Json::array();
    for (const auto& [deg, rho] : rep.residuals)
        residuals.push_back(Json{{"degree", to_json(deg)}, {"residual", rho}});
    return Json{{"residuals", residuals},
                {"verdict", to_json(rep.verdict)},
                {"cutoff", rep.cutoff},
                {"tolerance", rep.tol}};
}

Json to_json(const AngleSet& a) {
    Json out = Json::array();
    for (std::size_t i = 0; i < a.alphas.size(); ++i)
        out.push_back(Json{{"value", to_json(a.alphas[i])}, {"pairs", a.counts[i]}});
    return Json{{"angles", out}, {"degree", a.degree()}};
}

namespace {

const char* kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::AbsoluteDesign: return "absolute-design";
        case BoundKind::AbsoluteCode: return "absolute-code";
        case BoundKind::LpLower: return "lp-lower";
        case BoundKind::LpUpper: return "lp-upper";
        case BoundKind::Antipodal: return "antipodal";
    }
    return "?";
}

}  // namespace

Json to_json(const BoundCertificate& cert) {
    Json out{{"kind", kind_name(cert.kind)},
             {"value", to_json(cert.value)},
             {"witness", cert.witness},
             {"tight", cert.tight},
             {"checks", cert.checks}};
    if (cert.kind == BoundKind::Antipodal) {
        out["branch_sn"] = to_json(cert.branch_sn);
        out["branch_rest"] = to_json(cert.branch_rest);
    }
    return out;
}

Json to_json(const TightnessReport& rep) {
    return Json{{"size_equality", rep.size_equality},
                {"annihilator_vanishes", rep.annihilator_vanishes},
                {"convolution_design", rep.convolution_design},
                {"tight", rep.tight()}};
}

Json to_json(const SchemeReport& rep) {
    Json out{{"is_scheme", rep.is_scheme},
             {"symmetric", rep.symmetric},
             {"points", rep.n},
             {"classes", rep.s},
             {"valencies", rep.valencies}};
    Json alphas = Json::array();
    for (auto a : rep.alphas) alphas.push_back(to_json(a));
    out["alphas"] = alphas;
    out["transpose_pairing"] = rep.tilde;
    if (rep.witness) {
        out["witness"] = Json{{"i", rep.witness->i},
                              {"j", rep.witness->j},
                              {"x", rep.witness->x},
                              {"y", rep.witness->y}};
        Json closure = Json::array();
        for (const auto& row : rep.closure) {
            Json r = Json::array();
            for (bool b : row) r.push_back(b ? 1 : 0);
            closure.push_back(r);
        }
        out["closure"] = closure;
    }
    if (rep.is_scheme) {
        Json p = Json::array();
        for (int i = 0; i <= rep.s; ++i)
            for (int j = 0; j <= rep.s; ++j)
                for (int k = 0; k <= rep.s; ++k)
                    if (rep.p[i][j][k] != 0)
                        p.push_back(Json::array({i, j, k, rep.p[i][j][k]}));
        out["intersection_numbers"] = p;
        out["multiplicities"] = rep.multiplicities;
        if (rep.P.size() > 0) {
            auto mat = [](const Matrix& M) {
                Json rows = Json::array();
                for (int i = 0; i < M.rows(); ++i) {
                    Json row = Json::array();
                    for (int j = 0; j < M.cols(); ++j) row.push_back(to_json(M(i, j)));
                    rows.push_back(row);
                }
                return rows;
            };
            out["P"] = mat(rep.P);
            out["Q"] = mat(rep.Q);
        }
    }
    return out;
}

Json to_json(const MolienTable& t) {
    Json entries = Json::array();
    for (const auto& [deg, v] : t.entries)
        entries.push_back(Json{{"degree", to_json(deg)}, {"dim", v}});
    return Json{{"kind", t.kind == MolienTable::Kind::HomInvariants ? "hom-invariants" : "harm-invariants"},
                {"kmax", t.kmax},
                {"lmax", t.lmax},
                {"entries", entries}};
}

Json to_json(const InvarianceReport& rep) {
    Json out{{"invariant", rep.invariant}};
    if (rep.invariant) out["valencies"] = rep.valencies;
    return out;
}

namespace {

void render(const Json& j, std::ostringstream& os, int depth) {
    const std::string pad(2 * depth, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            os << pad << it.key() << ":";
            if (it.value().is_object() || it.value().is_array()) {
                os << "\n";
                render(it.value(), os, depth + 1);
            } else {
                os << " " << it.value().dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        bool scalar = true;
        for (const auto& v : j)
            if (v.is_object() || (v.is_array() && v.size() > 4)) scalar = false;
        if (scalar) {
            os << pad << j.dump() << "\n";
        } else {
            for (const auto& v : j) {
                os << pad << "-\n";
                render(v, os, depth + 1);
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

}  // namespace

std::string text_report(const Json& j, int indent) {
    std::ostringstream os;
    render(j, os, indent);
    return os.str();
}

}  // namespace cdl
