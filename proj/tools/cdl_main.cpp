// cdl: construct, verify and bound complex spherical codes and designs, and
// analyze the association schemes they carry.
//
// Exit codes: 0 = verified/true, 1 = verified-false, 2 = precondition or
// parse error. Negative mathematical verdicts are successes, not failures.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "cdl/construct.hpp"
#include "cdl/report.hpp"
#include "cdl/threading.hpp"

namespace {

using namespace cdl;

struct CommonOpts {
    double tol = 1e-7;
    int cutoff = 8;
    bool slow = false;
    bool json = false;
    int threads = 0;
};

void emit(const Json& j, bool as_json) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text_report(j);
}

Json run_header(const std::string& command) {
    return Json{{"command", command},
                {"schema", "cdl-report-v1"}};
}

PointSet load(const std::string& path) { return read_pointset_file(path); }

int cmd_verify(const std::string& file, const CommonOpts& opt) {
    auto t0 = std::chrono::steady_clock::now();
    PointSet X = load(file);
    Json out = run_header("verify");
    out["input"] = Json{{"file", file}, {"points", X.size()}, {"dimension", X.dim()}};
    AngleSet A = angle_set(X);
    out["angle_set"] = to_json(A);
    auto rep = max_design_strength(X, opt.cutoff, opt.tol);
    out["design"] = to_json(rep);
    out["inner_product_invariant"] = to_json(invariance_check(X));
    out["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    emit(out, opt.json);
    return 0;
}

int cmd_scheme(const std::string& file, const CommonOpts& opt) {
    auto t0 = std::chrono::steady_clock::now();
    PointSet X = load(file);
    if (X.size() > 500 && !opt.slow) {
        std::cerr << "scheme: " << X.size() << " points needs --slow (cost grows as s^2 n^2 + n^3)\n";
        return 2;
    }
    Json out = run_header("scheme");
    out["input"] = Json{{"file", file}, {"points", X.size()}, {"dimension", X.dim()}};
    auto rel = relations(X);
    auto rep = check_scheme(rel);
    out["scheme"] = to_json(rep);
    if (rep.is_scheme) {
        auto q = krein(rep);
        Json kj = Json::array();
        for (int i = 0; i <= rep.s; ++i)
            for (int j = 0; j <= rep.s; ++j)
                for (int k = 0; k <= rep.s; ++k)
                    if (std::abs(q[i][j][k]) > 1e-9)
                        kj.push_back(Json::array({i, j, k, q[i][j][k].real(), q[i][j][k].imag()}));
        out["krein"] = kj;
        // Krein-design dictionary on the first nontrivial nonsymmetric idempotent
        for (int j = 1; j <= rep.s; ++j) {
            if (rep.idem_transpose[j] != j) {
                LowerSet T = LowerSet::closure({BiDegree{2, 2}});
                Json kd = Json::array();
                for (const auto& ent : krein_design_check(rep, j, T))
                    kd.push_back(Json{{"degree", to_json(ent.deg)},
                                      {"holds", ent.holds},
                                      {"target", to_json(ent.target)}});
                out["krein_design"] = Json{{"idempotent", j}, {"entries", kd}};
                break;
            }
        }
    }
    out["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    emit(out, opt.json);
    return rep.is_scheme ? 0 : 1;
}

ZonalPoly builtin_annihilator(const std::string& name, int d) {
    ZonalPoly F(d);
    if (name == "sic") {
        // d((d+1)x xb - 1)(x^2 + xb^2 + 2x + 2xb + 2)/2
        ZonalPoly a(d), b(d);
        a.add_term(1, 1, Rational(d) * (d + 1));
        a.add_term(0, 0, -Rational(d));
        b.add_term(2, 0, 1);
        b.add_term(0, 2, 1);
        b.add_term(1, 0, 2);
        b.add_term(0, 1, 2);
        b.add_term(0, 0, 2);
        F = a * b;
        F *= Rational(1, 2);
    } else if (name == "kerdock") {
        F.add_term(4, 0, d);
        F.add_term(0, 4, d);
        F.add_term(3, 0, 2 * d);
        F.add_term(0, 3, 2 * d);
        F.add_term(2, 0, d + 1);
        F.add_term(0, 2, d + 1);
        F.add_term(1, 1, 2);
        F.add_term(1, 0, 2);
        F.add_term(0, 1, 2);
    } else if (name == "simplex") {
        F.add_term(0, 0, 1);
        F.add_term(1, 0, d);
        F.add_term(0, 1, d);
    } else {
        throw CLI::ValidationError("--annihilator", "unknown builtin '" + name + "'");
    }
    return F;
}

int cmd_bound(int d, const std::string& builtin, const std::string& file, const std::string& mode,
              const std::string& absolute_u, int antipodal_n, const CommonOpts& opt) {
    Json out = run_header("bound");
    auto parse_lowerset = [](const std::string& text) {
        // "k1,l1;k2,l2;..." = closure of the listed maximal elements
        std::vector<BiDegree> degs;
        std::istringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ';')) {
            int k, l;
            if (std::sscanf(part.c_str(), "%d,%d", &k, &l) != 2)
                throw CLI::ValidationError("lower set", "expected 'k,l;k,l;...'");
            degs.push_back({k, l});
        }
        return LowerSet::closure(degs);
    };
    if (!absolute_u.empty()) {
        LowerSet U = parse_lowerset(absolute_u);
        BoundCertificate cert;
        if (antipodal_n >= 2) {
            cert = antipodal_bound(d, U, antipodal_n);
        } else if (mode == "lower") {
            cert.kind = BoundKind::AbsoluteDesign;
            cert.value = Rational(absolute_design_bound(d, U));
            cert.witness = "sum of dim Harm over " + to_string(U);
        } else {
            cert.kind = BoundKind::AbsoluteCode;
            cert.value = Rational(absolute_code_bound(d, U));
            cert.witness = "sum of dim Harm over " + to_string(U);
        }
        out["bound"] = to_json(cert);
        emit(out, opt.json);
        return 0;
    }
    ZonalPoly F(d);
    std::vector<Complex> angles;
    if (!builtin.empty()) {
        F = builtin_annihilator(builtin, d);
        if (builtin == "sic") {
            double s = 1.0 / std::sqrt(d + 1.0);
            angles = {s, -s, {0, s}, {0, -s}, {0, 1}, {0, -1}, -1};
        } else if (builtin == "kerdock") {
            double s = 1.0 / std::sqrt(2.0 * d);
            angles = {{s, s}, {-s, s}, {-s, -s}, {s, -s}, 0, {0, 1}, {0, -1}, -1};
        } else if (builtin == "simplex") {
            angles = {Complex(-1.0 / (2.0 * d), 0.3)};  // representative with Re = -1/(2d)
        }
    } else if (!file.empty()) {
        PointSet X = load(file);
        AngleSet A = angle_set(X);
        angles = A.alphas;
        auto ann = find_annihilator(X.dim(), A);
        F = ann.poly;
    } else {
        std::cerr << "bound: need --annihilator, --file, or --absolute\n";
        return 2;
    }
    LowerSet T = LowerSet::total_degree(opt.cutoff);
    try {
        auto cert = lp_bound(d, F, mode == "lower" ? LpMode::Lower : LpMode::Upper, angles, &T);
        out["bound"] = to_json(cert);
        emit(out, opt.json);
        return 0;
    } catch (const std::invalid_argument& e) {
        out["refused"] = e.what();
        emit(out, opt.json);
        return 1;
    }
}

int cmd_construct(const std::string& name, std::vector<long> params, const std::string& outfile) {
    PointSet X = [&]() -> PointSet {
        auto p = [&](std::size_t i, long def) { return params.size() > i ? params[i] : def; };
        if (name == "cross-polytope") return cross_polytope(static_cast<int>(p(0, 3)), static_cast<int>(p(1, 2)));
        if (name == "sic-d2") return sic_d2();
        if (name == "hoggar") return hoggar();
        if (name == "kerdock") return kerdock_code_set(static_cast<int>(p(0, 3)));
        if (name == "mub-cover") {
            int r = static_cast<int>(p(0, 3));
            return mub_cover(r % 2 ? MubFamily::Odd : MubFamily::Even, r);
        }
        if (name == "coxeter-27") return coxeter_27();
        if (name == "coxeter-42") return coxeter_42();
        if (name == "coxeter-56") return coxeter_56();
        if (name == "coxeter-240") return coxeter_240();
        if (name == "coxeter-756") return coxeter_756();
        if (name == "mub-odd-prime") return mub_odd_prime(p(0, 3), p(1, 0) != 0);
        if (name == "singer") return singer_design(p(0, 2));
        if (name == "oa") {
            int q = static_cast<int>(p(0, 3));
            int cols = static_cast<int>(p(1, 4));
            return oa_design(oa_from_prime_lines(q, cols), q);
        }
        if (name == "paley") return paley_tournament_design(p(0, 7));
        if (name == "simplex") return regular_simplex_cover(static_cast<int>(p(0, 2)));
        if (name == "conference") {
            auto C = find_skew_conference(static_cast<int>(p(0, 4)));
            if (!C) throw std::runtime_error("no skew conference matrix of that order");
            return conference_to_design(*C);
        }
        throw CLI::ValidationError("construct", "unknown generator '" + name + "'");
    }();
    if (outfile.empty())
        write_pointset(std::cout, X);
    else
        write_pointset_file(outfile, X);
    return 0;
}

FiniteUnitaryGroup load_group(const std::string& spec) {
    if (spec.rfind("pauli:", 0) == 0) return pauli_group(std::stoi(spec.substr(6)));
    if (spec == "sic-d2-group") {
        Matrix Px(2, 2), Pz(2, 2), iI(2, 2);
        Px << 0, 1, 1, 0;
        Pz << 1, 0, 0, -1;
        iI << Complex(0, 1), 0, 0, Complex(0, 1);
        return close_group({Px, Pz, iI});
    }
    // generator matrix file: dimension d / generators m / then m blocks of d rows
    std::ifstream is(spec);
    if (!is) throw std::runtime_error("cannot open group file: " + spec);
    std::string key;
    int d = 0, m = 0;
    if (!(is >> key >> d) || key != "dimension") throw std::runtime_error(spec + ": expected 'dimension <d>'");
    if (!(is >> key >> m) || key != "generators") throw std::runtime_error(spec + ": expected 'generators <m>'");
    std::vector<Matrix> gens;
    for (int g = 0; g < m; ++g) {
        Matrix M(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                double re, im;
                if (!(is >> re >> im)) throw std::runtime_error(spec + ": truncated generator matrix");
                M(i, j) = Complex(re, im);
            }
        gens.push_back(M);
    }
    return close_group(gens);
}

int cmd_molien(const std::string& group, int kmax, int lmax, const CommonOpts& opt) {
    Json out = run_header("molien");
    FiniteUnitaryGroup G = load_group(group);
    out["group"] = Json{{"spec", group}, {"order", G.order()}, {"dimension", G.dim}};
    out["hom"] = to_json(molien_hom(G, kmax, lmax));
    out["harm"] = to_json(molien_harm(G, kmax, lmax));
    emit(out, opt.json);
    return 0;
}

int cmd_derive(const std::string& file, int z_index, int alpha_index, const std::string& outfile) {
    PointSet X = load(file);
    AngleSet A = angle_set(X);
    if (alpha_index < 0 || alpha_index >= A.degree()) {
        std::cerr << "derive: alpha index out of range (0.." << A.degree() - 1 << ")\n";
        return 2;
    }
    Complex alpha = A.alphas[alpha_index];
    PointSet Y = derived_code(X, z_index, alpha);
    if (outfile.empty())
        write_pointset(std::cout, Y);
    else
        write_pointset_file(outfile, Y);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"complex spherical codes, designs and their association schemes"};
    app.require_subcommand(1);
    CommonOpts opt;
    app.add_option("--tol", opt.tol, "residual tolerance");
    app.add_option("--cutoff", opt.cutoff, "total-degree cutoff for strength scans");
    app.add_flag("--slow", opt.slow, "allow expensive runs (large schemes)");
    app.add_flag("--json", opt.json, "emit JSON instead of text");
    app.add_option("--threads", opt.threads, "worker threads (default CDL_THREADS or 1)");

    std::string file, outfile, name, group, builtin, mode = "upper", absolute_u;
    int d = 2, kmax = 3, lmax = 3, z_index = 0, alpha_index = 0, antipodal_n = 0;
    std::vector<long> params;

    auto* verify = app.add_subcommand("verify", "angle set, strength, invariance of a point-set file");
    verify->add_option("file", file)->required();

    auto* scheme = app.add_subcommand("scheme", "relations, scheme check, eigenmatrices, Krein");
    scheme->add_option("file", file)->required();

    auto* bound = app.add_subcommand("bound", "LP / absolute / antipodal bounds");
    bound->add_option("-d,--dimension", d, "ambient dimension")->required();
    bound->add_option("--annihilator", builtin, "builtin annihilator: sic | kerdock | simplex");
    bound->add_option("--file", file, "point-set file; annihilator fitted from its angles");
    bound->add_option("--mode", mode, "lower | upper");
    bound->add_option("--absolute", absolute_u, "lower set 'k,l;k,l' for the absolute bound");
    bound->add_option("--antipodal", antipodal_n, "antipodal order n (with --absolute set)");

    auto* construct = app.add_subcommand("construct", "deterministic example generators");
    construct->add_option("name", name)->required();
    construct->add_option("params", params, "integer parameters");
    construct->add_option("-o,--output", outfile, "output file (stdout if omitted)");

    auto* molien = app.add_subcommand("molien", "invariant dimensions of a finite unitary group");
    molien->add_option("group", group, "pauli:<d> | sic-d2-group | generator file")->required();
    molien->add_option("kmax", kmax);
    molien->add_option("lmax", lmax);

    auto* derive = app.add_subcommand("derive", "derived code at a point and angle");
    derive->add_option("file", file)->required();
    derive->add_option("--point", z_index, "index of the base point z");
    derive->add_option("--angle", alpha_index, "index into the angle set");
    derive->add_option("-o,--output", outfile, "output file (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);
    if (opt.threads > 0) cdl::set_thread_count(opt.threads);

    try {
        if (verify->parsed()) return cmd_verify(file, opt);
        if (scheme->parsed()) return cmd_scheme(file, opt);
        if (bound->parsed()) return cmd_bound(d, builtin, file, mode, absolute_u, antipodal_n, opt);
        if (construct->parsed()) return cmd_construct(name, params, outfile);
        if (molien->parsed()) return cmd_molien(group, kmax, lmax, opt);
        if (derive->parsed()) return cmd_derive(file, z_index, alpha_index, outfile);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
