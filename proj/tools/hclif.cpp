// Command-line front end: builds objects from flags or JSON input files, runs
// the solvers and verifiers, and prints serialized tables and residual
// reports. Exit status: 0 success, 1 usage error, 2 domain/precondition error.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hclif/besselexp.hpp"
#include "hclif/ck.hpp"
#include "hclif/hermite.hpp"
#include "hclif/serialize.hpp"
#include "hclif/vekua.hpp"

namespace {

using hclif::Json;

// Flag-level validation failures; reported as usage errors (exit 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int max_order_cap() {
    const char* env = std::getenv("HCLIF_MAX_K");
    if (!env || !*env) return 32;
    try {
        int v = std::stoi(env);
        if (v < 0) throw std::invalid_argument("negative");
        return v;
    } catch (const std::exception&) {
        throw UsageError("HCLIF_MAX_K must be a nonnegative integer");
    }
}

void check_cap(int value, const char* flag) {
    int cap = max_order_cap();
    if (value < 0) throw UsageError(std::string(flag) + " must be nonnegative");
    if (value > cap)
        throw UsageError(std::string(flag) + " exceeds HCLIF_MAX_K (" +
                         std::to_string(cap) + ")");
}

hclif::Rational rational_flag(const std::string& text, const char* flag) {
    try {
        return hclif::parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("invalid rational for ") + flag + ": " + e.what());
    }
}

Json load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void emit(const Json& j) { std::cout << hclif::dump_json(j); }

// --- hermite ---

struct HermiteArgs {
    int type = 1, p = 0, n = 1;
};

void run_hermite(const HermiteArgs& a) {
    hclif::PolyFunction rod = hclif::hermite_rodrigues(a.type, a.p, a.n);
    hclif::PolyFunction closed = hclif::hermite_closed_form(a.type, a.p, a.n);
    Json out;
    out["type"] = a.type;
    out["p"] = a.p;
    out["n"] = a.n;
    out["rodrigues"] = hclif::to_json(rod);
    out["closed_form"] = hclif::to_json(closed);
    out["verdict"] = rod == closed ? "equal" : "different";
    emit(out);
}

// --- ck ---

struct CkArgs {
    std::string input;
    int K = 4;
    bool expand = false;
};

void run_ck(const CkArgs& a) {
    check_cap(a.K, "--K");
    Json in = load_input(a.input);
    if (!in.is_object() || !in.contains("class"))
        throw std::invalid_argument("input must be an object with a \"class\" field");
    int cls = in["class"].is_number_integer() ? in["class"].get<int>() : -1;
    hclif::CKTable table;
    auto poly = [&](const char* key) {
        if (!in.contains(key))
            throw std::invalid_argument(std::string("missing seed: ") + key);
        return hclif::polyfunction_from_json(in[key]);
    };
    auto s_field = [&]() {
        if (!in.contains("s") || !in["s"].is_number_integer())
            throw std::invalid_argument("this class needs an integer \"s\" field");
        return in["s"].get<int>();
    };
    switch (cls) {
        case 1: table = hclif::ck_class1(poly("A0"), poly("D0"), a.K); break;
        case 2: table = hclif::ck_class2(poly("C0"), poly("D0"), s_field(), a.K); break;
        case 3: table = hclif::ck_class3(poly("A0"), poly("B0"), s_field(), a.K); break;
        default: throw std::invalid_argument("\"class\" must be 1, 2 or 3");
    }
    hclif::PolyFunction f = hclif::assemble(table);
    auto [s1, s2] = hclif::residuals_submonogenic(f);
    Json out;
    out["table"] = hclif::to_json(table);
    Json rep;
    rep["terminated"] = table.terminated;
    rep["submonogenic_zero"] = s1.is_zero() && s2.is_zero();
    out["residual_report"] = std::move(rep);
    if (a.expand) out["expanded"] = hclif::to_json(f);
    emit(out);
}

// --- vekua / powers ---

Json axial_output(const hclif::AxialSolution& sol, bool expand) {
    hclif::AxialResidualReport rep = hclif::axial_residuals(sol);
    Json out;
    out["solution"] = hclif::to_json(sol);
    Json r;
    r["all_zero"] = rep.all_zero;
    r["nonzero"] = rep.nonzero;
    r["terminated"] = hclif::axial_terminated(sol);
    out["residual_report"] = std::move(r);
    if (expand) out["expanded"] = hclif::to_json(hclif::axial_expand(sol));
    return out;
}

struct VekuaArgs {
    std::string input;
    int K = 4, M = 6;
    bool expand = false;
};

void run_vekua(const VekuaArgs& a) {
    check_cap(a.K, "--K");
    check_cap(a.M, "--M");
    Json in = load_input(a.input);
    std::string kind = in.is_object() && in.contains("kind") && in["kind"].is_string()
                           ? in["kind"].get<std::string>()
                           : "";
    if (!in.contains("n") || !in["n"].is_number_integer())
        throw std::invalid_argument("input needs an integer \"n\" field");
    int n = in["n"].get<int>();
    auto series = [&](const char* key) {
        if (!in.contains(key))
            throw std::invalid_argument(std::string("missing initial series: ") + key);
        return hclif::nuseries_from_json(in[key], n);
    };
    auto s_field = [&]() {
        if (!in.contains("s") || !in["s"].is_number_integer())
            throw std::invalid_argument("this kind needs an integer \"s\" field");
        return in["s"].get<int>();
    };
    hclif::AxialSolution sol;
    if (kind == "plain")
        sol = hclif::vekua_solve_plain(series("a1"), series("a2"), series("d1"),
                                       series("d2"), a.K, a.M);
    else if (kind == "z0_power")
        sol = hclif::vekua_solve_z0power(series("c"), series("d1"), series("d2"),
                                         s_field(), a.K, a.M);
    else if (kind == "z0bar_power")
        sol = hclif::vekua_solve_z0barpower(series("a1"), series("a2"), series("b"),
                                            s_field(), a.K, a.M);
    else
        throw std::invalid_argument(
            "input \"kind\" must be plain, z0_power or z0bar_power");
    emit(axial_output(sol, a.expand));
}

struct PowersArgs {
    std::string s = "1", alpha1 = "0", alpha2 = "0", delta1 = "0", delta2 = "0";
    int n = 1, K = 4;
    bool expand = false;
};

void run_powers(const PowersArgs& a) {
    check_cap(a.K, "--K");
    hclif::Rational s = rational_flag(a.s, "--s");
    hclif::Rational a1 = rational_flag(a.alpha1, "--alpha1");
    hclif::Rational a2 = rational_flag(a.alpha2, "--alpha2");
    hclif::Rational d1 = rational_flag(a.delta1, "--delta1");
    hclif::Rational d2 = rational_flag(a.delta2, "--delta2");
    if (a.n < 1) throw UsageError("--n must be at least 1");
    emit(axial_output(hclif::generalized_powers(s, a1, a2, d1, d2, a.n, a.K),
                      a.expand));
}

// --- bessel ---

struct BesselArgs {
    int alpha = 0;
    std::string kind = "J";
    std::optional<double> t;
    std::string lambda = "1", mu = "1", alpha1 = "0", alpha2 = "0";
    int n = 1, M = 12;
    std::string format = "json";
};

void run_bessel(const BesselArgs& a) {
    if (a.format != "json" && a.format != "csv")
        throw UsageError("--format must be json or csv");
    if (a.t.has_value()) {
        if (a.kind != "J" && a.kind != "I") throw UsageError("--kind must be J or I");
        if (a.alpha < 0) throw UsageError("--alpha must be nonnegative");
        if (*a.t < 0) throw UsageError("--t must be nonnegative");
        hclif::BesselKind kind =
            a.kind == "J" ? hclif::BesselKind::J : hclif::BesselKind::I;
        double value = hclif::bessel_series(a.alpha, kind, *a.t);
        if (a.format == "csv") {
            std::printf("%.17g,%.17g\n", *a.t, value);
            return;
        }
        Json out;
        out["alpha"] = a.alpha;
        out["kind"] = a.kind;
        out["t"] = *a.t;
        out["value"] = value;
        emit(out);
        return;
    }
    check_cap(a.M, "--M");
    hclif::ExpParams p;
    p.lambda = rational_flag(a.lambda, "--lambda");
    p.mu = rational_flag(a.mu, "--mu");
    p.n = a.n;
    p.alpha1 = rational_flag(a.alpha1, "--alpha1");
    p.alpha2 = rational_flag(a.alpha2, "--alpha2");
    if (a.format == "csv") throw UsageError("--format csv needs --t");
    hclif::ExpSolution sol = hclif::exp_solution(p, a.M);
    hclif::ExpResiduals res = hclif::exp_residuals(sol);
    Json out;
    out["solution"] = hclif::to_json(sol);
    Json rep;
    rep["order_checked"] = a.M - 1;
    rep["systems_vanish"] = hclif::exp_residuals_vanish_to(res, a.M - 1);
    out["residual_report"] = std::move(rep);
    emit(out);
}

// --- verify ---

void run_verify(const std::string& input) {
    hclif::PolyFunction f = hclif::polyfunction_from_json(load_input(input));
    auto [r1, r2] = hclif::residuals_hmonogenic(f);
    auto [s1, s2] = hclif::residuals_submonogenic(f);
    hclif::ResidualQuad q = hclif::residuals_hmsF(f);
    hclif::ComponentResiduals w = hclif::component_residuals(hclif::decompose(f));
    auto [g, h] = hclif::inhomogeneous_data(f);
    Json out;
    out["n"] = f.n();
    out["has_z0"] = f.has_z0();
    Json herm;
    herm["r1_zero"] = r1.is_zero();
    herm["r2_zero"] = r2.is_zero();
    out["hmonogenic"] = std::move(herm);
    Json sub;
    sub["s1_zero"] = s1.is_zero();
    sub["s2_zero"] = s2.is_zero();
    out["submonogenic"] = std::move(sub);
    Json quad;
    quad["q1_zero"] = q.q1.is_zero();
    quad["q2_zero"] = q.q2.is_zero();
    quad["q3_zero"] = q.q3.is_zero();
    quad["q4_zero"] = q.q4.is_zero();
    out["refined"] = std::move(quad);
    Json comp;
    comp["w1a_zero"] = w.w1a.is_zero();
    comp["w1b_zero"] = w.w1b.is_zero();
    comp["w2a_zero"] = w.w2a.is_zero();
    comp["w2b_zero"] = w.w2b.is_zero();
    out["component"] = std::move(comp);
    Json inh;
    inh["g_zero"] = g.is_zero();
    inh["h_zero"] = h.is_zero();
    out["inhomogeneous_data"] = std::move(inh);
    out["weak_system_zero"] = s1.is_zero() && s2.is_zero() && w.w1a.is_zero() &&
                              w.w1b.is_zero() && w.w2a.is_zero() && w.w2b.is_zero();
    out["full_system_zero"] = r1.is_zero() && r2.is_zero() && q.q1.is_zero() &&
                              q.q2.is_zero() && q.q3.is_zero() && q.q4.is_zero();
    emit(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers and verifiers for Hermitian Clifford systems"};
    app.require_subcommand(1);

    HermiteArgs hermite;
    CLI::App* sub_hermite =
        app.add_subcommand("hermite", "Clifford-Hermite polynomial, both routes");
    sub_hermite->add_option("--type", hermite.type, "family selector, 1..4")->required();
    sub_hermite->add_option("--p", hermite.p, "polynomial index")->required();
    sub_hermite->add_option("--n", hermite.n, "complex dimension")->required();

    CkArgs ck;
    CLI::App* sub_ck = app.add_subcommand("ck", "series extension from initial data");
    sub_ck->add_option("--input", ck.input, "JSON with class, seeds and s")->required();
    sub_ck->add_option("--K", ck.K, "truncation index");
    sub_ck->add_flag("--expand", ck.expand, "include the assembled function");

    VekuaArgs vekua;
    CLI::App* sub_vekua = app.add_subcommand("vekua", "radial system solver");
    sub_vekua->add_option("--input", vekua.input, "JSON with kind, n and initial series")
        ->required();
    sub_vekua->add_option("--K", vekua.K, "nu0-power truncation");
    sub_vekua->add_option("--M", vekua.M, "nu-order bound for initial data");
    sub_vekua->add_flag("--expand", vekua.expand, "include the expanded polynomial");

    PowersArgs powers;
    CLI::App* sub_powers = app.add_subcommand("powers", "generalized power solutions");
    sub_powers->add_option("--s", powers.s, "exponent, rational");
    sub_powers->add_option("--alpha1", powers.alpha1, "a1 amplitude");
    sub_powers->add_option("--alpha2", powers.alpha2, "a2 amplitude");
    sub_powers->add_option("--delta1", powers.delta1, "d1 amplitude");
    sub_powers->add_option("--delta2", powers.delta2, "d2 amplitude");
    sub_powers->add_option("--n", powers.n, "complex dimension")->required();
    sub_powers->add_option("--K", powers.K, "nu0-power truncation");
    sub_powers->add_flag("--expand", powers.expand, "include the expanded polynomial");

    BesselArgs bessel;
    CLI::App* sub_bessel =
        app.add_subcommand("bessel", "numeric Bessel values or exponential solutions");
    sub_bessel->add_option("--alpha", bessel.alpha, "numeric mode: order");
    sub_bessel->add_option("--kind", bessel.kind, "numeric mode: J or I");
    double tval = 0;
    CLI::Option* topt = sub_bessel->add_option("--t", tval, "numeric mode: argument");
    sub_bessel->add_option("--lambda", bessel.lambda, "series mode: lambda");
    sub_bessel->add_option("--mu", bessel.mu, "series mode: mu");
    sub_bessel->add_option("--alpha1", bessel.alpha1, "series mode: b amplitude");
    sub_bessel->add_option("--alpha2", bessel.alpha2, "series mode: c amplitude");
    sub_bessel->add_option("--n", bessel.n, "series mode: dimension and order");
    sub_bessel->add_option("--M", bessel.M, "series mode: truncation");
    sub_bessel->add_option("--format", bessel.format, "json or csv");

    std::string verify_input;
    CLI::App* sub_verify =
        app.add_subcommand("verify", "residual families of a serialized function");
    sub_verify->add_option("--input", verify_input, "JSON PolyFunction")->required();

    try {
        app.parse(argc, argv);
        if (topt->count()) bessel.t = tval;
        if (sub_hermite->parsed()) run_hermite(hermite);
        else if (sub_ck->parsed()) run_ck(ck);
        else if (sub_vekua->parsed()) run_vekua(vekua);
        else if (sub_powers->parsed()) run_powers(powers);
        else if (sub_bessel->parsed()) run_bessel(bessel);
        else if (sub_verify->parsed()) run_verify(verify_input);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
