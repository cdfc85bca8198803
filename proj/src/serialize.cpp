#include "hclif/serialize.hpp"

#include <stdexcept>

namespace hclif {

namespace {

const Json& field(const Json& j, const char* k) {
    if (!j.is_object()) throw std::invalid_argument("expected an object");
    auto it = j.find(k);
    if (it == j.end()) throw std::invalid_argument(std::string("missing field: ") + k);
    return *it;
}

int int_field(const Json& j, const char* k) {
    const Json& v = field(j, k);
    if (!v.is_number_integer()) throw std::invalid_argument(std::string("field must be an integer: ") + k);
    return v.get<int>();
}

bool bool_field(const Json& j, const char* k) {
    const Json& v = field(j, k);
    if (!v.is_boolean()) throw std::invalid_argument(std::string("field must be a boolean: ") + k);
    return v.get<bool>();
}

std::string string_field(const Json& j, const char* k) {
    const Json& v = field(j, k);
    if (!v.is_string()) throw std::invalid_argument(std::string("field must be a string: ") + k);
    return v.get<std::string>();
}

const Json& array_field(const Json& j, const char* k) {
    const Json& v = field(j, k);
    if (!v.is_array()) throw std::invalid_argument(std::string("field must be an array: ") + k);
    return v;
}

Rational rational_from(const Json& v) {
    if (!v.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
    return parse_rational(v.get<std::string>());
}

std::vector<PolyFunction> polyvec_from_json(const Json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("expected an array of polynomials");
    std::vector<PolyFunction> out;
    out.reserve(arr.size());
    for (const Json& e : arr) out.push_back(polyfunction_from_json(e));
    return out;
}

Json polyvec_to_json(const std::vector<PolyFunction>& v) {
    Json arr = Json::array();
    for (const auto& g : v) arr.push_back(to_json(g));
    return arr;
}

std::vector<NuSeries> nuvec_from_json(const Json& arr, int n) {
    if (!arr.is_array()) throw std::invalid_argument("expected an array of series");
    std::vector<NuSeries> out;
    out.reserve(arr.size());
    for (const Json& e : arr) out.push_back(nuseries_from_json(e, n));
    return out;
}

Json nuvec_to_json(const std::vector<NuSeries>& v) {
    Json arr = Json::array();
    for (const auto& s : v) arr.push_back(to_json(s));
    return arr;
}

}  // namespace

Json to_json(const Rational& r) { return rational_str(r); }

Rational rational_from_json(const Json& j) { return rational_from(j); }

Json to_json(const CliffordElement& x) {
    Json j;
    j["n"] = x.algebra().n;
    j["extended"] = x.algebra().extended;
    Json terms = Json::array();
    for (const auto& [b, c] : x.terms()) {
        Json t;
        t["blade"] = blade_indices(b);
        t["re"] = rational_str(c.re);
        t["im"] = rational_str(c.im);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

CliffordElement clifford_from_json(const Json& j) {
    Algebra alg{int_field(j, "n"), bool_field(j, "extended")};
    check_algebra(alg);
    CliffordElement x = CliffordElement::zero(alg);
    for (const Json& t : array_field(j, "terms")) {
        const Json& bl = array_field(t, "blade");
        std::vector<int> idx;
        for (const Json& g : bl) {
            if (!g.is_number_integer()) throw std::invalid_argument("blade indices must be integers");
            idx.push_back(g.get<int>());
        }
        Blade b = blade_from_indices(idx, alg.generators());
        GaussianRational c{rational_from(field(t, "re")), rational_from(field(t, "im"))};
        x.add_term(b, std::move(c));
    }
    return x;
}

Json to_json(const PolyFunction& g) {
    Json j;
    j["n"] = g.n();
    j["has_z0"] = g.has_z0();
    j["weight"] = g.weight() == Weight::gaussian ? "gaussian" : "none";
    Json terms = Json::array();
    for (const auto& [m, c] : g.terms()) {
        Json t;
        Json exps = Json::object();
        for (const auto& [v, e] : m.exps) exps[var_str(v)] = e;
        t["exponents"] = std::move(exps);
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

PolyFunction polyfunction_from_json(const Json& j) {
    int n = int_field(j, "n");
    bool has_z0 = bool_field(j, "has_z0");
    std::string w = string_field(j, "weight");
    if (w != "none" && w != "gaussian")
        throw std::invalid_argument("weight must be \"none\" or \"gaussian\"");
    PolyFunction g(n, has_z0, w == "gaussian" ? Weight::gaussian : Weight::none);
    for (const Json& t : array_field(j, "terms")) {
        const Json& exps = field(t, "exponents");
        if (!exps.is_object()) throw std::invalid_argument("exponents must be an object");
        Monomial m;
        for (auto it = exps.begin(); it != exps.end(); ++it) {
            if (!it.value().is_number_integer())
                throw std::invalid_argument("exponents must be integers");
            m.exps[parse_var(it.key())] = it.value().get<int>();
        }
        g.add_term(m, clifford_from_json(field(t, "coeff")));
    }
    // the weight of an empty sum is immaterial; normalize for stable printing
    return g.is_zero() ? PolyFunction::zero(n, has_z0) : g;
}

Json to_json(const CKTable& t) {
    Json j;
    j["class"] = t.cls == CKClass::one ? 1 : t.cls == CKClass::two ? 2 : 3;
    j["s"] = t.s;
    j["K"] = t.K;
    j["n"] = t.n;
    j["terminated"] = t.terminated;
    j["A"] = polyvec_to_json(t.A);
    j["B"] = polyvec_to_json(t.B);
    j["C"] = polyvec_to_json(t.C);
    j["D"] = polyvec_to_json(t.D);
    return j;
}

CKTable cktable_from_json(const Json& j) {
    CKTable t;
    int cls = int_field(j, "class");
    if (cls < 1 || cls > 3) throw std::invalid_argument("class must be 1, 2 or 3");
    t.cls = cls == 1 ? CKClass::one : cls == 2 ? CKClass::two : CKClass::three;
    t.s = int_field(j, "s");
    t.K = int_field(j, "K");
    t.n = int_field(j, "n");
    t.terminated = bool_field(j, "terminated");
    t.A = polyvec_from_json(array_field(j, "A"));
    t.B = polyvec_from_json(array_field(j, "B"));
    t.C = polyvec_from_json(array_field(j, "C"));
    t.D = polyvec_from_json(array_field(j, "D"));
    return t;
}

Json to_json(const CKDoubleTable& t) {
    Json j;
    j["K"] = t.K;
    j["n"] = t.n;
    auto grid = [](const std::vector<std::vector<PolyFunction>>& rows) {
        Json arr = Json::array();
        for (const auto& row : rows) arr.push_back(polyvec_to_json(row));
        return arr;
    };
    j["A"] = grid(t.A);
    j["B"] = grid(t.B);
    j["C"] = grid(t.C);
    j["D"] = grid(t.D);
    return j;
}

CKDoubleTable ckdoubletable_from_json(const Json& j) {
    CKDoubleTable t;
    t.K = int_field(j, "K");
    t.n = int_field(j, "n");
    auto grid = [](const Json& arr) {
        if (!arr.is_array()) throw std::invalid_argument("expected a grid of polynomials");
        std::vector<std::vector<PolyFunction>> rows;
        for (const Json& row : arr) rows.push_back(polyvec_from_json(row));
        return rows;
    };
    t.A = grid(array_field(j, "A"));
    t.B = grid(array_field(j, "B"));
    t.C = grid(array_field(j, "C"));
    t.D = grid(array_field(j, "D"));
    return t;
}

Json to_json(const BetaPoly& p) {
    Json arr = Json::array();
    for (int k = 0; k <= p.n(); ++k) arr.push_back(rational_str(p.coeff(k)));
    return arr;
}

BetaPoly betapoly_from_json(const Json& j, int n) {
    if (!j.is_array()) throw std::invalid_argument("beta polynomial must be an array");
    if (static_cast<int>(j.size()) != n + 1)
        throw std::invalid_argument("beta polynomial has the wrong length");
    std::vector<Rational> raw;
    raw.reserve(j.size());
    for (const Json& e : j) raw.push_back(rational_from(e));
    return beta_reduce(raw, n);
}

Json to_json(const NuSeries& s) {
    Json j;
    j["offset"] = rational_str(s.offset());
    Json coeffs = Json::array();
    for (const auto& p : s.coeffs()) coeffs.push_back(to_json(p));
    j["coeffs"] = std::move(coeffs);
    return j;
}

NuSeries nuseries_from_json(const Json& j, int n) {
    Rational offset = rational_from(field(j, "offset"));
    const Json& coeffs = array_field(j, "coeffs");
    NuSeries out = NuSeries::zero(n);
    Rational e = offset;
    for (const Json& c : coeffs) {
        out += NuSeries::monomial(n, betapoly_from_json(c, n), e);
        e += 1;
    }
    return out;
}

namespace {

const char* kind_name(AxialKind k) {
    switch (k) {
        case AxialKind::plain: return "plain";
        case AxialKind::z0_power: return "z0_power";
        default: return "z0bar_power";
    }
}

}  // namespace

Json to_json(const AxialSolution& sol) {
    Json j;
    j["kind"] = kind_name(sol.kind);
    j["s"] = sol.s;
    j["K"] = sol.K;
    j["M"] = sol.M;
    j["n"] = sol.n;
    j["a1"] = nuvec_to_json(sol.a1);
    j["a2"] = nuvec_to_json(sol.a2);
    j["b"] = nuvec_to_json(sol.b);
    j["c"] = nuvec_to_json(sol.c);
    j["d1"] = nuvec_to_json(sol.d1);
    j["d2"] = nuvec_to_json(sol.d2);
    return j;
}

AxialSolution axialsolution_from_json(const Json& j) {
    AxialSolution sol;
    std::string kind = string_field(j, "kind");
    if (kind == "plain")
        sol.kind = AxialKind::plain;
    else if (kind == "z0_power")
        sol.kind = AxialKind::z0_power;
    else if (kind == "z0bar_power")
        sol.kind = AxialKind::z0bar_power;
    else
        throw std::invalid_argument("unknown axial kind: " + kind);
    sol.s = int_field(j, "s");
    sol.K = int_field(j, "K");
    sol.M = int_field(j, "M");
    sol.n = int_field(j, "n");
    if (sol.n < 1) throw std::invalid_argument("dimension must be positive");
    sol.a1 = nuvec_from_json(array_field(j, "a1"), sol.n);
    sol.a2 = nuvec_from_json(array_field(j, "a2"), sol.n);
    sol.b = nuvec_from_json(array_field(j, "b"), sol.n);
    sol.c = nuvec_from_json(array_field(j, "c"), sol.n);
    sol.d1 = nuvec_from_json(array_field(j, "d1"), sol.n);
    sol.d2 = nuvec_from_json(array_field(j, "d2"), sol.n);
    return sol;
}

Json to_json(const ExpSolution& sol) {
    Json j;
    j["n"] = sol.params.n;
    j["M"] = sol.M;
    j["lambda"] = rational_str(sol.params.lambda);
    j["mu"] = rational_str(sol.params.mu);
    j["alpha1"] = rational_str(sol.params.alpha1);
    j["alpha2"] = rational_str(sol.params.alpha2);
    Json pre;
    pre["base"] = rational_str(sol.prefactor.base);
    pre["half_power"] = sol.prefactor.half_power;
    j["prefactor"] = std::move(pre);
    j["a1"] = to_json(sol.a1);
    j["a2"] = to_json(sol.a2);
    j["b"] = to_json(sol.b);
    j["c"] = to_json(sol.c);
    j["d1"] = to_json(sol.d1);
    j["d2"] = to_json(sol.d2);
    return j;
}

ExpSolution expsolution_from_json(const Json& j) {
    ExpSolution sol;
    sol.params.n = int_field(j, "n");
    if (sol.params.n < 1) throw std::invalid_argument("dimension must be positive");
    sol.M = int_field(j, "M");
    sol.params.lambda = rational_from(field(j, "lambda"));
    sol.params.mu = rational_from(field(j, "mu"));
    sol.params.alpha1 = rational_from(field(j, "alpha1"));
    sol.params.alpha2 = rational_from(field(j, "alpha2"));
    const Json& pre = field(j, "prefactor");
    sol.prefactor.base = rational_from(field(pre, "base"));
    sol.prefactor.half_power = int_field(pre, "half_power");
    int n = sol.params.n;
    sol.a1 = nuseries_from_json(field(j, "a1"), n);
    sol.a2 = nuseries_from_json(field(j, "a2"), n);
    sol.b = nuseries_from_json(field(j, "b"), n);
    sol.c = nuseries_from_json(field(j, "c"), n);
    sol.d1 = nuseries_from_json(field(j, "d1"), n);
    sol.d2 = nuseries_from_json(field(j, "d2"), n);
    return sol;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hclif
