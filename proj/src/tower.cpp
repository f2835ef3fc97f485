#include "k3ff/tower.hpp"

namespace k3ff {

KT substitute_t(const KT& f, const KT& g) {
    KT n = f.num().eval<KT>(g);
    KT d = f.den().eval<KT>(g);
    return n / d;
}

KS substitute_s(const KS& f, const Scalar& value) {
    Scalar n = f.num().eval<Scalar>(value);
    Scalar d = f.den().eval<Scalar>(value);
    if (d.is_zero()) throw field_error("specialization hits a pole in s");
    return KS(SPoly(n / d));
}

KT substitute_s(const KT& f, const Scalar& value) {
    auto map_poly = [&](const TPoly& p) {
        std::vector<KS> cs;
        cs.reserve(static_cast<size_t>(p.deg()) + 1);
        for (int i = 0; i <= p.deg(); ++i) cs.push_back(substitute_s(p[i], value));
        return TPoly(std::move(cs));
    };
    return KT(map_poly(f.num()), map_poly(f.den()));
}

namespace {

template <class F, class SqrtF>
bool sqrt_poly_part(const Poly<F>& monic_in, Poly<F>& root, SqrtF&&) {
    auto layers = squarefree_decompose(monic_in);
    Poly<F> r(1);
    for (size_t i = 0; i < layers.size(); ++i) {
        int mult = static_cast<int>(i) + 1;
        if (layers[i].deg() <= 0) continue;
        if (mult % 2 != 0) return false;
        r = r * layers[i].pow(static_cast<unsigned>(mult / 2));
    }
    root = r;
    return true;
}

bool sqrt_scalar(const Scalar& c, Scalar& out) { return c.sqrt_in_field(out); }

bool sqrt_ks(const KS& f, KS& out) {
    if (f.is_zero()) {
        out = KS(0);
        return true;
    }
    Scalar lead = f.num().lead();
    SPoly nm = f.num().monic(), dm = f.den();
    SPoly rn, rd;
    if (!sqrt_poly_part(nm, rn, sqrt_scalar)) return false;
    if (!sqrt_poly_part(dm, rd, sqrt_scalar)) return false;
    Scalar rl;
    if (!sqrt_scalar(lead, rl)) return false;
    out = KS(rn.scaled(rl), rd);
    return true;
}

}  // namespace

bool sqrt_in_tower(const KT& f, KT& out) {
    if (f.is_zero()) {
        out = KT(0);
        return true;
    }
    KS lead = f.num().lead();
    TPoly nm = f.num().monic(), dm = f.den();
    TPoly rn, rd;
    if (!sqrt_poly_part(nm, rn, sqrt_ks)) return false;
    if (!sqrt_poly_part(dm, rd, sqrt_ks)) return false;
    KS rl;
    if (!sqrt_ks(lead, rl)) return false;
    out = KT(rn.scaled(rl), rd);
    return true;
}

namespace {

bool needs_parens(const std::string& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '+' || c == '*' || c == '/') return true;
        if (c == '-' && i > 0) return true;
    }
    return false;
}

template <class F>
std::string poly_str(const Poly<F>& p, const char* var, std::string (*coeff)(const F&)) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.deg(); i >= 0; --i) {
        const F& c = p[i];
        if (c.is_zero()) continue;
        std::string cs = coeff(c);
        bool wrap = needs_parens(cs);
        // a leading '-' only separates terms when it is not about to be
        // swallowed by a parenthesis
        if (!out.empty() && (wrap || cs[0] != '-')) out += "+";
        if (i == 0) {
            out += wrap && !out.empty() ? "(" + cs + ")" : cs;
            continue;
        }
        std::string head;
        if (cs == "1")
            head = "";
        else if (cs == "-1")
            head = "-";
        else
            head = (wrap ? "(" + cs + ")" : cs) + "*";
        out += head + var + (i == 1 ? "" : "^" + std::to_string(i));
    }
    return out;
}

std::string scalar_str(const Scalar& x) { return x.str(); }
std::string ks_str(const KS& f) { return str(f); }

}  // namespace

std::string str(const Scalar& x) { return x.str(); }

std::string str(const SPoly& p) { return poly_str<Scalar>(p, "s", scalar_str); }

std::string str(const KS& f) {
    std::string n = str(f.num());
    if (f.is_poly()) return n;
    std::string d = str(f.den());
    if (needs_parens(n)) n = "(" + n + ")";
    if (needs_parens(d) || f.den().deg() > 0) d = "(" + d + ")";
    return n + "/" + d;
}

std::string str(const TPoly& p) { return poly_str<KS>(p, "t", ks_str); }

std::string str(const KT& f) {
    std::string n = str(f.num());
    if (f.is_poly()) return n;
    std::string d = str(f.den());
    if (needs_parens(n)) n = "(" + n + ")";
    if (needs_parens(d) || f.den().deg() > 0) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace k3ff
