#include "k3ff/kodaira.hpp"

#include <algorithm>
#include <climits>
#include <map>

namespace k3ff {

std::string Place::str() const {
    if (at_inf) return "t=inf";
    return k3ff::str(p);
}

std::string KodairaFiber::type_str() const {
    switch (cls) {
        case FiberClass::I: return "I" + std::to_string(n);
        case FiberClass::Istar: return "I" + std::to_string(n) + "*";
        case FiberClass::II: return "II";
        case FiberClass::III: return "III";
        case FiberClass::IV: return "IV";
        case FiberClass::IVstar: return "IV*";
        case FiberClass::IIIstar: return "III*";
        case FiberClass::IIstar: return "II*";
    }
    return "?";
}

int KodairaFiber::euler() const {
    switch (cls) {
        case FiberClass::I: return n;
        case FiberClass::Istar: return n + 6;
        case FiberClass::II: return 2;
        case FiberClass::III: return 3;
        case FiberClass::IV: return 4;
        case FiberClass::IVstar: return 8;
        case FiberClass::IIIstar: return 9;
        case FiberClass::IIstar: return 10;
    }
    return 0;
}

int KodairaFiber::components() const {
    switch (cls) {
        case FiberClass::I: return std::max(n, 1);
        case FiberClass::Istar: return n + 5;
        case FiberClass::II: return 1;
        case FiberClass::III: return 2;
        case FiberClass::IV: return 3;
        case FiberClass::IVstar: return 7;
        case FiberClass::IIIstar: return 8;
        case FiberClass::IIstar: return 9;
    }
    return 0;
}

int KodairaFiber::simple_components() const {
    switch (cls) {
        case FiberClass::I: return std::max(n, 1);
        case FiberClass::Istar: return 4;
        case FiberClass::II: return 1;
        case FiberClass::III: return 2;
        case FiberClass::IV: return 3;
        case FiberClass::IVstar: return 3;
        case FiberClass::IIIstar: return 2;
        case FiberClass::IIstar: return 1;
    }
    return 0;
}

namespace {

constexpr long kInfVal = LONG_MAX / 4;

long floordiv(long a, long b) {
    long q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

long val_at(const KT& f, const Place& pl) {
    if (f.is_zero()) return kInfVal;
    return pl.at_inf ? f.valuation_inf() : f.valuation(pl.p);
}

KodairaFiber classify(const Place& place, long v4, long v6, long vd);

}  // namespace

KodairaFiber kodaira_type_at(const WeierstrassCurve& c, const Place& place) {
    return classify(place, val_at(c.c4, place), val_at(c.c6, place), val_at(c.disc, place));
}

namespace {

KodairaFiber classify(const Place& place, long v4, long v6, long vd) {
    long k = std::min({floordiv(v4, 4), floordiv(v6, 6), floordiv(vd, 12)});
    long V4 = v4 >= kInfVal ? kInfVal : v4 - 4 * k;
    long V6 = v6 >= kInfVal ? kInfVal : v6 - 6 * k;
    long Vd = vd - 12 * k;
    (void)V6;

    KodairaFiber f;
    f.place = place;
    f.shift = static_cast<int>(k);
    if (Vd == 0) {
        f.cls = FiberClass::I;
        f.n = 0;
        return f;
    }
    if (V4 == 0) {
        f.cls = FiberClass::I;
        f.n = static_cast<int>(Vd);
        return f;
    }
    long vj = V4 >= kInfVal ? kInfVal : 3 * V4 - Vd;
    if (vj < 0) {
        f.cls = FiberClass::Istar;
        f.n = static_cast<int>(Vd - 6);
        if (f.n < 1) throw surface_error("inconsistent valuations for I_n^* fiber");
        return f;
    }
    switch (Vd) {
        case 2: f.cls = FiberClass::II; break;
        case 3: f.cls = FiberClass::III; break;
        case 4: f.cls = FiberClass::IV; break;
        case 6: f.cls = FiberClass::Istar; f.n = 0; break;
        case 8: f.cls = FiberClass::IVstar; break;
        case 9: f.cls = FiberClass::IIIstar; break;
        case 10: f.cls = FiberClass::IIstar; break;
        default: throw surface_error("unclassifiable additive fiber (disc valuation " + std::to_string(Vd) + ")");
    }
    return f;
}

}  // namespace

FiberScanner::FiberScanner(const WeierstrassCurve& c, const std::vector<KT>& extra) : curve_(c) {
    const KT* funcs[3] = {&c.c4, &c.c6, &c.disc};
    std::vector<TPoly> cand;
    for (int i = 0; i < 3; ++i) {
        if (funcs[i]->is_zero()) {
            zero_[i] = true;
            continue;
        }
        auto record = [&](const TPoly& part, long sign) {
            auto dec = squarefree_decompose(part);
            for (size_t m = 0; m < dec.size(); ++m)
                if (dec[m].deg() > 0) {
                    parts_[i].push_back({dec[m], sign * static_cast<long>(m + 1)});
                    cand.push_back(dec[m]);
                }
        };
        record(funcs[i]->num(), 1);
        record(funcs[i]->den(), -1);
    }
    for (const auto& f : extra) {
        if (f.is_zero()) continue;
        for (const auto& part : {f.num(), f.den()})
            for (const auto& sq : squarefree_decompose(part))
                if (sq.deg() > 0) cand.push_back(sq);
    }
    basis_ = gcd_free_basis(cand);
}

long FiberScanner::val(int which, const TPoly& place) const {
    if (zero_[which]) return kInfVal;
    long v = 0;
    for (const auto& pm : parts_[which])
        if ((pm.first % place).is_zero()) v += pm.second;
    return v;
}

KodairaFiber FiberScanner::at(const TPoly& place) const {
    return classify(Place::finite(place), val(0, place), val(1, place), val(2, place));
}

KodairaFiber FiberScanner::at_infinity() const {
    return classify(Place::infinity(), val_at(curve_.c4, Place::infinity()),
                    val_at(curve_.c6, Place::infinity()), val_at(curve_.disc, Place::infinity()));
}

std::vector<TPoly> gcd_free_basis(std::vector<TPoly> in) {
    std::vector<TPoly> basis;
    for (auto f : in) {
        f = f.monic();
        std::vector<TPoly> queue = {f};
        while (!queue.empty()) {
            TPoly g = queue.back();
            queue.pop_back();
            if (g.deg() <= 0) continue;
            bool split = false;
            for (size_t i = 0; i < basis.size() && !split; ++i) {
                TPoly h = gcd(g, basis[i]);
                if (h.deg() <= 0) continue;
                if (h.deg() < basis[i].deg()) {
                    TPoly rest = basis[i] / h;
                    basis[i] = h;
                    queue.push_back(rest);
                }
                if (h.deg() < g.deg()) queue.push_back(g / h);
                split = true;  // g's h-part is now covered by basis[i]
            }
            if (!split) basis.push_back(g);
        }
    }
    // remove duplicates
    std::vector<TPoly> out;
    for (const auto& b : basis) {
        bool dup = false;
        for (const auto& o : out)
            if (o == b) dup = true;
        if (!dup) out.push_back(b);
    }
    return out;
}

std::string FibrationReport::config() const {
    // aggregate geometric counts per type
    std::map<std::pair<int, std::string>, int> counts;  // key: (-euler, type) for ordering
    for (const auto& f : fibers) counts[{-f.euler(), f.type_str()}] += f.place.degree();
    std::string s;
    for (const auto& kv : counts) {
        if (!s.empty()) s += "+";
        if (kv.second > 1) s += std::to_string(kv.second);
        s += kv.first.second;
    }
    return s.empty() ? "smooth" : s;
}

std::string FibrationReport::config_with_places() const {
    std::string s;
    for (const auto& f : fibers) {
        if (!s.empty()) s += ", ";
        s += f.type_str() + " at " + f.place.str();
        if (f.place.degree() > 1) s += " (deg " + std::to_string(f.place.degree()) + ")";
    }
    return s;
}

FibrationReport fiber_configuration(const WeierstrassCurve& c) {
    FiberScanner scan(c);
    FibrationReport rep;
    for (const auto& p : scan.basis()) {
        KodairaFiber f = scan.at(p);
        if (!f.is_good()) rep.fibers.push_back(f);
    }
    KodairaFiber finf = scan.at_infinity();
    if (!finf.is_good()) rep.fibers.push_back(finf);
    rep.euler_total = 0;
    for (const auto& f : rep.fibers) rep.euler_total += f.euler() * f.place.degree();
    // canonical order: big fibers first, then by type string, then place
    std::sort(rep.fibers.begin(), rep.fibers.end(), [](const KodairaFiber& a, const KodairaFiber& b) {
        if (a.euler() != b.euler()) return a.euler() > b.euler();
        if (a.type_str() != b.type_str()) return a.type_str() < b.type_str();
        return a.place.str() < b.place.str();
    });
    return rep;
}

}  // namespace k3ff
