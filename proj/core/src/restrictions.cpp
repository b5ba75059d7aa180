#include "sextic/restrictions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sextic {

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

std::string join(const std::vector<int>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
    return out.str();
}

std::string join(const std::vector<CompactSurface>& parts) {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : " u ") + to_string(p);
    return out.empty() ? "empty" : out;
}

int nonpositive_count(const std::vector<CompactSurface>& parts) {
    return static_cast<int>(std::count_if(parts.begin(), parts.end(),
                                          [](const auto& s) { return euler_characteristic(s) <= 0; }));
}

bool all_orientable(const std::vector<CompactSurface>& parts) {
    return std::all_of(parts.begin(), parts.end(), [](const auto& s) { return s.is_orientable(); });
}

bool is_annulus_mobius(std::vector<CompactSurface> parts) {
    std::sort(parts.begin(), parts.end());
    std::vector<CompactSurface> expected{CompactSurface::annulus(), CompactSurface::mobius_band()};
    std::sort(expected.begin(), expected.end());
    return parts == expected;
}

// Family parameters of a pair scheme on `ambient` whose plus-side type is `big`.
std::optional<FamilyParams> family(const Scheme& s, CubicAmbient ambient, SurfaceKind big) {
    if (s.ambient() != ambient || s.has_forests()) return std::nullopt;
    auto c = classify_shape(s);
    if (c.shape != PairShape::Family || !c.params || c.params->big != big) return std::nullopt;
    return c.params;
}

std::string params_text(const FamilyParams& p) {
    std::ostringstream out;
    out << "(alpha, beta, gamma) = (" << p.alpha << ", " << p.beta << ", " << p.gamma << ")";
    return out.str();
}

RuleCheck harnack(const Scheme& s) {
    const int n = b0(s);
    return {true, n <= harnack_bound, "b0 = " + std::to_string(n) + ", bound " + std::to_string(harnack_bound)};
}

RuleCheck lemma(const Scheme& s) {
    RuleCheck out{true, false, {}};
    std::ostringstream detail;
    for (const auto& hp : colorings(s)) {
        const int plus_bad = nonpositive_count(hp.plus);
        const int minus_bad = nonpositive_count(hp.minus);
        // two non-positive minus parts: only the annulus plus Moebius band, with
        // cores dual to w1, which forces the plus side to be orientable
        const bool exceptional = is_annulus_mobius(hp.minus) && all_orientable(hp.plus);
        const bool ok = plus_bad <= 1 && (minus_bad <= 1 || exceptional);
        detail << "B+ = " << join(hp.plus) << " [" << plus_bad << " with chi <= 0]; B- = " << join(hp.minus) << " ["
               << minus_bad << " with chi <= 0" << (exceptional ? ", annulus + Moebius band" : "") << "] -> "
               << (ok ? "ok" : "fails") << "\n";
        out.holds = out.holds || ok;
    }
    out.detail = detail.str();
    if (!out.detail.empty()) out.detail.pop_back();
    return out;
}

RuleCheck rp2_s2_congruence(const Scheme& s) {
    const int n = b0(s);
    if (s.ambient() != CubicAmbient::RP2_S2 || (n != 4 && n != 5)) return {};
    const auto chis = bounded_surface_chis(s);
    const std::set<int> wanted = n == 5 ? std::set<int>{5} : std::set<int>{4, 6};
    const bool ok = std::any_of(chis.begin(), chis.end(), [&](int c) { return wanted.count(mod(c, 8)) > 0; });
    std::vector<int> residues;
    for (int c : chis) residues.push_back(mod(c, 8));
    return {true, ok,
            "b0 = " + std::to_string(n) + "; chi(B1) over bounded surfaces {" + join(chis) + "} = {" + join(residues) +
                "} mod 8; need " + (n == 5 ? "5" : "4 or 6")};
}

RuleCheck rokhlin_kgk(const Scheme& s) {
    const auto p = family(s, CubicAmbient::RP2_T3, SurfaceKind::sphere());
    if (!p || p->gamma != 1 || (p->alpha + p->beta != 3 && p->alpha + p->beta != 4)) return {};
    const int chi = p->alpha - p->beta + 1;
    const bool m_curve = p->alpha + p->beta == 4;
    const bool ok = m_curve ? mod(chi, 8) == 3 : (mod(chi, 8) == 2 || mod(chi, 8) == 4);
    return {true, ok,
            params_text(*p) + "; chi(B+) = alpha - beta + 1 = " + std::to_string(chi) + " = " +
                std::to_string(mod(chi, 8)) + " mod 8; need " + (m_curve ? "3" : "2 or 4")};
}

RuleCheck handle_mod4(const Scheme& s, SurfaceKind big, int shift) {
    const auto p = family(s, CubicAmbient::RP2_T3, big);
    if (!p || p->gamma != 1 || p->alpha + p->beta != 4) return {};
    const int value = p->alpha - p->beta - shift;
    return {true, mod(value, 4) == 3,
            params_text(*p) + "; alpha - beta - " + std::to_string(shift) + " = " + std::to_string(value) + " = " +
                std::to_string(mod(value, 4)) + " mod 4; need 3"};
}

RuleCheck brown_3t2(const Scheme& s) {
    const auto p = family(s, CubicAmbient::RP2_T3, SurfaceKind::orientable(3));
    if (!p || p->gamma != 1) return {};
    const int sum = p->alpha + p->beta;
    const int diff = p->beta - p->alpha;
    if (p->alpha == 1 && p->beta == 1) {
        // D+ and D- are the disks, E the non-disk plus part with one disk attached
        const int chi_e = euler_characteristic(*s.pair().plus_big) + 1;
        const int total = 1 + chi_e + 1;
        const int agree = half_cubic_self_intersection - 2 * total + 4;
        const int disagree = half_cubic_self_intersection - 2 * total - 4;
        return {true, false,
                params_text(*p) + "; type II: beta - alpha = " + std::to_string(diff) +
                    " = 0 mod 8 contradicts the Brown invariant; type I: G.G = 1/2 CB.CB - 2(chi(D+) + chi(E) + "
                    "chi(D-)) +/- 4 = " +
                    std::to_string(agree) + " or " + std::to_string(disagree) + ", never 0"};
    }
    if (sum != 3 && sum != 4) return {};
    const bool ok = sum == 4 ? mod(diff, 8) == 4 : (mod(diff, 8) == 3 || mod(diff, 8) == 5);
    return {true, ok,
            params_text(*p) + "; chi(B-) = 3 + B (mod 8) gives beta - alpha = " + std::to_string(diff) + " = " +
                std::to_string(mod(diff, 8)) + " mod 8; need " + (sum == 4 ? "4" : "3 or 5")};
}

// F = CA/conj u B+ is orientable for the listed instance; its square
// 1/2 CB.CB - 2 chi(B+) must vanish (S4) or be non-positive (negative definite).
RuleCheck self_intersection(const Scheme& s, CubicAmbient ambient, SurfaceKind big, bool negative_definite) {
    const auto p = family(s, ambient, big);
    if (!p || p->gamma != 1) return {};
    if (p->alpha != 4 || p->beta != 0) return {true, true, params_text(*p) + "; not the (4, 0) instance"};
    const int chi = euler_characteristic(s.pair().plus_components());
    const int square = half_cubic_self_intersection - 2 * chi;
    const bool ok = negative_definite ? square <= 0 : square == 0;
    return {true, ok,
            params_text(*p) + "; F.F = 1/2 CB.CB - 2 chi(B+) = " + std::to_string(half_cubic_self_intersection) +
                " - 2(" + std::to_string(chi) + ") = " + std::to_string(square) + "; need " +
                (negative_definite ? "F.F <= 0" : "F.F = 0")};
}

RuleCheck nonorientable_2rp2(const Scheme& s) {
    const auto p = family(s, CubicAmbient::RP2_T3, SurfaceKind::nonorientable(2));
    if (!p || p->gamma != 1) return {};
    const int chi = euler_characteristic(s.pair().plus_components());
    const bool bad = p->alpha == 2 && p->beta == 2;
    return {true, !bad,
            params_text(*p) + "; chi(B+) = " + std::to_string(chi) + ", B+ nonorientable" +
                (bad ? "; excluded for chi(B+) = -1" : "")};
}

RuleCheck nonorientable_6rp2(const Scheme& s) {
    const auto p = family(s, CubicAmbient::RP2_T3, SurfaceKind::nonorientable(6));
    if (!p) return {};
    const int chi_minus = euler_characteristic(s.pair().minus_components());
    std::string why;
    if (p->alpha == 2 && p->beta == 1) why = "; excluded: chi(B-) = beta - alpha = -1 with B- nonorientable";
    if ((p->alpha == 3 && p->beta == 1) || (p->alpha == 2 && p->beta == 2))
        why = "; excluded by the M-curve / (M-1)-curve bound on nonorientable B+";
    return {true, why.empty(), params_text(*p) + "; chi(B-) = " + std::to_string(chi_minus) + why};
}

RuleCheck crosscap_count(const Scheme& s) {
    if (s.has_forests()) return {};
    const auto c = classify_shape(s);
    if (c.shape != PairShape::Family) return {};
    const auto& p = *c.params;
    const int expected = p.big.euler_characteristic() + 2 - 2 * p.gamma - euler_characteristic(s.ambient());
    return {true, p.k >= 1 && p.k == expected,
            "k = chi(Big) + 2 - 2 gamma - chi(RB) = " + std::to_string(expected) + ", code has k = " +
                std::to_string(p.k)};
}

}  // namespace

std::vector<int> bounded_surface_chis(const Scheme& s) {
    if (!s.has_forests()) {
        const auto& p = s.pair();
        return {euler_characteristic(p.plus_components()), euler_characteristic(p.minus_components())};
    }
    const auto regions = regions_of(s);
    const int components = s.forests().sphere ? 2 : 1;
    std::vector<int> out;
    for (int mask = 0; mask < (1 << components); ++mask) {
        int chi = 0;
        for (const auto& r : regions) {
            const int c = r.component == AmbientComponent::Sphere ? 1 : 0;
            if ((r.depth % 2 == 1) == (((mask >> c) & 1) == 1)) chi += euler_characteristic(r.surface);
        }
        out.push_back(chi);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const RuleSet& standard_rules() {
    static const RuleSet rules = {
        {"HARNACK", "Harnack inequality: at most genus(CA) + 1 = 5 components", harnack},
        {"LEMMA-A",
         "K3 double cover: at most one component of chi <= 0 in B+; in B- likewise unless B- = S2_2 u RP2_1 with "
         "cores dual to w1",
         lemma},
        {"T1-CONG", "RP2 + S2 is of type I_rel: the curve bounds B1 with chi(B1) = 5 (M) or 4, 6 (M-1) mod 8",
         rp2_s2_congruence},
        {"T3-RKGK", "Rokhlin and Kharlamov-Gudkov-Krakhnov congruences for chi(B+) when gamma = 1", rokhlin_kgk},
        {"T3-74D-T2", "mod 4 congruence for the T2 family, M-curves with gamma = 1",
         [](const Scheme& s) { return handle_mod4(s, SurfaceKind::orientable(1), 1); }},
        {"T3-74D-2T2", "mod 4 congruence for the 2T2 family, M-curves with gamma = 1",
         [](const Scheme& s) { return handle_mod4(s, SurfaceKind::orientable(2), 3); }},
        {"T3-BROWN-3T2", "Brown invariant of the Guillou-Marin form of CA/conj u B-; orientation formula for (1, 1)",
         brown_3t2},
        {"T3-FF-3T2", "Rokhlin complex orientation formula: F.F = 0 in CB/conj = S4",
         [](const Scheme& s) {
             return self_intersection(s, CubicAmbient::RP2_T3, SurfaceKind::orientable(3), false);
         }},
        {"T3-74C-2RP2", "congruence for nonorientable B+ with chi(B+) = -1", nonorientable_2rp2},
        {"T3-74CB-6RP2", "congruences for nonorientable sides of the 6RP2 family", nonorientable_6rp2},
        {"T4-FF-2T2", "F.F <= 0 in the negative definite CB/conj",
         [](const Scheme& s) {
             return self_intersection(s, CubicAmbient::RP2_T2, SurfaceKind::orientable(2), true);
         }},
        {"STRUCT-K", "chi additivity fixes the minus-side crosscap count k >= 1", crosscap_count},
    };
    return rules;
}

Verdict evaluate(const Scheme& s, const RuleSet& rules) {
    std::set<std::string> violated;
    for (const auto& rule : rules) {
        const auto c = rule.check(s);
        if (c.applicable && !c.holds) violated.insert(rule.id);
    }
    Verdict v;
    v.violated.assign(violated.begin(), violated.end());
    v.status = v.violated.empty() ? Status::Admitted : Status::Excluded;
    return v;
}

Explanation explain(const Scheme& s, const RuleSet& rules) {
    Explanation e;
    e.code = to_string(s);
    e.ambient = s.ambient();
    e.b0 = b0(s);
    for (const auto& rule : rules) e.rules.push_back({rule.id, rule.basis, rule.check(s)});
    e.verdict = evaluate(s, rules);
    return e;
}

std::string to_text(const Explanation& e) {
    std::ostringstream out;
    out << "scheme  " << e.code << "\nambient " << to_string(e.ambient) << "\nb0      " << e.b0 << "\n\n";
    for (const auto& r : e.rules) {
        if (!r.check.applicable) {
            out << "  n/a   " << r.id << "\n";
            continue;
        }
        out << (r.check.holds ? "  pass  " : "  FAIL  ") << r.id << "  (" << r.basis << ")\n";
        std::istringstream lines(r.check.detail);
        for (std::string line; std::getline(lines, line);) out << "          " << line << "\n";
    }
    out << "\nverdict " << (e.verdict.admitted() ? "Admitted" : "Excluded");
    if (!e.verdict.admitted()) {
        out << " [";
        for (std::size_t i = 0; i < e.verdict.violated.size(); ++i) out << (i ? ", " : "") << e.verdict.violated[i];
        out << "]";
    }
    out << "\n";
    return out.str();
}

}  // namespace sextic
