#include "sextic/catalog.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include "sextic/enumerator.hpp"

namespace sextic {

std::string_view to_string(ConstructionMethod m) noexcept {
    switch (m) {
        case ConstructionMethod::PlaneSectionsPerturbation: return "PlaneSectionsPerturbation";
        case ConstructionMethod::SurfaceOfRevolution: return "SurfaceOfRevolution";
        case ConstructionMethod::PlaneEllipsoidPerturbation: return "PlaneEllipsoidPerturbation";
        case ConstructionMethod::QuarticConicSmoothing: return "QuarticConicSmoothing";
        case ConstructionMethod::OvalCollapse: return "OvalCollapse";
        case ConstructionMethod::GudkovCurveCollapse: return "GudkovCurveCollapse";
        case ConstructionMethod::CubicParallelCopy: return "CubicParallelCopy";
        case ConstructionMethod::QuarticTwoLines: return "QuarticTwoLines";
        case ConstructionMethod::ImaginaryQuadric: return "ImaginaryQuadric";
    }
    return "?";
}

bool is_polotovskii_code(std::string_view code) {
    static const std::regex pattern(R"((\([1-8]+\))+(\[[0-9]\])?)");
    return std::regex_match(code.begin(), code.end(), pattern);
}

namespace {

const SurfaceKind S2 = SurfaceKind::sphere();
const SurfaceKind T2 = SurfaceKind::orientable(1);
const SurfaceKind T2x2 = SurfaceKind::orientable(2);
const SurfaceKind T2x3 = SurfaceKind::orientable(3);
const SurfaceKind RP2x2 = SurfaceKind::nonorientable(2);
const SurfaceKind RP2x4 = SurfaceKind::nonorientable(4);
const SurfaceKind RP2x6 = SurfaceKind::nonorientable(6);

// ---------------------------------------------------------------------------
// Realizable types on the negative-chi cubics.
//
// A family lists <alpha u Big_{beta+gamma}, beta u (k0 - 2 gamma)RP2_{alpha+gamma}>
// together with the admissible (alpha, beta) -> gamma cells.

struct Cell {
    int alpha;
    int beta;
    std::vector<int> gammas;
};

struct FamilyList {
    SurfaceKind big;
    int k0;
    std::vector<Cell> cells;
};

std::vector<FamilyList> families_7rp2() {
    return {
        {S2, 9,
         {{0, 0, {1, 2, 3, 4}}, {0, 1, {1, 2, 3, 4}}, {0, 2, {1, 2, 3}}, {0, 3, {2}},
          {1, 0, {1, 2, 3, 4}}, {1, 1, {1, 2, 3}}, {1, 2, {2}},
          {2, 0, {1, 2, 3}}, {2, 1, {1, 2}},
          {3, 0, {1, 2}}, {3, 1, {1}}}},
        {T2, 7,
         {{0, 0, {1, 2, 3}}, {0, 1, {1, 2, 3}}, {0, 2, {1, 2, 3}}, {0, 3, {1, 2}}, {0, 4, {1}},
          {1, 0, {1, 2, 3}}, {1, 1, {1, 2, 3}}, {1, 2, {1, 2}},
          {2, 0, {1, 2, 3}}, {2, 1, {1, 2}}, {2, 2, {1}},
          {3, 0, {1, 2}},
          {4, 0, {1}}}},
        {T2x2, 5,
         {{0, 0, {1, 2}}, {0, 1, {1, 2}}, {0, 2, {1, 2}}, {0, 3, {1, 2}},
          {1, 0, {1, 2}}, {1, 1, {1, 2}}, {1, 2, {1, 2}}, {1, 3, {1}},
          {2, 0, {1, 2}}, {2, 1, {1, 2}},
          {3, 0, {1, 2}}, {3, 1, {1}}}},
        {T2x3, 3,
         {{0, 0, {1}}, {1, 0, {1}}, {2, 0, {1}}, {3, 0, {1}},
          {0, 1, {1}}, {0, 2, {1}}, {0, 3, {1}}, {0, 4, {1}}}},
        {RP2x2, 7,
         {{0, 0, {1, 2, 3}}, {0, 1, {1, 2, 3}}, {0, 2, {1, 2, 3}}, {0, 3, {1, 2}}, {0, 4, {1}},
          {1, 0, {1, 2, 3}}, {1, 1, {1, 2, 3}}, {1, 2, {1, 2}}, {1, 3, {1}},
          {2, 0, {1, 2, 3}}, {2, 1, {1, 2}},
          {3, 0, {1, 2}}, {3, 1, {1}},
          {4, 0, {1}}}},
        {RP2x4, 5,
         {{0, 0, {1, 2}}, {0, 1, {1, 2}}, {0, 2, {1, 2}}, {0, 3, {1, 2}}, {0, 4, {1}},
          {1, 0, {1, 2}}, {1, 1, {1, 2}}, {1, 2, {1, 2}}, {1, 3, {1}},
          {2, 0, {1, 2}}, {2, 1, {1, 2}}, {2, 2, {1}},
          {3, 0, {1, 2}}, {3, 1, {1}},
          {4, 0, {1}}}},
        {RP2x6, 3,
         {{0, 0, {1}}, {1, 0, {1}}, {2, 0, {1}}, {3, 0, {1}}, {4, 0, {1}},
          {0, 1, {1}}, {1, 1, {1}}, {0, 2, {1}}, {1, 2, {1}}, {0, 3, {1}}, {1, 3, {1}},
          {0, 4, {1}}}},
    };
}

// Parametric lists: all (alpha, beta) with alpha + beta + gamma <= 5 for the
// given gammas, minus the listed (alpha, beta) holes.
struct ParametricFamily {
    SurfaceKind big;
    int k0;
    std::vector<int> gammas;
    std::vector<std::pair<int, int>> holes;
};

std::vector<FamilyList> expand(const std::vector<ParametricFamily>& families) {
    std::vector<FamilyList> out;
    for (const auto& f : families) {
        FamilyList list{f.big, f.k0, {}};
        for (int alpha = 0; alpha <= 4; ++alpha)
            for (int beta = 0; alpha + beta <= 4; ++beta) {
                if (std::find(f.holes.begin(), f.holes.end(), std::make_pair(alpha, beta)) != f.holes.end()) continue;
                Cell cell{alpha, beta, {}};
                for (int g : f.gammas)
                    if (alpha + beta + g <= 5) cell.gammas.push_back(g);
                if (!cell.gammas.empty()) list.cells.push_back(cell);
            }
        out.push_back(std::move(list));
    }
    return out;
}

std::vector<FamilyList> families_5rp2() {
    return expand({
        {S2, 7, {1, 2, 3}, {}},
        {T2, 5, {1, 2}, {}},
        {T2x2, 3, {1}, {{4, 0}}},
        {RP2x2, 5, {1, 2}, {}},
        {RP2x4, 3, {1}, {}},
    });
}

std::vector<FamilyList> families_3rp2() {
    return expand({
        {S2, 5, {1, 2}, {}},
        {T2, 3, {1}, {}},
        {RP2x2, 3, {1}, {}},
    });
}

std::vector<FamilyList> families_of(CubicAmbient a) {
    switch (a) {
        case CubicAmbient::RP2_T3: return families_7rp2();
        case CubicAmbient::RP2_T2: return families_5rp2();
        case CubicAmbient::RP2_T1: return families_3rp2();
        default: return {};
    }
}

Scheme listed_pair(CubicAmbient a, const FamilyList& f, int alpha, int beta, int gamma) {
    return Scheme::from_pair(a, PairCode(alpha, CompactSurface(f.big, beta + gamma), beta,
                                         CompactSurface(SurfaceKind::nonorientable(f.k0 - 2 * gamma), alpha + gamma)));
}

Scheme annulus_mobius(CubicAmbient a, bool null_homologous_core) {
    const int n = handle_count(a);
    if (null_homologous_core)
        return Scheme::from_pair(a, PairCode(1, CompactSurface(SurfaceKind::orientable(n), 2), 0, AnnulusMobius{}));
    return Scheme::from_pair(a, PairCode(0, CompactSurface(SurfaceKind::orientable(n - 1), 3), 0, AnnulusMobius{}));
}

Scheme empty_curve(CubicAmbient a) {
    return Scheme::from_pair(a, PairCode(0, std::nullopt, 0, CompactSurface(SurfaceKind::nonorientable(2 * handle_count(a) + 1), 0)));
}

// ---------------------------------------------------------------------------
// Constructions on 7RP2: conic-quartic smoothings with maximal (alpha, beta).

std::vector<SmoothingEntry> smoothings_7rp2() {
    return {
        {S2, 0, 1, 4, "(12)(34)(56)(78)"},
        {S2, 0, 2, 3, "(1867)(3452)[2]"},
        {S2, 0, 3, 2, "(18276543)[3]"},
        {S2, 1, 0, 4, "(12)(34)(56)(78)"},
        {S2, 1, 1, 3, "(1678)(2345)[1]"},
        {S2, 1, 2, 2, "(18723456)[2]"},
        {S2, 2, 0, 3, "(145678)(23)[0]"},
        {S2, 2, 1, 2, "(12345678)[1]"},
        {S2, 3, 0, 2, "(12387456)[0]"},
        {S2, 3, 1, 1, "(12345678)[1]"},

        {T2, 0, 2, 3, "(1876)(2345)[2]"},
        {T2, 0, 3, 2, "(18743256)[3]"},
        {T2, 0, 4, 1, "(18276543)[3]"},
        {T2, 1, 1, 3, "(187654)(23)[1]"},
        {T2, 1, 2, 2, "(18723456)[2]"},
        {T2, 2, 0, 3, "(1867)(3452)[2]"},
        {T2, 2, 1, 2, "(18765234)[1]"},
        {T2, 2, 2, 1, "(18723456)[2]"},
        {T2, 3, 0, 2, "(12387456)[0]"},
        {T2, 4, 0, 1, "(12387456)[0]"},

        {T2x2, 0, 3, 2, "(18743256)[3]"},
        {T2x2, 1, 2, 2, "(18765432)[2]"},
        {T2x2, 1, 3, 1, "(18234765)[2]"},
        {T2x2, 2, 1, 2, "(18765234)[1]"},
        {T2x2, 3, 0, 2, "(18276543)[3]"},
        {T2x2, 3, 1, 1, "(18765234)[1]"},

        {T2x3, 3, 0, 1, "(18276543)[3]"},
        {T2x3, 0, 4, 1, "(18234567)[3]"},

        {RP2x2, 0, 2, 3, "(1867)(3452)[2]"},
        {RP2x2, 0, 3, 2, "(18276543)[3]"},
        {RP2x2, 1, 1, 3, "(1845)(23)(67)[0]"},
        {RP2x2, 1, 2, 2, "(18723456)[2]"},
        {RP2x2, 1, 3, 1, "(18723456)[2]"},
        {RP2x2, 2, 0, 3, "(1845)(3672)[0]"},
        {RP2x2, 2, 1, 2, "(18432765)[1]"},
        {RP2x2, 3, 0, 2, "(12387456)[0]"},
        {RP2x2, 3, 1, 1, "(12387456)[0]"},
        {RP2x2, 4, 0, 1, "(16254378)[0]"},

        {RP2x4, 0, 3, 2, "(18437625)[3]"},
        {RP2x4, 0, 4, 1, "(18437625)[3]"},
        {RP2x4, 1, 2, 2, "(18432765)[1]"},
        {RP2x4, 1, 3, 1, "(18437625)[3]"},
        {RP2x4, 2, 1, 2, "(18765234)[1]"},
        {RP2x4, 2, 2, 1, "(18765234)[1]"},
        {RP2x4, 3, 0, 2, "(18276345)[0]"},
        {RP2x4, 3, 1, 1, "(18276345)[0]"},
        {RP2x4, 4, 0, 1, "(18276345)[0]"},

        {RP2x6, 1, 3, 1, "(18765432)[2]"},
        {RP2x6, 0, 4, 1, "(18234567)[3]"},
    };
}

Scheme family_scheme(CubicAmbient a, SurfaceKind big, int alpha, int beta, int gamma) {
    return Scheme::from_pair(a, family_pair(a, big, alpha, beta, gamma));
}

std::vector<SpecialConstruction> specials_of(CubicAmbient a) {
    using M = ConstructionMethod;
    std::vector<SpecialConstruction> out;
    if (a == CubicAmbient::RP2_T3) {
        out.push_back({family_scheme(a, S2, 0, 2, 1), {M::OvalCollapse, "<6 u 1<2>>"}, true});
        out.push_back({family_scheme(a, RP2x2, 0, 4, 1), {M::GudkovCurveCollapse, "<5 u 1<5>>"}, true});
        out.push_back({family_scheme(a, RP2x6, 4, 0, 1), {M::GudkovCurveCollapse, "<5 u 1<5>>"}, true});
    }
    if (a == CubicAmbient::RP2_T2) {
        out.push_back({family_scheme(a, S2, 1, 3, 1), {M::QuarticTwoLines, std::nullopt}});
        out.push_back({family_scheme(a, T2x2, 2, 2, 1), {M::QuarticTwoLines, std::nullopt}});
    }
    out.push_back({annulus_mobius(a, true), {M::CubicParallelCopy, std::nullopt}});
    out.push_back({annulus_mobius(a, false), {M::CubicParallelCopy, std::nullopt}});
    out.push_back({empty_curve(a), {M::ImaginaryQuadric, std::nullopt}});
    return out;
}

// A smoothing on RP2 # nT2 yields one on RP2 # (n-1)T2 by dropping a handle
// from either side: Big # T2 -> Big, or kRP2 -> (k-2)RP2.
std::vector<SmoothingEntry> reduce_handle(const std::vector<SmoothingEntry>& from, CubicAmbient source) {
    std::vector<SmoothingEntry> out;
    auto add = [&](SmoothingEntry e) {
        const bool seen = std::any_of(out.begin(), out.end(), [&](const SmoothingEntry& o) {
            return o.big == e.big && o.alpha == e.alpha && o.beta == e.beta && o.gamma == e.gamma;
        });
        if (!seen) out.push_back(std::move(e));
    };
    for (const auto& e : from) {
        const int k = e.big.euler_characteristic() + 2 - 2 * e.gamma - euler_characteristic(source);
        if (e.big.is_orientable() && e.big.genus() >= 1)
            add({SurfaceKind::orientable(e.big.genus() - 1), e.alpha, e.beta, e.gamma, e.code});
        if (!e.big.is_orientable() && e.big.genus() >= 4)
            add({SurfaceKind::nonorientable(e.big.genus() - 2), e.alpha, e.beta, e.gamma, e.code});
        if (k - 2 >= 1) add(e);
    }
    return out;
}

bool covers(const SmoothingEntry& e, const FamilyParams& p) {
    return e.big == p.big && e.gamma == p.gamma && p.alpha <= e.alpha && p.beta <= e.beta;
}

std::optional<ConstructionRecord> construction_for(const Scheme& s, const ConstructionTable& table) {
    for (const auto& sp : table.specials)
        if (sp.scheme == s) return sp.record;
    const auto c = classify_shape(s);
    if (c.shape != PairShape::Family) return std::nullopt;
    const SmoothingEntry* best = nullptr;
    int best_gap = 0;
    for (const auto& e : table.smoothings) {
        if (!covers(e, *c.params)) continue;
        const int gap = (e.alpha - c.params->alpha) + (e.beta - c.params->beta);
        if (!best || gap < best_gap) {
            best = &e;
            best_gap = gap;
        }
    }
    const SpecialConstruction* cell = nullptr;
    for (const auto& sp : table.specials) {
        if (!sp.table_cell) continue;
        const auto top = classify_shape(sp.scheme).params;
        if (!top || top->big != c.params->big || top->gamma != c.params->gamma) continue;
        if (c.params->alpha > top->alpha || c.params->beta > top->beta) continue;
        const int gap = (top->alpha - c.params->alpha) + (top->beta - c.params->beta);
        if ((!best && !cell) || gap < best_gap) {
            best = nullptr;
            cell = &sp;
            best_gap = gap;
        }
    }
    if (cell) return cell->record;
    if (!best) return std::nullopt;
    return ConstructionRecord{ConstructionMethod::QuarticConicSmoothing, best->code};
}

// ---------------------------------------------------------------------------
// Forest ambients.

OvalForest alpha_and_nest(int alpha, int beta) {
    return OvalForest::disjoint(OvalForest::empty_ovals(alpha),
                                OvalForest::enclosing(OvalForest::empty_ovals(beta)));
}

OvalForest chain(int depth) {
    OvalForest f;
    for (int i = 0; i < depth; ++i) f = OvalForest::enclosing(f);
    return f;
}

std::vector<CatalogEntry> two_component_list() {
    using M = ConstructionMethod;
    std::vector<CatalogEntry> out;
    auto add = [&](OvalForest p, OvalForest s, const char* item, int index, M method) {
        out.push_back({Scheme::on_projective_and_sphere(std::move(p), std::move(s)), item, index,
                       ConstructionRecord{method, std::nullopt}});
    };
    for (int alpha = 0; alpha <= 3; ++alpha)
        add(alpha_and_nest(alpha, 1), {}, "a", 1,
            alpha == 0 ? M::SurfaceOfRevolution : M::PlaneSectionsPerturbation);
    for (int alpha = 2; alpha <= 4; ++alpha)
        add(OvalForest::enclosing(OvalForest::empty_ovals(alpha)), {}, "b", 2, M::PlaneEllipsoidPerturbation);
    for (int alpha = 0; alpha <= 5; ++alpha)
        for (int beta = 0; alpha + beta <= 5; ++beta)
            add(OvalForest::empty_ovals(alpha), OvalForest::empty_ovals(beta), "c", 3, M::PlaneEllipsoidPerturbation);
    add(chain(3), {}, "d", 4, M::SurfaceOfRevolution);
    add(chain(2), OvalForest::empty_ovals(1), "e", 5, M::SurfaceOfRevolution);
    add({}, alpha_and_nest(1, 1), "f", 6, M::SurfaceOfRevolution);
    return out;
}

std::vector<CatalogEntry> projective_list() {
    const ConstructionRecord smoothing{ConstructionMethod::QuarticConicSmoothing, std::nullopt};
    std::vector<CatalogEntry> out;
    for (int alpha = 0; alpha <= 4; ++alpha)
        for (int beta = 0; alpha + beta <= 4; ++beta)
            out.push_back({Scheme::on_projective(alpha_and_nest(alpha, beta)), "a", 1, smoothing});
    out.push_back({Scheme::on_projective(chain(3)), "b", 2, smoothing});
    out.push_back({Scheme::on_projective({}), "c", 3, smoothing});
    return out;
}

}  // namespace

ConstructionTable construction_table(CubicAmbient ambient) {
    ConstructionTable t;
    switch (ambient) {
        case CubicAmbient::RP2_T3: t.smoothings = smoothings_7rp2(); break;
        case CubicAmbient::RP2_T2: t.smoothings = reduce_handle(smoothings_7rp2(), CubicAmbient::RP2_T3); break;
        case CubicAmbient::RP2_T1:
            t.smoothings = reduce_handle(reduce_handle(smoothings_7rp2(), CubicAmbient::RP2_T3), CubicAmbient::RP2_T2);
            break;
        default: throw std::invalid_argument("construction tables exist for the negative-chi cubics only");
    }
    t.specials = specials_of(ambient);
    return t;
}

std::vector<CatalogEntry> ground_truth(CubicAmbient ambient) {
    if (ambient == CubicAmbient::RP2_S2) return two_component_list();
    if (ambient == CubicAmbient::RP2) return projective_list();

    const auto table = construction_table(ambient);
    std::vector<CatalogEntry> out;
    const auto families = families_of(ambient);
    int index = 0;
    for (const auto& f : families) {
        ++index;
        for (const auto& cell : f.cells)
            for (int gamma : cell.gammas) {
                auto s = listed_pair(ambient, f, cell.alpha, cell.beta, gamma);
                auto record = construction_for(s, table);
                out.push_back({std::move(s), to_string(f.big), index, std::move(record)});
            }
    }
    for (bool core : {true, false}) {
        auto s = annulus_mobius(ambient, core);
        auto record = construction_for(s, table);
        out.push_back({std::move(s), "exceptional", index + 1, std::move(record)});
    }
    auto s = empty_curve(ambient);
    auto record = construction_for(s, table);
    out.push_back({std::move(s), "empty", index + 2, std::move(record)});
    return out;
}

ClosureReport closure_check(CubicAmbient ambient, const std::vector<Scheme>& admitted) {
    const auto table = construction_table(ambient);
    ClosureReport r;
    r.ambient = ambient;
    std::set<std::string> listed;
    for (const auto& s : admitted) {
        listed.insert(to_string(s));
        if (construction_for(s, table))
            ++r.covered;
        else
            r.uncovered.push_back(s);
    }
    // everything reachable by oval removal must be listed as well
    for (const auto& e : table.smoothings)
        for (int alpha = 0; alpha <= e.alpha; ++alpha)
            for (int beta = 0; beta <= e.beta; ++beta) {
                auto s = family_scheme(ambient, e.big, alpha, beta, e.gamma);
                if (!listed.count(to_string(s))) {
                    r.overreach.push_back(s);
                    listed.insert(to_string(s));
                }
            }
    for (const auto& sp : table.specials) {
        if (!sp.table_cell) {
            if (!listed.count(to_string(sp.scheme))) r.overreach.push_back(sp.scheme);
            continue;
        }
        const auto top = *classify_shape(sp.scheme).params;
        for (int alpha = 0; alpha <= top.alpha; ++alpha)
            for (int beta = 0; beta <= top.beta; ++beta) {
                auto s = family_scheme(ambient, top.big, alpha, beta, top.gamma);
                if (!listed.count(to_string(s))) {
                    r.overreach.push_back(s);
                    listed.insert(to_string(s));
                }
            }
    }
    return r;
}

ClosureReport closure_check(CubicAmbient ambient) {
    std::vector<Scheme> listed;
    for (const auto& e : ground_truth(ambient)) listed.push_back(e.scheme);
    return closure_check(ambient, listed);
}

VerifyReport verify(CubicAmbient ambient, const RuleSet& rules) {
    const auto classified = classify(ambient, rules);
    const auto truth = ground_truth(ambient);
    VerifyReport r;
    r.ambient = ambient;
    r.admitted = classified.admitted.size();
    r.expected = truth.size();
    std::set<std::string> admitted_codes;
    for (const auto& s : classified.admitted) admitted_codes.insert(to_string(s));
    std::set<std::string> truth_codes;
    for (const auto& e : truth) {
        truth_codes.insert(to_string(e.scheme));
        if (!admitted_codes.count(to_string(e.scheme))) r.missing.push_back(e.scheme);
    }
    for (const auto& s : classified.admitted)
        if (!truth_codes.count(to_string(s))) r.extra.push_back(s);
    return r;
}

}  // namespace sextic
