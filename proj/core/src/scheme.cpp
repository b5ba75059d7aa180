#include "sextic/scheme.hpp"

#include <algorithm>

#include "cursor.hpp"

namespace sextic {

namespace {

bool even(int x) { return x % 2 == 0; }

bool has_nonorientable(const std::vector<CompactSurface>& parts) {
    return std::any_of(parts.begin(), parts.end(), [](const auto& s) { return !s.is_orientable(); });
}

}  // namespace

Scheme Scheme::on_projective(OvalForest projective) {
    return Scheme(CubicAmbient::RP2, ForestData{std::move(projective), std::nullopt});
}

Scheme Scheme::on_projective_and_sphere(OvalForest projective, OvalForest sphere) {
    return Scheme(CubicAmbient::RP2_S2,
                  ForestData{std::move(projective), canonicalize_on_sphere(sphere)});
}

Scheme Scheme::from_pair(CubicAmbient ambient, PairCode pair) {
    validate_pair(pair, ambient);
    return Scheme(ambient, std::move(pair));
}

std::string to_string(const Scheme& s) {
    if (!s.has_forests()) return print_pair(s.pair());
    const auto& f = s.forests();
    auto text = print_forest(f.projective) + "@RP2";
    if (f.sphere) text += " | " + print_forest(*f.sphere) + "@S2";
    return text;
}

Scheme parse_scheme(std::string_view text, CubicAmbient ambient) {
    if (!has_positive_chi(ambient)) return Scheme::from_pair(ambient, parse_pair(text));

    detail::Cursor in(text);
    std::optional<OvalForest> projective;
    std::optional<OvalForest> sphere;
    int part = 0;
    do {
        in.skip_space();
        const auto at = in.position();
        auto forest = detail::read_forest(in);
        bool on_sphere = part == 1;
        if (in.accept('@')) {
            if (in.accept_word("RP2"))
                on_sphere = false;
            else if (in.accept_word("S2"))
                on_sphere = true;
            else
                in.fail("expected component tag RP2 or S2");
        }
        auto& slot = on_sphere ? sphere : projective;
        if (slot) throw ParseError("component listed twice at offset " + std::to_string(at), at);
        slot = std::move(forest);
        ++part;
    } while (in.accept('|'));
    in.skip_space();
    if (!in.at_end()) in.fail("trailing characters after scheme");

    if (ambient == CubicAmbient::RP2) {
        if (sphere) throw ParseError("ambient RP2 has no sphere component", 0);
        return Scheme::on_projective(std::move(*projective));
    }
    return Scheme::on_projective_and_sphere(projective.value_or(OvalForest{}), sphere.value_or(OvalForest{}));
}

namespace {

void add_oval_regions(const OvalForest& f, int depth, AmbientComponent c, RegionDecomposition& out) {
    for (const auto& inside : f.ovals()) {
        out.push_back({CompactSurface(SurfaceKind::sphere(), 1 + inside.top_level()), depth, c});
        add_oval_regions(inside, depth + 1, c, out);
    }
}

}  // namespace

RegionDecomposition regions_of(const Scheme& s) {
    if (!s.has_forests()) throw std::invalid_argument("regions_of needs a forest scheme");
    const auto& f = s.forests();
    RegionDecomposition out;
    out.push_back({CompactSurface(SurfaceKind::nonorientable(1), f.projective.top_level()), 0,
                   AmbientComponent::Projective});
    add_oval_regions(f.projective, 1, AmbientComponent::Projective, out);
    if (f.sphere) {
        out.push_back({CompactSurface(SurfaceKind::sphere(), f.sphere->top_level()), 0, AmbientComponent::Sphere});
        add_oval_regions(*f.sphere, 1, AmbientComponent::Sphere, out);
    }
    return out;
}

int raw_coloring_count(const Scheme& s) {
    if (!s.has_forests()) return 1;
    return s.forests().sphere ? 4 : 2;
}

std::vector<HalfPair> colorings(const Scheme& s) {
    if (!s.has_forests()) return {validate_pair(s.pair(), s.ambient())};

    const auto regions = regions_of(s);
    const int curve = b0(s);
    const int components = s.forests().sphere ? 2 : 1;
    std::vector<HalfPair> out;
    // bit c of `mask` set: regions of component c at odd depth go to the plus side
    for (int mask = (1 << components) - 1; mask >= 0; --mask) {
        HalfPair hp;
        for (int i = 0; i < static_cast<int>(regions.size()); ++i) {
            const auto& r = regions[i];
            const int c = r.component == AmbientComponent::Sphere ? 1 : 0;
            const bool odd_on_plus = (mask >> c) & 1;
            const bool plus = (r.depth % 2 == 1) == odd_on_plus;
            (plus ? hp.plus : hp.minus).push_back(r.surface);
            (plus ? hp.plus_regions : hp.minus_regions).push_back(i);
        }
        if (even(hp.chi_plus() - curve) && has_nonorientable(hp.minus)) out.push_back(std::move(hp));
    }
    return out;
}

std::string_view to_string(PairErrorKind kind) noexcept {
    switch (kind) {
        case PairErrorKind::ChiMismatch: return "ChiMismatch";
        case PairErrorKind::BoundaryMismatch: return "BoundaryMismatch";
        case PairErrorKind::ParityViolation: return "ParityViolation";
        case PairErrorKind::OrientabilityViolation: return "OrientabilityViolation";
        case PairErrorKind::ShapeViolation: return "ShapeViolation";
    }
    return "?";
}

PairError::PairError(PairErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

HalfPair validate_pair(const PairCode& pair, CubicAmbient ambient) {
    if (has_positive_chi(ambient))
        throw std::invalid_argument("pair codes describe curves on the negative-chi cubics only");

    HalfPair hp{pair.plus_components(), pair.minus_components(), {}, {}};
    const int circles = pair.plus_boundary();
    if (circles != pair.minus_boundary())
        throw PairError(PairErrorKind::BoundaryMismatch, std::to_string(circles) + " boundary circles on the plus side, " +
                                                             std::to_string(pair.minus_boundary()) + " on the minus side");
    const int chi = hp.chi_plus() + hp.chi_minus();
    if (chi != euler_characteristic(ambient))
        throw PairError(PairErrorKind::ChiMismatch, "sides sum to chi " + std::to_string(chi) + ", ambient has " +
                                                        std::to_string(euler_characteristic(ambient)));
    if (!even(hp.chi_plus() - circles))
        throw PairError(PairErrorKind::ParityViolation, "chi(B+) = " + std::to_string(hp.chi_plus()) +
                                                            " has the wrong parity for b0 = " + std::to_string(circles));
    if (!has_nonorientable(hp.minus))
        throw PairError(PairErrorKind::OrientabilityViolation, "minus side is orientable");

    auto shape = [](const std::string& why) { throw PairError(PairErrorKind::ShapeViolation, why); };
    if (pair.exceptional()) {
        if (pair.minus_disks != 0) shape("annulus and Moebius band side carries extra disks");
        if (!pair.plus_big || pair.plus_big->punctures < 2) shape("plus side cannot join the annulus and the Moebius band");
        return hp;
    }
    const auto* minus_big = pair.minus_surface();
    if (circles == 0) {
        if (pair.plus_big) shape("closed plus component is disjoint from the minus side");
        return hp;
    }
    if (minus_big->is_closed()) shape("closed minus component is disjoint from the curve");
    if (!pair.plus_big) {
        if (pair.minus_disks != 0) shape("minus disks would close up with plus disks");
        return hp;
    }
    if (pair.plus_big->punctures - pair.minus_disks < 1) shape("non-disk components share no boundary circle");
    return hp;
}

int b0(const Scheme& s) {
    if (!s.has_forests()) return s.pair().plus_boundary();
    const auto& f = s.forests();
    return f.projective.size() + (f.sphere ? f.sphere->size() : 0);
}

PairCode family_pair(CubicAmbient ambient, SurfaceKind big, int alpha, int beta, int gamma) {
    if (has_positive_chi(ambient)) throw std::invalid_argument("family shapes live on the negative-chi cubics");
    if (alpha < 0 || beta < 0 || gamma < 1) throw std::invalid_argument("family parameters out of range");
    const int k = big.euler_characteristic() + 2 - 2 * gamma - euler_characteristic(ambient);
    if (k < 1) throw std::invalid_argument("no crosscaps left for the minus side");
    return PairCode(alpha, CompactSurface(big, beta + gamma), beta,
                    CompactSurface(SurfaceKind::nonorientable(k), alpha + gamma));
}

std::vector<SurfaceKind> family_bigs(CubicAmbient ambient) {
    std::vector<SurfaceKind> out;
    if (has_positive_chi(ambient)) return out;
    // gamma = 1 gives the largest k; the big part must leave k >= 1
    const int floor = 1 + euler_characteristic(ambient);
    for (int g = 0; 2 - 2 * g >= floor; ++g) out.push_back(SurfaceKind::orientable(g));
    for (int c = 2; 2 - c >= floor; c += 2) out.push_back(SurfaceKind::nonorientable(c));
    return out;
}

namespace {

std::optional<FamilyParams> params_of(const PairCode& p) {
    const auto* minus = p.minus_surface();
    if (!minus) return std::nullopt;
    FamilyParams out;
    out.k = minus->kind.genus();
    if (!p.plus_big) {
        out.big = SurfaceKind::sphere();
        out.alpha = p.plus_disks - 1;
        out.beta = p.minus_disks;
        out.gamma = 1;
    } else {
        out.big = p.plus_big->kind;
        out.alpha = p.plus_disks;
        out.beta = p.minus_disks;
        out.gamma = p.plus_big->punctures - p.minus_disks;
    }
    return out;
}

// Shape <alpha u 1<beta>>: every oval empty except at most one holding only
// empty ovals. Flat forests count with beta = 0.
std::optional<std::pair<int, int>> alpha_nest_beta(const OvalForest& f) {
    int alpha = 0;
    std::optional<int> beta;
    for (const auto& inside : f.ovals()) {
        if (inside.empty()) {
            ++alpha;
            continue;
        }
        if (beta || inside.depth() != 1) return std::nullopt;
        beta = inside.size();
    }
    if (!beta) {
        if (alpha == 0) return std::nullopt;
        return std::make_pair(alpha - 1, 0);
    }
    return std::make_pair(alpha, *beta);
}

bool is_flat(const OvalForest& f) { return f.depth() <= 1; }

std::string projective_item(const OvalForest& p) {
    if (p.empty()) return "c";
    if (print_forest(p) == "<1<1<1>>>") return "b";
    if (auto ab = alpha_nest_beta(p); ab && ab->first + ab->second <= 4) return "a";
    return "other";
}

std::string two_component_item(const OvalForest& p, const OvalForest& s) {
    const auto pc = print_forest(p);
    const auto sc = print_forest(s);
    if (is_flat(p) && is_flat(s)) return p.size() + s.size() <= 5 ? "c" : "other";
    if (s.empty()) {
        if (pc == "<1<1<1>>>") return "d";
        if (auto ab = alpha_nest_beta(p)) {
            const auto [alpha, beta] = *ab;
            if (beta == 1 && alpha <= 3) return "a";
            if (alpha == 0 && beta >= 2 && beta <= 4) return "b";
        }
    }
    if (pc == "<1<1>>" && sc == "<1>") return "e";
    if (p.empty() && sc == "<1 u 1<1>>") return "f";
    return "other";
}

}  // namespace

Classification classify_shape(const Scheme& s) {
    Classification out;
    if (s.has_forests()) {
        const auto& f = s.forests();
        out.tag = f.sphere ? two_component_item(f.projective, *f.sphere) : projective_item(f.projective);
        return out;
    }
    const auto& p = s.pair();
    const auto bigs = family_bigs(s.ambient());
    const int families = static_cast<int>(bigs.size());
    if (p.exceptional()) {
        out.shape = PairShape::Exceptional;
        out.index = families + 1;
        out.tag = "exceptional";
        return out;
    }
    if (b0(s) == 0) {
        out.shape = PairShape::Empty;
        out.index = families + 2;
        out.tag = "empty";
        return out;
    }
    out.params = params_of(p);
    out.tag = to_string(out.params->big);
    const auto it = std::find(bigs.begin(), bigs.end(), out.params->big);
    out.index = it == bigs.end() ? 0 : static_cast<int>(it - bigs.begin()) + 1;
    return out;
}

}  // namespace sextic
