#include "sextic/codes.hpp"

#include <algorithm>
#include <tuple>

#include "cursor.hpp"

namespace sextic {

namespace {

bool canonical_less(const OvalForest& a, const OvalForest& b) {
    if (a.empty() != b.empty()) return a.empty();
    if (a.size() != b.size()) return a.size() < b.size();
    return print_forest(a) < print_forest(b);
}

}  // namespace

OvalForest::OvalForest(std::vector<OvalForest> ovals) : ovals_(std::move(ovals)) {
    std::stable_sort(ovals_.begin(), ovals_.end(), canonical_less);
    for (const auto& inside : ovals_) size_ += 1 + inside.size();
}

OvalForest OvalForest::empty_ovals(int n) {
    if (n < 0) throw std::invalid_argument("negative oval count");
    return OvalForest(std::vector<OvalForest>(static_cast<std::size_t>(n)));
}

OvalForest OvalForest::enclosing(OvalForest inside) {
    std::vector<OvalForest> one;
    one.push_back(std::move(inside));
    return OvalForest(std::move(one));
}

OvalForest OvalForest::disjoint(const OvalForest& a, const OvalForest& b) {
    auto all = a.ovals_;
    all.insert(all.end(), b.ovals_.begin(), b.ovals_.end());
    return OvalForest(std::move(all));
}

int OvalForest::depth() const noexcept {
    int d = 0;
    for (const auto& inside : ovals_) d = std::max(d, 1 + inside.depth());
    return d;
}

int OvalForest::nesting_pairs() const noexcept {
    // every oval below the top level is enclosed once per ancestor
    int pairs = 0;
    for (const auto& inside : ovals_) pairs += inside.size() + inside.nesting_pairs();
    return pairs;
}

std::string print_forest(const OvalForest& f) {
    std::string out = "<";
    int empties = 0;
    std::vector<std::string> terms;
    for (const auto& inside : f.ovals()) {
        if (inside.empty())
            ++empties;
        else
            terms.push_back("1" + print_forest(inside));
    }
    if (empties > 0) terms.insert(terms.begin(), std::to_string(empties));
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) out += " u ";
        out += terms[i];
    }
    return out + ">";
}

namespace {

OvalForest read_body(detail::Cursor& in) {
    std::vector<OvalForest> ovals;
    if (in.accept('>')) return OvalForest{};
    do {
        if (!in.peek_digit()) in.fail("expected oval count or nested term");
        const auto at = in.position();
        const int n = in.integer();
        if (n == 0) throw ParseError("oval count must be positive at offset " + std::to_string(at), at);
        if (in.accept('<')) {
            if (n != 1) throw ParseError("nested term must start with 1< at offset " + std::to_string(at), at);
            ovals.push_back(read_body(in));
        } else {
            ovals.insert(ovals.end(), static_cast<std::size_t>(n), OvalForest{});
        }
    } while (in.accept('u'));
    in.expect('>');
    return OvalForest(std::move(ovals));
}

}  // namespace

OvalForest detail::read_forest(Cursor& in) {
    in.expect('<');
    return read_body(in);
}

OvalForest parse_forest(std::string_view text) {
    detail::Cursor in(text);
    auto forest = detail::read_forest(in);
    in.skip_space();
    if (!in.at_end()) in.fail("trailing characters after forest");
    return forest;
}

namespace {

struct RegionTree {
    std::vector<std::vector<int>> adjacent;

    int add_region() {
        adjacent.emplace_back();
        return static_cast<int>(adjacent.size()) - 1;
    }

    void add_ovals(const OvalForest& f, int outside) {
        for (const auto& inside : f.ovals()) {
            const int region = add_region();
            adjacent[outside].push_back(region);
            adjacent[region].push_back(outside);
            add_ovals(inside, region);
        }
    }

    OvalForest rooted_at(int region, int from) const {
        std::vector<OvalForest> ovals;
        for (int next : adjacent[region])
            if (next != from) ovals.push_back(rooted_at(next, region));
        return OvalForest(std::move(ovals));
    }
};

}  // namespace

OvalForest canonicalize_on_sphere(const OvalForest& f) {
    RegionTree tree;
    tree.add_ovals(f, tree.add_region());
    OvalForest best = f;
    auto best_key = std::make_tuple(f.nesting_pairs(), print_forest(f));
    for (int r = 0; r < static_cast<int>(tree.adjacent.size()); ++r) {
        auto candidate = tree.rooted_at(r, -1);
        auto key = std::make_tuple(candidate.nesting_pairs(), print_forest(candidate));
        if (key < best_key) {
            best_key = std::move(key);
            best = std::move(candidate);
        }
    }
    return best;
}

PairCode::PairCode(int plus, std::optional<CompactSurface> pbig, int minus, MinusBig mbig)
    : plus_disks(plus), plus_big(std::move(pbig)), minus_disks(minus), minus_big(std::move(mbig)) {
    if (plus_disks < 0 || minus_disks < 0) throw std::invalid_argument("negative disk count");
    if (plus_big && plus_big->is_disk()) {
        ++plus_disks;
        plus_big.reset();
    }
    if (auto* s = std::get_if<CompactSurface>(&minus_big); s && s->is_disk()) {
        ++minus_disks;
        minus_big = std::monostate{};
    }
}

std::vector<CompactSurface> PairCode::plus_components() const {
    std::vector<CompactSurface> parts(static_cast<std::size_t>(plus_disks), CompactSurface::disk());
    if (plus_big) parts.push_back(*plus_big);
    return parts;
}

std::vector<CompactSurface> PairCode::minus_components() const {
    std::vector<CompactSurface> parts(static_cast<std::size_t>(minus_disks), CompactSurface::disk());
    if (auto* s = minus_surface()) parts.push_back(*s);
    if (exceptional()) {
        parts.push_back(CompactSurface::annulus());
        parts.push_back(CompactSurface::mobius_band());
    }
    return parts;
}

int PairCode::plus_boundary() const noexcept {
    return plus_disks + (plus_big ? plus_big->punctures : 0);
}

int PairCode::minus_boundary() const noexcept {
    int total = minus_disks;
    if (auto* s = minus_surface()) total += s->punctures;
    if (exceptional()) total += 3;
    return total;
}

namespace {

struct RawSide {
    int disks = 0;
    std::vector<CompactSurface> surfaces;
    std::size_t position = 0;
};

RawSide read_side(detail::Cursor& in) {
    RawSide side;
    in.skip_space();
    side.position = in.position();
    bool need_surface = true;
    if (in.peek_digit()) {
        // an integer is a disk count unless a surface suffix follows it
        detail::Cursor probe = in;
        probe.integer();
        const auto after = probe.rest();
        if (after.substr(0, 2) != "T2" && after.substr(0, 3) != "RP2") {
            side.disks = in.integer();
            need_surface = in.accept('u');
        }
    }
    if (need_surface) {
        do {
            side.surfaces.push_back(detail::read_surface(in));
        } while (in.accept('u'));
    }
    return side;
}

}  // namespace

PairCode parse_pair(std::string_view text) {
    detail::Cursor in(text);
    in.expect('<');
    const auto plus = read_side(in);
    in.expect(',');
    const auto minus = read_side(in);
    in.expect('>');
    in.skip_space();
    if (!in.at_end()) in.fail("trailing characters after pair code");

    if (plus.surfaces.size() > 1)
        throw ParseError("plus side admits at most one non-disk component", plus.position);
    std::optional<CompactSurface> plus_big;
    if (!plus.surfaces.empty()) plus_big = plus.surfaces.front();

    MinusBig minus_big;
    if (minus.surfaces.size() == 1) {
        minus_big = minus.surfaces.front();
    } else if (minus.surfaces.size() == 2) {
        if (minus.surfaces[0] != CompactSurface::annulus() || minus.surfaces[1] != CompactSurface::mobius_band())
            throw ParseError("only S2_2 u RP2_1 may list two surfaces", minus.position);
        minus_big = AnnulusMobius{};
    } else if (minus.surfaces.size() > 2) {
        throw ParseError("too many surfaces on minus side", minus.position);
    }
    return PairCode(plus.disks, plus_big, minus.disks, minus_big);
}

namespace {

std::string print_side(int disks, const std::string& big) {
    if (big.empty()) return std::to_string(disks);
    if (disks == 0) return big;
    return std::to_string(disks) + " u " + big;
}

}  // namespace

std::string print_pair(const PairCode& p) {
    std::string minus;
    if (auto* s = p.minus_surface()) minus = to_string(*s);
    if (p.exceptional()) minus = "S2_2 u RP2_1";
    return "<" + print_side(p.plus_disks, p.plus_big ? to_string(*p.plus_big) : "") + ", " +
           print_side(p.minus_disks, minus) + ">";
}

}  // namespace sextic
