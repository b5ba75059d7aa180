#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sextic/surface.hpp"

namespace sextic {

/// Nesting forest of ovals. Each element of ovals() is one oval, represented
/// by the forest it encloses. Instances are kept in canonical order: empty
/// ovals first, then nested ovals sorted by (oval count, printed code).
class OvalForest {
public:
    OvalForest() = default;
    explicit OvalForest(std::vector<OvalForest> ovals);

    /// n disjoint empty ovals, the code <n>.
    static OvalForest empty_ovals(int n);
    /// A single oval enclosing `inside`, the code <1<inside>>.
    static OvalForest enclosing(OvalForest inside);
    /// Disjoint union of two forests.
    static OvalForest disjoint(const OvalForest& a, const OvalForest& b);

    const std::vector<OvalForest>& ovals() const noexcept { return ovals_; }
    bool empty() const noexcept { return ovals_.empty(); }
    int top_level() const noexcept { return static_cast<int>(ovals_.size()); }
    int size() const noexcept { return size_; }
    int depth() const noexcept;
    /// Number of (oval, enclosing oval) pairs.
    int nesting_pairs() const noexcept;

    friend bool operator==(const OvalForest&, const OvalForest&) = default;

private:
    std::vector<OvalForest> ovals_;
    int size_ = 0;
};

/// Grammar: FOREST := "<" BODY ">" ; BODY := e | TERM { "u" TERM } ;
///          TERM := INT | "1<" BODY ">"
OvalForest parse_forest(std::string_view text);
std::string print_forest(const OvalForest& f);

/// Re-roots the region tree of a curve on S2 at every complementary region
/// and keeps the rooting with the fewest nesting pairs; ties go to the
/// lexicographically smallest printed code.
OvalForest canonicalize_on_sphere(const OvalForest& f);

/// The annulus plus Moebius band side S2_2 u RP2_1, the only minus side
/// allowed to hold two non-disk components.
struct AnnulusMobius {
    friend auto operator<=>(const AnnulusMobius&, const AnnulusMobius&) = default;
};

using MinusBig = std::variant<std::monostate, CompactSurface, AnnulusMobius>;

/// <j u F, n u G>: disk counts and at most one non-disk component per side.
/// A big component that is itself a disk is folded into the disk count.
struct PairCode {
    int plus_disks = 0;
    std::optional<CompactSurface> plus_big;
    int minus_disks = 0;
    MinusBig minus_big;

    PairCode() = default;
    PairCode(int plus_disks, std::optional<CompactSurface> plus_big, int minus_disks, MinusBig minus_big);

    bool exceptional() const noexcept { return std::holds_alternative<AnnulusMobius>(minus_big); }
    const CompactSurface* minus_surface() const noexcept { return std::get_if<CompactSurface>(&minus_big); }

    std::vector<CompactSurface> plus_components() const;
    std::vector<CompactSurface> minus_components() const;
    int plus_boundary() const noexcept;
    int minus_boundary() const noexcept;

    friend bool operator==(const PairCode&, const PairCode&) = default;
};

/// Grammar: PAIR := "<" SIDE "," SIDE ">" ; SIDE := INT | SURFLIST | INT "u" SURFLIST.
/// A two-surface list is accepted only as "S2_2 u RP2_1" on the minus side.
PairCode parse_pair(std::string_view text);
/// Zero disk counts are omitted next to a surface: <3 u S2_2, 5RP2_5>.
std::string print_pair(const PairCode& p);

}  // namespace sextic
