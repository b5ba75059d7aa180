#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sextic/restrictions.hpp"
#include "sextic/scheme.hpp"

namespace sextic {

enum class ConstructionMethod {
    PlaneSectionsPerturbation,   // perturbed union of two plane sections
    SurfaceOfRevolution,         // x^2 + y^2 = z(z^2 - 1) cut by three planes z = C_i
    PlaneEllipsoidPerturbation,  // cubic pq + eps s near a plane times an ellipsoid
    QuarticConicSmoothing,       // conic and quartic, two of the real nodes smoothed
    OvalCollapse,                // plane sextic with six empty ovals collapsed
    GudkovCurveCollapse,         // collapse of six ovals of the Gudkov curve <5 u 1<5>>
    CubicParallelCopy,           // two-component cubic and a parallel copy, three nodes smoothed
    QuarticTwoLines,             // perturbed quartic plus two lines
    ImaginaryQuadric,            // quadric with no real points
};

std::string_view to_string(ConstructionMethod m) noexcept;

struct ConstructionRecord {
    ConstructionMethod method = ConstructionMethod::QuarticConicSmoothing;
    /// Polotovskii code such as (12387456)[0], or the source plane curve code.
    std::optional<std::string> source;

    friend bool operator==(const ConstructionRecord&, const ConstructionRecord&) = default;
};

/// True for codes like "(12387456)[0]" or "(1845)(23)(67)[0]". The bracket
/// suffix is optional: the catalog has the unbracketed "(12)(34)(56)(78)".
bool is_polotovskii_code(std::string_view code);

struct CatalogEntry {
    Scheme scheme;
    std::string family;  // item letter (forest ambients) or family tag
    int index = 0;       // 1-based item number within the ambient's list
    std::optional<ConstructionRecord> construction;
};

/// Transcribed list of realizable types: 31, 17, 157, 113, 58 entries.
std::vector<CatalogEntry> ground_truth(CubicAmbient ambient);

/// A conic-quartic smoothing producing the family instance (big; alpha, beta,
/// gamma). Oval removal makes every instance with smaller alpha and beta and
/// the same gamma constructible too.
struct SmoothingEntry {
    SurfaceKind big;
    int alpha = 0;
    int beta = 0;
    int gamma = 0;
    std::string code;
};

struct SpecialConstruction {
    Scheme scheme;
    ConstructionRecord record;
    /// Table cells (the collapse constructions) close downward under oval
    /// removal like smoothings; the other specials cover their scheme only.
    bool table_cell = false;
};

struct ConstructionTable {
    std::vector<SmoothingEntry> smoothings;  // maximal entries only
    std::vector<SpecialConstruction> specials;
};

/// Construction data for a negative-chi ambient. 7RP2 is tabulated; 5RP2 and
/// 3RP2 take the handle-reduced smoothings of the next larger cubic.
ConstructionTable construction_table(CubicAmbient ambient);

struct ClosureReport {
    CubicAmbient ambient = CubicAmbient::RP2_T3;
    std::size_t covered = 0;
    std::vector<Scheme> uncovered;   // admitted but not constructed
    std::vector<Scheme> overreach;   // constructed but not in the list

    bool ok() const noexcept { return uncovered.empty() && overreach.empty(); }
};

/// Closure of the construction table under oval removal against `admitted`.
ClosureReport closure_check(CubicAmbient ambient, const std::vector<Scheme>& admitted);
ClosureReport closure_check(CubicAmbient ambient);

struct VerifyReport {
    CubicAmbient ambient = CubicAmbient::RP2;
    std::size_t admitted = 0;
    std::size_t expected = 0;
    std::vector<Scheme> missing;  // in the list but excluded by the rules
    std::vector<Scheme> extra;    // admitted by the rules but not listed

    bool ok() const noexcept { return missing.empty() && extra.empty(); }
};

VerifyReport verify(CubicAmbient ambient, const RuleSet& rules = standard_rules());

}  // namespace sextic
