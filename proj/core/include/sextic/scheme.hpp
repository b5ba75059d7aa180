#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sextic/codes.hpp"
#include "sextic/surface.hpp"

namespace sextic {

/// Ovals on the RP2 component and, for RP2 + S2, on the sphere component.
struct ForestData {
    OvalForest projective;
    std::optional<OvalForest> sphere;

    friend bool operator==(const ForestData&, const ForestData&) = default;
};

/// Real scheme: ambient cubic type plus arrangement data. Forest data for the
/// positive ambients, a validated pair code for the negative ones.
class Scheme {
public:
    /// Sphere forests are canonicalized. Throws std::invalid_argument when the
    /// ambient does not take forest data or the sphere part is inconsistent.
    static Scheme on_projective(OvalForest projective);
    static Scheme on_projective_and_sphere(OvalForest projective, OvalForest sphere);
    /// Runs validate_pair; throws PairError.
    static Scheme from_pair(CubicAmbient ambient, PairCode pair);

    CubicAmbient ambient() const noexcept { return ambient_; }
    bool has_forests() const noexcept { return std::holds_alternative<ForestData>(data_); }
    const ForestData& forests() const { return std::get<ForestData>(data_); }
    const PairCode& pair() const { return std::get<PairCode>(data_); }

    friend bool operator==(const Scheme&, const Scheme&) = default;

private:
    Scheme(CubicAmbient a, std::variant<ForestData, PairCode> d) : ambient_(a), data_(std::move(d)) {}

    CubicAmbient ambient_ = CubicAmbient::RP2;
    std::variant<ForestData, PairCode> data_;
};

/// FOREST "@RP2" [ " | " FOREST "@S2" ] or PAIR.
std::string to_string(const Scheme& s);
/// Parses scheme text for the given ambient. On RP2 a bare forest without the
/// "@RP2" tag is accepted; on RP2 + S2 a missing sphere part means no ovals.
Scheme parse_scheme(std::string_view text, CubicAmbient ambient);

enum class AmbientComponent { Projective, Sphere, Whole };

/// One complementary region of the curve.
struct Region {
    CompactSurface surface;
    int depth = 0;  // number of ovals separating it from the outer region
    AmbientComponent component = AmbientComponent::Projective;
};

using RegionDecomposition = std::vector<Region>;

/// Complement regions of a forest scheme; outer regions come first per
/// component, then in depth-first order.
RegionDecomposition regions_of(const Scheme& s);

/// Split of the ambient into the sides g >= 0 (plus) and g <= 0 (minus).
struct HalfPair {
    std::vector<CompactSurface> plus;
    std::vector<CompactSurface> minus;
    /// Forest schemes only: region indices (into regions_of) on each side.
    std::vector<int> plus_regions;
    std::vector<int> minus_regions;

    int chi_plus() const noexcept { return euler_characteristic(plus); }
    int chi_minus() const noexcept { return euler_characteristic(minus); }
};

/// Number of sign assignments alternating across every oval, before the
/// labeling convention is applied.
int raw_coloring_count(const Scheme& s);

/// Admissible half pairs: chi(plus) = b0 (mod 2) and the minus side contains a
/// nonorientable component. A curve-free closed component is emitted on both
/// sides. For pair schemes the single validated pair is returned.
std::vector<HalfPair> colorings(const Scheme& s);

enum class PairErrorKind {
    ChiMismatch,
    BoundaryMismatch,
    ParityViolation,
    OrientabilityViolation,
    ShapeViolation,
};

std::string_view to_string(PairErrorKind kind) noexcept;

class PairError : public std::runtime_error {
public:
    PairError(PairErrorKind kind, const std::string& detail);
    PairErrorKind kind() const noexcept { return kind_; }

private:
    PairErrorKind kind_;
};

/// Checks a pair code against a negative-chi ambient and returns its half pair.
HalfPair validate_pair(const PairCode& pair, CubicAmbient ambient);

/// Number of components of the curve.
int b0(const Scheme& s);

/// Which parametrized shape a pair scheme belongs to.
enum class PairShape { Family, Exceptional, Empty };

/// <alpha u Big_{beta+gamma}, beta u kRP2_{alpha+gamma}>.
struct FamilyParams {
    SurfaceKind big;  // closed type of the plus-side non-disk component
    int alpha = 0;
    int beta = 0;
    int gamma = 0;
    int k = 0;  // crosscaps of the minus-side component

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Builds the pair of a family instance; k follows from chi additivity.
/// Throws std::invalid_argument when k < 1 or the shape is not a family.
PairCode family_pair(CubicAmbient ambient, SurfaceKind big, int alpha, int beta, int gamma);

/// Closed plus-side types admitted by the family shape on `ambient`, in
/// family order: S2, T2, 2T2, ..., then 2RP2, 4RP2, ...
std::vector<SurfaceKind> family_bigs(CubicAmbient ambient);

struct Classification {
    PairShape shape = PairShape::Family;
    std::optional<FamilyParams> params;
    int index = 0;    // 1-based family number on the ambient (0 for forest schemes)
    std::string tag;  // "S2", "2T2", ..., "exceptional", "empty", or forest item letter
};

/// Family of a scheme. Forest schemes get the item letter of the matching
/// list shape (a..f on RP2 + S2, a..c on RP2) or "other".
Classification classify_shape(const Scheme& s);

}  // namespace sextic
