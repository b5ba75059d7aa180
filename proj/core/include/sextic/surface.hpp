#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sextic {

/// Raised by every text parser in the library. `position` is a byte offset
/// into the input where parsing stopped.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Closed connected surface type. Nonorientable surfaces are stored by their
/// crosscap count; orientable ones by handle count.
class SurfaceKind {
public:
    SurfaceKind() = default;

    static SurfaceKind sphere() { return SurfaceKind(true, 0); }
    static SurfaceKind orientable(int handles);
    static SurfaceKind nonorientable(int crosscaps);

    /// Canonical form of a connected sum of `handles` tori and `crosscaps`
    /// projective planes. Any crosscap turns every handle into two crosscaps.
    static SurfaceKind normalize(int handles, int crosscaps);

    bool is_orientable() const noexcept { return orientable_; }
    int genus() const noexcept { return genus_; }
    int euler_characteristic() const noexcept;

    friend auto operator<=>(const SurfaceKind&, const SurfaceKind&) = default;

private:
    SurfaceKind(bool orientable, int genus) : orientable_(orientable), genus_(genus) {}

    bool orientable_ = true;
    int genus_ = 0;
};

/// A closed surface with `punctures` open disks removed (the F_k notation).
struct CompactSurface {
    SurfaceKind kind;
    int punctures = 0;

    CompactSurface() = default;
    CompactSurface(SurfaceKind k, int holes);

    static CompactSurface disk() { return {SurfaceKind::sphere(), 1}; }
    static CompactSurface annulus() { return {SurfaceKind::sphere(), 2}; }
    static CompactSurface mobius_band() { return {SurfaceKind::nonorientable(1), 1}; }

    bool is_closed() const noexcept { return punctures == 0; }
    bool is_disk() const noexcept { return kind == SurfaceKind::sphere() && punctures == 1; }
    bool is_orientable() const noexcept { return kind.is_orientable(); }
    CompactSurface punctured(int extra) const { return {kind, punctures + extra}; }

    friend auto operator<=>(const CompactSurface&, const CompactSurface&) = default;
};

int euler_characteristic(const CompactSurface& s) noexcept;
int euler_characteristic(const std::vector<CompactSurface>& parts) noexcept;

/// Token grammar: ("S2" | "T2" | INT "T2" | "RP2" | INT "RP2") [ "_" INT ].
CompactSurface parse_surface(std::string_view text);
std::string to_string(const SurfaceKind& kind);
std::string to_string(const CompactSurface& s);

/// The five topological types of a nonsingular real cubic surface.
enum class CubicAmbient {
    RP2,         // RP2
    RP2_S2,      // RP2 + S2
    RP2_T1,      // 3RP2 = RP2 # T2
    RP2_T2,      // 5RP2 = RP2 # 2T2
    RP2_T3,      // 7RP2 = RP2 # 3T2
};

inline constexpr CubicAmbient all_ambients[] = {
    CubicAmbient::RP2_S2, CubicAmbient::RP2, CubicAmbient::RP2_T3,
    CubicAmbient::RP2_T2, CubicAmbient::RP2_T1,
};

int euler_characteristic(CubicAmbient a) noexcept;
bool has_positive_chi(CubicAmbient a) noexcept;
/// Number n of handles in RP2 # nT2; zero for the positive ambients.
int handle_count(CubicAmbient a) noexcept;
/// The ambient as a single closed surface. Undefined for RP2 + S2.
SurfaceKind connected_kind(CubicAmbient a);

std::string_view to_string(CubicAmbient a) noexcept;
/// Accepts "RP2", "RP2+S2", "3RP2", "5RP2", "7RP2".
std::optional<CubicAmbient> parse_ambient(std::string_view text) noexcept;

}  // namespace sextic
