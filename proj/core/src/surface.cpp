#include "sextic/surface.hpp"

#include <numeric>

#include "cursor.hpp"

namespace sextic {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message), position_(position) {}

SurfaceKind SurfaceKind::orientable(int handles) {
    if (handles < 0) throw std::invalid_argument("negative handle count");
    return SurfaceKind(true, handles);
}

SurfaceKind SurfaceKind::nonorientable(int crosscaps) {
    if (crosscaps < 1) throw std::invalid_argument("nonorientable surface needs a crosscap");
    return SurfaceKind(false, crosscaps);
}

SurfaceKind SurfaceKind::normalize(int handles, int crosscaps) {
    if (handles < 0 || crosscaps < 0) throw std::invalid_argument("negative summand count");
    if (crosscaps == 0) return orientable(handles);
    return nonorientable(2 * handles + crosscaps);
}

int SurfaceKind::euler_characteristic() const noexcept {
    return orientable_ ? 2 - 2 * genus_ : 2 - genus_;
}

CompactSurface::CompactSurface(SurfaceKind k, int holes) : kind(k), punctures(holes) {
    if (holes < 0) throw std::invalid_argument("negative puncture count");
}

int euler_characteristic(const CompactSurface& s) noexcept {
    return s.kind.euler_characteristic() - s.punctures;
}

int euler_characteristic(const std::vector<CompactSurface>& parts) noexcept {
    return std::accumulate(parts.begin(), parts.end(), 0, [](int acc, const CompactSurface& s) {
        return acc + euler_characteristic(s);
    });
}

std::string to_string(const SurfaceKind& kind) {
    if (kind.is_orientable()) {
        if (kind.genus() == 0) return "S2";
        if (kind.genus() == 1) return "T2";
        return std::to_string(kind.genus()) + "T2";
    }
    if (kind.genus() == 1) return "RP2";
    return std::to_string(kind.genus()) + "RP2";
}

std::string to_string(const CompactSurface& s) {
    auto text = to_string(s.kind);
    if (s.punctures > 0) text += "_" + std::to_string(s.punctures);
    return text;
}

namespace detail {

CompactSurface read_surface(Cursor& in) {
    in.skip_space();
    const auto start = in.position();
    int count = -1;
    if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
        count = in.integer();
        if (count == 0) throw ParseError("zero multiplier in surface token at offset " + std::to_string(start), start);
    }
    SurfaceKind kind;
    auto rest = in.rest();
    if (rest.substr(0, 3) == "RP2") {
        in.advance(3);
        kind = SurfaceKind::nonorientable(count < 0 ? 1 : count);
    } else if (rest.substr(0, 2) == "T2") {
        in.advance(2);
        kind = SurfaceKind::orientable(count < 0 ? 1 : count);
    } else if (rest.substr(0, 2) == "S2" && count < 0) {
        in.advance(2);
        kind = SurfaceKind::sphere();
    } else {
        in.fail("expected surface token (S2, T2, RP2)");
    }
    int punctures = 0;
    if (in.peek() == '_') {
        in.advance(1);
        if (!std::isdigit(static_cast<unsigned char>(in.peek()))) in.fail("expected puncture count after '_'");
        punctures = in.integer();
    }
    return {kind, punctures};
}

}  // namespace detail

CompactSurface parse_surface(std::string_view text) {
    detail::Cursor in(text);
    auto s = detail::read_surface(in);
    in.skip_space();
    if (!in.at_end()) in.fail("trailing characters after surface token");
    return s;
}

int euler_characteristic(CubicAmbient a) noexcept {
    switch (a) {
        case CubicAmbient::RP2: return 1;
        case CubicAmbient::RP2_S2: return 3;
        case CubicAmbient::RP2_T1: return -1;
        case CubicAmbient::RP2_T2: return -3;
        case CubicAmbient::RP2_T3: return -5;
    }
    return 0;
}

bool has_positive_chi(CubicAmbient a) noexcept { return euler_characteristic(a) > 0; }

int handle_count(CubicAmbient a) noexcept {
    switch (a) {
        case CubicAmbient::RP2_T1: return 1;
        case CubicAmbient::RP2_T2: return 2;
        case CubicAmbient::RP2_T3: return 3;
        default: return 0;
    }
}

SurfaceKind connected_kind(CubicAmbient a) {
    if (a == CubicAmbient::RP2_S2) throw std::invalid_argument("RP2+S2 is not connected");
    return SurfaceKind::normalize(handle_count(a), 1);
}

std::string_view to_string(CubicAmbient a) noexcept {
    switch (a) {
        case CubicAmbient::RP2: return "RP2";
        case CubicAmbient::RP2_S2: return "RP2+S2";
        case CubicAmbient::RP2_T1: return "3RP2";
        case CubicAmbient::RP2_T2: return "5RP2";
        case CubicAmbient::RP2_T3: return "7RP2";
    }
    return "?";
}

std::optional<CubicAmbient> parse_ambient(std::string_view text) noexcept {
    for (auto a : all_ambients)
        if (to_string(a) == text) return a;
    return std::nullopt;
}

}  // namespace sextic
