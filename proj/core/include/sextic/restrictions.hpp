#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sextic/scheme.hpp"

namespace sextic {

/// 1/2 CB.CB, the constant entering the orientation-formula computations for
/// surfaces F = CA/conj u B+ in CB/conj.
inline constexpr int half_cubic_self_intersection = 6;

/// Maximal number of curve components (genus of CA is 4).
inline constexpr int harnack_bound = 5;

struct RuleCheck {
    bool applicable = false;
    bool holds = true;
    std::string detail;  // computed quantities, for explain()
};

struct Rule {
    std::string id;
    std::string basis;  // the result the predicate encodes
    std::function<RuleCheck(const Scheme&)> check;
};

using RuleSet = std::vector<Rule>;

/// Every exclusion rule, in report order.
const RuleSet& standard_rules();

enum class Status { Admitted, Excluded };

struct Verdict {
    Status status = Status::Admitted;
    std::vector<std::string> violated;  // sorted; empty iff admitted

    bool admitted() const noexcept { return status == Status::Admitted; }
};

Verdict evaluate(const Scheme& s, const RuleSet& rules = standard_rules());

struct RuleReport {
    std::string id;
    std::string basis;
    RuleCheck check;
};

struct Explanation {
    std::string code;
    CubicAmbient ambient = CubicAmbient::RP2;
    int b0 = 0;
    std::vector<RuleReport> rules;
    Verdict verdict;
};

Explanation explain(const Scheme& s, const RuleSet& rules = standard_rules());
std::string to_text(const Explanation& e);

/// Euler characteristics of every surface bounded by the curve: one parity
/// class per component carrying ovals, curve-free components in or out.
std::vector<int> bounded_surface_chis(const Scheme& s);

}  // namespace sextic
