#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "sextic/restrictions.hpp"
#include "sextic/scheme.hpp"

namespace sextic {

/// All canonical rooted forests with exactly n ovals, ordered by printed code.
std::vector<OvalForest> rooted_forests(int n);

/// Structural candidate space of an ambient, in deterministic order.
/// Forest ambients: every forest pair with at most five ovals in total.
/// Pair ambients: every family instance with k >= 1 and alpha+beta+gamma <= 5,
/// then the two annulus plus Moebius band pairs, then the empty curve.
std::vector<Scheme> candidates(CubicAmbient ambient);
void for_each_candidate(CubicAmbient ambient, const std::function<void(const Scheme&)>& visit);

/// Canonical order: family index, then (alpha, beta, gamma), then code text.
bool scheme_less(const Scheme& a, const Scheme& b);

struct ClassifyResult {
    CubicAmbient ambient = CubicAmbient::RP2;
    std::vector<Scheme> admitted;
    std::vector<std::pair<Scheme, Verdict>> excluded;

    std::size_t structural() const noexcept { return admitted.size() + excluded.size(); }
};

ClassifyResult classify(CubicAmbient ambient, const RuleSet& rules = standard_rules());

struct AmbientCounts {
    std::size_t structural = 0;
    std::size_t admitted = 0;
    std::size_t excluded = 0;
};

/// Per-ambient totals; ambients are classified concurrently.
std::map<CubicAmbient, AmbientCounts> counts(const RuleSet& rules = standard_rules());

}  // namespace sextic
