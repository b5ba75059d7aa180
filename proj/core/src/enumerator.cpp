#include "sextic/enumerator.hpp"

#include <algorithm>
#include <future>
#include <mutex>
#include <map>
#include <set>
#include <tuple>

namespace sextic {

std::vector<OvalForest> rooted_forests(int n) {
    static std::map<int, std::vector<OvalForest>> memo;
    static std::mutex lock;
    {
        std::lock_guard guard(lock);
        if (auto it = memo.find(n); it != memo.end()) return it->second;
    }
    std::map<std::string, OvalForest> unique;
    if (n == 0) {
        unique.emplace("<>", OvalForest{});
    } else {
        // first tree takes `size` ovals, the rest is any forest on n - size
        for (int size = 1; size <= n; ++size)
            for (const auto& inside : rooted_forests(size - 1))
                for (const auto& rest : rooted_forests(n - size)) {
                    auto f = OvalForest::disjoint(OvalForest::enclosing(inside), rest);
                    unique.emplace(print_forest(f), std::move(f));
                }
    }
    std::vector<OvalForest> out;
    for (auto& [code, f] : unique) out.push_back(std::move(f));
    std::lock_guard guard(lock);
    memo.emplace(n, out);
    return out;
}

namespace {

std::vector<OvalForest> sphere_forests(int n) {
    std::map<std::string, OvalForest> unique;
    for (const auto& f : rooted_forests(n)) {
        auto c = canonicalize_on_sphere(f);
        unique.emplace(print_forest(c), std::move(c));
    }
    std::vector<OvalForest> out;
    for (auto& [code, f] : unique) out.push_back(std::move(f));
    return out;
}

}  // namespace

void for_each_candidate(CubicAmbient ambient, const std::function<void(const Scheme&)>& visit) {
    if (ambient == CubicAmbient::RP2) {
        for (int n = 0; n <= harnack_bound; ++n)
            for (const auto& f : rooted_forests(n)) visit(Scheme::on_projective(f));
        return;
    }
    if (ambient == CubicAmbient::RP2_S2) {
        for (int total = 0; total <= harnack_bound; ++total)
            for (int on_plane = total; on_plane >= 0; --on_plane)
                for (const auto& p : rooted_forests(on_plane))
                    for (const auto& s : sphere_forests(total - on_plane))
                        visit(Scheme::on_projective_and_sphere(p, s));
        return;
    }
    for (const auto& big : family_bigs(ambient))
        for (int alpha = 0; alpha < harnack_bound; ++alpha)
            for (int beta = 0; alpha + beta < harnack_bound; ++beta)
                for (int gamma = 1; alpha + beta + gamma <= harnack_bound; ++gamma) {
                    const int k = big.euler_characteristic() + 2 - 2 * gamma - euler_characteristic(ambient);
                    if (k < 1) continue;
                    visit(Scheme::from_pair(ambient, family_pair(ambient, big, alpha, beta, gamma)));
                }
    const int n = handle_count(ambient);
    visit(Scheme::from_pair(ambient, PairCode(1, CompactSurface(SurfaceKind::orientable(n), 2), 0, AnnulusMobius{})));
    visit(Scheme::from_pair(ambient, PairCode(0, CompactSurface(SurfaceKind::orientable(n - 1), 3), 0, AnnulusMobius{})));
    visit(Scheme::from_pair(ambient, PairCode(0, std::nullopt, 0, CompactSurface(connected_kind(ambient), 0))));
}

std::vector<Scheme> candidates(CubicAmbient ambient) {
    std::vector<Scheme> out;
    for_each_candidate(ambient, [&](const Scheme& s) { out.push_back(s); });
    return out;
}

bool scheme_less(const Scheme& a, const Scheme& b) {
    auto key = [](const Scheme& s) {
        const auto c = classify_shape(s);
        const auto p = c.params.value_or(FamilyParams{});
        return std::make_tuple(c.index, p.alpha, p.beta, p.gamma, to_string(s));
    };
    return key(a) < key(b);
}

ClassifyResult classify(CubicAmbient ambient, const RuleSet& rules) {
    ClassifyResult out;
    out.ambient = ambient;
    for_each_candidate(ambient, [&](const Scheme& s) {
        auto v = evaluate(s, rules);
        if (v.admitted())
            out.admitted.push_back(s);
        else
            out.excluded.emplace_back(s, std::move(v));
    });
    std::sort(out.admitted.begin(), out.admitted.end(), scheme_less);
    return out;
}

std::map<CubicAmbient, AmbientCounts> counts(const RuleSet& rules) {
    std::vector<std::pair<CubicAmbient, std::future<ClassifyResult>>> jobs;
    for (auto a : all_ambients)
        jobs.emplace_back(a, std::async(std::launch::async, [a, &rules] { return classify(a, rules); }));
    std::map<CubicAmbient, AmbientCounts> out;
    for (auto& [a, job] : jobs) {
        const auto r = job.get();
        out[a] = {r.structural(), r.admitted.size(), r.excluded.size()};
    }
    return out;
}

}  // namespace sextic
