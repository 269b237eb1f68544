#include "lisum/zero_sum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace lisum {

namespace {

// Neumaier's variant of Kahan summation; carries the running compensation.
struct CompensatedSum {
    Real sum = 0;
    Real comp = 0;

    void add(Real x) {
        const Real t = sum + x;
        if (std::fabs(sum) >= std::fabs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    Real value() const { return sum + comp; }
};

CompensatedSum merge(const CompensatedSum& a, const CompensatedSum& b) {
    CompensatedSum out = a;
    out.add(b.sum);
    out.comp += b.comp;
    return out;
}

CompensatedSum pairwise(const std::vector<CompensatedSum>& parts, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return parts[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    return merge(pairwise(parts, lo, mid), pairwise(parts, mid, hi));
}

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<Real> online_thetas(const ZeroCatalog& catalog, Real c) {
    const auto ts = catalog.ordinates();
    std::vector<Real> thetas(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) thetas[i] = detail::canonical_theta(c, ts[i]);
    return thetas;
}

}  // namespace

bool in_tail_regime(const LiParams& params, Real t_max) noexcept {
    return t_max > kTwoPi && t_max > 2 * params.c() * static_cast<Real>(params.n());
}

TailEstimate tail_estimate(const LiParams& params, Real t_max) {
    if (!in_tail_regime(params, t_max)) {
        throw TailRegimeError("tail estimate needs T_max > 2pi and T_max > 2|2b+1|n; "
                              "extend the zero table");
    }
    const Real nc = static_cast<Real>(params.n()) * params.c();
    TailEstimate out;
    out.estimate = nc * nc / kTwoPi * (std::log(t_max / kTwoPi) + 1) / t_max;
    out.bound = 2 * out.estimate;
    return out;
}

Real deterministic_sum(std::size_t count, unsigned threads,
                       const std::function<Real(std::size_t)>& term) {
    if (count == 0) return 0;
    const std::size_t chunks = (count + kChunkSize - 1) / kChunkSize;
    std::vector<CompensatedSum> parts(chunks);
    auto run_chunk = [&](std::size_t k) {
        CompensatedSum acc;
        const std::size_t end = std::min(count, (k + 1) * kChunkSize);
        for (std::size_t i = k * kChunkSize; i < end; ++i) acc.add(term(i));
        parts[k] = acc;
    };
    const unsigned workers = std::min<std::size_t>(resolve_threads(threads), chunks);
    if (workers <= 1) {
        for (std::size_t k = 0; k < chunks; ++k) run_chunk(k);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t k = w; k < chunks; k += workers) run_chunk(k);
            });
        }
    }
    return pairwise(parts, 0, chunks).value();
}

ZeroSumEngine::ZeroSumEngine(std::shared_ptr<const ZeroCatalog> catalog, Real b, SumOptions options)
    : catalog_(std::move(catalog)), b_(b), options_(options) {
    if (!catalog_) throw EmptyCatalog();
    const LiParams probe(0, b);
    thetas_ = online_thetas(*catalog_, probe.c());
}

SumResult ZeroSumEngine::finish(const LiParams& params, Real partial, std::size_t terms) const {
    SumResult r;
    r.params = params;
    r.partial_sum = partial;
    r.terms_used = terms;
    const Real t_max = catalog_->max_height();
    if (params.n() == 0) {
        r.tail_estimate = 0;
        r.tail_bound = 0;
    } else if (in_tail_regime(params, t_max)) {
        const auto tail = tail_estimate(params, t_max);
        r.tail_estimate = tail.estimate;
        r.tail_bound = tail.bound;
    } else if (options_.allow_unbounded_tail) {
        r.tail_estimate = 0;
        r.tail_bound = std::numeric_limits<Real>::infinity();
        r.tail_bounded = false;
    } else {
        tail_estimate(params, t_max);  // throws TailRegimeError
    }
    r.total = r.partial_sum + r.tail_estimate;
    r.shallow_catalog = t_max < 10 * params.c() * static_cast<Real>(params.n());
    return r;
}

SumResult ZeroSumEngine::sum(std::int64_t n) const {
    const LiParams params(n, b_);
    const auto& th = thetas_;
    const Real partial = deterministic_sum(th.size(), options_.threads, [&](std::size_t i) {
        return detail::online_term_from_theta(n, th[i]);
    });
    return finish(params, partial, th.size());
}

void ZeroSumEngine::check_extends(const PerturbedCatalog& perturbed) const {
    if (&perturbed.genuine() != catalog_.get() && !(perturbed.genuine() == *catalog_)) {
        throw Error("perturbed catalog does not extend the engine's catalog");
    }
}

namespace {

Real offline_sum(std::int64_t n, Real b, const std::vector<PlantedZero>& members) {
    Real offline = 0;
    for (const auto& z : members) offline += term_offline(n, b, {z.real_part, z.height});
    return offline;
}

}  // namespace

SumResult ZeroSumEngine::sum_perturbed(std::int64_t n, const PerturbedCatalog& perturbed) const {
    check_extends(perturbed);
    SumResult r = sum(n);
    const auto members = perturbed.offline_members();
    r.partial_sum += offline_sum(n, b_, members);
    r.terms_used += members.size();
    r.total = r.partial_sum + r.tail_estimate;
    return r;
}

void ZeroSumEngine::sweep(std::int64_t n_first, std::int64_t n_last,
                          const std::function<void(const SumResult&)>& visit,
                          const PerturbedCatalog* perturbed) const {
    if (n_first < 0) throw DomainError("order n must be non-negative");
    std::vector<PlantedZero> members;
    if (perturbed) {
        check_extends(*perturbed);
        members = perturbed->offline_members();
    }
    const auto& th = thetas_;
    const std::size_t count = th.size();
    // (cos, sin) of theta/2, and of n theta/2 for the current n
    std::vector<Real> step_c(count), step_s(count), cur_c(count), cur_s(count);
    for (std::size_t i = 0; i < count; ++i) {
        step_c[i] = std::cos(th[i] / 2);
        step_s[i] = std::sin(th[i] / 2);
    }
    for (std::int64_t n = n_first; n <= n_last; ++n) {
        const bool exact = (n - n_first) % kSweepResync == 0;
        const Real nn = static_cast<Real>(n);
        const Real partial = deterministic_sum(count, options_.threads, [&](std::size_t i) {
            if (exact) {
                const Real half = nn * th[i] / 2;
                cur_c[i] = std::cos(half);
                cur_s[i] = std::sin(half);
            } else {
                const Real c = cur_c[i];
                const Real s = cur_s[i];
                cur_c[i] = c * step_c[i] - s * step_s[i];
                cur_s[i] = s * step_c[i] + c * step_s[i];
            }
            return 4 * cur_s[i] * cur_s[i];
        });
        SumResult r = finish(LiParams(n, b_), partial, count);
        if (perturbed) {
            r.partial_sum += offline_sum(n, b_, members);
            r.terms_used += members.size();
            r.total = r.partial_sum + r.tail_estimate;
        }
        visit(r);
    }
}

SumResult zero_sum(const LiParams& params, const ZeroCatalog& catalog, const SumOptions& options) {
    // Non-owning alias: the engine only lives for this call.
    const std::shared_ptr<const ZeroCatalog> view(std::shared_ptr<const ZeroCatalog>{}, &catalog);
    return ZeroSumEngine(view, params.b(), options).sum(params.n());
}

SumResult zero_sum_perturbed(const LiParams& params, const PerturbedCatalog& perturbed,
                             const SumOptions& options) {
    return ZeroSumEngine(perturbed.genuine_ptr(), params.b(), options)
        .sum_perturbed(params.n(), perturbed);
}

}  // namespace lisum
