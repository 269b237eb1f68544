#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "lisum/angle_kernel.hpp"
#include "lisum/types.hpp"
#include "lisum/zero_catalog.hpp"

namespace lisum {

struct TailEstimate {
    Real estimate = 0;
    Real bound = 0;
};

/// Contribution of zeros above T_max, from the small-angle term n^2 c^2 / T^2
/// against the smooth density ln(T/2pi)/2pi:
///   estimate = n^2 c^2 / (2pi) * (ln(T_max/2pi) + 1) / T_max,  bound = 2 estimate.
/// Requires T_max > 2pi and T_max > 2cn, else TailRegimeError.
TailEstimate tail_estimate(const LiParams& params, Real t_max);

/// True when (params, t_max) satisfy the tail_estimate preconditions.
bool in_tail_regime(const LiParams& params, Real t_max) noexcept;

struct SumOptions {
    /// Worker threads for the chunk map; 0 picks the hardware concurrency.
    unsigned threads = 1;
    /// Report an unbounded tail instead of throwing TailRegimeError.
    bool allow_unbounded_tail = false;
};

struct SumResult {
    Real partial_sum = 0;
    Real tail_estimate = 0;
    Real total = 0;
    Real tail_bound = 0;  // +inf when the tail is outside its regime
    std::size_t terms_used = 0;
    LiParams params{0, 0};
    bool tail_bounded = true;
    /// Catalog shallower than 10 c n: the tail is a large share of the total.
    bool shallow_catalog = false;
};

/// Terms per reduction chunk; fixed so the reduction tree never depends on
/// the thread count.
inline constexpr std::size_t kChunkSize = 4096;

/// Order-fixed compensated sum: Neumaier within each kChunkSize chunk, then a
/// pairwise tree over chunk partials. Bit-identical for any thread count.
Real deterministic_sum(std::size_t count, unsigned threads,
                       const std::function<Real(std::size_t)>& term);

/// k_{n,b} summed over a catalog of on-line zeros, with an analytic tail.
SumResult zero_sum(const LiParams& params, const ZeroCatalog& catalog,
                   const SumOptions& options = {});

/// As zero_sum, plus the exact complex terms of the planted off-line zeros.
SumResult zero_sum_perturbed(const LiParams& params, const PerturbedCatalog& perturbed,
                             const SumOptions& options = {});

/// Orders between exact recomputations in ZeroSumEngine::sweep.
inline constexpr std::int64_t kSweepResync = 256;

/// Caches theta(T_j) for one shift so that sweeps over n cost one sine per
/// zero and order. Results match zero_sum bit for bit.
class ZeroSumEngine {
public:
    ZeroSumEngine(std::shared_ptr<const ZeroCatalog> catalog, Real b, SumOptions options = {});

    SumResult sum(std::int64_t n) const;
    SumResult sum_perturbed(std::int64_t n, const PerturbedCatalog& perturbed) const;

    /// Calls visit(result) for n = n_first..n_last in order. Each zero's
    /// half-angle n theta/2 advances by one rotation per order and is
    /// recomputed exactly every kSweepResync orders, so results equal sum(n)
    /// bit for bit at n_first + k kSweepResync and to ~1e-12 absolute elsewhere.
    /// Planted zeros, when given, are added exactly at every n.
    void sweep(std::int64_t n_first, std::int64_t n_last,
               const std::function<void(const SumResult&)>& visit,
               const PerturbedCatalog* perturbed = nullptr) const;

    const ZeroCatalog& catalog() const noexcept { return *catalog_; }
    Real b() const noexcept { return b_; }

private:
    SumResult finish(const LiParams& params, Real partial, std::size_t terms) const;
    void check_extends(const PerturbedCatalog& perturbed) const;

    std::shared_ptr<const ZeroCatalog> catalog_;
    Real b_;
    SumOptions options_;
    std::vector<Real> thetas_;
};

}  // namespace lisum
