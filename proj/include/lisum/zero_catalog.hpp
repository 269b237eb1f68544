#pragma once

#include <cmath>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lisum/types.hpp"

namespace lisum {

enum class ZeroFormat { plain_text };

/// Sorted, validated ordinates T_j of non-trivial zeros 1/2 + iT_j.
///
/// Only positive ordinates are stored; conjugates are implied. The catalog
/// is immutable once built and can be shared freely across threads.
class ZeroCatalog {
public:
    /// Validates positivity and strict monotonicity. Throws EmptyCatalog on
    /// an empty list and ValidationError (1-based index as the line) otherwise.
    ZeroCatalog(std::vector<Real> ordinates, std::string source_label);

    static ZeroCatalog ingest(const std::filesystem::path& path,
                              ZeroFormat format = ZeroFormat::plain_text);
    static ZeroCatalog parse(std::istream& in, std::string source_label,
                             ZeroFormat format = ZeroFormat::plain_text);

    /// Writes the plain-text form; parse() of the output reproduces the
    /// catalog bit for bit.
    void write_plain_text(std::ostream& out) const;

    std::span<const Real> ordinates() const noexcept { return ordinates_; }
    const std::string& source_label() const noexcept { return source_label_; }
    Real max_height() const noexcept { return ordinates_.back(); }
    std::size_t count() const noexcept { return ordinates_.size(); }

    /// #{T_j <= height}.
    std::size_t count_below(Real height) const noexcept;

    /// True when the first ordinate sits at the first zero 14.1347...
    bool starts_at_first_zero() const noexcept;

    /// Prefix of the first m zeros (m clamped to count()).
    ZeroCatalog truncated(std::size_t m) const;

    friend bool operator==(const ZeroCatalog&, const ZeroCatalog&) = default;

private:
    std::vector<Real> ordinates_;
    std::string source_label_;
};

struct CountingReport {
    Real height = 0;
    std::size_t empirical_count = 0;
    Real model_count = 0;
    Real gap = 0;  // empirical - model
};

/// Compares #{T_j <= H} with the smooth Riemann-von Mangoldt count (with the
/// 7/8 constant). Requires 0 < H <= max_height, else RangeError.
CountingReport check_counting(const ZeroCatalog& catalog, Real height);

/// Conservative O(ln T) envelope for |empirical - smooth| counts.
inline Real counting_envelope(Real height) { return 3 + std::log(height); }

/// An artificial zero sigma + iT off the critical line.
struct PlantedZero {
    Real real_part = 0;
    Real height = 0;
};

/// A genuine catalog plus an overlay of planted off-line zeros. Each plant
/// stands for the symmetric quadruple {s + iT, 1 - s + iT} and conjugates.
class PerturbedCatalog {
public:
    explicit PerturbedCatalog(std::shared_ptr<const ZeroCatalog> genuine);

    const ZeroCatalog& genuine() const noexcept { return *genuine_; }
    std::shared_ptr<const ZeroCatalog> genuine_ptr() const noexcept { return genuine_; }
    std::span<const PlantedZero> planted() const noexcept { return planted_; }

    /// Positive-height zeros: genuine ordinates plus two per plant.
    std::size_t count() const noexcept { return genuine_->count() + 2 * planted_.size(); }

    /// Off-line zeros with positive imaginary part, ordered by (height, real
    /// part) so that sums over them do not depend on how a plant was spelled.
    std::vector<PlantedZero> offline_members() const;

    friend PerturbedCatalog plant(const PerturbedCatalog&, PlantedZero);

private:
    std::shared_ptr<const ZeroCatalog> genuine_;
    std::vector<PlantedZero> planted_;
};

/// Throws InvalidPlant unless 0 < sigma < 1, sigma != 1/2 and T > 0.
PerturbedCatalog plant(std::shared_ptr<const ZeroCatalog> catalog, PlantedZero zero);
PerturbedCatalog plant(const PerturbedCatalog& perturbed, PlantedZero zero);

}  // namespace lisum
