#include "lisum/zero_catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "lisum/counting_model.hpp"

namespace lisum {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n\v\f");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n\v\f");
    return s.substr(first, last - first + 1);
}

Real parse_ordinate(std::string_view text, std::size_t line) {
    // from_chars rejects a leading '+', which some tables carry.
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    Real value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError("cannot parse ordinate '" + std::string(text) + "'", line);
    }
    return value;
}

}  // namespace

ZeroCatalog::ZeroCatalog(std::vector<Real> ordinates, std::string source_label)
    : ordinates_(std::move(ordinates)), source_label_(std::move(source_label)) {
    if (ordinates_.empty()) throw EmptyCatalog();
    for (std::size_t i = 0; i < ordinates_.size(); ++i) {
        const Real t = ordinates_[i];
        if (!std::isfinite(t) || t <= 0) {
            throw ValidationError("ordinate must be positive and finite", i + 1);
        }
        if (i > 0 && !(ordinates_[i - 1] < t)) {
            throw ValidationError("ordinates must be strictly increasing", i + 1);
        }
    }
}

ZeroCatalog ZeroCatalog::ingest(const std::filesystem::path& path, ZeroFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open zero table '" + path.string() + "'");
    return parse(in, path.filename().string(), format);
}

ZeroCatalog ZeroCatalog::parse(std::istream& in, std::string source_label, ZeroFormat) {
    std::vector<Real> ordinates;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto text = trim(raw);
        if (text.empty() || text.front() == '#') continue;
        const Real t = parse_ordinate(text, line);
        if (!std::isfinite(t) || t <= 0) {
            throw ValidationError("ordinate must be positive and finite", line);
        }
        if (!ordinates.empty() && !(ordinates.back() < t)) {
            throw ValidationError("ordinates must be strictly increasing", line);
        }
        ordinates.push_back(t);
    }
    if (ordinates.empty()) throw EmptyCatalog();
    return ZeroCatalog(std::move(ordinates), std::move(source_label));
}

void ZeroCatalog::write_plain_text(std::ostream& out) const {
    out << "# " << source_label_ << '\n';
    char buf[64];
    for (const Real t : ordinates_) {
        const auto res = std::to_chars(buf, buf + sizeof buf, t);
        out.write(buf, res.ptr - buf);
        out.put('\n');
    }
}

std::size_t ZeroCatalog::count_below(Real height) const noexcept {
    return static_cast<std::size_t>(
        std::upper_bound(ordinates_.begin(), ordinates_.end(), height) - ordinates_.begin());
}

bool ZeroCatalog::starts_at_first_zero() const noexcept {
    return std::fabs(ordinates_.front() - kFirstZeroHeight) <= 1e-3L;
}

ZeroCatalog ZeroCatalog::truncated(std::size_t m) const {
    m = std::clamp<std::size_t>(m, 1, ordinates_.size());
    return ZeroCatalog(std::vector<Real>(ordinates_.begin(), ordinates_.begin() + m),
                       source_label_ + " [first " + std::to_string(m) + "]");
}

CountingReport check_counting(const ZeroCatalog& catalog, Real height) {
    if (!(height > 0) || height > catalog.max_height()) {
        throw RangeError("height outside (0, max_height] of the catalog");
    }
    CountingReport report;
    report.height = height;
    report.empirical_count = catalog.count_below(height);
    report.model_count = CountingModel::smooth(CountingKind::smooth_rvm_plus_7_8).evaluate(height);
    report.gap = static_cast<Real>(report.empirical_count) - report.model_count;
    return report;
}

PerturbedCatalog::PerturbedCatalog(std::shared_ptr<const ZeroCatalog> genuine)
    : genuine_(std::move(genuine)) {
    if (!genuine_) throw EmptyCatalog();
}

std::vector<PlantedZero> PerturbedCatalog::offline_members() const {
    std::vector<PlantedZero> members;
    members.reserve(2 * planted_.size());
    for (const auto& z : planted_) {
        // Both members derive from the upper real part, so sigma and 1 - sigma
        // give the same pair (1 - hi is exact for hi in (1/2, 1)).
        const Real hi = z.real_part > Real(0.5) ? z.real_part : 1 - z.real_part;
        members.push_back({1 - hi, z.height});
        members.push_back({hi, z.height});
    }
    std::sort(members.begin(), members.end(), [](const PlantedZero& a, const PlantedZero& b) {
        return a.height != b.height ? a.height < b.height : a.real_part < b.real_part;
    });
    return members;
}

PerturbedCatalog plant(const PerturbedCatalog& perturbed, PlantedZero zero) {
    if (!(zero.real_part > 0 && zero.real_part < 1)) {
        throw InvalidPlant("planted real part must lie in (0, 1)");
    }
    if (zero.real_part == Real(0.5)) {
        throw InvalidPlant("a planted zero on the critical line is indistinguishable from a genuine one");
    }
    if (!(zero.height > 0) || !std::isfinite(zero.height)) {
        throw InvalidPlant("planted height must be positive");
    }
    PerturbedCatalog out = perturbed;
    out.planted_.push_back(zero);
    return out;
}

PerturbedCatalog plant(std::shared_ptr<const ZeroCatalog> catalog, PlantedZero zero) {
    return plant(PerturbedCatalog(std::move(catalog)), zero);
}

}  // namespace lisum
