#include <domchrom/errors.hh>
#include <domchrom/solver.hh>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

using namespace domchrom;

namespace
{
    constexpr std::uint64_t chunk_size = 32;

    /// Codes attaining the current extreme, trimmed to the smallest limit + 1 seen.
    struct ExtremeCodes
    {
        std::optional<int> value;
        std::vector<std::uint64_t> codes;

        auto offer(int v, std::uint64_t code, bool want_max, std::size_t keep) -> void
        {
            if (! value || (want_max ? v > *value : v < *value)) {
                value = v;
                codes.clear();
            }
            if (v != *value)
                return;
            codes.push_back(code);
            if (codes.size() > 2 * keep) {
                std::sort(codes.begin(), codes.end());
                codes.resize(keep);
            }
        }

        auto merge(const ExtremeCodes & other, bool want_max, std::size_t keep) -> void
        {
            if (! other.value)
                return;
            for (auto c : other.codes)
                offer(*other.value, c, want_max, keep);
        }

        auto finish(std::size_t keep) -> void
        {
            std::sort(codes.begin(), codes.end());
            if (codes.size() > keep)
                codes.resize(keep);
        }
    };

    struct Partial
    {
        std::map<int, std::uint64_t> distribution;
        std::uint64_t infeasible = 0;
        ExtremeCodes low, high;
    };
}

auto domchrom::default_max_sweep_edges() -> int
{
    if (const char * env = std::getenv("DOMCHROM_MAX_SWEEP_EDGES")) {
        char * end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 62)
            return static_cast<int>(v);
    }
    return 24;
}

auto SweepReport::orientation_count() const -> std::uint64_t
{
    std::uint64_t total = infeasible;
    for (auto & [_, count] : distribution)
        total += count;
    return total;
}

auto domchrom::sweep(const BaseGraph & base, DominationMode mode, const SweepOptions & options) -> SweepReport
{
    if (base.edge_count() > options.max_edges || base.edge_count() > 62)
        throw GuardExceeded("sweep of " + std::to_string(base.edge_count()) + " edges exceeds the limit of "
                + std::to_string(std::min(options.max_edges, 62)));
    if (base.size() == 0)
        throw InvalidArgument("cannot sweep the empty graph");

    const std::uint64_t total = std::uint64_t{ 1 } << base.edge_count();
    // one more than the cap, so overflow is detectable after merging
    const std::size_t keep = options.code_limit + 1;

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, (total + chunk_size - 1) / chunk_size));

    std::atomic<std::uint64_t> next{ 0 };
    std::mutex merge_lock;
    Partial merged;
    std::exception_ptr failure;

    auto worker = [&] {
        Partial local;
        try {
            for (std::uint64_t start ; (start = next.fetch_add(chunk_size)) < total ; ) {
                auto end = std::min(total, start + chunk_size);
                for (auto code = start ; code < end ; ++code) {
                    auto outcome = chi_d(orient(OrientationCode::from_index(base, code)), mode);
                    if (! outcome.value) {
                        ++local.infeasible;
                        continue;
                    }
                    ++local.distribution[*outcome.value];
                    local.low.offer(*outcome.value, code, false, keep);
                    local.high.offer(*outcome.value, code, true, keep);
                }
            }
        }
        catch (...) {
            std::lock_guard lock(merge_lock);
            failure = std::current_exception();
            return;
        }

        std::lock_guard lock(merge_lock);
        for (auto & [v, count] : local.distribution)
            merged.distribution[v] += count;
        merged.infeasible += local.infeasible;
        merged.low.merge(local.low, false, keep);
        merged.high.merge(local.high, true, keep);
    };

    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1 ; t < threads ; ++t)
            pool.emplace_back(worker);
        worker();
    }

    if (failure)
        std::rethrow_exception(failure);

    merged.low.finish(keep);
    merged.high.finish(keep);

    SweepReport report;
    report.base = base;
    report.mode = mode;
    report.distribution = std::move(merged.distribution);
    report.infeasible = merged.infeasible;
    report.min_value = merged.low.value;
    report.max_value = merged.high.value;

    auto convert = [&] (const ExtremeCodes & e, std::vector<OrientationCode> & codes, bool & overflow) {
        overflow = e.codes.size() > options.code_limit;
        for (std::size_t i = 0 ; i < e.codes.size() && i < options.code_limit ; ++i)
            codes.push_back(OrientationCode::from_index(base, e.codes[i]));
    };
    convert(merged.low, report.argmin_codes, report.argmin_overflow);
    convert(merged.high, report.argmax_codes, report.argmax_overflow);
    return report;
}

namespace
{
    auto extreme(const BaseGraph & base, DominationMode mode, const SweepOptions & options, bool want_max) -> OrientationExtreme
    {
        auto limited = options;
        limited.code_limit = std::max<std::size_t>(1, options.code_limit);
        auto report = sweep(base, mode, limited);
        auto & codes = want_max ? report.argmax_codes : report.argmin_codes;
        if (codes.empty())
            throw Infeasible("no orientation admits a dominator coloring in " + to_string(mode) + " mode");

        auto outcome = chi_d(orient(codes.front()), mode);
        return OrientationExtreme{ *outcome.value, codes.front(), *outcome.witness };
    }
}

auto domchrom::min_over_orientations(const BaseGraph & base, DominationMode mode, const SweepOptions & options) -> OrientationExtreme
{
    return extreme(base, mode, options, false);
}

auto domchrom::max_over_orientations(const BaseGraph & base, DominationMode mode, const SweepOptions & options) -> OrientationExtreme
{
    return extreme(base, mode, options, true);
}
