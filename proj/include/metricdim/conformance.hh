/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef METRICDIM_GUARD_CONFORMANCE_HH
#define METRICDIM_GUARD_CONFORMANCE_HH 1

#include <metricdim/families.hh>

#include <string>
#include <vector>

namespace metricdim
{
    enum class Grid
    {
        Small,
        Full
    };

    struct SuiteResult
    {
        std::string name;
        std::size_t checks = 0;
        std::size_t failures = 0;
        std::size_t skipped = 0;
        std::vector<std::string> notes;   // one line per failure or skip
        double seconds = 0.0;

        auto passed() const -> bool { return failures == 0 && checks > 0; }
    };

    /// observation1, lemma2, lemma3, lemma4, lemma5, lemma6, theorem1, theorem2.
    auto suite_names() -> const std::vector<std::string> &;

    /// Throws InvalidParams for an unknown suite name.
    auto run_suite(const std::string & name, Grid grid) -> SuiteResult;

    /// Refutation searches above this many candidate subsets are skipped (and reported).
    inline constexpr double desk_scale_budget = 2e8;
}

#endif
