#pragma once

#include "tropfw/fermat_weber.hpp"
#include "tropfw/projection.hpp"
#include "tropfw/tropical.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tropfw {

enum class SearchStatus { Success, Fail };

/// Everything observable about one search run. `steps` counts processed
/// pairs (pairs whose flattening was actually solved and tested), which
/// equals visited.size(); pairs skipped because they were already visited
/// do not count. `exclusivity_checks` counts failed verifications, each of
/// which passed the exact mutual-exclusivity assertion (a failed round can
/// match the candidate point in at most one of its two coordinates;
/// violations throw ExclusivityViolationError instead of returning).
struct SearchOutcome {
    SearchStatus status;
    std::optional<TropicalTriangle> triangle;     // engaged iff Success
    std::optional<PairIndex> winning_pair;        // engaged iff Success
    std::size_t steps = 0;
    std::vector<PairIndex> visited;               // in processing order
    FwResult fw;                                  // Fermat-Weber data of the input X
    std::size_t exclusivity_checks = 0;
};

/// Per-pair verification data on one fixed augmented matrix, memoized so a
/// pair's LP is solved at most once even across different search strategies.
class PairOracle {
public:
    /// `augmented` must already carry the Fermat-Weber point as its LAST row.
    explicit PairOracle(DataMatrix augmented);

    struct PairCheck {
        bool verified;         // last row of the flattening is its FW point
        FwResult fw;           // FW data of the flattening
        TropicalPoint r;       // last row of the flattening
        Rational r_objective;  // distance_sum(r, flattening)
    };

    const DataMatrix& augmented() const { return augmented_; }
    const PairCheck& check(PairIndex pair);

    std::size_t solved_count() const { return solved_; }

private:
    DataMatrix augmented_;
    std::vector<std::optional<PairCheck>> cache_;  // indexed by lex rank
    std::size_t solved_ = 0;
};

/// Exhaustive lexicographic sweep: process (2,3), (2,4), ... until a pair
/// verifies or all (n-1)(n-2)/2 pairs fail. Requires m >= 1, n >= 3.
SearchOutcome search_lex(const DataMatrix& X);

/// Priority sweep: walks the lexicographic list but, whenever a failed
/// round matches the candidate's coordinate d1 (resp. d2), queues that
/// column and drains all untried pairs containing queued columns first
/// (FIFO over columns, lexicographic within a column). Matching columns
/// discovered during a drain are queued too, unless already queued.
/// Visits each pair at most once; same success/fail outcome as search_lex.
SearchOutcome search_priority(const DataMatrix& X);

/// Variants sharing one oracle (and one FW solve of the input): `fw` must
/// be the Fermat-Weber data of the matrix whose augmentation `oracle` holds.
SearchOutcome search_lex(PairOracle& oracle, const FwResult& fw);
SearchOutcome search_priority(PairOracle& oracle, const FwResult& fw);

}
