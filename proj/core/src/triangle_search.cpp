#include "tropfw/triangle_search.hpp"

#include "tropfw/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tropfw {

namespace {

std::size_t lex_rank(PairIndex p, std::size_t n) {
    std::size_t r = 0;
    for (int a = 2; a < p.d1; ++a) r += n - static_cast<std::size_t>(a);
    return r + static_cast<std::size_t>(p.d2 - p.d1 - 1);
}

// Coordinate agreement between a failed round's test row r and the candidate
// point f, restricted to the pair's two columns. In exact arithmetic a failed
// round can agree on at most one of them; both agreeing contradicts the
// geometry and means the solver itself is broken.
struct MatchFlags {
    bool at_d1;
    bool at_d2;
};

MatchFlags classify_failure(const PairOracle::PairCheck& pc, PairIndex pair) {
    const bool e1 = pc.r[pair.d1 - 1] == pc.fw.point[pair.d1 - 1];
    const bool e2 = pc.r[pair.d2 - 1] == pc.fw.point[pair.d2 - 1];
    if (e1 && e2)
        throw ExclusivityViolationError(
            "failed verification at (" + std::to_string(pair.d1) + "," +
            std::to_string(pair.d2) + ") agrees with the candidate on both coordinates");
    return {e1, e2};
}

struct Walk {
    PairOracle& oracle;
    std::vector<char> seen;  // by lex rank
    std::vector<PairIndex> visited;
    std::optional<PairIndex> winner;
    std::size_t exclusivity_checks = 0;
    std::size_t n;

    explicit Walk(PairOracle& o, std::size_t dim)
        : oracle(o), seen((dim - 1) * (dim - 2) / 2, 0), n(dim) {}

    bool tried(PairIndex p) const { return seen[lex_rank(p, n)] != 0; }

    // Runs one verification round; returns the failure flags, or nullopt on
    // success (the winner is recorded).
    std::optional<MatchFlags> process(PairIndex p) {
        seen[lex_rank(p, n)] = 1;
        visited.push_back(p);
        const auto& pc = oracle.check(p);
        if (pc.verified) {
            winner = p;
            return std::nullopt;
        }
        const MatchFlags flags = classify_failure(pc, p);
        ++exclusivity_checks;
        return flags;
    }

    SearchOutcome finish(const FwResult& fw) && {
        std::optional<TropicalTriangle> triangle;
        if (winner) triangle = compute_triangle(oracle.augmented(), *winner);
        return SearchOutcome{winner ? SearchStatus::Success : SearchStatus::Fail,
                             std::move(triangle),
                             winner,
                             visited.size(),
                             std::move(visited),
                             fw,
                             exclusivity_checks};
    }
};

void require_searchable(const DataMatrix& X) {
    if (X.row_count() < 1) throw DimensionError("searches need at least one sample row");
    if (X.dim() < 3) throw DimensionError("searches need dimension >= 3");
}

}  // namespace

PairOracle::PairOracle(DataMatrix augmented) : augmented_(std::move(augmented)) {
    if (augmented_.row_count() < 2 || augmented_.dim() < 3)
        throw DimensionError("oracle needs an augmented matrix: m >= 2 rows, dimension >= 3");
    const std::size_t n = augmented_.dim();
    cache_.resize((n - 1) * (n - 2) / 2);
}

const PairOracle::PairCheck& PairOracle::check(PairIndex pair) {
    const std::size_t rank = lex_rank(pair, augmented_.dim());
    auto& slot = cache_.at(rank);
    if (!slot) {
        DataMatrix flat = projection_matrix(augmented_, pair);
        FwResult fw = fermat_weber_point(flat);
        TropicalPoint r = flat.row(flat.row_count() - 1);
        Rational r_obj = distance_sum(r, flat);
        slot = PairCheck{r_obj == fw.objective, std::move(fw), std::move(r), std::move(r_obj)};
        ++solved_;
    }
    return *slot;
}

SearchOutcome search_lex(PairOracle& oracle, const FwResult& fw) {
    const std::size_t n = oracle.augmented().dim();
    Walk walk(oracle, n);
    for (PairIndex p : pair_order_lex(n))
        if (!walk.process(p)) break;
    return std::move(walk).finish(fw);
}

SearchOutcome search_priority(PairOracle& oracle, const FwResult& fw) {
    const std::size_t n = oracle.augmented().dim();
    const auto order = pair_order_lex(n);
    Walk walk(oracle, n);
    std::vector<int> queue;  // FIFO of promoted columns

    // One failed round may promote a column; drains then exhaust all untried
    // pairs through each promoted column (front first, lexicographic within),
    // queueing further matches as they appear. The cursor over the base order
    // only ever advances; pairs consumed by drains are skipped when reached.
    std::size_t cursor = 0;
    while (!walk.winner && walk.visited.size() < order.size()) {
        if (cursor >= order.size())
            throw SolverInvariantError("priority walk ran past the pair order");
        const PairIndex p = order[cursor++];
        if (walk.tried(p)) continue;
        const auto flags = walk.process(p);
        if (!flags) break;
        if (flags->at_d1 || flags->at_d2) {
            queue.push_back(flags->at_d1 ? p.d1 : p.d2);
            while (!queue.empty() && !walk.winner) {
                const int column = queue.front();
                bool done = false;
                for (PairIndex q : pairs_containing(column, n)) {
                    if (walk.tried(q)) continue;
                    const auto qflags = walk.process(q);
                    if (!qflags) {
                        done = true;
                        break;
                    }
                    const int match = qflags->at_d1 ? q.d1 : (qflags->at_d2 ? q.d2 : 0);
                    if (match != 0 &&
                        std::find(queue.begin(), queue.end(), match) == queue.end())
                        queue.push_back(match);
                }
                if (done) break;
                queue.erase(queue.begin());
            }
        }
    }
    return std::move(walk).finish(fw);
}

SearchOutcome search_lex(const DataMatrix& X) {
    require_searchable(X);
    const FwResult fw = fermat_weber_point(X);
    PairOracle oracle(X.with_row_appended(fw.point));
    return search_lex(oracle, fw);
}

SearchOutcome search_priority(const DataMatrix& X) {
    require_searchable(X);
    const FwResult fw = fermat_weber_point(X);
    PairOracle oracle(X.with_row_appended(fw.point));
    return search_priority(oracle, fw);
}

}  // namespace tropfw
