#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fss/soft_set.hpp"

namespace fss {

// One evaluator's grade sheet: the parameters are the candidates, the image
// of a candidate grades it against the universe of criteria.
struct Panel {
    std::vector<std::pair<std::string, FuzzySoftSet>> evaluators;
};

// Left fold of soft intersections over the panel, so the parameters of the
// result are k-tuples of candidate labels.  Requires at least two
// evaluators, one universe, and identical candidate label sets.
FuzzySoftSet aggregate_panel(const Panel& panel);

// Entries of h whose k coordinates name the same candidate, keyed by that
// candidate, in the order the diagonal labels occur in h.
std::vector<std::pair<std::string, FuzzySet>> diagonal(const FuzzySoftSet& h,
                                                       std::size_t evaluator_count);

enum class DecisionMethod { Dominance, ScoreFallback };
enum class DecisionFlag { NoDominantCandidate, ScoreTie };

struct DecisionReport {
    std::vector<std::pair<std::string, FuzzySet>> diagonal;
    // Each pair (u, v) records that u's diagonal set strictly contains v's.
    std::vector<std::pair<std::string, std::string>> dominance;
    std::optional<std::string> winner;
    DecisionMethod method = DecisionMethod::Dominance;
    // Grade sums per candidate; filled only under the score fallback.
    std::vector<std::pair<std::string, Rational>> scores;
    std::vector<DecisionFlag> flags;
};

// Dominance first: a candidate wins outright when its diagonal set strictly
// contains every other candidate's.  Otherwise grade sums break the impasse,
// flagged accordingly; tied maxima leave the winner unset.
DecisionReport rank_candidates(std::vector<std::pair<std::string, FuzzySet>> diag);

// aggregate_panel, diagonal and rank_candidates in one step.
DecisionReport decide(const Panel& panel);

} // namespace fss
