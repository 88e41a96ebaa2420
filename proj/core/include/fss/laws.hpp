#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fss/soft_set.hpp"

namespace fss {

// Every algebraic law the harness can check.  Laws over the product-style
// operations quantify over parameter tuples; the family laws quantify over
// tau and its extremal subfamilies.
enum class LawId {
    Involution,
    CommutativeUnion,
    CommutativeIntersection,
    CommutativeProduct,
    CommutativeSum,
    AssociativeUnion,
    AssociativeIntersection,
    AssociativeProduct,
    AssociativeSum,
    DeMorganIntersection, // complement of intersection = union of complements
    DeMorganUnion,        // complement of union = intersection of complements
    DistributiveUnionOverIntersection,
    DistributiveIntersectionOverUnion,
    IdentityComplementNull,      // complement of a null set is absolute
    IdentityComplementAbsolute,  // complement of an absolute set is null
    IdentityIntersectionNull,    // f meet null ~ null
    IdentityUnionNull,           // f join null ~ f
    IdentityProductNull,         // f times null ~ null
    IdentitySumNull,             // f plus null ~ f
    IdentityIntersectionAbsolute, // f meet absolute ~ f
    IdentityUnionAbsolute,        // f join absolute ~ absolute
    IdentityProductAbsolute,      // f times absolute ~ f
    IdentitySumAbsolute,          // f plus absolute ~ absolute
    WeakEquivMinMax,    // weak equivalence forces equal min and max families
    ComplementDuality,  // max members complement to min members and back
    MinMaxImplicationUnionMax,
    MinMaxImplicationIntersectionMax,
    MinMaxImplicationIntersectionMin,
    MinMaxImplicationUnionMin,
    DisjointMinMax, // pairwise disjoint images make tau its own min and max
};

// Converses of the four min/max implications; these fail in general and the
// harness exists to find the witnesses.
enum class ConverseId {
    ConverseUnionMax,
    ConverseUnionMin,
    ConverseIntersectionMax,
    ConverseIntersectionMin,
};

using LawTarget = std::variant<LawId, ConverseId>;

std::string_view law_name(LawId law);
std::string_view converse_name(ConverseId converse);
std::optional<LawTarget> target_from_name(std::string_view name);
std::span<const LawId> all_laws();
std::span<const ConverseId> all_converses();

std::size_t law_arity(LawId law);

struct Witness {
    std::string location; // parameter tuple, possibly "@ element"
    std::string expected;
    std::string actual;
};

struct LawReport {
    LawTarget target;
    bool holds = true;
    std::optional<Witness> witness; // present exactly when holds is false
};

// Checks one law on concrete operands.  Throws ArityMismatchError for the
// wrong operand count and PreconditionUnmetError when the law's hypothesis
// does not apply; neither is a violation.
LawReport check_law(LawId law, std::span<const FuzzySoftSet> operands);

LawReport check_converse_minmax(ConverseId which, const FuzzySoftSet& f, const FuzzySoftSet& g);

struct GenConfig {
    std::size_t universe_size = 3;
    std::size_t param_count = 3;
    std::uint64_t grade_denominator = 10; // grades drawn from {0, 1/d, ..., 1}
    std::uint64_t seed = 0;
};

// Deterministic pseudo-random soft set over elements e1..en with parameters
// p1..pm.  Equal configs give equal results.
FuzzySoftSet gen_random(const GenConfig& cfg);

// A soft set and a relabeled copy with some parameters duplicated; the pair
// shares its tau family, hence is weakly equivalent by construction.
std::pair<FuzzySoftSet, FuzzySoftSet> gen_weakly_equivalent_pair(const GenConfig& cfg);

// Operands for one law check, drawn so the law's hypothesis holds.  Throws
// PreconditionUnmetError when the config cannot satisfy it.
std::vector<FuzzySoftSet> gen_operands(const LawTarget& target, const GenConfig& cfg);

struct SearchResult {
    std::uint64_t trial = 0;
    std::vector<FuzzySoftSet> operands;
    LawReport report;
};

// Runs up to `trials` independent checks, the trial at index t seeded with
// cfg.seed + t, and returns the first violating instance if any.  Trials
// whose precondition cannot be met are skipped.
std::optional<SearchResult> search_counterexample(const LawTarget& target, const GenConfig& cfg,
                                                  std::uint64_t trials);

struct TrialStats {
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
    std::uint64_t violations = 0;
    std::optional<SearchResult> first_violation;
};

// Same trial scheme as search_counterexample, but runs every trial and
// counts outcomes instead of stopping at the first violation.
TrialStats run_trials(const LawTarget& target, const GenConfig& cfg, std::uint64_t trials);

} // namespace fss
