// Acceptance runner: exercises the shipping surface end to end and prints one
// verdict line per criterion.  Exit status is the number of failed criteria,
// so a zero exit means every criterion passed.

#include "fixtures.hpp"
#include "oracle.hpp"

#include "fss/cli.hpp"
#include "fss/decision.hpp"
#include "fss/document.hpp"
#include "fss/laws.hpp"
#include "fss/soft_matrix.hpp"

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& note) {
        if (!condition && ok) {
            ok = false;
            detail = note;
        }
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << "s";
    return os.str();
}

// -- criterion 1: worked panel decision ---------------------------------

Verdict check_decision() {
    const auto start = Clock::now();
    Verdict v;

    const fss::DecisionReport report = fss::decide(fixtures::sample_panel());
    v.require(report.diagonal.size() == 3, "expected three candidates on the diagonal");
    if (v.ok) {
        v.require(report.diagonal[0].first == "a" &&
                      report.diagonal[0].second == fixtures::diagonal_a(),
                  "candidate a's diagonal set is wrong");
        v.require(report.diagonal[1].first == "b" &&
                      report.diagonal[1].second == fixtures::diagonal_b(),
                  "candidate b's diagonal set is wrong");
        v.require(report.diagonal[2].first == "c" &&
                      report.diagonal[2].second == fixtures::diagonal_c(),
                  "candidate c's diagonal set is wrong");
    }
    v.require(report.winner.has_value() && *report.winner == "a", "winner must be candidate a");
    v.require(report.method == fss::DecisionMethod::Dominance,
              "the winner must be found by dominance, not the score fallback");

    const double elapsed = seconds_since(start);
    v.require(elapsed < 1.0, "ran over the 1s budget (" + fmt_seconds(elapsed) + ")");
    return v;
}

// -- criterion 2: worked matrix grids ------------------------------------

Verdict check_matrices() {
    Verdict v;
    const auto met = fss::m_intersection(fixtures::combine_left_matrix(),
                                         fixtures::combine_right_matrix());
    v.require(met == fixtures::intersection_result_matrix(),
              "entrywise-minimum grid differs from the worked 3x6 result");

    const auto joined = fss::m_union(fixtures::combine_left_matrix(),
                                     fixtures::combine_right_matrix());
    v.require(joined == fixtures::union_result_matrix(),
              "entrywise-maximum grid differs from the worked 3x6 result");

    const auto flipped = fss::m_complement(fixtures::complement_input_matrix());
    v.require(flipped == fixtures::complement_output_matrix(),
              "entrywise complement differs from the worked 3x3 result");
    return v;
}

// -- criterion 3: worked soft-set examples --------------------------------

Verdict check_worked_examples() {
    Verdict v;

    {
        auto f = fixtures::complement_sample();
        auto u = f.universe();
        auto c = fss::complement(f);
        v.require(c.image(0) == fss::FuzzySet::sparse(
                                    u, {{"x", "0.8"}, {"y", "1"}, {"z", "0.2"}}) &&
                      c.image(1) == fss::FuzzySet::sparse(u, {{"x", "0.3"}, {"z", "1"}}),
                  "complement images differ from the worked values");
        v.require(fss::are_equal(fss::complement(c), f), "complement must be an involution");
    }

    {
        auto [f, g] = fixtures::product_op_pair();
        auto u = f.universe();
        auto joined = fss::soft_union(f, g);
        v.require(joined.param_count() == 4 &&
                      joined.image(0) == fss::FuzzySet::sparse(
                                             u, {{"a", "0.4"}, {"b", "0.8"}, {"c", "0.5"}}) &&
                      joined.image(1) == fss::FuzzySet::sparse(
                                             u, {{"a", "0.6"}, {"b", "0.8"}, {"c", "1"}}) &&
                      joined.image(2) == fss::FuzzySet::sparse(u, {{"b", "0.3"}, {"c", "0.7"}}) &&
                      joined.image(3) == fss::FuzzySet::sparse(u, {{"a", "0.6"}, {"c", "1"}}),
                  "union images differ from the worked values");
        auto met = fss::soft_intersection(f, g);
        v.require(met.image(0) == fss::FuzzySet::sparse(u, {{"b", "0.3"}}) &&
                      met.image(1) == fss::FuzzySet::sparse(u, {{"a", "0.4"}}) &&
                      met.image(2) == fss::FuzzySet::sparse(u, {{"c", "0.5"}}) &&
                      met.image(3) == fss::FuzzySet::sparse(u, {{"c", "0.7"}}),
                  "intersection images differ from the worked values");
    }

    {
        auto f = fixtures::extremal_sample();
        auto u = f.universe();
        auto mins = fss::min_family(f);
        v.require(mins.size() == 1 &&
                      mins.contains(fss::FuzzySet::sparse(u, {{"a", "0.5"}})),
                  "minimal family must be exactly {a/0.5}");
        auto maxs = fss::max_family(f);
        v.require(maxs.size() == 2 &&
                      maxs.contains(fss::FuzzySet::sparse(
                          u, {{"a", "0.6"}, {"b", "0.2"}, {"c", "0.3"}})) &&
                      maxs.contains(fss::FuzzySet::sparse(u, {{"a", "0.7"}, {"b", "0.2"}})),
                  "maximal family must be the two stated images");
    }

    v.require(fss::are_equivalent(fixtures::base_sample(), fixtures::relabeled_sample()),
              "relabeled sample must be equivalent to the base sample");
    v.require(!fss::are_equal(fixtures::base_sample(), fixtures::relabeled_sample()),
              "relabeled sample must not be equal to the base sample");

    {
        auto f = fixtures::base_sample();
        auto g = fixtures::approximation_target();
        v.require(fss::internally_approximates(f, g) &&
                      fss::strictly_internally_approximates(f, g) &&
                      fss::externally_approximates(f, g) &&
                      fss::strictly_externally_approximates(f, g) &&
                      !fss::internally_approximates(g, f) && !fss::externally_approximates(g, f),
                  "approximation relations differ from the worked pair");
    }

    {
        auto [in_f, in_g] = fixtures::internal_equivalence_pair();
        v.require(fss::internally_equivalent(in_f, in_g),
                  "worked internally equivalent pair not recognized");
        auto [ex_f, ex_g] = fixtures::external_equivalence_pair();
        v.require(fss::externally_equivalent(ex_f, ex_g),
                  "worked externally equivalent pair not recognized");
        auto [wk_f, wk_g] = fixtures::weak_equivalence_pair();
        v.require(fss::weakly_equivalent(wk_f, wk_g),
                  "worked weakly equivalent pair not recognized");
    }
    return v;
}

// -- criterion 4: converse failures with pinned witnesses -----------------

Verdict check_converse_counterexample() {
    Verdict v;
    auto [f, g] = fixtures::converse_failure_pair();
    auto u = f.universe();

    for (fss::LawId law :
         {fss::LawId::MinMaxImplicationUnionMax, fss::LawId::MinMaxImplicationUnionMin,
          fss::LawId::MinMaxImplicationIntersectionMax,
          fss::LawId::MinMaxImplicationIntersectionMin}) {
        const fss::FuzzySoftSet ops[] = {f, g};
        v.require(fss::check_law(law, ops).holds,
                  std::string("forward form of ") + std::string(fss::law_name(law)) +
                      " must hold on this pair");
    }

    const auto joined = fss::soft_union(f, g);
    const auto met = fss::soft_intersection(f, g);

    auto union_max = fss::check_converse_minmax(fss::ConverseId::ConverseUnionMax, f, g);
    v.require(!union_max.holds && union_max.witness && union_max.witness->location == "(x,q)",
              "converse union/max must fail at (x,q)");
    const fss::FuzzySet* uxq = joined.find_image(fss::ParamLabel::pair("x", "q"));
    v.require(uxq != nullptr && *uxq == fss::FuzzySet::sparse(u, {{"a", "0.5"}}),
              "the union image at (x,q) must be {a/0.5}");
    v.require(!fss::max_family(joined).contains(*uxq),
              "the union image at (x,q) must sit outside the maximal family");

    auto union_min = fss::check_converse_minmax(fss::ConverseId::ConverseUnionMin, f, g);
    v.require(!union_min.holds && union_min.witness && union_min.witness->location == "(x,p)",
              "converse union/min must fail at (x,p)");
    const fss::FuzzySet* uxp = joined.find_image(fss::ParamLabel::pair("x", "p"));
    v.require(uxp != nullptr && !fss::min_family(joined).contains(*uxp),
              "the union image at (x,p) must sit outside the minimal family");

    auto inter_max = fss::check_converse_minmax(fss::ConverseId::ConverseIntersectionMax, f, g);
    auto inter_min = fss::check_converse_minmax(fss::ConverseId::ConverseIntersectionMin, f, g);
    v.require(!inter_max.holds && inter_max.witness && inter_max.witness->location == "(x,p)",
              "converse intersection/max must fail at (x,p)");
    v.require(!inter_min.holds && inter_min.witness && inter_min.witness->location == "(x,p)",
              "converse intersection/min must fail at (x,p)");
    const fss::FuzzySet* ixp = met.find_image(fss::ParamLabel::pair("x", "p"));
    v.require(ixp != nullptr && fss::is_empty(*ixp),
              "the intersection image at (x,p) must be the empty fuzzy set");
    v.require(ixp != nullptr && !fss::max_family(met).contains(*ixp) &&
                  !fss::min_family(met).contains(*ixp),
              "the empty image must sit outside both extremal families");
    return v;
}

// -- criterion 5: seeded sweeps over every law ----------------------------

Verdict check_law_sweeps() {
    const auto start = Clock::now();
    Verdict v;

    // One fixed configuration for every law, chosen up front: universe 4,
    // three parameters per operand, grades in tenths, base seed 0, 1000
    // deterministic trials per law.  Whatever these sweeps find is reported
    // as is.
    fss::GenConfig cfg;
    cfg.universe_size = 4;
    cfg.param_count = 3;
    cfg.grade_denominator = 10;
    cfg.seed = 0;
    const std::uint64_t trials = 1000;

    std::string failures;
    for (fss::LawId law : fss::all_laws()) {
        const fss::TrialStats stats = fss::run_trials(law, cfg, trials);
        if (stats.violations != 0) {
            if (!failures.empty()) {
                failures += "; ";
            }
            failures += std::string(fss::law_name(law)) + ": " +
                        std::to_string(stats.violations) + " violation" +
                        (stats.violations == 1 ? "" : "s") + " in " + std::to_string(trials) +
                        " trials, first at trial " +
                        std::to_string(stats.first_violation->trial);
        }
    }
    v.require(failures.empty(), failures);

    const double elapsed = seconds_since(start);
    v.require(elapsed < 60.0, "ran over the 60s budget (" + fmt_seconds(elapsed) + ")");
    if (v.ok) {
        v.detail = fmt_seconds(elapsed);
    }
    return v;
}

// -- criterion 6: oracle agreement ----------------------------------------

std::vector<oracle::Row> column_rows(const fss::ColumnSet& columns) {
    std::vector<oracle::Row> rows;
    rows.reserve(columns.size());
    for (const auto& column : columns.members()) {
        oracle::Row row;
        row.reserve(column.entries.size());
        for (const auto& grade : column.entries) {
            row.push_back(grade.value());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Verdict check_oracles() {
    Verdict v;
    fss::GenConfig cfg;
    cfg.universe_size = 4;
    cfg.param_count = 3;
    cfg.grade_denominator = 10;

    for (std::uint64_t seed = 0; seed < 1000 && v.ok; ++seed) {
        cfg.seed = seed;
        const fss::FuzzySoftSet f = fss::gen_random(cfg);
        cfg.seed = seed + 1000000;
        const fss::FuzzySoftSet g = fss::gen_random(cfg);
        const std::string tag = " (seed " + std::to_string(seed) + ")";

        const auto mins = fss::min_family(f);
        const auto maxs = fss::max_family(f);
        v.require(oracle::same_rows(oracle::family_rows(mins), oracle::min_rows(f)),
                  "min_family disagrees with the brute-force oracle" + tag);
        v.require(oracle::same_rows(oracle::family_rows(maxs), oracle::max_rows(f)),
                  "max_family disagrees with the brute-force oracle" + tag);

        const fss::SoftMatrix m = fss::to_matrix(f);
        const fss::SoftMatrix n = fss::to_matrix(g);
        v.require(oracle::same_rows(column_rows(fss::m_min_columns(m)),
                                    oracle::family_rows(mins)),
                  "m_min_columns disagrees with min_family" + tag);
        v.require(oracle::same_rows(column_rows(fss::m_max_columns(m)),
                                    oracle::family_rows(maxs)),
                  "m_max_columns disagrees with max_family" + tag);
        v.require(fss::m_equivalent(m, n) == fss::are_equivalent(f, g),
                  "m_equivalent disagrees with are_equivalent" + tag);
        v.require(fss::m_approx_internal(m, n) == fss::internally_approximates(f, g),
                  "m_approx_internal disagrees with internally_approximates" + tag);
        v.require(fss::m_approx_external(m, n) == fss::externally_approximates(f, g),
                  "m_approx_external disagrees with externally_approximates" + tag);
    }
    return v;
}

// -- criterion 7: round-trip identities -----------------------------------

Verdict check_round_trips() {
    Verdict v;
    fss::GenConfig cfg;
    cfg.universe_size = 4;
    cfg.param_count = 3;
    cfg.grade_denominator = 10;

    for (std::uint64_t seed = 0; seed < 1000 && v.ok; ++seed) {
        cfg.seed = seed;
        fss::FuzzySoftSet f = fss::gen_random(cfg);
        if (seed % 5 == 4) {
            // Every fifth instance gets composite labels via a product op.
            cfg.seed = seed + 2000000;
            f = fss::soft_union(f, fss::gen_random(cfg));
        }
        const std::string tag = " (seed " + std::to_string(seed) + ")";

        v.require(fss::are_equal(fss::from_matrix(fss::to_matrix(f)), f),
                  "matrix round-trip is not the identity" + tag);

        const std::string text = fss::serialize_soft_set_document(f);
        const fss::FuzzySoftSet back = fss::parse_soft_set_document(text);
        v.require(fss::are_equal(back, f), "document round-trip is not the identity" + tag);
        v.require(fss::serialize_soft_set_document(back) == text,
                  "document serialization is not byte-stable" + tag);
    }
    return v;
}

// -- criterion 8: counterexample search through the CLI --------------------

Verdict check_search() {
    const auto start = Clock::now();
    Verdict v;

    std::istringstream in;
    std::ostringstream out;
    std::ostringstream err;
    const int code = fss::run_cli({"laws", "counterexample", "--target", "converse-union-max",
                                   "--universe", "3", "--params", "3", "--denominator", "10",
                                   "--trials", "100000"},
                                  in, out, err);
    v.require(code == 0, "search must exit 0 after finding a violation (got " +
                             std::to_string(code) + ")");
    v.require(out.str().find("\"holds\": false") != std::string::npos,
              "search output must carry a failing report");

    const double elapsed = seconds_since(start);
    v.require(elapsed < 30.0, "ran over the 30s budget (" + fmt_seconds(elapsed) + ")");
    if (v.ok) {
        v.detail = fmt_seconds(elapsed);
    }
    return v;
}

struct Criterion {
    const char* label;
    Verdict (*run)();
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"worked panel decision: exact diagonal, winner by dominance, under 1s",
         check_decision},
        {"worked matrix grids: intersection, union, complement, exact with column order",
         check_matrices},
        {"worked soft-set examples: complement, union/intersection, extremal families, "
         "equivalences, approximations",
         check_worked_examples},
        {"worked implication pair: forward forms hold, all four converses fail with pinned "
         "witnesses",
         check_converse_counterexample},
        {"seeded sweeps: 30 laws x 1000 trials, zero violations, under 60s",
         check_law_sweeps},
        {"oracle agreement: extremal families and matrix relations on 1000 instances",
         check_oracles},
        {"round-trips: matrix and document identities on 1000 instances", check_round_trips},
        {"counterexample search: converse union/max found within 100000 trials, under 30s",
         check_search},
    };

    int failed = 0;
    for (std::size_t i = 0; i < std::size(criteria); ++i) {
        Verdict verdict;
        try {
            verdict = criteria[i].run();
        } catch (const std::exception& e) {
            verdict.ok = false;
            verdict.detail = std::string("unexpected exception: ") + e.what();
        }
        std::cout << (verdict.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
                  << criteria[i].label;
        if (!verdict.detail.empty()) {
            std::cout << " [" << verdict.detail << "]";
        }
        std::cout << '\n';
        if (!verdict.ok) {
            ++failed;
        }
    }
    std::cout << (std::size(criteria) - failed) << " of " << std::size(criteria)
              << " criteria passed\n";
    return failed;
}
