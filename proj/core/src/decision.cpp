#include "fss/decision.hpp"

#include <algorithm>
#include <set>

namespace fss {

FuzzySoftSet aggregate_panel(const Panel& panel) {
    if (panel.evaluators.size() < 2) {
        throw PanelTooSmallError("a panel needs at least two evaluators");
    }
    const FuzzySoftSet& first = panel.evaluators.front().second;
    for (const auto& [name, sheet] : panel.evaluators) {
        if (!sheet.universe()->same_elements(*first.universe())) {
            throw UniverseMismatchError("evaluator \"" + name +
                                        "\" grades a different universe");
        }
        if (sheet.param_count() != first.param_count()) {
            throw ParamSetMismatchError("evaluator \"" + name +
                                        "\" grades a different candidate set");
        }
        for (const auto& label : sheet.params()) {
            if (first.find_image(label) == nullptr) {
                throw ParamSetMismatchError("evaluator \"" + name +
                                            "\" grades unknown candidate \"" + label.text() +
                                            "\"");
            }
        }
    }
    FuzzySoftSet combined = first;
    for (std::size_t i = 1; i < panel.evaluators.size(); ++i) {
        combined = soft_intersection(combined, panel.evaluators[i].second);
    }
    return combined;
}

std::vector<std::pair<std::string, FuzzySet>> diagonal(const FuzzySoftSet& h,
                                                       std::size_t evaluator_count) {
    if (evaluator_count == 0) {
        throw Error("expected a positive coordinate count");
    }
    std::vector<std::vector<std::string>> flattened;
    flattened.reserve(h.param_count());
    for (const auto& label : h.params()) {
        auto atoms = label.flatten_atoms();
        if (atoms.size() != evaluator_count) {
            throw NotAProductSoftSetError("label \"" + label.text() + "\" is not a " +
                                          std::to_string(evaluator_count) + "-tuple");
        }
        flattened.push_back(std::move(atoms));
    }

    // Every coordinate position must range over one base label set.
    std::set<std::string> base;
    for (const auto& atoms : flattened) {
        base.insert(atoms.front());
    }
    for (const auto& atoms : flattened) {
        for (const auto& atom : atoms) {
            if (!base.contains(atom)) {
                throw NotAProductSoftSetError("coordinate \"" + atom +
                                              "\" is missing from the base label set");
            }
        }
    }

    std::vector<std::pair<std::string, FuzzySet>> diag;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < flattened.size(); ++i) {
        const auto& atoms = flattened[i];
        const bool constant =
            std::all_of(atoms.begin(), atoms.end(),
                        [&](const std::string& a) { return a == atoms.front(); });
        if (constant && seen.insert(atoms.front()).second) {
            diag.emplace_back(atoms.front(), h.image(i));
        }
    }
    for (const auto& atom : base) {
        if (!seen.contains(atom)) {
            throw NotAProductSoftSetError("no diagonal entry for candidate \"" + atom + "\"");
        }
    }
    return diag;
}

DecisionReport rank_candidates(std::vector<std::pair<std::string, FuzzySet>> diag) {
    if (diag.empty()) {
        throw EmptyDiagonalError("no candidates to rank");
    }
    DecisionReport report;
    report.diagonal = std::move(diag);

    for (const auto& [u, su] : report.diagonal) {
        for (const auto& [v, sv] : report.diagonal) {
            if (u != v && is_proper_subset(sv, su)) {
                report.dominance.emplace_back(u, v);
            }
        }
    }

    const auto strictly_dominates_all = [&](std::size_t w) {
        for (std::size_t c = 0; c < report.diagonal.size(); ++c) {
            if (c != w && !is_proper_subset(report.diagonal[c].second,
                                            report.diagonal[w].second)) {
                return false;
            }
        }
        return true;
    };

    for (std::size_t w = 0; w < report.diagonal.size(); ++w) {
        if (strictly_dominates_all(w)) {
            report.method = DecisionMethod::Dominance;
            report.winner = report.diagonal[w].first;
            return report;
        }
    }

    report.method = DecisionMethod::ScoreFallback;
    report.flags.push_back(DecisionFlag::NoDominantCandidate);
    Rational best(-1);
    std::size_t winners = 0;
    for (const auto& [name, set] : report.diagonal) {
        Rational score(0);
        for (const auto& g : set.grades()) {
            score += g.value();
        }
        if (score > best) {
            best = score;
            winners = 1;
        } else if (score == best) {
            ++winners;
        }
        report.scores.emplace_back(name, std::move(score));
    }
    if (winners == 1) {
        for (const auto& [name, score] : report.scores) {
            if (score == best) {
                report.winner = name;
                break;
            }
        }
    } else {
        report.flags.push_back(DecisionFlag::ScoreTie);
    }
    return report;
}

DecisionReport decide(const Panel& panel) {
    const FuzzySoftSet combined = aggregate_panel(panel);
    return rank_candidates(diagonal(combined, panel.evaluators.size()));
}

} // namespace fss
