#include "fss/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "fss/decision.hpp"
#include "fss/document.hpp"
#include "fss/laws.hpp"
#include "fss/soft_matrix.hpp"
#include "fss/soft_set.hpp"

namespace fss {

namespace {

using Json = nlohmann::ordered_json;
using SoftOp = FuzzySoftSet (*)(const FuzzySoftSet&, const FuzzySoftSet&);
using SoftRel = bool (*)(const FuzzySoftSet&, const FuzzySoftSet&);
using MatrixOp = SoftMatrix (*)(const SoftMatrix&, const SoftMatrix&);

std::string slurp(const std::string& path, std::istream& in) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw Error("cannot open \"" + path + "\"");
    }
    buffer << file.rdbuf();
    return buffer.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty() || out_path == "-") {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw Error("cannot write \"" + out_path + "\"");
    }
    file << text;
}

std::string stem_of(const std::string& path) {
    if (path == "-") {
        return "stdin";
    }
    const std::string stem = std::filesystem::path(path).stem().string();
    return stem.empty() ? path : stem;
}

LawTarget resolve_target(const std::string& name) {
    auto target = target_from_name(name);
    if (!target) {
        throw Error("unknown law \"" + name + "\"");
    }
    return *target;
}

std::string target_text(const LawTarget& target) {
    if (std::holds_alternative<LawId>(target)) {
        return std::string(law_name(std::get<LawId>(target)));
    }
    return std::string(converse_name(std::get<ConverseId>(target)));
}

Json config_json(const GenConfig& cfg, std::uint64_t trials) {
    Json out = Json::object();
    out["seed"] = cfg.seed;
    out["trials"] = trials;
    out["universe"] = cfg.universe_size;
    out["params"] = cfg.param_count;
    out["denominator"] = cfg.grade_denominator;
    return out;
}

Json violation_json(const SearchResult& found) {
    Json node = Json::object();
    node["trial"] = found.trial;
    node["report"] = Json::parse(serialize_law_report(found.report));
    Json operands = Json::array();
    for (const auto& operand : found.operands) {
        operands.push_back(Json::parse(serialize_soft_set_document(operand)));
    }
    node["operands"] = std::move(operands);
    return node;
}

} // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact-arithmetic toolkit for fuzzy soft sets"};
    app.name("fss");
    app.require_subcommand(1);
    std::function<int()> action;

    // -- op ------------------------------------------------------------
    auto* op_cmd = app.add_subcommand("op", "combine or complement soft set documents");
    op_cmd->require_subcommand(1);
    struct OpSpec {
        const char* name;
        const char* help;
        SoftOp fn;
    };
    static const OpSpec kOps[] = {
        {"union", "grade-wise maximum over all parameter pairs", soft_union},
        {"intersection", "grade-wise minimum over all parameter pairs", soft_intersection},
        {"product", "grade-wise product over all parameter pairs", soft_product},
        {"sum", "grade-wise algebraic sum over all parameter pairs", soft_sum},
    };
    struct OpState {
        std::vector<std::string> files;
        std::string out_path;
    };
    auto op_states = std::make_shared<std::vector<OpState>>(5);
    for (std::size_t k = 0; k < 4; ++k) {
        auto* leaf = op_cmd->add_subcommand(kOps[k].name, kOps[k].help);
        auto& state = (*op_states)[k];
        leaf->add_option("files", state.files, "two soft set documents")
            ->expected(2)
            ->required();
        leaf->add_option("-o,--output", state.out_path, "write the result here");
        const SoftOp fn = kOps[k].fn;
        leaf->callback([&, fn] {
            action = [&, fn]() {
                const FuzzySoftSet f = parse_soft_set_document(slurp(state.files[0], in));
                const FuzzySoftSet g = parse_soft_set_document(slurp(state.files[1], in));
                emit(serialize_soft_set_document(fn(f, g)), state.out_path, out);
                return 0;
            };
        });
    }
    {
        auto* leaf = op_cmd->add_subcommand("complement", "grade-wise complement");
        auto& state = (*op_states)[4];
        leaf->add_option("file", state.files, "one soft set document")->expected(1)->required();
        leaf->add_option("-o,--output", state.out_path, "write the result here");
        leaf->callback([&] {
            action = [&]() {
                const FuzzySoftSet f = parse_soft_set_document(slurp(state.files[0], in));
                emit(serialize_soft_set_document(complement(f)), state.out_path, out);
                return 0;
            };
        });
    }

    // -- rel -----------------------------------------------------------
    auto* rel_cmd = app.add_subcommand("rel", "decide a relation between two documents");
    rel_cmd->require_subcommand(1);
    struct RelSpec {
        const char* name;
        const char* help;
        SoftRel fn;
    };
    static const RelSpec kRels[] = {
        {"equal", "same labels, same images", are_equal},
        {"equivalent", "same tau family", are_equivalent},
        {"approx-in", "first internally approximates second", internally_approximates},
        {"approx-ex", "first externally approximates second", externally_approximates},
        {"approx-in-strict", "internal approximation, strictly one-way",
         strictly_internally_approximates},
        {"approx-ex-strict", "external approximation, strictly one-way",
         strictly_externally_approximates},
        {"equiv-in", "internal approximation both ways", internally_equivalent},
        {"equiv-ex", "external approximation both ways", externally_equivalent},
        {"weak-equiv", "internal and external equivalence", weakly_equivalent},
    };
    auto rel_states = std::make_shared<std::vector<std::vector<std::string>>>(std::size(kRels));
    for (std::size_t k = 0; k < std::size(kRels); ++k) {
        auto* leaf = rel_cmd->add_subcommand(kRels[k].name, kRels[k].help);
        auto& files = (*rel_states)[k];
        leaf->add_option("files", files, "two soft set documents")->expected(2)->required();
        const SoftRel fn = kRels[k].fn;
        leaf->callback([&, fn] {
            action = [&, fn]() {
                const FuzzySoftSet f = parse_soft_set_document(slurp(files[0], in));
                const FuzzySoftSet g = parse_soft_set_document(slurp(files[1], in));
                const bool verdict = fn(f, g);
                out << (verdict ? "true" : "false") << '\n';
                return verdict ? 0 : 1;
            };
        });
    }

    // -- family ----------------------------------------------------------
    auto* family_cmd = app.add_subcommand("family", "extremal members of the tau family");
    family_cmd->require_subcommand(1);
    struct FamilyState {
        std::string file;
    };
    auto family_states = std::make_shared<std::vector<FamilyState>>(2);
    for (std::size_t k = 0; k < 2; ++k) {
        const bool wants_min = k == 0;
        auto* leaf = family_cmd->add_subcommand(wants_min ? "min" : "max",
                                                wants_min
                                                    ? "inclusion-minimal non-empty images"
                                                    : "inclusion-maximal non-universal images");
        auto& state = (*family_states)[k];
        leaf->add_option("file", state.file, "a soft set document")->required();
        leaf->callback([&, wants_min] {
            action = [&, wants_min]() {
                const FuzzySoftSet f = parse_soft_set_document(slurp(state.file, in));
                const Family family = wants_min ? min_family(f) : max_family(f);
                out << serialize_family_document(family, f.universe());
                return 0;
            };
        });
    }

    // -- matrix ----------------------------------------------------------
    auto* matrix_cmd = app.add_subcommand("matrix", "grid form of soft sets, CSV in and out");
    matrix_cmd->require_subcommand(1);
    struct MatrixState {
        std::vector<std::string> files;
        std::string out_path;
    };
    auto matrix_states = std::make_shared<std::vector<MatrixState>>(5);
    {
        auto* leaf = matrix_cmd->add_subcommand("export", "soft set document to CSV matrix");
        auto& state = (*matrix_states)[0];
        leaf->add_option("file", state.files, "a soft set document")->expected(1)->required();
        leaf->add_option("-o,--output", state.out_path, "write the CSV here");
        leaf->callback([&] {
            action = [&]() {
                const FuzzySoftSet f = parse_soft_set_document(slurp(state.files[0], in));
                emit(serialize_matrix_csv(to_matrix(f)), state.out_path, out);
                return 0;
            };
        });
    }
    {
        auto* leaf = matrix_cmd->add_subcommand("import", "CSV matrix to soft set document");
        auto& state = (*matrix_states)[1];
        leaf->add_option("file", state.files, "a CSV matrix")->expected(1)->required();
        leaf->add_option("-o,--output", state.out_path, "write the document here");
        leaf->callback([&] {
            action = [&]() {
                const SoftMatrix m = parse_matrix_csv(slurp(state.files[0], in));
                emit(serialize_soft_set_document(from_matrix(m)), state.out_path, out);
                return 0;
            };
        });
    }
    struct MatrixOpSpec {
        const char* name;
        const char* help;
        MatrixOp fn;
        std::size_t slot;
    };
    static const MatrixOpSpec kMatrixOps[] = {
        {"intersect", "entrywise minimum over all column pairs", m_intersection, 2},
        {"union", "entrywise maximum over all column pairs", m_union, 3},
    };
    for (const auto& spec : kMatrixOps) {
        auto* leaf = matrix_cmd->add_subcommand(spec.name, spec.help);
        auto& state = (*matrix_states)[spec.slot];
        leaf->add_option("files", state.files, "two CSV matrices")->expected(2)->required();
        leaf->add_option("-o,--output", state.out_path, "write the CSV here");
        const MatrixOp fn = spec.fn;
        leaf->callback([&, fn] {
            action = [&, fn]() {
                const SoftMatrix m = parse_matrix_csv(slurp(state.files[0], in));
                const SoftMatrix n = parse_matrix_csv(slurp(state.files[1], in));
                emit(serialize_matrix_csv(fn(m, n)), state.out_path, out);
                return 0;
            };
        });
    }
    {
        auto* leaf = matrix_cmd->add_subcommand("complement", "entrywise complement");
        auto& state = (*matrix_states)[4];
        leaf->add_option("file", state.files, "a CSV matrix")->expected(1)->required();
        leaf->add_option("-o,--output", state.out_path, "write the CSV here");
        leaf->callback([&] {
            action = [&]() {
                const SoftMatrix m = parse_matrix_csv(slurp(state.files[0], in));
                emit(serialize_matrix_csv(m_complement(m)), state.out_path, out);
                return 0;
            };
        });
    }

    // -- laws ------------------------------------------------------------
    auto* laws_cmd = app.add_subcommand("laws", "seeded random checking of algebraic laws");
    laws_cmd->require_subcommand(1);
    struct LawsState {
        std::string target;
        std::uint64_t seed = 0;
        std::uint64_t trials = 0;
        std::size_t universe = 3;
        std::size_t params = 3;
        std::uint64_t denominator = 10;
    };
    auto check_state = std::make_shared<LawsState>();
    check_state->trials = 1000;
    {
        auto* leaf = laws_cmd->add_subcommand("check", "count violations across seeded trials");
        leaf->add_option("--law", check_state->target, "law to check")->required();
        leaf->add_option("--seed", check_state->seed, "base seed");
        leaf->add_option("--trials", check_state->trials, "number of instances");
        leaf->add_option("--universe", check_state->universe, "universe size");
        leaf->add_option("--params", check_state->params, "parameters per operand");
        leaf->add_option("--denominator", check_state->denominator, "grade denominator");
        leaf->callback([&, check_state] {
            action = [&, check_state]() {
                const LawTarget target = resolve_target(check_state->target);
                const GenConfig cfg{check_state->universe, check_state->params,
                                    check_state->denominator, check_state->seed};
                const TrialStats stats = run_trials(target, cfg, check_state->trials);
                Json doc = Json::object();
                doc["law"] = target_text(target);
                doc["config"] = config_json(cfg, check_state->trials);
                doc["checked"] = stats.checked;
                doc["skipped"] = stats.skipped;
                doc["violations"] = stats.violations;
                doc["first_violation"] =
                    stats.first_violation ? violation_json(*stats.first_violation) : Json(nullptr);
                out << doc.dump(2) << '\n';
                return stats.violations == 0 ? 0 : 1;
            };
        });
    }
    auto search_state = std::make_shared<LawsState>();
    search_state->trials = 100000;
    {
        auto* leaf =
            laws_cmd->add_subcommand("counterexample", "search for a violating instance");
        leaf->add_option("--target", search_state->target, "law or converse to attack")
            ->required();
        leaf->add_option("--seed", search_state->seed, "base seed");
        leaf->add_option("--trials", search_state->trials, "search budget");
        leaf->add_option("--universe", search_state->universe, "universe size");
        leaf->add_option("--params", search_state->params, "parameters per operand");
        leaf->add_option("--denominator", search_state->denominator, "grade denominator");
        leaf->callback([&, search_state] {
            action = [&, search_state]() {
                const LawTarget target = resolve_target(search_state->target);
                const GenConfig cfg{search_state->universe, search_state->params,
                                    search_state->denominator, search_state->seed};
                const auto found = search_counterexample(target, cfg, search_state->trials);
                if (!found) {
                    out << "none found\n";
                    return 1;
                }
                Json doc = Json::object();
                doc["target"] = target_text(target);
                doc["config"] = config_json(cfg, search_state->trials);
                // Keep the node alive: items() hands out views into it.
                const Json found_node = violation_json(*found);
                for (const auto& [key, value] : found_node.items()) {
                    doc[key] = value;
                }
                out << doc.dump(2) << '\n';
                return 0;
            };
        });
    }

    // -- decide ----------------------------------------------------------
    {
        auto* leaf = app.add_subcommand("decide", "rank candidates graded by a panel");
        auto files = std::make_shared<std::vector<std::string>>();
        leaf->add_option("files", *files, "one soft set document per evaluator")->required();
        leaf->callback([&, files] {
            action = [&, files]() {
                Panel panel;
                for (const auto& path : *files) {
                    panel.evaluators.emplace_back(stem_of(path),
                                                  parse_soft_set_document(slurp(path, in)));
                }
                const DecisionReport report = decide(panel);
                out << serialize_decision_report(report) << '\n' << decision_table(report);
                return 0;
            };
        });
    }

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back("fss");
    for (auto& a : args) {
        argv_storage.push_back(std::move(a));
    }
    std::vector<const char*> argv;
    argv.reserve(argv_storage.size());
    for (const auto& s : argv_storage) {
        argv.push_back(s.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace fss
