#include "fss/document.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace fss {

namespace {

using Json = nlohmann::ordered_json;

Json label_to_json(const ParamLabel& label) {
    if (label.is_atom()) {
        return label.atom();
    }
    Json parts = Json::array();
    for (const auto& part : label.parts()) {
        parts.push_back(label_to_json(part));
    }
    return parts;
}

ParamLabel label_from_json(const Json& node) {
    if (node.is_string()) {
        return ParamLabel(node.get<std::string>());
    }
    if (node.is_array()) {
        if (node.size() < 2) {
            throw MalformedDocumentError("a tuple label needs at least two parts");
        }
        std::vector<ParamLabel> parts;
        parts.reserve(node.size());
        for (const auto& part : node) {
            parts.push_back(label_from_json(part));
        }
        return ParamLabel::tuple(std::move(parts));
    }
    throw MalformedDocumentError("a parameter label must be a string or an array");
}

Json fuzzy_set_to_json(const FuzzySet& s) {
    Json out = Json::object();
    for (std::size_t i = 0; i < s.universe()->size(); ++i) {
        out[s.universe()->element(i)] = s.grade(i).decimal();
    }
    return out;
}

Json witness_to_json(const std::optional<Witness>& witness) {
    if (!witness) {
        return nullptr;
    }
    Json out = Json::object();
    out["location"] = witness->location;
    out["expected"] = witness->expected;
    out["actual"] = witness->actual;
    return out;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

// -- CSV ---------------------------------------------------------------

bool needs_quoting(std::string_view field) {
    return field.find_first_of(",\"\r\n") != std::string_view::npos;
}

std::string csv_field(std::string_view field) {
    if (!needs_quoting(field)) {
        return std::string(field);
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool field_started = false;
    std::size_t i = 0;
    const auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    const auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
    };
    while (i < text.size()) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            if (field_started) {
                throw MalformedDocumentError("unexpected quote inside a CSV field");
            }
            quoted = true;
            field_started = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\n') {
            if (!field.empty() && field.back() == '\r') {
                field.pop_back();
            }
            end_row();
        } else {
            field += c;
            field_started = true;
        }
        ++i;
    }
    if (quoted) {
        throw MalformedDocumentError("unterminated quote in CSV input");
    }
    if (field_started || !row.empty()) {
        if (!field.empty() && field.back() == '\r') {
            field.pop_back();
        }
        end_row();
    }
    return rows;
}

// Grammar for labels in CSV cells: an atom is any text free of '(' ')' ',';
// a tuple is "(label,label,...)".
ParamLabel parse_label_text(std::string_view text, std::size_t& pos);

ParamLabel parse_tuple_text(std::string_view text, std::size_t& pos) {
    ++pos; // consume '('
    std::vector<ParamLabel> parts;
    while (true) {
        parts.push_back(parse_label_text(text, pos));
        if (pos >= text.size()) {
            throw MalformedDocumentError("unterminated tuple label: \"" + std::string(text) +
                                         "\"");
        }
        if (text[pos] == ',') {
            ++pos;
            continue;
        }
        if (text[pos] == ')') {
            ++pos;
            break;
        }
        throw MalformedDocumentError("bad tuple label: \"" + std::string(text) + "\"");
    }
    if (parts.size() < 2) {
        throw MalformedDocumentError("a tuple label needs at least two parts: \"" +
                                     std::string(text) + "\"");
    }
    return ParamLabel::tuple(std::move(parts));
}

ParamLabel parse_label_text(std::string_view text, std::size_t& pos) {
    if (pos < text.size() && text[pos] == '(') {
        return parse_tuple_text(text, pos);
    }
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',' && text[pos] != ')' && text[pos] != '(') {
        ++pos;
    }
    if (pos == start) {
        throw MalformedDocumentError("empty label in \"" + std::string(text) + "\"");
    }
    return ParamLabel(std::string(text.substr(start, pos - start)));
}

ParamLabel parse_label_cell(const std::string& cell) {
    std::size_t pos = 0;
    ParamLabel label = parse_label_text(cell, pos);
    if (pos != cell.size()) {
        throw MalformedDocumentError("trailing characters in label \"" + cell + "\"");
    }
    return label;
}

} // namespace

FuzzySoftSet parse_soft_set_document(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedDocumentError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw MalformedDocumentError("a soft set document must be a JSON object");
    }
    for (const char* key : {"universe", "parameters", "grades"}) {
        if (!doc.contains(key)) {
            throw MalformedDocumentError(std::string("missing key \"") + key + "\"");
        }
    }
    const Json& universe_node = doc["universe"];
    if (!universe_node.is_array() || universe_node.empty()) {
        throw MalformedDocumentError("\"universe\" must be a non-empty array");
    }
    std::vector<std::string> elements;
    elements.reserve(universe_node.size());
    for (const auto& e : universe_node) {
        if (!e.is_string()) {
            throw MalformedDocumentError("universe elements must be strings");
        }
        elements.push_back(e.get<std::string>());
    }
    const UniversePtr universe = Universe::make(std::move(elements));

    const Json& params_node = doc["parameters"];
    if (!params_node.is_array()) {
        throw MalformedDocumentError("\"parameters\" must be an array");
    }
    std::vector<ParamLabel> params;
    params.reserve(params_node.size());
    for (const auto& p : params_node) {
        params.push_back(label_from_json(p));
    }

    const Json& grades_node = doc["grades"];
    if (!grades_node.is_array()) {
        throw MalformedDocumentError("\"grades\" must be an array of rows");
    }
    if (grades_node.size() != universe->size()) {
        throw ShapeMismatchError("expected " + std::to_string(universe->size()) +
                                 " grade rows, got " + std::to_string(grades_node.size()));
    }
    std::vector<std::vector<Grade>> rows;
    rows.reserve(grades_node.size());
    for (const auto& row_node : grades_node) {
        if (!row_node.is_array()) {
            throw MalformedDocumentError("grade rows must be arrays");
        }
        if (row_node.size() != params.size()) {
            throw ShapeMismatchError("expected " + std::to_string(params.size()) +
                                     " grades per row, got " + std::to_string(row_node.size()));
        }
        std::vector<Grade> row;
        row.reserve(row_node.size());
        for (const auto& cell : row_node) {
            if (!cell.is_string()) {
                throw MalformedDocumentError("grades must be decimal strings");
            }
            row.push_back(Grade::parse(cell.get<std::string>()));
        }
        rows.push_back(std::move(row));
    }

    std::vector<FuzzySet> images;
    images.reserve(params.size());
    for (std::size_t j = 0; j < params.size(); ++j) {
        std::vector<Grade> grades;
        grades.reserve(universe->size());
        for (std::size_t i = 0; i < universe->size(); ++i) {
            grades.push_back(rows[i][j]);
        }
        images.emplace_back(universe, std::move(grades));
    }
    return FuzzySoftSet(universe, std::move(params), std::move(images));
}

std::string serialize_soft_set_document(const FuzzySoftSet& f) {
    Json doc = Json::object();
    doc["universe"] = f.universe()->elements();
    Json params = Json::array();
    for (const auto& label : f.params()) {
        params.push_back(label_to_json(label));
    }
    doc["parameters"] = std::move(params);
    Json rows = Json::array();
    for (std::size_t i = 0; i < f.universe()->size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < f.param_count(); ++j) {
            row.push_back(f.image(j).grade(i).decimal());
        }
        rows.push_back(std::move(row));
    }
    doc["grades"] = std::move(rows);
    return dump(doc);
}

std::string serialize_family_document(const Family& family, const UniversePtr& universe) {
    Json doc = Json::object();
    doc["universe"] = universe->elements();
    Json members = Json::array();
    for (const auto& member : family.members()) {
        members.push_back(fuzzy_set_to_json(member));
    }
    doc["members"] = std::move(members);
    return dump(doc);
}

SoftMatrix parse_matrix_csv(std::string_view text) {
    const auto rows = parse_csv(text);
    if (rows.empty()) {
        throw MalformedDocumentError("empty CSV input");
    }
    const auto& header = rows.front();
    if (header.empty() || !header.front().empty()) {
        throw MalformedDocumentError("the CSV corner cell must be empty");
    }
    std::vector<ParamLabel> col_labels;
    col_labels.reserve(header.size() - 1);
    for (std::size_t j = 1; j < header.size(); ++j) {
        col_labels.push_back(parse_label_cell(header[j]));
    }
    std::vector<std::string> row_labels;
    std::vector<std::vector<std::string>> entries;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.size() != header.size()) {
            throw ShapeMismatchError("CSV row " + std::to_string(i + 1) + " has " +
                                     std::to_string(row.size()) + " cells, expected " +
                                     std::to_string(header.size()));
        }
        if (row.front().empty()) {
            throw MalformedDocumentError("CSV row " + std::to_string(i + 1) +
                                         " is missing its element label");
        }
        row_labels.push_back(row.front());
        entries.emplace_back(row.begin() + 1, row.end());
    }
    return SoftMatrix::from_decimal_rows(std::move(row_labels), std::move(col_labels), entries);
}

std::string serialize_matrix_csv(const SoftMatrix& m) {
    std::ostringstream os;
    for (std::size_t j = 0; j < m.col_count(); ++j) {
        os << ',' << csv_field(m.col_labels()[j].text());
    }
    os << '\n';
    for (std::size_t i = 0; i < m.row_count(); ++i) {
        os << csv_field(m.row_labels()[i]);
        for (std::size_t j = 0; j < m.col_count(); ++j) {
            os << ',' << m.entry(i, j).decimal();
        }
        os << '\n';
    }
    return os.str();
}

std::string serialize_law_report(const LawReport& report) {
    Json doc = Json::object();
    if (std::holds_alternative<LawId>(report.target)) {
        doc["law"] = std::string(law_name(std::get<LawId>(report.target)));
    } else {
        doc["law"] = std::string(converse_name(std::get<ConverseId>(report.target)));
    }
    doc["holds"] = report.holds;
    doc["witness"] = witness_to_json(report.witness);
    return dump(doc);
}

std::string serialize_decision_report(const DecisionReport& report) {
    Json doc = Json::object();
    doc["method"] =
        report.method == DecisionMethod::Dominance ? "dominance" : "score-fallback";
    doc["winner"] = report.winner ? Json(*report.winner) : Json(nullptr);
    Json diag = Json::object();
    for (const auto& [name, set] : report.diagonal) {
        diag[name] = fuzzy_set_to_json(set);
    }
    doc["diagonal"] = std::move(diag);
    Json dominance = Json::array();
    for (const auto& [u, v] : report.dominance) {
        dominance.push_back(Json::array({u, v}));
    }
    doc["dominance"] = std::move(dominance);
    if (report.method == DecisionMethod::ScoreFallback) {
        Json scores = Json::object();
        for (const auto& [name, score] : report.scores) {
            scores[name] = decimal_string(score);
        }
        doc["scores"] = std::move(scores);
    }
    Json flags = Json::array();
    for (const auto flag : report.flags) {
        flags.push_back(flag == DecisionFlag::NoDominantCandidate ? "no-dominant-candidate"
                                                                  : "score-tie");
    }
    doc["flags"] = std::move(flags);
    return dump(doc);
}

std::string decision_table(const DecisionReport& report) {
    const UniversePtr universe = report.diagonal.front().second.universe();
    const bool with_scores = report.method == DecisionMethod::ScoreFallback;

    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> head;
    head.push_back("candidate");
    for (const auto& element : universe->elements()) {
        head.push_back(element);
    }
    if (with_scores) {
        head.push_back("score");
    }
    grid.push_back(std::move(head));
    for (std::size_t c = 0; c < report.diagonal.size(); ++c) {
        const auto& [name, set] = report.diagonal[c];
        std::vector<std::string> row;
        row.push_back(name);
        for (const auto& element : universe->elements()) {
            row.push_back(set.grade_for(element).decimal());
        }
        if (with_scores) {
            row.push_back(decimal_string(report.scores[c].second));
        }
        grid.push_back(std::move(row));
    }

    std::vector<std::size_t> widths(grid.front().size(), 0);
    for (const auto& row : grid) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    std::ostringstream os;
    for (const auto& row : grid) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                os << "  ";
            }
            os << row[i];
            if (i + 1 < row.size()) {
                os << std::string(widths[i] - row[i].size(), ' ');
            }
        }
        os << '\n';
    }
    for (const auto& [u, v] : report.dominance) {
        os << u << " dominates " << v << '\n';
    }
    if (report.winner) {
        os << "winner: " << *report.winner
           << (report.method == DecisionMethod::Dominance ? " (dominance)" : " (score fallback)")
           << '\n';
    } else {
        os << "winner: none (score tie)\n";
    }
    return os.str();
}

} // namespace fss
