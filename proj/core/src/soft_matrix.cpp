#include "fss/soft_matrix.hpp"

#include <algorithm>

namespace fss {

namespace {

void require_same_length(const Column& a, const Column& b) {
    if (a.entries.size() != b.entries.size()) {
        throw LengthMismatchError("columns of length " + std::to_string(a.entries.size()) +
                                  " and " + std::to_string(b.entries.size()));
    }
}

void require_same_rows(const SoftMatrix& m, const SoftMatrix& n) {
    if (m.row_labels() != n.row_labels()) {
        throw RowMismatchError("matrices disagree on rows");
    }
}

bool col_is_zero(const Column& c) {
    return std::all_of(c.entries.begin(), c.entries.end(),
                       [](const Grade& g) { return g == Grade::zero(); });
}

bool col_is_ones(const Column& c) {
    return std::all_of(c.entries.begin(), c.entries.end(),
                       [](const Grade& g) { return g == Grade::one(); });
}

template <typename Op>
SoftMatrix product_op(const SoftMatrix& m, const SoftMatrix& n, Op op) {
    require_same_rows(m, n);
    std::vector<ParamLabel> labels;
    std::vector<Column> columns;
    labels.reserve(m.col_count() * n.col_count());
    columns.reserve(m.col_count() * n.col_count());
    for (std::size_t i = 0; i < m.col_count(); ++i) {
        for (std::size_t j = 0; j < n.col_count(); ++j) {
            labels.push_back(ParamLabel::pair(m.col_labels()[i], n.col_labels()[j]));
            columns.push_back(op(m.column(i), n.column(j)));
        }
    }
    return SoftMatrix(m.row_labels(), std::move(labels), std::move(columns));
}

bool col_label_sets_equal(const SoftMatrix& m, const SoftMatrix& n) {
    if (m.col_count() != n.col_count()) {
        return false;
    }
    return std::all_of(m.col_labels().begin(), m.col_labels().end(), [&](const ParamLabel& a) {
        return std::any_of(n.col_labels().begin(), n.col_labels().end(),
                           [&](const ParamLabel& b) { return a == b; });
    });
}

} // namespace

ColumnOrder col_compare(const Column& a, const Column& b) {
    require_same_length(a, b);
    bool below = true;
    bool above = true;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        if (a.entries[i] < b.entries[i]) {
            above = false;
        } else if (b.entries[i] < a.entries[i]) {
            below = false;
        }
    }
    if (below && above) {
        return ColumnOrder::Equal;
    }
    if (below) {
        return ColumnOrder::Less;
    }
    if (above) {
        return ColumnOrder::Greater;
    }
    return ColumnOrder::Incomparable;
}

Column col_max(const Column& a, const Column& b) {
    require_same_length(a, b);
    Column out;
    out.entries.reserve(a.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        out.entries.push_back(grade_max(a.entries[i], b.entries[i]));
    }
    return out;
}

Column col_min(const Column& a, const Column& b) {
    require_same_length(a, b);
    Column out;
    out.entries.reserve(a.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        out.entries.push_back(grade_min(a.entries[i], b.entries[i]));
    }
    return out;
}

ColumnSet::ColumnSet(std::vector<Column> columns) {
    for (auto& candidate : columns) {
        if (!contains(candidate)) {
            members_.push_back(std::move(candidate));
        }
    }
}

bool ColumnSet::contains(const Column& candidate) const {
    return std::any_of(members_.begin(), members_.end(),
                       [&](const Column& c) { return c == candidate; });
}

bool ColumnSet::operator==(const ColumnSet& other) const {
    if (size() != other.size()) {
        return false;
    }
    return std::all_of(members_.begin(), members_.end(),
                       [&](const Column& c) { return other.contains(c); });
}

SoftMatrix::SoftMatrix(std::vector<std::string> row_labels, std::vector<ParamLabel> col_labels,
                       std::vector<Column> columns)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)),
      columns_(std::move(columns)) {
    if (row_labels_.empty()) {
        throw Error("a matrix needs at least one row");
    }
    for (std::size_t i = 0; i < row_labels_.size(); ++i) {
        for (std::size_t j = i + 1; j < row_labels_.size(); ++j) {
            if (row_labels_[i] == row_labels_[j]) {
                throw DuplicateLabelError("duplicate row label \"" + row_labels_[i] + "\"");
            }
        }
    }
    for (std::size_t i = 0; i < col_labels_.size(); ++i) {
        for (std::size_t j = i + 1; j < col_labels_.size(); ++j) {
            if (col_labels_[i] == col_labels_[j]) {
                throw DuplicateParamError("duplicate column label \"" + col_labels_[i].text() +
                                          "\"");
            }
        }
    }
    if (columns_.size() != col_labels_.size()) {
        throw ShapeMismatchError("expected " + std::to_string(col_labels_.size()) +
                                 " columns, got " + std::to_string(columns_.size()));
    }
    for (const auto& c : columns_) {
        if (c.entries.size() != row_labels_.size()) {
            throw ShapeMismatchError("column of length " + std::to_string(c.entries.size()) +
                                     " in a matrix with " + std::to_string(row_labels_.size()) +
                                     " rows");
        }
    }
}

SoftMatrix SoftMatrix::from_rows(std::vector<std::string> row_labels,
                                 std::vector<ParamLabel> col_labels,
                                 const std::vector<std::vector<Grade>>& rows) {
    std::vector<Column> columns(col_labels.size());
    for (const auto& row : rows) {
        if (row.size() != col_labels.size()) {
            throw ShapeMismatchError("row of length " + std::to_string(row.size()) +
                                     " in a matrix with " + std::to_string(col_labels.size()) +
                                     " columns");
        }
    }
    if (rows.size() != row_labels.size()) {
        throw ShapeMismatchError("expected " + std::to_string(row_labels.size()) +
                                 " rows, got " + std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < col_labels.size(); ++j) {
        columns[j].entries.reserve(rows.size());
        for (const auto& row : rows) {
            columns[j].entries.push_back(row[j]);
        }
    }
    return SoftMatrix(std::move(row_labels), std::move(col_labels), std::move(columns));
}

SoftMatrix SoftMatrix::from_decimal_rows(std::vector<std::string> row_labels,
                                         std::vector<ParamLabel> col_labels,
                                         const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Grade>> parsed;
    parsed.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<Grade> grades;
        grades.reserve(row.size());
        for (const auto& text : row) {
            grades.push_back(Grade::parse(text));
        }
        parsed.push_back(std::move(grades));
    }
    return from_rows(std::move(row_labels), std::move(col_labels), parsed);
}

bool SoftMatrix::same_grid(const SoftMatrix& other) const {
    return row_labels_ == other.row_labels_ && columns_ == other.columns_;
}

SoftMatrix to_matrix(const FuzzySoftSet& f) {
    std::vector<Column> columns;
    columns.reserve(f.param_count());
    for (const auto& image : f.images()) {
        columns.push_back(Column{image.grades()});
    }
    return SoftMatrix(f.universe()->elements(), f.params(), std::move(columns));
}

FuzzySoftSet from_matrix(const SoftMatrix& m) {
    auto universe = Universe::make(m.row_labels());
    std::vector<FuzzySet> images;
    images.reserve(m.col_count());
    for (const auto& c : m.columns()) {
        images.emplace_back(universe, c.entries);
    }
    return FuzzySoftSet(std::move(universe), m.col_labels(), std::move(images));
}

ColumnSet column_set(const SoftMatrix& m) { return ColumnSet(m.columns()); }

SoftMatrix m_complement(const SoftMatrix& m) {
    std::vector<Column> columns;
    columns.reserve(m.col_count());
    for (const auto& c : m.columns()) {
        Column out;
        out.entries.reserve(c.entries.size());
        for (const auto& g : c.entries) {
            out.entries.push_back(grade_complement(g));
        }
        columns.push_back(std::move(out));
    }
    return SoftMatrix(m.row_labels(), m.col_labels(), std::move(columns));
}

SoftMatrix m_intersection(const SoftMatrix& m, const SoftMatrix& n) {
    return product_op(m, n, col_min);
}

SoftMatrix m_union(const SoftMatrix& m, const SoftMatrix& n) { return product_op(m, n, col_max); }

bool m_equal_soft(const SoftMatrix& m, const SoftMatrix& n, bool labels_equal) {
    return m.same_grid(n) && (labels_equal || col_label_sets_equal(m, n));
}

bool m_equivalent(const SoftMatrix& m, const SoftMatrix& n) {
    require_same_rows(m, n);
    return column_set(m) == column_set(n);
}

ColumnSet m_min_columns(const SoftMatrix& m) {
    const ColumnSet cs = column_set(m);
    std::vector<Column> out;
    for (const auto& c : cs.members()) {
        if (col_is_zero(c)) {
            continue;
        }
        const bool dominated =
            std::any_of(cs.members().begin(), cs.members().end(), [&](const Column& d) {
                return !col_is_zero(d) && col_compare(d, c) == ColumnOrder::Less;
            });
        if (!dominated) {
            out.push_back(c);
        }
    }
    return ColumnSet(std::move(out));
}

ColumnSet m_max_columns(const SoftMatrix& m) {
    const ColumnSet cs = column_set(m);
    std::vector<Column> out;
    for (const auto& c : cs.members()) {
        if (col_is_ones(c)) {
            continue;
        }
        const bool dominated =
            std::any_of(cs.members().begin(), cs.members().end(), [&](const Column& d) {
                return !col_is_ones(d) && col_compare(d, c) == ColumnOrder::Greater;
            });
        if (!dominated) {
            out.push_back(c);
        }
    }
    return ColumnSet(std::move(out));
}

bool m_approx_internal(const SoftMatrix& m, const SoftMatrix& n) {
    require_same_rows(m, n);
    for (const auto& target : n.columns()) {
        if (col_is_zero(target)) {
            continue;
        }
        const bool witnessed =
            std::any_of(m.columns().begin(), m.columns().end(), [&](const Column& c) {
                const auto order = col_compare(c, target);
                return !col_is_zero(c) &&
                       (order == ColumnOrder::Less || order == ColumnOrder::Equal);
            });
        if (!witnessed) {
            return false;
        }
    }
    return true;
}

bool m_approx_external(const SoftMatrix& m, const SoftMatrix& n) {
    require_same_rows(m, n);
    for (const auto& target : n.columns()) {
        if (col_is_ones(target)) {
            continue;
        }
        const bool witnessed =
            std::any_of(m.columns().begin(), m.columns().end(), [&](const Column& c) {
                const auto order = col_compare(c, target);
                return !col_is_ones(c) &&
                       (order == ColumnOrder::Greater || order == ColumnOrder::Equal);
            });
        if (!witnessed) {
            return false;
        }
    }
    return true;
}

} // namespace fss
