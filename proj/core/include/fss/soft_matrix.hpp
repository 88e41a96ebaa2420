#pragma once

#include <string>
#include <vector>

#include "fss/soft_set.hpp"

namespace fss {

// One matrix column: the grades of a single parameter's image, in row order.
struct Column {
    std::vector<Grade> entries;

    bool operator==(const Column& other) const = default;
};

enum class ColumnOrder { Equal, Less, Greater, Incomparable };

// Entrywise comparison under the product order.
ColumnOrder col_compare(const Column& a, const Column& b);
Column col_max(const Column& a, const Column& b);
Column col_min(const Column& a, const Column& b);

// Deduplicated collection of columns, first occurrence first.
class ColumnSet {
public:
    ColumnSet() = default;
    explicit ColumnSet(std::vector<Column> columns); // deduplicates

    const std::vector<Column>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(const Column& candidate) const;
    bool operator==(const ColumnSet& other) const; // set equality

private:
    std::vector<Column> members_;
};

// Grid view of a soft set: one row per universe element, one column per
// parameter, entry (i, j) the grade of element i under parameter j.  Row and
// column labels are part of the value and are kept distinct.
class SoftMatrix {
public:
    SoftMatrix(std::vector<std::string> row_labels, std::vector<ParamLabel> col_labels,
               std::vector<Column> columns);

    // Entries arranged row by row.
    static SoftMatrix from_rows(std::vector<std::string> row_labels,
                                std::vector<ParamLabel> col_labels,
                                const std::vector<std::vector<Grade>>& rows);

    // Same, with each entry a decimal numeral.
    static SoftMatrix from_decimal_rows(std::vector<std::string> row_labels,
                                        std::vector<ParamLabel> col_labels,
                                        const std::vector<std::vector<std::string>>& rows);

    std::size_t row_count() const { return row_labels_.size(); }
    std::size_t col_count() const { return col_labels_.size(); }
    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<ParamLabel>& col_labels() const { return col_labels_; }
    const Column& column(std::size_t j) const { return columns_[j]; }
    const std::vector<Column>& columns() const { return columns_; }
    const Grade& entry(std::size_t row, std::size_t col) const {
        return columns_[col].entries[row];
    }

    // Same shape, same row and column labels, entrywise equal.
    bool operator==(const SoftMatrix& other) const = default;

    // Label-blind comparison: same shape, same row labels, equal entries.
    bool same_grid(const SoftMatrix& other) const;

private:
    std::vector<std::string> row_labels_;
    std::vector<ParamLabel> col_labels_;
    std::vector<Column> columns_;
};

SoftMatrix to_matrix(const FuzzySoftSet& f);
FuzzySoftSet from_matrix(const SoftMatrix& m);

// Distinct columns of m; in bijection with tau of the underlying soft set.
ColumnSet column_set(const SoftMatrix& m);

SoftMatrix m_complement(const SoftMatrix& m);

// Product-style combination mirroring the soft set operations: columns are
// indexed by label pairs, first operand outermost.
SoftMatrix m_intersection(const SoftMatrix& m, const SoftMatrix& n);
SoftMatrix m_union(const SoftMatrix& m, const SoftMatrix& n);

// Matrix reading of soft set equality: identical grids plus equal column
// label sets.  labels_equal lets the caller assert that differently printed
// label sets name the same parameters.
bool m_equal_soft(const SoftMatrix& m, const SoftMatrix& n, bool labels_equal);

// Equal column sets.
bool m_equivalent(const SoftMatrix& m, const SoftMatrix& n);

// Column views of min_family and max_family.
ColumnSet m_min_columns(const SoftMatrix& m);
ColumnSet m_max_columns(const SoftMatrix& m);

bool m_approx_internal(const SoftMatrix& m, const SoftMatrix& n);
bool m_approx_external(const SoftMatrix& m, const SoftMatrix& n);

} // namespace fss
