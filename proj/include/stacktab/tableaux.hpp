// Standard Young tableaux: validation, enumeration, the column-word total
// order, the stacking map, and the bijection with nested partition
// sequences. Entries and indices are 1-based everywhere a caller sees them.
#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stacktab/partitions.hpp"

namespace stacktab {

/// A filling of the Young diagram of `shape` by 1..N, strictly increasing
/// along rows and down columns. Immutable; construct through validate().
class StandardTableau {
public:
    /// Checks all invariants and returns the tableau. Diagnostics name the
    /// violated invariant: shape mismatch, duplicate/missing/out-of-range
    /// entries, non-increasing row or column.
    static StandardTableau validate(std::vector<std::vector<int>> rows, const Partition& shape) {
        if (static_cast<int>(rows.size()) != shape.length())
            throw std::invalid_argument("tableau: shape mismatch (row count " +
                                        std::to_string(rows.size()) + ", shape length " +
                                        std::to_string(shape.length()) + ")");
        for (int i = 0; i < shape.length(); ++i)
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != shape.part(i + 1))
                throw std::invalid_argument("tableau: shape mismatch in row " + std::to_string(i + 1));

        const int n = shape.weight();
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& row : rows)
            for (int e : row) {
                if (e < 1 || e > n)
                    throw std::invalid_argument("tableau: entry " + std::to_string(e) +
                                                " out of range 1.." + std::to_string(n));
                if (seen[static_cast<std::size_t>(e)])
                    throw std::invalid_argument("tableau: duplicate entry " + std::to_string(e));
                seen[static_cast<std::size_t>(e)] = 1;
            }
        for (int e = 1; e <= n; ++e)
            if (!seen[static_cast<std::size_t>(e)])
                throw std::invalid_argument("tableau: missing entry " + std::to_string(e));

        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j + 1 < rows[i].size(); ++j)
                if (rows[i][j] >= rows[i][j + 1])
                    throw std::invalid_argument("tableau: row " + std::to_string(i + 1) +
                                                " not increasing");
        for (std::size_t i = 0; i + 1 < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i + 1].size(); ++j)
                if (rows[i][j] >= rows[i + 1][j])
                    throw std::invalid_argument("tableau: column " + std::to_string(j + 1) +
                                                " not increasing");
        return StandardTableau(shape, std::move(rows));
    }

    /// Shape is read off the row lengths.
    static StandardTableau from_rows(std::vector<std::vector<int>> rows) {
        std::vector<int> lengths;
        lengths.reserve(rows.size());
        for (const auto& r : rows) lengths.push_back(static_cast<int>(r.size()));
        return validate(std::move(rows), Partition(std::move(lengths)));
    }

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const { return shape_.weight(); }

    /// entry at (row i, column j), 1-based.
    int entry(int i, int j) const {
        if (i < 1 || i > shape_.length() || j < 1 || j > shape_.part(i))
            throw std::invalid_argument("tableau: cell out of shape");
        return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }

    /// Column containing entry e (1-based). The column word e -> column
    /// determines the tableau.
    int column_of(int e) const {
        if (e < 1 || e > size()) throw std::invalid_argument("tableau: entry out of range");
        return column_word_[static_cast<std::size_t>(e - 1)];
    }

    const std::vector<int>& column_word() const { return column_word_; }

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
        return a.rows_ == b.rows_;
    }

private:
    StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)) {
        column_word_.assign(static_cast<std::size_t>(shape_.weight()), 0);
        for (const auto& row : rows_)
            for (std::size_t j = 0; j < row.size(); ++j)
                column_word_[static_cast<std::size_t>(row[j] - 1)] = static_cast<int>(j + 1);
    }

    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> column_word_;
};

/// Total order on same-shape tableaux: compare column words at the largest
/// position where they differ; the one whose entry sits in the smaller
/// column there is smaller.
inline std::strong_ordering compare(const StandardTableau& a, const StandardTableau& b) {
    if (a.shape() != b.shape())
        throw std::invalid_argument("compare: tableaux have different shapes");
    const auto& wa = a.column_word();
    const auto& wb = b.column_word();
    for (std::size_t i = wa.size(); i-- > 0;) {
        if (wa[i] != wb[i]) return wa[i] <=> wb[i];
    }
    return std::strong_ordering::equal;
}

/// Comparator usable as a std::map key order for same-shape tableaux.
struct TableauLess {
    bool operator()(const StandardTableau& a, const StandardTableau& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }
};

inline constexpr int kDefaultTableauEnumerationBound = 12;

/// All standard tableaux of the given shape, sorted ascending in the
/// column-word order. Refuses weights above `max_weight`.
inline std::vector<StandardTableau> enumerate_standard(
    const Partition& shape, int max_weight = kDefaultTableauEnumerationBound) {
    const int n = shape.weight();
    if (n > max_weight)
        throw std::invalid_argument("enumerate_standard: weight " + std::to_string(n) +
                                    " exceeds enumeration bound " + std::to_string(max_weight));
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
    std::vector<int> fill(static_cast<std::size_t>(shape.length()), 0);
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.push_back(StandardTableau::validate(rows, shape));
            return;
        }
        for (int r = 0; r < shape.length(); ++r) {
            const auto ur = static_cast<std::size_t>(r);
            // a box is addable in row r when the row has room and stays
            // weakly shorter than the row above
            if (fill[ur] >= shape.part(r + 1)) continue;
            if (r > 0 && fill[ur - 1] <= fill[ur]) continue;
            rows[ur].push_back(next);
            ++fill[ur];
            self(self, next + 1);
            --fill[ur];
            rows[ur].pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), TableauLess{});
    return out;
}

/// Row-wise shifted concatenation: row i of the result is the row i of each
/// input tableau in block order, entries of block k shifted by the sum of
/// the shape parts before k. The result is standard of shape
/// induced_partition(d).
inline StandardTableau stack(const LeviDatum& d, const std::vector<StandardTableau>& tuple) {
    if (static_cast<int>(tuple.size()) != d.block_count())
        throw std::invalid_argument("stack: expected " + std::to_string(d.block_count()) +
                                    " tableaux, got " + std::to_string(tuple.size()));
    for (int k = 1; k <= d.block_count(); ++k)
        if (tuple[static_cast<std::size_t>(k - 1)].shape() != d.block(k))
            throw std::invalid_argument("stack: tableau " + std::to_string(k) +
                                        " does not have the block shape");

    const Partition out_shape = induced_partition(d);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(out_shape.length()));
    for (int i = 1; i <= out_shape.length(); ++i) {
        auto& row = rows[static_cast<std::size_t>(i - 1)];
        for (int k = 1; k <= d.block_count(); ++k) {
            const StandardTableau& t = tuple[static_cast<std::size_t>(k - 1)];
            if (i > t.shape().length()) continue;
            const int shift = d.block_offset(k);
            for (int j = 1; j <= t.shape().part(i); ++j) row.push_back(t.entry(i, j) + shift);
        }
    }
    return StandardTableau::validate(std::move(rows), out_shape);
}

/// Chain of partitions growing from the empty partition by one box per
/// step; the growth path of a standard tableau.
class NestedPartitionSequence {
public:
    explicit NestedPartitionSequence(std::vector<Partition> seq) : seq_(std::move(seq)) {
        if (seq_.empty() || !seq_[0].empty())
            throw std::invalid_argument("nested sequence: must start at the empty partition");
        for (std::size_t s = 1; s < seq_.size(); ++s) {
            if (seq_[s].weight() != static_cast<int>(s))
                throw std::invalid_argument("nested sequence: weight must grow by one per step");
            added_row(seq_[s - 1], seq_[s]);  // throws unless exactly one box was added
        }
    }

    const std::vector<Partition>& sequence() const { return seq_; }
    int steps() const { return static_cast<int>(seq_.size()) - 1; }

    /// Row (1-based) receiving the box at step s, s = 1..steps().
    static int added_row(const Partition& before, const Partition& after) {
        if (after.length() < before.length() || after.length() > before.length() + 1)
            throw std::invalid_argument("nested sequence: step does not add a single box");
        int row = 0;
        for (int r = 1; r <= after.length(); ++r) {
            const int delta = after.part(r) - before.part(r);
            if (delta == 0) continue;
            if (delta != 1 || row != 0)
                throw std::invalid_argument("nested sequence: step does not add a single box");
            row = r;
        }
        if (row == 0) throw std::invalid_argument("nested sequence: step adds no box");
        return row;
    }

    friend bool operator==(const NestedPartitionSequence&, const NestedPartitionSequence&) = default;

private:
    std::vector<Partition> seq_;
};

/// Entry s goes to the box added at step s of the sequence.
inline StandardTableau tableau_from_nested(const NestedPartitionSequence& s) {
    const auto& seq = s.sequence();
    const Partition& final_shape = seq.back();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(final_shape.length()));
    for (std::size_t step = 1; step < seq.size(); ++step) {
        const int r = NestedPartitionSequence::added_row(seq[step - 1], seq[step]);
        rows[static_cast<std::size_t>(r - 1)].push_back(static_cast<int>(step));
    }
    return StandardTableau::validate(std::move(rows), final_shape);
}

/// Inverse of tableau_from_nested: the chain of shapes of the sub-tableaux
/// on entries <= s.
inline NestedPartitionSequence nested_from_tableau(const StandardTableau& t) {
    std::vector<Partition> seq;
    seq.reserve(static_cast<std::size_t>(t.size()) + 1);
    seq.push_back(Partition());
    std::vector<int> counts(static_cast<std::size_t>(t.shape().length()), 0);
    std::vector<int> row_of(static_cast<std::size_t>(t.size()) + 1, 0);
    for (int i = 1; i <= t.shape().length(); ++i)
        for (int j = 1; j <= t.shape().part(i); ++j)
            row_of[static_cast<std::size_t>(t.entry(i, j))] = i;
    for (int e = 1; e <= t.size(); ++e) {
        ++counts[static_cast<std::size_t>(row_of[static_cast<std::size_t>(e)] - 1)];
        std::vector<int> prefix;
        for (int c : counts) {
            if (c == 0) break;
            prefix.push_back(c);
        }
        seq.push_back(Partition(std::move(prefix)));
    }
    return NestedPartitionSequence(std::move(seq));
}

/// Sub-tableau on the entries 1..cut, of the correspondingly truncated shape.
inline StandardTableau restrict_tableau(const StandardTableau& t, int cut) {
    if (cut < 1 || cut > t.size())
        throw std::invalid_argument("restrict_tableau: cut must lie in 1..N");
    std::vector<std::vector<int>> rows;
    for (const auto& row : t.rows()) {
        std::vector<int> kept;
        for (int e : row)
            if (e <= cut) kept.push_back(e);
        if (kept.empty()) break;
        rows.push_back(std::move(kept));
    }
    return StandardTableau::from_rows(std::move(rows));
}

}  // namespace stacktab
