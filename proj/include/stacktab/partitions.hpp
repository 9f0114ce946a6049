// Partitions, compositions and Levi data: the shapes everything else is
// indexed by, plus the induced-orbit partition arithmetic and the two
// dimension formulas.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace stacktab {

/// Weakly decreasing positive integers. Stored normalized: trailing zeros
/// are stripped at construction, the weakly-decreasing invariant is
/// enforced (sorting is never implicit; see Composition::sorted()).
class Partition {
public:
    Partition() = default;  // the empty partition, weight 0

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] <= 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    /// Builds a partition from arbitrary nonnegative values by sorting
    /// descending. The explicit route for unordered data.
    static Partition sorted(std::vector<int> values) {
        std::sort(values.begin(), values.end(), std::greater<int>());
        return Partition(std::move(values));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }

    /// 1-based part access; parts beyond the length read as 0.
    int part(int j) const {
        if (j < 1) throw std::invalid_argument("Partition::part: index is 1-based");
        return j <= length() ? parts_[j - 1] : 0;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Ordered tuple of positive integers; order is meaningful and preserved.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int x : parts_)
            if (x <= 0) throw std::invalid_argument("Composition: parts must be positive");
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    int part(int j) const {
        if (j < 1 || j > length())
            throw std::invalid_argument("Composition::part: index out of range");
        return parts_[j - 1];
    }

    /// Explicit conversion to a partition by sorting descending.
    Partition sorted() const { return Partition::sorted(parts_); }

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

/// Conjugate partition: part j of the result counts the parts of `p` that
/// are >= j (column lengths of the Young diagram). Involutive.
inline Partition transpose(const Partition& p) {
    std::vector<int> cols;
    cols.reserve(p.empty() ? 0 : static_cast<std::size_t>(p.part(1)));
    for (int j = 1; j <= p.part(1); ++j) {
        int count = 0;
        for (int x : p.parts())
            if (x >= j) ++count;
        cols.push_back(count);
    }
    return Partition(std::move(cols));
}

/// A block-diagonal shape: a composition (lambda_1,...,lambda_n) together
/// with one partition per block, mu_i of weight lambda_i.
class LeviDatum {
public:
    LeviDatum(Composition levi_shape, std::vector<Partition> block_partitions)
        : levi_shape_(std::move(levi_shape)), blocks_(std::move(block_partitions)) {
        if (blocks_.empty())
            throw std::invalid_argument("LeviDatum: at least one block required");
        if (static_cast<int>(blocks_.size()) != levi_shape_.length())
            throw std::invalid_argument("LeviDatum: one block partition per shape part required");
        for (int i = 0; i < levi_shape_.length(); ++i)
            if (blocks_[static_cast<std::size_t>(i)].weight() != levi_shape_.part(i + 1))
                throw std::invalid_argument("LeviDatum: block " + std::to_string(i + 1) +
                                            " weight differs from its shape part");
    }

    /// Shape parts are taken to be the block weights.
    static LeviDatum from_blocks(std::vector<Partition> block_partitions) {
        std::vector<int> shape;
        shape.reserve(block_partitions.size());
        for (const Partition& b : block_partitions) shape.push_back(b.weight());
        return LeviDatum(Composition(std::move(shape)), std::move(block_partitions));
    }

    const Composition& levi_shape() const { return levi_shape_; }
    const std::vector<Partition>& blocks() const { return blocks_; }
    const Partition& block(int i) const {
        if (i < 1 || i > block_count())
            throw std::invalid_argument("LeviDatum::block: index out of range");
        return blocks_[static_cast<std::size_t>(i - 1)];
    }

    int block_count() const { return static_cast<int>(blocks_.size()); }
    int weight() const { return levi_shape_.weight(); }

    /// Maximum number of rows over all block partitions.
    int max_block_length() const {
        int m = 0;
        for (const Partition& b : blocks_) m = std::max(m, b.length());
        return m;
    }

    /// Sum of the shape parts of blocks before block i (1-based).
    int block_offset(int i) const {
        int off = 0;
        for (int l = 1; l < i; ++l) off += levi_shape_.part(l);
        return off;
    }

    friend bool operator==(const LeviDatum&, const LeviDatum&) = default;

private:
    Composition levi_shape_;
    std::vector<Partition> blocks_;
};

/// Row-wise sum of the block partitions: part j of the result is the sum
/// over all blocks of their j-th part (absent parts read as 0). This is
/// the partition of the orbit induced from the blocks.
inline Partition induced_partition(const LeviDatum& d) {
    std::vector<int> sums;
    sums.reserve(static_cast<std::size_t>(d.max_block_length()));
    for (int j = 1; j <= d.max_block_length(); ++j) {
        int s = 0;
        for (const Partition& b : d.blocks()) s += b.part(j);
        sums.push_back(s);
    }
    return Partition(std::move(sums));
}

/// Independent route to induced_partition: concatenate the transposes of
/// all blocks, sort into a partition, transpose back. Kept separate as a
/// cross-check; must agree with induced_partition on every input.
inline Partition induced_partition_oracle(const LeviDatum& d) {
    std::vector<int> concat;
    for (const Partition& b : d.blocks()) {
        Partition t = transpose(b);
        concat.insert(concat.end(), t.parts().begin(), t.parts().end());
    }
    return transpose(Partition::sorted(std::move(concat)));
}

/// (1/2) * sum_i t_i(t_i - 1) where t is the transpose of `p`: the common
/// dimension of the components of the flag fibre over a nilpotent of this
/// Jordan type.
inline long long springer_fibre_dimension(const Partition& p) {
    long long dim = 0;
    for (int t : transpose(p).parts()) dim += static_cast<long long>(t) * (t - 1) / 2;
    return dim;
}

/// sum_i t_i^2 where t is the transpose of `p`: the dimension of the
/// centraliser of a nilpotent of this Jordan type.
inline long long centraliser_dimension(const Partition& p) {
    long long dim = 0;
    for (int t : transpose(p).parts()) dim += static_cast<long long>(t) * t;
    return dim;
}

/// All partitions of n in descending lexicographic order, (n) first and
/// (1,...,1) last. The order is part of the output contract.
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: negative weight");
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.push_back(Partition(current));
            return;
        }
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// All compositions of n, ordered descending-lexicographically by parts.
inline std::vector<Composition> enumerate_compositions(int n) {
    if (n <= 0) throw std::invalid_argument("enumerate_compositions: weight must be positive");
    std::vector<Composition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(Composition(current));
            return;
        }
        for (int part = remaining; part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part);
            current.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

/// All Levi data of total weight n: every composition of n combined with
/// every choice of one partition per part. Deterministic order.
inline std::vector<LeviDatum> enumerate_levi_data(int n) {
    std::vector<LeviDatum> out;
    for (const Composition& shape : enumerate_compositions(n)) {
        std::vector<std::vector<Partition>> choices;
        choices.reserve(static_cast<std::size_t>(shape.length()));
        for (int i = 1; i <= shape.length(); ++i)
            choices.push_back(enumerate_partitions(shape.part(i)));
        std::vector<std::size_t> pick(choices.size(), 0);
        while (true) {
            std::vector<Partition> blocks;
            blocks.reserve(choices.size());
            for (std::size_t i = 0; i < choices.size(); ++i) blocks.push_back(choices[i][pick[i]]);
            out.push_back(LeviDatum(shape, std::move(blocks)));
            std::size_t i = choices.size();
            while (i > 0) {
                --i;
                if (++pick[i] < choices[i].size()) break;
                pick[i] = 0;
                if (i == 0) goto next_shape;
            }
        }
    next_shape:;
    }
    return out;
}

}  // namespace stacktab
