// Exact linear algebra over small prime fields: dense matrices, canonical
// (reduced-echelon) subspaces, kernels and preimages, Jordan types of
// nilpotent operators, complete flags, and subspace-extension enumeration.
//
// Vectors are coordinate tuples; matrices act on column vectors. Subspaces
// are stored as reduced row-echelon bases, so equal subspaces have
// identical representations.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stacktab/partitions.hpp"

namespace stacktab {

/// Arithmetic in the field with p elements, p a prime below 2^16.
class PrimeField {
public:
    explicit PrimeField(int p) : p_(p) {
        if (p < 2 || p >= (1 << 16) || !is_prime(p))
            throw std::invalid_argument("PrimeField: characteristic must be a prime below 2^16");
    }

    int p() const { return p_; }

    int reduce(long long x) const {
        long long r = x % p_;
        return static_cast<int>(r < 0 ? r + p_ : r);
    }
    int add(int a, int b) const { return (a + b) % p_; }
    int sub(int a, int b) const { return (a - b + p_) % p_; }
    int mul(int a, int b) const {
        return static_cast<int>((static_cast<long long>(a) * b) % p_);
    }
    int neg(int a) const { return a == 0 ? 0 : p_ - a; }

    int inv(int a) const {
        a %= p_;
        if (a == 0) throw std::invalid_argument("PrimeField::inv: zero is not invertible");
        // extended Euclid
        int t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            const int q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        return t < 0 ? t + p_ : t;
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    static bool is_prime(int n) {
        if (n < 2) return false;
        for (int d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    int p_;
};

namespace detail {

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row. Zero rows end up at the bottom.
inline std::vector<int> rref_generic(const PrimeField& f, int rows, int cols,
                                     std::vector<int>& a) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<std::size_t>(i) * cols + c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols; ++j)
                std::swap(a[static_cast<std::size_t>(pr) * cols + j],
                          a[static_cast<std::size_t>(r) * cols + j]);
        const int inv = f.inv(a[static_cast<std::size_t>(r) * cols + c]);
        if (inv != 1)
            for (int j = c; j < cols; ++j) {
                auto& x = a[static_cast<std::size_t>(r) * cols + j];
                x = f.mul(x, inv);
            }
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const int factor = a[static_cast<std::size_t>(i) * cols + c];
            if (factor == 0) continue;
            for (int j = c; j < cols; ++j) {
                auto& x = a[static_cast<std::size_t>(i) * cols + j];
                x = f.sub(x, f.mul(factor, a[static_cast<std::size_t>(r) * cols + j]));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Bit-packed elimination for p = 2, one 64-bit word per row.
inline std::vector<int> rref_f2(int rows, int cols, std::vector<int>& a) {
    std::vector<std::uint64_t> packed(static_cast<std::size_t>(rows), 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (a[static_cast<std::size_t>(i) * cols + j])
                packed[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (packed[static_cast<std::size_t>(i)] & bit) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(packed[static_cast<std::size_t>(pr)], packed[static_cast<std::size_t>(r)]);
        for (int i = 0; i < rows; ++i)
            if (i != r && (packed[static_cast<std::size_t>(i)] & bit))
                packed[static_cast<std::size_t>(i)] ^= packed[static_cast<std::size_t>(r)];
        pivots.push_back(c);
        ++r;
    }
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            a[static_cast<std::size_t>(i) * cols + j] =
                (packed[static_cast<std::size_t>(i)] >> j) & 1;
    return pivots;
}

inline std::vector<int> rref_inplace(const PrimeField& f, int rows, int cols,
                                     std::vector<int>& a) {
    if (f.p() == 2 && cols <= 64) return rref_f2(rows, cols, a);
    return rref_generic(f, rows, cols, a);
}

}  // namespace detail

/// Dense matrix with entries reduced modulo the field characteristic.
class Matrix {
public:
    Matrix(const PrimeField& field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
    }

    static Matrix identity(const PrimeField& field, int n) {
        Matrix m(field, n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    static Matrix from_rows(const PrimeField& field, const std::vector<std::vector<int>>& rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        Matrix m(field, r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
                throw std::invalid_argument("Matrix: ragged rows");
            for (int j = 0; j < c; ++j)
                m.set(i, j, field.reduce(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
        }
        return m;
    }

    const PrimeField& field() const { return field_; }
    int p() const { return field_.p(); }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int i, int j) const { return a_[index(i, j)]; }
    void set(int i, int j, int value) { a_[index(i, j)] = field_.reduce(value); }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](int x) { return x == 0; });
    }
    bool is_square() const { return rows_ == cols_; }

    Matrix add(const Matrix& other) const {
        require_same_shape(other);
        Matrix out(field_, rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = field_.add(a_[k], other.a_[k]);
        return out;
    }

    Matrix multiply(const Matrix& other) const {
        if (cols_ != other.rows_ || field_ != other.field_)
            throw std::invalid_argument("Matrix::multiply: dimension or field mismatch");
        Matrix out(field_, rows_, other.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const int x = at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < other.cols_; ++j) {
                    const int y = other.at(k, j);
                    if (y == 0) continue;
                    out.a_[out.index(i, j)] =
                        field_.reduce(out.a_[out.index(i, j)] + static_cast<long long>(x) * y);
                }
            }
        return out;
    }

    Matrix power(int k) const {
        if (!is_square()) throw std::invalid_argument("Matrix::power: matrix not square");
        if (k < 0) throw std::invalid_argument("Matrix::power: negative exponent");
        Matrix out = identity(field_, rows_);
        for (int i = 0; i < k; ++i) out = out.multiply(*this);
        return out;
    }

    std::vector<int> apply(const std::vector<int>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("Matrix::apply: vector length mismatch");
        std::vector<int> out(static_cast<std::size_t>(rows_), 0);
        for (int i = 0; i < rows_; ++i) {
            long long acc = 0;
            for (int j = 0; j < cols_; ++j)
                acc += static_cast<long long>(at(i, j)) * v[static_cast<std::size_t>(j)];
            out[static_cast<std::size_t>(i)] = field_.reduce(acc);
        }
        return out;
    }

    Matrix transposed() const {
        Matrix out(field_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
        return out;
    }

    Matrix inverse() const {
        if (!is_square()) throw std::invalid_argument("Matrix::inverse: matrix not square");
        std::vector<int> aug(static_cast<std::size_t>(rows_) * (2 * static_cast<std::size_t>(cols_)), 0);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j)
                aug[static_cast<std::size_t>(i) * (2 * cols_) + j] = at(i, j);
            aug[static_cast<std::size_t>(i) * (2 * cols_) + cols_ + i] = 1;
        }
        // the augmented width can exceed the packed-word limit; eliminate generically
        const auto pivots = detail::rref_generic(field_, rows_, 2 * cols_, aug);
        if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_)
            throw std::invalid_argument("Matrix::inverse: matrix is singular");
        Matrix out(field_, rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                out.set(i, j, aug[static_cast<std::size_t>(i) * (2 * cols_) + cols_ + j]);
        return out;
    }

    std::vector<std::vector<int>> row_vectors() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(rows_));
        for (int i = 0; i < rows_; ++i) {
            out[static_cast<std::size_t>(i)].assign(a_.begin() + static_cast<long>(i) * cols_,
                                                    a_.begin() + static_cast<long>(i + 1) * cols_);
        }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::invalid_argument("Matrix: index out of range");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }
    void require_same_shape(const Matrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_ || field_ != other.field_)
            throw std::invalid_argument("Matrix: shape or field mismatch");
    }

    PrimeField field_;
    int rows_, cols_;
    std::vector<int> a_;
};

/// Canonical reduced row echelon form (pivots 1, cleared above and below,
/// zero rows at the bottom).
inline Matrix rref(const Matrix& m) {
    std::vector<int> a;
    a.reserve(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a.push_back(m.at(i, j));
    detail::rref_inplace(m.field(), m.rows(), m.cols(), a);
    Matrix out(m.field(), m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.set(i, j, a[static_cast<std::size_t>(i) * m.cols() + j]);
    return out;
}

inline int rank(const Matrix& m) {
    std::vector<int> a;
    a.reserve(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a.push_back(m.at(i, j));
    return static_cast<int>(detail::rref_inplace(m.field(), m.rows(), m.cols(), a).size());
}

/// Subspace of F_p^ambient in canonical form: the basis rows are the
/// reduced row echelon form of any spanning set, so equality of subspaces
/// is equality of representations.
class Subspace {
public:
    static Subspace span(const PrimeField& field, int ambient,
                         const std::vector<std::vector<int>>& vectors) {
        if (ambient < 0) throw std::invalid_argument("Subspace: negative ambient dimension");
        std::vector<int> a;
        a.reserve(vectors.size() * static_cast<std::size_t>(ambient));
        for (const auto& v : vectors) {
            if (static_cast<int>(v.size()) != ambient)
                throw std::invalid_argument("Subspace::span: vector length mismatch");
            for (int x : v) a.push_back(field.reduce(x));
        }
        auto pivots =
            detail::rref_inplace(field, static_cast<int>(vectors.size()), ambient, a);
        std::vector<std::vector<int>> basis(pivots.size());
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis[r].assign(a.begin() + static_cast<long>(r) * ambient,
                            a.begin() + static_cast<long>(r + 1) * ambient);
        return Subspace(field, ambient, std::move(basis), std::move(pivots));
    }

    static Subspace zero(const PrimeField& field, int ambient) {
        return span(field, ambient, {});
    }

    static Subspace full(const PrimeField& field, int ambient) {
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(ambient),
                                           std::vector<int>(static_cast<std::size_t>(ambient), 0));
        for (int i = 0; i < ambient; ++i)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        return span(field, ambient, rows);
    }

    const PrimeField& field() const { return field_; }
    int p() const { return field_.p(); }
    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::vector<int>>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const std::vector<int>& v) const { return !reduce(v).has_value() ? false : true; }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_ || other.field_ != field_)
            throw std::invalid_argument("Subspace::contains: ambient mismatch");
        for (const auto& row : other.basis_)
            if (!contains(row)) return false;
        return true;
    }

    /// Coefficients of v in the canonical basis, if v lies in the subspace.
    std::optional<std::vector<int>> coordinates(const std::vector<int>& v) const {
        return reduce(v);
    }

    Subspace sum(const Subspace& other) const {
        if (other.ambient_ != ambient_ || other.field_ != field_)
            throw std::invalid_argument("Subspace::sum: ambient mismatch");
        std::vector<std::vector<int>> rows = basis_;
        rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
        return span(field_, ambient_, rows);
    }

    /// Image under an operator: the span of g*b over basis vectors b.
    Subspace apply(const Matrix& g) const {
        if (g.cols() != ambient_ || g.field() != field_)
            throw std::invalid_argument("Subspace::apply: operator shape mismatch");
        std::vector<std::vector<int>> rows;
        rows.reserve(basis_.size());
        for (const auto& b : basis_) rows.push_back(g.apply(b));
        return span(field_, g.rows(), rows);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    Subspace(const PrimeField& field, int ambient, std::vector<std::vector<int>> basis,
             std::vector<int> pivots)
        : field_(field), ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    // Eliminates the pivot coordinates of v; on success the used
    // coefficients are exactly the coordinates in the canonical basis.
    std::optional<std::vector<int>> reduce(const std::vector<int>& v) const {
        if (static_cast<int>(v.size()) != ambient_)
            throw std::invalid_argument("Subspace: vector length mismatch");
        std::vector<int> work(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) work[j] = field_.reduce(v[j]);
        std::vector<int> coords(basis_.size(), 0);
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            const int c = work[static_cast<std::size_t>(pivots_[r])];
            if (c == 0) continue;
            coords[r] = c;
            for (int j = pivots_[r]; j < ambient_; ++j) {
                auto& x = work[static_cast<std::size_t>(j)];
                x = field_.sub(x, field_.mul(c, basis_[r][static_cast<std::size_t>(j)]));
            }
        }
        for (int x : work)
            if (x != 0) return std::nullopt;
        return coords;
    }

    PrimeField field_;
    int ambient_;
    std::vector<std::vector<int>> basis_;
    std::vector<int> pivots_;
};

/// Solution space of M x = 0, canonical.
inline Subspace kernel(const Matrix& m) {
    std::vector<int> a;
    a.reserve(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a.push_back(m.at(i, j));
    const auto pivots = detail::rref_inplace(m.field(), m.rows(), m.cols(), a);
    std::vector<char> is_pivot(static_cast<std::size_t>(m.cols()), 0);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
    std::vector<std::vector<int>> vectors;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<int> v(static_cast<std::size_t>(m.cols()), 0);
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] =
                m.field().neg(a[r * static_cast<std::size_t>(m.cols()) + static_cast<std::size_t>(f)]);
        vectors.push_back(std::move(v));
    }
    return Subspace::span(m.field(), m.cols(), vectors);
}

/// Column space of M, canonical.
inline Subspace image(const Matrix& m) {
    return Subspace::span(m.field(), m.rows(), m.transposed().row_vectors());
}

inline bool is_nilpotent(const Matrix& e) {
    if (!e.is_square()) return false;
    Matrix acc = e;
    for (int k = 1; k <= e.rows(); ++k) {
        if (acc.is_zero()) return true;
        if (k < e.rows()) acc = acc.multiply(e);
    }
    return e.rows() == 0;
}

/// Jordan type of a nilpotent operator: the partition conjugate to
/// (dim ker e, dim ker e^2 - dim ker e, ...).
inline Partition jordan_type(const Matrix& e) {
    if (!e.is_square()) throw std::invalid_argument("jordan_type: matrix not square");
    if (!is_nilpotent(e)) throw std::invalid_argument("jordan_type: matrix is not nilpotent");
    const int n = e.rows();
    std::vector<int> diffs;
    Matrix acc = Matrix::identity(e.field(), n);
    int prev = 0;
    while (prev < n) {
        acc = acc.multiply(e);
        const int d = n - rank(acc);
        diffs.push_back(d - prev);
        prev = d;
    }
    return transpose(Partition(std::move(diffs)));
}

/// Matrix of e acting on the invariant subspace W, written in W's
/// canonical basis. Throws if e does not map W into itself.
inline Matrix restrict_to(const Matrix& e, const Subspace& w) {
    if (e.cols() != w.ambient() || !e.is_square() || e.field() != w.field())
        throw std::invalid_argument("restrict_to: shape or field mismatch");
    Matrix out(e.field(), w.dim(), w.dim());
    for (int r = 0; r < w.dim(); ++r) {
        const auto y = e.apply(w.basis()[static_cast<std::size_t>(r)]);
        const auto coords = w.coordinates(y);
        if (!coords)
            throw std::invalid_argument("restrict_to: subspace is not invariant under the operator");
        for (int s = 0; s < w.dim(); ++s) out.set(s, r, (*coords)[static_cast<std::size_t>(s)]);
    }
    return out;
}

/// Full preimage e^{-1}(W) = { v : e v in W }.
inline Subspace preimage(const Matrix& e, const Subspace& w) {
    if (e.rows() != w.ambient() || e.field() != w.field())
        throw std::invalid_argument("preimage: shape or field mismatch");
    // Rows of q express membership in W: one constraint per non-pivot
    // coordinate of W's echelon basis. ker q = W, so e^{-1}W = ker(q e).
    std::vector<char> is_pivot(static_cast<std::size_t>(w.ambient()), 0);
    for (int c : w.pivots()) is_pivot[static_cast<std::size_t>(c)] = 1;
    Matrix q(e.field(), w.ambient() - w.dim(), w.ambient());
    int qr = 0;
    for (int f = 0; f < w.ambient(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        q.set(qr, f, 1);
        for (int r = 0; r < w.dim(); ++r)
            q.set(qr, w.pivots()[static_cast<std::size_t>(r)],
                  e.field().neg(w.basis()[static_cast<std::size_t>(r)][static_cast<std::size_t>(f)]));
        ++qr;
    }
    return kernel(q.multiply(e));
}

/// All subspaces W' with W < W' <= U and dim W' = dim W + 1, each exactly
/// once, in a deterministic order (one per line of U/W).
inline std::vector<Subspace> enumerate_extensions(const Subspace& w, const Subspace& u) {
    if (!u.contains(w))
        throw std::invalid_argument("enumerate_extensions: W is not contained in U");
    const PrimeField& f = w.field();
    std::vector<std::vector<int>> complement;
    Subspace grown = w;
    for (const auto& row : u.basis()) {
        if (grown.contains(row)) continue;
        complement.push_back(row);
        grown = grown.sum(Subspace::span(f, w.ambient(), {row}));
    }
    const int d = static_cast<int>(complement.size());
    std::vector<Subspace> out;
    for (int lead = 0; lead < d; ++lead) {
        // coefficient 1 at the leading complement vector, free tail after it
        std::vector<int> tail(static_cast<std::size_t>(d - lead - 1), 0);
        while (true) {
            std::vector<int> v = complement[static_cast<std::size_t>(lead)];
            for (int m = 0; m < static_cast<int>(tail.size()); ++m) {
                const int c = tail[static_cast<std::size_t>(m)];
                if (c == 0) continue;
                const auto& cm = complement[static_cast<std::size_t>(lead + 1 + m)];
                for (std::size_t j = 0; j < v.size(); ++j)
                    v[j] = f.add(v[j], f.mul(c, cm[j]));
            }
            std::vector<std::vector<int>> rows = w.basis();
            rows.push_back(std::move(v));
            out.push_back(Subspace::span(f, w.ambient(), rows));
            int pos = static_cast<int>(tail.size());
            while (pos > 0) {
                --pos;
                if (++tail[static_cast<std::size_t>(pos)] < f.p()) break;
                tail[static_cast<std::size_t>(pos)] = 0;
                if (pos == 0) goto next_lead;
            }
            if (tail.empty()) break;
        }
    next_lead:;
    }
    return out;
}

/// Removes the bottom box of column j from the Young diagram of `shape`.
inline Partition hyperplane_restriction_type(const Partition& shape, int j) {
    Partition t = transpose(shape);
    if (j < 1 || j > t.length() || t.part(j) < 1)
        throw std::invalid_argument("hyperplane_restriction_type: column " + std::to_string(j) +
                                    " is empty");
    if (t.part(j) == t.part(j + 1))
        throw std::invalid_argument("hyperplane_restriction_type: bottom box of column " +
                                    std::to_string(j) + " is not removable");
    std::vector<int> parts = t.parts();
    --parts[static_cast<std::size_t>(j - 1)];
    return transpose(Partition(std::move(parts)));
}

/// The nilpotent with one Jordan chain per part of `type`, in the basis
/// ordered row by row: within each chain v_k maps to v_{k-1}.
inline Matrix jordan_nilpotent(const PrimeField& field, const Partition& type) {
    const int n = type.weight();
    Matrix e(field, n, n);
    int offset = 0;
    for (int part : type.parts()) {
        for (int k = 1; k < part; ++k) e.set(offset + k - 1, offset + k, 1);
        offset += part;
    }
    return e;
}

/// Complete flag of F_p^ambient: proper subspaces of dimensions
/// 1..ambient-1 with strict inclusions. The two trivial steps are implied.
class Flag {
public:
    Flag(const PrimeField& field, int ambient, std::vector<Subspace> steps)
        : field_(field), ambient_(ambient), steps_(std::move(steps)) {
        if (ambient < 1) throw std::invalid_argument("Flag: ambient dimension must be positive");
        if (static_cast<int>(steps_.size()) != ambient - 1)
            throw std::invalid_argument("Flag: expected " + std::to_string(ambient - 1) +
                                        " proper steps");
        for (int i = 0; i < ambient - 1; ++i) {
            const Subspace& s = steps_[static_cast<std::size_t>(i)];
            if (s.field() != field || s.ambient() != ambient)
                throw std::invalid_argument("Flag: step ambient or field mismatch");
            if (s.dim() != i + 1)
                throw std::invalid_argument("Flag: step " + std::to_string(i + 1) +
                                            " has wrong dimension");
            if (i > 0 && !s.contains(steps_[static_cast<std::size_t>(i - 1)]))
                throw std::invalid_argument("Flag: steps are not nested");
        }
    }

    const PrimeField& field() const { return field_; }
    int p() const { return field_.p(); }
    int ambient() const { return ambient_; }

    /// F_i for i = 0..ambient; the ends are the zero and full subspaces.
    Subspace step(int i) const {
        if (i < 0 || i > ambient_) throw std::invalid_argument("Flag::step: index out of range");
        if (i == 0) return Subspace::zero(field_, ambient_);
        if (i == ambient_) return Subspace::full(field_, ambient_);
        return steps_[static_cast<std::size_t>(i - 1)];
    }

    const std::vector<Subspace>& proper_steps() const { return steps_; }

    Flag apply(const Matrix& g) const {
        std::vector<Subspace> steps;
        steps.reserve(steps_.size());
        for (const Subspace& s : steps_) steps.push_back(s.apply(g));
        return Flag(field_, ambient_, std::move(steps));
    }

    friend bool operator==(const Flag&, const Flag&) = default;

private:
    PrimeField field_;
    int ambient_;
    std::vector<Subspace> steps_;
};

}  // namespace stacktab
