#pragma once

#include "homchar/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace homchar {

// Basis indices are opaque totally-ordered byte strings. Higher layers encode
// monomials, tensor words and simplex chains into these keys; this layer never
// interprets them.
using Key = std::string;

// Sparse vector over a finite key set. Zero entries are never stored.
class SparseVector {
public:
    SparseVector() = default;

    const Rational& at(const Key& k) const;          // 0 if absent
    void add(const Key& k, const Rational& c);       // += c, erases on zero
    void set(const Key& k, const Rational& c);
    bool empty() const { return entries_.empty(); }
    size_t size() const { return entries_.size(); }

    SparseVector& operator+=(const SparseVector& o);
    SparseVector& operator-=(const SparseVector& o);
    SparseVector& scale(const Rational& c);
    friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
    friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }

    friend bool operator==(const SparseVector&, const SparseVector&) = default;

    const std::map<Key, Rational>& entries() const { return entries_; }
    std::string str() const;

private:
    std::map<Key, Rational> entries_;
};

// Row-major sparse matrix. Rows are linear functionals over a shared, declared
// column key set; operators V -> W enter with one row per W-coordinate.
struct SparseMatrix {
    std::vector<SparseVector> rows;
    std::vector<Key> columns;  // declared column set, ordered

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
};

struct RrefResult {
    SparseMatrix reduced;        // zero rows dropped
    std::vector<Key> pivots;     // pivot columns in row order
};

// Reduced row echelon form by exact Gauss-Jordan elimination. Row space is
// preserved; pivot entries are 1 and pivot columns are cleared elsewhere.
RrefResult rref(const SparseMatrix& m);

size_t rank(const SparseMatrix& m);

// Exact basis of { v : m.v = 0 } over the declared columns. Empty iff the map
// is injective. Each returned vector has a distinguished free column set to 1.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

// Decides v in span(gens); on success the witness c satisfies v = sum c_i g_i
// exactly.
std::optional<std::vector<Rational>> in_span(const SparseVector& v,
                                             const std::vector<SparseVector>& gens);

}  // namespace homchar
