#include "homchar/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace homchar {

namespace {
const Rational kZero{};
}

const Rational& SparseVector::at(const Key& k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? kZero : it->second;
}

void SparseVector::add(const Key& k, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = entries_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            entries_.erase(it);
    }
}

void SparseVector::set(const Key& k, const Rational& c) {
    if (c.is_zero())
        entries_.erase(k);
    else
        entries_[k] = c;
}

SparseVector& SparseVector::operator+=(const SparseVector& o) {
    for (const auto& [k, c] : o.entries_)
        add(k, c);
    return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& o) {
    for (const auto& [k, c] : o.entries_)
        add(k, -c);
    return *this;
}

SparseVector& SparseVector::scale(const Rational& c) {
    if (c.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& [k, v] : entries_)
        v *= c;
    return *this;
}

std::string SparseVector::str() const {
    if (entries_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : entries_) {
        if (!first)
            out += " + ";
        out += c.str() + "*" + k;
        first = false;
    }
    return out;
}

RrefResult rref(const SparseMatrix& m) {
    // Gauss-Jordan over the declared column order.
    std::vector<SparseVector> work = m.rows;
    std::vector<SparseVector> done;
    std::vector<Key> pivots;
    for (const Key& col : m.columns) {
        // find a row with a nonzero entry in col
        size_t found = work.size();
        for (size_t i = 0; i < work.size(); ++i) {
            if (!work[i].at(col).is_zero()) {
                found = i;
                break;
            }
        }
        if (found == work.size())
            continue;
        SparseVector pivot_row = work[found];
        work.erase(work.begin() + static_cast<long>(found));
        pivot_row.scale(pivot_row.at(col).inverse());
        for (auto& r : work) {
            const Rational& c = r.at(col);
            if (!c.is_zero()) {
                SparseVector t = pivot_row;
                t.scale(-c);
                r += t;
            }
        }
        for (auto& r : done) {
            const Rational& c = r.at(col);
            if (!c.is_zero()) {
                SparseVector t = pivot_row;
                t.scale(-c);
                r += t;
            }
        }
        done.push_back(std::move(pivot_row));
        pivots.push_back(col);
        if (work.empty())
            break;
    }
    RrefResult res;
    res.reduced.columns = m.columns;
    res.reduced.rows = std::move(done);
    res.pivots = std::move(pivots);
    return res;
}

size_t rank(const SparseMatrix& m) {
    return rref(m).pivots.size();
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
    RrefResult r = rref(m);
    std::set<Key> pivot_set(r.pivots.begin(), r.pivots.end());
    std::vector<SparseVector> basis;
    for (const Key& free_col : m.columns) {
        if (pivot_set.count(free_col))
            continue;
        SparseVector v;
        v.set(free_col, Rational(1));
        // each reduced row: pivot + sum over free columns; solve pivot value
        for (size_t i = 0; i < r.reduced.rows.size(); ++i) {
            const Rational& c = r.reduced.rows[i].at(free_col);
            if (!c.is_zero())
                v.set(r.pivots[i], -c);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> in_span(const SparseVector& v,
                                             const std::vector<SparseVector>& gens) {
    // Solve G.c = v where columns of the system are the generators plus the
    // target. Row keys: union of supports.
    std::set<Key> keys;
    for (const auto& [k, c] : v.entries())
        keys.insert(k);
    for (const auto& g : gens)
        for (const auto& [k, c] : g.entries())
            keys.insert(k);

    SparseMatrix sys;
    for (size_t j = 0; j < gens.size(); ++j)
        sys.columns.push_back("c" + std::to_string(j));
    const Key target = "~target";  // sorts after the c-columns
    sys.columns.push_back(target);
    for (const Key& k : keys) {
        SparseVector row;
        for (size_t j = 0; j < gens.size(); ++j)
            row.set(sys.columns[j], gens[j].at(k));
        row.set(target, v.at(k));
        if (!row.empty())
            sys.rows.push_back(std::move(row));
    }
    RrefResult r = rref(sys);
    std::vector<Rational> coeffs(gens.size());
    for (size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == target)
            return std::nullopt;  // inconsistent: v not in span
        size_t j = static_cast<size_t>(std::stoul(r.pivots[i].substr(1)));
        coeffs[j] = r.reduced.rows[i].at(target);
    }
    // Free generator columns keep coefficient 0; verify exactly.
    SparseVector recomb;
    for (size_t j = 0; j < gens.size(); ++j) {
        SparseVector t = gens[j];
        t.scale(coeffs[j]);
        recomb += t;
    }
    if (!(recomb == v))
        return std::nullopt;
    return coeffs;
}

}  // namespace homchar
