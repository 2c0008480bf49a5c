#pragma once

#include "homchar/linalg.hpp"
#include "homchar/rational.hpp"

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace homchar {

// A tensor word: an ordered list of basis labels of the ambient algebra.
// Weight = number of factors; the empty word is the unit of k = A^{(x)0}.
struct Word {
    std::vector<std::string> letters;

    Word() = default;
    explicit Word(std::vector<std::string> ls) : letters(std::move(ls)) {}
    static Word single(std::string l) { return Word({std::move(l)}); }

    int weight() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }

    friend Word operator+(const Word& a, const Word& b);  // concatenation
    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

    Key key() const;  // opaque encoding for exact-linear
    std::string str() const;
};

// Finite linear combination of tensor words (possibly of mixed weight) with
// rational coefficients.
class Tensor {
public:
    Tensor() = default;
    static Tensor term(Word w, Rational c = Rational(1));

    void add(const Word& w, const Rational& c);
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Word, Rational>& terms() const { return terms_; }
    Rational coeff(const Word& w) const;

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor& scale(const Rational& c);
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(const Rational& c, Tensor t) { return t.scale(c); }
    friend bool operator==(const Tensor&, const Tensor&) = default;

    Tensor filter_weight(int w) const;
    std::vector<int> weights() const;

    SparseVector to_sparse() const;  // keys via Word::key()
    std::string str() const;

private:
    std::map<Word, Rational> terms_;
};

// Enumeration window for infinite bases. Finite algebras ignore it. For the
// Laurent-type built-in the fields bound |exponent| of the invertible
// generators and the exponent of the nilpotent-free polynomial generator.
struct Window {
    int exp_bound = 2;
    int z_bound = 2;
};

// A presentation of a DG-bialgebra by an enumerable graded basis plus
// structure maps with rational structure constants. Cohomological grading:
// the differential raises degree by 1; product and coproduct have degree 0.
class BialgebraOracle {
public:
    virtual ~BialgebraOracle() = default;

    virtual std::string name() const = 0;
    virtual bool is_finite() const = 0;
    virtual std::vector<std::string> basis(const Window& w) const = 0;
    virtual int degree(const std::string& label) const = 0;
    virtual Tensor product(const std::string& a, const std::string& b) const = 0;  // weight 1
    virtual Tensor coproduct(const std::string& a) const = 0;                       // weight 2
    virtual Rational counit(const std::string& a) const = 0;
    virtual Tensor differential(const std::string& a) const = 0;                    // weight 1
    virtual Tensor unit() const = 0;                                                // weight 1
    // Elements g with d(g)=0, Delta(g)=g(x)g, eps(g)=1 available for tests.
    virtual std::vector<Tensor> grouplike_stock(const Window& w) const = 0;
};

using OraclePtr = std::shared_ptr<const BialgebraOracle>;

// ---- Koszul sign engine ----------------------------------------------------

// Sign (-1)^{sum over inversions deg_i*deg_j} of permuting graded symbols:
// perm[i] = source position of the symbol landing in slot i.
int koszul_permutation_sign(const std::vector<int>& degrees, const std::vector<size_t>& perm);

int internal_degree(const BialgebraOracle& A, const Word& w);
// Total (shifted) degree: internal degree + weight. One shift per factor.
int total_degree(const BialgebraOracle& A, const Word& w);

// True and sets deg if all words share the same internal degree.
bool homogeneous_internal(const BialgebraOracle& A, const Tensor& t, int* deg);
bool homogeneous_total(const BialgebraOracle& A, const Tensor& t, int* deg);

// Grading involutions: term-wise (-1)^{degree}.
Tensor sigma_internal(const BialgebraOracle& A, const Tensor& t);
Tensor sigma_total(const BialgebraOracle& A, const Tensor& t);

// Product of same-weight words slotwise in the tensor-power algebra, with the
// Koszul sign from moving right-hand letters past left-hand letters.
Tensor slotwise_product(const BialgebraOracle& A, const Tensor& u, const Tensor& v);

// Plain concatenation u (x) v (no sign; no symbols cross).
Tensor concat(const Tensor& u, const Tensor& v);

// Slotwise differential with derivation prefix signs over internal degrees.
Tensor differential_slotwise(const BialgebraOracle& A, const Tensor& t);

// Iterated coproduct Delta^r : A -> A^{(x) r+1}, left-iterated; Delta^0 = id.
Tensor iterated_coproduct(const BialgebraOracle& A, const Tensor& t, int r);

// Shift dictionaries between unshifted tensor powers and words of shifted
// letters. "left" stacks the shifts from the left: the sign on a word with
// internal letter degrees d_1..d_n is (-1)^{sum (n-l) d_l}; "right" uses
// (-1)^{sum (l-1) d_l}. Both are involutions on coefficients.
Tensor shift_left(const BialgebraOracle& A, const Tensor& unshifted);
Tensor unshift_left(const BialgebraOracle& A, const Tensor& shifted);
Tensor shift_right(const BialgebraOracle& A, const Tensor& unshifted);
Tensor unshift_right(const BialgebraOracle& A, const Tensor& shifted);

// ---- Cosimplicial structure maps -------------------------------------------

// Face maps of the cosimplicial system k -> A -> A^{(x)2} -> ...:
// i = 0 prepends the unit, i = n+1 appends it, otherwise coproduct in slot i.
Tensor apply_face(const BialgebraOracle& A, const Tensor& t, int i);
// Degeneracy: counit in slot i (0-based), weight n -> n-1.
Tensor apply_degeneracy(const BialgebraOracle& A, const Tensor& t, int i);

// ---- Axiom checkers ----------------------------------------------------------

struct AxiomCheck {
    std::string id;
    bool pass = true;
    std::string witness;  // first counterexample, rendered
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;  // ordered by id
    bool all_pass() const;
    std::string str() const;
};

// Verifies, on all basis elements in the window: associativity, unitality,
// coassociativity, counit law, coproduct/counit multiplicative, d^2 = 0,
// Leibniz, co-Leibniz, and unit/counit compatibility.
AxiomReport check_bialgebra_axioms(const BialgebraOracle& A, const Window& w);

// Cosimplicial identities among faces and degeneracies up to level n_max on
// windowed basis words.
AxiomReport simplicial_identities_check(const BialgebraOracle& A, int n_max, const Window& w);

}  // namespace homchar
