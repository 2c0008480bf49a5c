#pragma once

#include "homchar/graded.hpp"

#include <map>
#include <optional>
#include <string>

namespace homchar {

// Weight-truncated element of the completed tensor algebra on A[-1]. Stored
// words are words of shifted letters: the word [x1|...|xn] denotes
// s(x1) (x) ... (x) s(xn) and has total degree (sum of internal degrees) + n.
// Everything of weight > N is discarded; truncation is a DG-algebra quotient
// because the differential raises weight by at most one and the product adds
// weights.
class CobarElement {
public:
    CobarElement() = default;
    CobarElement(OraclePtr A, int truncation) : A_(std::move(A)), N_(truncation) {}
    CobarElement(OraclePtr A, int truncation, Tensor value);

    static CobarElement scalar(OraclePtr A, int truncation, const Rational& c);
    // weight-1 element from an algebra element (weight-1 tensor)
    static CobarElement letter(OraclePtr A, int truncation, const Tensor& algebra_elt);

    const OraclePtr& oracle() const { return A_; }
    int truncation() const { return N_; }
    const Tensor& value() const { return val_; }
    Tensor component(int weight) const { return val_.filter_weight(weight); }
    Rational scalar_part() const { return val_.coeff(Word()); }
    bool is_zero() const { return val_.is_zero(); }

    void add(const Word& w, const Rational& c);
    CobarElement& operator+=(const CobarElement& o);
    CobarElement& operator-=(const CobarElement& o);
    CobarElement& scale(const Rational& c);
    friend CobarElement operator+(CobarElement a, const CobarElement& b) { return a += b; }
    friend CobarElement operator-(CobarElement a, const CobarElement& b) { return a -= b; }
    friend bool operator==(const CobarElement& a, const CobarElement& b) {
        return a.N_ == b.N_ && a.val_ == b.val_;
    }

    // Per-word parity involution by total degree.
    CobarElement sigma() const;
    bool homogeneous(int* total_deg) const;
    // all words of odd/even total degree
    bool is_odd() const;
    bool is_even() const;

    CobarElement truncated(int M) const;
    std::string str() const;

private:
    OraclePtr A_;
    int N_ = 0;
    Tensor val_;
};

// Differential of Cobar(A): on a generator s(x),
//   d(s x) = -s(d_A x) - sum (-1)^{|x_(1)|} s(x_(1)) (x) s(x_(2)),
// extended as a degree +1 derivation over total degrees. Squares to zero;
// grouplike letters g satisfy d(s g) + (s g)^2 = 0.
CobarElement cobar_diff(const CobarElement& x);

// Coaugmented variant: the plain differential twisted by the unit, i.e.
// d(x) + [1].x - sigma(x).[1]. Vanishes on the empty word.
CobarElement cobar_coaug_diff(const CobarElement& x);

// Multiplication of the (truncated) complete tensor algebra: weightwise
// concatenation, weight additive, unit = empty word.
CobarElement cobar_mul(const CobarElement& x, const CobarElement& y);

// d(x) + c1.x - sigma(x).c2 for odd Maurer-Cartan twists c1, c2. Squares to
// zero whenever both twists satisfy the Maurer-Cartan equation.
CobarElement twisted_diff(const CobarElement& x, const CobarElement& left_twist,
                          const CobarElement& right_twist);

// Inverse of an element with nonzero scalar part, by the geometric series
// (finite in the truncation). Exact in the quotient: x * inverse(x) == 1.
std::optional<CobarElement> cobar_inverse(const CobarElement& x);

}  // namespace homchar
