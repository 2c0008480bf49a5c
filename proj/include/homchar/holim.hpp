#pragma once

#include "homchar/linalg.hpp"
#include "homchar/mc.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace homchar {

// Object of the homotopy-limit category: a certified Maurer-Cartan element
// whose first component carries invertibility evidence.
struct HolimObject {
    MaurerCartanElement mc;

    const CobarElement& twist() const { return mc.value; }
    friend bool operator==(const HolimObject& a, const HolimObject& b) {
        return a.mc.value == b.mc.value;
    }
};

// Morphism a -> b: an element of Cobar(A) carried by the twisted complex with
// the *target* twist acting on the left and the source twist on the right.
// That orientation is forced by composition-as-multiplication (g.f composes
// a->b->c) and is the one under which the weight-1 cycle facts of the
// rank-one character example hold.
struct HolimMorphism {
    HolimObject source;
    HolimObject target;
    CobarElement value;
};

HolimObject character_from_grouplike(OraclePtr A, int N, const Tensor& g);
HolimObject distinguished_object(OraclePtr A, int N);  // the unit character

HolimMorphism identity_morphism(const HolimObject& a);

// d(f) = cobar_diff(f) + b.f - sigma(f).a for f: a -> b.
HolimMorphism hom_diff(const HolimMorphism& f);

// Componentwise indexed evaluation of the same differential, reconciled to
// the derivation route (see mc.cpp for the convention):
//   D(f)_n = (-1)^n d_slot(f_n)
//          + sum_{j=1}^{n-1} (-1)^j (id^{j-1} (x) Delta (x) id^{n-1-j})(f_{n-1})
//          + sum_{k=1}^{n} (-1)^{n(k+1)} b_k (x) f_{n-k}
//          - sum_{k=1}^{n} (-1)^{m(k+1)+k(n+1)} f_{n-k} (x) a_k
// on unshifted components of a degree-m homogeneous morphism.
Tensor hom_diff_indexed(const BialgebraOracle& A, const std::map<int, Tensor>& f_comps, int m,
                        const std::map<int, Tensor>& a_comps,
                        const std::map<int, Tensor>& b_comps, int n);

// Composition is multiplication in Cobar(A); strictly associative and unital.
HolimMorphism compose(const HolimMorphism& g, const HolimMorphism& f);

// Indexed composition formula (g of degree m_g):
//   (g o f)_n = sum_{k=0}^n (-1)^{(n-k)(m_g+k)} g_k (x) f_{n-k}
Tensor compose_indexed(const BialgebraOracle& A, const std::map<int, Tensor>& g_comps, int m_g,
                       const std::map<int, Tensor>& f_comps, int n);

// Finite slice of a Hom complex: all words over the windowed letter set, of
// the given total degree, in weights <= weight_cap.
struct HomCohomologyWindow {
    HolimObject source;
    HolimObject target;
    int degree = 0;
    int weight_cap = 2;
    Window letters;
};

struct HomCohomologyReport {
    int degree = 0;
    size_t window_dim = 0;          // dimension of the degree slice in the window
    size_t kernel_dim = 0;          // cycles inside the window (exact kernel)
    size_t image_dim = 0;           // boundaries of the windowed previous slice
    size_t image_in_kernel_dim = 0; // part of the image meeting the kernel
    long cohomology_dim = 0;        // kernel_dim - image_in_kernel_dim (windowed)
    bool window_closed = false;     // d(window) stays inside the next window slice
    std::vector<Tensor> representatives;  // kernel vectors not in the image span
    std::string str() const;
};

// Assembles the exact matrix of hom_diff on the windowed basis and reports
// kernel/image data. All dimensions are relative to the window and labeled as
// such; kernel membership is exact (images are computed without clipping).
HomCohomologyReport hom_cohomology(const HomCohomologyWindow& win);

}  // namespace homchar
