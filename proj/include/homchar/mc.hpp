#pragma once

#include "homchar/cobar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace homchar {

// Truncated homotopy character: a Maurer-Cartan candidate of Cobar(A). All
// words must have odd total degree (the strictly graded case, component at
// weight i of internal degree 1-i, is the homogeneous-degree-1 special case;
// oddness is what the twisting calculus actually needs and is preserved by
// the gauge action below). Weight-0 components are not allowed.
struct MaurerCartanElement {
    enum class Evidence { kNone, kGrouplike, kUnitScalar };

    CobarElement value;
    Evidence first_component_evidence = Evidence::kNone;

    static MaurerCartanElement zero(OraclePtr A, int N);
    // from a grouplike algebra element (verified: d g = 0, Delta g = g(x)g,
    // eps g = 1); throws on failure
    static MaurerCartanElement from_grouplike(OraclePtr A, int N, const Tensor& g);
};

struct McReport {
    bool is_mc = false;                  // intrinsic residual vanishes (weights <= N)
    std::map<int, Tensor> residual;      // nonzero intrinsic residuals per weight (shifted words)
    bool routes_agree = false;           // componentwise indexed evaluation matches
    int first_route_mismatch = -1;       // weight, when routes_agree is false
    std::string str() const;
};

// Maurer-Cartan check, evaluated two independent ways: the intrinsic residual
// cobar_diff(a) + cobar_mul(a,a), and the componentwise indexed form
//   R_n = (-1)^n d_slot(a_n) + sum_j (-1)^j (id^{j-1} (x) Delta (x) id^{n-1-j})(a_{n-1})
//       + sum_k (-1)^{nk} a_{n-k} (x) a_k
// on unshifted components (valid for odd inputs). Any discrepancy between the
// two evaluations is reported with the first differing weight.
McReport mc_check(const MaurerCartanElement& a);

// Indexed residual route by itself, on unshifted weight components.
Tensor mc_residual_indexed(const BialgebraOracle& A,
                           const std::map<int, Tensor>& unshifted_components, int n);

// Gauge action f.a = f a f^{-1} + f d(f^{-1}) of an invertible even element.
// Preconditions: nonzero scalar part (invertibility in the truncation) and
// evenness (odd gauge parts do not preserve the Maurer-Cartan equation).
// Throws std::invalid_argument otherwise.
MaurerCartanElement gauge_act(const CobarElement& f, const MaurerCartanElement& a);

struct GaugeWitness {
    CobarElement morphism;       // f viewed in Hom(f.a, a)
    CobarElement inverse;        // two-sided inverse under cobar_mul
    bool closed = false;         // twisted_diff(f; f.a, a) == 0
    bool invertible = false;     // f * inverse == inverse * f == 1
    MaurerCartanElement gauged;  // f.a
};

// The gauge element itself, viewed as a degree-0 morphism f.a -> a of the
// homotopy-limit category, with closedness and invertibility certified.
GaugeWitness gauge_isomorphism_witness(const CobarElement& f, const MaurerCartanElement& a);

// Morphism data between twisted forms of Cobar(A) with zero curvature: the
// underlying map is the identity and the change-of-curvature element is a
// degree-1 (odd) element.
struct CdgMorphismData {
    MaurerCartanElement source_twist;  // differential d + [a,-]
    MaurerCartanElement target_twist;  // differential d + [b,-]
    CobarElement change;               // the element entering d(x) |-> d(x) + [change, x]
};

struct CdgReport {
    bool curve_holds = false;    // d_src(x) = d_tgt(x) + [change, x] on the sample
    bool curve2_holds = false;   // 0 = d_tgt(change) + change^2
    std::string witness;
    std::string str() const;
};

// Checks the two defining identities on a sample of elements (the windowed
// spanning words of weights <= N), plus the composition law with a second
// pair when requested by the caller.
CdgReport cdg_morphism_check(const CdgMorphismData& data,
                             const std::vector<CobarElement>& sample);

// change element that makes (id, change): (d+[a,-]) -> (d+[b,-]) a morphism
CobarElement cdg_change_element(const MaurerCartanElement& a, const MaurerCartanElement& b);

}  // namespace homchar
