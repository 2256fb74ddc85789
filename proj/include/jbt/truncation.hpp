#pragma once

#include "jbt/spectral.hpp"

namespace jbt {

/// a is a truncation of b: {a,a,a} = {a,b,a}.
bool is_truncation(const Element& a, const Element& b,
                   const Tolerance& tol = {});
/// Componentwise on aligned sums.
bool is_truncation(const SumElement& a, const SumElement& b,
                   const Tolerance& tol = {});

/// The three equivalent readings of "a is a truncation of b":
///   by_definition     {a,a,a} = {a,b,a}
///   by_decomposition  b - a lies in the inner quadratic annihilator of a
///   by_peirce         a = P2(r(a))(b)
/// They must agree; require_consistent raises an inconsistency error if not.
struct TruncationChecks {
  bool by_definition;
  bool by_decomposition;
  bool by_peirce;

  bool consistent() const {
    return by_definition == by_decomposition &&
           by_decomposition == by_peirce;
  }
  bool holds() const { return by_definition; }
};
TruncationChecks truncation_characterizations(const Element& a,
                                              const Element& b,
                                              const Tolerance& tol = {});
void require_consistent(const TruncationChecks& c);

/// z lies in the inner quadratic annihilator of a: Q(a)(z) = 0.
bool inner_q_annihilator_membership(const Element& z, const Element& a,
                                    const Tolerance& tol = {});
/// z lies in the outer quadratic annihilator of the set S: Q(z)(s) = 0
/// for every s in S.
bool outer_q_annihilator_membership(const Element& z,
                                    const std::vector<Element>& s,
                                    const Tolerance& tol = {});

/// The single-element annihilator description: Q(a)(x) = 0 iff
/// P2(r(a))(x) = 0, checked over a spanning set of the factor.
bool annihilator_element_formula_check(const Element& a,
                                       const Tolerance& tol = {});

/// Pure atom of a minimal tripotent e: the functional phi_e with
/// P2(e)(x) = phi_e(x) e. Construction rejects non-minimal input.
struct PureAtom {
  Element e;

  cxd value(const Element& x) const;
};
PureAtom pure_atom(const Element& e, const Tolerance& tol = {});

/// Triple transition pseudo-probability between minimal tripotents:
/// ttp(e, v) = phi_v(e). Rejects non-minimal inputs.
cxd ttp(const Element& e, const Element& v, const Tolerance& tol = {});

/// a is a truncation of the triple product Q(b)(c) = {b,c,b}.
bool truncation_of_triple_product(const Element& a, const Element& b,
                                  const Element& c, const Tolerance& tol = {});
bool truncation_of_triple_product(const SumElement& a, const SumElement& b,
                                  const SumElement& c,
                                  const Tolerance& tol = {});

}  // namespace jbt
