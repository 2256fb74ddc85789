#include "jbt/truncation.hpp"

#include <cmath>

namespace jbt {

namespace {

double cubic_scale(const Element& a, const Element& b) {
  double na = triple_norm(a);
  double nb = triple_norm(b);
  return std::max(1.0, na * na * std::max(na, nb));
}

}  // namespace

bool is_truncation(const Element& a, const Element& b, const Tolerance& tol) {
  if (a.factor != b.factor) throw error("is_truncation: factor mismatch");
  Element lhs = cube(a);
  Element rhs = q_apply(a, b);
  return max_abs(sub(lhs, rhs).payload) <= tol.eq_tol * cubic_scale(a, b);
}

bool is_truncation(const SumElement& a, const SumElement& b,
                   const Tolerance& tol) {
  if (!same_descriptor(a.descriptor(), b.descriptor()))
    throw error("is_truncation: sum descriptors differ");
  for (std::size_t i = 0; i < a.parts.size(); ++i)
    if (!is_truncation(a.parts[i], b.parts[i], tol)) return false;
  return true;
}

TruncationChecks truncation_characterizations(const Element& a,
                                              const Element& b,
                                              const Tolerance& tol) {
  TruncationChecks c{};
  c.by_definition = is_truncation(a, b, tol);
  c.by_decomposition = inner_q_annihilator_membership(sub(b, a), a, tol);
  Element r = range_tripotent(a, tol);
  Element p2b = peirce2_apply(r, b);
  c.by_peirce =
      max_abs(sub(p2b, a).payload) <=
      tol.eq_tol * std::max(1.0, std::max(triple_norm(a), triple_norm(b)));
  return c;
}

void require_consistent(const TruncationChecks& c) {
  if (!c.consistent())
    throw error("truncation characterizations disagree: definition=" +
                std::to_string(c.by_definition) +
                " decomposition=" + std::to_string(c.by_decomposition) +
                " peirce=" + std::to_string(c.by_peirce));
}

bool inner_q_annihilator_membership(const Element& z, const Element& a,
                                    const Tolerance& tol) {
  double na = triple_norm(a);
  double scale = std::max(1.0, na * na * std::max(1.0, triple_norm(z)));
  return max_abs(q_apply(a, z).payload) <= tol.eq_tol * scale;
}

bool outer_q_annihilator_membership(const Element& z,
                                    const std::vector<Element>& s,
                                    const Tolerance& tol) {
  double nz = triple_norm(z);
  for (const auto& x : s) {
    double scale = std::max(1.0, nz * nz * std::max(1.0, triple_norm(x)));
    if (max_abs(q_apply(z, x).payload) > tol.eq_tol * scale) return false;
  }
  return true;
}

bool annihilator_element_formula_check(const Element& a,
                                       const Tolerance& tol) {
  Element r = range_tripotent(a, tol);
  for (const auto& x : factor_basis(a.factor)) {
    bool in_ann = inner_q_annihilator_membership(x, a, tol);
    bool killed = is_zero(peirce2_apply(r, x), tol);
    if (in_ann != killed) return false;
  }
  return true;
}

cxd PureAtom::value(const Element& x) const {
  Element p2x = peirce2_apply(e, x);
  return inner(p2x, e) / inner(e, e);
}

PureAtom pure_atom(const Element& e, const Tolerance& tol) {
  if (!is_minimal_tripotent(e, tol))
    throw error("pure_atom: input must be a minimal tripotent");
  return PureAtom{e};
}

cxd ttp(const Element& e, const Element& v, const Tolerance& tol) {
  if (e.factor != v.factor) throw error("ttp: factor mismatch");
  if (!is_minimal_tripotent(e, tol))
    throw error("ttp: first argument must be a minimal tripotent");
  return pure_atom(v, tol).value(e);
}

bool truncation_of_triple_product(const Element& a, const Element& b,
                                  const Element& c, const Tolerance& tol) {
  return is_truncation(a, q_apply(b, c), tol);
}

bool truncation_of_triple_product(const SumElement& a, const SumElement& b,
                                  const SumElement& c, const Tolerance& tol) {
  return is_truncation(a, q_apply(b, c), tol);
}

}  // namespace jbt
