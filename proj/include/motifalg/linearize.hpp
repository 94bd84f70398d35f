#pragma once

#include <map>
#include <vector>

#include "motifalg/motif.hpp"

namespace motifalg {

enum class PolynomialBasis { monomial, binomial };

// Polynomial in induced-subgraph counting variables. A monomial term with
// exponent vector e is prod #var_i^e_i; a binomial term is
// prod binom(#var_i, e_i).
struct CountPolynomial {
    PolynomialBasis basis = PolynomialBasis::monomial;
    ParamKind kind;
    std::vector<CanonicalKey> variables;
    std::map<std::vector<int>, Rational> terms;
};

// prod indsub(a_i, .) as the unique linear combination: the coefficient of
// a candidate class b counts tuples of pattern occurrences in b whose
// vertex sets jointly cover V(b). Coefficients are nonnegative integers.
MotifParameter linearize_product(const std::vector<CanonicalKey>& patterns,
                                 const Caps& caps = default_caps());

// binom(indsub(a, .), k): k-sets of distinct occurrences covering V(b).
MotifParameter linearize_binomial(const CanonicalKey& pattern, int k,
                                  const Caps& caps = default_caps());

MotifParameter linearize_polynomial(const CountPolynomial& p, const Caps& caps = default_caps());

// Product of motif parameters, linearized term by term.
MotifParameter motif_product(const MotifParameter& a, const MotifParameter& b,
                             const Caps& caps = default_caps());

// Direct polynomial value on a target; the oracle side of the equivalence
// tests.
Rational evaluate_polynomial(const CountPolynomial& p, const Graph& g,
                             const Caps& caps = default_caps());
Rational evaluate_polynomial(const CountPolynomial& p, const OrderedGraph& g,
                             const Caps& caps = default_caps());

// Alternative route: evaluate the polynomial on every candidate class and
// invert the triangular evaluation system. Independent of the covering
// enumeration; kept as a cross-check.
MotifParameter linearize_polynomial_by_solve(const CountPolynomial& p,
                                             const Caps& caps = default_caps());
MotifParameter linearize_product_by_solve(const std::vector<CanonicalKey>& patterns,
                                          const Caps& caps = default_caps());

} // namespace motifalg
