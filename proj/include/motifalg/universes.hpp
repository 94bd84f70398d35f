#pragma once

#include <map>
#include <vector>

#include "motifalg/rational.hpp"

namespace motifalg {

// Subspace of F_p^d held as a reduced row-echelon basis, the unique
// representative per subspace.
struct VecSpace {
    int p = 2;
    int ambient_dim = 0;
    std::vector<std::vector<int>> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

void validate(const VecSpace& v);

// Row-reduce arbitrary spanning vectors into the canonical echelon basis.
std::vector<std::vector<int>> rref(std::vector<std::vector<int>> rows, int p);

// Count of k-dimensional subspaces of an n-dimensional space over F_p,
// by the product formula.
BigInt gaussian_binomial(int n, int k, int p);

// Oracle for the formula: explicitly enumerates every reduced echelon
// basis with k pivots among d columns. Guarded by p^d <= 4096.
BigInt count_subspaces_bruteforce(int d, int k, int p);

// Enumerated echelon bases themselves (test hook for the oracle).
std::vector<std::vector<std::vector<int>>> enumerate_echelon_bases(int d, int k, int p);

// Partitions of {1..n} into m nonempty blocks with 1..r in distinct
// blocks. Out-of-range arguments give 0.
BigInt r_stirling(int n, int m, int r);

// Subset of A^N spanned by a base point and disjoint coordinate classes.
struct ParamSet {
    int alphabet_size = 2;
    int N = 0;
    std::vector<int> base;
    std::vector<std::vector<int>> classes;

    int params() const { return static_cast<int>(classes.size()); }
};

void validate(const ParamSet& x);

// All points of the parameter set, sorted.
std::vector<std::vector<int>> points(const ParamSet& x);

enum class CountMode { formula, bruteforce };

// Number of m-parameter subsets of x. Formula mode evaluates the
// |A|-Stirling closed form; bruteforce enumerates candidate parameter sets
// of the ambient space extensionally and filters by containment.
BigInt count_param_subsets(const ParamSet& x, int m, CountMode mode);

// Sum over k of coeff_k times the count of k-dimensional subspaces /
// k-parameter subsets of the target.
Rational evaluate_universe_motif(const std::map<int, Rational>& coefficients, const VecSpace& target);
Rational evaluate_universe_motif(const std::map<int, Rational>& coefficients, const ParamSet& target);

} // namespace motifalg
