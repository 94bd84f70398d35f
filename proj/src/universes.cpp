#include "motifalg/universes.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace motifalg {

namespace {

bool is_prime(int p) {
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

BigInt ipow(int base, int exp) {
    BigInt out = 1;
    for (int i = 0; i < exp; ++i)
        out *= base;
    return out;
}

} // namespace

std::vector<std::vector<int>> rref(std::vector<std::vector<int>> rows, int p) {
    if (rows.empty())
        return rows;
    int cols = static_cast<int>(rows[0].size());
    auto inv_mod = [&](int a) {
        for (int x = 1; x < p; ++x)
            if (a * x % p == 1)
                return x;
        throw InvalidRange("not invertible mod p");
    };
    int rank = 0;
    for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] % p != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(rows[rank], rows[pivot]);
        int inv = inv_mod(rows[rank][col] % p);
        for (int& x : rows[rank])
            x = x * inv % p;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] % p == 0)
                continue;
            int factor = rows[r][col] % p;
            for (int c = 0; c < cols; ++c)
                rows[r][c] = ((rows[r][c] - factor * rows[rank][c]) % p + p * p) % p;
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

void validate(const VecSpace& v) {
    if (!is_prime(v.p))
        throw InvalidRange("field order " + std::to_string(v.p) + " is not prime");
    if (v.ambient_dim < 0)
        throw InvalidRange("negative ambient dimension");
    for (const auto& row : v.basis) {
        if (static_cast<int>(row.size()) != v.ambient_dim)
            throw InvalidRange("basis vector length does not match ambient dimension");
        for (int x : row)
            if (x < 0 || x >= v.p)
                throw InvalidRange("basis entry outside F_p");
    }
    if (rref(v.basis, v.p) != v.basis)
        throw InvalidRange("basis is not in reduced row-echelon form");
}

BigInt gaussian_binomial(int n, int k, int p) {
    if (p < 2)
        throw InvalidRange("gaussian binomial needs p >= 2");
    if (k < 0 || k > n)
        throw InvalidRange("gaussian binomial needs 0 <= k <= n");
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= ipow(p, n - i) - 1;
        den *= ipow(p, i + 1) - 1;
    }
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw DivisionInexact("gaussian binomial product not exact");
    return q;
}

std::vector<std::vector<std::vector<int>>> enumerate_echelon_bases(int d, int k, int p) {
    std::vector<std::vector<std::vector<int>>> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    if (k > d)
        return out;
    std::vector<int> pivots;
    auto fill_free = [&](auto&& self, std::vector<std::vector<int>>& rows, int row, int col) -> void {
        // advance over the free positions row by row
        if (row == k) {
            out.push_back(rows);
            return;
        }
        if (col == d) {
            self(self, rows, row + 1, 0);
            return;
        }
        bool is_pivot_col = std::find(pivots.begin(), pivots.end(), col) != pivots.end();
        if (col <= pivots[row] || is_pivot_col) {
            self(self, rows, row, col + 1);
            return;
        }
        for (int value = 0; value < p; ++value) {
            rows[row][col] = value;
            self(self, rows, row, col + 1);
        }
        rows[row][col] = 0;
    };
    auto choose = [&](auto&& self, int next) -> void {
        if (static_cast<int>(pivots.size()) == k) {
            std::vector<std::vector<int>> rows(k, std::vector<int>(d, 0));
            for (int r = 0; r < k; ++r)
                rows[r][pivots[r]] = 1;
            fill_free(fill_free, rows, 0, 0);
            return;
        }
        for (int col = next; col < d; ++col) {
            pivots.push_back(col);
            self(self, col + 1);
            pivots.pop_back();
        }
    };
    choose(choose, 0);
    return out;
}

BigInt count_subspaces_bruteforce(int d, int k, int p) {
    if (!is_prime(p))
        throw InvalidRange("field order must be prime");
    if (k < 0 || k > d)
        throw InvalidRange("need 0 <= k <= d");
    if (ipow(p, d) > 4096)
        throw CapExceeded("p^d exceeds the desk-scale guard 4096");
    return BigInt(static_cast<long>(enumerate_echelon_bases(d, k, p).size()));
}

BigInt r_stirling(int n, int m, int r) {
    if (n < 0 || m < 0 || r < 0)
        throw InvalidRange("r-Stirling arguments must be nonnegative");
    if (n < r || m < r || m > n)
        return 0;
    // dp over n' = r..n for all m' in r..min(n', m)
    std::vector<BigInt> row(m + 1, 0);
    row[r] = 1;
    for (int cur = r + 1; cur <= n; ++cur) {
        std::vector<BigInt> next(m + 1, 0);
        for (int blocks = r; blocks <= std::min(cur, m); ++blocks) {
            next[blocks] = blocks * row[blocks];
            if (blocks > 0)
                next[blocks] += row[blocks - 1];
        }
        row = std::move(next);
    }
    return row[m];
}

void validate(const ParamSet& x) {
    if (x.alphabet_size < 2)
        throw InvalidRange("alphabet needs at least two symbols");
    if (x.N < 0)
        throw InvalidRange("negative ambient length");
    if (static_cast<int>(x.base.size()) != x.N)
        throw InvalidRange("base point length does not match N");
    for (int v : x.base)
        if (v < 0 || v >= x.alphabet_size)
            throw InvalidRange("base point entry outside alphabet");
    std::vector<char> seen(x.N, 0);
    for (const auto& cls : x.classes) {
        if (cls.empty())
            throw InvalidRange("parameter class must be nonempty");
        for (int c : cls) {
            if (c < 0 || c >= x.N)
                throw InvalidRange("class coordinate out of range");
            if (seen[c])
                throw InvalidRange("parameter classes must be disjoint");
            seen[c] = 1;
        }
    }
}

std::vector<std::vector<int>> points(const ParamSet& x) {
    validate(x);
    int n = x.params();
    std::vector<std::vector<int>> out;
    std::vector<int> assignment(n, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            std::vector<int> point = x.base;
            for (int j = 0; j < n; ++j)
                for (int c : x.classes[j])
                    point[c] = assignment[j];
            out.push_back(std::move(point));
            return;
        }
        for (int v = 0; v < x.alphabet_size; ++v) {
            assignment[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BigInt count_param_subsets(const ParamSet& x, int m, CountMode mode) {
    validate(x);
    if (m < 0)
        throw InvalidRange("negative parameter count");
    int n = x.params();
    if (mode == CountMode::formula)
        return r_stirling(x.alphabet_size + n, x.alphabet_size + m, x.alphabet_size);

    if (ipow(x.alphabet_size, x.N) > 4096)
        throw CapExceeded("|A|^N exceeds the desk-scale guard 4096");
    if (ipow(m + 1, x.N) > 65536)
        throw CapExceeded("(m+1)^N exceeds the desk-scale guard");
    if (m > n)
        return 0;

    auto xun = points(x);
    std::set<std::vector<int>> xset(xun.begin(), xun.end());

    // extensional enumeration over the whole ambient space: every way to
    // mark coordinates as fixed or as one of m classes, times base points
    std::set<std::vector<std::vector<int>>> found;
    std::vector<int> label(x.N, 0); // 0 = fixed, 1..m = class index
    auto rec = [&](auto&& self, int coord) -> void {
        if (coord == x.N) {
            for (int cls = 1; cls <= m; ++cls)
                if (std::find(label.begin(), label.end(), cls) == label.end())
                    return;
            ParamSet candidate;
            candidate.alphabet_size = x.alphabet_size;
            candidate.N = x.N;
            candidate.classes.assign(m, {});
            for (int c = 0; c < x.N; ++c)
                if (label[c] > 0)
                    candidate.classes[label[c] - 1].push_back(c);
            std::vector<int> base(x.N, 0);
            auto bases = [&](auto&& self2, int c) -> void {
                if (c == x.N) {
                    candidate.base = base;
                    auto pts = points(candidate);
                    bool inside = std::all_of(pts.begin(), pts.end(), [&](const std::vector<int>& pt) {
                        return xset.count(pt) != 0;
                    });
                    if (inside)
                        found.insert(pts);
                    return;
                }
                for (int v = 0; v < x.alphabet_size; ++v) {
                    base[c] = v;
                    self2(self2, c + 1);
                }
            };
            bases(bases, 0);
            return;
        }
        for (int l = 0; l <= m; ++l) {
            label[coord] = l;
            self(self, coord + 1);
        }
    };
    rec(rec, 0);
    return BigInt(static_cast<long>(found.size()));
}

Rational evaluate_universe_motif(const std::map<int, Rational>& coefficients, const VecSpace& target) {
    validate(target);
    Rational total = 0;
    for (const auto& [k, coeff] : coefficients) {
        if (k < 0 || k > target.dim())
            continue;
        total += coeff * Rational(gaussian_binomial(target.dim(), k, target.p));
    }
    return total;
}

Rational evaluate_universe_motif(const std::map<int, Rational>& coefficients, const ParamSet& target) {
    validate(target);
    Rational total = 0;
    for (const auto& [m, coeff] : coefficients) {
        if (m < 0)
            continue;
        total += coeff * Rational(r_stirling(target.alphabet_size + target.params(),
                                             target.alphabet_size + m, target.alphabet_size));
    }
    return total;
}

} // namespace motifalg
