#pragma once
// Independent slow oracles used only by the tests. These deliberately avoid
// the library's own elimination routines: invariant factors come from minor
// gcds, signatures from Descartes' rule on the characteristic polynomial, and
// the Arf invariant from a full Gauss sum over the mod-2 vector space.
#include "lchain/intmat.hpp"

#include <vector>

namespace lchain::oracle {

inline Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// all k-subsets of {0..n-1}
inline std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    if (k > n) return out;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

// invariant factors via gcds of k x k minors: d_k = g_k / g_{k-1}
inline IntVec invariant_factors_by_minors(const IntMatrix& m) {
    int n = std::min(m.rows(), m.cols());
    IntVec out;
    Int prev = 1;
    for (int k = 1; k <= n; ++k) {
        Int g = 0;
        for (const auto& ri : subsets(m.rows(), k))
            for (const auto& ci : subsets(m.cols(), k)) {
                IntMatrix sub(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
                g = gcd_int(g, sub.determinant());
                }
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

// characteristic polynomial coefficients by Faddeev-LeVerrier: p(x) =
// x^n + c[0] x^{n-1} + ... + c[n-1]; all divisions are exact over Z
inline IntVec char_poly(const IntMatrix& a) {
    int n = a.rows();
    IntVec c(n);
    IntMatrix m = a;
    for (int k = 1; k <= n; ++k) {
        Int tr = 0;
        for (int i = 0; i < n; ++i) tr += m.at(i, i);
        c[k - 1] = -tr / k;
        if (k < n) {
            IntMatrix shifted = m;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += c[k - 1];
            m = a * shifted;
        }
    }
    return c;
}

inline int sign_changes(const IntVec& coeffs) {
    int changes = 0, last = 0;
    for (const auto& x : coeffs) {
        if (x == 0) continue;
        int s = x > 0 ? 1 : -1;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// signature of a symmetric integer matrix: all eigenvalues are real, so
// Descartes' rule counts them exactly from the characteristic polynomial
inline int signature_by_charpoly(const IntMatrix& a) {
    int n = a.rows();
    IntVec c = char_poly(a);
    IntVec pos(n + 1), neg(n + 1);
    pos[0] = 1;
    neg[0] = 1;
    for (int k = 1; k <= n; ++k) {
        pos[k] = c[k - 1];
        neg[k] = (k % 2 == 0) ? c[k - 1] : -c[k - 1]; // p(-x) up to overall sign
    }
    return sign_changes(pos) - sign_changes(neg);
}

// signature by Jacobi's rule from leading principal minors; valid when all of
// them are nonzero (true for the definite fixtures this is used on)
inline int signature_by_leading_minors(const IntMatrix& a) {
    int n = a.rows(), sig = 0;
    Int prev = 1;
    for (int k = 1; k <= n; ++k) {
        Int d = a.block(0, 0, k, k).determinant();
        if (d == 0) throw std::invalid_argument("leading minor vanishes");
        sig += (prev > 0) == (d > 0) ? 1 : -1;
        prev = d;
    }
    return sig;
}

// Arf invariant by Gauss sum: q(v) = v^T psi v mod 2 over all mod-2 vectors;
// the sum of (-1)^q is +2^{r/2} for Arf 0 and -2^{r/2} for Arf 1
inline int arf_by_gauss_sum(const IntMatrix& psi) {
    int r = psi.rows();
    long long sum = 0;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        Int q = 0;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if ((mask >> i & 1) && (mask >> j & 1)) q += psi.at(i, j);
        sum += (q % 2 == 0) ? 1 : -1;
    }
    if (sum == 0) throw std::invalid_argument("degenerate quadratic form");
    return sum > 0 ? 0 : 1;
}

} // namespace lchain::oracle
