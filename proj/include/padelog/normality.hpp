#ifndef PADELOG_NORMALITY_HPP
#define PADELOG_NORMALITY_HPP

#include <numeric>
#include <stdexcept>
#include <vector>

#include "padelog/linalg.hpp"
#include "padelog/pade_binlog.hpp"
#include "padelog/polynomial.hpp"
#include "padelog/rational.hpp"
#include "padelog/series.hpp"

namespace padelog {

// Generalized Hankel matrix H_{rows-1, n}(f): block per series j with n_j + 1
// shifted-coefficient columns, entry (row, c) = f_{j, row - c}.
inline Matrix hankel_build(const std::vector<TruncSeries>& fs, const std::vector<int>& nvec,
                           int rows) {
    if (fs.size() != nvec.size()) throw std::invalid_argument("hankel_build: size mismatch");
    int N = 0;
    for (int nj : nvec) N += nj + 1;
    for (const auto& f : fs)
        if (f.trunc_order() < rows - 1)
            throw InconclusiveTruncation("hankel_build: series truncation below row count");
    Matrix H = make_matrix(rows, N);
    int col0 = 0;
    for (size_t j = 0; j < fs.size(); ++j) {
        for (int c = 0; c <= nvec[j]; ++c)
            for (int row = c; row < rows; ++row) H[row][col0 + c] = fs[j][row - c];
        col0 += nvec[j] + 1;
    }
    return H;
}

/// Normality of index nvec for fs: the square matrix H_{N-1, n} is invertible.
inline bool normality_test(const std::vector<TruncSeries>& fs, const std::vector<int>& nvec) {
    int N = 0;
    for (int nj : nvec) N += nj + 1;
    Matrix H = hankel_build(fs, nvec, N);
    return determinant(std::move(H)) != 0;
}

/// Kernel vector -> approximant tuple, following the column layout of hankel_build.
inline std::vector<Poly> kernel_to_polys(const std::vector<Rat>& v, const std::vector<int>& nvec) {
    std::vector<Poly> out;
    size_t pos = 0;
    for (int nj : nvec) {
        std::vector<Rat> c(v.begin() + pos, v.begin() + pos + nj + 1);
        out.emplace_back(std::move(c));
        pos += nj + 1;
    }
    return out;
}

struct DeterminantCertificate {
    Rat gamma;
    int exponent = 0;
    bool monomial_ok = false;
};

namespace detail {

inline Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly acc;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (size_t jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][j] * poly_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace detail

// Delta(z) = det(P_{k,(i,j)}(z)) over all columns k; certified to be a
// nonzero multiple of z^{(n+1) sum r}.
inline DeterminantCertificate delta_certificate(const PadeSystem& sys) {
    int total = std::accumulate(sys.rs.begin(), sys.rs.end(), 0);
    if (static_cast<int>(sys.columns.size()) != total)
        throw std::invalid_argument("delta_certificate: need all k columns");
    std::vector<std::vector<Poly>> m(total);
    for (int k = 0; k < total; ++k)
        for (const auto& row : sys.columns[k].P)
            for (const auto& p : row) m[k].push_back(p);
    Poly delta = detail::poly_det(m);
    DeterminantCertificate cert;
    cert.exponent = (sys.n + 1) * total;
    if (delta.degree() != cert.exponent) return cert;
    for (int d = 0; d < cert.exponent; ++d)
        if (delta[d] != 0) return cert;
    cert.gamma = delta[cert.exponent];
    cert.monomial_ok = cert.gamma != 0;
    return cert;
}

/// Exact determinant of the n x n matrix with entries 1/(i+j-1)^r.
inline Rat polylog_hankel_det(int r, int n) {
    if (r < 1 || n < 1) throw std::invalid_argument("polylog_hankel_det: r, n >= 1 required");
    Matrix H = make_matrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            H[i][j] = make_rat(Int(1), pow_int(Int(i + j + 1), static_cast<unsigned long>(r)));
    return determinant(std::move(H));
}

// ---------------------------------------------------------------------------
// Laurent-series Pade: f = sum_k f_k / z^{k+1}, approximants (P, Q) with
// deg P <= n and ord_inf(P f - Q) >= n+1. Kernel convention: the map
// H_{n,n}(f) has n rows and n+1 columns (entry (i,j) = f_{i+j}), matching the
// order condition coefficient-by-coefficient.

struct LaurentPade {
    Poly P;
    Poly Q;
    int order = 0;         // exact ord_inf(P f - Q), capped by available coefficients
    bool order_exactly_known = true;
    bool normal = false;   // det H_{n+1,n}(f) != 0
};

inline Poly laurent_Q_from_P(const Poly& P, const std::vector<Rat>& f) {
    // Q(z) = phi_f((P(z) - P(t)) / (z - t)) = sum_a z^a sum_{k > a} p_k f_{k-1-a}
    int deg = P.degree();
    if (deg < 1) return Poly();
    std::vector<Rat> q(deg, Rat(0));
    for (int a = 0; a < deg; ++a)
        for (int k = a + 1; k <= deg; ++k) q[a] += P[k] * f.at(k - 1 - a);
    return Poly(std::move(q));
}

inline LaurentPade laurent_pade(const std::vector<Rat>& f, int n) {
    if (static_cast<int>(f.size()) < 2 * n + 2)
        throw InconclusiveTruncation("laurent_pade: need at least 2n+2 Laurent coefficients");
    LaurentPade out;
    if (n == 0) {
        out.P = Poly::constant(Rat(1));
    } else {
        Matrix H = make_matrix(n, n + 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= n; ++j) H[i][j] = f[i + j];
        auto basis = kernel_basis(std::move(H));
        if (basis.empty())
            throw std::logic_error("laurent_pade: kernel of an n x (n+1) map is nonzero");
        out.P = Poly(basis.front());
    }
    out.Q = laurent_Q_from_P(out.P, f);

    // Coefficient of z^{-lambda-1} in P f - Q is sum_k p_k f_{lambda+k}.
    int max_lambda = static_cast<int>(f.size()) - 1 - out.P.degree();
    out.order = 0;
    out.order_exactly_known = false;
    for (int lambda = 0; lambda <= max_lambda; ++lambda) {
        Rat c(0);
        for (int k = 0; k <= out.P.degree(); ++k) c += out.P[k] * f[lambda + k];
        if (c != 0) {
            out.order = lambda + 1;
            out.order_exactly_known = true;
            break;
        }
        out.order = lambda + 2;
    }

    Matrix Hs = make_matrix(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) Hs[i][j] = f[i + j];
    out.normal = determinant(std::move(Hs)) != 0;
    return out;
}

/// Laurent coefficients of Li_r(1/z): f_k = 1/(k+1)^r.
inline std::vector<Rat> polylog_laurent_coeffs(int r, int count) {
    std::vector<Rat> f(count);
    for (int k = 0; k < count; ++k)
        f[k] = make_rat(Int(1), pow_int(Int(k + 1), static_cast<unsigned long>(r)));
    return f;
}

}  // namespace padelog

#endif
