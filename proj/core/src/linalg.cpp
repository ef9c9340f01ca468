#include "singeq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace singeq {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

using Column = std::vector<Complex>;

double cabs1(Complex z) noexcept
{
    return std::abs(z.real()) + std::abs(z.imag());
}

Complex inner(const Column& x, const Column& y) noexcept
{
    Complex acc{};
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

double squared_norm(const Column& x) noexcept
{
    double acc = 0.0;
    for (const Complex& v : x) {
        acc += std::norm(v);
    }
    return acc;
}

/// Rotates the pair (p, q) by J = [[c, s e^{iφ}], [−s e^{−iφ}, c]].
void rotate_columns(Column& p, Column& q, double c, double s, Complex phase) noexcept
{
    const Complex sp = s * phase;
    const Complex sp_conj = s * std::conj(phase);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Complex gp = p[i];
        const Complex gq = q[i];
        p[i] = c * gp - sp_conj * gq;
        q[i] = sp * gp + c * gq;
    }
}

/// Fills `missing` slots of an orthonormal column set by Gram-Schmidt on the
/// standard basis.
void complete_orthonormal(std::vector<Column>& cols, const std::vector<bool>& present)
{
    const std::size_t n = cols.size();
    std::vector<std::size_t> have;
    for (std::size_t j = 0; j < n; ++j) {
        if (present[j]) {
            have.push_back(j);
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (present[j]) {
            continue;
        }
        Column best;
        double best_norm = -1.0;
        for (std::size_t k = 0; k < n; ++k) {
            Column e(n);
            e[k] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t h : have) {
                    const Complex proj = inner(cols[h], e);
                    for (std::size_t i = 0; i < n; ++i) {
                        e[i] -= proj * cols[h][i];
                    }
                }
            }
            const double nrm = std::sqrt(squared_norm(e));
            if (nrm > best_norm) {
                best_norm = nrm;
                best = std::move(e);
            }
        }
        for (Complex& v : best) {
            v /= best_norm;
        }
        cols[j] = std::move(best);
        have.push_back(j);
    }
}

struct LuFactors {
    ComplexMatrix lu;
    std::vector<std::size_t> perm;
    int parity = 1;
    bool singular = false;
};

LuFactors lu_factor(const ComplexMatrix& a)
{
    const std::size_t n = a.rows();
    LuFactors f{a, std::vector<std::size_t>(n), 1, false};
    std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
    ComplexMatrix& m = f.lu;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(m(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(m(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0) {
            f.singular = true;
            continue;
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(k, j), m(piv, j));
            }
            std::swap(f.perm[k], f.perm[piv]);
            f.parity = -f.parity;
        }
        const Complex pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex l = m(i, k) / pivot;
            m(i, k) = l;
            if (l == Complex{}) {
                continue;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) -= l * m(k, j);
            }
        }
    }
    return f;
}

/// Solves using the factors; zero pivots are replaced by `pivot_floor`.
Column lu_solve(const LuFactors& f, const Column& b, double pivot_floor)
{
    const std::size_t n = b.size();
    const ComplexMatrix& m = f.lu;
    Column x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = b[f.perm[i]];
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            x[i] -= m(i, j) * x[j];
        }
    }
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t j = ii + 1; j < n; ++j) {
            x[ii] -= m(ii, j) * x[j];
        }
        Complex pivot = m(ii, ii);
        if (std::abs(pivot) < pivot_floor) {
            pivot = pivot_floor;
        }
        x[ii] /= pivot;
    }
    return x;
}

// --- Hessenberg QR --------------------------------------------------------

void reduce_to_hessenberg(ComplexMatrix& h)
{
    const std::size_t n = h.rows();
    if (n < 3) {
        return;
    }
    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t len = n - k - 1;
        Column v(len);
        for (std::size_t i = 0; i < len; ++i) {
            v[i] = h(k + 1 + i, k);
        }
        const double xnorm = std::sqrt(squared_norm(v));
        double tail = 0.0;
        for (std::size_t i = 1; i < len; ++i) {
            tail += std::norm(v[i]);
        }
        if (tail == 0.0) {
            continue;
        }
        const Complex alpha = v[0];
        const Complex phase = std::abs(alpha) == 0.0 ? Complex{1.0} : alpha / std::abs(alpha);
        v[0] += phase * xnorm;
        const double vv = squared_norm(v);

        // Left: rows k+1.., all columns from k.
        for (std::size_t j = k; j < n; ++j) {
            Complex dot{};
            for (std::size_t i = 0; i < len; ++i) {
                dot += std::conj(v[i]) * h(k + 1 + i, j);
            }
            const Complex f = 2.0 * dot / vv;
            for (std::size_t i = 0; i < len; ++i) {
                h(k + 1 + i, j) -= f * v[i];
            }
        }
        // Right: all rows, columns k+1..
        for (std::size_t i = 0; i < n; ++i) {
            Complex dot{};
            for (std::size_t j = 0; j < len; ++j) {
                dot += h(i, k + 1 + j) * v[j];
            }
            const Complex f = 2.0 * dot / vv;
            for (std::size_t j = 0; j < len; ++j) {
                h(i, k + 1 + j) -= f * std::conj(v[j]);
            }
        }
        for (std::size_t i = k + 2; i < n; ++i) {
            h(i, k) = Complex{};
        }
    }
}

struct Givens {
    double c;
    Complex s;
};

/// [c, s; −conj(s), c] [x; y] = [r; 0].
Givens make_givens(Complex x, Complex y) noexcept
{
    if (y == Complex{}) {
        return {1.0, Complex{}};
    }
    if (x == Complex{}) {
        return {0.0, std::conj(y) / std::abs(y)};
    }
    const double ax = std::abs(x);
    const double nrm = std::hypot(ax, std::abs(y));
    return {ax / nrm, (x / ax) * std::conj(y) / nrm};
}

void apply_left(ComplexMatrix& h, const Givens& g, std::size_t k, std::size_t col_lo, std::size_t col_hi)
{
    for (std::size_t j = col_lo; j <= col_hi; ++j) {
        const Complex a = h(k, j);
        const Complex b = h(k + 1, j);
        h(k, j) = g.c * a + g.s * b;
        h(k + 1, j) = -std::conj(g.s) * a + g.c * b;
    }
}

void apply_right(ComplexMatrix& h, const Givens& g, std::size_t k, std::size_t row_lo, std::size_t row_hi)
{
    for (std::size_t i = row_lo; i <= row_hi; ++i) {
        const Complex a = h(i, k);
        const Complex b = h(i, k + 1);
        h(i, k) = a * g.c + b * std::conj(g.s);
        h(i, k + 1) = -a * g.s + b * g.c;
    }
}

/// Eigenvalue of [[a, b], [c, d]] closest to d.
Complex wilkinson_shift(Complex a, Complex b, Complex c, Complex d)
{
    const Complex p = 0.5 * (a - d);
    const Complex bc = b * c;
    const Complex disc = std::sqrt(p * p + bc);
    const Complex plus = p + disc;
    const Complex minus = p - disc;
    const Complex larger = std::abs(plus) >= std::abs(minus) ? plus : minus;
    if (larger == Complex{}) {
        return d;
    }
    return d - bc / larger;
}

std::vector<Complex> hessenberg_qr(ComplexMatrix h, int max_iterations_per_eigenvalue)
{
    const std::size_t n = h.rows();
    std::vector<Complex> eig(n);
    if (n == 0) {
        return eig;
    }
    const int max_iter = std::max(1, max_iterations_per_eigenvalue) * static_cast<int>(n);
    int total = 0;
    int since_deflation = 0;
    std::size_t hi = n - 1;
    while (true) {
        if (hi == 0) {
            eig[0] = h(0, 0);
            break;
        }
        std::size_t lo = hi;
        while (lo > 0) {
            double s = cabs1(h(lo - 1, lo - 1)) + cabs1(h(lo, lo));
            if (s == 0.0) {
                for (std::size_t i = 0; i <= hi; ++i) {
                    s = std::max(s, cabs1(h(i, i)));
                }
                s = std::max(s, std::numeric_limits<double>::min());
            }
            if (cabs1(h(lo, lo - 1)) <= kEps * s) {
                h(lo, lo - 1) = Complex{};
                break;
            }
            --lo;
        }
        if (lo == hi) {
            eig[hi] = h(hi, hi);
            --hi;
            since_deflation = 0;
            continue;
        }
        if (++total > max_iter) {
            throw ConvergenceFailure("eigenvalues: QR iteration did not converge");
        }
        ++since_deflation;

        Complex shift;
        if (since_deflation % 10 == 0) {
            // Exceptional shift to break cycles.
            shift = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1).real()) + 0.75 * std::abs(h(hi, hi - 1).imag());
        } else {
            shift = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
        }

        // Implicit single-shift bulge chase on the active block [lo, hi].
        Givens g = make_givens(h(lo, lo) - shift, h(lo + 1, lo));
        apply_left(h, g, lo, lo, hi);
        apply_right(h, g, lo, lo, std::min(lo + 2, hi));
        for (std::size_t k = lo + 1; k < hi; ++k) {
            g = make_givens(h(k, k - 1), h(k + 1, k - 1));
            apply_left(h, g, k, k - 1, hi);
            h(k + 1, k - 1) = Complex{};
            apply_right(h, g, k, lo, std::min(k + 2, hi));
        }
    }
    return eig;
}

void sort_eigenvalues(std::vector<Complex>& values)
{
    std::stable_sort(values.begin(), values.end(), [](Complex x, Complex y) {
        const double ax = std::abs(x);
        const double ay = std::abs(y);
        if (ax != ay) {
            return ax > ay;
        }
        return std::arg(x) < std::arg(y);
    });
}

/// Closed forms for exactly skew-symmetric matrices of order <= 3.
std::vector<Complex> small_skew_eigenvalues(const ComplexMatrix& a)
{
    const Complex i_unit{0.0, 1.0};
    switch (a.rows()) {
    case 0:
        return {};
    case 1:
        return {Complex{}};
    case 2:
        return {i_unit * a(0, 1), -i_unit * a(0, 1)};
    default: {
        const Complex x = a(0, 1);
        const Complex y = a(1, 2);
        const Complex w = a(2, 0);
        const Complex sum_sq = x * x + y * y + w * w;
        // For a configuration matrix xy + yw + wx = 0 exactly (the three gaps
        // sum to zero), so the square root is x + y + w without cancellation.
        const Complex linear = x + y + w;
        const double scale = std::norm(x) + std::norm(y) + std::norm(w);
        const Complex root = std::abs(linear * linear - sum_sq) <= 1e-12 * scale
                                 ? linear
                                 : std::sqrt(sum_sq);
        return {i_unit * root, -i_unit * root, Complex{}};
    }
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// SVD
// ---------------------------------------------------------------------------

SvdResult svd(const ComplexMatrix& a, const SvdOptions& options)
{
    if (!a.square()) {
        throw DimensionMismatch("svd: matrix must be square");
    }
    if (!all_finite(a.data())) {
        throw std::invalid_argument("svd: non-finite entry");
    }
    const std::size_t n = a.rows();

    std::vector<Column> g(n, Column(n));
    std::vector<Column> v(n, Column(n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            g[j][i] = a(i, j);
        }
        v[j][j] = 1.0;
    }

    const double tol = std::max<double>(static_cast<double>(n), 1.0) * kEps;
    bool converged = n < 2;
    for (int sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double alpha = squared_norm(g[p]);
                const double beta = squared_norm(g[q]);
                if (alpha == 0.0 || beta == 0.0) {
                    continue;
                }
                const Complex gamma = inner(g[p], g[q]);
                const double mag = std::abs(gamma);
                if (mag <= tol * std::sqrt(alpha) * std::sqrt(beta)) {
                    continue;
                }
                rotated = true;
                const Complex phase = gamma / mag;
                const double zeta = (beta - alpha) / (2.0 * mag);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(1.0, zeta));
                const double c = 1.0 / std::hypot(1.0, t);
                const double s = c * t;
                rotate_columns(g[p], g[q], c, s, phase);
                rotate_columns(v[p], v[q], c, s, phase);
            }
        }
        converged = !rotated;
    }
    if (!converged) {
        throw ConvergenceFailure("svd: one-sided Jacobi did not converge");
    }

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) {
        sigma[j] = norm2(g[j]);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    SvdResult out{ComplexMatrix(n, n), std::vector<double>(n), ComplexMatrix(n, n)};
    std::vector<Column> u_cols(n);
    std::vector<bool> present(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        out.sigma[k] = sigma[j];
        out.v.set_column(k, v[j]);
        if (sigma[j] > std::numeric_limits<double>::min()) {
            Column col = g[j];
            for (Complex& x : col) {
                x /= sigma[j];
            }
            u_cols[k] = std::move(col);
            present[k] = true;
        }
    }
    complete_orthonormal(u_cols, present);
    for (std::size_t k = 0; k < n; ++k) {
        out.u.set_column(k, u_cols[k]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Eigenvalues
// ---------------------------------------------------------------------------

EigenResult eigenvalues(const ComplexMatrix& a, const EigenOptions& options)
{
    if (!a.square()) {
        throw DimensionMismatch("eigenvalues: matrix must be square");
    }
    if (!all_finite(a.data())) {
        throw std::invalid_argument("eigenvalues: non-finite entry");
    }
    EigenResult out;
    if (a.rows() <= 3 && is_exactly_skew_symmetric(a)) {
        out.values = small_skew_eigenvalues(a);
    } else {
        ComplexMatrix h = a;
        reduce_to_hessenberg(h);
        out.values = hessenberg_qr(std::move(h), options.max_iterations_per_eigenvalue);
    }
    sort_eigenvalues(out.values);
    if (options.compute_residuals) {
        out.residuals.reserve(out.values.size());
        for (const Complex& lambda : out.values) {
            out.residuals.push_back(eigenpair_residual(a, lambda));
        }
    }
    return out;
}

double eigenpair_residual(const ComplexMatrix& a, Complex lambda)
{
    const std::size_t n = a.rows();
    if (n == 0) {
        return 0.0;
    }
    const double scale = std::max(a.frobenius_norm(), std::numeric_limits<double>::min());
    ComplexMatrix shifted = a;
    for (std::size_t i = 0; i < n; ++i) {
        shifted(i, i) -= lambda;
    }
    const LuFactors f = lu_factor(shifted);
    const double floor = kEps * scale;

    Column q(n, Complex{1.0 / std::sqrt(static_cast<double>(n))});
    for (int it = 0; it < 3; ++it) {
        Column x = lu_solve(f, q, floor);
        const double nrm = norm2(x);
        if (!(nrm > 0.0) || !std::isfinite(nrm)) {
            break;
        }
        for (std::size_t i = 0; i < n; ++i) {
            q[i] = x[i] / nrm;
        }
    }
    Column aq = multiply(a, q);
    for (std::size_t i = 0; i < n; ++i) {
        aq[i] -= lambda * q[i];
    }
    return norm2(aq);
}

// ---------------------------------------------------------------------------
// Rank and nullspace
// ---------------------------------------------------------------------------

double rank_threshold(std::span<const double> sigma, double rel_tol)
{
    const double top = sigma.empty() ? 0.0 : *std::max_element(sigma.begin(), sigma.end());
    if (top == 0.0) {
        return 1e-300;
    }
    return rel_tol * top * static_cast<double>(sigma.size());
}

RankReport rank_report(const SvdResult& decomposition, double rel_tol)
{
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
        throw std::invalid_argument("rank_report: rel_tol must lie in (0, 1)");
    }
    RankReport report;
    report.threshold_used = rank_threshold(decomposition.sigma, rel_tol);
    for (std::size_t k = 0; k < decomposition.sigma.size(); ++k) {
        if (decomposition.sigma[k] > report.threshold_used) {
            ++report.rank;
        } else {
            report.nullspace_basis.push_back(decomposition.v.column(k));
        }
    }
    report.nullity = report.nullspace_basis.size();
    return report;
}

RankReport nullspace(const ComplexMatrix& a, double rel_tol)
{
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
        throw std::invalid_argument("nullspace: rel_tol must lie in (0, 1)");
    }
    return rank_report(svd(a), rel_tol);
}

// ---------------------------------------------------------------------------
// Determinant and Pfaffian
// ---------------------------------------------------------------------------

Complex determinant(const ComplexMatrix& a)
{
    if (!a.square()) {
        throw DimensionMismatch("determinant: matrix must be square");
    }
    const LuFactors f = lu_factor(a);
    if (f.singular) {
        return Complex{};
    }
    Complex det = static_cast<double>(f.parity);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        det *= f.lu(i, i);
    }
    return det;
}

namespace {

void require_even_skew(const ComplexMatrix& a, const char* who)
{
    if (!a.square()) {
        throw DimensionMismatch(std::string(who) + ": matrix must be square");
    }
    if (a.rows() % 2 != 0) {
        std::ostringstream os;
        os << who << ": Pfaffian undefined for odd order " << a.rows();
        throw OddDimension(os.str());
    }
    if (!is_exactly_skew_symmetric(a)) {
        throw std::invalid_argument(std::string(who) + ": matrix is not skew-symmetric");
    }
}

Complex expand(const ComplexMatrix& a, std::vector<std::size_t>& idx)
{
    if (idx.empty()) {
        return 1.0;
    }
    if (idx.size() == 2) {
        return a(idx[0], idx[1]);
    }
    const std::size_t first = idx.front();
    Complex total{};
    double sign = 1.0;
    for (std::size_t k = 1; k < idx.size(); ++k) {
        const Complex entry = a(first, idx[k]);
        if (entry != Complex{}) {
            std::vector<std::size_t> rest;
            rest.reserve(idx.size() - 2);
            for (std::size_t m = 1; m < idx.size(); ++m) {
                if (m != k) {
                    rest.push_back(idx[m]);
                }
            }
            total += sign * entry * expand(a, rest);
        }
        sign = -sign;
    }
    return total;
}

}  // namespace

Complex pfaffian_expansion(const ComplexMatrix& a)
{
    require_even_skew(a, "pfaffian_expansion");
    std::vector<std::size_t> idx(a.rows());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return expand(a, idx);
}

Complex pfaffian_householder(const ComplexMatrix& a)
{
    require_even_skew(a, "pfaffian_householder");
    const std::size_t n = a.rows();
    if (n == 0) {
        return 1.0;
    }
    ComplexMatrix m = a;
    Complex pf = 1.0;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        // Reflect x = m[k+1:, k] onto alpha e_1 with P = I − 2 v v†, ‖v‖ = 1.
        const std::size_t len = n - k - 1;
        Column v(len);
        for (std::size_t i = 0; i < len; ++i) {
            v[i] = m(k + 1 + i, k);
        }
        double tail = 0.0;
        for (std::size_t i = 1; i < len; ++i) {
            tail += std::norm(v[i]);
        }
        Complex alpha = v[0];
        if (tail != 0.0) {
            const double xnorm = std::sqrt(std::norm(v[0]) + tail);
            const Complex phase = std::abs(v[0]) == 0.0 ? Complex{1.0} : v[0] / std::abs(v[0]);
            v[0] += phase * xnorm;
            const double vn = norm2(v);
            for (Complex& x : v) {
                x /= vn;
            }
            alpha = -phase * xnorm;

            // Block update B <- P B P^T = B + v w^T − w v^T with w = 2 B conj(v).
            Column w(len);
            for (std::size_t i = 0; i < len; ++i) {
                Complex acc{};
                for (std::size_t j = 0; j < len; ++j) {
                    acc += m(k + 1 + i, k + 1 + j) * std::conj(v[j]);
                }
                w[i] = 2.0 * acc;
            }
            for (std::size_t i = 0; i < len; ++i) {
                for (std::size_t j = 0; j < len; ++j) {
                    m(k + 1 + i, k + 1 + j) += v[i] * w[j] - w[i] * v[j];
                }
            }
            // det(P) = −1.
            pf = -pf;
        }
        m(k + 1, k) = alpha;
        m(k, k + 1) = -alpha;
        for (std::size_t i = k + 2; i < n; ++i) {
            m(i, k) = Complex{};
            m(k, i) = Complex{};
        }
        if (k % 2 == 0) {
            pf *= m(k, k + 1);
        }
    }
    pf *= m(n - 2, n - 1);
    return pf;
}

Complex pfaffian(const ComplexMatrix& a)
{
    require_even_skew(a, "pfaffian");
    if (a.rows() <= 8) {
        return pfaffian_expansion(a);
    }
    return pfaffian_householder(a);
}

}  // namespace singeq
