#include "fquandle/cohomology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fq {

ScalarModule::ScalarModule(int m_, int T_, int S_) : m(m_), T(mod_norm(T_, m_)), S(mod_norm(S_, m_)) {
    if (m <= 0) throw input_error("modulus must be positive");
    if (gcd_int(T, m) != 1) throw input_error("T is not a unit mod m");
}

bool is_prime(int m) {
    if (m < 2) return false;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

int bracket(const FTable& t, const std::vector<int>& seq) {
    if (seq.empty()) throw input_error("bracket of empty sequence");
    auto fpow = [&](int x, int k) {
        for (int i = 0; i < k; ++i) x = t.f(x);
        return x;
    };
    int acc = seq[0];
    for (size_t k = 1; k < seq.size(); ++k)
        acc = t.at(acc, fpow(seq[k], static_cast<int>(k) - 1));
    return acc;
}

namespace {

std::vector<std::vector<int>> all_tuples(int n_elems, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(len, 0);
    if (len == 0) return {cur};
    while (true) {
        out.push_back(cur);
        int i = len - 1;
        while (i >= 0 && ++cur[i] == n_elems) cur[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

int tuple_index(const std::vector<int>& tup, int n_elems) {
    int idx = 0;
    for (int v : tup) idx = idx * n_elems + v;
    return idx;
}

// The deletion tuple (x_1,..,^x_i,..) and acted tuple
// (x_1*x_i,..,x_{i-1}*x_i, f(x_{i+1}),..) for 1-based i.
std::vector<int> deletion_tuple(const std::vector<int>& xs, int i) {
    std::vector<int> out;
    for (size_t k = 0; k < xs.size(); ++k)
        if (static_cast<int>(k) != i - 1) out.push_back(xs[k]);
    return out;
}

std::vector<int> acted_tuple(const FTable& t, const std::vector<int>& xs, int i) {
    std::vector<int> out;
    for (int k = 0; k < i - 1; ++k) out.push_back(t.at(xs[k], xs[i - 1]));
    for (size_t k = i; k < xs.size(); ++k) out.push_back(t.f(xs[k]));
    return out;
}

}  // namespace

BoundaryMatrix boundary_matrix(const FTable& t, const ScalarModule& mod, int n, DeltaFormula formula) {
    if (n < 1 || n > 3) throw input_error("boundary_matrix supports degrees 1..3");
    if (!validate(t, Level::Quandle).passed)
        throw input_error("boundary_matrix requires a table passing quandle validation");
    // Scalar eta/tau: delegate to the general builder for the literal
    // formula (which also exercises the bracket subscripts); the structural
    // formula adds the i = 1 deletion/acted pair in place of the tau term.
    const int N = t.n;
    auto cod = all_tuples(N, n + 1);
    int cols = 1;
    for (int i = 0; i < n; ++i) cols *= N;
    BoundaryMatrix M;
    M.degree = n;
    M.m = mod.m;
    M.rows = static_cast<int>(cod.size());
    M.cols = cols;
    M.entries.assign(M.rows, std::vector<int>(cols, 0));

    const int lo = (formula == DeltaFormula::Structural) ? 1 : 2;
    for (int r = 0; r < M.rows; ++r) {
        const auto& xs = cod[r];
        for (int i = lo; i <= n + 1; ++i) {
            int sign = (i % 2 == 0) ? 1 : -1;
            if (formula == DeltaFormula::Literal) {
                // Evaluate the eta bracket subscripts (information-free for
                // scalar eta but exercised deliberately).
                std::vector<int> tail(xs.begin() + (i - 1), xs.end());
                (void)bracket(t, deletion_tuple(xs, i));
                if (!tail.empty()) (void)bracket(t, tail);
            }
            int dcol = tuple_index(deletion_tuple(xs, i), N);
            int acol = tuple_index(acted_tuple(t, xs, i), N);
            M.entries[r][dcol] = mod_norm(M.entries[r][dcol] + sign * mod.T, mod.m);
            M.entries[r][acol] = mod_norm(M.entries[r][acol] - sign, mod.m);
        }
        if (formula == DeltaFormula::Literal) {
            int tsign = (n % 2 == 0) ? -1 : 1;  // (-1)^{n+1}
            std::vector<int> tail(xs.begin() + 1, xs.end());
            int tcol = tuple_index(tail, N);
            M.entries[r][tcol] = mod_norm(M.entries[r][tcol] + tsign * mod.S, mod.m);
        }
    }
    return M;
}

BoundaryMatrix boundary_matrix_general(const FTable& t, int m,
                                       const std::vector<std::vector<int>>& eta,
                                       const std::vector<std::vector<int>>& tau, int n) {
    if (n < 1 || n > 3) throw input_error("boundary_matrix_general supports degrees 1..3");
    const int N = t.n;
    if (static_cast<int>(eta.size()) != N || static_cast<int>(tau.size()) != N)
        throw input_error("eta/tau tables must be base-order square");
    auto cod = all_tuples(N, n + 1);
    int cols = 1;
    for (int i = 0; i < n; ++i) cols *= N;
    BoundaryMatrix M;
    M.degree = n;
    M.m = m;
    M.rows = static_cast<int>(cod.size());
    M.cols = cols;
    M.entries.assign(M.rows, std::vector<int>(cols, 0));
    auto fpow = [&](int x, int k) {
        for (int i = 0; i < k; ++i) x = t.f(x);
        return x;
    };
    for (int r = 0; r < M.rows; ++r) {
        const auto& xs = cod[r];
        for (int i = 2; i <= n + 1; ++i) {
            int sign = (i % 2 == 0) ? 1 : -1;
            std::vector<int> del = deletion_tuple(xs, i);
            std::vector<int> tail(xs.begin() + (i - 1), xs.end());
            int eta_coeff = eta[bracket(t, del)][fpow(bracket(t, tail), i - 2)];
            int dcol = tuple_index(del, N);
            int acol = tuple_index(acted_tuple(t, xs, i), N);
            M.entries[r][dcol] = mod_norm(M.entries[r][dcol] + sign * eta_coeff, m);
            M.entries[r][acol] = mod_norm(M.entries[r][acol] - sign, m);
        }
        int tsign = (n % 2 == 0) ? -1 : 1;  // (-1)^{n+1}
        std::vector<int> tail(xs.begin() + 1, xs.end());
    std::vector<int> first_skip;  // (x_1, x_3, .., x_{n+1})
        first_skip.push_back(xs[0]);
        for (size_t k = 2; k < xs.size(); ++k) first_skip.push_back(xs[k]);
        int tau_coeff = tau[bracket(t, first_skip)][bracket(t, tail)];
        int tcol = tuple_index(tail, N);
        M.entries[r][tcol] = mod_norm(M.entries[r][tcol] + tsign * tau_coeff, m);
    }
    return M;
}

namespace {

std::vector<std::vector<int>> mat_mul_mod(const BoundaryMatrix& A, const BoundaryMatrix& B) {
    // A * B where B maps into A's domain.
    std::vector<std::vector<int>> out(A.rows, std::vector<int>(B.cols, 0));
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            if (A.entries[i][k] == 0) continue;
            for (int j = 0; j < B.cols; ++j)
                out[i][j] = mod_norm(out[i][j] + static_cast<long long>(A.entries[i][k]) * B.entries[k][j],
                                     A.m);
        }
    return out;
}

}  // namespace

bool verify_complex(const FTable& t, const ScalarModule& mod, DeltaFormula formula) {
    BoundaryMatrix d1 = boundary_matrix(t, mod, 1, formula);
    BoundaryMatrix d2 = boundary_matrix(t, mod, 2, formula);
    BoundaryMatrix d3 = boundary_matrix(t, mod, 3, formula);
    for (const auto& prod : {mat_mul_mod(d2, d1), mat_mul_mod(d3, d2)})
        for (const auto& row : prod)
            for (int v : row)
                if (v != 0) return false;
    return true;
}

int rank_mod_p(std::vector<std::vector<int>> mat, int p) {
    if (mat.empty()) return 0;
    int rows = static_cast<int>(mat.size()), cols = static_cast<int>(mat[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (mat[r][c] % p != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(mat[rank], mat[piv]);
        int inv = mod_inverse(mat[rank][c], p);
        for (int j = 0; j < cols; ++j) mat[rank][j] = mat[rank][j] * inv % p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || mat[r][c] % p == 0) continue;
            int factor = mat[r][c] % p;
            for (int j = 0; j < cols; ++j)
                mat[r][j] = mod_norm(mat[r][j] - static_cast<long long>(factor) * mat[rank][j], p);
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<int>> kernel_basis_mod_p(const std::vector<std::vector<int>>& mat_in, int p) {
    std::vector<std::vector<int>> mat = mat_in;
    int rows = static_cast<int>(mat.size());
    int cols = rows ? static_cast<int>(mat[0].size()) : 0;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (mat[r][c] % p != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(mat[rank], mat[piv]);
        int inv = mod_inverse(mat[rank][c], p);
        for (int j = 0; j < cols; ++j) mat[rank][j] = mat[rank][j] * inv % p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || mat[r][c] % p == 0) continue;
            int factor = mat[r][c] % p;
            for (int j = 0; j < cols; ++j)
                mat[r][j] = mod_norm(mat[r][j] - static_cast<long long>(factor) * mat[rank][j], p);
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<int>> basis;
    for (int freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<int> v(cols, 0);
        v[freec] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = mod_norm(-mat[r][freec], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

struct SNFTracked {
    std::vector<long long> diag;
    // A = Uinv * D * Vinv_right... we track: D = U A V with
    //   V       : column-operation accumulator (A's columns),
    //   Vinv    : its inverse,
    //   Uinv    : inverse of the row-operation accumulator.
    std::vector<std::vector<long long>> V, Vinv, Uinv;
};

using Mat = std::vector<std::vector<long long>>;

Mat identity(int n) {
    Mat I(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

// Smith normal form with transform tracking, for small dense matrices.
SNFTracked snf_tracked(Mat A) {
    int rows = static_cast<int>(A.size());
    int cols = rows ? static_cast<int>(A[0].size()) : 0;
    SNFTracked res;
    res.V = identity(cols);
    res.Vinv = identity(cols);
    res.Uinv = identity(rows);

    auto swap_rows = [&](int a, int b) {
        std::swap(A[a], A[b]);
        for (int i = 0; i < rows; ++i) std::swap(res.Uinv[i][a], res.Uinv[i][b]);
    };
    auto swap_cols = [&](int a, int b) {
        for (int i = 0; i < rows; ++i) std::swap(A[i][a], A[i][b]);
        for (int i = 0; i < cols; ++i) std::swap(res.V[i][a], res.V[i][b]);
        std::swap(res.Vinv[a], res.Vinv[b]);
    };
    auto add_row = [&](int dst, int src, long long q) {  // row dst += q * row src
        for (int j = 0; j < cols; ++j) A[dst][j] += q * A[src][j];
        for (int i = 0; i < rows; ++i) res.Uinv[i][src] -= q * res.Uinv[i][dst];
    };
    auto add_col = [&](int dst, int src, long long q) {  // col dst += q * col src
        for (int i = 0; i < rows; ++i) A[i][dst] += q * A[i][src];
        for (int i = 0; i < cols; ++i) res.V[i][dst] += q * res.V[i][src];
        for (int j = 0; j < cols; ++j) res.Vinv[src][j] -= q * res.Vinv[dst][j];
    };
    auto negate_row = [&](int r) {
        for (int j = 0; j < cols; ++j) A[r][j] = -A[r][j];
        for (int i = 0; i < rows; ++i) res.Uinv[i][r] = -res.Uinv[i][r];
    };

    int k = 0;
    while (k < rows && k < cols) {
        // Find smallest nonzero pivot in the remaining block.
        int pr = -1, pc = -1;
        long long best = 0;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j)
                if (A[i][j] != 0 && (pr < 0 || std::llabs(A[i][j]) < best)) {
                    best = std::llabs(A[i][j]);
                    pr = i;
                    pc = j;
                }
        if (pr < 0) break;
        swap_rows(k, pr);
        swap_cols(k, pc);
        if (A[k][k] < 0) negate_row(k);
        bool clean = true;
        for (int i = k + 1; i < rows; ++i)
            if (A[i][k] != 0) {
                add_row(i, k, -(A[i][k] / A[k][k]));
                if (A[i][k] != 0) clean = false;
            }
        for (int j = k + 1; j < cols; ++j)
            if (A[k][j] != 0) {
                add_col(j, k, -(A[k][j] / A[k][k]));
                if (A[k][j] != 0) clean = false;
            }
        if (!clean) continue;  // re-pick a smaller pivot
        // Divisibility condition: A[k][k] must divide the rest of the block.
        bool divides = true;
        for (int i = k + 1; i < rows && divides; ++i)
            for (int j = k + 1; j < cols && divides; ++j)
                if (A[i][j] % A[k][k] != 0) {
                    add_row(k, i, 1);
                    divides = false;
                }
        if (!divides) continue;
        ++k;
    }
    for (int i = 0; i < std::min(rows, cols); ++i) res.diag.push_back(i < k ? A[i][i] : 0);
    return res;
}

}  // namespace

std::vector<long long> smith_normal_form(std::vector<std::vector<long long>> mat) {
    return snf_tracked(std::move(mat)).diag;
}

CohomologyResult cohomology(const FTable& t, const ScalarModule& mod, int n, DeltaFormula formula) {
    if (n < 1 || n > 2) throw input_error("cohomology supports degrees 1 and 2");
    const int m = mod.m;
    BoundaryMatrix dn = boundary_matrix(t, mod, n, formula);
    // C^0 is the zero space, so for n = 1 there are no coboundaries.
    std::vector<std::vector<int>> prev_cols;  // coboundary generators as column vectors
    if (n == 2) {
        BoundaryMatrix d1 = boundary_matrix(t, mod, 1, formula);
        for (int j = 0; j < d1.cols; ++j) {
            std::vector<int> col(d1.rows);
            for (int i = 0; i < d1.rows; ++i) col[i] = d1.entries[i][j];
            prev_cols.push_back(std::move(col));
        }
    }
    const int d = dn.cols;

    CohomologyResult res;
    res.degree = n;
    res.m = m;
    res.prime_modulus = is_prime(m);

    auto cocycle_ok = [&](const std::vector<int>& v) {
        for (int r = 0; r < dn.rows; ++r) {
            long long acc = 0;
            for (int c = 0; c < d; ++c) acc += static_cast<long long>(dn.entries[r][c]) * v[c];
            if (mod_norm(acc, m) != 0) return false;
        }
        return true;
    };

    if (res.prime_modulus) {
        auto ker = kernel_basis_mod_p(dn.entries, m);
        // Reduce kernel vectors against the coboundary span; keep the
        // independent ones.
        std::vector<std::vector<int>> span = prev_cols;
        auto add_if_independent = [&](const std::vector<int>& v) {
            // Gaussian check: is v in the span of `span`?
            std::vector<std::vector<int>> mat;
            for (const auto& s : span) mat.push_back(s);
            int r0 = rank_mod_p(mat, m);
            mat.push_back(v);
            int r1 = rank_mod_p(mat, m);
            if (r1 > r0) {
                span.push_back(v);
                return true;
            }
            return false;
        };
        for (const auto& v : ker)
            if (add_if_independent(v)) res.basis.push_back(v);
        res.dimension = static_cast<int>(res.basis.size());
        res.elementary_divisors.assign(res.dimension, m);
    } else {
        // General m: kernel lattice via integer SNF of delta^n, then the
        // quotient by coboundaries + mZ^d as elementary divisors.
        Mat A(dn.rows, std::vector<long long>(d));
        for (int i = 0; i < dn.rows; ++i)
            for (int j = 0; j < d; ++j) A[i][j] = dn.entries[i][j];
        SNFTracked s = snf_tracked(A);
        // Kernel lattice basis: columns k_i = s_i * (V e_i) with
        // s_i = m / gcd(diag_i, m).
        std::vector<long long> scale(d, 1);
        for (int i = 0; i < d; ++i) {
            long long di = i < static_cast<int>(s.diag.size()) ? s.diag[i] : 0;
            scale[i] = m / std::gcd(di, static_cast<long long>(m));
        }
        // Coordinates of a lattice vector w: c = diag(1/s_i) * (Vinv w).
        auto coords = [&](const std::vector<long long>& w) {
            std::vector<long long> c(d, 0);
            for (int i = 0; i < d; ++i) {
                long long acc = 0;
                for (int j = 0; j < d; ++j) acc += s.Vinv[i][j] * w[j];
                if (acc % scale[i] != 0) throw input_error("internal: vector not in kernel lattice");
                c[i] = acc / scale[i];
            }
            return c;
        };
        Mat rel;  // columns: coordinates of coboundaries and m*e_i
        std::vector<std::vector<long long>> gens;
        for (const auto& col : prev_cols) gens.emplace_back(col.begin(), col.end());
        for (int i = 0; i < d; ++i) {
            std::vector<long long> e(d, 0);
            e[i] = m;
            gens.push_back(std::move(e));
        }
        rel.assign(d, std::vector<long long>(gens.size(), 0));
        for (size_t j = 0; j < gens.size(); ++j) {
            auto c = coords(gens[j]);
            for (int i = 0; i < d; ++i) rel[i][j] = c[i];
        }
        SNFTracked q = snf_tracked(rel);
        for (int i = 0; i < d; ++i) {
            long long div = i < static_cast<int>(q.diag.size()) ? q.diag[i] : 0;
            if (div == 0) div = 0;  // cannot happen: m*e_i makes rel full rank
            if (div > 1) {
                res.elementary_divisors.push_back(div);
                // Representative: K * (Uinv e_i) where K has columns
                // scale[j] * (V e_j).
                std::vector<int> v(d, 0);
                for (int r = 0; r < d; ++r) {
                    long long acc = 0;
                    for (int j = 0; j < d; ++j) acc += scale[j] * s.V[r][j] % m * q.Uinv[j][i] % m;
                    v[r] = mod_norm(acc, m);
                }
                res.basis.push_back(std::move(v));
            }
        }
        std::sort(res.elementary_divisors.begin(), res.elementary_divisors.end());
        res.dimension = static_cast<int>(res.elementary_divisors.size());
    }

    for (const auto& v : res.basis)
        if (!cocycle_ok(v)) throw input_error("internal: basis vector fails the cocycle equation");
    return res;
}

std::vector<std::vector<int>> brute_force_kernel(const FTable& t, const ScalarModule& mod, int n,
                                                 DeltaFormula formula) {
    BoundaryMatrix dn = boundary_matrix(t, mod, n, formula);
    const int d = dn.cols;
    double space = std::pow(static_cast<double>(mod.m), d);
    if (space > 1e7) throw input_error("brute_force_kernel search space exceeds 10^7 candidates");
    std::vector<std::vector<int>> out;
    std::vector<int> v(d, 0);
    while (true) {
        bool ok = true;
        for (int r = 0; r < dn.rows && ok; ++r) {
            long long acc = 0;
            for (int c = 0; c < d; ++c) acc += static_cast<long long>(dn.entries[r][c]) * v[c];
            if (mod_norm(acc, mod.m) != 0) ok = false;
        }
        if (ok) out.push_back(v);
        int i = d - 1;
        while (i >= 0 && ++v[i] == mod.m) v[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

BoundaryMatrix rack_homology_boundary(const FTable& t, int n) {
    if (n < 0) throw input_error("degree must be non-negative");
    const int N = t.n;
    BoundaryMatrix M;
    M.degree = n;
    M.m = 0;  // over Z
    int cols = 1, rows = 1;
    for (int i = 0; i < n; ++i) cols *= N;
    for (int i = 0; i + 1 < n; ++i) rows *= N;
    if (n == 0) rows = 0;
    M.rows = rows;
    M.cols = cols;
    M.entries.assign(rows, std::vector<int>(cols, 0));
    if (n <= 1) return M;  // delta_n = 0 for n <= 1
    auto dom = all_tuples(N, n);
    for (int c = 0; c < cols; ++c) {
        const auto& xs = dom[c];
        for (int i = 2; i <= n; ++i) {
            int sign = (i % 2 == 0) ? 1 : -1;
            M.entries[tuple_index(deletion_tuple(xs, i), N)][c] += sign;
            M.entries[tuple_index(acted_tuple(t, xs, i), N)][c] -= sign;
        }
    }
    return M;
}

}  // namespace fq
