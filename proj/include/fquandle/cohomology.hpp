#pragma once

#include <cstdint>
#include <vector>

#include "fquandle/core.hpp"

namespace fq {

/// Scalar coefficient data for the cochain complex over Z_m: eta acts as
/// multiplication by T (a unit), tau as multiplication by S, and the
/// structure scalar is fixed to g = T+S mod m.
struct ScalarModule {
    int m = 0;
    int T = 1;
    int S = 0;

    ScalarModule(int m_, int T_, int S_);
    int g() const { return mod_norm(T + S, m); }
};

/// Which reading of the degree-raising differential to use.
///
/// Structural (default): the unique reading under which the boundary
/// operators square to zero for every f-quandle and every (m, T, S):
///   d^n phi(x_1..x_{n+1}) =
///     sum_{i=1}^{n+1} (-1)^i [ T phi(x_1,..,^x_i,..,x_{n+1})
///        - phi(x_1*x_i,..,x_{i-1}*x_i, f(x_{i+1}),..,f(x_{n+1})) ].
/// On cochains satisfying phi(f(..)) = g phi(..) the i = 1 term equals the
/// literal tau term, so the two readings agree there.
///
/// Literal: the displayed theorem formula (sum from i = 2 plus the
/// (-1)^{n+1} S tau term).  It does NOT square to zero; it is provided as a
/// documented alternative only.
enum class DeltaFormula { Structural, Literal };

/// Dense matrix of the degree-n differential C^n -> C^{n+1}, entries
/// reduced mod m.  Rows are indexed by X^{n+1} tuples, columns by X^n
/// tuples, both in lexicographic order.
struct BoundaryMatrix {
    int degree = 0;
    int m = 0;
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<int>> entries;
};

struct CohomologyResult {
    int degree = 0;
    int m = 0;
    bool prime_modulus = false;
    /// For prime m: the dimension over GF(m).
    int dimension = 0;
    /// For any m: elementary divisors (> 1) of ker/im; for prime m this is
    /// `dimension` copies of m.
    std::vector<long long> elementary_divisors;
    /// Cocycle representatives, independent mod coboundaries; each vector is
    /// over the lexicographic tuple basis and satisfies the cocycle equation
    /// exactly (re-verified before returning).
    std::vector<std::vector<int>> basis;
};

/// Left-nested bracket with f^{k-2} applied to the k-th operand for k >= 3;
/// singleton returns its element.
int bracket(const FTable& t, const std::vector<int>& seq);

/// Matrix of delta^n : C^n -> C^{n+1} for n in {1,2,3}.  The scalar
/// specialization evaluates the bracket subscripts even though they carry
/// no information for scalar eta/tau, to exercise that code path.
BoundaryMatrix boundary_matrix(const FTable& t, const ScalarModule& mod, int n,
                               DeltaFormula formula = DeltaFormula::Structural);

/// Literal theorem differential with per-pair eta/tau tables (entries mod m,
/// eta entries must be units).  The eta coefficient of the i-th deletion
/// term is eta indexed by the two brackets of the theorem; the tau term is
/// indexed likewise.  Only the scalar path is exercised by acceptance
/// tests; this is the general hook.
BoundaryMatrix boundary_matrix_general(const FTable& t, int m,
                                       const std::vector<std::vector<int>>& eta,
                                       const std::vector<std::vector<int>>& tau, int n);

/// True iff delta^2 delta^1 = 0 and delta^3 delta^2 = 0 mod m.
bool verify_complex(const FTable& t, const ScalarModule& mod,
                    DeltaFormula formula = DeltaFormula::Structural);

/// H^n for n in {1,2} with C^0 = 0 (so H^1 = ker delta^1).  Prime m: ranks
/// over GF(m); general m: elementary divisors of ker delta^n modulo
/// im delta^{n-1} + mZ via integer Smith normal form.
CohomologyResult cohomology(const FTable& t, const ScalarModule& mod, int n,
                            DeltaFormula formula = DeltaFormula::Structural);

/// Enumerates all m^dim cochains in degree n and returns those whose
/// delta^n image is exactly zero.  Throws input_error when the search space
/// exceeds 10^7 candidates.
std::vector<std::vector<int>> brute_force_kernel(const FTable& t, const ScalarModule& mod, int n,
                                                 DeltaFormula formula = DeltaFormula::Structural);

/// Degree-lowering rack-homology boundary (eta = id, tau = 0):
///   d_n(x_1..x_n) = sum_{i=2}^n (-1)^i [ (x_1,..,^x_i,..,x_n)
///       - (x_1*x_i,..,x_{i-1}*x_i, f(x_{i+1}),..,f(x_n)) ],
/// zero for n <= 1.  Integer matrix (m field set to 0 = over Z); rows are
/// X^{n-1} tuples, columns X^n tuples.
BoundaryMatrix rack_homology_boundary(const FTable& t, int n);

/// --- exact linear algebra helpers (exposed for tests) ---

/// Rank of a matrix over GF(p).
int rank_mod_p(std::vector<std::vector<int>> mat, int p);

/// Basis of the kernel of mat over GF(p) (column vectors).
std::vector<std::vector<int>> kernel_basis_mod_p(const std::vector<std::vector<int>>& mat, int p);

/// Smith normal form over Z.  Returns the diagonal entries (non-negative,
/// each dividing the next) of D where U A V = D with U, V unimodular.
std::vector<long long> smith_normal_form(std::vector<std::vector<long long>> mat);

bool is_prime(int m);

}  // namespace fq
