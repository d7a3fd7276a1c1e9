#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fq {

/// Thrown for malformed inputs (out-of-range entries, size mismatches,
/// unreadable files).  Distinct from an axiom violation, which is reported
/// through AxiomReport, and from a usage error, which the CLI maps to its
/// own exit code.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Axiom levels, cumulative: crossed > quandle > rack > shelf.
enum class Level { Shelf, Rack, Quandle, Crossed };

std::string to_string(Level level);
std::optional<Level> level_from_string(const std::string& s);

/// A finite magma given by an n x n operation table.  table[x][y] encodes
/// x*y (row = left operand).  The structure map is derived, never stored:
/// f(x) = table[x][x].  Carries no validity claim; see validate().
struct FTable {
    int n = 0;
    std::vector<std::vector<int>> table;

    int at(int x, int y) const { return table[x][y]; }
    int f(int x) const { return table[x][x]; }

    bool operator==(const FTable&) const = default;
    /// Lexicographic order on (n, flattened table); deterministic tie-break
    /// used throughout for catalogs.
    bool operator<(const FTable& other) const;
};

/// One axiom violation: an axiom identifier ("I", "II", "III", "crossed",
/// or module/cocycle equation ids) plus the witness tuple of element
/// indices that reproduces it.
struct Violation {
    std::string axiom;
    std::vector<int> witness;
};

struct AxiomReport {
    Level level_requested = Level::Shelf;
    bool passed = false;
    std::vector<Violation> violations;
};

/// A finite group as a multiplication table.  Associativity, identity and
/// inverse laws are checked at construction (input_error on failure).
struct GroupTable {
    int n = 0;
    std::vector<std::vector<int>> mult;
    std::vector<int> inv;
    int identity = 0;

    /// Builds from a multiplication table; derives identity and inverses.
    static GroupTable from_mult(std::vector<std::vector<int>> mult);

    int op(int a, int b) const { return mult[a][b]; }
    bool is_endomorphism(const std::vector<int>& f) const;
    bool is_abelian() const;
};

/// Z_n under addition.
GroupTable cyclic_group(int n);
/// The symmetric group S3 in the normal form s^a t^b with the index map
/// e=0, s=1, t=2, t^2=3, st=4, st^2=5 (so t*s = s*t^2).
GroupTable symmetric_group_3();

/// True iff every entry of t.table lies in 0..n-1 and the table is square
/// of size n.
bool well_formed(const FTable& t);

/// Validates t cumulatively up to `level`.  Shelf: axiom I on all n^3
/// triples.  Rack: additionally, for every (x,y) exactly one z with
/// z*y = f(x) (checked literally, correct for non-injective f).  Quandle:
/// x*x = f(x), true by construction and asserted for report completeness.
/// Crossed: y*x = f(y) implies x*y = f(x).  Reports the first witness per
/// axiom unless `exhaustive` is set.  Throws input_error on a malformed
/// table.
AxiomReport validate(const FTable& t, Level level, bool exhaustive = false);

/// [table[x][x] for x in 0..n-1].
std::vector<int> derived_f(const FTable& t);

/// True iff f(x*y) = f(x)*f(y) for all pairs.
bool is_f_endomorphism(const FTable& t);

/// True iff every row and every column is a permutation of 0..n-1.
bool is_latin(const FTable& t);

/// Trivial f-quandle structure: table[x][y] = f(x).  Note: with a
/// non-injective f the result fails the literal rack axiom II (z*y = f(x)
/// then has several solutions z), so "passes quandle validation" holds
/// exactly when f is injective.
FTable make_trivial(int n, const std::vector<int>& f);

enum class ConjVariant { Plain, TwistedConj };

/// Conjugation f-quandle on G.  Plain: x*y = y^{-1} x f(y).  TwistedConj:
/// x*y = f(y)^{-1} f(x) f(y) (the reading that reproduces the printed S3
/// table).  f must be a group endomorphism of G.
FTable make_conjugation(const GroupTable& G, const std::vector<int>& f, ConjVariant variant);

/// f-dihedral quandle: table[x][y] = (2ay - ax + b) mod n, with f(x) = ax+b.
/// Requires gcd(a, n) = 1.
FTable make_f_dihedral(int n, int a, int b);

/// Alexander f-quandle on Z_m: table[x][y] = (Tx + Sy) mod m, with
/// f(x) = (T+S)x.  Requires gcd(T, m) = 1.
FTable make_alexander(int m, int T, int S);

/// The crossed set of distinct right translations R_x (R_x(z) = z*x, a
/// column read), with R_x *_R R_y = R_{x*y} and f_R(R_x) = R_{f(x)}.
/// Translations are indexed in first-occurrence order.  Throws input_error
/// with a witness in the message if the induced operation is not
/// well-defined on the distinct-permutation quotient.
FTable translation_crossed_set(const FTable& t);

/// The right translation R_y as a permutation: R_y(z) = z*y.
std::vector<int> right_translation(const FTable& t, int y);

int gcd_int(int a, int b);
int mod_norm(long long v, int m);
/// Inverse of a mod m; throws input_error if gcd(a, m) != 1.
int mod_inverse(int a, int m);

}  // namespace fq
