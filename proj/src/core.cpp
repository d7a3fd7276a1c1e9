#include "fquandle/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fq {

std::string to_string(Level level) {
    switch (level) {
        case Level::Shelf: return "shelf";
        case Level::Rack: return "rack";
        case Level::Quandle: return "quandle";
        case Level::Crossed: return "crossed";
    }
    return "?";
}

std::optional<Level> level_from_string(const std::string& s) {
    if (s == "shelf") return Level::Shelf;
    if (s == "rack") return Level::Rack;
    if (s == "quandle") return Level::Quandle;
    if (s == "crossed") return Level::Crossed;
    return std::nullopt;
}

bool FTable::operator<(const FTable& other) const {
    if (n != other.n) return n < other.n;
    return table < other.table;
}

int gcd_int(int a, int b) { return std::gcd(a, b); }

int mod_norm(long long v, int m) {
    long long r = v % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

int mod_inverse(int a, int m) {
    a = mod_norm(a, m);
    for (int x = 1; x < m; ++x)
        if (a * x % m == 1) return x;
    throw input_error("element " + std::to_string(a) + " is not invertible mod " + std::to_string(m));
}

bool well_formed(const FTable& t) {
    if (t.n <= 0 || static_cast<int>(t.table.size()) != t.n) return false;
    for (const auto& row : t.table) {
        if (static_cast<int>(row.size()) != t.n) return false;
        for (int v : row)
            if (v < 0 || v >= t.n) return false;
    }
    return true;
}

AxiomReport validate(const FTable& t, Level level, bool exhaustive) {
    if (!well_formed(t)) throw input_error("malformed table: not square or entry out of range");
    AxiomReport report;
    report.level_requested = level;
    const int n = t.n;

    auto record = [&](const std::string& axiom, std::vector<int> witness) {
        report.violations.push_back({axiom, std::move(witness)});
    };
    auto have = [&](const std::string& axiom) {
        return !exhaustive &&
               std::any_of(report.violations.begin(), report.violations.end(),
                           [&](const Violation& v) { return v.axiom == axiom; });
    };

    // Axiom I: (x*y)*f(z) = (x*z)*(y*z).
    for (int x = 0; x < n && !have("I"); ++x)
        for (int y = 0; y < n && !have("I"); ++y)
            for (int z = 0; z < n && !have("I"); ++z)
                if (t.at(t.at(x, y), t.f(z)) != t.at(t.at(x, z), t.at(y, z)))
                    record("I", {x, y, z});

    if (level >= Level::Rack) {
        // Axiom II, literal: for each (x,y) exactly one z with z*y = f(x).
        for (int x = 0; x < n && !have("II"); ++x)
            for (int y = 0; y < n && !have("II"); ++y) {
                int count = 0;
                for (int z = 0; z < n; ++z)
                    if (t.at(z, y) == t.f(x)) ++count;
                if (count != 1) record("II", {x, y});
            }
    }
    if (level >= Level::Quandle) {
        // Axiom III: x*x = f(x); true by construction since f is the diagonal.
        for (int x = 0; x < n && !have("III"); ++x)
            if (t.at(x, x) != t.f(x)) record("III", {x});
    }
    if (level >= Level::Crossed) {
        for (int x = 0; x < n && !have("crossed"); ++x)
            for (int y = 0; y < n && !have("crossed"); ++y)
                if (t.at(y, x) == t.f(y) && t.at(x, y) != t.f(x)) record("crossed", {x, y});
    }
    report.passed = report.violations.empty();
    return report;
}

std::vector<int> derived_f(const FTable& t) {
    std::vector<int> f(t.n);
    for (int x = 0; x < t.n; ++x) f[x] = t.f(x);
    return f;
}

bool is_f_endomorphism(const FTable& t) {
    for (int x = 0; x < t.n; ++x)
        for (int y = 0; y < t.n; ++y)
            if (t.f(t.at(x, y)) != t.at(t.f(x), t.f(y))) return false;
    return true;
}

bool is_latin(const FTable& t) {
    const int n = t.n;
    for (int x = 0; x < n; ++x) {
        std::vector<bool> row(n, false), col(n, false);
        for (int y = 0; y < n; ++y) {
            if (row[t.at(x, y)]) return false;
            row[t.at(x, y)] = true;
            if (col[t.at(y, x)]) return false;
            col[t.at(y, x)] = true;
        }
    }
    return true;
}

FTable make_trivial(int n, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != n) throw input_error("f has wrong length");
    for (int v : f)
        if (v < 0 || v >= n) throw input_error("f entry out of range");
    FTable t{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t.table[x][y] = f[x];
    return t;
}

GroupTable GroupTable::from_mult(std::vector<std::vector<int>> mult) {
    GroupTable g;
    g.n = static_cast<int>(mult.size());
    g.mult = std::move(mult);
    if (g.n == 0) throw input_error("empty group table");
    for (const auto& row : g.mult) {
        if (static_cast<int>(row.size()) != g.n) throw input_error("group table not square");
        for (int v : row)
            if (v < 0 || v >= g.n) throw input_error("group table entry out of range");
    }
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int c = 0; c < g.n; ++c)
                if (g.mult[g.mult[a][b]][c] != g.mult[a][g.mult[b][c]])
                    throw input_error("group table is not associative");
    int e = -1;
    for (int cand = 0; cand < g.n; ++cand) {
        bool ok = true;
        for (int a = 0; a < g.n; ++a)
            if (g.mult[cand][a] != a || g.mult[a][cand] != a) ok = false;
        if (ok) { e = cand; break; }
    }
    if (e < 0) throw input_error("group table has no identity");
    g.identity = e;
    g.inv.assign(g.n, -1);
    for (int a = 0; a < g.n; ++a) {
        for (int b = 0; b < g.n; ++b)
            if (g.mult[a][b] == e && g.mult[b][a] == e) { g.inv[a] = b; break; }
        if (g.inv[a] < 0) throw input_error("group table element without inverse");
    }
    return g;
}

bool GroupTable::is_endomorphism(const std::vector<int>& f) const {
    if (static_cast<int>(f.size()) != n) return false;
    for (int v : f)
        if (v < 0 || v >= n) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (f[mult[a][b]] != mult[f[a]][f[b]]) return false;
    return true;
}

bool GroupTable::is_abelian() const {
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mult[a][b] != mult[b][a]) return false;
    return true;
}

GroupTable cyclic_group(int n) {
    std::vector<std::vector<int>> mult(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mult[a][b] = (a + b) % n;
    return GroupTable::from_mult(std::move(mult));
}

GroupTable symmetric_group_3() {
    // Elements s^a t^b indexed e=0, s=1, t=2, t^2=3, st=4, st^2=5, with the
    // rewriting rule t^b s = s t^{2b}.
    auto idx = [](int a, int b) { return a == 0 ? (b == 0 ? 0 : 1 + b) : (b == 0 ? 1 : 3 + b); };
    auto parts = [](int i, int& a, int& b) {
        switch (i) {
            case 0: a = 0; b = 0; break;
            case 1: a = 1; b = 0; break;
            case 2: a = 0; b = 1; break;
            case 3: a = 0; b = 2; break;
            case 4: a = 1; b = 1; break;
            default: a = 1; b = 2; break;
        }
    };
    std::vector<std::vector<int>> mult(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int a1, b1, a2, b2;
            parts(i, a1, b1);
            parts(j, a2, b2);
            // s^a1 t^b1 s^a2 t^b2 = s^{a1+a2} t^{b1*2^a2 + b2}
            int a = (a1 + a2) % 2;
            int b = (b1 * (a2 == 1 ? 2 : 1) + b2) % 3;
            mult[i][j] = idx(a, b);
        }
    return GroupTable::from_mult(std::move(mult));
}

FTable make_conjugation(const GroupTable& G, const std::vector<int>& f, ConjVariant variant) {
    if (!G.is_endomorphism(f)) throw input_error("f is not a group endomorphism");
    FTable t{G.n, std::vector<std::vector<int>>(G.n, std::vector<int>(G.n))};
    for (int x = 0; x < G.n; ++x)
        for (int y = 0; y < G.n; ++y) {
            if (variant == ConjVariant::Plain)
                t.table[x][y] = G.op(G.op(G.inv[y], x), f[y]);
            else
                t.table[x][y] = G.op(G.op(G.inv[f[y]], f[x]), f[y]);
        }
    return t;
}

FTable make_f_dihedral(int n, int a, int b) {
    if (n <= 0) throw input_error("modulus must be positive");
    if (gcd_int(mod_norm(a, n), n) != 1) throw input_error("a is not invertible mod n");
    FTable t{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t.table[x][y] = mod_norm(2LL * a * y - static_cast<long long>(a) * x + b, n);
    return t;
}

FTable make_alexander(int m, int T, int S) {
    if (m <= 0) throw input_error("modulus must be positive");
    if (gcd_int(mod_norm(T, m), m) != 1) throw input_error("T is not invertible mod m");
    FTable t{m, std::vector<std::vector<int>>(m, std::vector<int>(m))};
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            t.table[x][y] = mod_norm(static_cast<long long>(T) * x + static_cast<long long>(S) * y, m);
    return t;
}

std::vector<int> right_translation(const FTable& t, int y) {
    std::vector<int> r(t.n);
    for (int z = 0; z < t.n; ++z) r[z] = t.at(z, y);
    return r;
}

FTable translation_crossed_set(const FTable& t) {
    AxiomReport rack = validate(t, Level::Rack);
    if (!rack.passed) throw input_error("translation_crossed_set requires a table passing rack validation");
    const int n = t.n;
    std::vector<std::vector<int>> perms;
    std::vector<int> cls(n);  // x -> index of R_x among distinct translations
    for (int x = 0; x < n; ++x) {
        auto r = right_translation(t, x);
        auto it = std::find(perms.begin(), perms.end(), r);
        if (it == perms.end()) {
            perms.push_back(r);
            cls[x] = static_cast<int>(perms.size()) - 1;
        } else {
            cls[x] = static_cast<int>(it - perms.begin());
        }
    }
    const int k = static_cast<int>(perms.size());
    std::vector<std::vector<int>> out(k, std::vector<int>(k, -1));
    // Induced operation R_x *_R R_y = R_{x*y}; check well-definedness over
    // all representative pairs.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int v = cls[t.at(x, y)];
            int& cell = out[cls[x]][cls[y]];
            if (cell == -1) {
                cell = v;
            } else if (cell != v) {
                std::ostringstream msg;
                msg << "induced operation ill-defined on translation classes: witness pair ("
                    << x << "," << y << ") maps class (" << cls[x] << "," << cls[y]
                    << ") to both " << cell << " and " << v;
                throw input_error(msg.str());
            }
        }
    // f_R(R_x) = R_{f(x)} must also be well-defined; the diagonal of `out`
    // already equals R_{x*x} = R_{f(x)}, so check consistency explicitly.
    for (int x = 0; x < n; ++x)
        if (out[cls[x]][cls[x]] != cls[t.f(x)]) {
            std::ostringstream msg;
            msg << "f_R ill-defined: witness element " << x;
            throw input_error(msg.str());
        }
    return FTable{k, std::move(out)};
}

}  // namespace fq
