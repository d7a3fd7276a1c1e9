#include "fquandle/extensions.hpp"

#include <algorithm>

namespace fq {

namespace {

void check_cocycle_shape(const FTable& base, const DynamicalCocycle& c) {
    if (c.base_order != base.n) throw input_error("cocycle base order mismatch");
    if (c.fiber_order <= 0) throw input_error("fiber order must be positive");
    if (static_cast<int>(c.alpha.size()) != c.base_order) throw input_error("alpha has wrong shape");
    for (const auto& row : c.alpha) {
        if (static_cast<int>(row.size()) != c.base_order) throw input_error("alpha has wrong shape");
        for (const auto& tab : row) {
            if (static_cast<int>(tab.size()) != c.fiber_order) throw input_error("alpha has wrong shape");
            for (const auto& r : tab) {
                if (static_cast<int>(r.size()) != c.fiber_order) throw input_error("alpha has wrong shape");
                for (int v : r)
                    if (v < 0 || v >= c.fiber_order) throw input_error("alpha entry out of fiber range");
            }
        }
    }
    if (static_cast<int>(c.g.size()) != c.fiber_order) throw input_error("g has wrong length");
    for (int v : c.g)
        if (v < 0 || v >= c.fiber_order) throw input_error("g entry out of fiber range");
}

struct Recorder {
    AxiomReport& report;
    bool exhaustive;
    void operator()(const std::string& axiom, std::vector<int> witness) {
        report.violations.push_back({axiom, std::move(witness)});
    }
    bool stop(const std::string& axiom) const {
        return !exhaustive &&
               std::any_of(report.violations.begin(), report.violations.end(),
                           [&](const Violation& v) { return v.axiom == axiom; });
    }
};

}  // namespace

AxiomReport check_dynamical_cocycle(const FTable& base, const DynamicalCocycle& c, Level level,
                                    bool exhaustive) {
    if (level == Level::Shelf) throw input_error("dynamical cocycle levels are rack/quandle/crossed");
    check_cocycle_shape(base, c);
    AxiomReport report;
    report.level_requested = level;
    Recorder rec{report, exhaustive};
    const int n = base.n, A = c.fiber_order;

    // (2): a -> alpha_{x,y}(a,b) bijective for every x, y, b.
    for (int x = 0; x < n && !rec.stop("D2"); ++x)
        for (int y = 0; y < n && !rec.stop("D2"); ++y)
            for (int b = 0; b < A && !rec.stop("D2"); ++b) {
                std::vector<bool> seen(A, false);
                for (int a = 0; a < A; ++a) seen[c.alpha[x][y][a][b]] = true;
                if (std::find(seen.begin(), seen.end(), false) != seen.end()) rec("D2", {x, y, b});
            }
    // (3): alpha_{x*y,f(z)}(alpha_{x,y}(a,b), g(c)) =
    //      alpha_{x*z,y*z}(alpha_{x,z}(a,c), alpha_{y,z}(b,c)).
    for (int x = 0; x < n && !rec.stop("D3"); ++x)
        for (int y = 0; y < n && !rec.stop("D3"); ++y)
            for (int z = 0; z < n && !rec.stop("D3"); ++z)
                for (int a = 0; a < A && !rec.stop("D3"); ++a)
                    for (int b = 0; b < A && !rec.stop("D3"); ++b)
                        for (int cc = 0; cc < A && !rec.stop("D3"); ++cc) {
                            int lhs = c.alpha[base.at(x, y)][base.f(z)][c.alpha[x][y][a][b]][c.g[cc]];
                            int rhs = c.alpha[base.at(x, z)][base.at(y, z)][c.alpha[x][z][a][cc]]
                                             [c.alpha[y][z][b][cc]];
                            if (lhs != rhs) rec("D3", {x, y, z, a, b, cc});
                        }
    if (level >= Level::Quandle) {
        // (1): alpha_{x,x}(a,a) = g(a).
        for (int x = 0; x < n && !rec.stop("D1"); ++x)
            for (int a = 0; a < A && !rec.stop("D1"); ++a)
                if (c.alpha[x][x][a][a] != c.g[a]) rec("D1", {x, a});
    }
    if (level >= Level::Crossed) {
        for (int x = 0; x < n && !rec.stop("Dcrossed"); ++x)
            for (int y = 0; y < n && !rec.stop("Dcrossed"); ++y)
                for (int a = 0; a < A && !rec.stop("Dcrossed"); ++a)
                    for (int b = 0; b < A && !rec.stop("Dcrossed"); ++b)
                        if (base.at(y, x) == base.f(y) && c.alpha[y][x][b][a] == c.g[b] &&
                            (base.at(x, y) != base.f(x) || c.alpha[x][y][a][b] != c.g[a]))
                            rec("Dcrossed", {x, y, a, b});
    }
    report.passed = report.violations.empty();
    return report;
}

FTable build_extension(const FTable& base, const DynamicalCocycle& c) {
    check_cocycle_shape(base, c);
    const int n = base.n, A = c.fiber_order, N = n * A;
    FTable out{N, std::vector<std::vector<int>>(N, std::vector<int>(N))};
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < A; ++a)
            for (int y = 0; y < n; ++y)
                for (int b = 0; b < A; ++b)
                    out.table[x * A + a][y * A + b] = base.at(x, y) * A + c.alpha[x][y][a][b];
    return out;
}

AxiomReport check_constant_cocycle(const FTable& base,
                                   const std::vector<std::vector<std::vector<int>>>& lambda,
                                   Level level, bool exhaustive) {
    const int n = base.n;
    if (static_cast<int>(lambda.size()) != n) throw input_error("lambda has wrong shape");
    int A = -1;
    for (const auto& row : lambda) {
        if (static_cast<int>(row.size()) != n) throw input_error("lambda has wrong shape");
        for (const auto& perm : row) {
            if (A < 0) A = static_cast<int>(perm.size());
            if (static_cast<int>(perm.size()) != A) throw input_error("lambda entries differ in size");
            std::vector<bool> seen(A, false);
            for (int v : perm) {
                if (v < 0 || v >= A || seen[v]) throw input_error("lambda entry is not a permutation");
                seen[v] = true;
            }
        }
    }
    AxiomReport report;
    report.level_requested = level;
    Recorder rec{report, exhaustive};
    auto is_id = [&](const std::vector<int>& p) {
        for (int i = 0; i < A; ++i)
            if (p[i] != i) return false;
        return true;
    };
    for (int x = 0; x < n && !rec.stop("L-rack"); ++x)
        for (int y = 0; y < n && !rec.stop("L-rack"); ++y)
            for (int z = 0; z < n && !rec.stop("L-rack"); ++z)
                for (int a = 0; a < A; ++a) {
                    int lhs = lambda[base.at(x, y)][base.f(z)][lambda[x][y][a]];
                    int rhs = lambda[base.at(x, z)][base.at(y, z)][lambda[x][z][a]];
                    if (lhs != rhs) {
                        rec("L-rack", {x, y, z, a});
                        break;
                    }
                }
    if (level >= Level::Quandle) {
        for (int x = 0; x < n && !rec.stop("L-quandle"); ++x)
            if (!is_id(lambda[x][x])) rec("L-quandle", {x});
    }
    if (level >= Level::Crossed) {
        for (int x = 0; x < n && !rec.stop("L-crossed"); ++x)
            for (int y = 0; y < n && !rec.stop("L-crossed"); ++y) {
                if (base.at(y, x) != base.f(y)) continue;
                bool fixes = false;
                for (int b = 0; b < A; ++b)
                    if (lambda[y][x][b] == b) fixes = true;
                if (fixes && !is_id(lambda[x][y])) rec("L-crossed", {x, y});
            }
    }
    report.passed = report.violations.empty();
    return report;
}

namespace {

void check_module_shape(const FTable& base, const ModuleData& md, bool need_kappa) {
    if (md.base_order != base.n) throw input_error("module base order mismatch");
    if (md.m <= 0) throw input_error("module modulus must be positive");
    auto check_table = [&](const std::vector<std::vector<int>>& tab, const char* name) {
        if (static_cast<int>(tab.size()) != base.n) throw input_error(std::string(name) + " has wrong shape");
        for (const auto& row : tab) {
            if (static_cast<int>(row.size()) != base.n)
                throw input_error(std::string(name) + " has wrong shape");
            for (int v : row)
                if (v < 0 || v >= md.m) throw input_error(std::string(name) + " entry out of range");
        }
    };
    check_table(md.eta, "eta");
    check_table(md.tau, "tau");
    for (const auto& row : md.eta)
        for (int v : row)
            if (gcd_int(v, md.m) != 1) throw input_error("eta entry is not a unit mod m");
    if (need_kappa) {
        if (!md.kappa) throw input_error("kappa is required");
        check_table(*md.kappa, "kappa");
    } else if (md.kappa) {
        check_table(*md.kappa, "kappa");
    }
}

}  // namespace

AxiomReport check_module(const FTable& base, const ModuleData& md, bool quandle_extra,
                         bool exhaustive) {
    check_module_shape(base, md, false);
    if (!validate(base, Level::Rack).passed)
        throw input_error("check_module requires a base passing rack validation");
    AxiomReport report;
    report.level_requested = Level::Rack;
    Recorder rec{report, exhaustive};
    const int n = base.n, m = md.m;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int xy = base.at(x, y), fz = base.f(z);
                int xz = base.at(x, z), yz = base.at(y, z);
                // Eq. (4)
                int l4 = mod_norm(static_cast<long long>(md.eta[xy][fz]) * md.eta[x][y], m);
                int r4 = mod_norm(static_cast<long long>(md.eta[xz][yz]) * md.eta[x][z], m);
                if (l4 != r4 && !rec.stop("eq4")) rec("eq4", {x, y, z, l4, r4});
                // Eq. (5)
                int l5 = mod_norm(static_cast<long long>(md.eta[xy][fz]) * md.tau[x][y], m);
                int r5 = mod_norm(static_cast<long long>(md.tau[xz][yz]) * md.eta[y][z], m);
                if (l5 != r5 && !rec.stop("eq5")) rec("eq5", {x, y, z, l5, r5});
                // Eq. (6)
                int l6 = mod_norm(static_cast<long long>(md.tau[xy][fz]) * md.g, m);
                int r6 = mod_norm(static_cast<long long>(md.eta[xz][yz]) * md.tau[x][z] +
                                      static_cast<long long>(md.tau[xz][yz]) * md.tau[y][z],
                                  m);
                if (l6 != r6 && !rec.stop("eq6")) rec("eq6", {x, y, z, l6, r6});
            }
    if (quandle_extra) {
        for (int x = 0; x < n && !rec.stop("quandle-module"); ++x) {
            int fx = base.f(x);
            int lhs = mod_norm(static_cast<long long>(md.tau[fx][fx]) * md.g, m);
            int rhs = mod_norm(static_cast<long long>(md.eta[fx][fx] + md.tau[fx][fx]) * md.tau[x][x], m);
            if (lhs != rhs) rec("quandle-module", {x, lhs, rhs});
        }
    }
    report.passed = report.violations.empty();
    return report;
}

Gen2CocycleReport check_generalized_2cocycle(const FTable& base, const ModuleData& md,
                                             bool exhaustive) {
    check_module_shape(base, md, true);
    Gen2CocycleReport out;
    out.eq8.level_requested = Level::Rack;
    Recorder rec{out.eq8, exhaustive};
    const auto& kappa = *md.kappa;
    const int n = base.n, m = md.m;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int xy = base.at(x, y), fz = base.f(z);
                int xz = base.at(x, z), yz = base.at(y, z);
                int lhs = mod_norm(static_cast<long long>(md.eta[xy][fz]) * kappa[x][y] + kappa[xy][fz], m);
                int rhs = mod_norm(static_cast<long long>(md.eta[xz][yz]) * kappa[x][z] +
                                       static_cast<long long>(md.tau[xz][yz]) * kappa[y][z] + kappa[xz][yz],
                                   m);
                if (lhs != rhs && !rec.stop("eq8")) rec("eq8", {x, y, z, lhs, rhs});
            }
    out.eq8.passed = out.eq8.violations.empty();
    out.kappa_diag_zero = true;
    for (int z = 0; z < n; ++z)
        if (kappa[z][z] != 0) out.kappa_diag_zero = false;
    return out;
}

DynamicalCocycle module_to_dynamical(const FTable& base, const ModuleData& md) {
    check_module_shape(base, md, false);
    DynamicalCocycle c;
    c.base_order = base.n;
    c.fiber_order = md.m;
    c.alpha.assign(base.n,
                   std::vector<std::vector<std::vector<int>>>(
                       base.n, std::vector<std::vector<int>>(md.m, std::vector<int>(md.m, 0))));
    for (int x = 0; x < base.n; ++x)
        for (int y = 0; y < base.n; ++y) {
            int kap = md.kappa ? (*md.kappa)[x][y] : 0;
            for (int a = 0; a < md.m; ++a)
                for (int b = 0; b < md.m; ++b)
                    c.alpha[x][y][a][b] =
                        mod_norm(static_cast<long long>(md.eta[x][y]) * a +
                                     static_cast<long long>(md.tau[x][y]) * b + kap,
                                 md.m);
        }
    c.g.resize(md.m);
    for (int a = 0; a < md.m; ++a) c.g[a] = mod_norm(static_cast<long long>(md.g) * a, md.m);
    return c;
}

GroupCocycleImport import_group_2cocycle(const GroupTable& G, int mA,
                                         const std::vector<int>& action,
                                         const std::vector<std::vector<int>>& theta,
                                         const std::vector<int>& f, int g_scalar) {
    const int n = G.n;
    if (mA <= 0) throw input_error("fiber modulus must be positive");
    if (static_cast<int>(action.size()) != n) throw input_error("action has wrong length");
    for (int v : action)
        if (gcd_int(mod_norm(v, mA), mA) != 1) throw input_error("action value is not a unit mod mA");
    if (static_cast<int>(theta.size()) != n) throw input_error("theta has wrong shape");
    for (const auto& row : theta)
        if (static_cast<int>(row.size()) != n) throw input_error("theta has wrong shape");
    if (!G.is_endomorphism(f)) throw input_error("f is not a group endomorphism");
    // action must be a homomorphism into the units of Z_mA.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (mod_norm(static_cast<long long>(action[x]) * action[y], mA) !=
                mod_norm(action[G.op(x, y)], mA))
                throw input_error("action is not a group homomorphism");
    // Normalized group 2-cocycle condition.
    for (int y = 0; y < n; ++y)
        if (mod_norm(theta[G.identity][y], mA) != 0 || mod_norm(theta[y][G.identity], mA) != 0)
            throw input_error("theta is not normalized (theta(e,-) = theta(-,e) = 0 required)");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (mod_norm(theta[x][y] + theta[G.op(x, y)][z], mA) !=
                    mod_norm(static_cast<long long>(action[x]) * theta[y][z] + theta[x][G.op(y, z)], mA))
                    throw input_error("theta fails the group 2-cocycle condition");
    // Compatibility: g(x.b) = f(x).g(b) and g(theta(x,y)) = theta(f(x),f(y)).
    for (int x = 0; x < n; ++x)
        if (mod_norm(static_cast<long long>(g_scalar) * action[x], mA) !=
            mod_norm(static_cast<long long>(action[f[x]]) * g_scalar, mA))
            throw input_error("g is not compatible with the action and f");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (mod_norm(static_cast<long long>(g_scalar) * theta[x][y], mA) !=
                mod_norm(theta[f[x]][f[y]], mA))
                throw input_error("g(theta(x,y)) != theta(f(x),f(y))");

    // Build E = A x_theta G on pairs (a,x) indexed a*n + x.
    const int N = mA * n;
    auto emul = [&](int p, int q) {
        int a = p / n, x = p % n, b = q / n, y = q % n;
        int av = mod_norm(a + static_cast<long long>(action[x]) * b + theta[x][y], mA);
        return av * n + G.op(x, y);
    };
    const int e = G.identity;  // identity of E is (0, e) thanks to normalization
    std::vector<int> einv(N, -1);
    for (int p = 0; p < N; ++p)
        for (int q = 0; q < N; ++q)
            if (emul(p, q) == e && emul(q, p) == e) { einv[p] = q; break; }
    for (int p = 0; p < N; ++p)
        if (einv[p] < 0) throw input_error("internal: E element without inverse");
    auto F = [&](int p) {
        int a = p / n, x = p % n;
        return mod_norm(static_cast<long long>(g_scalar) * a, mA) * n + f[x];
    };
    auto op = [&](int p, int q) { return emul(emul(einv[q], p), F(q)); };

    FTable base = make_conjugation(G, f, ConjVariant::Plain);

    GroupCocycleImport out;
    out.data.base_order = n;
    out.data.m = mA;
    out.data.eta.assign(n, std::vector<int>(n, 0));
    out.data.tau.assign(n, std::vector<int>(n, 0));
    out.data.kappa = std::vector<std::vector<int>>(n, std::vector<int>(n, 0));
    out.data.g = mod_norm(g_scalar, mA);
    out.decomposition_exact = true;
    out.eta_matches_closed_form = true;
    out.tau_matches_closed_form = true;
    out.kappa_matches_closed_form = true;

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto fiber = [&](int a, int b) {
                int r = op(a * n + x, b * n + y);
                if (r % n != base.at(x, y))
                    throw input_error("internal: extension base component mismatch");
                return r / n;
            };
            int c00 = fiber(0, 0);
            int eta_v = mA == 1 ? 1 : mod_norm(fiber(1, 0) - c00, mA);
            int tau_v = mA == 1 ? 0 : mod_norm(fiber(0, 1) - c00, mA);
            out.data.eta[x][y] = eta_v;
            out.data.tau[x][y] = tau_v;
            (*out.data.kappa)[x][y] = c00;
            for (int a = 0; a < mA; ++a)
                for (int b = 0; b < mA; ++b)
                    if (fiber(a, b) != mod_norm(static_cast<long long>(eta_v) * a +
                                                    static_cast<long long>(tau_v) * b + c00,
                                                mA))
                        out.decomposition_exact = false;
            // Printed closed forms, with the recorded substitutions: f(b) on
            // the fiber read as g(b), and g(y) on the base read as f(y).
            int yin = G.inv[y];
            int eta_p = mod_norm(action[yin], mA);
            int tau_p = mod_norm(static_cast<long long>(action[G.op(yin, x)]) * g_scalar - action[yin], mA);
            int kap_p = mod_norm(-theta[yin][y] + theta[yin][x] +
                                     static_cast<long long>(theta[G.op(yin, x)][f[y]]),
                                 mA);
            if (eta_p != eta_v) out.eta_matches_closed_form = false;
            if (tau_p != tau_v) out.tau_matches_closed_form = false;
            if (kap_p != c00) out.kappa_matches_closed_form = false;
        }
    return out;
}

}  // namespace fq
