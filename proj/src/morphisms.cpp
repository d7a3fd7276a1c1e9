#include "fquandle/morphisms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fq {

bool is_homomorphism(const FTable& src, const FTable& dst, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != src.n) throw input_error("map has wrong length");
    for (int v : map)
        if (v < 0 || v >= dst.n) throw input_error("map entry out of target range");
    for (int x = 0; x < src.n; ++x) {
        if (map[src.f(x)] != dst.f(map[x])) return false;
        for (int y = 0; y < src.n; ++y)
            if (map[src.at(x, y)] != dst.at(map[x], map[y])) return false;
    }
    return true;
}

namespace {

// Backtracking search for bijective homomorphisms src -> dst (same order).
// Assigns phi(0), phi(1), ... and prunes as soon as a product constraint
// among assigned elements fails.  Calls emit(map) for each full solution in
// lexicographic order; emit returns false to stop the search.
template <typename Emit>
void search_bijections(const FTable& src, const FTable& dst, Emit emit) {
    const int n = src.n;
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);

    auto consistent = [&](int last) {
        // Check every constraint that becomes decidable once `last` is set.
        if (map[src.f(last)] != -1 && map[src.f(last)] != dst.f(map[last])) return false;
        for (int x = 0; x <= last; ++x) {
            for (int y = 0; y <= last; ++y) {
                int p = src.at(x, y);
                if (x != last && y != last && p != last) continue;
                if (map[x] == -1 || map[y] == -1 || map[p] == -1) continue;
                if (map[p] != dst.at(map[x], map[y])) return false;
            }
        }
        return true;
    };

    bool stop = false;
    auto rec = [&](auto&& self, int k) -> void {
        if (stop) return;
        if (k == n) {
            if (!emit(map)) stop = true;
            return;
        }
        for (int v = 0; v < n && !stop; ++v) {
            if (used[v]) continue;
            map[k] = v;
            used[v] = true;
            // Constraints may involve products src.at(x,y) > k; `consistent`
            // only checks decidable ones, the rest are caught deeper or by
            // the final full check below.
            if (consistent(k)) self(self, k + 1);
            used[v] = false;
            map[k] = -1;
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<Morphism> automorphism_group(const FTable& t) {
    std::vector<Morphism> result;
    search_bijections(t, t, [&](const std::vector<int>& map) {
        if (is_homomorphism(t, t, map)) result.push_back({t.n, t.n, map});
        return true;
    });
    return result;  // emitted in lexicographic order by construction
}

FTable twist(const FTable& t, const Morphism& phi) {
    if (phi.source_order != t.n || phi.target_order != t.n)
        throw input_error("twist: morphism order mismatch");
    if (!is_homomorphism(t, t, phi.map)) throw input_error("twist: phi is not a homomorphism of t");
    std::vector<bool> seen(t.n, false);
    for (int v : phi.map) seen[v] = true;
    for (int x = 0; x < t.n; ++x)
        if (!seen[x]) {
            std::ostringstream msg;
            msg << "twist: phi is not surjective (misses " << x << ")";
            throw input_error(msg.str());
        }
    FTable out{t.n, std::vector<std::vector<int>>(t.n, std::vector<int>(t.n))};
    for (int x = 0; x < t.n; ++x)
        for (int y = 0; y < t.n; ++y) out.table[x][y] = phi.map[t.at(x, y)];
    return out;
}

std::optional<Morphism> find_isomorphism(const FTable& a, const FTable& b) {
    if (a.n != b.n) return std::nullopt;
    // Cheap invariant prune: the multiset of diagonal images must agree in
    // size structure (number of distinct f-values).
    auto distinct_f = [](const FTable& t) {
        std::vector<int> f = derived_f(t);
        std::sort(f.begin(), f.end());
        return std::unique(f.begin(), f.end()) - f.begin();
    };
    if (distinct_f(a) != distinct_f(b)) return std::nullopt;
    std::optional<Morphism> found;
    search_bijections(a, b, [&](const std::vector<int>& map) {
        if (is_homomorphism(a, b, map)) {
            found = Morphism{a.n, b.n, map};
            return false;  // lexicographically first
        }
        return true;
    });
    return found;
}

std::optional<std::pair<Morphism, Morphism>> twisted_isomorphic(const FTable& a, const FTable& b) {
    for (const Morphism& phi : automorphism_group(a)) {
        FTable tw = twist(a, phi);
        if (auto psi = find_isomorphism(tw, b)) return std::make_pair(phi, *psi);
    }
    return std::nullopt;
}

FTable relabel(const FTable& t, const std::vector<int>& sigma) {
    const int n = t.n;
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[sigma[i]] = i;
    FTable out{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.table[i][j] = sigma[t.at(inv[i], inv[j])];
    return out;
}

FTable canonical_form(const FTable& t) {
    if (t.n > 8) throw input_error("canonical_form supports order <= 8");
    std::vector<int> sigma(t.n);
    std::iota(sigma.begin(), sigma.end(), 0);
    FTable best = t;
    do {
        FTable cand = relabel(t, sigma);
        if (cand.table < best.table) best = std::move(cand);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return best;
}

}  // namespace fq
