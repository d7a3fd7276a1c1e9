#include "fquandle/classify.hpp"

#include <algorithm>
#include <map>

#include "fquandle/morphisms.hpp"

namespace fq {

bool f_bijective(const FTable& t) {
    std::vector<bool> seen(t.n, false);
    for (int x = 0; x < t.n; ++x) {
        if (seen[t.f(x)]) return false;
        seen[t.f(x)] = true;
    }
    return true;
}

std::vector<FTable> abelian_group_tables(int n) {
    std::vector<FTable> out;
    FTable zn{n, std::vector<std::vector<int>>(n, std::vector<int>(n))};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) zn.table[a][b] = (a + b) % n;
    out.push_back(std::move(zn));
    if (n == 4) {
        FTable k4{4, std::vector<std::vector<int>>(4, std::vector<int>(4))};
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) k4.table[a][b] = a ^ b;
        out.push_back(std::move(k4));
    }
    return out;
}

namespace {

struct Enumerator {
    int n;
    FTable t;
    std::vector<FTable> out;

    explicit Enumerator(int n_) : n(n_), t{n_, std::vector<std::vector<int>>(n_, std::vector<int>(n_, -1))} {}

    // Axiom I instances decidable from the currently assigned cells, plus
    // axiom-II column feasibility (no repeated value per needed target, and
    // enough free cells left to realize each f-image exactly once).
    bool feasible() const {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int a = t.table[x][y];
                if (a < 0) continue;
                for (int z = 0; z < n; ++z) {
                    int fz = t.table[z][z];
                    if (fz < 0) continue;
                    int b = t.table[x][z], c = t.table[y][z];
                    if (b < 0 || c < 0) continue;
                    int lhs = t.table[a][fz], rhs = t.table[b][c];
                    if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
                }
            }
        // Column counts: every f-image must appear exactly once per column.
        for (int y = 0; y < n; ++y) {
            int free_cells = 0;
            std::vector<int> count(n, 0);
            for (int z = 0; z < n; ++z) {
                int v = t.table[z][y];
                if (v < 0)
                    ++free_cells;
                else
                    ++count[v];
            }
            int deficit = 0;
            std::vector<bool> image(n, false);
            bool diagonal_complete = true;
            for (int x = 0; x < n; ++x) {
                int fx = t.table[x][x];
                if (fx < 0) { diagonal_complete = false; continue; }
                image[fx] = true;
            }
            for (int v = 0; v < n; ++v) {
                if (image[v]) {
                    if (count[v] > 1) return false;
                    if (count[v] == 0) ++deficit;
                }
            }
            if (diagonal_complete && deficit > free_cells) return false;
        }
        return true;
    }

    void fill_cells(int k, const std::vector<std::pair<int, int>>& cells) {
        if (k == static_cast<int>(cells.size())) {
            if (validate(t, Level::Quandle).passed) out.push_back(t);
            return;
        }
        auto [i, j] = cells[k];
        for (int v = 0; v < n; ++v) {
            t.table[i][j] = v;
            if (feasible()) fill_cells(k + 1, cells);
            t.table[i][j] = -1;
        }
    }

    void fill_diagonal(int d, const std::vector<std::pair<int, int>>& cells) {
        if (d == n) {
            if (feasible()) fill_cells(0, cells);
            return;
        }
        for (int v = 0; v < n; ++v) {
            t.table[d][d] = v;
            if (feasible()) fill_diagonal(d + 1, cells);
            t.table[d][d] = -1;
        }
    }

    void run() {
        std::vector<std::pair<int, int>> cells;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) cells.emplace_back(i, j);
        fill_diagonal(0, cells);
        std::sort(out.begin(), out.end());
    }
};

}  // namespace

std::vector<FTable> enumerate_all(int n, int cap) {
    if (n <= 0) throw input_error("order must be positive");
    int effective_cap = std::min(cap, kMaxOrderCap);
    if (n > effective_cap)
        throw input_error("order " + std::to_string(n) + " exceeds the enumeration cap of " +
                          std::to_string(effective_cap));
    Enumerator e(n);
    e.run();
    return e.out;
}

Catalog classify(int n, int cap) {
    std::vector<FTable> all = enumerate_all(n, cap);

    Catalog cat;
    cat.order = n;
    // Isomorphism classes via canonical forms.
    std::map<FTable, int> canon_index;
    for (const FTable& t : all) {
        FTable c = canonical_form(t);
        canon_index.emplace(std::move(c), 0);
    }
    int idx = 0;
    for (auto& [c, i] : canon_index) {
        i = idx++;
        cat.tables.push_back(c);
    }
    cat.iso_class_count = static_cast<int>(cat.tables.size());

    // Twisted-isomorphism classes: union-find over iso representatives,
    // merging each representative with the canonical forms of its twists.
    std::vector<int> parent(cat.iso_class_count);
    for (int i = 0; i < cat.iso_class_count; ++i) parent[i] = i;
    auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (int i = 0; i < cat.iso_class_count; ++i)
        for (const Morphism& phi : automorphism_group(cat.tables[i]))
            unite(i, canon_index.at(canonical_form(twist(cat.tables[i], phi))));

    std::map<int, std::vector<int>> blocks;
    for (int i = 0; i < cat.iso_class_count; ++i) blocks[find(i)].push_back(i);
    for (auto& [root, members] : blocks) {
        CatalogClass cls;
        cls.members = members;
        cls.contains_quandle = f_bijective(cat.tables[members.front()]);
        cls.is_latin = is_latin(cat.tables[members.front()]);
        cls.is_group_like = false;
        for (int m : members)
            for (const FTable& g : abelian_group_tables(n))
                if (find_isomorphism(cat.tables[m], g)) cls.is_group_like = true;
        cat.classes.push_back(std::move(cls));
    }
    cat.twisted_class_count = static_cast<int>(cat.classes.size());
    return cat;
}

Catalog filter_no_quandle(const Catalog& c) {
    Catalog out;
    out.order = c.order;
    out.tables = c.tables;
    out.iso_class_count = c.iso_class_count;
    for (const CatalogClass& cls : c.classes) {
        bool all_non_bijective = true;
        for (int m : cls.members)
            if (f_bijective(c.tables[m])) all_non_bijective = false;
        if (all_non_bijective) out.classes.push_back(cls);
    }
    out.twisted_class_count = static_cast<int>(out.classes.size());
    return out;
}

}  // namespace fq
