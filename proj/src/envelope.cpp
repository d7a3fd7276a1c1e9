#include "fquandle/envelope.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace fq {

std::vector<int> free_reduce(std::vector<int> word) {
    std::vector<int> out;
    for (int w : word) {
        if (!out.empty() && out.back() == -w)
            out.pop_back();
        else
            out.push_back(w);
    }
    return out;
}

Presentation enveloping_presentation(const FTable& t) {
    if (!validate(t, Level::Rack).passed)
        throw input_error("enveloping_presentation requires a table passing rack validation");
    Presentation p;
    p.generator_count = t.n;
    p.all_relators_abelian_trivial = true;
    for (int x = 0; x < t.n; ++x)
        for (int y = 0; y < t.n; ++y) {
            // x*y = f(y) x y^{-1}  <=>  (x*y) . y . x^{-1} . f(y)^{-1} = 1
            std::vector<int> word = {t.at(x, y) + 1, y + 1, -(x + 1), -(t.f(y) + 1)};
            p.freely_trivial.push_back(free_reduce(word).empty());
            std::vector<int> expsum(t.n, 0);
            for (int w : word) expsum[std::abs(w) - 1] += (w > 0 ? 1 : -1);
            for (int s : expsum)
                if (s != 0) p.all_relators_abelian_trivial = false;
            p.relators.push_back(std::move(word));
        }
    return p;
}

std::string presentation_text(const Presentation& p) {
    std::ostringstream os;
    os << "F := FreeGroup(" << p.generator_count << ");\n";
    os << "rels := [";
    for (size_t r = 0; r < p.relators.size(); ++r) {
        if (r) os << ",";
        os << " ";
        const auto& word = p.relators[r];
        if (word.empty()) {
            os << "One(F)";
        } else {
            for (size_t i = 0; i < word.size(); ++i) {
                if (i) os << "*";
                int w = word[i];
                os << "F." << std::abs(w);
                if (w < 0) os << "^-1";
            }
        }
    }
    os << " ];\n";
    return os.str();
}

namespace {

// One quotient step; returns the quotient table and whether t changed.
FTable quotient_once(const FTable& t, bool& changed) {
    const int n = t.n;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    // x ~ x' iff exists y with x*y = f(x') and y*x = f(y); the symmetric and
    // transitive closure is handled by union-find.
    for (int x = 0; x < n; ++x)
        for (int xp = 0; xp < n; ++xp)
            for (int y = 0; y < n; ++y)
                if (t.at(x, y) == t.f(xp) && t.at(y, x) == t.f(y)) unite(x, xp);

    std::vector<int> cls(n, -1);
    int k = 0;
    for (int x = 0; x < n; ++x)
        if (find(x) == x) cls[x] = k++;
    for (int x = 0; x < n; ++x) cls[x] = cls[find(x)];
    changed = (k != n);
    if (!changed) return t;

    std::vector<std::vector<int>> out(k, std::vector<int>(k, -1));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int v = cls[t.at(x, y)];
            int& cell = out[cls[x]][cls[y]];
            if (cell == -1) {
                cell = v;
            } else if (cell != v) {
                std::ostringstream msg;
                msg << "quotient operation ill-defined: representatives (" << x << "," << y
                    << ") map class (" << cls[x] << "," << cls[y] << ") to both " << cell << " and "
                    << v;
                throw input_error(msg.str());
            }
        }
    return FTable{k, std::move(out)};
}

}  // namespace

std::pair<FTable, int> quotient_crossed_set(const FTable& t) {
    if (!validate(t, Level::Quandle).passed)
        throw input_error("quotient_crossed_set requires a table passing quandle validation");
    FTable cur = t;
    int iterations = 0;
    while (!validate(cur, Level::Crossed).passed) {
        bool changed = false;
        FTable next = quotient_once(cur, changed);
        if (!changed)
            throw input_error("quotient stalled: relation is trivial but table is not crossed");
        cur = std::move(next);
        ++iterations;
    }
    return {cur, iterations};
}

}  // namespace fq
