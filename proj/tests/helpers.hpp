#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnotopt/pipeline.hpp"
#include "cnotopt/rng.hpp"

namespace testutil {

using namespace cnotopt;

/// The 5x5 working example used across the suite.
inline BitMatrix dense5() {
    return BitMatrix::from_rows({{1, 1, 0, 1, 1},
                                 {0, 0, 1, 1, 0},
                                 {1, 0, 1, 0, 1},
                                 {1, 1, 0, 1, 0},
                                 {1, 1, 1, 1, 0}});
}

/// The permutation factor of its published 7-op decomposition.
inline BitMatrix dense5_perm_matrix() {
    return BitMatrix::from_rows({{0, 0, 0, 0, 1},
                                 {0, 0, 0, 1, 0},
                                 {1, 0, 0, 0, 0},
                                 {0, 1, 0, 0, 0},
                                 {0, 0, 1, 0, 0}});
}

/// Its published RowAdd factors in product order (execution order reversed):
/// A = P * E(3+2) * E(5+2) * E(1+3) * E(1+5) * E(2+1) * E(4+3) * E(2+4).
inline OpSequence dense5_published_seq() {
    auto add1 = [](int i, int j) { return ElementaryOp::row_add(i - 1, j - 1); };
    return {add1(3, 2), add1(5, 2), add1(1, 3), add1(1, 5),
            add1(2, 1), add1(4, 3), add1(2, 4)};
}

inline Decomposition dense5_published_decomposition() {
    return {*permutation_of(dense5_perm_matrix()), dense5_published_seq()};
}

/// T-shaped 5-vertex constraint graph: edges 1-2, 2-3, 3-4, 3-5 (1-based).
inline ArchitectureGraph t_graph() {
    return parse_architecture("qubits 5\nedge 1 2\nedge 2 3\nedge 3 4\nedge 3 5\n");
}

/// The published optimal assignment on the T graph:
/// v1->2, v2->3, v3->5, v4->4, v5->1 (1-based).
inline Placement t_graph_best_placement() {
    return Placement{{1, 2, 4, 3, 0}};
}

/// Random invertible matrix built as a product of seeded row additions.
inline BitMatrix random_invertible(int n, std::uint64_t seed, int ops = 0) {
    Rng rng(seed);
    if (ops == 0) ops = 3 * n;
    BitMatrix m = BitMatrix::identity(n);
    for (int t = 0; t < ops; ++t) {
        const int i = rng.below_int(n);
        int j = rng.below_int(n - 1);
        if (j >= i) ++j;
        m.xor_row(i, j);
    }
    return m;
}

inline OpSequence random_rowadds(int n, int len, std::uint64_t seed) {
    Rng rng(seed);
    OpSequence seq;
    for (int t = 0; t < len; ++t) {
        const int i = rng.below_int(n);
        int j = rng.below_int(n - 1);
        if (j >= i) ++j;
        seq.push_back(ElementaryOp::row_add(i, j));
    }
    return seq;
}

/// Random connected architecture on n vertices: a random tree plus extras.
inline ArchitectureGraph random_connected_graph(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::set<std::pair<int, int>> edge_set;
    for (int v = 1; v < n; ++v) {
        const int u = rng.below_int(v);
        edge_set.emplace(u, v);
    }
    const int extras = rng.below_int(n);
    for (int t = 0; t < extras; ++t) {
        const int u = rng.below_int(n);
        int v = rng.below_int(n - 1);
        if (v >= u) ++v;
        edge_set.emplace(std::min(u, v), std::max(u, v));
    }
    return make_architecture(n, {edge_set.begin(), edge_set.end()}, "random");
}

inline InteractionGraph random_interaction_graph(int n_logical, int n_edges,
                                                 std::uint64_t seed) {
    Rng rng(seed);
    std::map<std::pair<int, int>, std::int64_t> weights;
    for (int t = 0; t < n_edges; ++t) {
        const int u = rng.below_int(n_logical);
        int v = rng.below_int(n_logical - 1);
        if (v >= u) ++v;
        weights[{std::min(u, v), std::max(u, v)}] += 1 + rng.below_int(3);
    }
    InteractionGraph ig;
    ig.n = n_logical;
    for (const auto& [pair, w] : weights) ig.edges.push_back({pair.first, pair.second, w});
    return ig;
}

/// Minimal evaluator for the exported LP text: reads the objective terms and
/// the z -> (y, y) linking structure back out of the `.lp` file, then brute
/// forces all injective assignments. Independent of the model builder's
/// in-memory data.
class LpBruteForce {
  public:
    explicit LpBruteForce(const std::string& lp_text) {
        std::istringstream in(lp_text);
        std::string line;
        enum { None, Objective, Constraints } section = None;
        std::string pending;
        while (std::getline(in, line)) {
            if (line.rfind("\\", 0) == 0) continue;
            if (line == "Minimize") { section = Objective; continue; }
            if (line == "Subject To") { section = Constraints; continue; }
            if (line == "Binary" || line == "End") { section = None; continue; }
            if (section == Objective) parse_objective_chunk(line);
            if (section == Constraints) parse_constraint_chunk(line);
        }
        for (const auto& [name, coeff] : objective_) {
            int v = 0, p = 0, q = 0, e = 0;
            if (std::sscanf(name.c_str(), "z_%d_%d_%d", &e, &p, &q) == 3) continue;
            if (std::sscanf(name.c_str(), "y_%d_%d", &v, &p) == 2) continue;
            throw std::runtime_error("unexpected objective variable " + name);
        }
    }

    /// Minimum objective over all injective assignments of the logical
    /// qubits mentioned by y variables onto the physical vertices.
    std::int64_t minimize() const {
        std::vector<int> assign(static_cast<std::size_t>(n_logical_), -1);
        std::vector<char> used(static_cast<std::size_t>(n_physical_ + 1), 0);
        std::int64_t best = -1;
        minimize_rec(assign, used, 0, best);
        return best;
    }

    int n_logical() const { return n_logical_; }
    int n_physical() const { return n_physical_; }

  private:
    std::map<std::string, std::int64_t> objective_;
    // z name -> the two y variables (v, p) it links
    std::map<std::string, std::array<std::array<int, 2>, 2>> links_;
    int n_logical_ = 0;
    int n_physical_ = 0;

    void note_y(int v, int p) {
        n_logical_ = std::max(n_logical_, v);
        n_physical_ = std::max(n_physical_, p);
    }

    void parse_objective_chunk(const std::string& line) {
        std::istringstream ls(line);
        std::string token;
        std::int64_t coeff = 1;
        while (ls >> token) {
            if (token == "obj:" || token == "+") { coeff = 1; continue; }
            if (token == "-") { coeff = -1; continue; }
            if (std::isdigit(static_cast<unsigned char>(token[0]))) {
                coeff *= std::stoll(token);
                continue;
            }
            objective_[token] += coeff;
            coeff = 1;
        }
    }

    void parse_constraint_chunk(const std::string& line) {
        std::istringstream ls(line);
        std::string token;
        std::string z;
        std::vector<std::array<int, 2>> ys;
        while (ls >> token) {
            if (token.rfind("z_", 0) == 0) z = token;
            int v = 0, p = 0;
            if (std::sscanf(token.c_str(), "y_%d_%d", &v, &p) == 2) {
                ys.push_back({v, p});
                note_y(v, p);
            }
        }
        if (!z.empty() && ys.size() == 2) links_[z] = {ys[0], ys[1]};
    }

    void minimize_rec(std::vector<int>& assign, std::vector<char>& used, int v,
                      std::int64_t& best) const {
        if (v == n_logical_) {
            std::int64_t total = 0;
            for (const auto& [name, coeff] : objective_) {
                const auto link = links_.find(name);
                if (link == links_.end()) continue;
                const auto& [ya, yb] = link->second;
                const bool za = assign[static_cast<std::size_t>(ya[0] - 1)] == ya[1];
                const bool zb = assign[static_cast<std::size_t>(yb[0] - 1)] == yb[1];
                if (za && zb) total += coeff;
            }
            if (best < 0 || total < best) best = total;
            return;
        }
        for (int p = 1; p <= n_physical_; ++p) {
            if (used[static_cast<std::size_t>(p)]) continue;
            used[static_cast<std::size_t>(p)] = 1;
            assign[static_cast<std::size_t>(v)] = p;
            minimize_rec(assign, used, v + 1, best);
            used[static_cast<std::size_t>(p)] = 0;
        }
    }
};

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace testutil
