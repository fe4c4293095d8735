#include "cnotopt/rewriter.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <sstream>

namespace cnotopt {

BitMatrix product_matrix(const OpSequence& seq, int n) {
    BitMatrix m = BitMatrix::identity(n);
    // rightmost factor acts first, so build by left-multiplying in reverse
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        if (it->i < 0 || it->i >= n || it->j < 0 || it->j >= n)
            raise(ErrorCode::IndexOutOfRange, "op indices outside dimension");
        m.apply(*it);
    }
    return m;
}

Decomposition push_swaps_left(const OpSequence& seq, int n) {
    Permutation perm(n);
    OpSequence out;
    out.reserve(seq.size());
    for (const ElementaryOp& op : seq) {
        if (op.kind == OpKind::RowAdd) {
            out.push_back(op);
            continue;
        }
        const int a = op.i, b = op.j;
        auto tau = [a, b](int v) { return v == a ? b : (v == b ? a : v); };
        for (ElementaryOp& o : out) {
            o.i = tau(o.i);
            o.j = tau(o.j);
        }
        perm.apply_swap_right(a, b);
    }
    return {std::move(perm), std::move(out)};
}

namespace {

// The six 3-op -> 2-op identities. Role indices: 0 = i, 1 = j, 2 = k. Each
// left side is X * Y * E(i+j) read in product order; the E(i+j) factor fixes
// roles 0 and 1, the X/Y patterns bind role 2.
struct RewriteRule {
    std::array<std::array<int, 2>, 2> lhs;  // X then Y as (row role, col role)
    std::array<std::array<int, 2>, 2> rhs;
};

constexpr std::array<RewriteRule, 6> k_rules = {{
    {{{{{2, 0}}, {{2, 1}}}}, {{{{0, 1}}, {{2, 0}}}}},  // E(k+i)E(k+j)E(i+j) = E(i+j)E(k+i)
    {{{{{0, 2}}, {{2, 1}}}}, {{{{2, 1}}, {{0, 2}}}}},  // E(i+k)E(k+j)E(i+j) = E(k+j)E(i+k)
    {{{{{0, 2}}, {{1, 2}}}}, {{{{0, 1}}, {{1, 2}}}}},  // E(i+k)E(j+k)E(i+j) = E(i+j)E(j+k)
    {{{{{1, 2}}, {{0, 2}}}}, {{{{0, 1}}, {{1, 2}}}}},  // E(j+k)E(i+k)E(i+j) = E(i+j)E(j+k)
    {{{{{2, 1}}, {{2, 0}}}}, {{{{0, 1}}, {{2, 0}}}}},  // E(k+j)E(k+i)E(i+j) = E(i+j)E(k+i)
    {{{{{2, 1}}, {{0, 2}}}}, {{{{0, 2}}, {{2, 1}}}}},  // E(k+j)E(i+k)E(i+j) = E(i+k)E(k+j)
}};

bool bind_role(std::array<int, 3>& roles, std::array<bool, 3>& bound, int role, int index) {
    if (bound[static_cast<std::size_t>(role)])
        return roles[static_cast<std::size_t>(role)] == index;
    roles[static_cast<std::size_t>(role)] = index;
    bound[static_cast<std::size_t>(role)] = true;
    return true;
}

/// Matches the window (x, y, z) against the 3-op rules; on success fills
/// `out` with the two replacement ops.
bool match_triple(const ElementaryOp& x, const ElementaryOp& y, const ElementaryOp& z,
                  std::array<ElementaryOp, 2>& out) {
    for (const RewriteRule& rule : k_rules) {
        std::array<int, 3> roles = {z.i, z.j, -1};
        std::array<bool, 3> bound = {true, true, false};
        const std::array<const ElementaryOp*, 2> window = {&x, &y};
        bool ok = true;
        for (int t = 0; t < 2 && ok; ++t) {
            ok = bind_role(roles, bound, rule.lhs[static_cast<std::size_t>(t)][0], window[static_cast<std::size_t>(t)]->i) &&
                 bind_role(roles, bound, rule.lhs[static_cast<std::size_t>(t)][1], window[static_cast<std::size_t>(t)]->j);
        }
        if (!ok || !bound[2]) continue;
        if (roles[0] == roles[1] || roles[0] == roles[2] || roles[1] == roles[2]) continue;
        for (int t = 0; t < 2; ++t) {
            out[static_cast<std::size_t>(t)] = ElementaryOp::row_add(
                roles[static_cast<std::size_t>(rule.rhs[static_cast<std::size_t>(t)][0])],
                roles[static_cast<std::size_t>(rule.rhs[static_cast<std::size_t>(t)][1])]);
        }
        return true;
    }
    return false;
}

ElementaryOp conjugate(const ElementaryOp& op, int a, int b) {
    auto tau = [a, b](int v) { return v == a ? b : (v == b ? a : v); };
    return {op.kind, tau(op.i), tau(op.j)};
}

/// Generation-stamped membership sets over {0..n-1}; clear() is O(1).
class IndexSet {
  public:
    explicit IndexSet(int n) : stamps_(static_cast<std::size_t>(n), 0) {}
    void clear() { ++gen_; }
    void insert(int v) { stamps_[static_cast<std::size_t>(v)] = gen_; }
    bool contains(int v) const { return stamps_[static_cast<std::size_t>(v)] == gen_; }

  private:
    std::vector<std::uint32_t> stamps_;
    std::uint32_t gen_ = 1;
};

/// One rewrite step. Scans anchors right to left; for each anchor Z it walks
/// candidates Y leftwards, where Y qualifies only if every op strictly
/// between Y and Z commutes with it (so adjacent transpositions can carry Y
/// next to Z). Same bookkeeping for the X candidate. Returns true if a rule
/// fired and the sequence changed.
bool rewrite_step(OpSequence& ops, Permutation& perm, int n) {
    const int m = static_cast<int>(ops.size());
    IndexSet dest_seen(n), src_seen(n), dest_seen2(n), src_seen2(n);
    for (int tz = m - 1; tz > 0; --tz) {
        const ElementaryOp z = ops[static_cast<std::size_t>(tz)];
        dest_seen.clear();
        src_seen.clear();
        for (int ty = tz - 1; ty >= 0; --ty) {
            const ElementaryOp y = ops[static_cast<std::size_t>(ty)];
            const bool movable = !dest_seen.contains(y.j) && !src_seen.contains(y.i);
            const bool shares = y.i == z.i || y.i == z.j || y.j == z.i || y.j == z.j;
            if (movable && shares) {
                if (y.i == z.j && y.j == z.i) {
                    // E(j+i)E(i+j) = E(i<->j)E(j+i); the swap is pushed into the
                    // permutation factor, conjugating everything to its left.
                    const int i = z.i, j = z.j;
                    OpSequence next;
                    next.reserve(ops.size() - 1);
                    for (int t = 0; t < tz; ++t)
                        if (t != ty) next.push_back(conjugate(ops[static_cast<std::size_t>(t)], i, j));
                    next.push_back(ElementaryOp::row_add(j, i));
                    for (int t = tz + 1; t < m; ++t) next.push_back(ops[static_cast<std::size_t>(t)]);
                    perm.apply_swap_right(i, j);
                    ops = std::move(next);
                    return true;
                }
                // assemble the pool X may come from: everything left of Z minus Y
                dest_seen2.clear();
                src_seen2.clear();
                std::array<ElementaryOp, 2> replacement;
                for (int tx = tz - 1; tx >= 0; --tx) {
                    if (tx == ty) continue;
                    const ElementaryOp x = ops[static_cast<std::size_t>(tx)];
                    if (!dest_seen2.contains(x.j) && !src_seen2.contains(x.i) &&
                        match_triple(x, y, z, replacement)) {
                        OpSequence next;
                        next.reserve(ops.size() - 1);
                        for (int t = 0; t < tz; ++t)
                            if (t != tx && t != ty) next.push_back(ops[static_cast<std::size_t>(t)]);
                        next.push_back(replacement[0]);
                        next.push_back(replacement[1]);
                        for (int t = tz + 1; t < m; ++t) next.push_back(ops[static_cast<std::size_t>(t)]);
                        ops = std::move(next);
                        return true;
                    }
                    dest_seen2.insert(x.i);
                    src_seen2.insert(x.j);
                }
            }
            dest_seen.insert(y.i);
            src_seen.insert(y.j);
        }
    }
    return false;
}

#ifndef NDEBUG
const bool k_rules_validated = [] {
    if (!validate_rewrite_rules(4) || !validate_rewrite_rules(5)) std::abort();
    return true;
}();
#endif

}  // namespace

Decomposition rewrite_optimize(const OpSequence& seq, int n) {
    for (const ElementaryOp& op : seq)
        if (op.kind != OpKind::RowAdd)
            raise(ErrorCode::InvalidParams, "sequence must be swap-free");
    Permutation perm(n);
    OpSequence ops = seq;
    while (rewrite_step(ops, perm, n)) {}
    return {std::move(perm), std::move(ops)};
}

Decomposition decompose(const BitMatrix& a) {
    const OpSequence elimination = gauss_jordan(a);
    Decomposition normalized = push_swaps_left(elimination, a.n());
    Decomposition rewritten = rewrite_optimize(normalized.seq, a.n());
    return {perm_product(normalized.perm, rewritten.perm), std::move(rewritten.seq)};
}

bool verify_decomposition(const BitMatrix& a, const Decomposition& d) {
    if (d.perm.size() != a.n())
        raise(ErrorCode::DimensionMismatch, "decomposition size differs from matrix");
    return mat_mul(perm_matrix(d.perm), product_matrix(d.seq, a.n())) == a;
}

bool validate_rewrite_rules(int n) {
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            // R7: E(j+i)E(i+j) = E(i<->j)E(j+i)
            {
                const OpSequence lhs = {ElementaryOp::row_add(j, i), ElementaryOp::row_add(i, j)};
                const OpSequence rhs = {ElementaryOp::swap(i, j), ElementaryOp::row_add(j, i)};
                if (!(product_matrix(lhs, n) == product_matrix(rhs, n))) return false;
            }
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                const std::array<int, 3> roles = {i, j, k};
                for (const RewriteRule& rule : k_rules) {
                    OpSequence lhs = {
                        ElementaryOp::row_add(roles[static_cast<std::size_t>(rule.lhs[0][0])],
                                              roles[static_cast<std::size_t>(rule.lhs[0][1])]),
                        ElementaryOp::row_add(roles[static_cast<std::size_t>(rule.lhs[1][0])],
                                              roles[static_cast<std::size_t>(rule.lhs[1][1])]),
                        ElementaryOp::row_add(i, j)};
                    OpSequence rhs = {
                        ElementaryOp::row_add(roles[static_cast<std::size_t>(rule.rhs[0][0])],
                                              roles[static_cast<std::size_t>(rule.rhs[0][1])]),
                        ElementaryOp::row_add(roles[static_cast<std::size_t>(rule.rhs[1][0])],
                                              roles[static_cast<std::size_t>(rule.rhs[1][1])])};
                    if (!(product_matrix(lhs, n) == product_matrix(rhs, n))) return false;
                }
            }
        }
    }
    return true;
}

std::string format_sequence(const Permutation& perm, const OpSequence& seq) {
    std::ostringstream out;
    out << "perm";
    for (int v = 0; v < perm.size(); ++v) out << ' ' << perm.image(v) + 1;
    out << "\n";
    for (const ElementaryOp& op : seq) {
        out << (op.kind == OpKind::RowAdd ? "add " : "swap ") << op.i + 1 << ' ' << op.j + 1
            << "\n";
    }
    return out.str();
}

std::pair<Permutation, OpSequence> parse_sequence(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<Permutation> perm;
    OpSequence seq;
    int max_index = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "perm") {
            std::vector<int> image;
            int v = 0;
            while (ls >> v) image.push_back(v - 1);
            if (image.empty()) raise(ErrorCode::ParseError, "empty perm line");
            perm = Permutation(std::move(image));
        } else if (tag == "add" || tag == "swap") {
            int i = 0, j = 0;
            if (!(ls >> i >> j)) raise(ErrorCode::ParseError, "expected two indices: " + line);
            if (i < 1 || j < 1) raise(ErrorCode::IndexOutOfRange, "indices are 1-based");
            if (i == j) raise(ErrorCode::ParseError, "op indices must differ");
            seq.push_back(tag == "add" ? ElementaryOp::row_add(i - 1, j - 1)
                                       : ElementaryOp::swap(i - 1, j - 1));
            max_index = std::max({max_index, i, j});
        } else {
            raise(ErrorCode::ParseError, "unknown line: " + line);
        }
    }
    if (!perm) perm = Permutation(max_index);
    for (const ElementaryOp& op : seq)
        if (op.i >= perm->size() || op.j >= perm->size())
            raise(ErrorCode::IndexOutOfRange, "op index beyond permutation size");
    return {std::move(*perm), std::move(seq)};
}

}  // namespace cnotopt
