#include "cnotopt/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace cnotopt {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(int n) : image_(static_cast<std::size_t>(n)) {
    for (int v = 0; v < n; ++v) image_[static_cast<std::size_t>(v)] = v;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<char> seen(image_.size(), 0);
    for (int v : image_) {
        if (v < 0 || v >= static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(v)])
            raise(ErrorCode::InvalidParams, "image is not a bijection");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

bool Permutation::is_identity() const {
    for (int v = 0; v < size(); ++v)
        if (image_[static_cast<std::size_t>(v)] != v) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (int v = 0; v < size(); ++v) inv[static_cast<std::size_t>(image_[static_cast<std::size_t>(v)])] = v;
    return Permutation(std::move(inv));
}

void Permutation::apply_swap_right(int a, int b) {
    for (int& p : image_) {
        if (p == a) p = b;
        else if (p == b) p = a;
    }
}

Permutation perm_product(const Permutation& left, const Permutation& right) {
    if (left.size() != right.size())
        raise(ErrorCode::DimensionMismatch, "permutation sizes differ");
    std::vector<int> image(static_cast<std::size_t>(left.size()));
    for (int v = 0; v < left.size(); ++v)
        image[static_cast<std::size_t>(v)] = right.image(left.image(v));
    return Permutation(std::move(image));
}

// ----------------------------------------------------------------- BitMatrix

BitMatrix::BitMatrix(int n) : n_(n), wpr_((n + 63) / 64) {
    if (n < 1) raise(ErrorCode::InvalidParams, "matrix dimension must be >= 1");
    words_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(wpr_), 0);
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    BitMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            raise(ErrorCode::DimensionMismatch, "matrix rows must be square");
        for (int j = 0; j < n; ++j)
            m.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0);
    }
    return m;
}

void BitMatrix::check_index(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        raise(ErrorCode::IndexOutOfRange, "row/column index outside matrix");
}

void BitMatrix::set(int i, int j, bool value) {
    check_index(i, j);
    std::uint64_t& w = words_[static_cast<std::size_t>(i) * wpr_ + static_cast<std::size_t>(j) / 64];
    const std::uint64_t bit = 1ULL << (static_cast<unsigned>(j) % 64);
    if (value) w |= bit;
    else w &= ~bit;
}

void BitMatrix::xor_row(int dst, int src) {
    check_index(dst, src);
    auto* d = &words_[static_cast<std::size_t>(dst) * wpr_];
    const auto* s = &words_[static_cast<std::size_t>(src) * wpr_];
    for (int w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(int i, int j) {
    check_index(i, j);
    auto* a = &words_[static_cast<std::size_t>(i) * wpr_];
    auto* b = &words_[static_cast<std::size_t>(j) * wpr_];
    for (int w = 0; w < wpr_; ++w) std::swap(a[w], b[w]);
}

int BitMatrix::row_weight(int i) const {
    check_index(i, 0);
    int weight = 0;
    for (int w = 0; w < wpr_; ++w)
        weight += std::popcount(words_[static_cast<std::size_t>(i) * wpr_ + static_cast<std::size_t>(w)]);
    return weight;
}

void BitMatrix::apply(const ElementaryOp& op) {
    if (op.i == op.j) raise(ErrorCode::InvalidParams, "op indices must differ");
    if (op.kind == OpKind::RowAdd) xor_row(op.i, op.j);
    else swap_rows(op.i, op.j);
}

int BitMatrix::rank() const {
    BitMatrix m(*this);
    int rank = 0;
    for (int c = 0; c < n_; ++c) {
        int pivot = -1;
        for (int r = rank; r < n_; ++r) {
            if (m.get(r, c)) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != rank) m.swap_rows(pivot, rank);
        for (int r = 0; r < n_; ++r)
            if (r != rank && m.get(r, c)) m.xor_row(r, rank);
        ++rank;
    }
    return rank;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.n() != b.n()) raise(ErrorCode::DimensionMismatch, "matrix dimensions differ");
    BitMatrix out(a.n());
    for (int i = 0; i < a.n(); ++i) {
        auto* dst = &out.words_[static_cast<std::size_t>(i) * out.wpr_];
        for (int k = 0; k < a.n(); ++k) {
            if (!a.get(i, k)) continue;
            const auto* src = &b.words_[static_cast<std::size_t>(k) * b.wpr_];
            for (int w = 0; w < out.wpr_; ++w) dst[w] ^= src[w];
        }
    }
    return out;
}

BitMatrix apply_op(const BitMatrix& m, const ElementaryOp& op) {
    if (op.i < 0 || op.i >= m.n() || op.j < 0 || op.j >= m.n())
        raise(ErrorCode::IndexOutOfRange, "op indices outside matrix");
    BitMatrix out(m);
    out.apply(op);
    return out;
}

BitMatrix op_matrix(const ElementaryOp& op, int n) {
    return apply_op(BitMatrix::identity(n), op);
}

BitMatrix perm_matrix(const Permutation& p) {
    BitMatrix m(p.size());
    for (int i = 0; i < p.size(); ++i) m.set(i, p.image(i), true);
    return m;
}

std::optional<Permutation> permutation_of(const BitMatrix& m) {
    std::vector<int> image(static_cast<std::size_t>(m.n()), -1);
    std::vector<char> column_used(static_cast<std::size_t>(m.n()), 0);
    for (int i = 0; i < m.n(); ++i) {
        int hit = -1;
        for (int j = 0; j < m.n(); ++j) {
            if (!m.get(i, j)) continue;
            if (hit >= 0) return std::nullopt;  // row weight > 1
            hit = j;
        }
        if (hit < 0 || column_used[static_cast<std::size_t>(hit)]) return std::nullopt;
        column_used[static_cast<std::size_t>(hit)] = 1;
        image[static_cast<std::size_t>(i)] = hit;
    }
    return Permutation(std::move(image));
}

std::vector<ElementaryOp> gauss_jordan(const BitMatrix& a) {
    BitMatrix m(a);
    std::vector<ElementaryOp> ops;
    const int n = m.n();
    for (int c = 0; c < n; ++c) {
        if (!m.get(c, c)) {
            int pivot = -1;
            for (int r = c + 1; r < n; ++r) {
                if (m.get(r, c)) { pivot = r; break; }
            }
            if (pivot < 0) raise(ErrorCode::SingularMatrix, "rank below dimension");
            ops.push_back(ElementaryOp::swap(c, pivot));
            m.swap_rows(c, pivot);
        }
        for (int r = 0; r < n; ++r) {
            if (r != c && m.get(r, c)) {
                ops.push_back(ElementaryOp::row_add(r, c));
                m.xor_row(r, c);
            }
        }
    }
    return ops;
}

BitMatrix circuit_matrix(std::span<const CnotGate> gates, int n) {
    BitMatrix m = BitMatrix::identity(n);
    for (const CnotGate& g : gates) {
        if (g.control < 0 || g.control >= n || g.target < 0 || g.target >= n)
            raise(ErrorCode::IndexOutOfRange, "gate qubit outside register");
        if (g.control == g.target)
            raise(ErrorCode::InvalidParams, "control equals target");
        m.xor_row(g.target, g.control);
    }
    return m;
}

BitMatrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tag;
    int n = 0;
    if (!(in >> tag >> n) || tag != "matrix" || n < 1)
        raise(ErrorCode::ParseError, "expected 'matrix <n>' header");
    BitMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok)) raise(ErrorCode::ParseError, "matrix has too few entries");
            if (tok == "1") m.set(i, j, true);
            else if (tok != "0") raise(ErrorCode::ParseError, "matrix entries must be 0 or 1");
        }
    }
    std::string extra;
    if (in >> extra) raise(ErrorCode::ParseError, "trailing tokens after matrix body");
    return m;
}

std::string format_matrix(const BitMatrix& m) {
    std::ostringstream out;
    out << "matrix " << m.n() << "\n";
    for (int i = 0; i < m.n(); ++i) {
        for (int j = 0; j < m.n(); ++j) {
            if (j) out << ' ';
            out << (m.get(i, j) ? '1' : '0');
        }
        out << "\n";
    }
    return out.str();
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : data) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace cnotopt
