#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cnotopt/errors.hpp"

namespace cnotopt {

/// A CNOT gate acting on qubit wires; as a linear map it XORs the control
/// wire into the target wire (row_target += row_control over GF(2)).
struct CnotGate {
    int control = 0;
    int target = 0;

    friend bool operator==(const CnotGate&, const CnotGate&) = default;
};

enum class OpKind { RowAdd, Swap };

/// Elementary row operation. RowAdd{i,j} adds row j into row i (the matrix
/// that is identity plus a single 1 at position (i,j)); Swap{i,j} exchanges
/// rows i and j. Indices are 0-based internally; text formats are 1-based.
struct ElementaryOp {
    OpKind kind = OpKind::RowAdd;
    int i = 0;
    int j = 0;

    static ElementaryOp row_add(int i, int j) { return {OpKind::RowAdd, i, j}; }
    static ElementaryOp swap(int i, int j) { return {OpKind::Swap, i, j}; }

    bool is_row_add() const { return kind == OpKind::RowAdd; }

    friend bool operator==(const ElementaryOp&, const ElementaryOp&) = default;
};

/// Bijection on {0..n-1}; image(v) is where v maps to. The matrix of a
/// permutation sigma has a 1 at (i, sigma(i)) for every row i.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(int n);                    // identity
    explicit Permutation(std::vector<int> image);   // validates bijection

    int size() const { return static_cast<int>(image_.size()); }
    int image(int v) const { return image_[v]; }
    const std::vector<int>& image_vector() const { return image_; }
    bool is_identity() const;
    Permutation inverse() const;

    /// Applies the transposition (a b) after this permutation: the result r
    /// satisfies matrix(r) == matrix(*this) * matrix(swap(a,b)).
    void apply_swap_right(int a, int b);

    friend bool operator==(const Permutation&, const Permutation&) = default;

  private:
    std::vector<int> image_;
};

/// The permutation whose matrix equals matrix(left) * matrix(right).
Permutation perm_product(const Permutation& left, const Permutation& right);

/// Square matrix over GF(2) with bit-packed rows (row XOR is word-parallel).
class BitMatrix {
  public:
    BitMatrix() = default;
    explicit BitMatrix(int n);  // zero matrix

    static BitMatrix identity(int n);
    static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);

    int n() const { return n_; }

    bool get(int i, int j) const {
        return (words_[static_cast<std::size_t>(i) * wpr_ + static_cast<std::size_t>(j) / 64] >>
                (static_cast<unsigned>(j) % 64)) & 1u;
    }
    void set(int i, int j, bool value);

    void xor_row(int dst, int src);   // row dst ^= row src
    void swap_rows(int i, int j);
    int row_weight(int i) const;

    /// In-place left-multiplication by the op's matrix.
    void apply(const ElementaryOp& op);

    int rank() const;
    bool invertible() const { return rank() == n_; }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  private:
    int n_ = 0;
    int wpr_ = 0;  // words per row
    std::vector<std::uint64_t> words_;

    void check_index(int i, int j) const;
    friend BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
};

/// Matrix product over GF(2). Throws DimensionMismatch.
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
inline BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) { return mat_mul(a, b); }

/// matrix(op) * m. Throws IndexOutOfRange.
BitMatrix apply_op(const BitMatrix& m, const ElementaryOp& op);

/// Matrix of a single elementary operation.
BitMatrix op_matrix(const ElementaryOp& op, int n);

/// Matrix of a permutation (1 at (i, sigma(i))).
BitMatrix perm_matrix(const Permutation& p);

/// If m is a permutation matrix, the permutation sigma with m[i][sigma(i)]=1.
std::optional<Permutation> permutation_of(const BitMatrix& m);

/// Full row reduction to the identity. Returns ops O_1..O_m such that
/// applying them in order to `a` yields I, i.e. M(O_m)*...*M(O_1)*a == I
/// (equivalently a == M(O_1)*...*M(O_m), all ops being self-inverse).
/// Column-major pivoting; a row swap is emitted only when the pivot entry is
/// 0, choosing the smallest-index row with a 1 at or below the pivot.
/// Throws SingularMatrix.
std::vector<ElementaryOp> gauss_jordan(const BitMatrix& a);

/// Simulates the gates in time order and returns the overall linear map:
/// gate CNOT(c -> t) applies RowAdd(t, c). This is the verification oracle
/// for every later stage. Throws IndexOutOfRange.
BitMatrix circuit_matrix(std::span<const CnotGate> gates, int n);

/// Text format: "matrix <n>" then n lines of n space-separated 0/1 digits.
BitMatrix parse_matrix(std::string_view text);
std::string format_matrix(const BitMatrix& m);

/// FNV-1a over a byte string; used to pin shipped data files in tests.
std::uint64_t fnv1a64(std::string_view data);

}  // namespace cnotopt
