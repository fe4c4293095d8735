#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cnotopt/bit_matrix.hpp"

namespace cnotopt {

/// Ordered list of elementary operations written in product order: ops[0] is
/// the leftmost matrix factor and therefore acts last on a state vector; the
/// executable circuit runs the list back to front.
using OpSequence = std::vector<ElementaryOp>;

/// matrix(seq[0]) * matrix(seq[1]) * ... * matrix(seq.back()).
BitMatrix product_matrix(const OpSequence& seq, int n);

/// A = matrix(perm) * product(seq), with seq containing RowAdd ops only.
struct Decomposition {
    Permutation perm;
    OpSequence seq;
};

/// Moves every Swap to the far left and merges it into a permutation factor,
/// conjugating the RowAdds it passes: matrix(sigma) * product(seq') equals
/// product(seq), and seq' is swap-free.
Decomposition push_swaps_left(const OpSequence& seq, int n);

/// Shortens a swap-free sequence with the rewrite rules (six 3-op -> 2-op
/// reductions plus the 2-op -> swap + 1-op rule whose swap is absorbed into
/// the permutation factor). Adjacent commuting ops are transposed to expose
/// matches. Deterministic; the product is preserved and the length never
/// increases.
Decomposition rewrite_optimize(const OpSequence& seq, int n);

/// Gauss-Jordan decomposition followed by swap normalization and rewriting.
/// verify_decomposition(a, decompose(a)) always holds.
Decomposition decompose(const BitMatrix& a);

/// True iff matrix(d.perm) * product(d.seq) == a. Throws DimensionMismatch.
bool verify_decomposition(const BitMatrix& a, const Decomposition& d);

/// Brute-force check of all seven rewrite identities over every assignment
/// of distinct indices in {0..n-1}. Returns true when every identity holds.
bool validate_rewrite_rules(int n);

/// Text format, one op per line in product order ("add <i> <j>" for adding
/// row j into row i, "swap <i> <j>"), preceded by "perm <image list>".
/// Indices in the text are 1-based.
std::string format_sequence(const Permutation& perm, const OpSequence& seq);
std::pair<Permutation, OpSequence> parse_sequence(std::string_view text);

}  // namespace cnotopt
