#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidinv/errors.hpp"
#include "braidinv/permutation.hpp"

namespace braidinv {

/// One generator occurrence: sigma_index^sign with 1-based index.
struct Letter {
  int index;  // i of sigma_i, in [1, n-1]
  int sign;   // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A braid word: a strand count n >= 1 and a sequence of letters.
/// Immutable after construction; the empty sequence is the trivial braid.
class BraidWord {
 public:
  /// Trivial braid on n strands.
  explicit BraidWord(int n = 1);

  BraidWord(int n, std::vector<Letter> letters);

  int strands() const { return n_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_trivial_word() const { return letters_.empty(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int n_;
  std::vector<Letter> letters_;
};

/// Parses whitespace/comma-separated signed integer tokens; token k
/// encodes sigma_|k|^sign(k). When n is omitted it is inferred as
/// max|k| + 1 with floor 2. Empty text yields the trivial braid.
BraidWord parse_word(std::string_view text, std::optional<int> n = std::nullopt);

/// Inverse of parse_word; round-trips exactly.
std::string render_word(const BraidWord& w);

/// Letters reversed with signs flipped.
BraidWord inverse(const BraidWord& w);

/// Concatenation; both words must have the same strand count.
BraidWord concat(const BraidWord& w1, const BraidWord& w2);

/// k-fold concatenation, k >= 0; power(w, 0) is trivial.
BraidWord power(const BraidWord& w, int k);

/// a^{-1} w a.
BraidWord conjugate(const BraidWord& w, const BraidWord& a);

/// Appends sigma_n^sign on n+1 strands.
BraidWord stabilize(const BraidWord& w, int sign);

/// Stacks w2 after w1 on disjoint strands: w1's letters unchanged, w2's
/// letter indices shifted by w1.strands(). The two layers never cross.
BraidWord direct_sum(const BraidWord& w1, const BraidWord& w2);

/// The braid permutation: strand starting at position i ends at rho(i).
Permutation permutation_of(const BraidWord& w);

/// The positive half-twist on n strands, written as the descending-runs
/// product (sigma_1)(sigma_2 sigma_1)...(sigma_{n-1} ... sigma_1).
/// Every pair of strands crosses exactly once.
BraidWord fundamental_braid(int n);

// ---- word rewriting -------------------------------------------------

enum class MoveKind {
  FreeCancel,   // delete mutually inverse letters at pos, pos+1
  FreeInsert,   // insert sigma_i^eps sigma_i^{-eps} at pos
  FarCommute,   // swap letters at pos, pos+1 with |i-j| > 1
  BraidMove,    // rewrite i j i -> j i j at pos (|i-j| = 1, equal signs)
};

/// A single rewriting move; positions are 1-based letter indices.
struct MoveSpec {
  MoveKind kind;
  int pos;
  int index = 0;  // FreeInsert only
  int sign = 0;   // FreeInsert only

  static MoveSpec free_cancel(int pos) { return {MoveKind::FreeCancel, pos}; }
  static MoveSpec free_insert(int pos, int index, int sign) {
    return {MoveKind::FreeInsert, pos, index, sign};
  }
  static MoveSpec far_commute(int pos) { return {MoveKind::FarCommute, pos}; }
  static MoveSpec braid_move(int pos) { return {MoveKind::BraidMove, pos}; }
};

/// Applies one move; the result represents the same braid. Throws
/// InvalidArgument when the pattern does not match at the position.
BraidWord apply_move(const BraidWord& w, const MoveSpec& move);

/// Applies `steps` randomly chosen applicable moves, deterministically
/// for a fixed seed. The result represents the same braid as w.
BraidWord random_equivalent(const BraidWord& w, int steps, std::uint64_t seed);

}  // namespace braidinv
