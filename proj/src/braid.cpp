#include "braidinv/braid.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>

namespace braidinv {

BraidWord::BraidWord(int n) : n_(n) {
  if (n < 1) throw InvalidArgument("strand count must be >= 1");
}

BraidWord::BraidWord(int n, std::vector<Letter> letters)
    : n_(n), letters_(std::move(letters)) {
  if (n < 1) throw InvalidArgument("strand count must be >= 1");
  for (const Letter& l : letters_) {
    if (l.sign != 1 && l.sign != -1)
      throw InvalidArgument("letter sign must be +1 or -1");
    if (l.index < 1 || l.index > n - 1)
      throw InvalidArgument("generator index out of range for " +
                            std::to_string(n) + " strands");
  }
}

BraidWord parse_word(std::string_view text, std::optional<int> n) {
  if (n && *n < 1) throw ParseError("strand count must be >= 1");

  std::vector<int> tokens;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
            text[pos] == '\r' || text[pos] == ','))
      ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' &&
           text[end] != '\n' && text[end] != '\r' && text[end] != ',')
      ++end;
    const std::string_view tok = text.substr(pos, end - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("invalid token '" + std::string(tok) + "'");
    if (value == 0) throw ParseError("zero is not a generator");
    tokens.push_back(value);
    pos = end;
  }

  int strands;
  if (n) {
    strands = *n;
    for (int k : tokens) {
      const int idx = k < 0 ? -k : k;
      if (idx >= strands)
        throw ParseError("generator index " + std::to_string(idx) +
                         " out of range for " + std::to_string(strands) +
                         " strands");
    }
  } else {
    int max_index = 1;  // floor n = 2
    for (int k : tokens) max_index = std::max(max_index, k < 0 ? -k : k);
    strands = max_index + 1;
  }

  std::vector<Letter> letters;
  letters.reserve(tokens.size());
  for (int k : tokens)
    letters.push_back(k < 0 ? Letter{-k, -1} : Letter{k, +1});
  return BraidWord(strands, std::move(letters));
}

std::string render_word(const BraidWord& w) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.sign * l.index);
  }
  return out;
}

BraidWord inverse(const BraidWord& w) {
  std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : letters) l.sign = -l.sign;
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord concat(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands() != w2.strands())
    throw InvalidArgument("strand-count mismatch: " +
                          std::to_string(w1.strands()) + " vs " +
                          std::to_string(w2.strands()));
  std::vector<Letter> letters = w1.letters();
  letters.insert(letters.end(), w2.letters().begin(), w2.letters().end());
  return BraidWord(w1.strands(), std::move(letters));
}

BraidWord power(const BraidWord& w, int k) {
  if (k < 0) throw InvalidArgument("power exponent must be >= 0");
  std::vector<Letter> letters;
  letters.reserve(w.size() * static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r)
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord conjugate(const BraidWord& w, const BraidWord& a) {
  return concat(inverse(a), concat(w, a));
}

BraidWord stabilize(const BraidWord& w, int sign) {
  if (sign != 1 && sign != -1)
    throw InvalidArgument("stabilization sign must be +1 or -1");
  std::vector<Letter> letters = w.letters();
  letters.push_back(Letter{w.strands(), sign});
  return BraidWord(w.strands() + 1, std::move(letters));
}

BraidWord direct_sum(const BraidWord& w1, const BraidWord& w2) {
  std::vector<Letter> letters = w1.letters();
  for (Letter l : w2.letters()) {
    l.index += w1.strands();
    letters.push_back(l);
  }
  return BraidWord(w1.strands() + w2.strands(), std::move(letters));
}

Permutation permutation_of(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> strand_at(n);  // position -> strand, 0-based
  std::iota(strand_at.begin(), strand_at.end(), 0);
  for (const Letter& l : w.letters())
    std::swap(strand_at[l.index - 1], strand_at[l.index]);
  std::vector<int> images(n);
  for (int p = 0; p < n; ++p) images[strand_at[p]] = p;
  return Permutation(std::move(images));
}

BraidWord fundamental_braid(int n) {
  if (n < 1) throw InvalidArgument("strand count must be >= 1");
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int run = 1; run <= n - 1; ++run)
    for (int i = run; i >= 1; --i) letters.push_back(Letter{i, +1});
  return BraidWord(n, std::move(letters));
}

// ---- word rewriting -------------------------------------------------

namespace {

bool cancels_at(const BraidWord& w, int pos) {  // 1-based
  if (pos < 1 || pos + 1 > static_cast<int>(w.size())) return false;
  const Letter& a = w.letters()[pos - 1];
  const Letter& b = w.letters()[pos];
  return a.index == b.index && a.sign == -b.sign;
}

bool far_commutes_at(const BraidWord& w, int pos) {
  if (pos < 1 || pos + 1 > static_cast<int>(w.size())) return false;
  const Letter& a = w.letters()[pos - 1];
  const Letter& b = w.letters()[pos];
  const int d = a.index - b.index;
  return d > 1 || d < -1;
}

bool braid_moves_at(const BraidWord& w, int pos) {
  if (pos < 1 || pos + 2 > static_cast<int>(w.size())) return false;
  const Letter& a = w.letters()[pos - 1];
  const Letter& b = w.letters()[pos];
  const Letter& c = w.letters()[pos + 1];
  const int d = a.index - b.index;
  return a.index == c.index && (d == 1 || d == -1) && a.sign == b.sign &&
         b.sign == c.sign;
}

}  // namespace

BraidWord apply_move(const BraidWord& w, const MoveSpec& move) {
  std::vector<Letter> letters = w.letters();
  const int len = static_cast<int>(letters.size());
  switch (move.kind) {
    case MoveKind::FreeCancel:
      if (!cancels_at(w, move.pos))
        throw InvalidArgument("letters at position " + std::to_string(move.pos) +
                              " are not mutually inverse");
      letters.erase(letters.begin() + (move.pos - 1), letters.begin() + (move.pos + 1));
      break;
    case MoveKind::FreeInsert: {
      if (move.pos < 1 || move.pos > len + 1)
        throw InvalidArgument("insert position out of range");
      if (move.sign != 1 && move.sign != -1)
        throw InvalidArgument("insert sign must be +1 or -1");
      if (move.index < 1 || move.index > w.strands() - 1)
        throw InvalidArgument("insert index out of range");
      const Letter pair[2] = {{move.index, move.sign}, {move.index, -move.sign}};
      letters.insert(letters.begin() + (move.pos - 1), pair, pair + 2);
      break;
    }
    case MoveKind::FarCommute:
      if (!far_commutes_at(w, move.pos))
        throw InvalidArgument("letters at position " + std::to_string(move.pos) +
                              " are not distant generators");
      std::swap(letters[move.pos - 1], letters[move.pos]);
      break;
    case MoveKind::BraidMove: {
      if (!braid_moves_at(w, move.pos))
        throw InvalidArgument("no braid-relation pattern at position " +
                              std::to_string(move.pos));
      const int i = letters[move.pos - 1].index;
      const int j = letters[move.pos].index;
      letters[move.pos - 1].index = j;
      letters[move.pos].index = i;
      letters[move.pos + 1].index = j;
      break;
    }
  }
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord random_equivalent(const BraidWord& w, int steps, std::uint64_t seed) {
  if (steps < 0) throw InvalidArgument("step count must be >= 0");
  std::mt19937_64 engine(seed);
  const auto below = [&engine](std::uint64_t bound) {
    return engine() % bound;  // determinism matters here, uniformity does not
  };

  BraidWord cur = w;
  for (int step = 0; step < steps; ++step) {
    std::vector<int> cancel_pos, far_pos, braid_pos;
    const int len = static_cast<int>(cur.size());
    for (int pos = 1; pos <= len; ++pos) {
      if (cancels_at(cur, pos)) cancel_pos.push_back(pos);
      if (far_commutes_at(cur, pos)) far_pos.push_back(pos);
      if (braid_moves_at(cur, pos)) braid_pos.push_back(pos);
    }
    const bool can_insert = cur.strands() >= 2;

    std::vector<MoveKind> kinds;
    if (!cancel_pos.empty()) kinds.push_back(MoveKind::FreeCancel);
    if (can_insert) kinds.push_back(MoveKind::FreeInsert);
    if (!far_pos.empty()) kinds.push_back(MoveKind::FarCommute);
    if (!braid_pos.empty()) kinds.push_back(MoveKind::BraidMove);
    if (kinds.empty()) break;  // trivial 1-braid: nothing ever applies

    MoveSpec move{MoveKind::FreeCancel, 1};
    switch (kinds[below(kinds.size())]) {
      case MoveKind::FreeCancel:
        move = MoveSpec::free_cancel(cancel_pos[below(cancel_pos.size())]);
        break;
      case MoveKind::FreeInsert:
        move = MoveSpec::free_insert(
            static_cast<int>(below(static_cast<std::uint64_t>(len) + 1)) + 1,
            static_cast<int>(below(static_cast<std::uint64_t>(cur.strands()) - 1)) + 1,
            below(2) == 0 ? +1 : -1);
        break;
      case MoveKind::FarCommute:
        move = MoveSpec::far_commute(far_pos[below(far_pos.size())]);
        break;
      case MoveKind::BraidMove:
        move = MoveSpec::braid_move(braid_pos[below(braid_pos.size())]);
        break;
    }
    cur = apply_move(cur, move);
  }
  return cur;
}

}  // namespace braidinv
