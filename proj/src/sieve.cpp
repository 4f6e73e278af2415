#include "braidinv/sieve.hpp"

#include <map>
#include <thread>

namespace braidinv {

namespace {

constexpr std::uint64_t kMaxEnumeratedWords = 5'000'000;

struct LocalBucket {
  std::uint64_t count = 0;
  std::vector<int> rep;  // tokens
};

bool rep_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Words of a fixed length enumerate as base-(2(n-1)) digit strings;
// symbol s maps to token +(s/2 + 1) or -(s/2 + 1).
std::vector<int> decode_word(int n, int len, std::uint64_t rank) {
  const std::uint64_t alphabet = 2 * (static_cast<std::uint64_t>(n) - 1);
  std::vector<int> tokens(len);
  for (int i = len - 1; i >= 0; --i) {
    const int symbol = static_cast<int>(rank % alphabet);
    rank /= alphabet;
    const int index = symbol / 2 + 1;
    tokens[i] = (symbol % 2 == 0) ? index : -index;
  }
  return tokens;
}

BraidWord word_from_tokens(int n, const std::vector<int>& tokens) {
  std::vector<Letter> letters;
  letters.reserve(tokens.size());
  for (int t : tokens)
    letters.push_back(t < 0 ? Letter{-t, -1} : Letter{t, +1});
  return BraidWord(n, std::move(letters));
}

using BucketMap = std::map<ConjugacyKey, LocalBucket>;

void merge_bucket(BucketMap& into, const ConjugacyKey& key,
                  const LocalBucket& bucket) {
  auto [it, inserted] = into.try_emplace(key, bucket);
  if (!inserted) {
    it->second.count += bucket.count;
    if (rep_less(bucket.rep, it->second.rep)) it->second.rep = bucket.rep;
  }
}

}  // namespace

std::string SieveBucket::rep_text() const {
  std::string out;
  for (int t : rep_tokens) {
    if (!out.empty()) out += ' ';
    out += std::to_string(t);
  }
  return out;
}

SieveResult run_sieve(int n, int max_len, unsigned threads,
                      std::uint64_t max_order) {
  if (n < 1) throw InvalidArgument("strand count must be >= 1");
  if (max_len < 0) throw InvalidArgument("max length must be >= 0");

  const std::uint64_t alphabet = 2 * (static_cast<std::uint64_t>(n) - 1);
  std::vector<std::uint64_t> count_at_len(static_cast<std::size_t>(max_len) + 1);
  std::vector<std::uint64_t> offset(count_at_len.size());
  std::uint64_t total = 0;
  for (int l = 0; l <= max_len; ++l) {
    count_at_len[l] = 1;
    for (int i = 0; i < l; ++i) {
      count_at_len[l] *= alphabet;
      if (count_at_len[l] > kMaxEnumeratedWords) break;
    }
    if (alphabet == 0 && l > 0) count_at_len[l] = 0;
    offset[l] = total;
    total += count_at_len[l];
    if (total > kMaxEnumeratedWords)
      throw InvalidArgument("enumeration exceeds " +
                            std::to_string(kMaxEnumeratedWords) +
                            " words; lower --max-len or --n");
  }

  const auto evaluate_range = [&](std::uint64_t begin, std::uint64_t end,
                                  BucketMap& out) {
    int len = 0;
    for (std::uint64_t g = begin; g < end; ++g) {
      while (g >= offset[len] + count_at_len[len]) ++len;
      std::vector<int> tokens = decode_word(n, len, g - offset[len]);
      const BraidWord w = word_from_tokens(n, tokens);
      LocalBucket b{1, std::move(tokens)};
      merge_bucket(out, conjugacy_key(w, max_order), b);
    }
  };

  unsigned worker_count = threads;
  if (worker_count == 0) {
    worker_count = std::thread::hardware_concurrency();
    if (worker_count == 0) worker_count = 1;
    worker_count = std::min(worker_count, 8u);
  }
  if (total < 256) worker_count = 1;  // not worth spawning

  BucketMap merged;
  if (worker_count <= 1) {
    evaluate_range(0, total, merged);
  } else {
    std::vector<BucketMap> partial(worker_count);
    std::vector<std::exception_ptr> errors(worker_count);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + worker_count - 1) / worker_count;
    for (unsigned t = 0; t < worker_count; ++t) {
      const std::uint64_t begin = std::min<std::uint64_t>(t * chunk, total);
      const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, total);
      pool.emplace_back([&, t, begin, end] {
        try {
          evaluate_range(begin, end, partial[t]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);
    for (const BucketMap& part : partial)
      for (const auto& [key, bucket] : part) merge_bucket(merged, key, bucket);
  }

  SieveResult result{n, max_len, total, {}};
  result.buckets.reserve(merged.size());
  for (auto& [key, bucket] : merged)
    result.buckets.push_back(SieveBucket{key, bucket.count, std::move(bucket.rep)});
  return result;
}

std::string sieve_to_text(const SieveResult& r) {
  std::string out;
  for (const SieveBucket& b : r.buckets) {
    out += b.key.canonical();
    out += " count=" + std::to_string(b.count);
    out += " rep=\"" + b.rep_text() + "\"\n";
  }
  out += "words=" + std::to_string(r.word_count) +
         " buckets=" + std::to_string(r.buckets.size()) + "\n";
  return out;
}

nlohmann::ordered_json sieve_to_json(const SieveResult& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["max_len"] = r.max_len;
  j["words"] = r.word_count;
  nlohmann::ordered_json buckets = nlohmann::ordered_json::array();
  for (const SieveBucket& b : r.buckets) {
    nlohmann::ordered_json jb;
    jb["key"] = b.key.canonical();
    jb["count"] = b.count;
    jb["representative"] = b.rep_text();
    buckets.push_back(std::move(jb));
  }
  j["buckets"] = std::move(buckets);
  return j;
}

}  // namespace braidinv
