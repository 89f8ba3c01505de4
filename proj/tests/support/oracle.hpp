#ifndef ARTIN_TESTS_ORACLE_HPP
#define ARTIN_TESTS_ORACLE_HPP

// Brute-force reference for the RAAG word combinatorics. Shares nothing with
// the library beyond the commutation table: expressions are packed into a
// 64-bit key and explored by breadth-first search over every elementary
// M-operation.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace oracle {

// Up to 7 syllables, generator < 8, exponent in [-15, 15] \ {0}.
// Layout: bits 0..3 length, then 8 bits per syllable (3 gen, 5 exp + 16).
using Key = std::uint64_t;

struct Syl {
  int gen;
  int exp;
  bool operator==(Syl const&) const = default;
};

inline Key encode(std::vector<Syl> const& w) {
  if (w.size() > 7) {
    throw std::out_of_range("oracle: expression too long");
  }
  Key k = w.size();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].gen < 0 || w[i].gen > 7 || w[i].exp == 0 || w[i].exp < -15
        || w[i].exp > 15) {
      throw std::out_of_range("oracle: syllable out of range");
    }
    Key b = static_cast<Key>(w[i].gen) | (static_cast<Key>(w[i].exp + 16) << 3);
    k |= b << (4 + 8 * i);
  }
  return k;
}

inline std::size_t length(Key k) { return k & 0xF; }

inline std::vector<Syl> decode(Key k) {
  std::vector<Syl> w(length(k));
  for (std::size_t i = 0; i < w.size(); ++i) {
    Key b = (k >> (4 + 8 * i)) & 0xFF;
    w[i]  = {static_cast<int>(b & 7), static_cast<int>(b >> 3) - 16};
  }
  return w;
}

// commute[s][t]: T_s and T_t commute (s != t and m_{s,t} = 2).
using Commute = std::array<std::array<bool, 8>, 8>;

// All expressions one elementary M-operation away from w.
inline void neighbours(Commute const& commute, std::vector<Syl> const& w,
                       std::vector<Key>& out) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i].gen == w[i + 1].gen) {
      std::vector<Syl> v;
      int              sum = w[i].exp + w[i + 1].exp;
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (j == i) {
          if (sum != 0) {
            v.push_back({w[i].gen, sum});
          }
        } else if (j != i + 1) {
          v.push_back(w[j]);
        }
      }
      out.push_back(encode(v));
    } else if (commute[w[i].gen][w[i + 1].gen]) {
      auto v = w;
      std::swap(v[i], v[i + 1]);
      out.push_back(encode(v));
    }
  }
}

struct Exploration {
  std::size_t      min_length;     // shortest reachable expression
  bool             reaches_empty;  // the empty expression is reachable
  std::vector<Key> ii_class;       // reachable with the same length
};

inline Exploration explore(Commute const& commute, Key start) {
  std::unordered_set<Key> seen{start};
  std::vector<Key>        queue{start};
  std::vector<Key>        next;
  Exploration             out{length(start), length(start) == 0, {}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Key k = queue[head];
    out.min_length = std::min(out.min_length, length(k));
    if (length(k) == 0) {
      out.reaches_empty = true;
    }
    if (length(k) == length(start)) {
      out.ii_class.push_back(k);
    }
    next.clear();
    neighbours(commute, decode(k), next);
    for (Key n : next) {
      if (seen.insert(n).second) {
        queue.push_back(n);
      }
    }
  }
  return out;
}

// Only type II moves.
inline std::vector<Key> ii_class(Commute const& commute, Key start) {
  std::unordered_set<Key> seen{start};
  std::vector<Key>        queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto w = decode(queue[head]);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].gen != w[i + 1].gen && commute[w[i].gen][w[i + 1].gen]) {
        auto v = w;
        std::swap(v[i], v[i + 1]);
        Key k = encode(v);
        if (seen.insert(k).second) {
          queue.push_back(k);
        }
      }
    }
  }
  return queue;
}

// Memoized exploration. Every expression of the start length reached from w
// is II-equivalent to w and explores to the same set, so one search answers
// the whole class.
class Explorer {
 public:
  struct Answer {
    std::size_t min_length;
    bool        reaches_empty;
    Key         representative;  // smallest key of the II-class
  };

  explicit Explorer(Commute const& commute) : _commute(commute) {}

  Answer const& operator()(Key w) {
    if (auto it = _memo.find(w); it != _memo.end()) {
      return it->second;
    }
    auto   e   = explore(_commute, w);
    Key    rep = *std::min_element(e.ii_class.begin(), e.ii_class.end());
    Answer a{e.min_length, e.reaches_empty, rep};
    for (Key k : e.ii_class) {
      _memo.emplace(k, a);
    }
    return _memo.at(w);
  }

  void clear() { _memo.clear(); }

 private:
  Commute                         _commute;
  std::unordered_map<Key, Answer> _memo;
};

// Every pair of syllables on one generator is separated by a syllable that
// does not commute with it. Evaluated literally over all pairs.
inline bool separated(Commute const& commute, std::vector<Syl> const& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i].gen != w[j].gen) {
        continue;
      }
      bool witness = false;
      for (std::size_t k = i + 1; k < j; ++k) {
        if (w[k].gen == w[i].gen || !commute[w[i].gen][w[k].gen]) {
          witness = true;
        }
      }
      if (!witness) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace oracle

#endif
