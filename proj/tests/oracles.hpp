#pragma once
// Reference implementations used only by the tests. They work on plain
// signed-integer letter vectors and avoid the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "hloc/int_matrix.hpp"
#include "hloc/word.hpp"

namespace oracle {

// +i is x_i, -i is x_i^-1.
using Raw = std::vector<int>;

inline Raw to_raw(hloc::Word const& w) {
  Raw r;
  for (auto l : w) {
    r.push_back(l.sign() * static_cast<int>(l.index()));
  }
  return r;
}

// Builds a library word from letters that are already reduced.
inline hloc::Word from_raw(Raw const& r) {
  std::vector<hloc::Letter> letters;
  for (int a : r) {
    letters.emplace_back(static_cast<hloc::GeneratorIndex>(std::abs(a)), a > 0 ? 1 : -1);
  }
  return hloc::Word::reduce(letters);
}

// Repeated left-to-right scan deleting the first cancelling pair.
inline Raw naive_reduce(Raw w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i),
                w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

inline Raw concat(Raw a, Raw const& b) {
  a.insert(a.end(), b.begin(), b.end());
  return naive_reduce(a);
}

inline Raw inverse(Raw const& w) {
  Raw r(w.rbegin(), w.rend());
  for (int& a : r) {
    a = -a;
  }
  return r;
}

// Repeated multiplication, no cyclic shortcut.
inline Raw naive_power(Raw const& w, int k) {
  Raw base = k < 0 ? inverse(w) : w;
  Raw out;
  for (int i = 0; i < std::abs(k); ++i) {
    out = concat(out, base);
  }
  return out;
}

inline Raw naive_commutator(Raw const& a, Raw const& b) {
  return concat(concat(concat(a, b), inverse(a)), inverse(b));
}

inline std::set<int> naive_support(Raw const& w) {
  std::set<int> s;
  for (int a : w) {
    s.insert(std::abs(a));
  }
  return s;
}

// All freely reduced words of length <= max_len over x1..xn, shortest
// first.
inline std::vector<Raw> all_reduced_words(int n, std::size_t max_len) {
  std::vector<Raw> out{{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t const level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int g = -n; g <= n; ++g) {
        if (g == 0 || (!out[i].empty() && out[i].back() == -g)) {
          continue;
        }
        Raw w = out[i];
        w.push_back(g);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

struct RawHash {
  std::size_t operator()(Raw const& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int a : w) {
      h = (h ^ static_cast<std::size_t>(a + 1024)) * 1099511628211ULL;
    }
    return h;
  }
};

// For every word w of length <= max_len, the pair (v, k) with v^k = w and
// k maximal, found by raising every short word to every power that stays
// within max_len.
inline std::unordered_map<Raw, std::pair<Raw, int>, RawHash> root_table(int n,
                                                                        std::size_t max_len) {
  std::unordered_map<Raw, std::pair<Raw, int>, RawHash> table;
  for (auto const& v : all_reduced_words(n, max_len)) {
    if (v.empty()) {
      continue;
    }
    Raw p = v;
    for (int k = 1; p.size() <= max_len; ++k) {
      auto [it, inserted] = table.try_emplace(p, v, k);
      if (!inserted && it->second.second < k) {
        it->second = {v, k};
      }
      p = concat(p, v);
      if (p.empty()) {
        break;
      }
    }
  }
  return table;
}

// Brute-force k-th root: search all words of length <= |w|.
inline std::optional<Raw> brute_kth_root(Raw const& w, int k, int n) {
  if (w.empty()) {
    return Raw{};
  }
  for (auto const& v : all_reduced_words(n, w.size())) {
    if (naive_power(v, k) == w) {
      return v;
    }
  }
  return std::nullopt;
}

// Every product of at most max_factors generators or inverses.
inline std::set<Raw> product_closure(std::vector<Raw> const& gens, int max_factors) {
  std::vector<Raw> symbols;
  for (auto const& g : gens) {
    symbols.push_back(g);
    symbols.push_back(inverse(g));
  }
  std::set<Raw> seen{{}};
  std::vector<Raw> frontier{{}};
  for (int depth = 0; depth < max_factors; ++depth) {
    std::vector<Raw> next;
    for (auto const& w : frontier) {
      for (auto const& s : symbols) {
        Raw p = concat(w, s);
        if (seen.insert(p).second) {
          next.push_back(p);
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

// phi_n(x_i) = [x_{2i}, x_{2i+1}] letter by letter.
inline Raw naive_phi(Raw const& w) {
  Raw out;
  for (int a : w) {
    int const i = std::abs(a);
    Raw c = naive_commutator({2 * i}, {2 * i + 1});
    out = concat(out, a > 0 ? c : inverse(c));
  }
  return out;
}

inline Raw random_reduced(std::mt19937_64& rng, int first, int last, std::size_t len) {
  std::uniform_int_distribution<int> gen(first, last);
  std::bernoulli_distribution sign(0.5);
  Raw w;
  while (w.size() < len) {
    int a = gen(rng) * (sign(rng) ? 1 : -1);
    if (!w.empty() && w.back() == -a) {
      continue;
    }
    w.push_back(a);
  }
  return w;
}

// Matrix helpers written with plain loops.

inline hloc::IntMatrix naive_product(hloc::IntMatrix const& a, hloc::IntMatrix const& b) {
  hloc::IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      mpz_class s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        s += a(i, k) * b(k, j);
      }
      c(i, j) = s;
    }
  }
  return c;
}

// Laplace expansion along the first row.
inline mpz_class laplace_det(std::vector<std::vector<mpz_class>> const& m) {
  std::size_t const n = m.size();
  if (n == 0) {
    return 1;
  }
  if (n == 1) {
    return m[0][0];
  }
  mpz_class det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) {
      continue;
    }
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) {
          row.push_back(m[i][k]);
        }
      }
      minor.push_back(std::move(row));
    }
    mpz_class const term = m[0][j] * laplace_det(minor);
    det += (j % 2 == 0) ? term : mpz_class(-term);
  }
  return det;
}

inline mpz_class laplace_det(hloc::IntMatrix const& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      rows[i][j] = m(i, j);
    }
  }
  return laplace_det(rows);
}

inline void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// k-th determinantal divisor: gcd of all k x k minors.
inline mpz_class determinantal_divisor(hloc::IntMatrix const& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> row_sets;
  std::vector<std::vector<std::size_t>> col_sets;
  std::vector<std::size_t> cur;
  choose(m.rows(), k, 0, cur, row_sets);
  choose(m.cols(), k, 0, cur, col_sets);
  mpz_class g = 0;
  for (auto const& rs : row_sets) {
    for (auto const& cs : col_sets) {
      std::vector<std::vector<mpz_class>> sub(k, std::vector<mpz_class>(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          sub[i][j] = m(rs[i], cs[j]);
        }
      }
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(laplace_det(sub)).get_mpz_t());
    }
  }
  return g;
}

inline hloc::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                     long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  std::bernoulli_distribution sparse(0.3);
  hloc::IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = sparse(rng) ? 0 : entry(rng);
    }
  }
  return m;
}

// Reduced fraction a/p^k mod 1 as a rational in [0, 1).
inline mpq_class prufer_rational(mpz_class a, unsigned k, unsigned long p) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), p, k);
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), den.get_mpz_t());
  mpq_class q(r, den);
  q.canonicalize();
  return q;
}

inline mpq_class mod_one(mpq_class q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  q -= fl;
  q.canonicalize();
  return q;
}

}  // namespace oracle
