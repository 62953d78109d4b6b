#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "hlya/algebra.hpp"
#include "hlya/linalg.hpp"
#include "hlya/parallel.hpp"
#include "hlya/scalars.hpp"

namespace hlya {

/* f is a linear map given as an (dim B × dim A) matrix over the common field.
   Returns a description of the first violated structure condition, or nullopt
   when f commutes with the twists and preserves both products. */
template <class K>
std::optional<std::string> homomorphism_defect(const Matrix<K>& f, const Algebra<K>& a,
                                               const Algebra<K>& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("morphism between different fields");
  if (f.rows() != b.dim() || f.cols() != a.dim())
    throw DimensionMismatch("morphism matrix shape");
  if (!(f * a.twist() == b.twist() * f)) return "does not intertwine the twists";
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec<K> lhs = mat_vec(f, a.binary(i, j));
      Vec<K> rhs = b.eval_binary(f.col(i), f.col(j));
      if (lhs != rhs)
        return "binary product not preserved at (" + std::to_string(i) + "," +
               std::to_string(j) + ")";
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec<K> lhs = mat_vec(f, a.ternary(i, j, k));
        Vec<K> rhs = b.eval_ternary(f.col(i), f.col(j), f.col(k));
        if (lhs != rhs)
          return "ternary product not preserved at (" + std::to_string(i) + "," +
                 std::to_string(j) + "," + std::to_string(k) + ")";
      }
  return std::nullopt;
}

template <class K>
bool is_homomorphism(const Matrix<K>& f, const Algebra<K>& a, const Algebra<K>& b) {
  return !homomorphism_defect(f, a, b).has_value();
}

template <class K>
std::optional<std::string> isomorphism_defect(const Matrix<K>& f, const Algebra<K>& a,
                                              const Algebra<K>& b) {
  if (a.dim() != b.dim()) return "dimensions differ";
  if (!is_invertible(f)) return "matrix is singular";
  return homomorphism_defect(f, a, b);
}

template <class K>
bool is_isomorphism(const Matrix<K>& f, const Algebra<K>& a, const Algebra<K>& b) {
  return !isomorphism_defect(f, a, b).has_value();
}

/* --- bounded exhaustive matrix search ------------------------------------ */

/* Candidate entries in ascending search order. Over a prime field this is the
   whole field, so a finished enumeration is a complete decision; over the
   rationals it is the integer window [-bound, bound] and a finished
   enumeration only rules out that window. */
template <class K>
struct DigitScheme {
  typename K::Field field;
  std::vector<K> digits;
  bool complete;  /* digits cover the whole field */
};

inline DigitScheme<Fp> entry_digits(Fp::Field f, long /*bound*/) {
  DigitScheme<Fp> ds{f, {}, true};
  for (std::uint32_t r = 0; r < f.p; ++r) ds.digits.emplace_back(r, f.p);
  return ds;
}

inline DigitScheme<Rational> entry_digits(Rational::Field f, long bound) {
  if (bound < 0) bound = 0;
  DigitScheme<Rational> ds{f, {}, false};
  for (long v = -bound; v <= bound; ++v) ds.digits.emplace_back(v);
  return ds;
}

inline std::size_t pow_clamped(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap;
    r *= base;
  }
  return r < cap ? r : cap;
}

/* Flat index -> matrix, row-major, most significant digit first: numeric
   index order equals lexicographic order on the entry sequence. */
template <class K>
Matrix<K> decode_matrix(std::size_t idx, std::size_t rows, std::size_t cols,
                        const DigitScheme<K>& ds) {
  const std::size_t cells = rows * cols;
  std::vector<std::size_t> dig(cells, 0);
  for (std::size_t c = cells; c-- > 0;) {
    dig[c] = idx % ds.digits.size();
    idx /= ds.digits.size();
  }
  Matrix<K> m(rows, cols, ds.field);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = ds.digits[dig[i * cols + j]];
  return m;
}

template <class K>
struct MatrixSearchResult {
  std::optional<Matrix<K>> found;
  std::size_t examined = 0;
  bool finished = false;  /* every candidate in the scheme was examined */
};

struct SearchOptions {
  std::size_t budget = 2'000'000;  /* max candidates examined */
  long bound = 2;                  /* rational entry window */
  unsigned threads = 0;
  std::size_t wave = 32768;        /* candidates per parallel wave */
};

/* Scans candidates in index order, wave by wave; inside a wave workers test
   disjoint blocks and the smallest accepted index wins, so the result is the
   lexicographically first accepted matrix regardless of thread count. */
template <class K, class Pred>
MatrixSearchResult<K> search_matrices(std::size_t rows, std::size_t cols,
                                      const DigitScheme<K>& ds, const SearchOptions& opts,
                                      Pred accept) {
  MatrixSearchResult<K> res;
  const std::size_t total = pow_clamped(ds.digits.size(), rows * cols,
                                        std::numeric_limits<std::size_t>::max());
  const std::size_t limit = total < opts.budget ? total : opts.budget;
  struct Acc {
    std::optional<std::size_t> hit;
  };
  std::size_t pos = 0;
  while (pos < limit) {
    const std::size_t end = pos + opts.wave < limit ? pos + opts.wave : limit;
    auto accs = parallel_blocks<Acc>(end - pos, opts.threads,
                                     [&](std::size_t lo, std::size_t hi, Acc& acc) {
                                       for (std::size_t k = lo; k < hi; ++k) {
                                         Matrix<K> cand =
                                             decode_matrix(pos + k, rows, cols, ds);
                                         if (accept(cand)) {
                                           acc.hit = pos + k;
                                           return;
                                         }
                                       }
                                     });
    for (const auto& a : accs)
      if (a.hit) {
        res.found = decode_matrix(*a.hit, rows, cols, ds);
        res.examined = *a.hit + 1;
        return res;
      }
    pos = end;
  }
  res.examined = limit;
  res.finished = limit == total;
  return res;
}

/* Exhaustive isomorphism search; over a prime field a finished enumeration
   decides the question, over the rationals it only covers integer matrices
   with entries in the window. */
template <class K>
MatrixSearchResult<K> search_isomorphism(const Algebra<K>& a, const Algebra<K>& b,
                                         const SearchOptions& opts = {}) {
  if (a.dim() != b.dim()) {
    MatrixSearchResult<K> res;
    res.finished = true;
    return res;
  }
  DigitScheme<K> ds = entry_digits(a.field(), opts.bound);
  return search_matrices<K>(a.dim(), a.dim(), ds, opts, [&](const Matrix<K>& f) {
    return is_isomorphism(f, a, b);
  });
}

}  // namespace hlya
