#include "hlya/corpus.hpp"

#include <random>
#include <set>
#include <utility>

#include "hlya/axioms.hpp"
#include "hlya/linalg.hpp"

namespace hlya {

CorpusResult sample_corpus(std::uint32_t p, std::size_t dim, std::size_t count,
                           std::uint64_t seed) {
  Fp::Field f{p};
  std::mt19937_64 eng(seed);

  /* Dense random tables essentially never satisfy the compatibility
     identities, so candidates get at most two nonzero binary and two nonzero
     ternary slots, sparse values, and an identity twist half of the time. */
  auto sparse_vec = [&]() {
    Vec<Fp> v;
    v.reserve(dim);
    for (std::size_t c = 0; c < dim; ++c) {
      if (eng() % 4 != 0) {
        v.push_back(Fp::zero(f));
      } else {
        std::uint64_t r = eng();
        v.push_back(Fp::from_int(f, static_cast<long>(1 + r % (p - 1))));
      }
    }
    return v;
  };

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) pairs.emplace_back(i, j);

  CorpusResult out;
  const std::size_t cap = std::max<std::size_t>(count * 10000, 50000);
  while (out.algebras.size() < count && out.attempts < cap) {
    ++out.attempts;
    AlgebraBuilder<Fp> builder(dim, f);
    if (!pairs.empty()) {
      std::set<std::size_t> used2;
      const std::size_t kb = eng() % 3;
      for (std::size_t s = 0; s < kb; ++s) {
        std::size_t pi = eng() % pairs.size();
        if (!used2.insert(pi).second) continue;
        builder.set_binary(pairs[pi].first, pairs[pi].second, sparse_vec());
      }
      std::set<std::pair<std::size_t, std::size_t>> used3;
      const std::size_t kt = eng() % 3;
      for (std::size_t s = 0; s < kt; ++s) {
        std::size_t pi = eng() % pairs.size();
        std::size_t k = eng() % dim;
        if (!used3.insert({pi, k}).second) continue;
        builder.set_ternary(pairs[pi].first, pairs[pi].second, k, sparse_vec());
      }
    }

    Matrix<Fp> tw = Matrix<Fp>::identity(dim, f);
    if (eng() % 2 == 0) {
      do {
        for (std::size_t r = 0; r < dim; ++r)
          for (std::size_t c = 0; c < dim; ++c)
            tw(r, c) = Fp(static_cast<std::uint32_t>(eng() % p), p);
      } while (!is_invertible(tw));
    }
    builder.set_twist(std::move(tw));

    Algebra<Fp> cand = builder.build();
    if (axioms_pass(cand)) out.algebras.push_back(std::move(cand));
  }
  return out;
}

std::vector<Algebra<Fp>> exhaustive_dim2(std::uint32_t p) {
  Fp::Field f{p};
  const std::size_t pp = p;

  /* Base-p decode of a vector in F_p^2, least significant entry first. */
  auto decode_vec = [&](std::size_t idx) {
    Vec<Fp> v;
    v.push_back(Fp(static_cast<std::uint32_t>(idx % pp), p));
    v.push_back(Fp(static_cast<std::uint32_t>((idx / pp) % pp), p));
    return v;
  };

  std::vector<Matrix<Fp>> twists;
  for (std::size_t idx = 0; idx < pp * pp * pp * pp; ++idx) {
    Matrix<Fp> tw(2, 2, f);
    std::size_t rest = idx;
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        tw(r, c) = Fp(static_cast<std::uint32_t>(rest % pp), p);
        rest /= pp;
      }
    if (is_invertible(tw)) twists.push_back(std::move(tw));
  }

  std::vector<Algebra<Fp>> out;
  const std::size_t nvec = pp * pp;
  for (std::size_t b01 = 0; b01 < nvec; ++b01)
    for (std::size_t t010 = 0; t010 < nvec; ++t010)
      for (std::size_t t011 = 0; t011 < nvec; ++t011)
        for (const auto& tw : twists) {
          AlgebraBuilder<Fp> builder(2, f);
          builder.set_binary(0, 1, decode_vec(b01));
          builder.set_ternary(0, 1, 0, decode_vec(t010));
          builder.set_ternary(0, 1, 1, decode_vec(t011));
          builder.set_twist(tw);
          Algebra<Fp> cand = builder.build();
          if (axioms_pass(cand)) out.push_back(std::move(cand));
        }
  return out;
}

}  // namespace hlya
