#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "qgraph/uqsl2.hpp"
#include "support/word_oracle.hpp"

using namespace qgraph;
using El = Elem<RatFunc>;

namespace {

const UAlg<RatFunc>& A() { return generic_alg(); }
El E() { return El::E(A()); }
El F() { return El::F(A()); }
El K(int p = 1) { return El::K(A(), 1, 0, p); }
El sc(const RatFunc& c, int n = 1) { return El::scalar(A(), n, c); }
RatFunc q(int k) { return RatFunc::q(k); }
RatFunc qd() { return q(1) - q(-1); }

El word_product(const std::string& w) {
  El r = El::one(A(), 1);
  for (char ch : w) {
    if (ch == 'E') r *= E();
    if (ch == 'F') r *= F();
    if (ch == 'K') r *= K(1);
    if (ch == 'k') r *= K(-1);
  }
  return r;
}

El random_elem(std::mt19937& rng, int maxlen = 4) {
  std::uniform_int_distribution<int> co(-3, 3), ex(-2, 2);
  El r(A(), 1);
  for (int t = 0; t < 3; ++t)
    r += word_product(oracle::random_word(rng, maxlen)) * RatFunc(LaurentPoly::monomial(co(rng), ex(rng)));
  return r;
}

}  // namespace

TEST(NormalForm, DefiningRelations) {
  EXPECT_EQ(E() * F(), F() * E() + (K(1) - K(-1)) * qd().inverse());
  EXPECT_EQ(K(1) * E() * K(-1), E() * q(2));
  EXPECT_EQ(K(1) * F() * K(-1), F() * q(-2));
  EXPECT_EQ(K(1) * K(-1), El::one(A(), 1));
}

TEST(NormalForm, StraighteningAgainstRewritingOracle) {
  // E F^2 - F^2 E = [2] F (K q^{-1} - K^{-1} q)/(q - q^{-1})
  El lhs = E() * F() * F() - F() * F() * E();
  El rhs = F() * (K(1) * q(-1) - K(-1) * q(1)) * (A().qint(2) / qd());
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(lhs, oracle::word_to_elem("EFF") - oracle::word_to_elem("FFE"));
  for (int c = 0; c <= 4; ++c)
    for (int a = 0; a <= 4; ++a) {
      std::string w = std::string(c, 'E') + std::string(a, 'F');
      EXPECT_EQ(word_product(w), oracle::word_to_elem(w)) << w;
    }
}

TEST(NormalForm, RandomWordsAgainstOracle) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 80; ++trial) {
    std::string w = oracle::random_word(rng, 7);
    EXPECT_EQ(word_product(w), oracle::word_to_elem(w)) << w;
  }
}

TEST(NormalForm, AssociativeOnRandomTriples) {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 25; ++trial) {
    El a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(NormalForm, MemoTableIsTransparentUnderConcurrency) {
  // A fresh algebra instance fills its own table from several threads.
  UAlg<RatFunc> fresh([](long k) { return RatFunc::v(static_cast<int>(k)); }, "fresh");
  std::vector<std::vector<std::pair<int, int>>> jobs(4);
  for (int c = 0; c < 7; ++c)
    for (int a = 0; a < 7; ++a) jobs[(c + a) % 4].push_back({c, a});
  std::vector<std::thread> pool;
  for (auto& job : jobs)
    pool.emplace_back([&fresh, &job] {
      for (auto [c, a] : job) (void)fresh.straighten(c, a);
    });
  for (auto& t : pool) t.join();
  for (int c = 0; c < 7; ++c)
    for (int a = 0; a < 7; ++a) {
      const auto& x = fresh.straighten(c, a);
      const auto& y = A().straighten(c, a);
      ASSERT_EQ(x.size(), y.size());
      for (size_t k = 0; k < x.size(); ++k) {
        EXPECT_EQ(x[k].j, y[k].j);
        EXPECT_EQ(x[k].m, y[k].m);
        EXPECT_EQ(x[k].coef, y[k].coef);
      }
    }
}

TEST(Hopf, GeneratorValues) {
  EXPECT_EQ(coproduct(E()), El::mono(A(), 2, 0, {0, 0, 1}) * El::mono(A(), 2, 1, {0, 1, 0}) +
                                El::mono(A(), 2, 1, {0, 0, 1}));
  EXPECT_EQ(coproduct(F()), El::mono(A(), 2, 0, {1, 0, 0}) +
                                El::mono(A(), 2, 0, {0, -1, 0}) * El::mono(A(), 2, 1, {1, 0, 0}));
  EXPECT_EQ(antipode(K(1)), K(-1));
  EXPECT_EQ(antipode(E()), -(E() * K(-1)));
  EXPECT_EQ(antipode(F()), -(K(1) * F()));
  EXPECT_EQ(counit(K(1)), RatFunc(1));
  EXPECT_EQ(counit(E()), RatFunc(0));
}

TEST(Hopf, CoassociativityOnGenerators) {
  for (const El& g : {E(), F(), K(1), K(-1)}) {
    El d = coproduct(g);
    El left = apply_hom<RatFunc>(d, 3, [](int s, Gen x) {
      El gen = x == Gen::E ? E() : x == Gen::F ? F() : x == Gen::K ? K(1) : K(-1);
      return s == 0 ? embed(coproduct(gen), 3, {0, 1}) : embed(gen, 3, {2});
    });
    El right = apply_hom<RatFunc>(d, 3, [](int s, Gen x) {
      El gen = x == Gen::E ? E() : x == Gen::F ? F() : x == Gen::K ? K(1) : K(-1);
      return s == 0 ? embed(gen, 3, {0}) : embed(coproduct(gen), 3, {1, 2});
    });
    EXPECT_EQ(left, right);
    EXPECT_EQ(left, coproduct_iter(g, 3));
  }
}

TEST(Hopf, AntipodeAxiomAndMorphismProperty) {
  std::mt19937 rng(23);
  auto m_S_id = [](const El& u) {
    El d = coproduct(u);
    El r(A(), 1);
    for (const auto& [k, c] : d.terms()) {
      El left = antipode(El::mono(A(), 1, 0, k.m[0]));
      r += left * El::mono(A(), 1, 0, k.m[1], c);
    }
    return r;
  };
  for (const El& g : {E(), F(), K(1)}) EXPECT_EQ(m_S_id(g), sc(counit(g)));
  for (int trial = 0; trial < 15; ++trial) {
    El a = random_elem(rng, 3), b = random_elem(rng, 3);
    EXPECT_EQ(coproduct(a * b), coproduct(a) * coproduct(b));
    EXPECT_EQ(antipode(a * b), antipode(b) * antipode(a));
    EXPECT_EQ(counit(a * b), counit(a) * counit(b));
    EXPECT_EQ(m_S_id(a), sc(counit(a)));
  }
}

TEST(Casimir, CentralWithKnownCounit) {
  El Om = casimir(A());
  EXPECT_TRUE(commutator(Om, E()).is_zero());
  EXPECT_TRUE(commutator(Om, F()).is_zero());
  EXPECT_TRUE(commutator(Om, K(1)).is_zero());
  EXPECT_EQ(counit(Om), q(1) + q(-1));
}

TEST(Verma, Examples) {
  const int N = 10;
  VermaVec ev0 = verma_action(E(), 0, N);
  for (auto& w : ev0) EXPECT_TRUE(w.empty());
  El Om = casimir(A());
  for (int n = 0; n <= 4; ++n) {
    VermaVec r = verma_action(Om, n, N);
    WeightPoly expect{{1, q(1)}, {-1, q(-1)}};
    for (int j = 0; j <= N; ++j) EXPECT_EQ(r[j], j == n ? expect : WeightPoly{}) << n;
  }
  VermaVec r = verma_action(E() * F() - F() * E(), 1, N);
  WeightPoly expect{{1, q(-2) / qd()}, {-1, -(q(2) / qd())}};
  EXPECT_EQ(r[1], expect);
  EXPECT_THROW(verma_action(F().pow(3), 9, N), TruncationExceeded);
}

TEST(Verma, ActionIsMultiplicativeOnRandomPairs) {
  std::mt19937 rng(24);
  std::uniform_int_distribution<int> idx(0, 4);
  const int N = 10;
  for (int trial = 0; trial < 100; ++trial) {
    El a = random_elem(rng, 2), b = random_elem(rng, 2);
    int m = idx(rng);
    VermaVec v = verma_action(b, m, N);
    EXPECT_TRUE(verma_equal(verma_action(a * b, m, N), verma_apply(a, v))) << trial;
  }
}

TEST(Grammar, RoundTrip) {
  std::mt19937 rng(25);
  for (int trial = 0; trial < 20; ++trial) {
    El a = random_elem(rng);
    if (a.is_zero()) continue;
    EXPECT_EQ(El::parse(A(), a.str()), a) << a.str();
    El t = coproduct(a);
    EXPECT_EQ(El::parse(A(), t.str()), t);
    auto s = specialize_elem(t, 3);
    if (!s.is_zero()) EXPECT_EQ(Elem<Cyclotomic>::parse(root_alg(3), s.str()), s);
  }
  El x = El::parse(A(), "(1*v^2 + -1*v^-2) * F^1 K^0 E^1 + F^0 K^-1 E^0");
  EXPECT_EQ(x, F() * E() * qd() + K(-1));
}

TEST(Specialization, Examples) {
  const int l = 3;
  const auto& B = root_alg(l);
  const CycloField& Fd = CycloField::get(l);
  Cyclotomic eps = Fd.epsilon();
  using Ec = Elem<Cyclotomic>;
  Ec Om = Ec::mono(B, 1, 0, {0, 1, 0}, eps) + Ec::mono(B, 1, 0, {0, -1, 0}, eps.inverse()) +
          Ec::mono(B, 1, 0, {1, 0, 1}, (eps - eps.inverse()).pow(2));
  EXPECT_EQ(specialize_elem(casimir(A()), l), Om);
  EXPECT_EQ(specialize_elem((E() * F() - F() * E()) * qd(), l), Ec::K(B, 1, 0, 1) - Ec::K(B, 1, 0, -1));
  El bad = E() * RatFunc(LaurentPoly(1), LaurentPoly::q(l) - LaurentPoly::q(-l));
  EXPECT_THROW(specialize_elem(bad, l), PoleAtSpecialization);
  // specialization is multiplicative on products of random elements
  std::mt19937 rng(26);
  for (int trial = 0; trial < 10; ++trial) {
    El a = random_elem(rng, 3), b = random_elem(rng, 3);
    EXPECT_EQ(specialize_elem(a * b, l), specialize_elem(a, l) * specialize_elem(b, l));
  }
}
