#pragma once
// Independent normal-form oracle: rewrites words in E, F, K, k = K^{-1}
// one adjacent pair at a time using only the defining relations.

#include <map>
#include <random>
#include <string>

#include "qgraph/uqsl2.hpp"

namespace oracle {

using qgraph::RatFunc;

inline std::map<std::string, RatFunc> normalize_word(const std::string& w) {
  const RatFunc inv = (RatFunc::q(1) - RatFunc::q(-1)).inverse();
  std::map<std::string, RatFunc> todo{{w, RatFunc(1)}}, done;
  while (!todo.empty()) {
    auto [word, c] = *todo.begin();
    todo.erase(todo.begin());
    size_t i = 0;
    std::string pair;
    for (; i + 1 < word.size(); ++i) {
      pair = word.substr(i, 2);
      if (pair == "EF" || pair == "EK" || pair == "Ek" || pair == "KF" || pair == "kF" || pair == "Kk" ||
          pair == "kK")
        break;
    }
    auto add = [](std::map<std::string, RatFunc>& m, const std::string& k, const RatFunc& v) {
      RatFunc& t = m[k];
      t += v;
      if (t.is_zero()) m.erase(k);
    };
    if (i + 1 >= word.size()) {
      add(done, word, c);
      continue;
    }
    std::string pre = word.substr(0, i), post = word.substr(i + 2);
    if (pair == "EF") {
      add(todo, pre + "FE" + post, c);
      add(todo, pre + "K" + post, c * inv);
      add(todo, pre + "k" + post, -(c * inv));
    } else if (pair == "EK") {
      add(todo, pre + "KE" + post, c * RatFunc::q(-2));
    } else if (pair == "Ek") {
      add(todo, pre + "kE" + post, c * RatFunc::q(2));
    } else if (pair == "KF") {
      add(todo, pre + "FK" + post, c * RatFunc::q(-2));
    } else if (pair == "kF") {
      add(todo, pre + "Fk" + post, c * RatFunc::q(2));
    } else {
      add(todo, pre + post, c);
    }
  }
  return done;
}

inline qgraph::Elem<RatFunc> word_to_elem(const std::string& w) {
  const auto& A = qgraph::generic_alg();
  qgraph::Elem<RatFunc> r(A, 1);
  for (auto& [word, c] : normalize_word(w)) {
    qgraph::Mono m;
    for (char ch : word) {
      if (ch == 'F') ++m.a;
      if (ch == 'K') ++m.b;
      if (ch == 'k') --m.b;
      if (ch == 'E') ++m.c;
    }
    r += qgraph::Elem<RatFunc>::mono(A, 1, 0, m, c);
  }
  return r;
}

inline std::string random_word(std::mt19937& rng, int maxlen) {
  static const char letters[] = "EFKk";
  std::uniform_int_distribution<int> len(0, maxlen), pick(0, 3);
  std::string w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) w += letters[pick(rng)];
  return w;
}

}  // namespace oracle
