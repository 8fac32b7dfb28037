#include <doctest.h>

#include "freehopf/errors.hpp"
#include "freehopf/freealg.hpp"
#include "support.hpp"

using namespace testing;

namespace {

MatRep rep1(const Alphabet& a, std::initializer_list<std::pair<char, long>> values) {
  std::map<char, Matrix> assign;
  for (auto [x, v] : values) assign.emplace(x, mat({{v}}));
  return MatRep(a, 1, std::move(assign));
}

}  // namespace

TEST_CASE("MatRep validates its assignment") {
  Alphabet a = alpha("a:L,b:L");
  CHECK_THROWS_AS(MatRep(a, 1, {{'a', mat({{1}})}}), DomainError);
  CHECK_THROWS_AS(MatRep(a, 2, {{'a', mat({{1}})}, {'b', mat({{1}})}}), DomainError);
  CHECK_THROWS_AS(MatRep(a, 0, {}), DomainError);
}

TEST_CASE("eval_rep is the free extension") {
  Alphabet a = alpha("a:L");
  MatRep nil(a, 2, {{'a', mat({{0, 1}, {0, 0}})}});
  CHECK(eval_rep(nil, poly(a, "aa")) == Matrix(2, 2));
  CHECK(eval_rep(nil, unit_poly(a)) == Matrix::identity(2));
  CHECK(eval_rep(rep1(a, {{'a', 2}}), poly(a, "3*a + 1")) == mat({{7}}));
  CHECK_THROWS_AS(eval_rep(nil, poly(alpha("b:L"), "b")), DomainError);
}

TEST_CASE("direct_sum is block diagonal") {
  Alphabet a = alpha("a:L,b:L");
  MatRep r1 = rep1(a, {{'a', 2}, {'b', 5}});
  MatRep r2 = rep1(a, {{'a', 3}, {'b', -1}});
  MatRep s = direct_sum(r1, r2);
  CHECK(s.dim() == 2);
  CHECK(s['a'] == mat({{2, 0}, {0, 3}}));
  CHECK(eval_rep(s, word(a, "ab")) == block_diag(eval_rep(r1, word(a, "ab")), eval_rep(r2, word(a, "ab"))));

  Gen gen(3);
  MatRep big = direct_sum(gen.any_rep(a, 2), gen.any_rep(a, 1));
  for (const auto& w : words_up_to(a, 3)) {
    Matrix m = eval_rep(big, w);
    CHECK(m(0, 2) == 0);
    CHECK(m(1, 2) == 0);
    CHECK(m(2, 0) == 0);
    CHECK(m(2, 1) == 0);
  }
  CHECK_THROWS_AS(direct_sum(r1, rep1(alpha("a:L,b:G"), {{'a', 1}, {'b', 1}})), DomainError);
}

TEST_CASE("direct_sum commutes with evaluation") {
  Alphabet a = alpha("a:L,g:G");
  Gen gen(17);
  for (int i = 0; i < 40; ++i) {
    MatRep r1 = gen.any_rep(a, 2), r2 = gen.any_rep(a, 2);
    NCPoly p = gen.any_poly(a, 3, 3);
    CHECK(eval_rep(direct_sum(r1, r2), p) == block_diag(eval_rep(r1, p), eval_rep(r2, p)));
  }
}

TEST_CASE("tensor_rep follows the letter scheme") {
  Alphabet a = alpha("a:L,g:G");
  MatRep r1 = rep1(a, {{'a', 2}, {'g', 2}});
  MatRep r2 = rep1(a, {{'a', 3}, {'g', 3}});
  MatRep t = tensor_rep(r1, r2);
  CHECK(t['a'] == mat({{5}}));
  CHECK(t['g'] == mat({{6}}));

  Gen gen(23);
  MatRep r = gen.any_rep(a, 2);
  MatRep triv = trivial_rep(a);
  CHECK(tensor_rep(r, triv)['a'] == r['a']);
  CHECK(tensor_rep(r, triv)['g'] == r['g']);
  CHECK(tensor_rep(triv, r)['a'] == r['a']);
  CHECK(tensor_rep(triv, r)['g'] == r['g']);
}

TEST_CASE("tensor_rep is strictly associative with unit") {
  Alphabet a = alpha("a:L,b:L,g:G");
  Gen gen(31);
  for (int trial = 0; trial < 10; ++trial) {
    MatRep r1 = gen.any_rep(a, static_cast<std::size_t>(gen.integer(1, 2)));
    MatRep r2 = gen.any_rep(a, static_cast<std::size_t>(gen.integer(1, 2)));
    MatRep r3 = gen.any_rep(a, static_cast<std::size_t>(gen.integer(1, 2)));
    MatRep left = tensor_rep(tensor_rep(r1, r2), r3);
    MatRep right = tensor_rep(r1, tensor_rep(r2, r3));
    MatRep triv = trivial_rep(a);
    MatRep t12 = tensor_rep(r1, r2);
    for (const auto& w : words_up_to(a, 3)) {
      CHECK(eval_rep(left, w) == eval_rep(right, w));
      CHECK(eval_rep(tensor_rep(r1, triv), w) == eval_rep(r1, w));
      CHECK(eval_rep(tensor_rep(triv, r1), w) == eval_rep(r1, w));
    }
    for (const auto& u : words_up_to(a, 2))
      for (const auto& v : words_up_to(a, 2))
        CHECK(eval_rep(t12, conc(u, v)) == eval_rep(t12, u) * eval_rep(t12, v));
  }
}

TEST_CASE("tensor action matches the coproduct on words") {
  // ρ₁⊗ρ₂(w) = Σ ρ₁(w₍₁₎) ⊗ ρ₂(w₍₂₎), computed independently from Δ(w).
  Alphabet a = alpha("a:L,g:G");
  Gen gen(41);
  MatRep r1 = gen.any_rep(a, 2), r2 = gen.any_rep(a, 2);
  MatRep t = tensor_rep(r1, r2);
  for (const auto& w : words_up_to(a, 4)) {
    Matrix expected(4, 4);
    const Tensor2 delta = coproduct_word(w);
    for (const auto& [key, c] : delta.terms())
      expected += kron(eval_rep(r1, Word(a, key[0])), eval_rep(r2, Word(a, key[1]))).scaled(c);
    CHECK(eval_rep(t, w) == expected);
  }
}

TEST_CASE("trivial_rep is the counit") {
  Alphabet a = alpha("a:L,g:G");
  MatRep triv = trivial_rep(a);
  CHECK(triv['g'] == mat({{1}}));
  CHECK(triv['a'] == mat({{0}}));
  CHECK(eval_rep(triv, word(a, "ga")) == mat({{0}}));
  Gen gen(1);
  for (int i = 0; i < 30; ++i) {
    NCPoly p = gen.any_poly(a, 4, 3);
    Matrix expected(1, 1);
    expected(0, 0) = counit(p);
    CHECK(eval_rep(triv, p) == expected);
  }
}

TEST_CASE("dual_action") {
  Alphabet a = alpha("a:L,b:L");
  MatRep r = rep1(a, {{'a', 2}, {'b', 3}});
  DualVector psi({1});
  CHECK(dual_action(r, poly(a, "a"), psi) == DualVector({-2}));
  CHECK(dual_action(r, unit_poly(a), DualVector({5})) == DualVector({5}));
  CHECK(dual_action(r, poly(a, "ab"), DualVector({Rational(1, 3)})) == DualVector({2}));
  CHECK_THROWS_AS(dual_action(r, poly(a, "a"), DualVector({1, 2})), DomainError);
  MatRep mixed = rep1(alpha("a:L,g:G"), {{'a', 1}, {'g', 1}});
  CHECK_THROWS_AS(dual_action(mixed, poly(alpha("a:L,g:G"), "a"), psi), DomainError);
}

TEST_CASE("pairing invariance examples") {
  Alphabet a = alpha("a:L,b:L");
  MatRep r(a, 2, {{'a', mat({{0, 1}, {0, 0}})}, {'b', mat({{0, 0}, {1, 0}})}});
  DualVector psi({1, 0});
  Matrix x = column({0, 1});
  auto [l1, r1] = pairing_invariance_check(r, poly(a, "a"), psi, x);
  CHECK(l1 == 0);
  CHECK(r1 == 0);
  auto [l2, r2] = pairing_invariance_check(r, unit_poly(a), psi, x);
  CHECK(l2 == 0);  // ⟨ψ, x⟩ = 0 here
  CHECK(l2 == r2);
  auto [l3, r3] = pairing_invariance_check(r, poly(a, "ab"), psi, x);
  CHECK(l3 == r3);
  CHECK(r3 == 0);
  auto [l4, r4] = pairing_invariance_check(r, unit_poly(a), DualVector({2, 3}), column({1, 1}));
  CHECK(l4 == 5);
  CHECK(r4 == 5);
  CHECK_THROWS_AS(pairing_invariance_check(r, poly(a, "a"), psi, column({1, 0, 0})), DomainError);
}

TEST_CASE("pairing invariance holds on random data") {
  for (const char* decl : {"a:L", "a:L,b:L"}) {
    Alphabet a = alpha(decl);
    Gen gen(77);
    for (int trial = 0; trial < 4; ++trial) {
      std::size_t n = static_cast<std::size_t>(gen.integer(1, 2));
      MatRep r = gen.any_rep(a, n);
      std::vector<Rational> psi(n);
      Matrix x(n, 1);
      for (std::size_t i = 0; i < n; ++i) {
        psi[i] = gen.integer(-2, 2);
        x(i, 0) = gen.integer(-2, 2);
      }
      for (const auto& w : words_up_to(a, 4)) {
        auto [lhs, rhs] = pairing_invariance_check(r, poly_of(w), DualVector(psi), x);
        CHECK(lhs == rhs);
      }
    }
  }
}
