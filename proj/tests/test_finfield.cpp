// Copyright 2026 The Charshift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "charshift/finfield.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <complex>
#include <vector>

#include "charshift/numtheory.hpp"

using namespace charshift;
using namespace charshift::finfield;

namespace {

// All prime powers q = p^r in [lo, hi].
std::vector<std::pair<std::int64_t, int>> prime_powers(std::int64_t lo,
                                                       std::int64_t hi) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t q = lo; q <= hi; ++q) {
    const auto f = numtheory::factorize(q).factors;
    if (f.size() == 1) out.emplace_back(f[0].first, f[0].second);
  }
  return out;
}

}  // namespace

TEST_CASE("field_make deterministic construction") {
  const auto f7 = field_make(7, 1);
  CHECK(f7->q() == 7);
  CHECK(f7->modulus() == std::vector<std::int64_t>{0, 1});  // X itself
  CHECK(f7->generator().index == 3);  // smallest generator of F_7*

  const auto f4 = field_make(2, 2);
  CHECK(f4->modulus() == std::vector<std::int64_t>{1, 1, 1});  // X^2+X+1

  const auto f9 = field_make(3, 2);
  CHECK(f9->q() == 9);
  CHECK(f9->modulus() == std::vector<std::int64_t>{1, 0, 1});  // X^2+1

  CHECK_THROWS_AS(field_make(4, 1), std::domain_error);
  CHECK_THROWS_AS(field_make(2, 17), capacity_error);
}

TEST_CASE("field arithmetic in F_4 and F_7") {
  const auto f4 = field_make(2, 2);
  const FieldElement omega = f4->element(2);  // the class of X
  CHECK(f4->mul(omega, omega) == f4->element(3));  // X^2 = X+1

  const auto f7 = field_make(7, 1);
  for (std::int64_t a = 0; a < 7; ++a)
    CHECK(f7->add(f7->element(a), f7->zero()) == f7->element(a));
  CHECK(f7->inv(f7->element(3)) == f7->element(5));
  CHECK_THROWS_AS(f7->inv(f7->zero()), std::domain_error);
}

TEST_CASE("field axioms hold exhaustively in small fields") {
  for (const auto& [p, r] : {std::pair<std::int64_t, int>{2, 3},
                             {3, 2},
                             {5, 1},
                             {7, 1},
                             {2, 4}}) {
    const auto F = field_make(p, r);
    const std::int64_t q = F->q();
    for (std::int64_t a = 0; a < q; ++a) {
      const auto ea = F->element(a);
      CHECK(F->add(ea, F->neg(ea)) == F->zero());
      if (a != 0) CHECK(F->mul(ea, F->inv(ea)) == F->one());
      for (std::int64_t b = 0; b < q; ++b) {
        const auto eb = F->element(b);
        CHECK(F->add(ea, eb) == F->add(eb, ea));
        CHECK(F->mul(ea, eb) == F->mul(eb, ea));
        // Distributivity against a fixed third element.
        const auto ec = F->element((a + 2 * b + 1) % q);
        CHECK(F->mul(ea, F->add(eb, ec)) ==
              F->add(F->mul(ea, eb), F->mul(ea, ec)));
      }
    }
  }
}

TEST_CASE("trace values and linearity") {
  const auto f4 = field_make(2, 2);
  CHECK(f4->trace(f4->element(2)) == 1);  // Tr(w) = w + w^2 = 1
  CHECK(f4->trace(f4->zero()) == 0);

  const auto f9 = field_make(3, 2);
  CHECK(f9->trace(f9->one()) == 2);  // 1 + 1^3

  for (const auto& [p, r] : prime_powers(2, 64)) {
    const auto F = field_make(p, r);
    for (std::int64_t a = 0; a < F->q(); ++a) {
      // Definition check: trace equals the Frobenius power sum.
      FieldElement frob = F->element(a);
      FieldElement acc = frob;
      for (int j = 1; j < r; ++j) {
        frob = F->pow(frob, p);
        acc = F->add(acc, frob);
      }
      CHECK(acc.index < static_cast<std::uint32_t>(p));  // prime subfield
      CHECK(F->trace(F->element(a)) == static_cast<std::int64_t>(acc.index));
      for (std::int64_t b = 0; b < F->q(); ++b) {
        const auto ta = F->trace(F->element(a));
        const auto tb = F->trace(F->element(b));
        const auto tsum = F->trace(F->add(F->element(a), F->element(b)));
        CHECK(tsum == (ta + tb) % p);
      }
    }
  }
}

TEST_CASE("discrete log") {
  const auto f7 = field_make(7, 1);
  CHECK(f7->dlog(f7->generator()) == 1);
  CHECK(f7->dlog(f7->one()) == 0);
  CHECK(f7->dlog(f7->element(6)) == 3);  // 3^3 = 27 = 6 mod 7
  CHECK_THROWS_AS(f7->dlog(f7->zero()), std::domain_error);
}

TEST_CASE("dlog round trip in larger fields") {
  for (const auto& [p, r] : {std::pair<std::int64_t, int>{4093, 1},
                             {2, 12},
                             {7, 4},
                             {3, 6}}) {
    const auto F = field_make(p, r);
    for (std::int64_t a = 1; a < F->q(); ++a) {
      const auto ea = F->element(a);
      CHECK(F->pow(F->generator(), F->dlog(ea)) == ea);
    }
  }
}

TEST_CASE("multiplicative character values") {
  const auto f7 = field_make(7, 1);
  const MultCharFF leg(f7, 3);  // k = (q-1)/2: the quadratic character
  CHECK(leg.value(f7->element(3)) == CharValue::minus_one());
  CHECK(leg.value(f7->one()) == CharValue::one());
  CHECK(leg.value(f7->zero()) == CharValue::zero());
  CHECK_THROWS_AS(MultCharFF(f7, 6), std::domain_error);
}

TEST_CASE("multiplicativity of every character, q <= 64") {
  for (const auto& [p, r] : prime_powers(2, 64)) {
    const auto F = field_make(p, r);
    const std::int64_t q = F->q();
    for (std::int64_t k = 0; k < q - 1; ++k) {
      const MultCharFF chi(F, k);
      for (std::int64_t a = 0; a < q; ++a)
        for (std::int64_t b = 0; b < q; ++b)
          CHECK(chi.value(F->mul(F->element(a), F->element(b))) ==
                chi.value(F->element(a)) * chi.value(F->element(b)));
    }
  }
}

TEST_CASE("additive characters: values and additivity, q <= 64") {
  const auto f7 = field_make(7, 1);
  CHECK(additive_char_value(*f7, f7->element(1), f7->element(3)) ==
        CharValue::root(3, 7));
  const auto f4 = field_make(2, 2);
  CHECK(additive_char_value(*f4, f4->element(2), f4->element(2)) ==
        CharValue::minus_one());

  for (const auto& [p, r] : prime_powers(2, 64)) {
    const auto F = field_make(p, r);
    const std::int64_t q = F->q();
    for (std::int64_t y = 0; y < q; ++y) {
      const auto ey = F->element(y);
      if (y == 0) {
        for (std::int64_t x = 0; x < q; ++x)
          CHECK(additive_char_value(*F, ey, F->element(x)) ==
                CharValue::one());
        continue;
      }
      for (std::int64_t a = 0; a < q; ++a)
        for (std::int64_t b = 0; b < q; ++b)
          CHECK(additive_char_value(*F, ey,
                                    F->add(F->element(a), F->element(b))) ==
                additive_char_value(*F, ey, F->element(a)) *
                    additive_char_value(*F, ey, F->element(b)));
    }
  }
}

TEST_CASE("character orthogonality sums, q <= 64") {
  for (const auto& [p, r] : prime_powers(2, 64)) {
    const auto F = field_make(p, r);
    const std::int64_t q = F->q();
    for (std::int64_t y = 1; y < q; ++y) {
      std::complex<double> sum{0.0, 0.0};
      for (std::int64_t x = 0; x < q; ++x)
        sum += additive_char_value(*F, F->element(y), F->element(x))
                   .to_complex();
      CHECK(std::abs(sum) < 1e-9);
    }
    for (std::int64_t k = 1; k < q - 1; ++k) {
      const MultCharFF chi(F, k);
      std::complex<double> sum{0.0, 0.0};
      for (std::int64_t x = 1; x < q; ++x)
        sum += chi.value(F->element(x)).to_complex();
      CHECK(std::abs(sum) < 1e-9);
    }
  }
}

TEST_CASE("quadratic character agrees with the Legendre symbol, p <= 97") {
  for (std::int64_t p = 3; p <= 97; p += 2) {
    if (!numtheory::is_prime(p)) continue;
    const auto F = field_make(p, 1);
    const MultCharFF chi(F, (p - 1) / 2);
    for (std::int64_t x = 0; x < p; ++x) {
      const int sym = numtheory::legendre_symbol(x, p);
      const CharValue expected = sym == 0    ? CharValue::zero()
                                 : sym == 1  ? CharValue::one()
                                             : CharValue::minus_one();
      CHECK(chi.value(F->element(x)) == expected);
    }
  }
}
